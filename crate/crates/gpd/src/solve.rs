//! Exact and heuristic solvers for the general d-position number, plus the
//! companion invariants (dissociation, independence, and clique numbers).
//!
//! All exact solvers share one depth-first engine over subsets explored in
//! ascending vertex order. Feasibility is supplied by small oracle types:
//! the brute-force route checks the defining triple condition directly,
//! while branch and bound maintains the clique decomposition of the partial
//! set incrementally — two independent implementations that are tested
//! against each other.
//!
//! Results are canonical: among maximum witnesses the lexicographically
//! smallest is returned, and parallel runs reduce task results with the same
//! comparator, so the reported value and witness never depend on worker
//! count or scheduling. Node counts, in contrast, are only indicative.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Which algorithm produced a [`SolveReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    BranchAndBound,
    Greedy,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::BruteForce => "bruteforce",
            Method::BranchAndBound => "branch_and_bound",
            Method::Greedy => "greedy",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Caps and execution knobs shared by every solver.
///
/// `workers` selects the search parallelism: `1` forces the sequential
/// path, `0` uses all threads of the ambient rayon pool, any other value
/// builds a dedicated pool of that size. Without the `parallel` feature the
/// sequential path always runs.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Largest vertex count accepted by [`gpd_bruteforce`].
    pub bruteforce_cap: usize,
    /// Largest vertex count accepted by the branch-and-bound solvers.
    pub bnb_cap: usize,
    pub workers: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            bruteforce_cap: 24,
            bnb_cap: 40,
            workers: 0,
            time_limit: None,
        }
    }
}

impl SolveOptions {
    /// Sequential run with default caps; handy in tests.
    pub fn sequential() -> SolveOptions {
        SolveOptions {
            workers: 1,
            ..SolveOptions::default()
        }
    }
}

/// Outcome of one solver invocation.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub value: usize,
    /// A set attaining `value`; the lexicographically smallest one for the
    /// exact methods.
    pub witness: VertexSet,
    pub method: Method,
    /// Search-tree nodes visited. Indicative only: parallel runs may count
    /// differently between invocations.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

// ---------------------------------------------------------------------------
// Feasibility oracles
// ---------------------------------------------------------------------------

/// Incremental membership test for one family of "downward closed" vertex
/// sets: every subset of a feasible set is feasible. The engine relies on
/// that closure to prune a branch the moment a violation appears.
trait SubsetOracle {
    /// Would the current set stay feasible with `v` added? May use internal
    /// scratch space, but must leave the semantic state unchanged.
    fn feasible(&mut self, v: Vertex) -> bool;
    /// Add `v` (caller guarantees feasibility).
    fn push(&mut self, v: Vertex);
    /// Remove the most recently pushed vertex, which the caller asserts
    /// is `v`.
    fn pop(&mut self, v: Vertex);
}

/// Definition route: a set is general k-position iff no triple puts one
/// member on a geodesic of length at most `k` between two others. Checking
/// a candidate only needs the triples it completes.
struct TripleOracle<'a> {
    dm: &'a DistanceMatrix,
    k: u16,
    members: Vec<Vertex>,
}

impl<'a> TripleOracle<'a> {
    fn new(dm: &'a DistanceMatrix, k: usize) -> Self {
        TripleOracle {
            dm,
            k: saturate(k),
            members: Vec::new(),
        }
    }
}

impl SubsetOracle for TripleOracle<'_> {
    fn feasible(&mut self, v: Vertex) -> bool {
        let dm = self.dm;
        for (i, &a) in self.members.iter().enumerate() {
            let dav = dm.dist(a, v);
            for &b in &self.members[i + 1..] {
                // v between a and b
                if dm.dist(a, b) <= self.k && dm.in_interval(a, v, b) {
                    return false;
                }
                // a between v and b
                if dm.dist(v, b) <= self.k && dm.in_interval(v, a, b) {
                    return false;
                }
                // b between a and v
                if dav <= self.k && dm.in_interval(a, b, v) {
                    return false;
                }
            }
        }
        true
    }

    fn push(&mut self, v: Vertex) {
        self.members.push(v);
    }

    fn pop(&mut self, v: Vertex) {
        let popped = self.members.pop();
        debug_assert_eq!(popped, Some(v));
    }
}

const NO_PART: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct PairInfo {
    dist: u16,
    parallel: bool,
}

enum UndoOp {
    NewPart,
    Extend { part: usize, saved: Vec<(usize, PairInfo)> },
}

/// Structural route (valid for k >= 2): maintains the clique decomposition
/// of the current set together with pairwise part distances and parallel
/// flags, so a candidate is accepted iff
///
/// 1. its neighbors inside the set are exactly one whole part (it extends
///    that clique) or none (it starts a new part),
/// 2. every changed part pair is parallel or at distance >= k, and
/// 3. no changed part triple has one part metrically between two others at
///    outer distance <= k.
///
/// Unchanged pairs and triples keep their validity, so each test costs
/// `O(deg(v) + |S| + parts^2)`.
struct PartsOracle<'a> {
    g: &'a Graph,
    dm: &'a DistanceMatrix,
    k: u16,
    part_of: Vec<u32>,
    parts: Vec<Vec<Vertex>>,
    /// Lower-triangular pair data: `pair[i][j]` for `j < i`.
    pair: Vec<Vec<PairInfo>>,
    trail: Vec<UndoOp>,
    /// Scratch: candidate distances/parallel flags to each existing part.
    scratch: Vec<PairInfo>,
}

impl<'a> PartsOracle<'a> {
    fn new(g: &'a Graph, dm: &'a DistanceMatrix, k: usize) -> Self {
        debug_assert!(k >= 2, "the structural route requires k >= 2");
        PartsOracle {
            g,
            dm,
            k: saturate(k),
            part_of: vec![NO_PART; g.n()],
            parts: Vec::new(),
            pair: Vec::new(),
            trail: Vec::new(),
            scratch: Vec::new(),
        }
    }

    /// The part whose clique `v` would extend, `None` for a fresh singleton,
    /// or `Err(())` when the merge cannot stay a disjoint union of cliques.
    fn classify(&self, v: Vertex) -> std::result::Result<Option<usize>, ()> {
        let mut touched: Option<usize> = None;
        let mut count = 0usize;
        for &w in self.g.neighbors(v) {
            let p = self.part_of[w as usize];
            if p == NO_PART {
                continue;
            }
            match touched {
                None => {
                    touched = Some(p as usize);
                    count = 1;
                }
                Some(q) if q == p as usize => count += 1,
                Some(_) => return Err(()), // touches two parts: merge is no clique
            }
        }
        if let Some(p) = touched {
            if count < self.parts[p].len() {
                return Err(()); // partial adjacency: merged part is no clique
            }
        }
        Ok(touched)
    }

    fn pair_at(&self, i: usize, j: usize) -> PairInfo {
        debug_assert_ne!(i, j);
        if i > j {
            self.pair[i][j]
        } else {
            self.pair[j][i]
        }
    }

    /// Distance from `v` to part `j`, with the all-pairs-equal flag.
    fn dist_to_part(&self, v: Vertex, j: usize) -> PairInfo {
        let mut dist = u16::MAX;
        let mut parallel = true;
        for &w in &self.parts[j] {
            let d = self.dm.dist(v, w);
            if d < dist {
                parallel = dist == u16::MAX;
                dist = d;
            } else if d > dist {
                parallel = false;
            }
        }
        PairInfo { dist, parallel }
    }

    /// Computes the changed pair row for "add `v`" and checks conditions
    /// 2 and 3. On success `scratch` holds the new row: entry `j` is the
    /// pair data between the changed/new part and part `j`.
    fn metric_ok(&mut self, v: Vertex, target: Option<usize>) -> bool {
        let ell = self.parts.len();
        let mut scratch = std::mem::take(&mut self.scratch);
        scratch.clear();
        for j in 0..ell {
            let to_v = self.dist_to_part(v, j);
            let entry = match target {
                None => to_v,
                Some(p) if p == j => PairInfo { dist: 0, parallel: true }, // unused
                Some(p) => {
                    let old = self.pair_at(p, j);
                    PairInfo {
                        dist: old.dist.min(to_v.dist),
                        parallel: old.parallel && to_v.parallel && to_v.dist == old.dist,
                    }
                }
            };
            scratch.push(entry);
        }
        let ok = self.conditions_hold(target, &scratch);
        self.scratch = scratch;
        ok
    }

    /// Conditions 2 and 3 for the pairs/triples involving the changed part,
    /// whose prospective row is `row` (entries indexed by part id).
    fn conditions_hold(&self, target: Option<usize>, row: &[PairInfo]) -> bool {
        let ell = self.parts.len();
        let skip = target.unwrap_or(ell);
        // Condition 2 on changed pairs.
        for j in 0..ell {
            if j == skip {
                continue;
            }
            if !row[j].parallel && row[j].dist < self.k {
                return false;
            }
        }
        // Condition 3 on triples {changed, i, j}, each part as the middle.
        for i in 0..ell {
            if i == skip {
                continue;
            }
            for j in i + 1..ell {
                if j == skip {
                    continue;
                }
                let dij = self.pair_at(j, i).dist;
                let (di, dj) = (row[i].dist, row[j].dist);
                // changed part in the middle
                if di + dj == dij && dij <= self.k {
                    return false;
                }
                // i in the middle
                if di + dij == dj && dj <= self.k {
                    return false;
                }
                // j in the middle
                if dj + dij == di && di <= self.k {
                    return false;
                }
            }
        }
        true
    }
}

impl SubsetOracle for PartsOracle<'_> {
    fn feasible(&mut self, v: Vertex) -> bool {
        match self.classify(v) {
            Err(()) => false,
            Ok(target) => self.metric_ok(v, target),
        }
    }

    fn push(&mut self, v: Vertex) {
        let target = self.classify(v).expect("push requires a feasible vertex");
        let ok = self.metric_ok(v, target);
        debug_assert!(ok, "push requires a feasible vertex");
        let ell = self.parts.len();
        match target {
            None => {
                self.part_of[v as usize] = ell as u32;
                self.parts.push(vec![v]);
                let row = self.scratch.clone();
                self.pair.push(row);
                self.trail.push(UndoOp::NewPart);
            }
            Some(p) => {
                let mut saved = Vec::with_capacity(ell - 1);
                for j in 0..ell {
                    if j == p {
                        continue;
                    }
                    saved.push((j, self.pair_at(p, j)));
                    let new = self.scratch[j];
                    if p > j {
                        self.pair[p][j] = new;
                    } else {
                        self.pair[j][p] = new;
                    }
                }
                self.part_of[v as usize] = p as u32;
                self.parts[p].push(v);
                self.trail.push(UndoOp::Extend { part: p, saved });
            }
        }
    }

    fn pop(&mut self, v: Vertex) {
        match self.trail.pop().expect("pop on empty trail") {
            UndoOp::NewPart => {
                let part = self.parts.pop().expect("no part to pop");
                debug_assert_eq!(part, vec![v]);
                self.pair.pop();
                self.part_of[v as usize] = NO_PART;
            }
            UndoOp::Extend { part, saved } => {
                let popped = self.parts[part].pop();
                debug_assert_eq!(popped, Some(v));
                self.part_of[v as usize] = NO_PART;
                for (j, info) in saved {
                    if part > j {
                        self.pair[part][j] = info;
                    } else {
                        self.pair[j][part] = info;
                    }
                }
            }
        }
    }
}

/// Sets inducing maximum degree at most one (dissociation sets).
struct DissociationOracle<'a> {
    g: &'a Graph,
    in_set: Vec<bool>,
    deg_in: Vec<u8>,
    members: Vec<Vertex>,
}

impl<'a> DissociationOracle<'a> {
    fn new(g: &'a Graph) -> Self {
        DissociationOracle {
            g,
            in_set: vec![false; g.n()],
            deg_in: vec![0; g.n()],
            members: Vec::new(),
        }
    }
}

impl SubsetOracle for DissociationOracle<'_> {
    fn feasible(&mut self, v: Vertex) -> bool {
        let mut inside = None;
        for &w in self.g.neighbors(v) {
            if self.in_set[w as usize] {
                if inside.is_some() {
                    return false; // v would have two set-neighbors
                }
                inside = Some(w);
            }
        }
        // v's lone set-neighbor must not already be matched
        inside.map_or(true, |w| self.deg_in[w as usize] == 0)
    }

    fn push(&mut self, v: Vertex) {
        let mut deg = 0;
        for &w in self.g.neighbors(v) {
            if self.in_set[w as usize] {
                self.deg_in[w as usize] += 1;
                deg += 1;
            }
        }
        self.in_set[v as usize] = true;
        self.deg_in[v as usize] = deg;
        self.members.push(v);
    }

    fn pop(&mut self, v: Vertex) {
        let popped = self.members.pop();
        debug_assert_eq!(popped, Some(v));
        self.in_set[v as usize] = false;
        self.deg_in[v as usize] = 0;
        for &w in self.g.neighbors(v) {
            if self.in_set[w as usize] {
                self.deg_in[w as usize] -= 1;
            }
        }
    }
}

/// Word-packed adjacency matrix for the clique oracle.
struct DenseAdj {
    words: usize,
    bits: Vec<u64>,
}

impl DenseAdj {
    fn new(g: &Graph) -> DenseAdj {
        let n = g.n();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for (u, v) in g.edges() {
            let (u, v) = (u as usize, v as usize);
            bits[u * words + v / 64] |= 1 << (v % 64);
            bits[v * words + u / 64] |= 1 << (u % 64);
        }
        DenseAdj { words, bits }
    }

    #[inline]
    fn get(&self, u: Vertex, v: Vertex) -> bool {
        let (u, v) = (u as usize, v as usize);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Complete induced subgraphs.
struct CliqueOracle<'a> {
    adj: &'a DenseAdj,
    members: Vec<Vertex>,
}

impl SubsetOracle for CliqueOracle<'_> {
    fn feasible(&mut self, v: Vertex) -> bool {
        self.members.iter().all(|&u| self.adj.get(u, v))
    }

    fn push(&mut self, v: Vertex) {
        self.members.push(v);
    }

    fn pop(&mut self, v: Vertex) {
        let popped = self.members.pop();
        debug_assert_eq!(popped, Some(v));
    }
}

// ---------------------------------------------------------------------------
// Search engine
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
enum SearchMode {
    /// Visit every feasible set (violation pruning only).
    Enumerate,
    /// Additionally prune branches that cannot strictly beat the incumbent:
    /// candidates are pre-filtered per node and `size + remaining` bounds
    /// the branch. Pruning is strict, so ties — and with them the
    /// lexicographically smallest maximum witness — always survive.
    Bound,
}

struct Outcome {
    value: usize,
    witness: Vec<Vertex>,
    nodes: u64,
}

/// `b` strictly better than `a` under the canonical order: larger value,
/// ties broken toward the lexicographically smaller witness.
fn better(a: &Outcome, b: &Outcome) -> bool {
    b.value > a.value || (b.value == a.value && b.witness < a.witness)
}

struct TaskState<'e> {
    shared: &'e AtomicUsize,
    deadline: Option<(Instant, Duration)>,
    nodes: u64,
    stack: Vec<Vertex>,
    best_value: usize,
    best_witness: Vec<Vertex>,
    /// Candidate buffers per depth (Bound mode only).
    bufs: Vec<Vec<Vertex>>,
}

impl<'e> TaskState<'e> {
    fn new(
        n: usize,
        mode: SearchMode,
        shared: &'e AtomicUsize,
        deadline: Option<(Instant, Duration)>,
    ) -> TaskState<'e> {
        TaskState {
            shared,
            deadline,
            nodes: 0,
            stack: Vec::with_capacity(n),
            best_value: 0,
            best_witness: Vec::new(),
            bufs: match mode {
                SearchMode::Enumerate => Vec::new(),
                SearchMode::Bound => vec![Vec::new(); n + 2],
            },
        }
    }

    fn visit(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some((at, limit)) = self.deadline {
            if self.nodes & 1023 == 0 && Instant::now() >= at {
                return Err(Error::TimeLimit(limit));
            }
        }
        Ok(())
    }

    fn record(&mut self) {
        let len = self.stack.len();
        if len > self.best_value {
            self.best_value = len;
            self.best_witness.clear();
            self.best_witness.extend_from_slice(&self.stack);
            self.shared.fetch_max(len, Ordering::Relaxed);
        } else if len == self.best_value && len > 0 && self.stack < self.best_witness {
            self.best_witness.clear();
            self.best_witness.extend_from_slice(&self.stack);
        }
    }

    fn dfs_enumerate<O: SubsetOracle>(&mut self, oracle: &mut O, n: usize, from: Vertex) -> Result<()> {
        self.visit()?;
        self.record();
        for v in from..n as Vertex {
            if oracle.feasible(v) {
                oracle.push(v);
                self.stack.push(v);
                self.dfs_enumerate(oracle, n, v + 1)?;
                self.stack.pop();
                oracle.pop(v);
            }
        }
        Ok(())
    }

    fn dfs_bounded<O: SubsetOracle>(&mut self, oracle: &mut O, depth: usize) -> Result<()> {
        self.visit()?;
        self.record();
        let len = self.bufs[depth].len();
        for i in 0..len {
            // Strict bound: branches that can only tie are still explored,
            // which keeps the canonical witness scheduling-independent.
            if self.stack.len() + (len - i) < self.shared.load(Ordering::Relaxed) {
                break;
            }
            let v = self.bufs[depth][i];
            oracle.push(v);
            self.stack.push(v);
            {
                let (head, tail) = self.bufs.split_at_mut(depth + 1);
                let child = &mut tail[0];
                child.clear();
                for idx in i + 1..len {
                    let w = head[depth][idx];
                    if oracle.feasible(w) {
                        child.push(w);
                    }
                }
            }
            self.dfs_bounded(oracle, depth + 1)?;
            self.stack.pop();
            oracle.pop(v);
        }
        Ok(())
    }

    fn into_outcome(self) -> Outcome {
        Outcome {
            value: self.best_value,
            witness: self.best_witness,
            nodes: self.nodes,
        }
    }
}

/// Explores all feasible subsets of `0..n` and returns the canonical best.
///
/// The search splits at the root by smallest member; each root task explores
/// its subtree in ascending vertex order and the task results fold with
/// [`better`]. `seed_value` primes the shared pruning threshold with a value
/// known to be achievable (Bound mode; pass 0 when unknown).
fn max_feasible_subset<O, F>(
    n: usize,
    mode: SearchMode,
    seed_value: usize,
    opts: &SolveOptions,
    make_oracle: F,
) -> Result<Outcome>
where
    O: SubsetOracle,
    F: Fn() -> O + Sync,
{
    let shared = AtomicUsize::new(seed_value);
    let deadline = opts.time_limit.map(|limit| (Instant::now() + limit, limit));
    let run_task = |first: Vertex| -> Result<Outcome> {
        let mut oracle = make_oracle();
        let mut st = TaskState::new(n, mode, &shared, deadline);
        oracle.push(first); // a singleton is feasible for every oracle
        st.stack.push(first);
        match mode {
            SearchMode::Enumerate => st.dfs_enumerate(&mut oracle, n, first + 1)?,
            SearchMode::Bound => {
                st.bufs[0].clear();
                for w in first + 1..n as Vertex {
                    if oracle.feasible(w) {
                        st.bufs[0].push(w);
                    }
                }
                st.dfs_bounded(&mut oracle, 0)?;
            }
        }
        Ok(st.into_outcome())
    };

    let outcomes = run_root_tasks(n, opts.workers, &run_task)?;
    let mut total_nodes = 0;
    let mut best: Option<Outcome> = None;
    for o in outcomes {
        total_nodes += o.nodes;
        match &best {
            Some(b) if !better(b, &o) => {}
            _ => best = Some(o),
        }
    }
    let mut best = best.unwrap_or(Outcome {
        value: 0,
        witness: Vec::new(),
        nodes: 0,
    });
    best.nodes = total_nodes;
    Ok(best)
}

#[cfg(feature = "parallel")]
fn run_root_tasks<R>(n: usize, workers: usize, run_task: &R) -> Result<Vec<Outcome>>
where
    R: Fn(Vertex) -> Result<Outcome> + Sync,
{
    if workers == 1 {
        return (0..n as Vertex).map(run_task).collect();
    }
    let job = || (0..n as Vertex).into_par_iter().map(run_task).collect();
    match workers {
        0 => job(),
        w => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Error::invalid(format!("cannot build thread pool: {e}")))?
            .install(job),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_root_tasks<R>(n: usize, _workers: usize, run_task: &R) -> Result<Vec<Outcome>>
where
    R: Fn(Vertex) -> Result<Outcome> + Sync,
{
    (0..n as Vertex).map(run_task).collect()
}

// ---------------------------------------------------------------------------
// Public solvers
// ---------------------------------------------------------------------------

fn saturate(k: usize) -> u16 {
    u16::try_from(k).unwrap_or(u16::MAX)
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::invalid("the geodesic bound k must be at least 1"));
    }
    Ok(())
}

/// Every set avoids geodesics of length <= 1, so the whole vertex set wins.
fn whole_vertex_set_report(g: &Graph, method: Method, started: Instant) -> SolveReport {
    SolveReport {
        value: g.n(),
        witness: g.vertices().collect(),
        method,
        nodes_explored: 0,
        elapsed: started.elapsed(),
    }
}

fn finish(outcome: Outcome, method: Method, started: Instant) -> SolveReport {
    SolveReport {
        value: outcome.value,
        witness: VertexSet::new(outcome.witness),
        method,
        nodes_explored: outcome.nodes,
        elapsed: started.elapsed(),
    }
}

/// Exact general k-position number by exhaustive extension: partial sets
/// grow in ascending vertex order and a branch dies the moment a violating
/// triple appears. Feasibility comes from the defining triple condition,
/// independent of the structural route used by branch and bound.
pub fn gpd_bruteforce(
    g: &Graph,
    dm: &DistanceMatrix,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    let started = Instant::now();
    check_k(k)?;
    if g.n() > opts.bruteforce_cap {
        return Err(Error::ResourceCap(format!(
            "bruteforce accepts at most {} vertices, got {} (try gpd_branch_and_bound)",
            opts.bruteforce_cap,
            g.n()
        )));
    }
    if k == 1 {
        return Ok(whole_vertex_set_report(g, Method::BruteForce, started));
    }
    let outcome = max_feasible_subset(
        g.n(),
        SearchMode::Enumerate,
        0,
        opts,
        || TripleOracle::new(dm, k),
    )?;
    Ok(finish(outcome, Method::BruteForce, started))
}

/// Exact general k-position number by branch and bound: candidates are
/// filtered through the incremental clique-decomposition oracle, branches
/// are cut when `size + remaining candidates` cannot strictly beat the
/// incumbent, and a greedy run seeds the initial bound.
pub fn gpd_branch_and_bound(
    g: &Graph,
    dm: &DistanceMatrix,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    let started = Instant::now();
    check_k(k)?;
    if g.n() > opts.bnb_cap {
        return Err(Error::ResourceCap(format!(
            "branch and bound accepts at most {} vertices, got {}",
            opts.bnb_cap,
            g.n()
        )));
    }
    if k == 1 {
        return Ok(whole_vertex_set_report(g, Method::BranchAndBound, started));
    }
    let seed = greedy_members(g, dm, k).len();
    let outcome = max_feasible_subset(
        g.n(),
        SearchMode::Bound,
        seed,
        opts,
        || PartsOracle::new(g, dm, k),
    )?;
    Ok(finish(outcome, Method::BranchAndBound, started))
}

/// Vertices in greedy scan order: degree descending, index ascending.
fn greedy_order(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

fn greedy_members(g: &Graph, dm: &DistanceMatrix, k: usize) -> Vec<Vertex> {
    let mut oracle = PartsOracle::new(g, dm, k);
    let mut members = Vec::new();
    for v in greedy_order(g) {
        if oracle.feasible(v) {
            oracle.push(v);
            members.push(v);
        }
    }
    members
}

/// Greedy lower bound: scan vertices by descending degree and keep each one
/// that leaves the set feasible under the structural checker. Deterministic,
/// polynomial, and exact-looking on several named families, but only a
/// bound in general.
pub fn gpd_greedy(
    g: &Graph,
    dm: &DistanceMatrix,
    k: usize,
    _opts: &SolveOptions,
) -> Result<SolveReport> {
    let started = Instant::now();
    check_k(k)?;
    if k == 1 {
        return Ok(whole_vertex_set_report(g, Method::Greedy, started));
    }
    let members = greedy_members(g, dm, k);
    Ok(SolveReport {
        value: members.len(),
        witness: VertexSet::new(members),
        method: Method::Greedy,
        nodes_explored: g.n() as u64,
        elapsed: started.elapsed(),
    })
}

fn check_bnb_cap(g: &Graph, opts: &SolveOptions, what: &str) -> Result<()> {
    if g.n() > opts.bnb_cap {
        return Err(Error::ResourceCap(format!(
            "{what} accepts at most {} vertices, got {}",
            opts.bnb_cap,
            g.n()
        )));
    }
    Ok(())
}

/// Greedy seed for a plain oracle over a given scan order.
fn greedy_seed<O: SubsetOracle>(order: &[Vertex], mut oracle: O) -> usize {
    let mut size = 0;
    for &v in order {
        if oracle.feasible(v) {
            oracle.push(v);
            size += 1;
        }
    }
    size
}

/// Largest set inducing maximum degree at most one (dissociation number),
/// by the bounded engine over the degree oracle.
pub fn dissociation_number(g: &Graph, opts: &SolveOptions) -> Result<SolveReport> {
    let started = Instant::now();
    check_bnb_cap(g, opts, "dissociation_number")?;
    if g.n() == 0 {
        return Err(Error::invalid("dissociation_number requires n >= 1"));
    }
    // Low-degree vertices are the likeliest members: seed with them first.
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let seed = greedy_seed(&order, DissociationOracle::new(g));
    let outcome = max_feasible_subset(
        g.n(),
        SearchMode::Bound,
        seed,
        opts,
        || DissociationOracle::new(g),
    )?;
    Ok(finish(outcome, Method::BranchAndBound, started))
}

/// Vertices a graph needs to delete so no path on three vertices remains;
/// the complement count of [`dissociation_number`].
pub fn three_path_vertex_cover_number(g: &Graph, opts: &SolveOptions) -> Result<usize> {
    Ok(g.n() - dissociation_number(g, opts)?.value)
}

/// Clique number by the bounded engine over the adjacency oracle.
pub fn clique_number(g: &Graph, opts: &SolveOptions) -> Result<SolveReport> {
    let started = Instant::now();
    check_bnb_cap(g, opts, "clique_number")?;
    if g.n() == 0 {
        return Err(Error::invalid("clique_number requires n >= 1"));
    }
    let adj = DenseAdj::new(g);
    let seed = greedy_seed(&greedy_order(g), CliqueOracle { adj: &adj, members: Vec::new() });
    let outcome = max_feasible_subset(
        g.n(),
        SearchMode::Bound,
        seed,
        opts,
        || CliqueOracle { adj: &adj, members: Vec::new() },
    )?;
    Ok(finish(outcome, Method::BranchAndBound, started))
}

/// Independence number as the clique number of the complement.
pub fn independence_number(g: &Graph, opts: &SolveOptions) -> Result<SolveReport> {
    let started = Instant::now();
    check_bnb_cap(g, opts, "independence_number")?;
    let co = crate::derived::complement(g);
    let mut report = clique_number(&co, opts)?;
    report.elapsed = started.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::all_pairs_distances;
    use crate::generators;
    use crate::verify::is_gdp_by_definition;

    fn dm(g: &Graph) -> DistanceMatrix {
        all_pairs_distances(g).unwrap()
    }

    /// Test-only oracle: maximum over *all* subsets by bitmask enumeration,
    /// entirely separate from the search engine. Returns the value and the
    /// lexicographically smallest maximum witness.
    fn exhaustive_max(n: usize, feasible: impl Fn(&[Vertex]) -> bool) -> (usize, Vec<Vertex>) {
        assert!(n <= 20, "oracle is for small graphs");
        let mut best: (usize, Vec<Vertex>) = (0, Vec::new());
        for mask in 0u32..1 << n {
            let set: Vec<Vertex> = (0..n as Vertex).filter(|&v| mask >> v & 1 == 1).collect();
            if feasible(&set)
                && (set.len() > best.0 || (set.len() == best.0 && !best.1.is_empty() && set < best.1))
            {
                best = (set.len(), set);
            }
        }
        best
    }

    fn gdp_feasible(dm: &DistanceMatrix, k: usize) -> impl Fn(&[Vertex]) -> bool + '_ {
        move |set| is_gdp_by_definition(dm, &VertexSet::new(set.to_vec()), k)
    }

    #[test]
    fn bruteforce_matches_exhaustive_oracle_on_small_graphs() {
        let graphs = vec![
            generators::path(7).unwrap(),
            generators::cycle(8).unwrap(),
            generators::complete(5).unwrap(),
            generators::complete_bipartite(2, 3).unwrap(),
            generators::star_gadget(2).unwrap(),
            generators::broom_tree(3).unwrap(),
        ];
        for g in &graphs {
            let d = dm(g);
            for k in 2..=d.diameter() as usize + 1 {
                let (value, witness) = exhaustive_max(g.n(), gdp_feasible(&d, k));
                let report = gpd_bruteforce(g, &d, k, &SolveOptions::sequential()).unwrap();
                assert_eq!(report.value, value, "{g:?} k={k}");
                assert_eq!(report.witness.as_slice(), &witness[..], "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn bruteforce_known_values() {
        let p14 = generators::path(14).unwrap();
        let d = dm(&p14);
        let report = gpd_bruteforce(&p14, &d, 4, &SolveOptions::default()).unwrap();
        assert_eq!(report.value, 6);
        assert_eq!(report.witness.as_slice(), &[0, 1, 5, 6, 10, 11]);
        assert_eq!(report.method, Method::BruteForce);

        let c8 = generators::cycle(8).unwrap();
        let d = dm(&c8);
        assert_eq!(gpd_bruteforce(&c8, &d, 4, &SolveOptions::default()).unwrap().value, 3);

        let k5 = generators::complete(5).unwrap();
        let d = dm(&k5);
        for k in 1..=4 {
            assert_eq!(gpd_bruteforce(&k5, &d, k, &SolveOptions::default()).unwrap().value, 5);
        }
    }

    #[test]
    fn bruteforce_rejects_oversized_graphs() {
        let g = generators::path(25).unwrap();
        let d = dm(&g);
        let err = gpd_bruteforce(&g, &d, 2, &SolveOptions::default()).unwrap_err();
        assert!(matches!(err, Error::ResourceCap(_)));
        assert!(err.to_string().contains("branch_and_bound"));
    }

    #[test]
    fn k_equal_one_returns_every_vertex() {
        let g = generators::cycle(6).unwrap();
        let d = dm(&g);
        for solver in [gpd_bruteforce, gpd_branch_and_bound, gpd_greedy] {
            let report = solver(&g, &d, 1, &SolveOptions::default()).unwrap();
            assert_eq!(report.value, 6);
            assert_eq!(report.witness.len(), 6);
        }
        assert!(gpd_bruteforce(&g, &d, 0, &SolveOptions::default()).is_err());
    }

    #[test]
    fn branch_and_bound_agrees_with_bruteforce_on_labeled_small_graphs() {
        // Exhaustive sweep over every labeled connected graph on 5 vertices
        // (all 2^10 edge masks, connected only), at every sensible k.
        let pairs: Vec<(Vertex, Vertex)> = (0..5u32)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let opts = SolveOptions::sequential();
        let mut checked = 0;
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(5, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let d = dm(&g);
            for k in 2..=d.diameter() as usize + 1 {
                let brute = gpd_bruteforce(&g, &d, k, &opts).unwrap();
                let bnb = gpd_branch_and_bound(&g, &d, k, &opts).unwrap();
                assert_eq!(brute.value, bnb.value, "edges {edges:?} k={k}");
                assert_eq!(brute.witness, bnb.witness, "edges {edges:?} k={k}");
                checked += 1;
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn branch_and_bound_agrees_with_bruteforce_on_random_graphs() {
        let opts = SolveOptions::sequential();
        for seed in 0..120 {
            let n = 6 + (seed as usize % 5); // 6..=10
            let p = 0.25 + (seed as f64 % 7.0) / 10.0;
            let g = generators::random_connected(n, p, seed).unwrap();
            let d = dm(&g);
            for k in 2..=d.diameter() as usize + 1 {
                let brute = gpd_bruteforce(&g, &d, k, &opts).unwrap();
                let bnb = gpd_branch_and_bound(&g, &d, k, &opts).unwrap();
                assert_eq!(brute.value, bnb.value, "seed={seed} k={k}");
                assert_eq!(brute.witness, bnb.witness, "seed={seed} k={k}");
            }
        }
    }

    #[test]
    fn branch_and_bound_known_values() {
        // Clique-with-tail instances: 4t at k=t, 4t+2 at k=t-1, 5t-k+1 below.
        let h4 = generators::clique_tail(4).unwrap();
        let d = dm(&h4);
        let opts = SolveOptions::default();
        assert_eq!(gpd_branch_and_bound(&h4, &d, 2, &opts).unwrap().value, 19);
        assert_eq!(gpd_branch_and_bound(&h4, &d, 3, &opts).unwrap().value, 18);
        assert_eq!(gpd_branch_and_bound(&h4, &d, 4, &opts).unwrap().value, 16);

        // Star gadget: constant 2n across k = 2, 3, 4.
        let sg = generators::star_gadget(3).unwrap();
        let d = dm(&sg);
        for k in 2..=4 {
            assert_eq!(gpd_branch_and_bound(&sg, &d, k, &opts).unwrap().value, 6);
        }

        // Broom tree: all 2r leaves, for every k in 2..=r.
        let broom = generators::broom_tree(4).unwrap();
        let d = dm(&broom);
        for k in 2..=4 {
            assert_eq!(gpd_branch_and_bound(&broom, &d, k, &opts).unwrap().value, 8);
        }
    }

    #[test]
    fn branch_and_bound_rejects_oversized_graphs() {
        let g = generators::path(41).unwrap();
        let d = dm(&g);
        assert!(matches!(
            gpd_branch_and_bound(&g, &d, 2, &SolveOptions::default()),
            Err(Error::ResourceCap(_))
        ));
    }

    #[test]
    fn witness_is_deterministic_across_worker_counts() {
        if cfg!(not(feature = "parallel")) {
            return; // only one path to compare
        }
        let graphs = vec![
            generators::clique_tail(3).unwrap(),
            generators::star_gadget(3).unwrap(),
            generators::random_connected(12, 0.35, 99).unwrap(),
        ];
        for g in &graphs {
            let d = dm(g);
            for k in 2..=3 {
                let mut results = Vec::new();
                for workers in [1, 2, 4, 0] {
                    let opts = SolveOptions { workers, ..SolveOptions::default() };
                    let r = gpd_branch_and_bound(g, &d, k, &opts).unwrap();
                    results.push((r.value, r.witness));
                }
                for pair in results.windows(2) {
                    assert_eq!(pair[0], pair[1], "{g:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn greedy_is_feasible_and_bounded_by_exact() {
        for seed in 0..30 {
            let g = generators::random_connected(10, 0.3, seed).unwrap();
            let d = dm(&g);
            for k in 2..=d.diameter() as usize {
                let greedy = gpd_greedy(&g, &d, k, &SolveOptions::default()).unwrap();
                assert!(is_gdp_by_definition(&d, &greedy.witness, k));
                let exact = gpd_branch_and_bound(&g, &d, k, &SolveOptions::default()).unwrap();
                assert!(greedy.value <= exact.value);
                assert!(greedy.value >= 2.min(g.n()));
            }
        }
    }

    #[test]
    fn greedy_on_p14_is_within_known_range() {
        let g = generators::path(14).unwrap();
        let d = dm(&g);
        let r = gpd_greedy(&g, &d, 4, &SolveOptions::default()).unwrap();
        assert!(r.value >= 2 && r.value <= 6, "greedy found {}", r.value);
    }

    #[test]
    fn dissociation_number_matches_oracle_and_known_values() {
        let p4 = generators::path(4).unwrap();
        let (value, witness) = exhaustive_max(4, |set| {
            set.iter().all(|&v| {
                let inside = p4.neighbors(v).iter().filter(|w| set.contains(w)).count();
                inside <= 1
            })
        });
        assert_eq!(value, 3);
        let report = dissociation_number(&p4, &SolveOptions::default()).unwrap();
        assert_eq!(report.value, 3);
        assert_eq!(report.witness.as_slice(), &witness[..]);
        assert_eq!(three_path_vertex_cover_number(&p4, &SolveOptions::default()).unwrap(), 1);

        let c6 = generators::cycle(6).unwrap();
        assert_eq!(dissociation_number(&c6, &SolveOptions::default()).unwrap().value, 4);

        // Even grids: dissociation number 2rs on the 2r x 2s grid.
        let grid = generators::cartesian_grid(4, 4).unwrap();
        assert_eq!(dissociation_number(&grid, &SolveOptions::default()).unwrap().value, 8);
    }

    #[test]
    fn dissociation_matches_exhaustive_on_random_graphs() {
        for seed in 0..40 {
            let g = generators::random_connected(9, 0.3, 1000 + seed).unwrap();
            let feasible = |set: &[Vertex]| {
                set.iter().all(|&v| {
                    g.neighbors(v).iter().filter(|w| set.contains(w)).count() <= 1
                })
            };
            let (value, _) = exhaustive_max(9, feasible);
            let report = dissociation_number(&g, &SolveOptions::sequential()).unwrap();
            assert_eq!(report.value, value, "seed {seed}");
        }
    }

    #[test]
    fn clique_and_independence_numbers() {
        let opts = SolveOptions::default();
        let k4 = generators::complete(4).unwrap();
        assert_eq!(clique_number(&k4, &opts).unwrap().value, 4);

        let c5 = generators::cycle(5).unwrap();
        assert_eq!(clique_number(&c5, &opts).unwrap().value, 2);
        assert_eq!(independence_number(&c5, &opts).unwrap().value, 2);

        let k23 = generators::complete_bipartite(2, 3).unwrap();
        assert_eq!(independence_number(&k23, &opts).unwrap().value, 3);
        assert_eq!(clique_number(&k23, &opts).unwrap().value, 2);

        let grid = generators::cartesian_grid(4, 4).unwrap();
        assert_eq!(independence_number(&grid, &opts).unwrap().value, 8);

        // Chained gadget: the x-vertices are the unique maximum independent set.
        let chained = generators::chained_gadget(4, 4).unwrap();
        assert_eq!(independence_number(&chained, &opts).unwrap().value, 17);
    }

    #[test]
    fn independence_matches_exhaustive_on_random_graphs() {
        for seed in 0..40 {
            let g = generators::random_connected(9, 0.4, 2000 + seed).unwrap();
            let feasible = |set: &[Vertex]| {
                set.iter().enumerate().all(|(i, &v)| {
                    set[i + 1..].iter().all(|&w| !g.has_edge(v, w))
                })
            };
            let (value, witness) = exhaustive_max(9, feasible);
            let report = independence_number(&g, &SolveOptions::sequential()).unwrap();
            assert_eq!(report.value, value, "seed {seed}");
            assert_eq!(report.witness.as_slice(), &witness[..], "seed {seed}");
        }
    }

    #[test]
    fn clique_reduction_grows_clique_number_by_4t() {
        let opts = SolveOptions::default();
        for (payload, omega) in [
            (generators::complete(3).unwrap(), 3),
            (generators::path(4).unwrap(), 2),
            (generators::cycle(5).unwrap(), 2),
        ] {
            let t = payload.n();
            let reduced = generators::clique_reduction(&payload).unwrap();
            let got = clique_number(&reduced, &opts).unwrap().value;
            assert_eq!(got, 4 * t + omega, "payload {payload:?}");
        }
    }

    #[test]
    fn witness_always_attains_value_and_verifies() {
        for seed in 0..20 {
            let g = generators::random_connected(11, 0.3, 3000 + seed).unwrap();
            let d = dm(&g);
            for k in 2..=d.diameter() as usize {
                let r = gpd_branch_and_bound(&g, &d, k, &SolveOptions::default()).unwrap();
                assert_eq!(r.value, r.witness.len());
                assert!(is_gdp_by_definition(&d, &r.witness, k));
            }
        }
    }

    #[test]
    fn values_non_increasing_in_k() {
        for seed in 0..20 {
            let g = generators::random_connected(10, 0.35, 4000 + seed).unwrap();
            let d = dm(&g);
            let mut prev = usize::MAX;
            for k in 2..=d.diameter() as usize + 1 {
                let v = gpd_branch_and_bound(&g, &d, k, &SolveOptions::default())
                    .unwrap()
                    .value;
                assert!(v <= prev, "seed={seed} k={k}: {v} > {prev}");
                prev = v;
            }
        }
    }

    #[test]
    fn time_limit_is_honored() {
        let g = generators::cartesian_grid(5, 5).unwrap();
        let d = dm(&g);
        let opts = SolveOptions {
            time_limit: Some(Duration::from_millis(1)),
            workers: 1,
            ..SolveOptions::default()
        };
        // 25 vertices at k=2 explores far more than a millisecond's worth.
        match gpd_bruteforce(&g, &d, 2, &SolveOptions { bruteforce_cap: 25, ..opts.clone() }) {
            Err(Error::TimeLimit(_)) => {}
            other => panic!("expected time limit, got {other:?}"),
        }
    }
}
