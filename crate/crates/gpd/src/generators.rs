//! Graph family generators with fixed, documented vertex numbering, plus a
//! small spec type the CLI uses to build a family from `key=value` params.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Path on `n >= 1` vertices; edges `i -- i+1`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("path requires n >= 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1))
        .map(|i| (i as Vertex, (i + 1) as Vertex))
        .collect();
    Graph::new(n, &edges)
}

/// Cycle on `n >= 3` vertices; edges `i -- (i+1) mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("cycle requires n >= 3"));
    }
    let edges: Vec<_> = (0..n)
        .map(|i| (i as Vertex, ((i + 1) % n) as Vertex))
        .collect();
    Graph::new(n, &edges)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("complete requires n >= 1"));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u as Vertex, v as Vertex));
        }
    }
    Graph::new(n, &edges)
}

/// Complete bipartite graph; sides `0..a` and `a..a+b` with `a, b >= 1`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::invalid("complete_bipartite requires both sides >= 1"));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u as Vertex, (a + v) as Vertex));
        }
    }
    Graph::new(a + b, &edges)
}

/// Cartesian product of two paths: an `r x s` grid with `r, s >= 1`.
/// Cell `(i, j)` is vertex `i*s + j`.
pub fn cartesian_grid(r: usize, s: usize) -> Result<Graph> {
    if r < 1 || s < 1 {
        return Err(Error::invalid("cartesian_grid requires r, s >= 1"));
    }
    let mut edges = Vec::new();
    let id = |i: usize, j: usize| (i * s + j) as Vertex;
    for i in 0..r {
        for j in 0..s {
            if j + 1 < s {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < r {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::new(r * s, &edges)
}

/// Double-star gadget on `2n + 3` vertices, `n >= 2`.
///
/// A star with center `x = 0` and leaves `u_1..u_n = 1..n`,
/// `v_1..v_n = n+1..2n`, plus two extra vertices `u = 2n+1` adjacent to
/// every `u_i` and `v = 2n+2` adjacent to every `v_i`. Diameter 4.
pub fn star_gadget(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid("star_gadget requires n >= 2"));
    }
    let u = (2 * n + 1) as Vertex;
    let v = (2 * n + 2) as Vertex;
    let mut edges = Vec::with_capacity(4 * n);
    for i in 1..=n {
        let ui = i as Vertex;
        let vi = (n + i) as Vertex;
        edges.push((0, ui));
        edges.push((0, vi));
        edges.push((u, ui));
        edges.push((v, vi));
    }
    Graph::new(2 * n + 3, &edges)
}

/// Broom tree on `3r - 1` vertices, `r >= 2`: a path `0..=r` whose internal
/// vertices `1..r` each carry two extra leaves. The two leaves of internal
/// vertex `i` are `r + 2i - 1` and `r + 2i`. It has `2r` leaves and
/// diameter `r`.
pub fn broom_tree(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::invalid("broom_tree requires r >= 2"));
    }
    let mut edges = Vec::with_capacity(3 * r - 2);
    for i in 0..r {
        edges.push((i as Vertex, (i + 1) as Vertex));
    }
    for i in 1..r {
        edges.push((i as Vertex, (r + 2 * i - 1) as Vertex));
        edges.push((i as Vertex, (r + 2 * i) as Vertex));
    }
    Graph::new(3 * r - 1, &edges)
}

/// Chained gadget on `k(l + 2) + 1` vertices, `k, l >= 4`.
///
/// Block `j` (1-based) starts at `(j-1)(l+2)` and holds `u_j`, `w_j`, and
/// `x_{j,1}..x_{j,l}`, in that order. One extra vertex `x_{k+1,1} = k(l+2)`
/// closes the chain. Both `u_j` and `w_j` are adjacent to `x_{j,1}..x_{j,l}`
/// and to `x_{j+1,1}`. Diameter `2k`; the `kl + 1` x-vertices form a maximum
/// independent set.
pub fn chained_gadget(k: usize, l: usize) -> Result<Graph> {
    if k < 4 || l < 4 {
        return Err(Error::invalid("chained_gadget requires k, l >= 4"));
    }
    let block = l + 2;
    let mut edges = Vec::new();
    for j in 0..k {
        let base = j * block;
        let uj = base as Vertex;
        let wj = (base + 1) as Vertex;
        for i in 1..=l {
            edges.push((uj, (base + 1 + i) as Vertex));
            edges.push((wj, (base + 1 + i) as Vertex));
        }
        // x_{j+1,1}: the first x of the next block, or the closing vertex.
        let next = if j + 1 < k { (j + 1) * block + 2 } else { k * block };
        edges.push((uj, next as Vertex));
        edges.push((wj, next as Vertex));
    }
    Graph::new(k * block + 1, &edges)
}

/// Clique with a pendant tail on `6t - 3` vertices, `t >= 3`.
///
/// `A = 0..2t-1` and `B = 2t..4t-1` induce a complete graph. A path
/// `v_1..v_{t-1}` (vertex `v_i = 4t + i - 1`) hangs off `B`: every vertex of
/// `B` is adjacent to `v_1`. Pendants `u_2..u_{t-1}` (vertex
/// `u_i = 5t - 1 + i - 2`) satisfy `u_i ~ v_i` and `u_i ~ v_{i-1}`.
/// Diameter `t`.
pub fn clique_tail(t: usize) -> Result<Graph> {
    if t < 3 {
        return Err(Error::invalid("clique_tail requires t >= 3"));
    }
    let v = |i: usize| (4 * t + i - 1) as Vertex; // i in 1..=t-1
    let u = |i: usize| (5 * t - 1 + i - 2) as Vertex; // i in 2..=t-1
    let mut edges = Vec::new();
    for x in 0..4 * t {
        for y in x + 1..4 * t {
            edges.push((x as Vertex, y as Vertex));
        }
    }
    for b in 2 * t..4 * t {
        edges.push((b as Vertex, v(1)));
    }
    for i in 1..t - 1 {
        edges.push((v(i), v(i + 1)));
    }
    for i in 2..t {
        edges.push((u(i), v(i)));
        edges.push((u(i), v(i - 1)));
    }
    Graph::new(6 * t - 3, &edges)
}

/// Joins a connected payload graph `g` (with `t = |V(g)| >= 3`) to the
/// clique side of [`clique_tail`]`(t)`.
///
/// The payload keeps its vertex labels `0..t`; the tail graph is shifted by
/// `t`. Every payload vertex becomes adjacent to all of `A`, `B`, and `v_1`
/// of the shifted tail graph. Order `7t - 3`; the clique number grows by
/// exactly `4t` over the payload's.
pub fn clique_reduction(g: &Graph) -> Result<Graph> {
    let t = g.n();
    if t < 3 {
        return Err(Error::invalid("clique_reduction requires a payload with >= 3 vertices"));
    }
    if !g.is_connected() {
        return Err(Error::invalid("clique_reduction requires a connected payload"));
    }
    let tail = clique_tail(t)?;
    let shift = t as Vertex;
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    edges.extend(tail.edges().map(|(a, b)| (a + shift, b + shift)));
    // Join the payload to A, B, and v_1 of the tail graph.
    for p in 0..t {
        for q in 0..=4 * t {
            edges.push((p as Vertex, (t + q) as Vertex));
        }
    }
    Graph::new(7 * t - 3, &edges)
}

/// Attempts for [`random_connected`] before giving up.
const SAMPLE_ATTEMPTS: usize = 1000;

/// Erdős–Rényi-style `G(n, p)` sample, redrawn until connected.
///
/// Deterministic for a fixed `(n, p, seed)` triple. Fails when `p` is out of
/// `(0, 1]` or no connected sample shows up within the attempt cap (only
/// plausible for tiny `p`).
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::invalid("random_connected requires n >= 1"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::invalid("random_connected requires 0 < p <= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u as Vertex, v as Vertex));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::invalid(format!(
        "no connected sample in {SAMPLE_ATTEMPTS} attempts (n={n}, p={p})"
    )))
}

/// Graph families the CLI can build by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    CartesianGrid,
    StarGadget,
    BroomTree,
    ChainedGadget,
    CliqueTail,
    CliqueReduction,
    RandomConnected,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::CartesianGrid,
        Family::StarGadget,
        Family::BroomTree,
        Family::ChainedGadget,
        Family::CliqueTail,
        Family::CliqueReduction,
        Family::RandomConnected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::CartesianGrid => "cartesian_grid",
            Family::StarGadget => "star_gadget",
            Family::BroomTree => "broom_tree",
            Family::ChainedGadget => "chained_gadget",
            Family::CliqueTail => "clique_tail",
            Family::CliqueReduction => "clique_reduction",
            Family::RandomConnected => "random_connected",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::invalid(format!("unknown family `{s}` (expected one of: {})", names.join(", ")))
            })
    }
}

/// A family plus named parameters, as collected from the command line.
///
/// Parameters arrive as strings so that integer-valued keys (`n`, `t`, …)
/// and the edge probability `p` share one map. The optional payload graph
/// feeds [`clique_reduction`].
#[derive(Clone, Debug, Default)]
pub struct GadgetSpec {
    pub family: Option<Family>,
    pub params: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub payload: Option<Graph>,
}

impl GadgetSpec {
    pub fn new(family: Family) -> GadgetSpec {
        GadgetSpec {
            family: Some(family),
            ..GadgetSpec::default()
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> GadgetSpec {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn usize_param(&self, key: &str) -> Result<usize> {
        let raw = self
            .params
            .get(key)
            .ok_or_else(|| Error::invalid(format!("missing parameter `{key}`")))?;
        raw.parse()
            .map_err(|_| Error::invalid(format!("parameter `{key}={raw}` is not a non-negative integer")))
    }

    fn f64_param(&self, key: &str, default: f64) -> Result<f64> {
        match self.params.get(key) {
            None => Ok(default),
            Some(raw) => raw
                .parse()
                .map_err(|_| Error::invalid(format!("parameter `{key}={raw}` is not a number"))),
        }
    }

    fn check_keys(&self, allowed: &[&str]) -> Result<()> {
        for key in self.params.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::invalid(format!(
                    "unknown parameter `{key}` for family `{}`",
                    self.family.map_or("?", Family::name)
                )));
            }
        }
        Ok(())
    }

    /// Builds the graph this spec describes.
    pub fn build(&self) -> Result<Graph> {
        let family = self
            .family
            .ok_or_else(|| Error::invalid("no graph family given"))?;
        if family != Family::CliqueReduction && self.payload.is_some() {
            return Err(Error::invalid(format!(
                "family `{family}` does not take a payload graph"
            )));
        }
        match family {
            Family::Path => {
                self.check_keys(&["n"])?;
                path(self.usize_param("n")?)
            }
            Family::Cycle => {
                self.check_keys(&["n"])?;
                cycle(self.usize_param("n")?)
            }
            Family::Complete => {
                self.check_keys(&["n"])?;
                complete(self.usize_param("n")?)
            }
            Family::CompleteBipartite => {
                self.check_keys(&["m", "n"])?;
                complete_bipartite(self.usize_param("m")?, self.usize_param("n")?)
            }
            Family::CartesianGrid => {
                self.check_keys(&["r", "s"])?;
                cartesian_grid(self.usize_param("r")?, self.usize_param("s")?)
            }
            Family::StarGadget => {
                self.check_keys(&["n"])?;
                star_gadget(self.usize_param("n")?)
            }
            Family::BroomTree => {
                self.check_keys(&["r"])?;
                broom_tree(self.usize_param("r")?)
            }
            Family::ChainedGadget => {
                self.check_keys(&["k", "l"])?;
                chained_gadget(self.usize_param("k")?, self.usize_param("l")?)
            }
            Family::CliqueTail => {
                self.check_keys(&["t"])?;
                clique_tail(self.usize_param("t")?)
            }
            Family::CliqueReduction => {
                self.check_keys(&[])?;
                let payload = self.payload.as_ref().ok_or_else(|| {
                    Error::invalid("clique_reduction needs a payload graph (pass --graph FILE)")
                })?;
                clique_reduction(payload)
            }
            Family::RandomConnected => {
                self.check_keys(&["n", "p", "seed"])?;
                let n = self.usize_param("n")?;
                let p = self.f64_param("p", 0.5)?;
                // --seed wins over a `seed=` parameter.
                let seed = match self.seed {
                    Some(s) => s,
                    None if self.params.contains_key("seed") => self.usize_param("seed")? as u64,
                    None => 0,
                };
                random_connected(n, p, seed)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::all_pairs_distances;

    fn diameter(g: &Graph) -> u16 {
        all_pairs_distances(g).unwrap().diameter()
    }

    #[test]
    fn path_cycle_complete_shapes() {
        let p = path(14).unwrap();
        assert_eq!((p.n(), p.m()), (14, 13));
        assert_eq!(diameter(&p), 13);
        assert_eq!(path(1).unwrap().m(), 0);

        let c = cycle(8).unwrap();
        assert_eq!((c.n(), c.m()), (8, 8));
        assert_eq!(diameter(&c), 4);
        assert!(cycle(2).is_err());

        let k = complete(5).unwrap();
        assert_eq!((k.n(), k.m()), (5, 10));
        assert_eq!(diameter(&k), 1);
    }

    #[test]
    fn complete_bipartite_shape() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (5, 6));
        assert_eq!(diameter(&g), 2);
        assert!(!g.has_edge(0, 1) && g.has_edge(0, 2));
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn grid_shape_and_degenerate_cases() {
        let g = cartesian_grid(4, 4).unwrap();
        assert_eq!((g.n(), g.m()), (16, 24));
        assert_eq!(diameter(&g), 6);

        // A 1 x n grid is exactly the path.
        assert_eq!(cartesian_grid(1, 5).unwrap(), path(5).unwrap());

        // A 2 x 2 grid is a 4-cycle: connected and 2-regular on 4 vertices.
        let c = cartesian_grid(2, 2).unwrap();
        assert_eq!((c.n(), c.m()), (4, 4));
        assert!(c.is_connected());
        assert!(c.vertices().all(|v| c.degree(v) == 2));
    }

    #[test]
    fn star_gadget_shape() {
        let g = star_gadget(2).unwrap();
        assert_eq!((g.n(), g.m()), (7, 8));
        assert_eq!(diameter(&g), 4);

        let g = star_gadget(3).unwrap();
        assert_eq!((g.n(), g.m()), (9, 12));
        assert_eq!(g.degree(0), 6); // center sees all 2n leaves
        assert_eq!(diameter(&g), 4);
        assert!(star_gadget(1).is_err());
    }

    #[test]
    fn broom_tree_shape() {
        let g = broom_tree(4).unwrap();
        assert_eq!((g.n(), g.m()), (11, 10));
        assert_eq!(diameter(&g), 4);
        let leaves = g.vertices().filter(|&v| g.degree(v) == 1).count();
        assert_eq!(leaves, 8);

        // r = 2 collapses to the star on five vertices.
        let s = broom_tree(2).unwrap();
        assert_eq!((s.n(), s.m()), (5, 4));
        assert_eq!(s.degree(1), 4);
        assert!(broom_tree(1).is_err());
    }

    #[test]
    fn chained_gadget_shape() {
        let g = chained_gadget(4, 4).unwrap();
        assert_eq!((g.n(), g.m()), (25, 40));
        assert_eq!(diameter(&g), 8);
        // u_2 and w_2 see their own four x's plus x_{3,1}.
        assert_eq!(g.degree(6), 5);
        assert_eq!(g.degree(7), 5);
        assert!(chained_gadget(3, 4).is_err());
        assert!(chained_gadget(4, 3).is_err());
    }

    #[test]
    fn chained_gadget_x_vertices_are_independent() {
        let (k, l) = (4, 5);
        let g = chained_gadget(k, l).unwrap();
        let xs: Vec<Vertex> = (0..k)
            .flat_map(|j| (2..2 + l).map(move |i| (j * (l + 2) + i) as Vertex))
            .chain(std::iter::once((k * (l + 2)) as Vertex))
            .collect();
        assert_eq!(xs.len(), k * l + 1);
        for (i, &x) in xs.iter().enumerate() {
            for &y in &xs[i + 1..] {
                assert!(!g.has_edge(x, y));
            }
        }
    }

    #[test]
    fn clique_tail_shape() {
        for t in [3, 4, 5] {
            let g = clique_tail(t).unwrap();
            assert_eq!(g.n(), 6 * t - 3);
            assert_eq!(diameter(&g), t as u16);
            // A ∪ B induces a complete graph.
            for x in 0..4 * t as Vertex {
                for y in x + 1..4 * t as Vertex {
                    assert!(g.has_edge(x, y));
                }
            }
            // Pendants have degree exactly 2 (their v_i and v_{i-1}).
            for i in 2..t {
                let ui = (5 * t - 1 + i - 2) as Vertex;
                assert_eq!(g.degree(ui), 2);
            }
        }
        assert!(clique_tail(2).is_err());
    }

    #[test]
    fn clique_tail_edge_count_matches_construction() {
        // clique + B-to-v1 + path + two edges per pendant
        let t = 4;
        let g = clique_tail(t).unwrap();
        let expected = (4 * t) * (4 * t - 1) / 2 + 2 * t + (t - 2) + 2 * (t - 2);
        assert_eq!(g.m(), expected);
    }

    #[test]
    fn clique_reduction_shape() {
        let payload = complete(3).unwrap();
        let g = clique_reduction(&payload).unwrap();
        assert_eq!(g.n(), 7 * 3 - 3);
        // Payload vertices see all of A, B, and v_1.
        for p in 0..3 as Vertex {
            for q in 0..=(4 * 3) as Vertex {
                assert!(g.has_edge(p, 3 + q));
            }
        }
        assert!(clique_reduction(&path(2).unwrap()).is_err());
        let disconnected = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(clique_reduction(&disconnected).is_err());
    }

    #[test]
    fn random_connected_is_deterministic_and_connected() {
        let a = random_connected(10, 0.3, 42).unwrap();
        let b = random_connected(10, 0.3, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        let c = random_connected(10, 0.3, 43).unwrap();
        assert!(a != c || a.m() == c.m()); // different seed, almost surely different graph

        // p = 1 yields the complete graph; n = 1 the lone vertex.
        assert_eq!(random_connected(6, 1.0, 7).unwrap(), complete(6).unwrap());
        assert_eq!(random_connected(1, 0.5, 7).unwrap().n(), 1);

        assert!(random_connected(3, 0.0, 1).is_err());
        assert!(random_connected(3, 1.5, 1).is_err());
    }

    #[test]
    fn gadget_spec_builds_families() {
        let g = GadgetSpec::new(Family::Path).with_param("n", 14).build().unwrap();
        assert_eq!(g.n(), 14);

        let g = GadgetSpec::new(Family::CliqueTail).with_param("t", 4).build().unwrap();
        assert_eq!(g.n(), 21);

        let mut spec = GadgetSpec::new(Family::CliqueReduction);
        spec.payload = Some(complete(3).unwrap());
        assert_eq!(spec.build().unwrap().n(), 18);

        // Unknown and missing parameters are rejected.
        assert!(GadgetSpec::new(Family::Path).with_param("t", 3).build().is_err());
        assert!(GadgetSpec::new(Family::Path).build().is_err());
        assert!(GadgetSpec::new(Family::Path).with_param("n", "x").build().is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nosuch".parse::<Family>().is_err());
    }

    #[test]
    fn random_connected_seed_param_and_flag_agree() {
        let via_param = GadgetSpec::new(Family::RandomConnected)
            .with_param("n", 8)
            .with_param("p", 0.4)
            .with_param("seed", 5)
            .build()
            .unwrap();
        let mut spec = GadgetSpec::new(Family::RandomConnected)
            .with_param("n", 8)
            .with_param("p", 0.4);
        spec.seed = Some(5);
        assert_eq!(via_param, spec.build().unwrap());
    }
}
