//! Two independent routes for checking whether a vertex set is a general
//! d-position set: a direct triple scan over the definition, and a
//! structural test on the clique decomposition of the induced subgraph.
//!
//! A set `S` is a *general d-position set* when no three distinct members
//! lie on a common geodesic of length at most `d`; equivalently, whenever a
//! member `v` sits in the interval between members `u` and `w`, the distance
//! `d(u, w)` exceeds `d`.

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// The connected components of an induced subgraph, each flagged by whether
/// it induces a complete graph.
#[derive(Clone, Debug)]
pub struct CliqueDecomposition {
    parts: Vec<VertexSet>,
    complete: Vec<bool>,
}

impl CliqueDecomposition {
    /// Component vertex sets, ordered by smallest member.
    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// Completeness flag per part, aligned with [`parts`](Self::parts).
    pub fn complete_flags(&self) -> &[bool] {
        &self.complete
    }

    /// True iff every component induces a complete graph.
    pub fn all_complete(&self) -> bool {
        self.complete.iter().all(|&c| c)
    }
}

/// Splits the subgraph induced by `s` into connected components and flags
/// each component that induces a complete graph.
///
/// Panics if `s` contains an index outside the graph.
pub fn components_of_induced(g: &Graph, s: &VertexSet) -> CliqueDecomposition {
    assert!(s.in_range(g.n()), "vertex set out of range");
    let members = s.as_slice();
    let mut comp_of = vec![usize::MAX; members.len()];
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    for start in 0..members.len() {
        if comp_of[start] != usize::MAX {
            continue;
        }
        // Depth-first sweep over positions in the sorted member list; the
        // smallest unvisited member starts each new component, so parts come
        // out ordered by smallest member.
        let id = parts.len();
        let mut stack = vec![start];
        comp_of[start] = id;
        let mut verts = Vec::new();
        while let Some(i) = stack.pop() {
            verts.push(members[i]);
            for &w in g.neighbors(members[i]) {
                if let Ok(j) = members.binary_search(&w) {
                    if comp_of[j] == usize::MAX {
                        comp_of[j] = id;
                        stack.push(j);
                    }
                }
            }
        }
        parts.push(verts);
    }
    let complete = parts
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .all(|(i, &x)| p[i + 1..].iter().all(|&y| g.has_edge(x, y)))
        })
        .collect();
    CliqueDecomposition {
        parts: parts.into_iter().map(VertexSet::new).collect(),
        complete,
    }
}

/// Definition route: scans every triple of members of `s` and reports
/// whether none of them witnesses a violating geodesic of length `<= k`.
///
/// `O(|s|^3)` distance-matrix lookups; sets with at most two members are
/// always accepted. Panics if `s` contains an index outside the matrix.
pub fn is_gdp_by_definition(dm: &DistanceMatrix, s: &VertexSet, k: usize) -> bool {
    assert!(s.in_range(dm.n()), "vertex set out of range");
    let k = u16::try_from(k).unwrap_or(u16::MAX);
    let members = s.as_slice();
    for (i, &u) in members.iter().enumerate() {
        for &w in &members[i + 1..] {
            if dm.dist(u, w) > k {
                continue;
            }
            // Any third member inside the interval of a short pair violates.
            for &v in members {
                if v != u && v != w && dm.in_interval(u, v, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Structural route, valid for `k >= 2` on connected graphs: `s` is a
/// general k-position set iff
///
/// 1. every component of the induced subgraph is a clique,
/// 2. non-parallel components are at distance `>= k`, and
/// 3. whenever one component sits metrically between two others
///    (`d(Q_i, Q_j) + d(Q_j, Q_l) = d(Q_i, Q_l)`), the outer distance
///    exceeds `k`.
pub fn is_gdp_by_characterization(
    g: &Graph,
    dm: &DistanceMatrix,
    s: &VertexSet,
    k: usize,
) -> Result<bool> {
    if k < 2 {
        return Err(Error::invalid(
            "the clique-decomposition characterization requires k >= 2",
        ));
    }
    let k16 = u16::try_from(k).unwrap_or(u16::MAX);
    let decomp = components_of_induced(g, s);
    if !decomp.all_complete() {
        return Ok(false);
    }
    let parts = decomp.parts();
    let ell = parts.len();

    // Pairwise set distances and parallel flags.
    let mut d = vec![0u16; ell * ell];
    let mut parallel = vec![false; ell * ell];
    for i in 0..ell {
        for j in i + 1..ell {
            let dij = dm.subgraph_distance(&parts[i], &parts[j])?;
            let par = dm.are_parallel(&parts[i], &parts[j])?;
            d[i * ell + j] = dij;
            d[j * ell + i] = dij;
            parallel[i * ell + j] = par;
            parallel[j * ell + i] = par;
            if !par && dij < k16 {
                return Ok(false);
            }
        }
    }

    // Metric betweenness among component triples.
    for i in 0..ell {
        for j in 0..ell {
            if j == i {
                continue;
            }
            for l in i + 1..ell {
                if l == j {
                    continue;
                }
                let (dij, djl, dil) = (d[i * ell + j], d[j * ell + l], d[i * ell + l]);
                if dij + djl == dil && dil <= k16 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Classical general position: no three members on any common geodesic,
/// i.e. the defining condition at `k = diameter`.
pub fn is_general_position(dm: &DistanceMatrix, s: &VertexSet) -> bool {
    is_gdp_by_definition(dm, s, dm.diameter() as usize)
}
