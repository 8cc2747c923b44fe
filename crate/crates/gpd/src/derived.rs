//! Graphs derived from a base graph: the strong k-resolving graph used for
//! clique lower bounds, the complement, and the true-twin test that decides
//! when those two coincide.

use crate::dist::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solve::{clique_number, SolveOptions};

/// Strong k-resolving graph on the same vertex set: `u ~ v` iff `u` and `v`
/// are mutually maximally distant in the base graph or `d(u, v) >= k`.
///
/// The output routinely has isolated vertices or several components; only
/// its clique structure matters. Requires `k >= 2`.
pub fn strong_resolving_graph(g: &Graph, dm: &DistanceMatrix, k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::invalid(
            "the strong k-resolving graph is defined for k >= 2",
        ));
    }
    let k16 = u16::try_from(k).unwrap_or(u16::MAX);
    let mut edges = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.n() as Vertex {
            if dm.dist(u, v) >= k16 || dm.mutually_maximally_distant(g, u, v)? {
                edges.push((u, v));
            }
        }
    }
    Graph::new(g.n(), &edges)
}

/// Complement on the same vertex set.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n() as Vertex;
    let mut edges = Vec::new();
    for u in g.vertices() {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(g.n(), &edges).expect("complement edges are always in range")
}

/// First pair of distinct vertices with identical closed neighborhoods
/// (true twins), in lexicographic order, or `None` if the graph has none.
///
/// True twins are adjacent with the same other neighbors, so distance-based
/// constructions cannot tell them apart.
pub fn true_twins(g: &Graph) -> Option<(Vertex, Vertex)> {
    // Closed neighborhood, sorted: N(v) is sorted already, insert v in place.
    let closed = |v: Vertex| -> Vec<Vertex> {
        let mut nb = g.neighbors(v).to_vec();
        let pos = nb.partition_point(|&w| w < v);
        nb.insert(pos, v);
        nb
    };
    for u in g.vertices() {
        let cu = closed(u);
        for v in u + 1..g.n() as Vertex {
            if g.has_edge(u, v) && cu == closed(v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Clique number of the strong k-resolving graph — a lower bound on the
/// general k-position number of the base graph.
pub fn srg_clique_bound(
    g: &Graph,
    dm: &DistanceMatrix,
    k: usize,
    opts: &SolveOptions,
) -> Result<usize> {
    let srg = strong_resolving_graph(g, dm, k)?;
    Ok(clique_number(&srg, opts)?.value)
}
