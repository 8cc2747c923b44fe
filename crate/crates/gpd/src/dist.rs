//! All-pairs shortest-path distances and the metric predicates built on them:
//! interval membership, set-to-set distance, parallel subgraphs, maximal
//! distance, and isometric subsets.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sentinel for "not reached" while a BFS row is under construction.
const UNREACHED: u16 = u16::MAX;

/// Dense all-pairs distance matrix of a connected graph.
///
/// Distances are exact hop counts stored as `u16`, so the largest supported
/// graph is far beyond the solver caps. Construction runs one BFS per source
/// (in parallel when the `parallel` feature is on) and fails with
/// [`Error::Disconnected`] when any pair is unreachable.
#[derive(Clone)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u16>,
    diameter: u16,
}

/// Runs every BFS and assembles the row-major matrix.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Disconnected);
    }

    let bfs_row = |s: usize| -> Vec<u16> {
        let mut row = vec![UNREACHED; n];
        let mut queue = VecDeque::new();
        row[s] = 0;
        queue.push_back(s as Vertex);
        while let Some(u) = queue.pop_front() {
            let du = row[u as usize];
            for &v in g.neighbors(u) {
                if row[v as usize] == UNREACHED {
                    row[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        row
    };

    #[cfg(feature = "parallel")]
    let rows: Vec<Vec<u16>> = (0..n).into_par_iter().map(bfs_row).collect();
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Vec<u16>> = (0..n).map(bfs_row).collect();

    let mut dist = Vec::with_capacity(n * n);
    let mut diameter = 0;
    for row in rows {
        for &d in &row {
            if d == UNREACHED {
                return Err(Error::Disconnected);
            }
            diameter = diameter.max(d);
        }
        dist.extend_from_slice(&row);
    }
    Ok(DistanceMatrix { n, dist, diameter })
}

impl DistanceMatrix {
    /// Number of vertices of the underlying graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Shortest-path distance between `u` and `v`.
    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u16 {
        self.dist[u as usize * self.n + v as usize]
    }

    /// Largest distance over all pairs.
    pub fn diameter(&self) -> u16 {
        self.diameter
    }

    /// True iff `v` lies on some shortest `u`,`w`-path, i.e. `v` belongs to
    /// the interval between `u` and `w`. Endpoints belong to the interval.
    #[inline]
    pub fn in_interval(&self, u: Vertex, v: Vertex, w: Vertex) -> bool {
        self.dist(u, w) == self.dist(u, v) + self.dist(v, w)
    }

    /// Minimum distance between two non-empty vertex sets,
    /// `min { d(a, b) : a in A, b in B }`. Sets may overlap (distance 0).
    pub fn subgraph_distance(&self, a: &VertexSet, b: &VertexSet) -> Result<u16> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::invalid("subgraph_distance requires non-empty sets"));
        }
        let mut best = u16::MAX;
        for x in a.iter() {
            for y in b.iter() {
                best = best.min(self.dist(x, y));
            }
        }
        Ok(best)
    }

    /// True iff the sets are parallel: every cross pair realizes the minimum
    /// set-to-set distance. Requires disjoint non-empty sets.
    pub fn are_parallel(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::invalid("are_parallel requires non-empty sets"));
        }
        if a.iter().any(|x| b.contains(x)) {
            return Err(Error::invalid("are_parallel requires disjoint sets"));
        }
        let d = self.subgraph_distance(a, b)?;
        Ok(a.iter().all(|x| b.iter().all(|y| self.dist(x, y) == d)))
    }

    /// True iff `u` is maximally distant from `v`: no neighbor of `u` is
    /// farther from `v` than `u` itself.
    pub fn is_maximally_distant(&self, g: &Graph, u: Vertex, v: Vertex) -> Result<bool> {
        if u == v {
            return Err(Error::invalid("maximal distance requires u != v"));
        }
        let duv = self.dist(u, v);
        Ok(g.neighbors(u).iter().all(|&w| self.dist(v, w) <= duv))
    }

    /// True iff `u` and `v` are maximally distant from each other.
    pub fn mutually_maximally_distant(&self, g: &Graph, u: Vertex, v: Vertex) -> Result<bool> {
        Ok(self.is_maximally_distant(g, u, v)? && self.is_maximally_distant(g, v, u)?)
    }

    /// True iff the subgraph induced by `s` is connected and preserves all
    /// pairwise distances of the host graph. The empty set is vacuously
    /// isometric; a disconnected induced subgraph is reported as `false`.
    pub fn is_isometric_subset(&self, g: &Graph, s: &VertexSet) -> bool {
        let k = s.len();
        if k <= 1 {
            return true;
        }
        // BFS inside the induced subgraph from each member; positions are
        // indices into the sorted member list.
        let members = s.as_slice();
        let pos = |v: Vertex| members.binary_search(&v).ok();
        let mut inner = vec![UNREACHED; k];
        let mut queue = VecDeque::new();
        for start in 0..k {
            inner.iter_mut().for_each(|d| *d = UNREACHED);
            inner[start] = 0;
            queue.clear();
            queue.push_back(start);
            while let Some(i) = queue.pop_front() {
                let di = inner[i];
                for &w in g.neighbors(members[i]) {
                    if let Some(j) = pos(w) {
                        if inner[j] == UNREACHED {
                            inner[j] = di + 1;
                            queue.push_back(j);
                        }
                    }
                }
            }
            for j in 0..k {
                if inner[j] != self.dist(members[start], members[j]) {
                    return false; // unreachable (disconnected) or longer
                }
            }
        }
        true
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DistanceMatrix(n={}, diameter={})", self.n, self.diameter)
    }
}
