//! Finite simple undirected graphs with contiguous `0..n` vertex indices,
//! plus the [`VertexSet`] type used throughout the crate.

use crate::error::{Error, Result};

/// Vertex index into a [`Graph`].
pub type Vertex = u32;

/// An immutable simple undirected graph.
///
/// Vertices are `0..n`. Parallel edges in the input collapse to one edge;
/// self-loops are rejected. Connectivity is *not* required here — only the
/// distance matrix insists on it.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Endpoints must satisfy `u != v` and `u, v < n`. Duplicate edges
    /// (in either orientation) are collapsed.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::invalid(format!(
                        "edge endpoint {w} out of range for {n} vertices"
                    )));
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
            m += row.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.adj[u as usize]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// All vertices, ascending.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.n() as Vertex
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// True iff the graph is connected (single vertex counts as connected;
    /// the empty graph does not).
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0 as Vertex];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m())
    }
}

/// A set of vertices with set semantics: sorted, deduplicated indices.
///
/// Construction sorts and deduplicates; membership of indices in a concrete
/// graph's range is checked by the operations that pair a set with a graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn new(mut members: Vec<Vertex>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.members
    }

    /// True iff every member is a vertex of a graph on `n` vertices.
    pub fn in_range(&self, n: usize) -> bool {
        self.members.last().map_or(true, |&v| (v as usize) < n)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> VertexSet {
        VertexSet::new(v)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> VertexSet {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
