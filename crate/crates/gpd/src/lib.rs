//! Exact computation of general position numbers with a bounded geodesic
//! length: the largest vertex sets containing no three members on a common
//! shortest path of length at most `k`.
//!
//! The crate bundles everything needed to study the invariant on finite
//! connected graphs:
//!
//! - [`graph`] and [`dist`] — compact graph storage and all-pairs BFS
//!   distances (parallel across sources with the `parallel` feature);
//! - [`verify`] — two independent membership checkers, one straight from
//!   the defining triple condition and one through the clique-decomposition
//!   characterization;
//! - [`solve`] — exhaustive and branch-and-bound maximizers with canonical
//!   witnesses, plus dissociation, independence, and clique numbers;
//! - [`closed_form`] — exact formulas on paths, cycles, and the
//!   clique-with-tail gadgets, with the diameter lower bound;
//! - [`derived`] — strong k-resolving graphs, complements, true twins;
//! - [`generators`] — named families and seeded random connected graphs;
//! - [`edgelist`] — a plain-text interchange format.
//!
//! The `parallel` feature (on by default) enables a rayon-based search and
//! BFS fan-out; disabling it leaves identical results computed serially.
//! Solver results are canonical — value and witness never depend on worker
//! count — so any two runs of the same query agree bit for bit.

pub mod closed_form;
pub mod derived;
pub mod dist;
pub mod edgelist;
pub mod error;
pub mod generators;
pub mod graph;
pub mod solve;
pub mod verify;

pub use dist::{all_pairs_distances, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use solve::{
    clique_number, dissociation_number, gpd_branch_and_bound, gpd_bruteforce, gpd_greedy,
    independence_number, three_path_vertex_cover_number, Method, SolveOptions, SolveReport,
};
pub use verify::{is_gdp_by_characterization, is_gdp_by_definition, is_general_position};
