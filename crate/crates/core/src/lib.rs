//! Replacement shortest paths on undirected, positively weighted graphs.
//!
//! Given a shortest `s`-`t` path `v_0 = s, ..., v_l = t`, this crate computes for
//! every path edge `e_i = (v_{i-1}, v_i)` the shortest `s`-`t` path avoiding `e_i`,
//! and for every internal path vertex `v_i` the shortest path avoiding `v_i`.
//! After the two shortest path trees (rooted at `s` and `t`) are built, the
//! remaining work is `O(m + l^2)`:
//!
//! - [`spt`]: Dijkstra trees, path extraction and the per-vertex path labels
//! - [`dag`]: the triangular DAG over label pairs whose sweep yields swap edges
//! - [`node`]: the contracted forest graph giving distances that avoid `v_i`
//! - [`pipeline`]: runs all stages once and answers both failure kinds
//! - [`oracle`]: brute-force recomputation used as ground truth
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod counters;
pub mod dag;
pub mod graph;
pub mod node;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod spt;

pub use counters::WorkCounters;
pub use dag::{CandidateEdge, RspDag, Sweep};
pub use graph::{Edge, EdgeId, Graph, GraphBuilder, GraphError, VertexId, WeightedAdjacency};
pub use node::ContractedGraph;
pub use oracle::{
    brute_force, compare_all, oracle_edge, oracle_node, Comparison, OracleError, OracleReport,
};
pub use pipeline::{Mode, ReplacementPaths, SolveError};
pub use report::{FailedElement, ReplacementReport, SwapEdge, SwapRoute};
pub use spt::{PathLabeling, ShortestPath, ShortestPathTree};
