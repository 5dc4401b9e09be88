//! Partition a graph into a fixed number of parts, each inducing small
//! maximum degree, certified for graphs that exclude a clique minor.
//!
//! For a parameter `t`, every graph with no K_{t+1} minor admits a partition
//! of its vertices into `t` parts such that inside each part every vertex has
//! fewer than `s` neighbors, where `s` is derived from `t` by the calculus in
//! [`params`]. The partition is computed constructively:
//!
//! 1. [`engine::reduce`] peels the graph down to nothing, at each step either
//!    removing a vertex of degree `< t` or an edge whose two endpoints both
//!    have degree `< s`, and records every removal.
//! 2. [`engine::replay`] walks the record backwards, assigning each restored
//!    vertex to the first part that contains none of its removal-time
//!    neighbors.
//!
//! If peeling ever gets stuck, the surviving subgraph — and hence the input —
//! contains a K_{t+1} minor whenever the parameters were valid, so the
//! failure doubles as a certificate hint. The engine never trusts the
//! caller's promise: a produced partition always satisfies the degree bound,
//! checkable with [`engine::verify_partition`].
//!
//! Supporting modules: [`graph`] (simple undirected graphs with stable ids
//! under deletion), [`edgelist`] (text format), [`generate`] (deterministic
//! seeded families: forests, k-trees, grids, binomial random graphs, and the
//! layered family that makes the degree bound tight), [`extremal`] (edge
//! density checks used to justify parameter choices), and [`minor`] (exact
//! clique-minor search and an exhaustive minimum-defect oracle, both desk
//! scale).
//!
//! The crate is `no_std` + `alloc`; all algorithms are deterministic, with
//! randomness only where a seed is an explicit argument.
//!
//! ```
//! use defect_core::{defective_coloring, ColoringConfig, ColoringOutcome};
//! use defect_core::generate::gen_grid;
//!
//! let g = gen_grid(8, 5).unwrap();
//! match defective_coloring(&g, 4, &ColoringConfig::default()).unwrap() {
//!     ColoringOutcome::Colored { partition, params, .. } => {
//!         assert_eq!(partition.parts().len(), 4);
//!         assert!(partition.max_induced_degree(&g) < params.s as usize);
//!     }
//!     ColoringOutcome::Stuck { .. } => unreachable!("grids are planar"),
//! }
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod edgelist;
pub mod engine;
pub mod extremal;
pub mod generate;
pub mod graph;
pub mod minor;
pub mod params;

pub use engine::{
    defective_coloring, verify_partition, ColoringConfig, ColoringOutcome, Partition,
    ReductionStep, ReductionTrace,
};
pub use graph::{Graph, VertexId};
pub use params::Params;
