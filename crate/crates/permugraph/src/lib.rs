//! Finite groups as Cayley tables, permutability graphs of cyclic subgroups,
//! exact graph-property recognition, and a verification harness that checks
//! the classification statements over a generated corpus of groups.
//!
//! The central object is `Γ_c(G)`: the graph whose vertices are the proper
//! nontrivial cyclic subgroups of a finite group `G`, with an edge between
//! `H` and `K` whenever `HK = KH` as sets. The crate builds these graphs
//! exactly, decides a catalog of graph properties (completeness, girth,
//! diameter, planarity, ...), and mechanically verifies which groups realize
//! which graphs.

pub mod analysis;
pub mod arith;
pub mod error;
pub mod graph;
pub mod group;
pub mod harness;
pub mod perm;
pub mod permgraph;
pub mod subgroup;

pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{GroupSpec, GroupTable, DEFAULT_MAX_ORDER};
pub use perm::Permutation;
pub use permgraph::{build_gamma_all, build_gamma_c, universal_vertices, PermGraph};
pub use subgroup::{cyclic_subgroups, CyclicCatalog, SubgroupSet};
