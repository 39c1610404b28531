//! Hike monoids of multidigraphs.
//!
//! A *hike* is a word in the simple cycles of a multidigraph `G`, taken up to
//! commuting vertex-disjoint cycles. The hike monoid is therefore a trace
//! monoid, fully described by its dependency graph `φ(G)`: one vertex per
//! simple cycle, an edge whenever two cycles share a vertex of `G`.
//!
//! The crate computes `φ(G)`, decides whether a given simple graph arises as
//! some `φ(G)` (and builds `G` when it does), implements the transformations of
//! `G` that leave the hike monoid unchanged, and evaluates invariants of it.

pub mod cycles;
mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod realize;
pub mod transforms;

pub use cycles::{build_cycle_catalog, cycle_count_for_set, phi, phi_of_disjoint_union, CycleCatalog, PhiResult};
pub use error::{Error, Result};
pub use graph::{
    are_isomorphic, canonical_form, enumerate_cliques, induced_subgraph, parse_edge_list, parse_graph6,
    strongly_connected_components, MultiDigraph, SimpleGraph, VertexSet,
};
pub use realize::{realize, Budgets, Verdict};
