//! Graph representations and small-graph utilities.

mod cliques;
mod digraph;
mod io;
mod iso;
mod scc;
mod simple;
mod vertex_set;

pub use cliques::enumerate_cliques;
pub use digraph::MultiDigraph;
pub use io::{parse_edge_list, parse_graph6, parse_simple_edge_list, to_edge_list, to_graph6, to_simple_edge_list};
pub use iso::{
    are_isomorphic, are_isomorphic_with_cap, canonical_form, canonical_form_with_cap, find_isomorphism,
    DEFAULT_ISO_CAP,
};
pub use scc::strongly_connected_components;
pub use simple::{induced_subgraph, SimpleGraph};
pub use vertex_set::VertexSet;
