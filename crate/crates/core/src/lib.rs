//! Parameterized algorithms for weakly closed graphs.
//!
//! The crate computes closure-type parameters (closure number `c`,
//! degeneracy `d`, weak closure `γ`), enumerates maximal dense subgraphs
//! (cliques, s-plexes, s-defective cliques, non-induced bicliques), kernelizes
//! monotone subgraph problems, and solves biclique and domination problems by
//! branching along a closure ordering. Every solver has a brute-force
//! counterpart in [`oracle`] for cross-checking on small graphs.

pub mod answer;
pub mod biclique;
pub mod cliques;
pub mod closure;
pub mod dense;
pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod kernel;
pub mod oracle;
pub mod predicates;
pub mod subset_sum;
pub mod vertex_set;
mod view;

pub use answer::{BicliqueWitness, ProblemAnswer, Witness};
pub use closure::{
    c_closure, closure_of_vertex, closure_ordering, degeneracy_ordering, graph_stats, weak_closure,
    ClosureOrdering, DegeneracyOrdering, GraphStats,
};
pub use error::{Error, Result};
pub use graph::{Graph, ParseReport};
pub use vertex_set::VertexSet;
