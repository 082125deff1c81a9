//! Competition, competition-common-enemy, and niche graphs of digraphs,
//! with recognizers for the graph classes these operators produce on
//! semiorders and interval orders, constructive witnesses for the niche
//! classes, and an exhaustive small-n verification harness.

pub mod canon;
pub mod derived;
pub mod digraph;
pub mod doc;
pub mod error;
pub mod graph;
pub mod order;
pub mod recognize;
pub mod verify;
pub mod witness;

pub mod cli;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use derived::{cce, competition, niche};
pub use digraph::Digraph;
pub use graph::UndirectedGraph;
pub use order::{
    analyze_interval_rep, analyze_semiorder_rep, is_interval_order, is_semiorder,
    realize_interval, realize_semiorder, semiorder_to_interval, IntervalRep, SemiorderRep,
};
pub use recognize::{
    build_from_descriptor, classify_cce, classify_competition, classify_niche, decompose_gamma,
    ClassificationVerdict, CompetitionClassDescriptor, NicheClassDescriptor,
};
pub use witness::{niche_witness_interval, niche_witness_semiorder};
