//! Certifying computation of the forest-minor / path-width dichotomy: for a
//! graph `G` and a forest `F`, produce either a path-decomposition of `G` of
//! width at most `|F| - 2` or a model of `F` as a minor of `G`.
//!
//! Every certificate can be re-checked by [`verify`], which shares no code
//! with the construction beyond the graph type.

pub mod certificate;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod graph;
pub mod menger;
pub mod minors;
pub mod oracle;
pub mod pathwidth;
pub mod report;
pub mod separations;
pub mod vertex_set;

pub use certificate::verify;
pub use engine::{
    decide, decide_with, leaf_order, spanning_separation, spanning_separation_traced, Certificate,
    ChoiceMode, EngineConfig, EngineStats, Evidence, SpanningCertificate,
};
pub use error::{Error, Result};
pub use graph::{
    canonical_separation, generate, is_separation, parse_edge_list, parse_graph6, to_edge_list,
    to_graph6, Graph, GraphKind, Separation,
};
pub use menger::{max_disjoint_paths, truncate_to_boundary, DisjointPaths, VertexPath};
pub use minors::{
    complete_forest_to_tree, restrict_model, splice_model, validate_model, MinorModel,
};
pub use pathwidth::{
    constrained_pw_decide, pathwidth_bruteforce, pathwidth_exact, validate_decomposition,
    PathDecomposition,
};
pub use report::{ValidationReport, Violation};
pub use separations::{
    extends, find_maximal_w_good, good_from_disjoint_paths, is_w_good, GoodSeparation, Limits,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};
