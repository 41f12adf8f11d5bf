//! Inequality registry, exhaustive extremal searches, stability scans and
//! the acceptance suite built on them.

mod bounds;
mod extremal;
mod structure;
pub mod suite;

pub use bounds::{check, check_all, BoundId, BoundParams, BoundReport, Quantity, Status, FLOAT_TOL, OPTIMIZER_TOL};
pub use extremal::{
    a_alpha_extremal_search, extremal_search, free_classes, stability_scan, AlphaRecord, DeficitKind, ExtremalRecord,
    Objective, StabilityPoint,
};
pub use structure::{
    complete_multipartite_forms, is_clique_bound_extremal, is_complete_bipartite, is_turan, turan, without_isolated,
};
