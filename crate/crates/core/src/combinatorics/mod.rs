//! Clique counts, subgraph containment, chromatic structure, canonical
//! forms, exhaustive small-graph enumeration and saturation.

pub mod canon;
pub mod chromatic;
pub mod cliques;
pub mod enumerate;
pub mod saturation;
pub mod subgraph;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use chromatic::{chromatic_info, chromatic_number, is_colorable, ChromaticInfo};
pub use cliques::{clique_number, clique_profile, has_clique, max_clique, turan_clique_closed_form, CliqueProfile};
pub use enumerate::{all_graphs, enumerate_corpus, enumerate_free, enumerate_graphs};
pub use saturation::is_saturated;
pub use subgraph::{contains_subgraph, Containment};
