//! Turán-type extremal graph theory workbench.
//!
//! Computes the quantities that appear in classical and spectral Turán
//! problems (edge and clique counts, adjacency / signless-Laplacian / `A_α`
//! spectral radii, the p-spectral radius, minimum degree, distance to the
//! Turán graph, and the number of edges to delete to make a graph
//! r-partite) and checks the associated inequalities, either on a single
//! graph or exhaustively over every small graph up to isomorphism.

pub mod combinatorics;
pub mod graph;
pub mod partition;
pub mod pspectral;
pub mod spectral;
pub mod verifier;

mod bits;
mod error;

pub use error::{Error, Result};
pub use graph::{FamilySpec, Graph};
