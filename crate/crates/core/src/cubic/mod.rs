//! The Picard lattice of a smooth cubic surface.

mod divclass;
mod quotient;
mod weyl;

pub use divclass::{line_index, lines27, tritangent_trios, DivClass, TritangentTrio, HYPERPLANE, LINE_CLASS};
pub use quotient::{
    boundary_invariant_factors, torsion_free_line_conic, LineConicReport, LineConicVerdict,
    QuotientLattice,
};
pub use weyl::{class_vector, cremona_matrix, intersection_form, transposition_matrix, CubicLattice};
