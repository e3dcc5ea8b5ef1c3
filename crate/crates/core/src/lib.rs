//! Brauer groups of affine cubic surfaces: the Picard lattice of a cubic
//! surface with its `W(E6)` action, Galois cohomology of lattices,
//! classifiers for the algebraic and transcendental parts, and explicit
//! rational examples.

pub mod arith;
pub mod brauer;
pub mod checks;
pub mod cohomology;
pub mod cubic;
pub mod error;
pub mod linalg;
pub mod perm;
pub mod rational;
pub mod scalar;

pub use brauer::{BoundaryDescriptor, GaloisType, GeometricBrauer, QuadraticClass, TablePair};
pub use cohomology::{FiniteGModule, LatticeGModule};
pub use cubic::{CubicLattice, DivClass, TritangentTrio};
pub use error::{Error, Result};
pub use linalg::{FinAbGroup, Matrix};
pub use perm::{PermGroup, Permutation};
pub use rational::Poly;

pub use linalg::IntMatrix;
pub use rational::{QMatrix, QPoly};
