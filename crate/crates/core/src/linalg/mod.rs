//! Exact integer linear algebra.

mod abelian;
mod lattice;
mod matrix;
mod snf;

pub use abelian::FinAbGroup;
pub use lattice::{
    cokernel_structure, echelon_coordinates, hermite_basis, kernel_basis, lattice_quotient,
    mod_kernel, mod_kernel_lattice, modulo, scaled_identity, subgroup_structure_mod,
};
pub use matrix::Matrix;
pub use snf::{snf, SmithForm};

use num_bigint::BigInt;

pub type IntMatrix = Matrix<BigInt>;

/// Inverse of a unimodular integer matrix.
///
/// Panics if `m` is not unimodular.
pub fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    use num_rational::BigRational;
    use num_traits::One;
    let q = m.map(|x| BigRational::from_integer(x.clone()));
    let inv = q.inverse_over_field().expect("matrix is singular");
    inv.map(|x| {
        assert!(x.denom().is_one(), "matrix is not unimodular");
        x.numer().clone()
    })
}

/// Shorthand for building small integer matrices in code and tests.
pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    let cols = rows.first().map_or(0, |r| r.len());
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Matrix::from_rows(&rows, cols)
}
