//! Lattice operations on integer matrices: Hermite bases, kernels,
//! cokernels and quotients of nested lattices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{snf, FinAbGroup, IntMatrix, Matrix};
use crate::scalar::IntScalar;

/// Row-style Hermite normal form of the lattice spanned by `generators`
/// (each of length `dim`). Returns a basis in upper echelon form with
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_basis<T: IntScalar>(generators: &[Vec<T>], dim: usize) -> Vec<Vec<T>> {
    let mut a = Matrix::from_rows(generators, dim);
    let k = a.nrows();
    let mut row = 0;
    for col in 0..dim {
        if row == k {
            break;
        }
        loop {
            let mut best: Option<(usize, T)> = None;
            for i in row..k {
                let x = a[(i, col)].abs();
                if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| x < *b) {
                    best = Some((i, x));
                }
            }
            let Some((pi, _)) = best else { break };
            a.swap_rows(row, pi);
            let mut done = true;
            for i in row + 1..k {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let q = a[(i, col)].clone() / a[(row, col)].clone();
                a.add_row_multiple(i, row, &(T::zero() - q));
                if !a[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(row, col)].is_zero() {
            continue;
        }
        if a[(row, col)].is_negative() {
            a.negate_row(row);
        }
        let p = a[(row, col)].clone();
        for i in 0..row {
            let q = a[(i, col)].div_floor(&p);
            if !q.is_zero() {
                a.add_row_multiple(i, row, &(T::zero() - q));
            }
        }
        row += 1;
    }
    (0..row).map(|i| a.row(i)).collect()
}

/// Coordinates of `v` with respect to an echelon basis from [`hermite_basis`],
/// or `None` when `v` is not in the lattice.
pub fn echelon_coordinates<T: IntScalar>(basis: &[Vec<T>], v: &[T]) -> Option<Vec<T>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for b in basis {
        let col = b.iter().position(|x| !x.is_zero())?;
        let (q, r) = rest[col].div_rem(&b[col]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in rest.iter_mut().zip(b) {
            *x = x.clone() - q.clone() * y.clone();
        }
        coords.push(q);
    }
    rest.iter().all(|x| x.is_zero()).then_some(coords)
}

/// Columns form a basis of the integer kernel `{x : A x = 0}`; the span is
/// saturated (primitive).
pub fn kernel_basis<T: IntScalar>(a: &Matrix<T>) -> Matrix<T> {
    let f = snf(a);
    let r = f.rank();
    f.v.select_columns(r..a.ncols())
}

/// Isomorphism type of `Z^rows / (column span of A)`.
pub fn cokernel_structure(a: &IntMatrix) -> FinAbGroup {
    let f = snf(a);
    FinAbGroup::from_smith_diagonal(a.nrows(), &f.diagonal())
}

/// Generators of `{x mod n : A x = 0 mod n}`, each reduced into `[0, n)`.
/// Zero and duplicate generators are dropped.
pub fn mod_kernel(a: &IntMatrix, n: &BigInt) -> Vec<Vec<BigInt>> {
    assert!(*n > BigInt::one(), "modulus must be at least 2");
    let (m, c) = (a.nrows(), a.ncols());
    let block = a.hstack(&Matrix::identity(m).scale(n));
    let k = kernel_basis(&block);
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..k.ncols() {
        let v: Vec<BigInt> = (0..c).map(|i| modulo(&k[(i, j)], n)).collect();
        if v.iter().all(Zero::is_zero) || out.contains(&v) {
            continue;
        }
        out.push(v);
    }
    out
}

/// The full lattice `{x in Z^c : A x = 0 mod n}` (it contains `n Z^c`), as a Hermite basis.
pub fn mod_kernel_lattice(a: &IntMatrix, n: &BigInt) -> Vec<Vec<BigInt>> {
    let c = a.ncols();
    let mut gens = mod_kernel(a, n);
    gens.extend(scaled_identity(c, n));
    hermite_basis(&gens, c)
}

pub fn scaled_identity(dim: usize, n: &BigInt) -> Vec<Vec<BigInt>> {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { n.clone() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn modulo(x: &BigInt, n: &BigInt) -> BigInt {
    let r = x % n;
    if r < BigInt::zero() {
        r + n
    } else {
        r
    }
}

/// Isomorphism type of `L / K` for lattices `K ⊆ L ⊆ Z^dim` given by
/// generators. Returns `None` when `K` is not contained in `L`.
pub fn lattice_quotient(
    super_gens: &[Vec<BigInt>],
    sub_gens: &[Vec<BigInt>],
    dim: usize,
) -> Option<FinAbGroup> {
    let basis = hermite_basis(super_gens, dim);
    let mut coords = Vec::with_capacity(sub_gens.len());
    for v in sub_gens {
        coords.push(echelon_coordinates(&basis, v)?);
    }
    let rank = basis.len();
    // relations as columns of a rank x #sub matrix
    let rel = Matrix::from_columns(&coords, rank);
    Some(cokernel_structure(&rel))
}

/// Isomorphism type of the subgroup of `(Z/n)^dim` generated by `gens`.
pub fn subgroup_structure_mod(gens: &[Vec<BigInt>], n: &BigInt, dim: usize) -> FinAbGroup {
    let mut all = gens.to_vec();
    let nz = scaled_identity(dim, n);
    all.extend(nz.iter().cloned());
    lattice_quotient(&all, &nz, dim).expect("n Z^dim lies in the generated lattice")
}
