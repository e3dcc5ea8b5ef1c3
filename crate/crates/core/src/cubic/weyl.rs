//! `W(E6)` as the group of permutations of the 27 lines induced by
//! isometries of the Picard lattice that fix the hyperplane class.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cohomology::LatticeGModule;
use crate::cubic::{lines27, tritangent_trios, DivClass, TritangentTrio, HYPERPLANE};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::perm::{PermGroup, Permutation};

pub fn class_vector(d: &DivClass) -> Vec<BigInt> {
    d.0.iter().map(|&x| BigInt::from(x)).collect()
}

fn vector_class(v: &[BigInt]) -> Option<DivClass> {
    let mut c = [0i64; 7];
    for (x, y) in c.iter_mut().zip(v) {
        *x = y.to_i64()?;
    }
    Some(DivClass(c))
}

/// Gram matrix `diag(1, -1, ..., -1)`.
pub fn intersection_form() -> IntMatrix {
    let mut d = vec![BigInt::from(-1); 7];
    d[0] = BigInt::from(1);
    IntMatrix::diagonal(&d)
}

/// Matrix with the given classes as columns (images of `ℓ, e₁, ..., e₆`).
fn matrix_from_images(images: &[DivClass; 7]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = images.iter().map(class_vector).collect();
    IntMatrix::from_columns(&cols, 7)
}

/// Reflection swapping `eᵢ` and `eᵢ₊₁` (`1 <= i <= 5`).
pub fn transposition_matrix(i: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(7);
    m.swap_columns(i, i + 1);
    m
}

/// Quadratic transformation based at the points 1, 2, 3:
/// `ℓ ↦ 2ℓ - e₁ - e₂ - e₃`, `e₁ ↦ ℓ - e₂ - e₃` (and cyclically), `e₄, e₅, e₆` fixed.
pub fn cremona_matrix() -> IntMatrix {
    matrix_from_images(&[
        DivClass([2, -1, -1, -1, 0, 0, 0]),
        DivClass([1, 0, -1, -1, 0, 0, 0]),
        DivClass([1, -1, 0, -1, 0, 0, 0]),
        DivClass([1, -1, -1, 0, 0, 0, 0]),
        DivClass::exceptional(4),
        DivClass::exceptional(5),
        DivClass::exceptional(6),
    ])
}

/// The Picard lattice of a smooth cubic surface with its line and trio
/// combinatorics and the `W(E6)` action.
#[derive(Clone, Debug)]
pub struct CubicLattice {
    lines: Vec<DivClass>,
    trios: Vec<TritangentTrio>,
    generator_matrices: Vec<IntMatrix>,
    weyl: PermGroup,
}

impl Default for CubicLattice {
    fn default() -> Self {
        Self::new()
    }
}

impl CubicLattice {
    pub fn new() -> Self {
        let lines = lines27();
        let trios = tritangent_trios();
        let mut generator_matrices: Vec<IntMatrix> = (1..=5).map(transposition_matrix).collect();
        generator_matrices.push(cremona_matrix());
        let mut lattice =
            Self { lines, trios, generator_matrices, weyl: PermGroup::trivial(27) };
        let perms = lattice
            .generator_matrices
            .iter()
            .map(|m| lattice.permutation_of(m).expect("Weyl generators permute the lines"))
            .collect();
        lattice.weyl = PermGroup::new(27, perms).unwrap();
        lattice
    }

    pub fn lines(&self) -> &[DivClass] {
        &self.lines
    }

    pub fn trios(&self) -> &[TritangentTrio] {
        &self.trios
    }

    /// `W(E6)` acting on the 27 lines; point `i` is `lines()[i]`.
    pub fn weyl_group(&self) -> &PermGroup {
        &self.weyl
    }

    pub fn generator_matrices(&self) -> &[IntMatrix] {
        &self.generator_matrices
    }

    pub fn line_index(&self, d: &DivClass) -> Option<usize> {
        self.lines.iter().position(|l| l == d)
    }

    /// Whether `m` preserves the intersection form and the hyperplane class.
    pub fn is_isometry(m: &IntMatrix) -> bool {
        let q = intersection_form();
        &(&m.transpose() * &q) * m == q && m.mul_vec(&class_vector(&HYPERPLANE)) == class_vector(&HYPERPLANE)
    }

    /// Permutation of the lines induced by a lattice isometry.
    pub fn permutation_of(&self, m: &IntMatrix) -> Result<Permutation> {
        if !Self::is_isometry(m) {
            return Err(Error::InconsistentPermutation("matrix is not an isometry fixing the hyperplane".into()));
        }
        let images = self
            .lines
            .iter()
            .map(|l| {
                let img = vector_class(&m.mul_vec(&class_vector(l)))
                    .and_then(|d| self.line_index(&d))
                    .ok_or_else(|| Error::InconsistentPermutation(format!("image of {l} is not a line")))?;
                Ok(img as u32)
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::from_images(images)
    }

    /// Lattice automorphism inducing the line permutation `g`, rebuilt from
    /// the images of `e₁, ..., e₆` and `ℓ = (ℓ - e₁ - e₂) + e₁ + e₂`.
    pub fn pic_action(&self, g: &Permutation) -> Result<IntMatrix> {
        if g.degree() != 27 {
            return Err(Error::InconsistentPermutation("permutation must act on 27 lines".into()));
        }
        let img = |d: DivClass| self.lines[g.apply(self.line_index(&d).unwrap())];
        let e: Vec<DivClass> = (1..=6).map(|i| img(DivClass::exceptional(i))).collect();
        let l12 = img(DivClass([1, -1, -1, 0, 0, 0, 0]));
        let ell = l12.add(&e[0]).add(&e[1]);
        let m = matrix_from_images(&[ell, e[0], e[1], e[2], e[3], e[4], e[5]]);
        for (i, l) in self.lines.iter().enumerate() {
            let expect = class_vector(&self.lines[g.apply(i)]);
            if m.mul_vec(&class_vector(l)) != expect {
                return Err(Error::InconsistentPermutation(format!(
                    "reconstructed matrix sends {l} elsewhere than {}",
                    self.lines[g.apply(i)]
                )));
            }
        }
        if !Self::is_isometry(&m) {
            return Err(Error::InconsistentPermutation("reconstructed matrix is not an isometry".into()));
        }
        Ok(m)
    }

    /// `Pic(X̄)` as a module over a group of line permutations.
    pub fn pic_module(&self, group: &PermGroup) -> Result<LatticeGModule> {
        let action = group.generators().iter().map(|g| self.pic_action(g)).collect::<Result<Vec<_>>>()?;
        LatticeGModule::new(group.clone(), action, 7)
    }

    /// Stabilizer of a trio in `W(E6)`.
    pub fn trio_stabilizer(&self, trio: &TritangentTrio) -> PermGroup {
        self.weyl.setwise_stabilizer(&trio.indices).expect("trio indices are valid points")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_isometries() {
        let lat = CubicLattice::new();
        for m in lat.generator_matrices() {
            assert!(CubicLattice::is_isometry(m));
        }
        let c = cremona_matrix();
        assert_eq!(&c * &c, IntMatrix::identity(7));
    }

    #[test]
    fn weyl_order() {
        let lat = CubicLattice::new();
        assert_eq!(lat.weyl_group().order(), 51840);
    }

    #[test]
    fn pic_action_examples() {
        let lat = CubicLattice::new();
        assert_eq!(lat.pic_action(&Permutation::identity(27)).unwrap(), IntMatrix::identity(7));
        let t = &lat.weyl_group().generators()[0];
        assert_eq!(lat.pic_action(t).unwrap(), transposition_matrix(1));
        let cr = &lat.weyl_group().generators()[5];
        let m = lat.pic_action(cr).unwrap();
        assert_eq!(m.column(0), class_vector(&DivClass([2, -1, -1, -1, 0, 0, 0])));
        assert!(cr.compose(cr).is_identity());
    }

    #[test]
    fn rejects_non_geometric_permutation() {
        let lat = CubicLattice::new();
        // swapping two skew lines and nothing else is not induced by an isometry
        let p = Permutation::from_cycles(27, &[&[0, 1]]).unwrap();
        assert!(matches!(lat.pic_action(&p), Err(Error::InconsistentPermutation(_))));
    }
}
