//! Boundary quotients `Pic(Ū) = Pic(X̄) / <boundary components>`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::cohomology::LatticeGModule;
use crate::cubic::weyl::class_vector;
use crate::cubic::{CubicLattice, DivClass, TritangentTrio, HYPERPLANE, LINE_CLASS};
use crate::error::{Error, Result};
use crate::linalg::{snf, unimodular_inverse, IntMatrix};
use crate::perm::PermGroup;

/// `Z⁷ / span(boundary)` with a chosen splitting and the induced action.
#[derive(Clone, Debug)]
pub struct QuotientLattice {
    /// Boundary classes as columns (`7 x k`).
    pub boundary: IntMatrix,
    /// Quotient map `Z⁷ → Z^(7-k)`.
    pub projection: IntMatrix,
    /// Section of the projection, `projection * section = I`.
    pub section: IntMatrix,
    /// Induced action, one matrix per group generator.
    pub action: Vec<IntMatrix>,
    group: PermGroup,
}

impl QuotientLattice {
    pub fn rank(&self) -> usize {
        self.projection.nrows()
    }

    pub fn module(&self) -> Result<LatticeGModule> {
        LatticeGModule::new(self.group.clone(), self.action.clone(), self.rank())
    }
}

fn boundary_matrix(classes: &[DivClass]) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = classes.iter().map(class_vector).collect();
    IntMatrix::from_columns(&cols, 7)
}

/// Smith diagonal of the boundary matrix whose columns are `classes`.
pub fn boundary_invariant_factors(classes: &[DivClass]) -> Vec<BigInt> {
    snf(&boundary_matrix(classes)).diagonal()
}

/// Splits `Z⁷ → Z⁷/span(classes)`; fails if the quotient has torsion.
fn split_quotient(classes: &[DivClass]) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    let b = boundary_matrix(classes);
    let f = snf(&b);
    let k = classes.len();
    let diag = f.diagonal();
    if diag.iter().any(|d| !d.is_one()) {
        return Err(Error::TorsionFound(diag.iter().map(ToString::to_string).collect()));
    }
    let u_inv = unimodular_inverse(&f.u);
    let projection = f.u.select_rows(k..7);
    let section = u_inv.select_columns(k..7);
    Ok((b, projection, section))
}

impl CubicLattice {
    /// `Pic(Ū)` for the complement of a trio, with the action of a group
    /// of line permutations stabilizing the trio.
    pub fn quotient_by_trio(&self, trio: &TritangentTrio, group: &PermGroup) -> Result<QuotientLattice> {
        if !group.stabilizes_set(&trio.indices) {
            return Err(Error::NotStabilized);
        }
        let (boundary, projection, section) = split_quotient(&trio.classes)?;
        let mut action = Vec::with_capacity(group.generators().len());
        for g in group.generators() {
            let m = self.pic_action(g)?;
            // the boundary span is preserved, so projection * m factors through the quotient
            debug_assert!((&(&projection * &m) * &boundary).is_zero());
            action.push(&(&projection * &m) * &section);
        }
        Ok(QuotientLattice { boundary, projection, section, action, group: group.clone() })
    }
}

/// Outcome of the torsion check for one boundary `line + residual conic`.
#[derive(Clone, Debug, Serialize)]
pub struct LineConicVerdict {
    pub line: DivClass,
    pub conic: DivClass,
    pub invariant_factors: Vec<i64>,
    pub torsion_free: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LineConicReport {
    /// One verdict per line class.
    pub verdicts: Vec<LineConicVerdict>,
    /// The pair `ℓ, 2ℓ - Σ eᵢ`, reported separately: `ℓ` is not a line on the surface.
    pub plane_line_case: LineConicVerdict,
}

impl LineConicReport {
    pub fn all_torsion_free(&self) -> bool {
        self.verdicts.iter().all(|v| v.torsion_free)
    }
}

fn line_conic_verdict(line: DivClass) -> LineConicVerdict {
    let conic = HYPERPLANE.sub(&line);
    let diag = boundary_invariant_factors(&[line, conic]);
    let invariant_factors: Vec<i64> =
        diag.iter().map(|d| i64::try_from(d).expect("small invariant factor")).collect();
    let torsion_free = invariant_factors.iter().all(|&d| d == 1);
    LineConicVerdict { line, conic, invariant_factors, torsion_free }
}

/// For each line `L`, whether `Z⁷ / span(L, H - L)` is torsion-free.
pub fn torsion_free_line_conic() -> LineConicReport {
    let verdicts = crate::cubic::lines27().into_iter().map(line_conic_verdict).collect();
    LineConicReport { verdicts, plane_line_case: line_conic_verdict(LINE_CLASS) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn standard_trio_quotient() {
        let lat = CubicLattice::new();
        let trio = lat
            .trios()
            .iter()
            .find(|t| t.classes.contains(&DivClass([1, -1, -1, 0, 0, 0, 0]))
                && t.classes.contains(&DivClass([1, 0, 0, -1, -1, 0, 0])))
            .unwrap();
        assert_eq!(boundary_invariant_factors(&trio.classes), vec![BigInt::from(1); 3]);
        let q = lat.quotient_by_trio(trio, &PermGroup::trivial(27)).unwrap();
        assert_eq!(q.rank(), 4);
        assert!(q.action.is_empty());
        assert_eq!(&q.projection * &q.section, IntMatrix::identity(4));
        assert!((&q.projection * &q.boundary).is_zero());
        let stab = lat.trio_stabilizer(trio);
        let q = lat.quotient_by_trio(trio, &stab).unwrap();
        for a in &q.action {
            assert_eq!(a.determinant().abs(), BigInt::from(1));
        }
        q.module().unwrap().element_matrices().unwrap();
    }

    #[test]
    fn non_stabilizing_group_rejected() {
        let lat = CubicLattice::new();
        let trio = &lat.trios()[0];
        assert_eq!(lat.quotient_by_trio(trio, lat.weyl_group()).unwrap_err(), Error::NotStabilized);
    }

    #[test]
    fn line_conic_examples() {
        let r = torsion_free_line_conic();
        let e1 = r.verdicts.iter().find(|v| v.line == DivClass::exceptional(1)).unwrap();
        assert!(e1.torsion_free);
        let l12 = r.verdicts.iter().find(|v| v.line == DivClass([1, -1, -1, 0, 0, 0, 0])).unwrap();
        assert!(l12.torsion_free);
        assert!(r.all_torsion_free());
        assert_eq!(r.verdicts.len(), 27);
    }
}
