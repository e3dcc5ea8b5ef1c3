//! End-to-end computation of `Br(U)/Br₁(U)` for the complement of three
//! lines built from a rational cubic `F` and a shift `a`.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::brauer::{transcendental_bound, BoundaryDescriptor, GaloisType};
use crate::cubic::DivClass;
use crate::error::{Error, Result};
use crate::linalg::FinAbGroup;
use crate::rational::eckardt::{eckardt_concurrent_with_cap, Concurrency, EckardtCheck, DEFAULT_PRECISION_CAP};
use crate::rational::{cubic_galois_type, general_position, GeneralPosition, QPoly};

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub polynomial: String,
    pub coefficients: String,
    pub a: String,
    pub galois: GaloisType,
    pub general_position: GeneralPosition,
    pub eckardt: EckardtCheck,
    pub brauer: FinAbGroup,
}

fn show(a: &BigRational) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        a.to_string()
    }
}

/// Invariants of `Br(Ū)` for the Galois type, which equal `Br(U)/Br₁(U)`
/// for this construction.
pub fn brauer_for_galois_type(g: GaloisType) -> Result<FinAbGroup> {
    transcendental_bound(&BoundaryDescriptor::ThreeLines { galois: g, eckardt: false })
}

pub fn example_report_with_cap(f: &QPoly, a: &BigRational, cap_bits: u32) -> Result<ExampleReport> {
    let galois = cubic_galois_type(f)?;
    let gp = general_position(f, a)?;
    if !gp.passed() {
        return Err(Error::GeneralPositionFailed(gp.failures().join("; ")));
    }
    let eckardt = eckardt_concurrent_with_cap(f, a, cap_bits)?;
    match eckardt.verdict {
        Concurrency::Yes => return Err(Error::EckardtPoint),
        Concurrency::Indeterminate => return Err(Error::Indeterminate(eckardt.bits)),
        Concurrency::No => {}
    }
    Ok(ExampleReport {
        polynomial: f.to_string(),
        coefficients: f.to_csv(),
        a: show(a),
        galois,
        general_position: gp,
        eckardt,
        brauer: brauer_for_galois_type(galois)?,
    })
}

pub fn example_report(f: &QPoly, a: &BigRational) -> Result<ExampleReport> {
    example_report_with_cap(f, a, DEFAULT_PRECISION_CAP)
}

pub fn example_brauer(f: &QPoly, a: &BigRational) -> Result<FinAbGroup> {
    Ok(example_report(f, a)?.brauer)
}

/// Tries `a = 1, ..., bound` and returns the report for the smallest `a`
/// passing general position and the Eckardt check.
pub fn search_shift(f: &QPoly, bound: u32, cap_bits: u32) -> Result<ExampleReport> {
    let results: Vec<Result<ExampleReport>> = (1..=bound)
        .into_par_iter()
        .map(|a| example_report_with_cap(f, &BigRational::from_integer(BigInt::from(a)), cap_bits))
        .collect();
    let mut last = None;
    for r in results {
        match r {
            Ok(rep) => return Ok(rep),
            // errors not depending on a stop the search
            Err(e @ (Error::NotSeparable | Error::WrongDegree { .. } | Error::TooLarge { .. })) => return Err(e),
            Err(e) => last = Some(e),
        }
    }
    Err(Error::GeneralPositionFailed(match last {
        Some(e) => format!("no a in 1..={bound} works; last failure: {e}"),
        None => format!("no a in 1..={bound} to try"),
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct PrincipalityReport {
    pub l1: DivClass,
    pub l2: DivClass,
    pub l3: DivClass,
    pub d1: DivClass,
    pub d2: DivClass,
    pub principal: bool,
}

/// The three line classes `(3,1,0,0,1,0,0)`, `(3,0,1,0,0,1,0)`, `(3,0,0,1,0,0,1)`
/// and the divisors `D₁ = ℓ₁ - ℓ₂ - e₁ - e₄ + e₂ + e₅`,
/// `D₂ = ℓ₂ - ℓ₃ - e₂ - e₅ + e₃ + e₆`, which vanish in `Z⁷`.
pub fn principality_check() -> PrincipalityReport {
    let l1 = DivClass([3, 1, 0, 0, 1, 0, 0]);
    let l2 = DivClass([3, 0, 1, 0, 0, 1, 0]);
    let l3 = DivClass([3, 0, 0, 1, 0, 0, 1]);
    let e = DivClass::exceptional;
    let d1 = l1.sub(&l2).sub(&e(1)).sub(&e(4)).add(&e(2)).add(&e(5));
    let d2 = l2.sub(&l3).sub(&e(2)).sub(&e(5)).add(&e(3)).add(&e(6));
    PrincipalityReport { l1, l2, l3, d1, d2, principal: d1.is_zero() && d2.is_zero() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_vanish() {
        let r = principality_check();
        assert!(r.principal);
        assert!(r.d1.add(&r.d2).is_zero());
    }

    #[test]
    fn first_example() {
        let f = QPoly::from_integers(&[-2, -2, 1, 1]);
        let rep = search_shift(&f, 20, DEFAULT_PRECISION_CAP).unwrap();
        assert_eq!(rep.brauer, FinAbGroup::cyclic(2));
    }

    #[test]
    fn failing_inputs() {
        let f = QPoly::from_integers(&[0, 0, 0, 1]);
        assert_eq!(search_shift(&f, 5, 256).unwrap_err(), Error::NotSeparable);
        let g = QPoly::from_integers(&[-2, -2, 1, 1]);
        let a = BigRational::new(2.into(), 3.into());
        assert!(matches!(example_report(&g, &a), Err(Error::GeneralPositionFailed(_))));
    }
}
