//! Galois invariants of the twisted modules `Z/n(-1)` and `M_d/nM_d(-1)` over `Q`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::{inverse_mod, legendre, prime_power, squarefree_part, to_i64, units_mod};
use crate::brauer::{geometric_brauer, BoundaryDescriptor, GeometricBrauer};
use crate::cohomology::{invariants_finite, FiniteGModule};
use crate::error::{Error, Result};
use crate::linalg::{mod_kernel, subgroup_structure_mod, FinAbGroup};

/// Whether `√d ∈ Q(ζ_n)` for a prime power `n` and squarefree `d ≠ 1`,
/// from the list of quadratic subfields of prime-power cyclotomic fields.
pub fn sqrt_in_cyclotomic(d: i64, p: u64, i: u32) -> bool {
    if p == 2 {
        match d {
            -1 => i >= 2,
            2 | -2 => i >= 3,
            _ => false,
        }
    } else {
        let p_star = if p % 4 == 1 { p as i64 } else { -(p as i64) };
        d == p_star
    }
}

/// `ε(t) = ±1` according to whether the automorphism `ζ ↦ ζ^t` of `Q(ζ_n)`
/// fixes `√d`, where `√d ∈ Q(ζ_n)`.
fn quadratic_character(d: i64, p: u64, t: u64) -> i64 {
    if p == 2 {
        let r = t % 8;
        let fixed = match d {
            -1 => t % 4 == 1,
            2 => r == 1 || r == 7,
            -2 => r == 1 || r == 3,
            _ => unreachable!("no other quadratic subfield"),
        };
        if fixed {
            1
        } else {
            -1
        }
    } else {
        legendre(t as i64, p)
    }
}

fn check_prime_power(n: u64) -> Result<(u64, u32)> {
    prime_power(n).ok_or(Error::BadModulus(n as i64))
}

/// Rank-one module `Z/n` on which `Gal(Q(ζ_n, √d)/Q)` acts by
/// `m ↦ ε(g)·t⁻¹·m`. Every group element is listed as a generator.
pub fn twist_module(d: i64, n: u64) -> Result<FiniteGModule> {
    let (p, i) = check_prime_power(n)?;
    let d = to_i64(&squarefree_part(&BigInt::from(d))?)?;
    let mut scalars = Vec::new();
    for t in units_mod(n) {
        let t_inv = inverse_mod(t as i64, n).expect("unit") as i64;
        if d == 1 {
            scalars.push(t_inv);
        } else if sqrt_in_cyclotomic(d, p, i) {
            scalars.push(quadratic_character(d, p, t) * t_inv);
        } else {
            scalars.push(t_inv);
            scalars.push(-t_inv);
        }
    }
    FiniteGModule::scalar(n, &scalars)
}

/// `(M_d/nM_d(-1))^{Gal}` over `Q`, for `n` a prime power and `d` a nonzero
/// integer (only its square class matters).
pub fn twist_invariants(d: i64, n: u64) -> Result<FinAbGroup> {
    Ok(invariants_finite(&twist_module(d, n)?))
}

/// `(Z/n(-1))^{Gal}` over `Q`: elements killed by every `t - 1`, `t` a unit.
pub fn qmodz_invariants(n: u64) -> Result<FinAbGroup> {
    if n < 2 {
        return Err(Error::BadModulus(n as i64));
    }
    let scalars: Vec<i64> = units_mod(n).iter().map(|&t| inverse_mod(t as i64, n).unwrap() as i64).collect();
    Ok(invariants_finite(&FiniteGModule::scalar(n, &scalars)?))
}

/// Invariants at `n` and `n·p`, which must agree.
fn stabilized(p: u64, n: u64, f: impl Fn(u64) -> Result<FinAbGroup>) -> Result<FinAbGroup> {
    let a = f(n)?;
    let b = f(n * p)?;
    if a != b {
        return Err(Error::StabilizationFailed { p: p as u32, at_n: a.to_string(), at_np: b.to_string() });
    }
    Ok(a)
}

/// Invariants of the whole directed system, assembled from the 2- and
/// 3-primary parts (checked to stabilize at `n = 4` and `n = 3`).
pub fn geometric_invariants(g: &GeometricBrauer) -> Result<FinAbGroup> {
    match *g {
        GeometricBrauer::Zero => Ok(FinAbGroup::trivial()),
        GeometricBrauer::FullTwist => {
            Ok(stabilized(2, 4, qmodz_invariants)?.direct_sum(&stabilized(3, 3, qmodz_invariants)?))
        }
        GeometricBrauer::DTwist(d) => {
            let f = |n| twist_invariants(d.value(), n);
            Ok(stabilized(2, 4, f)?.direct_sum(&stabilized(3, 3, f)?))
        }
    }
}

/// Upper bound for `Br(U)/Br₁(U)` from the boundary type: `Br(Ū)^{Gal}`.
pub fn transcendental_bound(b: &BoundaryDescriptor) -> Result<FinAbGroup> {
    geometric_invariants(&geometric_brauer(b))
}

/// Kernel of `(a, b, c) ↦ (c - b, a - c, b - a)` on `(Z/n)³`.
#[derive(Clone, Debug, Serialize)]
pub struct ResidueKernel {
    pub structure: FinAbGroup,
    /// Generators from the modular kernel computation.
    pub generators: Vec<Vec<i64>>,
    /// Whether every generator is a multiple of `(1, 1, 1)`.
    pub diagonal: bool,
}

pub fn residue_kernel_check(n: u64) -> Result<ResidueKernel> {
    if n < 2 {
        return Err(Error::BadModulus(n as i64));
    }
    let a = crate::linalg::int_matrix(&[&[0, -1, 1], &[1, 0, -1], &[-1, 1, 0]]);
    let nb = BigInt::from(n);
    let gens = mod_kernel(&a, &nb);
    let structure = subgroup_structure_mod(&gens, &nb, 3);
    let generators: Vec<Vec<i64>> =
        gens.iter().map(|v| v.iter().map(|x| to_i64(x).unwrap()).collect()).collect();
    let diagonal = generators.iter().all(|v| v[0] == v[1] && v[1] == v[2]);
    Ok(ResidueKernel { structure, generators, diagonal })
}
