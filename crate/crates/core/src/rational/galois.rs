//! Galois type of a separable rational cubic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::squarefree_part;
use crate::brauer::{GaloisType, QuadraticClass};
use crate::error::{Error, Result};
use crate::rational::QPoly;

const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let m = n.to_u64().filter(|&m| m <= DIVISOR_SEARCH_LIMIT).ok_or(Error::TooLarge {
        what: "coefficient for the rational root search",
        bound: DIVISOR_SEARCH_LIMIT as usize,
    })?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(BigInt::from(d));
            if d * d != m {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    out.sort();
    Ok(out)
}

/// Distinct rational roots, ascending, by the rational root theorem.
pub fn rational_roots(f: &QPoly) -> Result<Vec<BigRational>> {
    let mut roots = Vec::new();
    let mut ints = f.primitive_integer();
    // strip factors of t first
    while ints.len() > 1 && ints[0].is_zero() {
        ints.remove(0);
        if !roots.contains(&BigRational::zero()) {
            roots.push(BigRational::zero());
        }
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let num = positive_divisors(&ints[0])?;
    let den = positive_divisors(ints.last().unwrap())?;
    for p in &num {
        for q in &den {
            if !p.gcd(q).is_one() {
                continue;
            }
            for s in [BigRational::new(p.clone(), q.clone()), BigRational::new(-p.clone(), q.clone())] {
                if f.eval(&s).is_zero() && !roots.contains(&s) {
                    roots.push(s);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// Squarefree integer in the square class of a nonzero rational.
pub fn rational_square_class(x: &BigRational) -> Result<BigInt> {
    squarefree_part(&(x.numer() * x.denom()))
}

fn quadratic_class(disc: &BigRational) -> Result<QuadraticClass> {
    let d = rational_square_class(disc)?;
    let d = d.to_i64().ok_or_else(|| Error::InvalidInput("discriminant class does not fit in 64 bits".into()))?;
    QuadraticClass::new(d)
}

pub fn check_cubic(f: &QPoly) -> Result<()> {
    match f.degree() {
        Some(3) => {}
        got => return Err(Error::WrongDegree { expected: 3, got: got.unwrap_or(0) }),
    }
    if f.discriminant().is_zero() {
        return Err(Error::NotSeparable);
    }
    Ok(())
}

/// Galois group of the splitting field of a separable cubic, with the
/// quadratic subfield `Q(√d)` when there is one.
pub fn cubic_galois_type(f: &QPoly) -> Result<GaloisType> {
    check_cubic(f)?;
    let roots = rational_roots(f)?;
    match roots.len() {
        3 => Ok(GaloisType::Trivial),
        1 => {
            let q = f.div_rem(&QPoly::linear_root(roots[0].clone())).0;
            Ok(GaloisType::C2(quadratic_class(&q.discriminant())?))
        }
        0 => {
            let disc = f.discriminant();
            if rational_square_class(&disc)?.is_one() {
                Ok(GaloisType::C3)
            } else {
                Ok(GaloisType::S3(quadratic_class(&disc)?))
            }
        }
        // two distinct rational roots force the third
        _ => unreachable!("a separable cubic with two rational roots splits"),
    }
}
