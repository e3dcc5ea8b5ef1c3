//! Whether the three lines `ℓᵢ` through `[1:αᵢ:αᵢ³]` and `[1:αᵢ+a:(αᵢ+a)³]`
//! pass through one point.
//!
//! The line through `(x, x³)` and `(y, y³)` is `xy(x+y)·X₀ - (x²+xy+y²)·X₁ + X₂ = 0`,
//! so concurrency is the vanishing of a 3x3 determinant in the roots of `F`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{certified_roots, check_cubic, ComplexInterval, QPoly, Rounded};

pub const DEFAULT_START_BITS: u32 = 128;
pub const DEFAULT_PRECISION_CAP: u32 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Concurrency {
    Yes,
    No,
    Indeterminate,
}

#[derive(Clone, Debug, Serialize)]
pub struct EckardtCheck {
    pub verdict: Concurrency,
    /// Working precision at which the verdict was reached (or the cap).
    pub bits: u32,
    /// Result of the exact test, when it was needed.
    pub exact_zero: Option<bool>,
}

/// Row `(xy(x+y), -(x²+xy+y²), 1)` for the line through the points over `x` and `y`.
fn line_row_interval(r: &Rounded, x: &ComplexInterval, y: &ComplexInterval) -> [ComplexInterval; 3] {
    let xy = r.mul(x, y);
    let s = r.add(x, y);
    let x2 = r.mul(x, x);
    let y2 = r.mul(y, y);
    let q = r.add(&r.add(&x2, &xy), &y2);
    [r.mul(&xy, &s), q.neg(), ComplexInterval::real(BigRational::one())]
}

/// Interval enclosure of the concurrency determinant at `bits` of precision,
/// for the given ordering of root enclosures.
pub fn concurrency_determinant(roots: &[ComplexInterval], a: &BigRational, bits: u32) -> ComplexInterval {
    let r = Rounded { bits };
    let shift = ComplexInterval::real(a.clone());
    let rows: Vec<[ComplexInterval; 3]> = roots.iter().map(|x| line_row_interval(&r, x, &x.add(&shift))).collect();
    r.det3(&[rows[0].clone(), rows[1].clone(), rows[2].clone()])
}

/// `Q[x₁, x₂] / (F(x₁), (F(x₂) - F(x₁))/(x₂ - x₁))` for monic cubic `F`,
/// elements stored as coefficients of `x₁ⁱ x₂ʲ`, `i < 3`, `j < 2`.
struct SplittingAlgebra {
    c: [BigRational; 3],
}

type Elem = [[BigRational; 2]; 3];

impl SplittingAlgebra {
    fn zero(&self) -> Elem {
        Default::default()
    }

    fn constant(&self, v: BigRational) -> Elem {
        let mut e = self.zero();
        e[0][0] = v;
        e
    }

    fn x1(&self) -> Elem {
        let mut e = self.zero();
        e[1][0] = BigRational::one();
        e
    }

    fn x2(&self) -> Elem {
        let mut e = self.zero();
        e[0][1] = BigRational::one();
        e
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let mut e = self.zero();
        for i in 0..3 {
            for j in 0..2 {
                e[i][j] = &a[i][j] + &b[i][j];
            }
        }
        e
    }

    fn neg(&self, a: &Elem) -> Elem {
        let mut e = self.zero();
        for i in 0..3 {
            for j in 0..2 {
                e[i][j] = -a[i][j].clone();
            }
        }
        e
    }

    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        // raw product, x₁ degree up to 6 after eliminating x₂²
        let mut p = vec![[BigRational::zero(), BigRational::zero(), BigRational::zero()]; 7];
        for i in 0..3 {
            for j in 0..2 {
                if a[i][j].is_zero() {
                    continue;
                }
                for k in 0..3 {
                    for l in 0..2 {
                        p[i + k][j + l] += &a[i][j] * &b[k][l];
                    }
                }
            }
        }
        let [c0, c1, c2] = &self.c;
        // x₂² = -(x₁ + c₂)x₂ - (x₁² + c₂x₁ + c₁)
        for i in (0..5).rev() {
            let t = std::mem::take(&mut p[i][2]);
            if t.is_zero() {
                continue;
            }
            p[i + 1][1] -= &t;
            p[i][1] -= &t * c2;
            p[i + 2][0] -= &t;
            p[i + 1][0] -= &t * c2;
            p[i][0] -= &t * c1;
        }
        // x₁³ = -c₂x₁² - c₁x₁ - c₀
        for i in (3..7).rev() {
            for j in 0..2 {
                let t = std::mem::take(&mut p[i][j]);
                if t.is_zero() {
                    continue;
                }
                p[i - 1][j] -= &t * c2;
                p[i - 2][j] -= &t * c1;
                p[i - 3][j] -= &t * c0;
            }
        }
        let mut e = self.zero();
        for i in 0..3 {
            for j in 0..2 {
                e[i][j] = p[i][j].clone();
            }
        }
        e
    }

    fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

/// Exact test: the concurrency determinant vanishes in the universal
/// splitting algebra of `F`. For separable `F` that algebra is a product of
/// copies of the splitting field, one per ordering of the roots, and the
/// determinant only changes sign under reordering, so this is equivalent to
/// the determinant being zero.
pub fn concurrency_determinant_is_zero(f: &QPoly, a: &BigRational) -> bool {
    let m = f.monic();
    let alg = SplittingAlgebra { c: [m.coeff(0), m.coeff(1), m.coeff(2)] };
    let x1 = alg.x1();
    let x2 = alg.x2();
    let x3 = alg.sub(&alg.sub(&alg.constant(-m.coeff(2)), &x1), &x2);
    let shift = alg.constant(a.clone());
    let row = |x: &Elem| {
        let y = alg.add(x, &shift);
        let xy = alg.mul(x, &y);
        let q = alg.add(&alg.add(&alg.mul(x, x), &xy), &alg.mul(&y, &y));
        [alg.mul(&xy, &alg.add(x, &y)), alg.neg(&q), alg.constant(BigRational::one())]
    };
    let m3 = [row(&x1), row(&x2), row(&x3)];
    let minor = |p: usize, q: usize| alg.sub(&alg.mul(&m3[1][p], &m3[2][q]), &alg.mul(&m3[1][q], &m3[2][p]));
    let det = alg.add(
        &alg.sub(&alg.mul(&m3[0][0], &minor(1, 2)), &alg.mul(&m3[0][1], &minor(0, 2))),
        &alg.mul(&m3[0][2], &minor(0, 1)),
    );
    alg.is_zero(&det)
}

/// Certified concurrency check: intervals at doubling precision from
/// `DEFAULT_START_BITS` to `cap_bits`; `No` once the determinant enclosure
/// excludes zero, `Yes` when the enclosure contains zero and the exact test
/// confirms it.
pub fn eckardt_concurrent_with_cap(f: &QPoly, a: &BigRational, cap_bits: u32) -> Result<EckardtCheck> {
    check_cubic(f)?;
    if a.is_zero() {
        return Err(Error::InvalidInput("the shift a must be nonzero".into()));
    }
    let mut bits = DEFAULT_START_BITS.min(cap_bits.max(1));
    let mut exact_zero = None;
    loop {
        if let Ok(roots) = certified_roots(f, bits) {
            let det = concurrency_determinant(&roots, a, bits);
            if !det.contains_zero() {
                return Ok(EckardtCheck { verdict: Concurrency::No, bits, exact_zero });
            }
            let z = *exact_zero.get_or_insert_with(|| concurrency_determinant_is_zero(f, a));
            if z {
                return Ok(EckardtCheck { verdict: Concurrency::Yes, bits, exact_zero });
            }
        }
        if bits >= cap_bits {
            return Ok(EckardtCheck { verdict: Concurrency::Indeterminate, bits, exact_zero });
        }
        bits = (bits * 2).min(cap_bits);
    }
}

pub fn eckardt_concurrent(f: &QPoly, a: &BigRational) -> Result<EckardtCheck> {
    eckardt_concurrent_with_cap(f, a, DEFAULT_PRECISION_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn generic_lines_are_not_concurrent() {
        let f = QPoly::from_integers(&[-2, -2, 1, 1]);
        let c = eckardt_concurrent(&f, &q(1)).unwrap();
        assert_eq!(c.verdict, Concurrency::No);
        assert_eq!(c.bits, DEFAULT_START_BITS);
        assert!(!concurrency_determinant_is_zero(&f, &q(1)));
    }

    #[test]
    fn determinant_is_alternating() {
        let f = QPoly::from_integers(&[1, 1, 1, 1]);
        let roots = certified_roots(&f, 128).unwrap();
        let d = concurrency_determinant(&roots, &q(2), 128);
        let swapped = [roots[1].clone(), roots[0].clone(), roots[2].clone()];
        let e = concurrency_determinant(&swapped, &q(2), 128);
        let m1 = d.midpoint_f64();
        let m2 = e.midpoint_f64();
        assert!((m1 + m2).norm() < 1e-20 * (1.0 + m1.norm()));
        assert!(!d.contains_zero() && !e.contains_zero());
    }

    #[test]
    fn concurrent_configuration() {
        // roots -1, 0, 1: the determinant expands to 12(a - 1)(a + 1)
        let f = QPoly::from_integers(&[0, -1, 0, 1]);
        for a in [1, -1] {
            assert!(concurrency_determinant_is_zero(&f, &q(a)));
            let c = eckardt_concurrent(&f, &q(a)).unwrap();
            assert_eq!(c.verdict, Concurrency::Yes);
            assert_eq!(c.exact_zero, Some(true));
        }
        for a in [2, 3, -5] {
            assert_eq!(eckardt_concurrent(&f, &q(a)).unwrap().verdict, Concurrency::No);
        }
        // roots 1, 2, -3: 120(a² - 7), irrational zeros only
        let g = QPoly::from_integers(&[6, -7, 0, 1]);
        assert_eq!(eckardt_concurrent(&g, &q(3)).unwrap().verdict, Concurrency::No);
    }

    #[test]
    fn low_cap_is_indeterminate_only_when_needed() {
        let f = QPoly::from_integers(&[-2, -2, 1, 1]);
        let c = eckardt_concurrent_with_cap(&f, &q(1), 64).unwrap();
        assert_eq!(c.verdict, Concurrency::No);
    }
}
