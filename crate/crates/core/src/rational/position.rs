//! General position of the six points `αᵢ`, `αᵢ + a` on the cubic `y = x³`,
//! read off the sextic `H(t) = F(t)·F(t - a)`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::QPoly;

pub type QMatrix = Matrix<BigRational>;

/// `H(t) = F(t)·F(t - a)`, made monic.
pub fn sextic(f: &QPoly, a: &BigRational) -> QPoly {
    f.mul(&f.shift(&(-a.clone()))).monic()
}

/// Companion matrix of a monic polynomial: `C·vᵢ = vᵢ₊₁`, last column `-cᵢ`.
pub fn companion(p: &QPoly) -> QMatrix {
    let n = p.degree().expect("nonconstant polynomial");
    let mut c = QMatrix::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = BigRational::one();
    }
    for i in 0..n {
        c[(i, n - 1)] = -p.coeff(i);
    }
    c
}

/// Index triples `i < j < k` in lexicographic order.
pub fn wedge3_basis(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Sign and sorted form of `v_a ∧ v_b ∧ v_c`, or `None` if two indices coincide.
fn normalize(mut t: [usize; 3]) -> Option<(i32, [usize; 3])> {
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if t[j] > t[j + 1] {
                t.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    (t[0] != t[1] && t[1] != t[2]).then_some((sign, t))
}

/// The derivation `C ∧ 1 ∧ 1 + 1 ∧ C ∧ 1 + 1 ∧ 1 ∧ C` on `Λ³`, whose
/// eigenvalues are the sums of three distinct eigenvalues of `C`.
pub fn wedge3_derivation(c: &QMatrix) -> QMatrix {
    let n = c.nrows();
    let basis = wedge3_basis(n);
    let index = |t: &[usize; 3]| basis.iter().position(|b| b == t).unwrap();
    let mut d = QMatrix::zeros(basis.len(), basis.len());
    for (col, b) in basis.iter().enumerate() {
        for slot in 0..3 {
            for m in 0..n {
                let entry = &c[(m, b[slot])];
                if entry.is_zero() {
                    continue;
                }
                let mut t = *b;
                t[slot] = m;
                if let Some((sign, sorted)) = normalize(t) {
                    let row = index(&sorted);
                    let v = if sign > 0 { entry.clone() } else { -entry.clone() };
                    d[(row, col)] = d[(row, col)].clone() + v;
                }
            }
        }
    }
    d
}

/// Exact diagnostics for the three general-position conditions.
#[derive(Clone, Debug, Serialize)]
pub struct GeneralPosition {
    pub disc_f: String,
    pub shift_resultant: String,
    /// (i) the six roots of `H` are distinct.
    pub distinct_roots: bool,
    pub degree5_coefficient: String,
    /// (ii) `H` has a nonzero `t⁵` term.
    pub degree5_nonzero: bool,
    pub triple_sum_determinant: String,
    /// (iii) no three roots of `H` sum to zero.
    pub no_zero_triple_sum: bool,
}

impl GeneralPosition {
    pub fn passed(&self) -> bool {
        self.distinct_roots && self.degree5_nonzero && self.no_zero_triple_sum
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.distinct_roots {
            out.push("roots of H are not distinct");
        }
        if !self.degree5_nonzero {
            out.push("degree 5 coefficient of H vanishes");
        }
        if !self.no_zero_triple_sum {
            out.push("three roots of H sum to zero");
        }
        out
    }
}

fn show(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        x.to_string()
    }
}

pub fn triple_sum_determinant(f: &QPoly, a: &BigRational) -> BigRational {
    wedge3_derivation(&companion(&sextic(f, a))).determinant()
}

pub fn general_position(f: &QPoly, a: &BigRational) -> Result<GeneralPosition> {
    if f.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3, got: f.degree().unwrap_or(0) });
    }
    if a.is_zero() {
        return Err(Error::InvalidInput("the shift a must be nonzero".into()));
    }
    let disc = f.discriminant();
    let res = f.resultant(&f.shift(&(-a.clone())));
    let h = sextic(f, a);
    let c5 = h.coeff(5);
    let det = wedge3_derivation(&companion(&h)).determinant();
    Ok(GeneralPosition {
        distinct_roots: !disc.is_zero() && !res.is_zero(),
        disc_f: show(&disc),
        shift_resultant: show(&res),
        degree5_nonzero: !c5.is_zero(),
        degree5_coefficient: show(&c5),
        no_zero_triple_sum: !det.is_zero(),
        triple_sum_determinant: show(&det),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn companion_char_poly_roots() {
        // (t - 1)(t - 2)(t - 3): Λ³ of a 3x3 is 1-dimensional with eigenvalue 6
        let p = QPoly::from_integers(&[-6, 11, -6, 1]);
        let d = wedge3_derivation(&companion(&p));
        assert_eq!(d.nrows(), 1);
        assert_eq!(d[(0, 0)], q(6));
    }

    #[test]
    fn triple_sums_of_small_roots() {
        // roots 1, 2, 3, 4: triple sums 6, 7, 8, 9
        let p = QPoly::from_integers(&[24, -50, 35, -10, 1]);
        let d = wedge3_derivation(&companion(&p));
        assert_eq!(d.determinant(), q(6 * 7 * 8 * 9));
        // roots -1, 0, 1, 2: 0 is a triple sum
        let p = QPoly::from_integers(&[0, 2, -1, -2, 1]);
        assert_eq!(wedge3_derivation(&companion(&p)).determinant(), q(0));
    }

    #[test]
    fn degree5_coefficient_vanishing() {
        // F = (t² - 2)(t + 1): t² coefficient 1, so 2·1 - 3a = 0 at a = 2/3
        let f = QPoly::from_integers(&[-2, -2, 1, 1]);
        let gp = general_position(&f, &BigRational::new(2.into(), 3.into())).unwrap();
        assert!(!gp.degree5_nonzero);
        assert!(!gp.passed());
        let gp = general_position(&f, &q(1)).unwrap();
        assert!(gp.degree5_nonzero && gp.distinct_roots);
    }

    #[test]
    fn inseparable_fails_first_condition() {
        let f = QPoly::from_integers(&[0, 0, 0, 1]);
        let gp = general_position(&f, &q(1)).unwrap();
        assert!(!gp.distinct_roots);
        assert!(general_position(&f, &q(0)).is_err());
    }
}
