//! Smith normal form over a Euclidean scalar.
//!
//! For an `m x n` input `A` we produce unimodular `U` (`m x m`) and `V`
//! (`n x n`) with `U * A * V = S` diagonal, nonnegative, and each diagonal
//! entry dividing the next. The pivot is always the nonzero entry of least
//! absolute value in the remaining block.

use crate::linalg::Matrix;
use crate::scalar::IntScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntScalar> SmithForm<T> {
    /// Diagonal entries `d_1, ..., d_min(m,n)` (zeros included).
    pub fn diagonal(&self) -> Vec<T> {
        let k = self.s.nrows().min(self.s.ncols());
        (0..k).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn min_abs_pivot<T: IntScalar>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..a.nrows() {
        for j in t..a.ncols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Smith normal form of `a`.
pub fn snf<T: IntScalar>(a: &Matrix<T>) -> SmithForm<T> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut s = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = min_abs_pivot(&s, t) else {
                return finish(u, s, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_columns(t, pj);
            v.swap_columns(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].clone() / s[(t, t)].clone();
                let neg_q = T::zero() - q;
                s.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                if !s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].clone() / s[(t, t)].clone();
                let neg_q = T::zero() - q;
                s.add_column_multiple(j, t, &neg_q);
                v.add_column_multiple(j, t, &neg_q);
                if !s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Row and column t are clear; enforce divisibility of the rest.
            let p = s[(t, t)].clone();
            let bad = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(s[(i, j)].clone() % p.clone()).is_zero());
            match bad {
                Some((i, _)) => {
                    s.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(u, s, v)
}

fn finish<T: IntScalar>(u: Matrix<T>, s: Matrix<T>, v: Matrix<T>) -> SmithForm<T> {
    SmithForm { u, s, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Matrix::from_rows(&rows, cols)
    }

    fn check(a: &Matrix<BigInt>) -> SmithForm<BigInt> {
        let f = snf(a);
        assert_eq!(&(&f.u * a) * &f.v, f.s);
        assert_eq!(f.u.determinant().abs(), BigInt::from(1));
        assert_eq!(f.v.determinant().abs(), BigInt::from(1));
        let d = f.diagonal();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero(), "{d:?}");
            } else {
                // zeros only at the tail
            }
        }
        f
    }

    #[test]
    fn two_by_two_example() {
        // |det| = 8 = 2 * 4
        let f = check(&int(&[&[2, 4], &[6, 8]]));
        assert_eq!(f.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn identity_and_zero() {
        let f = check(&Matrix::<BigInt>::identity(3));
        assert_eq!(f.diagonal(), vec![BigInt::from(1); 3]);
        let f = check(&Matrix::<BigInt>::zeros(2, 2));
        assert_eq!(f.diagonal(), vec![BigInt::from(0); 2]);
    }

    #[test]
    fn rectangular_and_generic_i64() {
        check(&int(&[&[0, 2], &[3, 0], &[0, 0]]));
        let f = snf(&Matrix::from_vec(2, 3, vec![4i64, 6, 0, 6, 9, 15]));
        // minors 0, 60, 90 -> d1 * d2 = 30
        assert_eq!(f.diagonal(), vec![1, 30]);
    }
}
