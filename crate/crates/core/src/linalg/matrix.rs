use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::scalar::Scalar;

/// Dense row-major matrix over any [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row-major data.
    ///
    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Self { rows, cols, data }
    }

    /// Builds a matrix from a list of rows. All rows must have length `cols`;
    /// an empty row list yields a `0 x cols` matrix.
    pub fn from_rows(rows: &[Vec<T>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Self { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vec<T>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn columns_vec(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone())
            })
            .collect()
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_rows(&self, range: std::ops::Range<usize>) -> Self {
        let rows: Vec<Vec<T>> = range.map(|i| self.row(i)).collect();
        Self::from_rows(&rows, self.cols)
    }

    pub fn select_columns(&self, range: std::ops::Range<usize>) -> Self {
        let cols: Vec<Vec<T>> = range.map(|j| self.column(j)).collect();
        Self::from_columns(&cols, self.rows)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += c * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &T) {
        for j in 0..self.cols {
            let v = self[(dst, j)].clone() + c.clone() * self[(src, j)].clone();
            self[(dst, j)] = v;
        }
    }

    /// col[dst] += c * col[src]
    pub fn add_column_multiple(&mut self, dst: usize, src: usize, c: &T) {
        for i in 0..self.rows {
            let v = self[(i, dst)].clone() + c.clone() * self[(i, src)].clone();
            self[(i, dst)] = v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = T::zero() - self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact, so this is exact over the integers and the rationals.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign_flip = !sign_flip;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a[(i, j)].clone() * a[(k, k)].clone()
                        - a[(i, k)].clone() * a[(k, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        if sign_flip {
            T::zero() - d
        } else {
            d
        }
    }
}

impl<T: Scalar> Matrix<T> {
    /// Inverse by Gauss–Jordan elimination. Only meaningful over a field
    /// (rationals, floats); `None` when singular.
    pub fn inverse_over_field(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.hstack(&Self::identity(n));
        for col in 0..n {
            let piv = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            a.swap_rows(col, piv);
            let p = a[(col, col)].clone();
            for j in 0..2 * n {
                let v = a[(col, j)].clone() / p.clone();
                a[(col, j)] = v;
            }
            for i in 0..n {
                if i != col && !a[(i, col)].is_zero() {
                    let f = T::zero() - a[(i, col)].clone();
                    a.add_row_multiple(i, col, &f);
                }
            }
        }
        Some(a.select_columns(n..2 * n))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.mul_mat(rhs)
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<BigInt>> =
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Matrix::from_rows(&rows, cols)
    }

    #[test]
    fn determinant_small_cases() {
        assert_eq!(int(&[&[2, 4], &[6, 8]]).determinant(), BigInt::from(-8));
        assert_eq!(int(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(int(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).determinant(), BigInt::from(0));
        assert_eq!(int(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]).determinant(), BigInt::from(-6));
    }

    #[test]
    fn determinant_is_generic() {
        let q = Matrix::from_vec(
            2,
            2,
            vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer(3.into()),
                BigRational::from_integer(1.into()),
                BigRational::new(1.into(), 3.into()),
            ],
        );
        assert_eq!(q.determinant(), BigRational::new((-17).into(), 6.into()));
        let f = Matrix::from_vec(2, 2, vec![1.0f64, 2.0, 3.0, 4.0]);
        assert!((f.determinant() + 2.0).abs() < 1e-12);
    }

    #[test]
    fn rational_inverse() {
        let q = Matrix::from_vec(2, 2, vec![2.0f64, 1.0, 1.0, 1.0]);
        let inv = q.inverse_over_field().unwrap();
        assert_eq!(inv, Matrix::from_vec(2, 2, vec![1.0, -1.0, -1.0, 2.0]));
        assert!(Matrix::from_vec(2, 2, vec![1.0f64, 2.0, 2.0, 4.0]).inverse_over_field().is_none());
    }

    #[test]
    fn product_and_transpose() {
        let a = int(&[&[1, 2], &[3, 4]]);
        let b = int(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, int(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), int(&[&[1, 3], &[2, 4]]));
    }
}
