//! Dense matrices over the rationals with fraction-free elimination.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Rational::one());
        }
        m
    }

    /// The matrix unit `E_{row,col}`.
    pub fn unit(rows: usize, cols: usize, row: usize, col: usize) -> Self {
        let mut m = RatMatrix::zeros(rows, cols);
        m.set(row, col, Rational::one());
        m
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect();
        RatMatrix::from_rows(&rows)
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = RatMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`, row-major.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn hcat(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, other.rows);
        let mut m = RatMatrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j));
            }
        }
        m
    }

    pub fn select_columns(&self, cols: &[usize]) -> RatMatrix {
        let columns: Vec<_> = cols.iter().map(|&j| self.column(j)).collect();
        RatMatrix::from_columns(self.rows, &columns)
    }

    /// Rows scaled by the lcm of their denominators, as big integers.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale_product = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(1i64, |acc, q| acc.lcm(&q.den()));
                scale_product *= l;
                row.iter()
                    .map(|q| BigInt::from(q.num()) * BigInt::from(l / q.den()))
                    .collect()
            })
            .collect();
        (rows, scale_product)
    }

    /// Bareiss elimination on an integer copy. Returns the pivot columns and,
    /// for square input, the determinant of the integer matrix.
    fn bareiss(&self) -> (Vec<usize>, BigInt, Vec<Vec<BigInt>>) {
        let (mut a, _) = self.integer_rows();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            if p != row {
                a.swap(p, row);
                sign = -sign;
            }
            for i in row + 1..self.rows {
                for j in col + 1..self.cols {
                    let v = (&a[row][col] * &a[i][j] - &a[i][col] * &a[row][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[row][col].clone();
            pivots.push(col);
            row += 1;
        }
        (pivots, sign, a)
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        self.bareiss().0.len()
    }

    /// Columns forming a basis of the column space, chosen greedily left to right.
    pub fn column_basis(&self) -> Vec<usize> {
        self.bareiss().0
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let (_, scale) = self.integer_rows();
        let (pivots, sign, a) = self.bareiss();
        if pivots.len() < n {
            return Rational::zero();
        }
        let det = sign * &a[n - 1][n - 1];
        let g = det.gcd(&scale);
        let (num, mut den) = (det / &g, scale / &g);
        let mut num = num;
        if den.is_negative() {
            den = -den;
            num = -num;
        }
        Rational::new(
            num.to_i64().expect("determinant numerator fits in i64"),
            den.to_i64().expect("determinant denominator fits in i64"),
        )
    }

    /// Inverse by Gauss–Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&i| !a.get(i, col).is_zero())?;
            if p != col {
                a.swap_rows(p, col);
                inv.swap_rows(p, col);
            }
            let piv = a.get(col, col);
            for j in 0..n {
                a.set(col, j, a.get(col, j) / piv);
                inv.set(col, j, inv.get(col, j) / piv);
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a.get(i, col);
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(i, j, a.get(i, j) - f * a.get(col, j));
                    inv.set(i, j, inv.get(i, j) - f * inv.get(col, j));
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `P A P⁻¹` for the permutation sending basis vector `k` to `perm[k]`.
    pub fn conjugate_by_permutation(&self, perm: &[usize]) -> RatMatrix {
        assert_eq!(self.rows, self.cols);
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.nonzero_entries() {
            m.set(perm[i], perm[j], v);
        }
        m
    }

    /// `P A` for the same permutation convention (rows relabelled only).
    pub fn permute_rows(&self, perm: &[usize]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.nonzero_entries() {
            m.set(perm[i], j, v);
        }
        m
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut m = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        m.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        m
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sum");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in difference");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = RatMatrix::from_rows(&[
            vec![q(1, 2), q(2, 1), q(0, 1)],
            vec![q(-1, 3), q(1, 1), q(4, 1)],
            vec![q(2, 1), q(0, 1), q(1, 5)],
        ]);
        // cofactor along the first row
        let det = q(1, 2) * (q(1, 1) * q(1, 5) - q(4, 1) * q(0, 1))
            - q(2, 1) * (q(-1, 3) * q(1, 5) - q(4, 1) * q(2, 1));
        assert_eq!(m.determinant(), det);
        assert_eq!(RatMatrix::identity(4).determinant(), Rational::one());
        assert_eq!(RatMatrix::zeros(0, 0).determinant(), Rational::one());
    }

    #[test]
    fn permutation_determinant_sign() {
        let p = RatMatrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(p.determinant(), Rational::from_integer(-1));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = RatMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.determinant(), Rational::zero());
        assert_eq!(RatMatrix::zeros(3, 2).rank(), 0);
        assert_eq!(m.column_basis(), vec![0, 1]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_rows(&[vec![q(2, 1), q(1, 3)], vec![q(-1, 1), q(1, 2)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RatMatrix::identity(2));
        let sing = RatMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn commutator_of_shift_pair() {
        let b1 = RatMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let b2 = RatMatrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        let c = &(&b1 * &b2) - &(&b2 * &b1);
        assert_eq!(c, RatMatrix::from_int_rows(&[&[1, 0], &[0, -1]]));
    }
}
