use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        QMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        QMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given integer vectors.
    pub fn from_int_columns(cols: &[&[i64]]) -> Result<Self> {
        let n = cols.first().map_or(0, |c| c.len());
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                cols.iter()
                    .map(|c| c.get(i).copied().unwrap_or(0))
                    .collect()
            })
            .collect();
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch("columns of unequal length".into()));
        }
        QMatrix::from_int_rows(&rows)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        QMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> QMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        QMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// True when every entry has denominator one.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(p, rank);
            for i in rank + 1..self.rows {
                if m[i][col].is_zero() {
                    continue;
                }
                let f = &m[i][col] / &m[rank][col];
                let (top, rest) = m.split_at_mut(i);
                for (x, p) in rest[0][col..].iter_mut().zip(&top[rank][col..]) {
                    *x -= &f * p;
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let (rows, scale) = self.integer_rows(&[]);
        let (reduced, sign) = bareiss(rows, self.rows);
        let det = match reduced {
            Some(m) => Rational::from_integer(m[self.rows - 1][self.rows - 1].clone()),
            None => return Ok(Rational::zero()),
        };
        Ok(det * Rational::from_integer(BigInt::from(sign)) / scale)
    }

    /// Exact solution of `self · x = b`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        self.require_square()?;
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut sols = self.solve_many(&[b.to_vec()])?;
        Ok(sols.pop().expect("one right-hand side"))
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        self.require_square()?;
        let n = self.rows;
        let units: Vec<Vec<Rational>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let cols = self.solve_many(&units)?;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for col in &cols {
                entries.push(col[i].clone());
            }
        }
        Ok(QMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }

    fn solve_many(&self, rhs: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
        let n = self.rows;
        let (rows, _) = self.integer_rows(rhs);
        let (reduced, _) = bareiss(rows, n);
        let m = reduced.ok_or(Error::Singular)?;
        let mut out = Vec::with_capacity(rhs.len());
        for r in 0..rhs.len() {
            let mut x = vec![Rational::zero(); n];
            for i in (0..n).rev() {
                let mut acc = Rational::from_integer(m[i][n + r].clone());
                for j in i + 1..n {
                    if !m[i][j].is_zero() {
                        acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
                    }
                }
                x[i] = acc / Rational::from_integer(m[i][i].clone());
            }
            out.push(x);
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Rows of `[self | rhs...]` scaled to integers; also returns the product
    /// of the row scale factors.
    fn integer_rows(&self, rhs: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, Rational) {
        let mut scale = Rational::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row: Vec<&Rational> = self
                    .row(i)
                    .iter()
                    .chain(rhs.iter().map(|b| &b[i]))
                    .collect();
                let lcm = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                scale *= Rational::from_integer(lcm.clone());
                row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect()
            })
            .collect();
        (rows, scale)
    }
}

/// Fraction-free forward elimination on the first `n` columns. Returns the
/// upper-triangular result (with trailing augmented columns carried along)
/// and the sign of the row permutation, or `None` when the leading block is
/// singular.
fn bareiss(mut m: Vec<Vec<BigInt>>, n: usize) -> (Option<Vec<Vec<BigInt>>>, i64) {
    let width = m.first().map_or(0, Vec::len);
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].abs())
        else {
            return (None, sign);
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    (Some(m), sign)
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect();
        write!(f, "QMatrix{rows:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rational::rat;

    #[test]
    fn small_determinants() {
        assert_eq!(QMatrix::identity(3).det().unwrap(), int(1));
        let m = QMatrix::from_int_rows(&[vec![1, 0], vec![-1, -1]]).unwrap();
        assert_eq!(m.det().unwrap(), int(-1));
        let sing = QMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(sing.det().unwrap(), int(0));
        let half =
            QMatrix::from_rows(vec![vec![rat(1, 2), int(0)], vec![int(0), rat(2, 3)]]).unwrap();
        assert_eq!(half.det().unwrap(), rat(1, 3));
    }

    #[test]
    fn pivoting_needed() {
        let m = QMatrix::from_int_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).unwrap();
        // 0*(0+9) - 1*(8-12) + 2*(-3-0)
        assert_eq!(m.det().unwrap(), int(-2));
        let x = m.solve(&[int(1), int(2), int(3)]).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![int(1), int(2), int(3)]);
    }

    #[test]
    fn non_square_is_an_error() {
        let m = QMatrix::from_int_rows(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(m.det(), Err(Error::NonSquare { rows: 1, cols: 3 }));
        assert!(m.solve(&[int(1)]).is_err());
    }

    #[test]
    fn diagonal_solve() {
        let a = QMatrix::from_int_rows(&[vec![2, 0], vec![0, 4]]).unwrap();
        assert_eq!(
            a.solve(&[int(1), int(1)]).unwrap(),
            vec![rat(1, 2), rat(1, 4)]
        );
        let sing = QMatrix::from_int_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(sing.solve(&[int(1), int(1)]), Err(Error::Singular));
    }

    #[test]
    fn inverse_of_cp2_cone() {
        let v = QMatrix::from_int_rows(&[vec![1, 0], vec![-1, -1]]).unwrap();
        let u = v.inverse().unwrap();
        assert_eq!(u, v);
        assert_eq!(u.mul(&v).unwrap(), QMatrix::identity(2));
    }
}
