//! Exact integer linear algebra: fraction-free elimination, rational solves
//! and the Smith normal form. Nothing here touches floating point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn big(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Determinant by Bareiss elimination with row pivoting.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.big();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            BigInt::one()
        } else {
            sign * &a[n - 1][n - 1]
        }
    }

    /// Leading principal minors `det(A[..k, ..k])` for `k = 1..=n`, from a
    /// single pivot-free Bareiss pass. Returns `None` if a zero pivot stops
    /// the pass before the last minor.
    pub fn leading_principal_minors(&self) -> Option<Vec<BigInt>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.big();
        let mut prev = BigInt::one();
        let mut minors = Vec::with_capacity(n);
        for k in 0..n {
            minors.push(a[k][k].clone());
            if a[k][k].is_zero() {
                return if k + 1 == n { Some(minors) } else { None };
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Some(minors)
    }

    /// Sylvester's criterion applied to `-A`.
    pub fn is_negative_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        match self.leading_principal_minors() {
            // sign of the k-th minor must be (-1)^k
            Some(minors) => minors.iter().enumerate().all(|(i, m)| {
                if i % 2 == 0 {
                    m.is_negative()
                } else {
                    m.is_positive()
                }
            }),
            None => false,
        }
    }

    /// Solves `A x = b` exactly. Fraction-free forward elimination followed by
    /// rational back substitution. `None` when `A` is singular.
    pub fn solve(&self, b: &[i64]) -> Option<Vec<BigRational>> {
        assert!(self.is_square());
        assert_eq!(b.len(), self.rows);
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = self
            .big()
            .into_iter()
            .zip(b)
            .map(|(mut row, &bi)| {
                row.push(BigInt::from(bi));
                row
            })
            .collect();
        let mut prev = BigInt::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(p, k);
            for i in k + 1..n {
                for j in k + 1..=n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut x = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = BigRational::from_integer(a[i][n].clone());
            for j in i + 1..n {
                acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
            }
            x[i] = acc / BigRational::from_integer(a[i][i].clone());
        }
        Some(x)
    }

    /// `vᵀ A⁻¹ v`, or `None` when `A` is singular.
    pub fn inverse_quadratic_form(&self, v: &[i64]) -> Option<BigRational> {
        let x = self.solve(v)?;
        Some(
            x.iter()
                .zip(v)
                .map(|(xi, &vi)| xi * BigRational::from_integer(BigInt::from(vi)))
                .fold(BigRational::zero(), |acc, t| acc + t),
        )
    }

    pub fn smith_form(&self) -> SmithForm {
        SmithForm::compute(self)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(|x| format!("{x:>width$}"))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `U A V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next. Only `U` is kept; it is all that membership
/// tests in the column span need.
#[derive(Clone, Debug)]
pub struct SmithForm {
    u: Vec<Vec<BigInt>>,
    diagonal: Vec<BigInt>,
}

impl SmithForm {
    fn compute(m: &Matrix) -> Self {
        let (rows, cols) = (m.rows, m.cols);
        let mut a = m.big();
        let mut u: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                (0..rows)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();

        let row_axpy = |a: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, q: &BigInt| {
            if q.is_zero() {
                return;
            }
            let (s, d) = if src < dst {
                let (lo, hi) = a.split_at_mut(dst);
                (&lo[src], &mut hi[0])
            } else {
                let (lo, hi) = a.split_at_mut(src);
                (&hi[0], &mut lo[dst])
            };
            for (x, y) in d.iter_mut().zip(s) {
                *x -= q * y;
            }
        };

        let mut diagonal = Vec::new();
        for t in 0..rows.min(cols) {
            loop {
                // smallest nonzero entry of the trailing block becomes the pivot
                let mut best: Option<(usize, usize)> = None;
                for i in t..rows {
                    for j in t..cols {
                        if !a[i][j].is_zero()
                            && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = best else {
                    break;
                };
                a.swap(t, pi);
                u.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }

                let mut clean = true;
                for i in t + 1..rows {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_axpy(&mut a, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                    clean &= a[i][t].is_zero();
                }
                for j in t + 1..cols {
                    let q = a[t][j].div_floor(&a[t][t]);
                    if !q.is_zero() {
                        for row in a.iter_mut() {
                            let s = &row[t] * &q;
                            row[j] -= s;
                        }
                    }
                    clean &= a[t][j].is_zero();
                }
                if !clean {
                    continue;
                }
                let offender = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match offender {
                    Some(i) => {
                        let minus_one = -BigInt::one();
                        row_axpy(&mut a, t, i, &minus_one);
                        row_axpy(&mut u, t, i, &minus_one);
                    }
                    None => break,
                }
            }
            if a[t][t].is_zero() {
                break;
            }
            if a[t][t].is_negative() {
                for x in a[t].iter_mut() {
                    *x = -x.clone();
                }
                for x in u[t].iter_mut() {
                    *x = -x.clone();
                }
            }
            diagonal.push(a[t][t].clone());
        }
        SmithForm { u, diagonal }
    }

    /// Nonzero invariant factors, in divisibility order.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.diagonal
    }

    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// True iff `b = A x` has an integer solution.
    pub fn in_column_span(&self, b: &[i64]) -> bool {
        assert_eq!(b.len(), self.u.len());
        self.u.iter().enumerate().all(|(i, row)| {
            let y: BigInt = row
                .iter()
                .zip(b)
                .map(|(uij, &bj)| uij * BigInt::from(bj))
                .sum();
            match self.diagonal.get(i) {
                Some(d) => y.is_multiple_of(d),
                None => y.is_zero(),
            }
        })
    }
}
