//! Small dense integer and rational matrices.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use crate::rational::{Rat, RatVec};

/// Row-major dense integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self[(i, j)] == i64::from(i == j)))
    }

    pub fn sub_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] -= 1;
        }
        m
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> RatVec {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + b * *a)
            })
            .collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| Rat::from_integer(self[(i, j)]))
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> i64 {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i128>> = self
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
    }

    /// Characteristic polynomial `det(t·I − M)`, coefficients from constant term up.
    pub fn char_poly(&self) -> Vec<i64> {
        // Faddeev–LeVerrier over the rationals keeps everything exact.
        assert!(self.is_square());
        let n = self.rows;
        let a = self.to_rational();
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            let mut next = &a * &m;
            for i in 0..n {
                next[(i, i)] += coeffs[n - k + 1];
            }
            m = next;
            let am = &a * &m;
            let tr = (0..n).fold(Rat::zero(), |acc, i| acc + am[(i, i)]);
            coeffs[n - k] = -tr / Rat::from_integer(k as i64);
        }
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral characteristic coefficient");
                c.to_integer()
            })
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self[(i, k)] * rhs[(k, j)]).sum()
        })
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

/// Row-major dense rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> RatVec {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul_vec(&self, v: &[Rat]) -> RatVec {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| crate::rational::dot(self.row(i), v))
            .collect()
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)];
                    for j in 0..n {
                        let (ac, ic) = (a[(col, j)], inv[(col, j)]);
                        a[(r, j)] -= f * ac;
                        inv[(r, j)] -= f * ic;
                    }
                }
            }
        }
        Some(inv)
    }

    /// Solves `A·x = b` for full-column-rank `A`; `None` if inconsistent.
    pub fn solve_full_rank(&self, b: &[Rat]) -> Option<RatVec> {
        assert_eq!(self.rows, b.len(), "shape mismatch");
        let (m, n) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut rhs = b.to_vec();
        let mut row = 0;
        for col in 0..n {
            let p = (row..m).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(row, p);
            rhs.swap(row, p);
            let pv = a[(row, col)];
            for j in 0..n {
                a[(row, j)] /= pv;
            }
            rhs[row] /= pv;
            for r in 0..m {
                if r != row && !a[(r, col)].is_zero() {
                    let f = a[(r, col)];
                    for j in 0..n {
                        let v = a[(row, j)];
                        a[(r, j)] -= f * v;
                    }
                    let v = rhs[row];
                    rhs[r] -= f * v;
                }
            }
            row += 1;
        }
        if rhs[row..].iter().any(|q| !q.is_zero()) {
            return None;
        }
        Some(rhs[..n].to_vec())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        RatMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Rat::zero(), |acc, k| acc + self[(i, k)] * rhs[(k, j)])
        })
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| crate::rational::fmt_vec(self.row(i)))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
