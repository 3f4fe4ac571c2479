//! Smith normal form over ℤ and the lattice congruence solver built on it.

use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::rational::{self, Rat, RatVec};

/// Upper bound on the number of torsion components we are willing to list.
pub const MAX_COMPONENTS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmithError {
    #[error("shape mismatch: matrix has {rows} rows but right-hand side has {len} entries")]
    ShapeMismatch { rows: usize, len: usize },
    #[error("solution set has {0} torsion components, more than the supported maximum")]
    TooManyComponents(u64),
}

/// `U·M·V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Diagonal of `D` (length `min(rows, cols)`), nonnegative.
    pub diagonal: Vec<i64>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| **d != 0).count()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.a.cols() {
            let t = self.a[(i, k)];
            self.a[(i, k)] = self.a[(j, k)];
            self.a[(j, k)] = t;
        }
        for k in 0..self.u.cols() {
            let t = self.u[(i, k)];
            self.u[(i, k)] = self.u[(j, k)];
            self.u[(j, k)] = t;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.a.rows() {
            let t = self.a[(k, i)];
            self.a[(k, i)] = self.a[(k, j)];
            self.a[(k, j)] = t;
        }
        for k in 0..self.v.rows() {
            let t = self.v[(k, i)];
            self.v[(k, i)] = self.v[(k, j)];
            self.v[(k, j)] = t;
        }
        for k in 0..self.v_inv.cols() {
            let t = self.v_inv[(i, k)];
            self.v_inv[(i, k)] = self.v_inv[(j, k)];
            self.v_inv[(j, k)] = t;
        }
    }

    /// row_i += f · row_j
    fn add_row(&mut self, i: usize, j: usize, f: i64) {
        for k in 0..self.a.cols() {
            let t = self.a[(j, k)];
            self.a[(i, k)] += f * t;
        }
        for k in 0..self.u.cols() {
            let t = self.u[(j, k)];
            self.u[(i, k)] += f * t;
        }
    }

    /// col_i += f · col_j
    fn add_col(&mut self, i: usize, j: usize, f: i64) {
        for k in 0..self.a.rows() {
            let t = self.a[(k, j)];
            self.a[(k, i)] += f * t;
        }
        for k in 0..self.v.rows() {
            let t = self.v[(k, j)];
            self.v[(k, i)] += f * t;
        }
        // V' = V·E with E = I + f·e_j e_iᵀ, so V'^{-1} = (I − f·e_j e_iᵀ)·V^{-1}
        for k in 0..self.v_inv.cols() {
            let t = self.v_inv[(i, k)];
            self.v_inv[(j, k)] -= f * t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.a.cols() {
            self.a[(i, k)] = -self.a[(i, k)];
        }
        for k in 0..self.u.cols() {
            self.u[(i, k)] = -self.u[(i, k)];
        }
    }
}

/// Computes the Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = w.a[(i, j)];
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < w.a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            let p = w.a[(t, t)];
            let mut clean = true;
            for i in t + 1..rows {
                let q = w.a[(i, t)].div_euclid(p);
                if q != 0 {
                    w.add_row(i, t, -q);
                }
                if w.a[(i, t)] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = w.a[(t, j)].div_euclid(p);
                if q != 0 {
                    w.add_col(j, t, -q);
                }
                if w.a[(t, j)] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold any offending row into the pivot row and retry
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| w.a[(i, j)] % p != 0));
            match offending {
                Some(i) => w.add_row(t, i, 1),
                None => break,
            }
        }
        if w.a[(t, t)] < 0 {
            w.negate_row(t);
        }
    }
    let diagonal = (0..n).map(|i| w.a[(i, i)]).collect();
    SmithForm {
        u: w.u,
        v: w.v,
        v_inv: w.v_inv,
        diagonal,
    }
}

/// Full description of `{ y ∈ ℝ^c : M·y ≡ b (mod ℤ^r) }` modulo `ℤ^c`.
///
/// The set is a finite union of translates of the real kernel of `M`;
/// `components` lists one representative of each translate, reduced to
/// `[0, 1)^c` and with zero kernel coordinates in the Smith basis.
#[derive(Debug, Clone)]
pub struct LatticeSolution {
    pub solvable: bool,
    /// Dimension of the real kernel of `M`.
    pub dim: usize,
    pub particular: Option<RatVec>,
    pub kernel_basis: Vec<Vec<i64>>,
    pub components: Vec<RatVec>,
    rank: usize,
    diagonal: Vec<i64>,
    transformed_rhs: RatVec,
    v_inv: IntMatrix,
}

impl LatticeSolution {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether `y` lies in the solution set, decided in the Smith basis.
    pub fn contains(&self, y: &[Rat]) -> bool {
        if !self.solvable || y.len() != self.v_inv.cols() {
            return false;
        }
        let z = self.v_inv.mul_rat_vec(y);
        (0..self.rank).all(|i| {
            let lhs = z[i] * Rat::from_integer(self.diagonal[i]);
            (lhs - self.transformed_rhs[i]).is_integer()
        })
    }
}

/// Solves `M·y ≡ b (mod ℤ^rows)` over the reals.
pub fn smith_solve(m: &IntMatrix, b: &[Rat]) -> Result<LatticeSolution, SmithError> {
    if m.rows() != b.len() {
        return Err(SmithError::ShapeMismatch {
            rows: m.rows(),
            len: b.len(),
        });
    }
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols = m.cols();
    let ub = snf.u.mul_rat_vec(b);
    let solvable = ub[rank..].iter().all(|q| q.is_integer());
    let kernel_basis: Vec<Vec<i64>> = (rank..cols).map(|j| snf.v.column(j)).collect();
    let mut out = LatticeSolution {
        solvable,
        dim: cols - rank,
        particular: None,
        kernel_basis,
        components: Vec::new(),
        rank,
        diagonal: snf.diagonal.clone(),
        transformed_rhs: ub.clone(),
        v_inv: snf.v_inv.clone(),
    };
    if !solvable {
        return Ok(out);
    }
    let count = snf.diagonal[..rank]
        .iter()
        .try_fold(1u64, |acc, d| acc.checked_mul(d.unsigned_abs()))
        .filter(|c| *c <= MAX_COMPONENTS)
        .ok_or_else(|| {
            SmithError::TooManyComponents(
                snf.diagonal[..rank]
                    .iter()
                    .fold(1u64, |acc, d| acc.saturating_mul(d.unsigned_abs())),
            )
        })?;
    let mut components = Vec::with_capacity(count as usize);
    // mixed-radix enumeration of the shifts m_i ∈ [0, d_i)
    let mut shifts = vec![0i64; rank];
    loop {
        let mut z = rational::zeros(cols);
        for i in 0..rank {
            let d = Rat::from_integer(snf.diagonal[i]);
            z[i] = rational::frac(&((ub[i] + Rat::from_integer(shifts[i])) / d));
        }
        let y = rational::reduce_mod_one(&snf.v.mul_rat_vec(&z));
        components.push(y);
        let mut k = 0;
        while k < rank {
            shifts[k] += 1;
            if shifts[k] < snf.diagonal[k] {
                break;
            }
            shifts[k] = 0;
            k += 1;
        }
        if k == rank {
            break;
        }
    }
    components.sort();
    components.dedup();
    debug_assert_eq!(components.len() as u64, count);
    out.particular = components.first().cloned();
    out.components = components;
    Ok(out)
}

/// Integer kernel basis of `M` (columns of `V` beyond the rank).
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<i64>> {
    let snf = smith_normal_form(m);
    (snf.rank()..m.cols()).map(|j| snf.v.column(j)).collect()
}
