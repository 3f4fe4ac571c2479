use thiserror::Error;

use crate::matrix::{IntMatrix, RatMatrix};
use crate::rational::{self, Rat, RatVec};

use super::smith::smith_normal_form;
use super::{Kind, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AmbientError {
    #[error("lattice basis must be square and invertible")]
    BadBasis,
    #[error("simple coroot {0} is not in the lattice spanned by the basis")]
    CorootNotInLattice(usize),
    #[error("root/coroot pairings do not reproduce the Cartan matrix")]
    PairingMismatch,
    #[error("derived group is not simply connected (restriction to the coroot lattice is not onto)")]
    NotSimplyConnected,
    #[error("vector has {got} coordinates, expected {expected}")]
    Dimension { expected: usize, got: usize },
}

/// The cocharacter lattice `X_*(A)` with the coroots placed inside it.
///
/// Ambient coordinates are arbitrary; internally everything is converted to
/// coordinates with respect to `basis`, in which `X_*(A) = ℤ^n` and the
/// character lattice `X^*(A)` is `ℤ^n` under the dot product.
#[derive(Debug, Clone)]
pub struct AmbientLattice {
    n: usize,
    basis: IntMatrix,
    basis_inv: RatMatrix,
    coroot_embed: IntMatrix,
    /// Simple coroots in basis coordinates (`n × l`).
    coroots: IntMatrix,
    /// Simple roots as characters in basis coordinates (`l × n`).
    root_chars: IntMatrix,
    /// `ω_1..ω_l` lift the fundamental weights, `ω_{l+1}..ω_n` span the
    /// characters vanishing on the coroots.
    char_basis: Vec<Vec<i64>>,
    label: String,
}

impl AmbientLattice {
    /// `basis`: columns generate `X_*(A)` (ambient coordinates);
    /// `coroot_embed`: simple coroots as columns (ambient coordinates);
    /// `root_chars`: simple roots as rows, acting on ambient coordinates by
    /// the dot product.
    pub fn new(
        rs: &RootSystem,
        basis: IntMatrix,
        coroot_embed: IntMatrix,
        root_chars: IntMatrix,
        label: impl Into<String>,
    ) -> Result<Self, AmbientError> {
        let n = basis.rows();
        let l = rs.rank();
        if !basis.is_square() || basis.det() == 0 {
            return Err(AmbientError::BadBasis);
        }
        if coroot_embed.rows() != n || coroot_embed.cols() != l {
            return Err(AmbientError::Dimension {
                expected: n,
                got: coroot_embed.rows(),
            });
        }
        if root_chars.rows() != l || root_chars.cols() != n {
            return Err(AmbientError::Dimension {
                expected: n,
                got: root_chars.cols(),
            });
        }
        let basis_inv = basis.to_rational().inverse().ok_or(AmbientError::BadBasis)?;
        let mut coroots = IntMatrix::zeros(n, l);
        for j in 0..l {
            let y = basis_inv.mul_vec(&rational::from_ints(&coroot_embed.column(j)));
            if !rational::is_integral(&y) {
                return Err(AmbientError::CorootNotInLattice(j + 1));
            }
            for i in 0..n {
                coroots[(i, j)] = y[i].to_integer();
            }
        }
        // characters pull back along x = B·y
        let root_chars_b = &root_chars * &basis;
        let pairing = &root_chars_b * &coroots;
        if pairing != rs.cartan().transpose() {
            return Err(AmbientError::PairingMismatch);
        }
        // Res: X^* → P(R), λ ↦ (⟨λ, α_j∨⟩)_j, is Yᵀ; it must be onto ℤ^l
        let res = coroots.transpose();
        let snf = smith_normal_form(&res);
        if snf.diagonal.iter().any(|d| *d != 1) {
            return Err(AmbientError::NotSimplyConnected);
        }
        // Yᵀ·V = U⁻¹·[I | 0]: λ = V·(U e_i, 0) lifts e_i, V e_j (j ≥ l) span the kernel
        let mut char_basis = Vec::with_capacity(n);
        for i in 0..l {
            let mut z = vec![0i64; n];
            for (k, zk) in z.iter_mut().enumerate().take(l) {
                *zk = snf.u[(k, i)];
            }
            char_basis.push(snf.v.mul_vec(&z));
        }
        for j in l..n {
            char_basis.push(snf.v.column(j));
        }
        Ok(AmbientLattice {
            n,
            basis,
            basis_inv,
            coroot_embed,
            coroots,
            root_chars: root_chars_b,
            char_basis,
            label: label.into(),
        })
    }

    /// Semisimple simply connected preset: `X_*(A) = Q(R∨)`, ambient
    /// coordinates are simple-coroot coordinates.
    pub fn simply_connected(rs: &RootSystem) -> Self {
        let l = rs.rank();
        let root_chars = rs.cartan().transpose();
        Self::new(
            rs,
            IntMatrix::identity(l),
            IntMatrix::identity(l),
            root_chars,
            format!("{} (simply connected)", rs.kind()),
        )
        .expect("simply connected preset is valid")
    }

    /// `GL_n`: `X_*(A) = ℤ^n`, `α_i∨ = e_i − e_{i+1}`, `α_i = e_i − e_{i+1}`.
    pub fn gl(n: usize) -> (RootSystem, Self) {
        assert!(n >= 2, "GL_n needs n ≥ 2");
        let rs = RootSystem::new(Kind::A(n - 1));
        let l = n - 1;
        let embed = IntMatrix::from_fn(n, l, |i, j| {
            if i == j {
                1
            } else if i == j + 1 {
                -1
            } else {
                0
            }
        });
        let chars = embed.transpose();
        let lat = Self::new(&rs, IntMatrix::identity(n), embed, chars, format!("GL{n}"))
            .expect("GL_n preset is valid");
        (rs, lat)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Ambient rank `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn semisimple_rank(&self) -> usize {
        self.coroots.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn coroot_embed(&self) -> &IntMatrix {
        &self.coroot_embed
    }

    /// Ambient coordinates → lattice (basis) coordinates.
    pub fn to_lattice(&self, v: &[Rat]) -> Result<RatVec, AmbientError> {
        if v.len() != self.n {
            return Err(AmbientError::Dimension {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(self.basis_inv.mul_vec(v))
    }

    /// Lattice coordinates → ambient coordinates.
    pub fn from_lattice(&self, y: &[Rat]) -> RatVec {
        self.basis.mul_rat_vec(y)
    }

    /// Simple coroot `α_i∨` in lattice coordinates.
    pub fn coroot(&self, i: usize) -> Vec<i64> {
        self.coroots.column(i)
    }

    pub fn coroot_matrix(&self) -> &IntMatrix {
        &self.coroots
    }

    /// Simple root `α_i` as a character in lattice coordinates.
    pub fn root_char(&self, i: usize) -> &[i64] {
        self.root_chars.row(i)
    }

    /// A root given in simple-root coordinates, as a character.
    pub fn root_character(&self, root: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.n];
        for (i, c) in root.iter().enumerate() {
            for (o, r) in out.iter_mut().zip(self.root_char(i)) {
                *o += c * r;
            }
        }
        out
    }

    /// The character basis `ω_1, …, ω_n` (lattice coordinates).
    pub fn char_basis(&self) -> &[Vec<i64>] {
        &self.char_basis
    }

    /// `⟨λ, x⟩` for a character and a lattice-coordinate cocharacter.
    pub fn pair(lambda: &[i64], x: &[Rat]) -> Rat {
        lambda
            .iter()
            .zip(x)
            .fold(Rat::from_integer(0), |acc, (a, b)| acc + b * Rat::from_integer(*a))
    }

    /// Action on `X_*(A)` (lattice coordinates) of the Weyl element whose
    /// matrix on simple-coroot coordinates is `m`.
    ///
    /// On the coroot span the action is `Y·M·Y⁺`; on the common kernel of
    /// the roots it is trivial.
    pub fn cocharacter_action(&self, m: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let y = self.coroots.to_rational();
        let r = self.root_chars.to_rational();
        let ry_inv = (&r * &y).inverse().expect("Cartan matrix is invertible");
        let proj_coeffs = &ry_inv * &r; // l × n: coefficients of the coroot-span part
        let ymc = &(&y * &m.to_rational()) * &proj_coeffs;
        let p = &y * &proj_coeffs;
        IntMatrix::from_fn(n, n, |i, j| {
            let id = Rat::from_integer(i64::from(i == j));
            let v = id - p[(i, j)] + ymc[(i, j)];
            assert!(v.is_integer(), "Weyl action is not integral on the lattice");
            v.to_integer()
        })
    }

    /// Recovers the coroot-coordinate matrix of a Weyl element from its
    /// action on `X_*(A)`; `None` if `a` does not preserve the coroot span
    /// integrally.
    pub fn coroot_matrix_of(&self, a: &IntMatrix) -> Option<IntMatrix> {
        let l = self.semisimple_rank();
        let y = self.coroots.to_rational();
        let r = self.root_chars.to_rational();
        let ry_inv = (&r * &y).inverse()?;
        let m = &(&(&ry_inv * &r) * &a.to_rational()) * &y;
        // the image of the coroot span must stay inside it
        let back = &y * &m;
        let direct = &a.to_rational() * &y;
        if back != direct {
            return None;
        }
        let mut out = IntMatrix::zeros(l, l);
        for i in 0..l {
            for j in 0..l {
                let v = m[(i, j)];
                if !v.is_integer() {
                    return None;
                }
                out[(i, j)] = v.to_integer();
            }
        }
        Some(out)
    }

    /// Action on characters: `(w·λ)(x) = λ(w⁻¹·x)`; returned as the matrix
    /// acting on character coordinate columns.
    pub fn character_action(&self, m: &IntMatrix) -> IntMatrix {
        let a = self.cocharacter_action(m);
        let inv = a.to_rational().inverse().expect("Weyl action is invertible");
        IntMatrix::from_fn(self.n, self.n, |i, j| {
            let v = inv[(j, i)];
            assert!(v.is_integer());
            v.to_integer()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn gl_preset_is_standard() {
        let (rs, lat) = AmbientLattice::gl(4);
        assert_eq!(rs.kind(), Kind::A(3));
        assert_eq!(lat.coroot(0), vec![1, -1, 0, 0]);
        assert_eq!(lat.root_char(2), &[0, 0, 1, -1]);
        // the last basis character is ± det
        let last = lat.char_basis().last().unwrap();
        assert!(last.iter().all(|c| c.abs() == 1) && last.iter().all(|c| *c == last[0]));
        // ω_i restrict to ϖ_i
        for i in 0..3 {
            for j in 0..3 {
                let p: i64 = lat.char_basis()[i]
                    .iter()
                    .zip(lat.coroot(j))
                    .map(|(a, b)| a * b)
                    .sum();
                assert_eq!(p, i64::from(i == j));
            }
        }
    }

    #[test]
    fn reflection_permutes_gl_coordinates() {
        let (rs, lat) = AmbientLattice::gl(3);
        let a = lat.cocharacter_action(rs.simple_reflection(0));
        assert_eq!(a.to_rows(), vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        let c = lat.character_action(rs.simple_reflection(1));
        assert_eq!(c.to_rows(), vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
    }

    #[test]
    fn simply_connected_preset_uses_coroot_coordinates() {
        let rs = RootSystem::new(Kind::B(3));
        let lat = AmbientLattice::simply_connected(&rs);
        assert_eq!(lat.n(), 3);
        let v = vec![rat(1, 2), int(0), int(1)];
        assert_eq!(lat.to_lattice(&v).unwrap(), v);
        assert_eq!(lat.cocharacter_action(rs.simple_reflection(2)), *rs.simple_reflection(2));
    }

    #[test]
    fn rejects_adjoint_lattice() {
        // PGL_2: X_* = P(R∨) = (1/2)ℤ α∨; in a basis where the generator is 1,
        // the coroot is 2 and Res is multiplication by 2
        let rs = RootSystem::new(Kind::A(1));
        let err = AmbientLattice::new(
            &rs,
            IntMatrix::identity(1),
            IntMatrix::from_rows(&[vec![2]]),
            IntMatrix::from_rows(&[vec![1]]),
            "PGL2",
        )
        .unwrap_err();
        assert_eq!(err, AmbientError::NotSimplyConnected);
    }
}
