//! Root-system data and the integer-lattice utilities everything else uses.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * the Cartan matrix has entry `(i, j) = ⟨α_j, α_i∨⟩`;
//! * coweight-side vectors (coroots, coweights, torus and alcove points) are
//!   written in the basis of simple coroots, so `Q(R∨) = ℤ^l`;
//! * roots are written in the basis of simple roots, and weights are also
//!   available as Dynkin labels (coordinates in the fundamental weights), in
//!   which the pairing with a coroot-basis vector is the plain dot product.

mod ambient;
mod kind;
pub mod smith;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

pub use ambient::{AmbientError, AmbientLattice};
pub use kind::{Kind, TypeSpec};
pub use smith::{smith_normal_form, smith_solve, LatticeSolution, SmithError, SmithForm};

use crate::matrix::{IntMatrix, RatMatrix};
use crate::rational::{Rat, RatVec};
use crate::springer::CentralClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("rank outside the supported range in `{0}`")]
    RankOutOfRange(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type")]
    NotFinite,
    #[error("Cartan matrix is reducible")]
    Reducible,
}

const MAX_ROOTS: usize = 1000;

/// Complete combinatorial datum of a reduced irreducible root system.
#[derive(Clone)]
pub struct RootSystem {
    kind: Kind,
    cartan: IntMatrix,
    inv_cartan: RatMatrix,
    /// All roots in the simple-root basis; positive roots first.
    roots: Vec<Vec<i64>>,
    /// Dynkin labels `⟨α, α_j∨⟩` of each root, same order as `roots`.
    root_labels: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    highest_root: Vec<i64>,
    /// `δ_0 = 1` at index 0, then `δ_1..δ_l`.
    marks: Vec<i64>,
    /// Simple-root indices (0-based) with mark 1.
    minuscule: Vec<usize>,
    fund_coweights: Vec<RatVec>,
    /// Simple reflections acting on simple-coroot coordinates.
    reflections: Vec<IntMatrix>,
    root_lengths: Vec<i64>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("kind", &self.kind)
            .field("cartan", &self.cartan)
            .finish_non_exhaustive()
    }
}

/// Builds the root system of a supported type string such as `"A3"` or `"G2"`.
pub fn build_root_system(kind: &str) -> Result<RootSystem, RootSystemError> {
    let kind: Kind = kind.parse()?;
    Ok(RootSystem::new(kind))
}

/// Orbit closure of `seeds` under `step(v, i)` for `i in 0..gens`.
fn closure(
    seeds: Vec<Vec<i64>>,
    gens: usize,
    step: impl Fn(&[i64], usize) -> Vec<i64>,
) -> Result<Vec<Vec<i64>>, RootSystemError> {
    let mut seen: HashSet<Vec<i64>> = seeds.iter().cloned().collect();
    let mut out = seeds.clone();
    let mut queue: VecDeque<Vec<i64>> = seeds.into();
    while let Some(v) = queue.pop_front() {
        for i in 0..gens {
            let w = step(&v, i);
            if seen.insert(w.clone()) {
                if seen.len() > MAX_ROOTS {
                    return Err(RootSystemError::NotFinite);
                }
                out.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(out)
}

fn unit(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    v[i] = 1;
    v
}

impl RootSystem {
    /// Root system of a supported type, with Bourbaki labelling.
    pub fn new(kind: Kind) -> Self {
        let rs = Self::from_cartan_labelled(&kind.cartan(), Some(kind))
            .expect("shipped Cartan data is valid");
        debug_assert_eq!(rs.roots.len(), kind.root_count());
        rs
    }

    /// Root system of an arbitrary irreducible finite-type Cartan matrix
    /// (used for Levi subsystems). The type label is recovered by
    /// classification.
    pub fn from_cartan(cartan: &IntMatrix) -> Result<Self, RootSystemError> {
        Self::from_cartan_labelled(cartan, None)
    }

    fn from_cartan_labelled(
        cartan: &IntMatrix,
        label: Option<Kind>,
    ) -> Result<Self, RootSystemError> {
        let l = cartan.rows();
        if l == 0 || !cartan.is_square() {
            return Err(RootSystemError::InvalidCartan("empty or non-square".into()));
        }
        for i in 0..l {
            if cartan[(i, i)] != 2 {
                return Err(RootSystemError::InvalidCartan("diagonal entry ≠ 2".into()));
            }
            for j in 0..l {
                if i != j {
                    if cartan[(i, j)] > 0 {
                        return Err(RootSystemError::InvalidCartan(
                            "positive off-diagonal entry".into(),
                        ));
                    }
                    if (cartan[(i, j)] == 0) != (cartan[(j, i)] == 0) {
                        return Err(RootSystemError::InvalidCartan(
                            "zero pattern not symmetric".into(),
                        ));
                    }
                }
            }
        }
        // connectivity of the Dynkin diagram
        let mut seen = vec![false; l];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..l {
                if !seen[j] && cartan[(i, j)] != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(RootSystemError::Reducible);
        }
        let det = cartan.det();
        if det <= 0 {
            return Err(RootSystemError::NotFinite);
        }
        let inv_cartan = cartan
            .to_rational()
            .inverse()
            .ok_or(RootSystemError::NotFinite)?;

        // s_i(λ) = λ − ⟨λ, α_i∨⟩ α_i on root coordinates, ⟨λ, α_i∨⟩ = (Cλ)_i
        let roots = closure((0..l).map(|i| unit(l, i)).collect(), l, |v, i| {
            let pairing: i64 = (0..l).map(|k| cartan[(i, k)] * v[k]).sum();
            let mut w = v.to_vec();
            w[i] -= pairing;
            w
        })?;
        // s_i(v) = v − ⟨α_i, v⟩ α_i∨ on coroot coordinates, ⟨α_i, v⟩ = (Cᵀv)_i
        let coroots = closure((0..l).map(|i| unit(l, i)).collect(), l, |v, i| {
            let pairing: i64 = (0..l).map(|k| cartan[(k, i)] * v[k]).sum();
            let mut w = v.to_vec();
            w[i] -= pairing;
            w
        })?;
        if roots.len() != coroots.len() {
            return Err(RootSystemError::NotFinite);
        }
        for r in &roots {
            let pos = r.iter().all(|c| *c >= 0);
            let negv = r.iter().all(|c| *c <= 0);
            if !pos && !negv {
                return Err(RootSystemError::NotFinite);
            }
        }
        let mut positive: Vec<Vec<i64>> =
            roots.iter().filter(|r| r.iter().all(|c| *c >= 0)).cloned().collect();
        positive.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
        let negative: Vec<Vec<i64>> = positive
            .iter()
            .map(|r| r.iter().map(|c| -c).collect())
            .collect();
        let highest_root = positive.last().cloned().expect("nonempty root system");
        let roots: Vec<Vec<i64>> = positive.into_iter().chain(negative).collect();
        let root_labels = roots.iter().map(|r| cartan.mul_vec(r)).collect();

        let mut marks = vec![1];
        marks.extend(highest_root.iter().copied());
        let minuscule = (0..l).filter(|&i| highest_root[i] == 1).collect();
        let inv_t = inv_cartan.transpose();
        let fund_coweights = (0..l).map(|j| inv_t.column(j)).collect();
        let reflections = (0..l)
            .map(|i| {
                let mut s = IntMatrix::identity(l);
                for k in 0..l {
                    s[(i, k)] -= cartan[(k, i)];
                }
                s
            })
            .collect();
        let root_lengths = symmetrizer(cartan);
        let mut rs = RootSystem {
            kind: Kind::A(l),
            cartan: cartan.clone(),
            inv_cartan,
            roots,
            root_labels,
            coroots,
            highest_root,
            marks,
            minuscule,
            fund_coweights,
            reflections,
            root_lengths,
        };
        rs.kind = match label {
            Some(k) => k,
            None => rs.classify()?,
        };
        Ok(rs)
    }

    /// Recovers the Cartan–Killing type from rank, root count, determinant
    /// and the number of long roots.
    fn classify(&self) -> Result<Kind, RootSystemError> {
        let l = self.rank();
        let n = self.roots.len();
        let det = self.cartan.det();
        let long = self.long_root_count();
        let kind = if n == l * (l + 1) && det == (l as i64) + 1 {
            Kind::A(l)
        } else if n == 2 * l * l && det == 2 {
            // B_l has 2l short roots; C_l has 2l long roots
            if l == 2 || long == 2 * l * (l - 1) {
                Kind::B(l)
            } else {
                Kind::C(l)
            }
        } else if l >= 4 && n == 2 * l * (l - 1) && det == 4 {
            Kind::D(l)
        } else {
            match (l, n) {
                (6, 72) => Kind::E(6),
                (7, 126) => Kind::E(7),
                (8, 240) => Kind::E(8),
                (4, 48) => Kind::F4,
                (2, 12) => Kind::G2,
                _ => return Err(RootSystemError::NotFinite),
            }
        };
        Ok(kind)
    }

    fn long_root_count(&self) -> usize {
        let lens: Vec<i64> = self.roots.iter().map(|r| self.root_length(r)).collect();
        let max = lens.iter().copied().max().unwrap_or(0);
        lens.iter().filter(|x| **x == max).count()
    }

    /// Squared length of a root (root coordinates) in the invariant form
    /// normalised by the symmetrizer.
    fn root_length(&self, r: &[i64]) -> i64 {
        // (α, β) = Σ a_i b_j d_i C_ij with d_i C_ij symmetric
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            for j in 0..l {
                s += r[i] * r[j] * self.root_lengths[i] * self.cartan[(i, j)];
            }
        }
        s
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.cartan.rows()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &RatMatrix {
        &self.inv_cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn root_labels(&self) -> &[Vec<i64>] {
        &self.root_labels
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.highest_root
    }

    /// `(δ_0, δ_1, …, δ_l)` with `δ_0 = 1`.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// The set `J` of simple-root indices with mark 1 (0-based).
    pub fn minuscule(&self) -> &[usize] {
        &self.minuscule
    }

    /// Fundamental coweight `ω̄_j` (0-based `j`) in simple-coroot coordinates.
    pub fn fund_coweight(&self, j: usize) -> &[Rat] {
        &self.fund_coweights[j]
    }

    pub fn fund_coweights(&self) -> &[RatVec] {
        &self.fund_coweights
    }

    /// Fundamental weight `ϖ_i` in simple-root coordinates (column `i` of
    /// the inverse Cartan matrix).
    pub fn fund_weight(&self, i: usize) -> RatVec {
        self.inv_cartan.column(i)
    }

    pub fn simple_reflection(&self, i: usize) -> &IntMatrix {
        &self.reflections[i]
    }

    pub fn simple_reflections(&self) -> &[IntMatrix] {
        &self.reflections
    }

    /// Simple reflection acting on Dynkin-label coordinates of weights.
    pub fn weight_reflection(&self, i: usize, labels: &[i64]) -> Vec<i64> {
        // s_i(λ) = λ − c_i α_i and α_i has labels (C(j, i))_j
        let c = labels[i];
        (0..self.rank())
            .map(|j| labels[j] - c * self.cartan[(j, i)])
            .collect()
    }

    /// `⟨α_i, v⟩` for a coroot-coordinate vector `v`.
    pub fn simple_root_pairing(&self, i: usize, v: &[Rat]) -> Rat {
        (0..self.rank()).fold(Rat::zero(), |acc, k| {
            acc + v[k] * Rat::from_integer(self.cartan[(k, i)])
        })
    }

    /// `⟨λ, v⟩` for a weight given by Dynkin labels and a coroot-coordinate `v`.
    pub fn label_pairing(labels: &[i64], v: &[Rat]) -> Rat {
        labels
            .iter()
            .zip(v)
            .fold(Rat::zero(), |acc, (a, b)| acc + b * Rat::from_integer(*a))
    }

    /// `⟨ϖ_i, v⟩`, which is simply the `i`-th coroot coordinate.
    pub fn fund_weight_pairing(&self, i: usize, v: &[Rat]) -> Rat {
        v[i]
    }

    /// `|P(R∨)/Q(R∨)| = det(cartan)`.
    pub fn center_order(&self) -> usize {
        self.cartan.det() as usize
    }

    /// W-orbit of the fundamental weight `ϖ_i`, as Dynkin labels.
    pub fn fund_weight_orbit(&self, i: usize) -> Vec<Vec<i64>> {
        let l = self.rank();
        closure(vec![unit(l, i)], l, |v, k| self.weight_reflection(k, v))
            .expect("weight orbits are finite")
    }

    /// `2ρ` in Dynkin labels (all labels equal 2).
    pub fn two_rho_labels(&self) -> Vec<i64> {
        let l = self.rank();
        let mut acc = vec![0; l];
        for r in &self.root_labels[..self.roots.len() / 2] {
            for (a, b) in acc.iter_mut().zip(r) {
                *a += b;
            }
        }
        acc
    }
}

/// Returns the canonical coset representatives `{ω̄_j : j ∈ J ∪ {0}}` of
/// `P(R∨)/Q(R∨)`, trivial class first.
pub fn coset_representatives(rs: &RootSystem) -> Vec<CentralClass> {
    let mut out = vec![CentralClass::zero(rs)];
    out.extend(rs.minuscule().iter().map(|&j| CentralClass::fundamental(rs, j)));
    out
}

/// Positive integers `d_i` with `d_i·C(i, j)` symmetric, smallest choice.
fn symmetrizer(cartan: &IntMatrix) -> Vec<i64> {
    let l = cartan.rows();
    // rational propagation along the (connected) diagram, then clear denominators
    let mut d: Vec<Option<Rat>> = vec![None; l];
    d[0] = Some(Rat::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && cartan[(i, j)] != 0 && d[j].is_none() {
                // d_i C_ij = d_j C_ji
                let di = d[i].expect("visited");
                d[j] = Some(di * Rat::from_integer(cartan[(i, j)]) / Rat::from_integer(cartan[(j, i)]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rat> = d.into_iter().map(|x| x.unwrap_or_else(|| Rat::from_integer(1))).collect();
    let den = crate::rational::common_denominator(&d);
    d.iter().map(|x| (x * Rat::from_integer(den)).to_integer()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn a1_data() {
        let rs = build_root_system("A1").unwrap();
        assert_eq!(rs.roots().len(), 2);
        assert_eq!(rs.cartan().to_rows(), vec![vec![2]]);
        assert_eq!(rs.marks(), &[1, 1]);
        assert_eq!(rs.minuscule(), &[0]);
        assert_eq!(rs.fund_coweight(0), &[rat(1, 2)]);
    }

    #[test]
    fn type_a_is_all_minuscule() {
        let rs = build_root_system("A3").unwrap();
        assert_eq!(rs.minuscule(), &[0, 1, 2]);
    }

    #[test]
    fn g2_marks() {
        let rs = build_root_system("G2").unwrap();
        // α̃ = 3α_1 + 2α_2 with α_1 short
        assert_eq!(rs.highest_root(), &[3, 2]);
        assert_eq!(rs.marks(), &[1, 3, 2]);
        assert!(rs.minuscule().is_empty());
    }

    #[test]
    fn coset_representatives_match_examples() {
        let a2 = build_root_system("A2").unwrap();
        let reps = coset_representatives(&a2);
        assert_eq!(reps.len(), 3);
        assert_eq!(reps[1].rep(), &[rat(2, 3), rat(1, 3)]);
        assert_eq!(reps[2].rep(), &[rat(1, 3), rat(2, 3)]);
        // pairwise differences are not in Q(R∨) = ℤ^2
        for a in &reps {
            for b in &reps {
                if a != b {
                    assert!(!crate::rational::is_integral(&crate::rational::sub(a.rep(), b.rep())));
                }
            }
        }
        assert_eq!(coset_representatives(&build_root_system("G2").unwrap()).len(), 1);
        let a1 = coset_representatives(&build_root_system("A1").unwrap());
        assert_eq!(a1.len(), 2);
        assert_eq!(a1[0].rep(), &[int(0)]);
    }

    #[test]
    fn invariants_for_every_supported_type() {
        for kind in Kind::all_supported() {
            let rs = RootSystem::new(kind);
            let l = rs.rank();
            assert_eq!(rs.roots().len(), kind.root_count(), "{kind}");
            assert_eq!(rs.center_order(), coset_representatives(&rs).len(), "{kind}");
            // δ_0 = 1 and α̃ = Σ δ_i α_i
            assert_eq!(rs.marks()[0], 1);
            assert_eq!(&rs.marks()[1..], rs.highest_root());
            // closure under simple reflections
            let set: HashSet<&Vec<i64>> = rs.roots().iter().collect();
            for r in rs.roots() {
                for i in 0..l {
                    let pairing: i64 = (0..l).map(|k| rs.cartan()[(i, k)] * r[k]).sum();
                    let mut s = r.clone();
                    s[i] -= pairing;
                    assert!(set.contains(&s), "{kind}: closure");
                }
            }
            // ⟨α_i, ω̄_j⟩ = δ_ij and ⟨ϖ_i, α_j∨⟩ = δ_ij
            for i in 0..l {
                for j in 0..l {
                    let expect = int(i64::from(i == j));
                    assert_eq!(rs.simple_root_pairing(i, rs.fund_coweight(j)), expect);
                    let w = rs.fund_weight(i);
                    let pairing = (0..l).fold(Rat::zero(), |acc, k| {
                        acc + w[k] * Rat::from_integer(rs.cartan()[(j, k)])
                    });
                    assert_eq!(pairing, expect);
                }
            }
            // classification recovers the label
            let re = RootSystem::from_cartan(rs.cartan()).unwrap();
            match kind {
                Kind::C(2) => assert_eq!(re.kind(), Kind::B(2)),
                _ => assert_eq!(re.kind(), kind),
            }
        }
    }

    #[test]
    fn rejects_bad_cartan() {
        let reducible = IntMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(RootSystem::from_cartan(&reducible).unwrap_err(), RootSystemError::Reducible);
        let affine = IntMatrix::from_rows(&[vec![2, -2], vec![-2, 2]]);
        assert_eq!(RootSystem::from_cartan(&affine).unwrap_err(), RootSystemError::NotFinite);
        assert!(build_root_system("Q7").is_err());
        assert!(build_root_system("B9").is_err());
    }
}
