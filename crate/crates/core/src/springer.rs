//! Central classes, torsion points of the maximal torus and the twisted
//! fixed sets `A(g, x) = {u : g(u) = x·u}`.
//!
//! A torus point `u` is a rational vector in simple-coroot coordinates
//! modulo `ℤ^l`, standing for `Exp(u)` with `λ(Exp u) = exp(2π√−1⟨λ, u⟩)`.
//! The centre `Z ≅ P(R∨)/Q(R∨)` acts by `x·u = u − rep(x)`.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::alcove;
use crate::puiseux::cyclo::{poly_from_roots, CycloNumber};
use crate::rational::{self, Rat, RatVec};
use crate::rootsys::{coset_representatives, smith_solve, RootSystem};
use crate::weyl::{WeylElement, WeylGroup};

/// Default denominator bound for sampling points of positive-dimensional
/// solution sets.
pub const DEFAULT_DENOM_BOUND: i64 = 60;
/// Default number of samples for the same search.
pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpringerError {
    #[error("vector has {got} coordinates, expected {expected}")]
    Shape { expected: usize, got: usize },
    #[error("{0} is not in the coweight lattice P(R∨)")]
    NotCoweight(String),
    #[error("no central class with index {0}")]
    UnknownClass(usize),
    #[error("g(u) = x·u has no solution for this (w, x)")]
    Unsolvable,
}

/// An element of `P(R∨)/Q(R∨)`, stored through its canonical
/// representative `0` or `ω̄_j` with `j ∈ J`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CentralClass {
    rep: RatVec,
    /// `Some(j)` for `ω̄_j` (0-based), `None` for the trivial class.
    node: Option<usize>,
}

impl CentralClass {
    pub fn zero(rs: &RootSystem) -> Self {
        CentralClass {
            rep: rational::zeros(rs.rank()),
            node: None,
        }
    }

    /// The class of `ω̄_j`; `j` must be minuscule.
    pub fn fundamental(rs: &RootSystem, j: usize) -> Self {
        assert!(rs.minuscule().contains(&j), "node {} is not minuscule", j + 1);
        CentralClass {
            rep: rs.fund_coweight(j).to_vec(),
            node: Some(j),
        }
    }

    /// Class of an arbitrary coweight `v` (simple-coroot coordinates).
    pub fn new(rs: &RootSystem, v: &[Rat]) -> Result<Self, SpringerError> {
        if v.len() != rs.rank() {
            return Err(SpringerError::Shape {
                expected: rs.rank(),
                got: v.len(),
            });
        }
        if (0..rs.rank()).any(|i| !rs.simple_root_pairing(i, v).is_integer()) {
            return Err(SpringerError::NotCoweight(rational::fmt_vec(v)));
        }
        coset_representatives(rs)
            .into_iter()
            .find(|c| rational::is_integral(&rational::sub(v, &c.rep)))
            .ok_or_else(|| SpringerError::NotCoweight(rational::fmt_vec(v)))
    }

    /// Class by position in [`coset_representatives`] (0 is trivial).
    pub fn from_index(rs: &RootSystem, k: usize) -> Result<Self, SpringerError> {
        coset_representatives(rs)
            .into_iter()
            .nth(k)
            .ok_or(SpringerError::UnknownClass(k))
    }

    /// Class `ω̄_j` from a 1-based node label, `0` meaning the trivial class.
    pub fn from_node_label(rs: &RootSystem, j: usize) -> Result<Self, SpringerError> {
        if j == 0 {
            return Ok(Self::zero(rs));
        }
        if rs.minuscule().contains(&(j - 1)) {
            Ok(Self::fundamental(rs, j - 1))
        } else {
            Err(SpringerError::UnknownClass(j))
        }
    }

    pub fn rep(&self) -> &[Rat] {
        &self.rep
    }

    pub fn node(&self) -> Option<usize> {
        self.node
    }

    pub fn is_zero(&self) -> bool {
        self.node.is_none()
    }

    pub fn add(&self, rs: &RootSystem, other: &Self) -> Self {
        Self::new(rs, &rational::add(&self.rep, &other.rep)).expect("sum of coweights")
    }

    pub fn neg(&self, rs: &RootSystem) -> Self {
        Self::new(rs, &rational::neg(&self.rep)).expect("negated coweight")
    }

    pub fn scale(&self, rs: &RootSystem, k: i64) -> Self {
        Self::new(rs, &rational::scale(&Rat::from_integer(k), &self.rep)).expect("multiple of a coweight")
    }

    /// Order in `P(R∨)/Q(R∨)`.
    pub fn order(&self) -> usize {
        rational::common_denominator(&self.rep) as usize
    }

    /// `0` or `ω̄j` with 1-based `j`.
    pub fn label(&self) -> String {
        match self.node {
            None => "0".into(),
            Some(j) => format!("w{}", j + 1),
        }
    }
}

impl fmt::Display for CentralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node {
            None => write!(f, "[0]"),
            Some(j) => write!(f, "[ω̄{}]", j + 1),
        }
    }
}

/// A torsion point of the maximal torus, coordinates reduced to `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    coords: RatVec,
}

impl TorusPoint {
    pub fn new(v: &[Rat]) -> Self {
        TorusPoint {
            coords: rational::reduce_mod_one(v),
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Order of the point in the torus.
    pub fn order(&self) -> i64 {
        rational::common_denominator(&self.coords)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", rational::fmt_vec(&self.coords))
    }
}

/// `u` is regular iff `⟨α, u⟩ ∉ ℤ` for every root `α`.
pub fn is_regular(rs: &RootSystem, u: &TorusPoint) -> bool {
    rs.root_labels()[..rs.positive_roots().len()]
        .iter()
        .all(|labels| !RootSystem::label_pairing(labels, &u.coords).is_integer())
}

/// `x·u = u − rep(x)` modulo `ℤ^l`.
pub fn center_translate(x: &CentralClass, u: &TorusPoint) -> TorusPoint {
    TorusPoint::new(&rational::sub(&u.coords, &x.rep))
}

/// Solution set of `w(u) = x·u`, i.e. `(M_w − I)·u ≡ −rep(x) (mod ℤ^l)`.
#[derive(Debug, Clone)]
pub struct TwistedFixedSet {
    pub solvable: bool,
    pub dim: usize,
    pub particular: Option<TorusPoint>,
    /// One point in each connected component.
    pub components: Vec<TorusPoint>,
    /// Integer directions spanning the identity component.
    pub kernel_basis: Vec<Vec<i64>>,
}

impl TwistedFixedSet {
    /// Whether `u` satisfies the defining congruence exactly.
    pub fn verifies(w: &WeylElement, x: &CentralClass, u: &TorusPoint) -> bool {
        let lhs = w.matrix().mul_rat_vec(&u.coords);
        let rhs = rational::sub(&u.coords, &x.rep);
        rational::is_integral(&rational::sub(&lhs, &rhs))
    }
}

pub fn solve_twisted(rs: &RootSystem, w: &WeylElement, x: &CentralClass) -> TwistedFixedSet {
    assert_eq!(w.rank(), rs.rank());
    let m = w.matrix().sub_identity();
    let sol = smith_solve(&m, &rational::neg(&x.rep)).expect("torsion of M_w − I is bounded by |det|");
    TwistedFixedSet {
        solvable: sol.solvable,
        dim: sol.dim,
        particular: sol.particular.as_deref().map(TorusPoint::new),
        components: sol.components.iter().map(|c| TorusPoint::new(c)).collect(),
        kernel_basis: sol.kernel_basis,
    }
}

/// `a(x) = #{i : ϖ_i(x) = 1}`.
pub fn a_of(rs: &RootSystem, x: &CentralClass) -> usize {
    (0..rs.rank())
        .filter(|&i| rs.fund_weight_pairing(i, &x.rep).is_integer())
        .count()
}

/// `S_x = {w : A(w, x) ≠ ∅ and dim A(w, x) = a(x)}`, as indices into `group`.
pub fn regular_twist_set(rs: &RootSystem, x: &CentralClass, group: &WeylGroup) -> Vec<usize> {
    let a = a_of(rs, x);
    group
        .elements()
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            let s = solve_twisted(rs, w, x);
            s.solvable && s.dim == a
        })
        .map(|(k, _)| k)
        .collect()
}

/// Looks for a regular point of `A(w, x)`.
///
/// Finite solution sets are searched exhaustively; otherwise `samples`
/// points with parameter denominators at most `denom_bound` are drawn from
/// a generator seeded with `seed`.
pub fn find_regular_solution(
    rs: &RootSystem,
    w: &WeylElement,
    x: &CentralClass,
    denom_bound: i64,
    samples: usize,
    seed: u64,
) -> Result<Option<TorusPoint>, SpringerError> {
    let set = solve_twisted(rs, w, x);
    if !set.solvable {
        return Err(SpringerError::Unsolvable);
    }
    if set.dim == 0 {
        return Ok(set.components.into_iter().find(|u| is_regular(rs, u)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = denom_bound.max(1);
    for s in 0..samples {
        let base = &set.components[s % set.components.len()];
        let mut y = base.coords.clone();
        for dir in &set.kernel_basis {
            let d = rng.gen_range(1..=bound);
            let t = Rat::new(rng.gen_range(0..d), d);
            for (yk, dk) in y.iter_mut().zip(dir) {
                *yk += t * Rat::from_integer(*dk);
            }
        }
        let u = TorusPoint::new(&y);
        debug_assert!(TwistedFixedSet::verifies(w, x, &u));
        if is_regular(rs, &u) {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// `ϖ_i(x) = exp(−2π√−1⟨ϖ_i, rep(x)⟩)`.
pub fn fund_char_value(rs: &RootSystem, i: usize, x: &CentralClass) -> CycloNumber {
    CycloNumber::exp_2pi_i(-rs.fund_weight_pairing(i, &x.rep))
}

/// Both sides of the eigenvalue identity for `ψ(x)`.
#[derive(Debug, Clone)]
pub struct EigenvalueReport {
    pub char_poly: Vec<i64>,
    /// Exponents `k_i` with `ϖ_i(x)^{-1} = ζ_N^{k_i}`.
    pub exponents: Vec<i64>,
    pub level: usize,
    /// `Π (t − ζ_N^{k_i})` if all its coefficients are rational integers.
    pub product: Option<Vec<i64>>,
    pub pass: bool,
}

pub fn eigenvalue_report(rs: &RootSystem, x: &CentralClass) -> EigenvalueReport {
    let w = alcove::psi(rs, x).expect("ψ exists for every central class");
    let char_poly = w.char_poly();
    let n = x.order();
    let exponents: Vec<i64> = (0..rs.rank())
        .map(|i| {
            let k = rs.fund_weight_pairing(i, &x.rep) * Rat::from_integer(n as i64);
            k.to_integer().rem_euclid(n as i64)
        })
        .collect();
    let roots: Vec<CycloNumber> = exponents.iter().map(|k| CycloNumber::zeta(n, *k)).collect();
    let product: Option<Vec<i64>> = poly_from_roots(&roots)
        .iter()
        .map(|c| c.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer()))
        .collect();
    let pass = product.as_ref() == Some(&char_poly);
    EigenvalueReport {
        char_poly,
        exponents,
        level: n,
        product,
        pass,
    }
}

/// Whether the eigenvalues of `ψ(x)` are exactly the `ϖ_i(x)^{-1}`.
pub fn eigenvalue_check(rs: &RootSystem, x: &CentralClass) -> bool {
    eigenvalue_report(rs, x).pass
}

/// `c_i(u) = Σ_{λ ∈ W·ϖ_i} λ(u)` for each `i`, exactly.
pub fn chevalley_c(rs: &RootSystem, u: &TorusPoint) -> Vec<CycloNumber> {
    let orbits: Vec<Vec<Vec<i64>>> = (0..rs.rank()).map(|i| rs.fund_weight_orbit(i)).collect();
    chevalley_c_with_orbits(&orbits, u)
}

/// [`chevalley_c`] with precomputed fundamental-weight orbits.
pub fn chevalley_c_with_orbits(orbits: &[Vec<Vec<i64>>], u: &TorusPoint) -> Vec<CycloNumber> {
    let n = u.order().max(1) as usize;
    orbits
        .iter()
        .map(|orbit| {
            let mut counts = vec![Rat::zero(); n];
            for labels in orbit {
                let p = RootSystem::label_pairing(labels, &u.coords) * Rat::from_integer(n as i64);
                counts[p.to_integer().rem_euclid(n as i64) as usize] += Rat::from_integer(1);
            }
            CycloNumber::from_poly(n, counts)
        })
        .collect()
}
