//! The fundamental alcove, its barycenter and the homomorphism
//! `ψ: P(R∨)/Q(R∨) → W`.
//!
//! The affine space `E` is identified with `V*` through the vertex `0`, so
//! alcove points are coroot-coordinate vectors and the wall `α_0` reads
//! `1 − ⟨α̃, ·⟩`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::rational::{self, Rat, RatVec};
use crate::rootsys::{coset_representatives, RootSystem};
use crate::springer::CentralClass;
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlcoveError {
    #[error("no Weyl element maps e to e − rep({0}); root-system data is inconsistent")]
    NoSolution(String),
}

/// A point of `E = V*` in simple-coroot coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlcovePoint {
    coords: RatVec,
}

impl AlcovePoint {
    pub fn new(coords: RatVec) -> Self {
        AlcovePoint { coords }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Values of the affine walls at the point: index 0 is
    /// `1 − ⟨α̃, p⟩`, index `i` is `⟨α_i, p⟩`.
    pub fn wall_values(&self, rs: &RootSystem) -> Vec<Rat> {
        let simple: Vec<Rat> = (0..rs.rank())
            .map(|i| rs.simple_root_pairing(i, &self.coords))
            .collect();
        let top = simple
            .iter()
            .zip(rs.highest_root())
            .fold(Rat::zero(), |acc, (v, d)| acc + v * Rat::from_integer(*d));
        std::iter::once(Rat::one() - top).chain(simple).collect()
    }

    pub fn is_interior(&self, rs: &RootSystem) -> bool {
        self.wall_values(rs).iter().all(rational::is_positive)
    }

    pub fn in_closure(&self, rs: &RootSystem) -> bool {
        self.wall_values(rs).iter().all(|v| *v >= Rat::zero())
    }

    /// Number of walls through the point.
    pub fn wall_count(&self, rs: &RootSystem) -> usize {
        self.wall_values(rs).iter().filter(|v| v.is_zero()).count()
    }
}

/// `p ↦ w(p) + t`, an element of the extended affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: WeylElement,
    pub translation: RatVec,
}

impl AffineMap {
    pub fn identity(l: usize) -> Self {
        AffineMap {
            linear: WeylElement::identity(l),
            translation: rational::zeros(l),
        }
    }

    pub fn new(linear: WeylElement, translation: RatVec) -> Self {
        AffineMap {
            linear,
            translation,
        }
    }

    /// `(w, t)∘(w′, t′) = (w w′, t + w·t′)`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            linear: self.linear.mul(&other.linear),
            translation: rational::add(
                &self.translation,
                &self.linear.matrix().mul_rat_vec(&other.translation),
            ),
        }
    }

    pub fn apply(&self, p: &AlcovePoint) -> AlcovePoint {
        AlcovePoint::new(rational::add(
            &self.linear.matrix().mul_rat_vec(&p.coords),
            &self.translation,
        ))
    }

    /// Whether the translation part lies in `P(R∨)`.
    pub fn translation_is_coweight(&self, rs: &RootSystem) -> bool {
        (0..rs.rank()).all(|i| rs.simple_root_pairing(i, &self.translation).is_integer())
    }
}

/// The `l + 1` vertices `0` and `ω̄_i/δ_i`.
pub fn fundamental_alcove_vertices(rs: &RootSystem) -> Vec<AlcovePoint> {
    let l = rs.rank();
    let mut out = vec![AlcovePoint::new(rational::zeros(l))];
    for i in 0..l {
        let d = Rat::from_integer(rs.marks()[i + 1]);
        out.push(AlcovePoint::new(rational::scale(&(Rat::one() / d), rs.fund_coweight(i))));
    }
    out
}

/// Arithmetic mean of the vertices of the fundamental alcove.
pub fn barycenter(rs: &RootSystem) -> AlcovePoint {
    let verts = fundamental_alcove_vertices(rs);
    let n = Rat::from_integer(verts.len() as i64);
    let sum = verts
        .iter()
        .fold(rational::zeros(rs.rank()), |acc, v| rational::add(&acc, &v.coords));
    AlcovePoint::new(rational::scale(&(Rat::one() / n), &sum))
}

/// The unique `w ∈ W` with `w(e) = e − rep(μ)`.
///
/// The target `e − rep(μ)` is folded into the dominant chamber by simple
/// reflections; since `e` is regular the folding word is the answer.
pub fn psi(rs: &RootSystem, mu: &CentralClass) -> Result<WeylElement, AlcoveError> {
    let table = psi_table(rs);
    table
        .entries
        .iter()
        .find(|(c, _)| c == mu)
        .map(|(_, w)| w.clone())
        .ok_or_else(|| AlcoveError::NoSolution(mu.to_string()))
}

fn psi_by_folding(rs: &RootSystem, e: &[Rat], mu: &CentralClass) -> Result<WeylElement, AlcoveError> {
    let mut p = rational::sub(e, mu.rep());
    let mut word = Vec::new();
    // each step lowers the number of positive roots negative on p
    while let Some(i) = (0..rs.rank()).find(|&i| rs.simple_root_pairing(i, &p) < Rat::zero()) {
        p = rs.simple_reflection(i).mul_rat_vec(&p);
        word.push(i);
        if word.len() > rs.roots().len() {
            return Err(AlcoveError::NoSolution(mu.to_string()));
        }
    }
    if p != e {
        return Err(AlcoveError::NoSolution(mu.to_string()));
    }
    let w = WeylElement::from_word(rs, &word);
    debug_assert_eq!(w.matrix().mul_rat_vec(e), rational::sub(e, mu.rep()));
    Ok(w)
}

/// `ψ(μ)` found by scanning an enumerated group, as an independent check
/// of [`psi`].
pub fn psi_by_search(rs: &RootSystem, mu: &CentralClass, group: &WeylGroup) -> Option<WeylElement> {
    let e = barycenter(rs);
    let target = rational::sub(&e.coords, mu.rep());
    let mut hits = group
        .elements()
        .iter()
        .filter(|w| w.matrix().mul_rat_vec(&e.coords) == target);
    let first = hits.next().cloned();
    // the stabiliser of e is trivial
    debug_assert!(hits.next().is_none());
    first
}

/// Whether `(ψ(μ), rep(μ))` permutes the vertices of `C` and fixes `e`.
pub fn validate_alcove_automorphism(rs: &RootSystem, mu: &CentralClass) -> bool {
    let Ok(w) = psi(rs, mu) else {
        return false;
    };
    let map = AffineMap::new(w, mu.rep().to_vec());
    let mut verts = fundamental_alcove_vertices(rs);
    let mut images: Vec<AlcovePoint> = verts.iter().map(|v| map.apply(v)).collect();
    verts.sort();
    images.sort();
    let e = barycenter(rs);
    verts == images && map.apply(&e) == e
}

/// `ψ` on every coset, in the order of [`coset_representatives`].
#[derive(Debug)]
pub struct PsiTable {
    pub barycenter: AlcovePoint,
    pub entries: Vec<(CentralClass, WeylElement)>,
}

impl PsiTable {
    fn build(rs: &RootSystem) -> Result<Self, AlcoveError> {
        let e = barycenter(rs);
        let entries = coset_representatives(rs)
            .into_iter()
            .map(|mu| psi_by_folding(rs, &e.coords, &mu).map(|w| (mu, w)))
            .collect::<Result<_, _>>()?;
        Ok(PsiTable {
            barycenter: e,
            entries,
        })
    }
}

/// Memoised [`PsiTable`] for a root system (keyed by Cartan matrix).
pub fn psi_table(rs: &RootSystem) -> Arc<PsiTable> {
    type Cache = Mutex<HashMap<IntMatrix, Arc<PsiTable>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache lock").get(rs.cartan()) {
        return Arc::clone(t);
    }
    let t = Arc::new(PsiTable::build(rs).expect("ψ exists for valid root systems"));
    cache
        .lock()
        .expect("cache lock")
        .insert(rs.cartan().clone(), Arc::clone(&t));
    t
}
