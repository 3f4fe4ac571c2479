//! Weyl group elements as integer matrices on simple-coroot coordinates.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::rational::RatVec;
use crate::rootsys::{Kind, RootSystem};

/// Default bound on the group order for full enumeration (covers E6).
pub const DEFAULT_CAP: usize = 60_000;

const MAX_ORDER: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error(
        "Weyl group of {kind} has order {classical}, above the cap {cap} \
         (enumeration stopped after {partial} elements)"
    )]
    CapExceeded {
        kind: Kind,
        partial: usize,
        classical: u64,
        cap: usize,
    },
    #[error("vector has {got} coordinates, expected {expected}")]
    Shape { expected: usize, got: usize },
    #[error("element is not in the enumerated group")]
    NotInGroup,
}

/// An element of `W`, acting on simple-coroot coordinates.
///
/// The optional word `[i_1, …, i_k]` stands for `s_{i_1}⋯s_{i_k}` (0-based
/// indices).
#[derive(Clone)]
pub struct WeylElement {
    matrix: IntMatrix,
    word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({self}, {:?})", self.matrix)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.word {
            Some(w) if w.is_empty() => write!(f, "1"),
            Some(w) => {
                for i in w {
                    write!(f, "s{}", i + 1)?;
                }
                Ok(())
            }
            None => write!(f, "{:?}", self.matrix.to_rows()),
        }
    }
}

/// `S_i·M`: only row `i` changes.
fn left_simple(rs: &RootSystem, m: &IntMatrix, i: usize) -> IntMatrix {
    let l = rs.rank();
    let c = rs.cartan();
    let mut out = m.clone();
    for b in 0..l {
        let s: i64 = (0..l).map(|k| c[(k, i)] * m[(k, b)]).sum();
        out[(i, b)] -= s;
    }
    out
}

/// `M·S_i`: `(M S_i)[a][b] = M[a][b] − M[a][i]·C[b][i]`.
fn right_simple(rs: &RootSystem, m: &IntMatrix, i: usize) -> IntMatrix {
    let l = rs.rank();
    let c = rs.cartan();
    let mut out = m.clone();
    for a in 0..l {
        let mai = m[(a, i)];
        if mai != 0 {
            for b in 0..l {
                out[(a, b)] -= mai * c[(b, i)];
            }
        }
    }
    out
}

impl WeylElement {
    pub fn identity(l: usize) -> Self {
        WeylElement {
            matrix: IntMatrix::identity(l),
            word: Some(Vec::new()),
        }
    }

    /// Simple reflection `s_i` (0-based).
    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        WeylElement {
            matrix: rs.simple_reflection(i).clone(),
            word: Some(vec![i]),
        }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut m = IntMatrix::identity(rs.rank());
        for &i in word {
            m = right_simple(rs, &m, i);
        }
        WeylElement {
            matrix: m,
            word: Some(word.to_vec()),
        }
    }

    /// Wraps a matrix without checking membership in `W`.
    pub fn from_matrix(matrix: IntMatrix) -> Self {
        WeylElement { matrix, word: None }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        WeylElement {
            matrix: &self.matrix * &other.matrix,
            word,
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let inv = self
            .matrix
            .to_rational()
            .inverse()
            .expect("Weyl elements are invertible");
        let l = self.rank();
        let matrix = IntMatrix::from_fn(l, l, |i, j| {
            let v = inv[(i, j)];
            assert!(v.is_integer(), "inverse is not integral");
            v.to_integer()
        });
        WeylElement {
            matrix,
            word: self.word.as_ref().map(|w| w.iter().rev().copied().collect()),
        }
    }

    pub fn pow(&self, k: usize) -> WeylElement {
        let mut acc = WeylElement::identity(self.rank());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Matrix–vector product on coroot coordinates.
    pub fn act(&self, v: &[crate::Rat]) -> Result<RatVec, WeylError> {
        if v.len() != self.rank() {
            return Err(WeylError::Shape {
                expected: self.rank(),
                got: v.len(),
            });
        }
        Ok(self.matrix.mul_rat_vec(v))
    }

    /// Contragredient action on weights given by Dynkin labels:
    /// `labels(w·λ) = M⁻ᵀ·labels(λ)`.
    pub fn act_on_labels(&self, labels: &[i64]) -> Vec<i64> {
        self.inverse().matrix.transpose().mul_vec(labels)
    }

    /// `det(t − M)`, coefficients from the constant term up.
    pub fn char_poly(&self) -> Vec<i64> {
        self.matrix.char_poly()
    }

    pub fn order(&self) -> usize {
        let mut acc = self.matrix.clone();
        for k in 1..=MAX_ORDER {
            if acc.is_identity() {
                return k;
            }
            acc = &acc * &self.matrix;
        }
        panic!("matrix has no finite order up to {MAX_ORDER}");
    }

    /// Whether the matrix permutes the coroots of `rs`.
    pub fn permutes_roots(&self, rs: &RootSystem) -> bool {
        let set: HashSet<&Vec<i64>> = rs.coroots().iter().collect();
        rs.coroots()
            .iter()
            .all(|c| set.contains(&self.matrix.mul_vec(c)))
    }
}

/// Renders a polynomial given from the constant term up, e.g. `t^2 + t + 1`.
pub fn format_poly(coeffs: &[i64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        let mag = c.abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag == 1 {
            mono
        } else {
            format!("{mag}{mono}")
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if c < 0 { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

/// A fully enumerated Weyl group in breadth-first order (by word length,
/// ties broken lexicographically).
pub struct WeylGroup {
    kind: Kind,
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, usize>,
    class_ids: OnceLock<Vec<usize>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylGroup({}, {} elements)", self.kind, self.elements.len())
    }
}

/// Enumerates `W(R)`, failing once more than `cap` elements are found.
pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<WeylGroup, WeylError> {
    let l = rs.rank();
    let id = WeylElement::identity(l);
    let mut index = HashMap::new();
    index.insert(id.matrix.clone(), 0);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..l {
            let m = right_simple(rs, &elements[k].matrix, i);
            if index.contains_key(&m) {
                continue;
            }
            if elements.len() >= cap {
                return Err(WeylError::CapExceeded {
                    kind: rs.kind(),
                    partial: elements.len(),
                    classical: rs.kind().weyl_order(),
                    cap,
                });
            }
            let mut word = elements[k].word.clone().expect("enumerated words");
            word.push(i);
            index.insert(m.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(WeylElement {
                matrix: m,
                word: Some(word),
            });
        }
    }
    Ok(WeylGroup {
        kind: rs.kind(),
        rs: rs.clone(),
        elements,
        index,
        class_ids: OnceLock::new(),
    })
}

type GroupCache = Mutex<HashMap<IntMatrix, Arc<WeylGroup>>>;

/// Enumerated group shared across callers, keyed by Cartan matrix.
pub fn cached_group(rs: &RootSystem, cap: usize) -> Result<Arc<WeylGroup>, WeylError> {
    static CACHE: OnceLock<GroupCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().expect("cache lock").get(rs.cartan()) {
        if g.len() > cap {
            return Err(WeylError::CapExceeded {
                kind: rs.kind(),
                partial: cap,
                classical: g.len() as u64,
                cap,
            });
        }
        return Ok(Arc::clone(g));
    }
    let g = Arc::new(enumerate(rs, cap)?);
    cache
        .lock()
        .expect("cache lock")
        .insert(rs.cartan().clone(), Arc::clone(&g));
    Ok(g)
}

impl WeylGroup {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.matrix).copied()
    }

    /// The enumerated copy of `w` (carrying its shortest word).
    pub fn canonical(&self, w: &WeylElement) -> Option<&WeylElement> {
        self.index_of(w).map(|k| &self.elements[k])
    }

    fn conjugate_by_simple(&self, k: usize, i: usize) -> usize {
        let m = left_simple(&self.rs, &self.elements[k].matrix, i);
        let m = right_simple(&self.rs, &m, i);
        self.index[&m]
    }

    fn orbit(&self, start: usize) -> Vec<usize> {
        let mut seen = HashSet::from([start]);
        let mut out = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for i in 0..self.rs.rank() {
                let c = self.conjugate_by_simple(k, i);
                if seen.insert(c) {
                    out.push(c);
                    queue.push_back(c);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Indices of the conjugacy class of `w`, ascending.
    pub fn conjugacy_class(&self, w: &WeylElement) -> Result<Vec<usize>, WeylError> {
        let k = self.index_of(w).ok_or(WeylError::NotInGroup)?;
        Ok(self.orbit(k))
    }

    /// Class number of every element; classes are numbered by their
    /// smallest member.
    pub fn class_ids(&self) -> &[usize] {
        self.class_ids.get_or_init(|| {
            let mut ids = vec![usize::MAX; self.len()];
            let mut next = 0;
            for k in 0..self.len() {
                if ids[k] == usize::MAX {
                    for m in self.orbit(k) {
                        ids[m] = next;
                    }
                    next += 1;
                }
            }
            ids
        })
    }

    pub fn class_count(&self) -> usize {
        self.class_ids().iter().max().map_or(0, |m| m + 1)
    }

    /// Decides conjugacy by orbit closure under the simple reflections.
    pub fn are_conjugate(&self, a: &WeylElement, b: &WeylElement) -> Result<bool, WeylError> {
        let i = self.index_of(a).ok_or(WeylError::NotInGroup)?;
        let j = self.index_of(b).ok_or(WeylError::NotInGroup)?;
        let ids = self.class_ids();
        Ok(ids[i] == ids[j])
    }
}

/// Free-function form of [`WeylGroup::are_conjugate`].
pub fn are_conjugate(a: &WeylElement, b: &WeylElement, group: &WeylGroup) -> Result<bool, WeylError> {
    group.are_conjugate(a, b)
}

/// Free-function form of [`WeylElement::act`].
pub fn act(w: &WeylElement, v: &[crate::Rat]) -> Result<RatVec, WeylError> {
    w.act(v)
}

/// Free-function form of [`WeylElement::char_poly`].
pub fn char_poly(w: &WeylElement) -> Vec<i64> {
    w.char_poly()
}
