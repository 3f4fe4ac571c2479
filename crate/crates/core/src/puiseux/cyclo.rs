//! Exact arithmetic in cyclotomic fields `ℚ(ζ_N) = ℚ[s]/(Φ_N(s))`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::rational::Rat;

/// `Φ_n` with integer coefficients, constant term first.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs n ≥ 1");
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache lock").get(&n) {
        return p.clone();
    }
    // s^n − 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div(&p, &cyclotomic_poly(d));
        }
    }
    cache.lock().expect("cache lock").insert(n, p.clone());
    p
}

/// Exact division by a monic integer polynomial.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    q
}

/// Euler's totient, equal to `deg Φ_n`.
pub fn totient(n: usize) -> usize {
    cyclotomic_poly(n).len() - 1
}

type Q = BigRational;

fn big(q: &Rat) -> Q {
    Q::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

fn small(q: &Q) -> Option<Rat> {
    Some(Rat::new(i64::try_from(q.numer()).ok()?, i64::try_from(q.denom()).ok()?))
}

/// An element of `ℚ(ζ_N)` in the power basis `1, s, …, s^{φ(N)−1}` with
/// `s = ζ_N = exp(2π√−1/N)`; coefficients are arbitrary-precision.
#[derive(Clone)]
pub struct CycloNumber {
    level: usize,
    coeffs: Vec<Q>,
}

fn reduce(level: usize, mut poly: Vec<Q>) -> Vec<Q> {
    let phi = cyclotomic_poly(level);
    let d = phi.len() - 1;
    for k in (d..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut poly[k]);
        for (j, p) in phi[..d].iter().enumerate() {
            if *p != 0 {
                poly[k - d + j] -= &c * Q::from_integer(BigInt::from(*p));
            }
        }
    }
    poly.resize(d, Q::zero());
    poly
}

/// Unique solution of `m·y = b` (rows of `m` given), or `None` if the
/// system is inconsistent or `m` lacks full column rank.
fn solve_exact(m: Vec<Vec<Q>>, b: &[Q]) -> Option<Vec<Q>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Q>> = m
        .into_iter()
        .zip(b)
        .map(|(mut row, bi)| {
            row.push(bi.clone());
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..a.len()).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (t, s) in row.iter_mut().zip(&pivot) {
                    *t -= &f * s;
                }
            }
        }
        r += 1;
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(a.into_iter().take(cols).map(|mut row| row.pop().expect("augmented")).collect())
}

impl CycloNumber {
    pub fn zero(level: usize) -> Self {
        CycloNumber {
            level,
            coeffs: vec![Q::zero(); totient(level)],
        }
    }

    pub fn one(level: usize) -> Self {
        Self::from_rat_at(level, Rat::one())
    }

    pub fn from_rat(q: Rat) -> Self {
        Self::from_rat_at(1, q)
    }

    pub fn from_rat_at(level: usize, q: Rat) -> Self {
        let mut c = Self::zero(level);
        c.coeffs[0] = big(&q);
        c
    }

    /// `ζ_n^k`, with `k` taken mod `n`.
    pub fn zeta(n: usize, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Q::zero(); k + 1];
        poly[k] = Q::one();
        CycloNumber {
            level: n,
            coeffs: reduce(n, poly),
        }
    }

    /// `exp(2π√−1·q)` for rational `q`, at level `denom(q)`.
    pub fn exp_2pi_i(q: Rat) -> Self {
        let n = *q.denom() as usize;
        Self::zeta(n, *q.numer())
    }

    /// Builds `Σ c_k s^k` reduced modulo `Φ_level`.
    pub fn from_poly(level: usize, poly: Vec<Rat>) -> Self {
        CycloNumber {
            level,
            coeffs: reduce(level, poly.iter().map(big).collect()),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `s^k` as a 64-bit rational, if it fits.
    pub fn coeff(&self, k: usize) -> Option<Rat> {
        self.coeffs.get(k).map_or(Some(Rat::zero()), small)
    }

    /// Coherent embedding into `ℚ(ζ_m)`, `m` a multiple of the level:
    /// `ζ_N = ζ_m^{m/N}`.
    pub fn embed(&self, m: usize) -> Self {
        assert_eq!(m % self.level, 0, "level {} does not divide {m}", self.level);
        if m == self.level {
            return self.clone();
        }
        let step = m / self.level;
        let mut poly = vec![Q::zero(); step * self.coeffs.len().max(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        CycloNumber {
            level: m,
            coeffs: reduce(m, poly),
        }
    }

    fn lift_pair(&self, other: &Self) -> (Self, Self) {
        let m = self.level.lcm(&other.level);
        (self.embed(m), other.embed(m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn rational_part(&self) -> Option<&Q> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    /// `Some(q)` if the number is rational (and fits in 64 bits).
    pub fn as_rational(&self) -> Option<Rat> {
        self.rational_part().and_then(small)
    }

    pub fn is_one(&self) -> bool {
        self.rational_part().is_some_and(One::is_one)
    }

    /// Multiplicative inverse by solving the linear system for `x·y = 1`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.coeffs.len();
        // column k is self·s^k
        let cols: Vec<Vec<Q>> = (0..d)
            .map(|k| {
                let mut poly = vec![Q::zero(); d + k];
                for (j, c) in self.coeffs.iter().enumerate() {
                    poly[j + k] = c.clone();
                }
                reduce(self.level, poly)
            })
            .collect();
        let m: Vec<Vec<Q>> = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
        let mut rhs = vec![Q::zero(); d];
        rhs[0] = Q::one();
        let y = solve_exact(m, &rhs)?;
        Some(CycloNumber {
            level: self.level,
            coeffs: y,
        })
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.level);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// The same number at the smallest level dividing the current one
    /// that contains it.
    pub fn simplify(&self) -> Self {
        let divs = (1..=self.level).filter(|d| self.level.is_multiple_of(*d));
        for d in divs {
            if let Some(c) = self.descend(d) {
                return c;
            }
        }
        self.clone()
    }

    /// The preimage at level `d`, if the number lies in `ℚ(ζ_d)`.
    fn descend(&self, d: usize) -> Option<Self> {
        if d == self.level {
            return Some(self.clone());
        }
        let phi_d = totient(d);
        let images: Vec<CycloNumber> = (0..phi_d)
            .map(|k| CycloNumber::zeta(d, k as i64).embed(self.level))
            .collect();
        let m: Vec<Vec<Q>> = (0..self.coeffs.len())
            .map(|i| (0..phi_d).map(|j| images[j].coeffs[i].clone()).collect())
            .collect();
        let y = solve_exact(m, &self.coeffs)?;
        Some(CycloNumber { level: d, coeffs: y })
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * k as f64 / self.level as f64;
            let v = c.to_f64().unwrap_or(f64::NAN);
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lift_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => format!("z{}", self.level),
                _ => format!("z{}^{k}", self.level),
            };
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = self.lift_pair(rhs);
        CycloNumber {
            level: a.level,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        let (a, b) = self.lift_pair(rhs);
        let mut poly = vec![Q::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        CycloNumber {
            level: a.level,
            coeffs: reduce(a.level, poly),
        }
    }
}

impl Add for CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: CycloNumber) -> CycloNumber {
        &self + &rhs
    }
}

impl Sub for CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: CycloNumber) -> CycloNumber {
        &self - &rhs
    }
}

impl Mul for CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: CycloNumber) -> CycloNumber {
        &self * &rhs
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

/// Polynomial in `t` with cyclotomic coefficients, constant term first.
pub type CycloPoly = Vec<CycloNumber>;

/// `Π (t − r)` over the given roots.
pub fn poly_from_roots(roots: &[CycloNumber]) -> CycloPoly {
    let mut p: CycloPoly = vec![CycloNumber::one(1)];
    for r in roots {
        let mut next = vec![CycloNumber::zero(1); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * r);
        }
        p = next;
    }
    p
}
