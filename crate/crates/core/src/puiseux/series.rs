//! Finite Puiseux series `Σ c_q ε^q` with cyclotomic coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use super::cyclo::CycloNumber;
use crate::rational::{fmt_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot invert the zero series")]
    Zero,
    #[error("only monomials are invertible in the finite-support ring")]
    NotMonomial,
}

/// Valuation `val = −ord`, with `val(0) = −∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Val {
    NegInf,
    Finite(Rat),
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::NegInf, Val::NegInf) => Ordering::Equal,
            (Val::NegInf, _) => Ordering::Less,
            (_, Val::NegInf) => Ordering::Greater,
            (Val::Finite(a), Val::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Val {
    type Output = Val;
    fn add(self, rhs: Val) -> Val {
        match (self, rhs) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a + b),
            _ => Val::NegInf,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::NegInf => write!(f, "-inf"),
            Val::Finite(q) => write!(f, "{}", fmt_rat(q)),
        }
    }
}

/// A finite-support series in rational powers of `ε`; zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PuiseuxSeries {
    terms: BTreeMap<Rat, CycloNumber>,
}

impl PuiseuxSeries {
    pub fn zero() -> Self {
        PuiseuxSeries::default()
    }

    pub fn one() -> Self {
        Self::constant(CycloNumber::one(1))
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::monomial(c, Rat::zero())
    }

    /// `c·ε^q`.
    pub fn monomial(c: CycloNumber, q: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(q, c);
        }
        PuiseuxSeries { terms }
    }

    /// `ε^q`.
    pub fn eps_pow(q: Rat) -> Self {
        Self::monomial(CycloNumber::one(1), q)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rat, CycloNumber)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (q, c)| &acc + &Self::monomial(c, q))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Usual order: the smallest exponent in the support.
    pub fn order(&self) -> Option<Rat> {
        self.terms.keys().next().copied()
    }

    /// `val = −ord`, `val(0) = −∞`.
    pub fn val(&self) -> Val {
        self.order().map_or(Val::NegInf, |q| Val::Finite(-q))
    }

    /// Lowest-order term.
    pub fn leading(&self) -> Option<(Rat, &CycloNumber)> {
        self.terms.iter().next().map(|(q, c)| (*q, c))
    }

    /// Inverse of a monomial.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let (q, c) = self.leading().ok_or(SeriesError::Zero)?;
        if !self.is_monomial() {
            return Err(SeriesError::NotMonomial);
        }
        let inv = c.inverse().ok_or(SeriesError::Zero)?;
        Ok(Self::monomial(inv, -q))
    }

    /// Integer power; negative exponents need a monomial.
    pub fn pow(&self, k: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `σ(ε^q) = exp(2π√−1·q)·ε^q`, extended to coefficients trivially.
    pub fn sigma(&self) -> Self {
        PuiseuxSeries {
            terms: self
                .terms
                .iter()
                .map(|(q, c)| (*q, c * &CycloNumber::exp_2pi_i(*q)))
                .collect(),
        }
    }

    /// Whether every exponent is an integer.
    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(|q| q.is_integer())
    }

    /// lcm of the exponent denominators.
    pub fn denominator(&self) -> i64 {
        self.terms
            .keys()
            .fold(1, |acc, q| num_integer::lcm(acc, *q.denom()))
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(q, c)| {
                if q.is_zero() {
                    format!("({c})")
                } else {
                    format!("({c})*e^({})", fmt_rat(q))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn add(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let mut terms = self.terms.clone();
        for (q, c) in &rhs.terms {
            let sum = match terms.get(q) {
                Some(a) => a + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(q);
            } else {
                terms.insert(*q, sum);
            }
        }
        PuiseuxSeries { terms }
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(q, c)| (*q, -c)).collect(),
        }
    }
}

impl Sub for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn sub(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self + &(-rhs)
    }
}

impl Mul for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let mut out = PuiseuxSeries::zero();
        for (p, a) in &self.terms {
            for (q, b) in &rhs.terms {
                out = &out + &PuiseuxSeries::monomial(a * b, p + q);
            }
        }
        out
    }
}
