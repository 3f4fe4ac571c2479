//! Exact rational scalars and vectors.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The rational scalar used everywhere in the crate.
pub type Rat = Ratio<i64>;

/// A dense vector of rationals.
pub type RatVec = Vec<Rat>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse_rational(s: &str) -> Result<Rat, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |t: &str| {
        let t = t.trim();
        t.parse::<i64>()
            .map_err(|_| ParseRationalError::BadInteger(t.to_string()))
    };
    match s.split_once('/') {
        None => Ok(int(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d == 0 {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            // Ratio::new panics on i64::MIN / -1 style overflow during reduction.
            if n == i64::MIN || d == i64::MIN {
                return Err(ParseRationalError::BadInteger(s.to_string()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Parses a comma-separated list of rational literals, e.g. `"1/2,1/2,0"`.
pub fn parse_rational_vector(s: &str) -> Result<RatVec, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    s.split(',').map(parse_rational).collect()
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rat(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn fmt_vec(v: &[Rat]) -> String {
    v.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
}

/// Wrapper giving a compact `Display` for rational vectors.
pub struct DisplayVec<'a>(pub &'a [Rat]);

impl fmt::Display for DisplayVec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_vec(self.0))
    }
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &Rat) -> Rat {
    q - q.floor()
}

pub fn reduce_mod_one(v: &[Rat]) -> RatVec {
    v.iter().map(frac).collect()
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|q| q.is_integer())
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rat, a: &[Rat]) -> RatVec {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Rat]) -> RatVec {
    a.iter().map(|x| -x).collect()
}

pub fn zeros(n: usize) -> RatVec {
    vec![Rat::zero(); n]
}

pub fn from_ints(v: &[i64]) -> RatVec {
    v.iter().copied().map(int).collect()
}

/// Least common multiple of the denominators (1 for the empty vector).
pub fn common_denominator(v: &[Rat]) -> i64 {
    v.iter().fold(1i64, |acc, q| acc.lcm(q.denom()))
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn is_positive(q: &Rat) -> bool {
    q.is_positive()
}

pub fn one() -> Rat {
    Rat::one()
}
