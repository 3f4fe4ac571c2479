use std::fmt;
use std::str::FromStr;

use crate::matrix::IntMatrix;

use super::RootSystemError;

/// Cartan–Killing type of an irreducible reduced root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl Kind {
    pub fn rank(self) -> usize {
        match self {
            Kind::A(l) | Kind::B(l) | Kind::C(l) | Kind::D(l) | Kind::E(l) => l,
            Kind::F4 => 4,
            Kind::G2 => 2,
        }
    }

    /// Whether this label is a valid Cartan–Killing type at all (ignoring the
    /// shipped range).
    fn is_valid(self) -> bool {
        match self {
            Kind::A(l) => l >= 1,
            Kind::B(l) | Kind::C(l) => l >= 2,
            Kind::D(l) => l >= 4,
            Kind::E(l) => (6..=8).contains(&l),
            Kind::F4 | Kind::G2 => true,
        }
    }

    /// Whether the shipped data covers this type: A1..A8, B2..B6, C2..C6,
    /// D4..D6, E6, E7, E8, F4, G2.
    pub fn is_supported(self) -> bool {
        match self {
            Kind::A(l) => (1..=8).contains(&l),
            Kind::B(l) | Kind::C(l) => (2..=6).contains(&l),
            Kind::D(l) => (4..=6).contains(&l),
            Kind::E(l) => (6..=8).contains(&l),
            Kind::F4 | Kind::G2 => true,
        }
    }

    /// Every supported type, in a fixed order (by letter, then rank).
    pub fn all_supported() -> Vec<Kind> {
        let mut out = Vec::new();
        out.extend((1..=8).map(Kind::A));
        out.extend((2..=6).map(Kind::B));
        out.extend((2..=6).map(Kind::C));
        out.extend((4..=6).map(Kind::D));
        out.extend((6..=8).map(Kind::E));
        out.push(Kind::F4);
        out.push(Kind::G2);
        out
    }

    /// |W| from the classical order formulas.
    pub fn weyl_order(self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self {
            Kind::A(l) => fact(l + 1),
            Kind::B(l) | Kind::C(l) => (1u64 << l) * fact(l),
            Kind::D(l) => (1u64 << (l - 1)) * fact(l),
            Kind::E(6) => 51_840,
            Kind::E(7) => 2_903_040,
            Kind::E(8) => 696_729_600,
            Kind::E(_) => unreachable!("invalid E rank"),
            Kind::F4 => 1152,
            Kind::G2 => 12,
        }
    }

    /// Number of roots from the classical formulas.
    pub fn root_count(self) -> usize {
        match self {
            Kind::A(l) => l * (l + 1),
            Kind::B(l) | Kind::C(l) => 2 * l * l,
            Kind::D(l) => 2 * l * (l - 1),
            Kind::E(6) => 72,
            Kind::E(7) => 126,
            Kind::E(8) => 240,
            Kind::E(_) => unreachable!("invalid E rank"),
            Kind::F4 => 48,
            Kind::G2 => 12,
        }
    }

    /// Bourbaki-labelled symmetric form `(α_i, α_j)`, scaled so that every
    /// entry is an integer.
    fn symmetric_form(self) -> IntMatrix {
        let l = self.rank();
        let mut b = IntMatrix::zeros(l, l);
        let bond = |b: &mut IntMatrix, i: usize, j: usize, v: i64| {
            b[(i - 1, j - 1)] = v;
            b[(j - 1, i - 1)] = v;
        };
        match self {
            Kind::A(_) => {
                for i in 1..=l {
                    b[(i - 1, i - 1)] = 2;
                }
                for i in 1..l {
                    bond(&mut b, i, i + 1, -1);
                }
            }
            Kind::B(_) => {
                // α_l = e_l short
                for i in 1..l {
                    b[(i - 1, i - 1)] = 2;
                }
                b[(l - 1, l - 1)] = 1;
                for i in 1..l {
                    bond(&mut b, i, i + 1, -1);
                }
            }
            Kind::C(_) => {
                // α_l = 2e_l long
                for i in 1..l {
                    b[(i - 1, i - 1)] = 2;
                }
                b[(l - 1, l - 1)] = 4;
                for i in 1..l - 1 {
                    bond(&mut b, i, i + 1, -1);
                }
                bond(&mut b, l - 1, l, -2);
            }
            Kind::D(_) => {
                for i in 1..=l {
                    b[(i - 1, i - 1)] = 2;
                }
                for i in 1..l - 1 {
                    bond(&mut b, i, i + 1, -1);
                }
                bond(&mut b, l - 2, l, -1);
            }
            Kind::E(_) => {
                for i in 1..=l {
                    b[(i - 1, i - 1)] = 2;
                }
                bond(&mut b, 1, 3, -1);
                bond(&mut b, 2, 4, -1);
                for i in 3..l {
                    bond(&mut b, i, i + 1, -1);
                }
            }
            Kind::F4 => {
                for (i, v) in [4, 4, 2, 2].into_iter().enumerate() {
                    b[(i, i)] = v;
                }
                bond(&mut b, 1, 2, -2);
                bond(&mut b, 2, 3, -2);
                bond(&mut b, 3, 4, -1);
            }
            Kind::G2 => {
                // α_1 short, α_2 long
                b[(0, 0)] = 2;
                b[(1, 1)] = 6;
                bond(&mut b, 1, 2, -3);
            }
        }
        b
    }

    /// Cartan matrix with entry `(i, j) = ⟨α_j, α_i∨⟩ = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan(self) -> IntMatrix {
        let b = self.symmetric_form();
        let l = self.rank();
        IntMatrix::from_fn(l, l, |i, j| {
            let num = 2 * b[(i, j)];
            debug_assert_eq!(num % b[(i, i)], 0);
            num / b[(i, i)]
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::A(l) => write!(f, "A{l}"),
            Kind::B(l) => write!(f, "B{l}"),
            Kind::C(l) => write!(f, "C{l}"),
            Kind::D(l) => write!(f, "D{l}"),
            Kind::E(l) => write!(f, "E{l}"),
            Kind::F4 => write!(f, "F4"),
            Kind::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for Kind {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let unknown = || RootSystemError::UnknownType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 3 {
            return Err(unknown());
        }
        let rank: usize = digits.parse().map_err(|_| unknown())?;
        let kind = match letter {
            'A' => Kind::A(rank),
            'B' => Kind::B(rank),
            'C' => Kind::C(rank),
            'D' => Kind::D(rank),
            'E' => Kind::E(rank),
            'F' if rank == 4 => Kind::F4,
            'G' if rank == 2 => Kind::G2,
            'F' | 'G' => return Err(RootSystemError::RankOutOfRange(s.to_string())),
            _ => return Err(unknown()),
        };
        if !kind.is_valid() || !kind.is_supported() {
            return Err(RootSystemError::RankOutOfRange(s.to_string()));
        }
        Ok(kind)
    }
}

/// A `--type` argument: either a root-system type (simply connected preset)
/// or the `GLn` preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeSpec {
    Simple(Kind),
    Gl(usize),
}

impl FromStr for TypeSpec {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("GL").or_else(|| t.strip_prefix("gl")) {
            if rest.is_empty() || rest.len() > 3 || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(RootSystemError::UnknownType(t.to_string()));
            }
            let n: usize = rest
                .parse()
                .map_err(|_| RootSystemError::UnknownType(t.to_string()))?;
            // GLn has derived group of type A_{n-1}
            if !(2..=9).contains(&n) {
                return Err(RootSystemError::RankOutOfRange(t.to_string()));
            }
            return Ok(TypeSpec::Gl(n));
        }
        t.parse().map(TypeSpec::Simple)
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeSpec::Simple(k) => k.fmt(f),
            TypeSpec::Gl(n) => write!(f, "GL{n}"),
        }
    }
}
