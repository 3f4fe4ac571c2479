//! Witnesses `a ∈ A(F̄)` for Newton strata: diagonal ones for `GL_n` and
//! the central construction from the barycenter for any type.
//!
//! A point `a` is stored through `λ_k(a)` for the standard characters
//! `λ_k` (lattice dual coordinates); `W` acts by `λ(g·a) = (g⁻¹λ)(a)`.

use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use super::cyclo::CycloNumber;
use super::series::{PuiseuxSeries, SeriesError, Val};
use crate::alcove;
use crate::matrix::IntMatrix;
use crate::newton::{self, cycle_type, permutation_of, NewtonPolygon};
use crate::rational::{self, Rat, RatVec};
use crate::rootsys::{smith_solve, AmbientLattice, RootSystem};
use crate::springer::{is_regular, CentralClass, TorusPoint};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("block {block}: expected {expected} constants, got {got}")]
    ConstantCount { block: usize, expected: usize, got: usize },
    #[error("constant {0} is zero")]
    ZeroConstant(String),
    #[error("entries {0} and {1} coincide, so the witness is not regular")]
    Collision(usize, usize),
    #[error("ν is not central: ⟨α_{0}, ν⟩ ≠ 0")]
    NotCentral(usize),
    #[error("ν is not the image of an integral cocharacter")]
    NotInLattice,
    #[error("polygon has size {0}; GL_n witnesses need 2 ≤ n ≤ 9")]
    UnsupportedSize(usize),
    #[error(transparent)]
    Ambient(#[from] crate::rootsys::AmbientError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// One named verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// A witness point, the Weyl element `h` with `σ(a) = h(a)`, and the
/// recomputable checks.
#[derive(Debug, Clone)]
pub struct WitnessReport {
    /// `λ_k(a)` for the standard characters.
    pub coords: Vec<PuiseuxSeries>,
    /// Newton point in lattice coordinates.
    pub nu: RatVec,
    pub h: WeylElement,
    /// `h` acting on `X_*(A)`.
    pub h_ambient: IntMatrix,
    pub cycle_type: Option<Vec<usize>>,
    pub checks: Vec<Check>,
}

impl WitnessReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }
}

/// `λ(a) = Π_k λ_k(a)^{λ_k}` for monomial coordinates.
pub fn eval_character(coords: &[PuiseuxSeries], lambda: &[i64]) -> Result<PuiseuxSeries, SeriesError> {
    let mut acc = PuiseuxSeries::one();
    for (c, k) in coords.iter().zip(lambda) {
        if *k != 0 {
            acc = &acc * &c.pow(*k)?;
        }
    }
    Ok(acc)
}

/// Checks `σ(λ_k(a)) = (h⁻¹λ_k)(a)` for every standard character.
fn sigma_check(lat: &AmbientLattice, coords: &[PuiseuxSeries], h: &WeylElement) -> Result<Check, SeriesError> {
    let hinv = lat.character_action(h.inverse().matrix());
    let n = lat.n();
    for k in 0..n {
        let lambda = hinv.column(k);
        let rhs = eval_character(coords, &lambda)?;
        if coords[k].sigma() != rhs {
            return Ok(Check {
                name: "sigma",
                pass: false,
                detail: format!("σ(λ_{}(a)) ≠ (h⁻¹λ_{})(a)", k + 1, k + 1),
            });
        }
    }
    Ok(Check {
        name: "sigma",
        pass: true,
        detail: "σ(a) = h(a)".into(),
    })
}

/// `val Ω(a) = Σ_α val(1 − α(a))`.
pub fn val_omega(rs: &RootSystem, lat: &AmbientLattice, coords: &[PuiseuxSeries]) -> Result<Val, SeriesError> {
    let one = PuiseuxSeries::one();
    let mut total = Val::Finite(Rat::zero());
    for r in rs.roots() {
        let alpha = eval_character(coords, &lat.root_character(r))?;
        total = total + (&one - &alpha).val();
    }
    Ok(total)
}

fn default_constants(poly: &NewtonPolygon) -> Vec<Vec<CycloNumber>> {
    let qs: Vec<usize> = poly.blocks.iter().map(|(s, _)| *s.denom() as usize).collect();
    let need = poly
        .blocks
        .iter()
        .zip(&qs)
        .map(|((_, d), q)| d / q)
        .max()
        .unwrap_or(1);
    // smallest L ≥ need coprime to every q, so ζ_L^m ζ_q^j are pairwise distinct
    let mut level = need.max(1);
    while qs.iter().any(|q| level.gcd(q) != 1) {
        level += 1;
    }
    poly.blocks
        .iter()
        .zip(&qs)
        .map(|((_, d), q)| (0..d / q).map(|m| CycloNumber::zeta(level, m as i64)).collect())
        .collect()
}

/// Diagonal witness for a `GL_n` Newton polygon.
///
/// Block `(p/q, d)` contributes `c_m·ζ_q^j·ε^{p/q}` for `j < q`, `m < d/q`;
/// `constants[b][m]` overrides `c_m` for block `b`.
pub fn build_witness_gl(
    poly: &NewtonPolygon,
    constants: Option<&[Vec<CycloNumber>]>,
) -> Result<WitnessReport, WitnessError> {
    let n = poly.n;
    if !(2..=9).contains(&n) {
        return Err(WitnessError::UnsupportedSize(n));
    }
    let defaults;
    let constants = match constants {
        Some(c) => c,
        None => {
            defaults = default_constants(poly);
            &defaults
        }
    };
    let mut coords = Vec::with_capacity(n);
    for (b, (s, d)) in poly.blocks.iter().enumerate() {
        let q = *s.denom() as usize;
        let cs = constants.get(b).map_or(&[][..], |v| v.as_slice());
        if cs.len() != d / q {
            return Err(WitnessError::ConstantCount {
                block: b + 1,
                expected: d / q,
                got: cs.len(),
            });
        }
        for c in cs {
            if c.is_zero() {
                return Err(WitnessError::ZeroConstant(c.to_string()));
            }
            for j in 0..q {
                let coeff = c * &CycloNumber::zeta(q, j as i64);
                coords.push(PuiseuxSeries::monomial(coeff, *s));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if coords[i] == coords[j] {
                return Err(WitnessError::Collision(i + 1, j + 1));
            }
        }
    }
    let (rs, lat) = AmbientLattice::gl(n);
    let nu = poly.nu();

    // σ(a)_k = a_{π(k)}; h has cocharacter matrix P[k][π(k)] = 1
    let sig: Vec<PuiseuxSeries> = coords.iter().map(PuiseuxSeries::sigma).collect();
    let pi: Option<Vec<usize>> = sig.iter().map(|s| coords.iter().position(|c| c == s)).collect();
    let pi = pi.unwrap_or_else(|| (0..n).collect());
    let p = IntMatrix::from_fn(n, n, |i, j| i64::from(pi[i] == j));
    let hm = lat
        .coroot_matrix_of(&p)
        .expect("coordinate permutations lie in W(GL_n)");
    let h = WeylElement::from_matrix(hm);

    let mut checks = Vec::new();
    // c(a) = Π (t − a_k) is σ-fixed and has the input polygon
    let mut charpoly = vec![PuiseuxSeries::one()];
    for a in &coords {
        let mut next = vec![PuiseuxSeries::zero(); charpoly.len() + 1];
        for (k, c) in charpoly.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * a);
        }
        charpoly = next;
    }
    let fixed = charpoly.iter().all(|c| c.sigma() == *c);
    let orders: Vec<Option<i64>> = charpoly[..n]
        .iter()
        .map(|c| c.order().filter(|q| q.is_integer()).map(|q| q.to_integer()))
        .collect();
    let same_polygon = newton::gl_newton_polygon(&orders).ok().as_ref() == Some(poly);
    checks.push(Check {
        name: "surj1",
        pass: fixed && same_polygon,
        detail: format!("c(a) σ-fixed: {fixed}, same polygon: {same_polygon}"),
    });
    checks.push(sigma_check(&lat, &coords, &h)?);
    let vals_ok = coords
        .iter()
        .zip(&nu)
        .all(|(c, v)| c.val() == Val::Finite(*v));
    checks.push(Check {
        name: "surj3",
        pass: vals_ok,
        detail: "val λ_k(a) = ⟨λ_k, ν⟩".into(),
    });
    checks.push(Check {
        name: "regular",
        pass: true,
        detail: "entries pairwise distinct".into(),
    });
    let m = newton::m_nu(&rs, &lat, &nu);
    let vo = val_omega(&rs, &lat, &coords)?;
    checks.push(Check {
        name: "omega",
        pass: vo == Val::Finite(m),
        detail: format!("val Ω(a) = {vo}, m_ν = {}", rational::fmt_rat(&m)),
    });
    let cycles = permutation_of(&p).map(|perm| cycle_type(&perm));
    Ok(WitnessReport {
        coords,
        nu,
        h,
        h_ambient: p,
        cycle_type: cycles,
        checks,
    })
}

/// Witness for a central Newton point: `ω_i(a) = ε^{−m_i}·ϖ_i(u)^{-1}`
/// (`i ≤ l`) and `ω_i(a) = ε^{−m_i}` (`i > l`), with `u = Exp(e)` and
/// `m_i = ⟨ω_i, ν⟩`; then `val ω_i(a) = m_i` and `σ(a) = ψ(μ)(a)`.
pub fn build_witness_central(
    rs: &RootSystem,
    lat: &AmbientLattice,
    nu: &[Rat],
) -> Result<WitnessReport, WitnessError> {
    let nu_l = lat.to_lattice(nu)?;
    let l = rs.rank();
    let n = lat.n();
    for i in 0..l {
        if !AmbientLattice::pair(lat.root_char(i), &nu_l).is_zero() {
            return Err(WitnessError::NotCentral(i + 1));
        }
    }
    // x = ν + Y·t integral, μ = [t]
    let sol = smith_solve(lat.coroot_matrix(), &rational::neg(&nu_l)).expect("shapes agree");
    if !sol.solvable {
        return Err(WitnessError::NotInLattice);
    }
    let t = sol.components[0].clone();
    let mu = CentralClass::new(rs, &t).map_err(|_| WitnessError::NotInLattice)?;
    let g = alcove::psi(rs, &mu).expect("ψ exists");
    let e = alcove::barycenter(rs);

    let omega = lat.char_basis();
    let m: RatVec = omega.iter().map(|w| AmbientLattice::pair(w, &nu_l)).collect();
    let omega_vals: Vec<PuiseuxSeries> = (0..n)
        .map(|i| {
            let c = if i < l {
                CycloNumber::exp_2pi_i(-e.coords()[i])
            } else {
                CycloNumber::one(1)
            };
            PuiseuxSeries::monomial(c, -m[i])
        })
        .collect();
    // λ_k = Σ_i C[k][i] ω_i with C = Ω⁻¹ (Ω has the ω_i as rows)
    let omega_m = IntMatrix::from_rows(omega);
    let inv = omega_m.to_rational().inverse().expect("ω is a basis");
    let mut coords = Vec::with_capacity(n);
    for k in 0..n {
        let ck: Vec<i64> = (0..n)
            .map(|i| {
                let v = inv[(k, i)];
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect();
        coords.push(eval_character(&omega_vals, &ck)?);
    }

    let mut checks = Vec::new();
    let mut vals_ok = true;
    for (i, w) in omega.iter().enumerate() {
        vals_ok &= eval_character(&coords, w)?.val() == Val::Finite(m[i]);
    }
    checks.push(Check {
        name: "surj20",
        pass: vals_ok,
        detail: "val ω_i(a) = ⟨ω_i, ν⟩".into(),
    });
    let mut s = sigma_check(lat, &coords, &g)?;
    s.name = "surj30";
    checks.push(s);
    let vo = val_omega(rs, lat, &coords)?;
    checks.push(Check {
        name: "surj40",
        pass: vo == Val::Finite(Rat::zero()),
        detail: format!("val Ω(a) = {vo}"),
    });
    let u = TorusPoint::new(e.coords());
    checks.push(Check {
        name: "regular",
        pass: is_regular(rs, &u),
        detail: format!("u = Exp{u}"),
    });
    let h_ambient = lat.cocharacter_action(g.matrix());
    let cycles = permutation_of(&h_ambient).map(|p| cycle_type(&p));
    Ok(WitnessReport {
        coords,
        nu: nu_l,
        h: g,
        h_ambient,
        cycle_type: cycles,
        checks,
    })
}

/// Whether `b = c·π(a)` for a scalar `c` and a permutation `π` of the
/// coordinates.
pub fn equal_up_to_constant_and_permutation(a: &[PuiseuxSeries], b: &[PuiseuxSeries]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return a.len() == b.len();
    }
    let Ok(b0_inv) = b[0].inverse() else {
        return false;
    };
    a.iter().any(|candidate| {
        let c = candidate * &b0_inv;
        let Ok(cinv) = c.inverse() else {
            return false;
        };
        let mut used = vec![false; a.len()];
        b.iter().all(|bj| {
            let target = &c * bj;
            let _ = &cinv;
            match (0..a.len()).find(|&i| !used[i] && a[i] == target) {
                Some(i) => {
                    used[i] = true;
                    true
                }
                None => false,
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::rootsys::build_root_system;

    #[test]
    fn gl2_half_slopes() {
        let poly = NewtonPolygon::from_blocks(&[(rat(1, 2), 2)]);
        let r = build_witness_gl(&poly, None).unwrap();
        assert_eq!(r.coords[0], PuiseuxSeries::eps_pow(rat(1, 2)));
        assert_eq!(r.coords[1], -&PuiseuxSeries::eps_pow(rat(1, 2)));
        assert_eq!(r.cycle_type, Some(vec![2]));
        assert!(r.pass(), "{:?}", r.checks);
    }

    #[test]
    fn gl2_integral_slopes() {
        let poly = NewtonPolygon::from_blocks(&[(int(0), 1), (int(1), 1)]);
        let consts = vec![vec![CycloNumber::from_rat(int(2))], vec![CycloNumber::from_rat(int(3))]];
        let r = build_witness_gl(&poly, Some(&consts)).unwrap();
        assert!(r.h.is_identity());
        assert!(r.pass());
    }

    #[test]
    fn gl6_third_slopes() {
        let poly = NewtonPolygon::from_blocks(&[(rat(1, 3), 6)]);
        let r = build_witness_gl(&poly, None).unwrap();
        assert_eq!(r.cycle_type, Some(vec![3, 3]));
        assert!(r.pass(), "{:?}", r.checks);
    }

    #[test]
    fn colliding_constants_are_reported() {
        let poly = NewtonPolygon::from_blocks(&[(int(0), 2)]);
        let one = CycloNumber::one(1);
        let err = build_witness_gl(&poly, Some(&[vec![one.clone(), one]])).unwrap_err();
        assert_eq!(err, WitnessError::Collision(1, 2));
    }

    #[test]
    fn central_simply_connected_zero() {
        for name in ["A2", "B3", "G2"] {
            let rs = build_root_system(name).unwrap();
            let lat = AmbientLattice::simply_connected(&rs);
            let r = build_witness_central(&rs, &lat, &rational::zeros(rs.rank())).unwrap();
            assert!(r.h.is_identity());
            assert!(r.pass(), "{name}: {:?}", r.checks);
        }
    }

    #[test]
    fn central_gl_matches_gl_witness() {
        for n in [2usize, 3] {
            let (rs, lat) = AmbientLattice::gl(n);
            let q = rat(1, n as i64);
            let central = build_witness_central(&rs, &lat, &vec![-q; n]).unwrap();
            assert!(central.pass(), "GL{n}: {:?}", central.checks);
            assert_eq!(central.cycle_type, Some(vec![n]));
            let gl = build_witness_gl(&NewtonPolygon::from_blocks(&[(q, n)]), None).unwrap();
            assert!(equal_up_to_constant_and_permutation(&central.coords, &gl.coords));
        }
    }

    #[test]
    fn rejects_non_central() {
        let (rs, lat) = AmbientLattice::gl(2);
        assert_eq!(
            build_witness_central(&rs, &lat, &[int(1), int(0)]).unwrap_err(),
            WitnessError::NotCentral(1)
        );
    }
}
