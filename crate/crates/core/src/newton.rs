//! Newton points, their Levi subgroups, the twist `w(ν) = ψ_M(ν)` and the
//! `GL_n` Newton-polygon front end.
//!
//! Polygons are computed with the usual order `ord = −val`; the
//! valuation appears only in [`NewtonPolygon::nu`], which returns the
//! dominant Newton point `ν = −(slopes)`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::alcove;
use crate::matrix::IntMatrix;
use crate::puiseux::{CycloNumber, PuiseuxSeries};
use crate::rational::{self, parse_rational, Rat, RatVec};
use crate::rootsys::{smith_solve, AmbientError, AmbientLattice, RootSystem, RootSystemError};
use crate::springer::{CentralClass, SpringerError};
use crate::weyl::WeylElement;

/// Largest accepted absolute coefficient order in polynomial input.
pub const MAX_ORDER: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error(transparent)]
    Ambient(#[from] AmbientError),
    #[error("ν is not dominant: ⟨α_{index}, ν⟩ = {pairing} < 0")]
    NotDominant { index: usize, pairing: String },
    #[error("ν = ({nu}) is not the image of an integral cocharacter: {detail}")]
    NotInLattice { nu: String, detail: String },
    #[error("Levi subsystem: {0}")]
    Levi(#[from] RootSystemError),
    #[error(transparent)]
    Central(#[from] SpringerError),
}

/// A dominant rational cocharacter with its Levi subsystem.
#[derive(Debug, Clone)]
pub struct NewtonPoint {
    nu: RatVec,
    nu_lattice: RatVec,
    levi: Vec<usize>,
    ambient: AmbientLattice,
}

impl NewtonPoint {
    /// `ν` in ambient coordinates.
    pub fn nu(&self) -> &[Rat] {
        &self.nu
    }

    /// `ν` in lattice (basis) coordinates.
    pub fn nu_lattice(&self) -> &[Rat] {
        &self.nu_lattice
    }

    /// `Δ_M` as 0-based simple-root indices.
    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn ambient(&self) -> &AmbientLattice {
        &self.ambient
    }

    /// `⟨α_i, ν⟩` for every simple root.
    pub fn simple_pairings(&self) -> RatVec {
        (0..self.ambient.semisimple_rank())
            .map(|i| AmbientLattice::pair(self.ambient.root_char(i), &self.nu_lattice))
            .collect()
    }
}

/// Determines `Δ_M = {i : ⟨α_i, ν⟩ = 0}`, rejecting non-dominant `ν`.
pub fn levi_of(rs: &RootSystem, ambient: &AmbientLattice, nu: &[Rat]) -> Result<NewtonPoint, NewtonError> {
    debug_assert_eq!(rs.rank(), ambient.semisimple_rank());
    let nu_lattice = ambient.to_lattice(nu)?;
    let mut levi = Vec::new();
    for i in 0..rs.rank() {
        let p = AmbientLattice::pair(ambient.root_char(i), &nu_lattice);
        if p < Rat::zero() {
            return Err(NewtonError::NotDominant {
                index: i + 1,
                pairing: rational::fmt_rat(&p),
            });
        }
        if p.is_zero() {
            levi.push(i);
        }
    }
    Ok(NewtonPoint {
        nu: nu.to_vec(),
        nu_lattice,
        levi,
        ambient: ambient.clone(),
    })
}

/// A connected component of the Dynkin diagram of `Δ_M`.
#[derive(Debug, Clone)]
pub struct LeviComponent {
    /// Global 0-based simple-root indices, ascending.
    pub nodes: Vec<usize>,
    pub rs: RootSystem,
}

/// Splits `nodes` into connected components of the Dynkin diagram.
pub fn levi_components(rs: &RootSystem, nodes: &[usize]) -> Result<Vec<LeviComponent>, RootSystemError> {
    let c = rs.cartan();
    let mut seen = vec![false; nodes.len()];
    let mut out = Vec::new();
    for start in 0..nodes.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![nodes[start]];
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for b in 0..nodes.len() {
                if !seen[b] && c[(nodes[a], nodes[b])] != 0 {
                    seen[b] = true;
                    comp.push(nodes[b]);
                    stack.push(b);
                }
            }
        }
        comp.sort_unstable();
        let sub = RootSystem::from_cartan(&c.submatrix(&comp, &comp))?;
        out.push(LeviComponent { nodes: comp, rs: sub });
    }
    out.sort_by_key(|c| c.nodes[0]);
    Ok(out)
}

/// The class `μ ∈ P(R_M∨)/Q(R_M∨)` attached to `ν`, split over the simple
/// factors of `M`.
#[derive(Debug, Clone)]
pub struct MuClass {
    pub components: Vec<(LeviComponent, CentralClass)>,
    /// An integral lift `x` (lattice coordinates) with `p_M(x) = ν`.
    pub lift: Vec<i64>,
    /// `x_M` in simple-coroot coordinates of `M`, ordered like `Δ_M`.
    pub x_m: RatVec,
    /// Every lift produced by the solver gave the same class.
    pub independent_of_lift: bool,
}

impl MuClass {
    pub fn order(&self) -> usize {
        self.components
            .iter()
            .fold(1usize, |acc, (_, c)| num_integer::lcm(acc, c.order()))
    }
}

/// Solves `x = ν + Y_M·t ∈ X_*(A)`; then `x_M = t` and `μ = [t]`.
pub fn mu_class(rs: &RootSystem, np: &NewtonPoint) -> Result<MuClass, NewtonError> {
    let n = np.ambient.n();
    let levi = &np.levi;
    let comps = levi_components(rs, levi)?;
    let not_in_lattice = |detail: String| NewtonError::NotInLattice {
        nu: rational::fmt_vec(&np.nu),
        detail,
    };
    if levi.is_empty() {
        if !rational::is_integral(&np.nu_lattice) {
            return Err(not_in_lattice("M is the torus and ν is not integral".into()));
        }
        return Ok(MuClass {
            components: Vec::new(),
            lift: np.nu_lattice.iter().map(|q| q.to_integer()).collect(),
            x_m: Vec::new(),
            independent_of_lift: true,
        });
    }
    let all_cols: Vec<usize> = levi.clone();
    let rows: Vec<usize> = (0..n).collect();
    let y_m = np.ambient.coroot_matrix().submatrix(&rows, &all_cols);
    let sol = smith_solve(&y_m, &rational::neg(&np.nu_lattice)).expect("shapes agree");
    if !sol.solvable {
        return Err(not_in_lattice(
            "ν + span(R_M∨) contains no integral cocharacter".into(),
        ));
    }
    let classes_of = |t: &[Rat]| -> Result<Vec<(LeviComponent, CentralClass)>, NewtonError> {
        comps
            .iter()
            .map(|c| {
                let local: RatVec = c
                    .nodes
                    .iter()
                    .map(|g| t[levi.iter().position(|x| x == g).expect("node in Δ_M")])
                    .collect();
                Ok((c.clone(), CentralClass::new(&c.rs, &local)?))
            })
            .collect()
    };
    let t = sol.components[0].clone();
    let components = classes_of(&t)?;
    let mut independent = true;
    for other in &sol.components[1..] {
        let cls = classes_of(other)?;
        if cls.iter().zip(&components).any(|(a, b)| a.1 != b.1) {
            independent = false;
        }
    }
    // a second lift x + Y_M·e_1 must give the same class
    let mut shifted = t.clone();
    shifted[0] += Rat::one();
    if classes_of(&shifted)?.iter().zip(&components).any(|(a, b)| a.1 != b.1) {
        independent = false;
    }
    let x = rational::add(&np.nu_lattice, &y_m.mul_rat_vec(&t));
    debug_assert!(rational::is_integral(&x));
    Ok(MuClass {
        components,
        lift: x.iter().map(|q| q.to_integer()).collect(),
        x_m: t,
        independent_of_lift: independent,
    })
}

/// `w(ν) = ψ_M(ν)` with its conjugacy certificate.
#[derive(Debug, Clone)]
pub struct NewtonTwist {
    pub element: WeylElement,
    pub mu: MuClass,
    pub char_poly: Vec<i64>,
    pub order: usize,
    /// Action on `X_*(A)` in lattice coordinates.
    pub ambient_action: IntMatrix,
    /// Cycle type when the action permutes the lattice basis (e.g. `GL_n`).
    pub cycle_type: Option<Vec<usize>>,
}

impl NewtonTwist {
    /// Output label for the twisted torus.
    pub fn label(&self) -> String {
        format!("A^{{w(ν)}}, w(ν) = {}", self.element)
    }
}

/// Computes `ψ_M(μ)` factor by factor and embeds it in `W(R)`.
pub fn newton_twist(rs: &RootSystem, np: &NewtonPoint) -> Result<NewtonTwist, NewtonError> {
    let mu = mu_class(rs, np)?;
    let mut word = Vec::new();
    for (comp, class) in &mu.components {
        let local = alcove::psi(&comp.rs, class).expect("ψ exists on every Levi factor");
        word.extend(local.word().expect("ψ carries a word").iter().map(|i| comp.nodes[*i]));
    }
    let element = WeylElement::from_word(rs, &word);
    let ambient_action = np.ambient.cocharacter_action(element.matrix());
    let cycle_type = permutation_of(&ambient_action).map(|p| cycle_type(&p));
    Ok(NewtonTwist {
        char_poly: element.char_poly(),
        order: element.order(),
        element,
        mu,
        ambient_action,
        cycle_type,
    })
}

/// `π` with `m[π(j)][j] = 1`, if `m` is a permutation matrix.
pub fn permutation_of(m: &IntMatrix) -> Option<Vec<usize>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut perm = Vec::with_capacity(n);
    for j in 0..n {
        let col = m.column(j);
        if col.iter().filter(|v| **v == 1).count() != 1 || col.iter().any(|v| *v != 0 && *v != 1) {
            return None;
        }
        perm.push(col.iter().position(|v| *v == 1).expect("one entry"));
    }
    let mut seen = vec![false; n];
    for &p in &perm {
        if std::mem::replace(&mut seen[p], true) {
            return None;
        }
    }
    Some(perm)
}

/// Cycle lengths of a permutation, descending, fixed points included.
pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `m_ν = Σ_{α ∈ R} max{0, ⟨α, ν⟩}` (`ν` in lattice coordinates).
pub fn m_nu(rs: &RootSystem, ambient: &AmbientLattice, nu_lattice: &[Rat]) -> Rat {
    rs.roots()
        .iter()
        .map(|r| AmbientLattice::pair(&ambient.root_character(r), nu_lattice))
        .filter(|p| *p > Rat::zero())
        .sum()
}

/// `⟨2ρ, ν⟩` (`ν` in lattice coordinates).
pub fn two_rho_pairing(rs: &RootSystem, ambient: &AmbientLattice, nu_lattice: &[Rat]) -> Rat {
    rs.positive_roots()
        .iter()
        .map(|r| AmbientLattice::pair(&ambient.root_character(r), nu_lattice))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("polynomial has no coefficients")]
    Empty,
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("coefficient order {0} is outside the supported range")]
    OrderOutOfRange(i64),
}

/// A Newton polygon as blocks `(slope, size)` with ascending slopes.
///
/// Slopes are the usual orders of the roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub blocks: Vec<(Rat, usize)>,
    pub n: usize,
}

impl NewtonPolygon {
    /// Builds a polygon from blocks, merging equal slopes.
    pub fn from_blocks(blocks: &[(Rat, usize)]) -> Self {
        let mut merged: BTreeMap<Rat, usize> = BTreeMap::new();
        for (s, d) in blocks {
            if *d > 0 {
                *merged.entry(*s).or_default() += d;
            }
        }
        let blocks: Vec<(Rat, usize)> = merged.into_iter().collect();
        let n = blocks.iter().map(|b| b.1).sum();
        NewtonPolygon { blocks, n }
    }

    /// Root orders with multiplicity, ascending.
    pub fn slopes(&self) -> RatVec {
        self.blocks
            .iter()
            .flat_map(|(s, d)| std::iter::repeat_n(*s, *d))
            .collect()
    }

    /// The dominant Newton point `ν_k = val = −slope_k`.
    pub fn nu(&self) -> RatVec {
        self.slopes().iter().map(|s| -s).collect()
    }

    /// Every block satisfies `slope·size ∈ ℤ`.
    pub fn is_valid(&self) -> bool {
        self.blocks
            .iter()
            .all(|(s, d)| (*s * Rat::from_integer(*d as i64)).is_integer())
    }
}

/// Lower convex hull of `{(i, ord c_i)} ∪ {(n, 0)}` for a monic polynomial
/// `t^n + c_{n−1}t^{n−1} + … + c_0`; `None` marks a zero coefficient.
pub fn gl_newton_polygon(orders: &[Option<i64>]) -> Result<NewtonPolygon, PolygonError> {
    let n = orders.len();
    if n == 0 {
        return Err(PolygonError::Empty);
    }
    if orders[0].is_none() {
        return Err(PolygonError::ZeroConstantTerm);
    }
    let mut pts: Vec<(i64, i64)> = Vec::new();
    for (i, o) in orders.iter().enumerate() {
        if let Some(o) = o {
            if o.abs() > MAX_ORDER {
                return Err(PolygonError::OrderOutOfRange(*o));
            }
            pts.push((i as i64, *o));
        }
    }
    pts.push((n as i64, 0));
    // monotone chain, lower hull
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let blocks: Vec<(Rat, usize)> = hull
        .windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            (Rat::new(a.1 - b.1, b.0 - a.0), (b.0 - a.0) as usize)
        })
        .collect();
    Ok(NewtonPolygon::from_blocks(&blocks))
}

/// Each block of slope `p/q` (lowest terms) and size `d` gives `d/q`
/// cycles of length `q`; descending, fixed points included.
pub fn gl_cycle_type(poly: &NewtonPolygon) -> Vec<usize> {
    let mut out = Vec::new();
    for (s, d) in &poly.blocks {
        let q = *s.denom() as usize;
        out.extend(std::iter::repeat_n(q, d / q));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
    #[error("`n` is {n} but {got} coefficients were given")]
    CoefficientCount { n: usize, got: usize },
    #[error("polynomial degree must be at least 1")]
    ZeroDegree,
    #[error("coefficient c_{index}: {detail}")]
    Term { index: usize, detail: String },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoly {
    n: usize,
    coeffs: Vec<Vec<(i64, String, String)>>,
}

/// A monic polynomial over `ℚ(i)((ε))` with finitely many terms per
/// coefficient: `t^n + c_{n−1}t^{n−1} + … + c_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyInput {
    pub n: usize,
    /// `c_0, …, c_{n−1}`.
    pub coeffs: Vec<PuiseuxSeries>,
}

/// Parses `{"n": int, "coeffs": [[[exp, "re", "im"], …], …]}`.
pub fn parse_poly_json(s: &str) -> Result<PolyInput, PolyError> {
    let raw: RawPoly = serde_json::from_str(s).map_err(|e| PolyError::Json(e.to_string()))?;
    if raw.n == 0 {
        return Err(PolyError::ZeroDegree);
    }
    if raw.coeffs.len() != raw.n {
        return Err(PolyError::CoefficientCount {
            n: raw.n,
            got: raw.coeffs.len(),
        });
    }
    let i_unit = CycloNumber::zeta(4, 1);
    let mut coeffs = Vec::with_capacity(raw.n);
    for (index, terms) in raw.coeffs.iter().enumerate() {
        let err = |detail: String| PolyError::Term { index, detail };
        let mut series = PuiseuxSeries::zero();
        for (exp, re, im) in terms {
            if exp.abs() > MAX_ORDER {
                return Err(err(format!("exponent {exp} out of range")));
            }
            let re = parse_rational(re).map_err(|e| err(e.to_string()))?;
            let im = parse_rational(im).map_err(|e| err(e.to_string()))?;
            let c = &CycloNumber::from_rat_at(4, re) + &(&i_unit * &CycloNumber::from_rat(im));
            series = &series + &PuiseuxSeries::monomial(c, Rat::from_integer(*exp));
        }
        coeffs.push(series);
    }
    Ok(PolyInput { n: raw.n, coeffs })
}

impl PolyInput {
    /// Usual orders of `c_0, …, c_{n−1}` (`None` for zero coefficients).
    pub fn orders(&self) -> Vec<Option<i64>> {
        self.coeffs
            .iter()
            .map(|c| c.order().map(|q| q.to_integer()))
            .collect()
    }

    pub fn newton_polygon(&self) -> Result<NewtonPolygon, PolygonError> {
        gl_newton_polygon(&self.orders())
    }

    /// Serialises back to the input JSON shape (rational parts only).
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| {
                let terms: Vec<serde_json::Value> = c
                    .terms()
                    .map(|(e, v)| {
                        let (re, im) = gaussian_parts(v);
                        serde_json::json!([e.to_integer(), rational::fmt_rat(&re), rational::fmt_rat(&im)])
                    })
                    .collect();
                serde_json::Value::Array(terms)
            })
            .collect();
        serde_json::json!({ "n": self.n, "coeffs": coeffs })
    }
}

/// Real and imaginary parts of an element of `ℚ(i)`.
fn gaussian_parts(c: &CycloNumber) -> (Rat, Rat) {
    let c = c.simplify().embed(4);
    let part = |k| c.coeff(k).expect("Gaussian rational parts fit in 64 bits");
    (part(0), part(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::rootsys::{build_root_system, Kind};

    fn gl(n: usize) -> (RootSystem, AmbientLattice) {
        AmbientLattice::gl(n)
    }

    #[test]
    fn levi_examples() {
        let (rs, lat) = gl(4);
        let np = levi_of(&rs, &lat, &[int(1), int(1), int(0), int(0)]).unwrap();
        assert_eq!(np.levi(), &[0, 2]);
        let np = levi_of(&rs, &lat, &[int(3), int(2), int(1), int(0)]).unwrap();
        assert!(np.levi().is_empty());
        let np = levi_of(&rs, &lat, &[int(0); 4]).unwrap();
        assert_eq!(np.levi(), &[0, 1, 2]);
        assert!(matches!(
            levi_of(&rs, &lat, &[int(0), int(1), int(0), int(0)]),
            Err(NewtonError::NotDominant { index: 1, .. })
        ));
    }

    #[test]
    fn mu_class_examples() {
        let (rs, lat) = gl(2);
        let np = levi_of(&rs, &lat, &[rat(1, 2), rat(1, 2)]).unwrap();
        let mu = mu_class(&rs, &np).unwrap();
        assert_eq!(mu.components.len(), 1);
        assert_eq!(mu.components[0].1.node(), Some(0));
        assert!(mu.independent_of_lift);
        assert_eq!(mu.x_m, vec![rat(1, 2)]);

        let np = levi_of(&rs, &lat, &[int(1), int(1)]).unwrap();
        assert!(mu_class(&rs, &np).unwrap().components[0].1.is_zero());

        let (rs6, lat6) = gl(6);
        let np = levi_of(&rs6, &lat6, &[rat(1, 3); 6]).unwrap();
        let mu = mu_class(&rs6, &np).unwrap();
        assert_eq!(mu.order(), 3);

        // ν must come from an integral cocharacter
        let np = levi_of(&rs, &lat, &[rat(1, 3), rat(1, 3)]).unwrap();
        assert!(matches!(mu_class(&rs, &np), Err(NewtonError::NotInLattice { .. })));
    }

    #[test]
    fn twist_examples() {
        let (rs, lat) = gl(3);
        let np = levi_of(&rs, &lat, &[int(2), int(1), int(0)]).unwrap();
        let t = newton_twist(&rs, &np).unwrap();
        assert!(t.element.is_identity());
        assert_eq!(t.cycle_type, Some(vec![1, 1, 1]));

        let (rs, lat) = gl(2);
        let np = levi_of(&rs, &lat, &[rat(1, 2), rat(1, 2)]).unwrap();
        let t = newton_twist(&rs, &np).unwrap();
        assert_eq!(t.cycle_type, Some(vec![2]));

        let (rs, lat) = gl(6);
        let np = levi_of(&rs, &lat, &[rat(-1, 3); 6]).unwrap();
        let t = newton_twist(&rs, &np).unwrap();
        assert_eq!(t.cycle_type, Some(vec![3, 3]));
        assert_eq!(t.order, 3);
    }

    #[test]
    fn twist_on_levi_of_b3() {
        // ν = ω̄_1 on B3: Δ_M = {2, 3}, of type B2
        let rs = build_root_system("B3").unwrap();
        let lat = AmbientLattice::simply_connected(&rs);
        let nu = rs.fund_coweight(0).to_vec();
        let np = levi_of(&rs, &lat, &nu).unwrap();
        assert_eq!(np.levi(), &[1, 2]);
        let mu = mu_class(&rs, &np).unwrap();
        assert_eq!(mu.components[0].0.rs.kind(), Kind::B(2));
        let t = newton_twist(&rs, &np).unwrap();
        assert!(t.element.permutes_roots(&rs));
    }

    #[test]
    fn polygon_examples() {
        let p = gl_newton_polygon(&[Some(1), None]).unwrap();
        assert_eq!(p.slopes(), vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(gl_cycle_type(&p), vec![2]);
        let p = gl_newton_polygon(&[Some(1), Some(0)]).unwrap();
        assert_eq!(p.slopes(), vec![int(0), int(1)]);
        assert_eq!(gl_cycle_type(&p), vec![1, 1]);
        let p = gl_newton_polygon(&[Some(0), None, None, None]).unwrap();
        assert_eq!(p.slopes(), vec![int(0); 4]);
        let p = NewtonPolygon::from_blocks(&[(rat(1, 3), 6)]);
        assert_eq!(gl_cycle_type(&p), vec![3, 3]);
        assert!(p.is_valid());
        assert_eq!(gl_newton_polygon(&[None, Some(0)]), Err(PolygonError::ZeroConstantTerm));
        assert_eq!(gl_newton_polygon(&[]), Err(PolygonError::Empty));
    }

    #[test]
    fn m_nu_identities() {
        let rs = build_root_system("C3").unwrap();
        let lat = AmbientLattice::simply_connected(&rs);
        let nu = [rat(1, 2), int(2), rat(7, 3)];
        let nu = (0..3).fold(rational::zeros(3), |acc, i| {
            rational::add(&acc, &rational::scale(&nu[i], rs.fund_coweight(i)))
        });
        assert_eq!(m_nu(&rs, &lat, &nu), two_rho_pairing(&rs, &lat, &nu));
        let (rs, lat) = gl(3);
        assert_eq!(m_nu(&rs, &lat, &[rat(2, 3); 3]), int(0));
    }

    #[test]
    fn parses_poly_json() {
        let p = parse_poly_json(r#"{"n":2,"coeffs":[[[1,"-1","0"]],[]]}"#).unwrap();
        assert_eq!(p.orders(), vec![Some(1), None]);
        assert_eq!(p.newton_polygon().unwrap().slopes(), vec![rat(1, 2); 2]);
        let p = parse_poly_json(r#"{"n":2,"coeffs":[[[1,"1","0"]],[[0,"-1","0"],[1,"-1","0"]]]}"#).unwrap();
        assert_eq!(p.orders(), vec![Some(1), Some(0)]);
        let back = parse_poly_json(&p.to_json().to_string()).unwrap();
        assert_eq!(back, p);
        // terms that cancel leave a zero coefficient
        let p = parse_poly_json(r#"{"n":1,"coeffs":[[[0,"1/2","1"],[0,"-1/2","-1"]]]}"#).unwrap();
        assert_eq!(p.orders(), vec![None]);
        assert!(parse_poly_json(r#"{"n":2,"coeffs":[[]]}"#).is_err());
        assert!(parse_poly_json(r#"{"n":1,"coeffs":[[[0,"1/0","0"]]]}"#).is_err());
        assert!(parse_poly_json("[").is_err());
    }
}
