//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use newton_strata::alcove::{barycenter, psi, psi_by_search, validate_alcove_automorphism};
use newton_strata::newton::{
    gl_cycle_type, levi_of, m_nu, newton_twist, parse_poly_json, two_rho_pairing,
};
use newton_strata::puiseux::build_witness_gl;
use newton_strata::rational::{self, Rat, RatVec};
use newton_strata::rootsys::{coset_representatives, AmbientLattice, Kind, RootSystem};
use newton_strata::springer::{
    a_of, center_translate, chevalley_c, eigenvalue_check, find_regular_solution, fund_char_value,
    is_regular, regular_twist_set, solve_twisted, CentralClass, TorusPoint, DEFAULT_DENOM_BOUND,
    DEFAULT_SAMPLES,
};
use newton_strata::weyl::{cached_group, enumerate, WeylError, DEFAULT_CAP};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
/// Name, check, time budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn kinds_up_to_order(max: u64) -> Vec<Kind> {
    Kind::all_supported()
        .into_iter()
        .filter(|k| k.weyl_order() <= max)
        .collect()
}

fn kinds_up_to_rank(max: usize) -> Vec<Kind> {
    Kind::all_supported()
        .into_iter()
        .filter(|k| k.rank() <= max)
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn psi_suite() -> Outcome {
    let kinds = kinds_up_to_order(51_840);
    let mut cosets = 0;
    for kind in &kinds {
        let rs = RootSystem::new(*kind);
        let group = cached_group(&rs, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let reps = coset_representatives(&rs);
        let e = barycenter(&rs);
        let mut images = HashSet::new();
        for mu in &reps {
            let w = psi(&rs, mu).map_err(|e| format!("{kind}: {e}"))?;
            ensure(
                w.matrix().mul_rat_vec(e.coords()) == rational::sub(e.coords(), mu.rep()),
                || format!("{kind} {mu}: ψ(μ)(e) ≠ e − rep(μ)"),
            )?;
            let found = psi_by_search(&rs, mu, &group);
            ensure(found.as_ref() == Some(&w), || {
                format!("{kind} {mu}: search over W disagrees with ψ")
            })?;
            // another representative of the same class
            let shifted: RatVec = mu
                .rep()
                .iter()
                .enumerate()
                .map(|(i, q)| q + Rat::from_integer(i as i64 % 3 - 1))
                .collect();
            let again = CentralClass::new(&rs, &shifted).map_err(|e| e.to_string())?;
            ensure(psi(&rs, &again).ok().as_ref() == Some(&w), || {
                format!("{kind} {mu}: ψ depends on the representative")
            })?;
            ensure(validate_alcove_automorphism(&rs, mu), || {
                format!("{kind} {mu}: not an alcove automorphism")
            })?;
            images.insert(w.matrix().clone());
            for nu in &reps {
                let lhs = psi(&rs, &mu.add(&rs, nu)).map_err(|e| e.to_string())?;
                let rhs = w.mul(&psi(&rs, nu).map_err(|e| e.to_string())?);
                ensure(lhs == rhs, || format!("{kind}: ψ({mu}+{nu}) ≠ ψ({mu})ψ({nu})"))?;
            }
            cosets += 1;
        }
        ensure(images.len() == reps.len(), || format!("{kind}: ψ not injective"))?;
    }
    Ok(format!("{} types, {cosets} cosets", kinds.len()))
}

fn monodromy() -> Outcome {
    let kinds = kinds_up_to_order(51_840);
    let mut checked = 0;
    for kind in &kinds {
        let rs = RootSystem::new(*kind);
        let u = TorusPoint::new(barycenter(&rs).coords());
        ensure(is_regular(&rs, &u), || format!("{kind}: Exp(e) is not regular"))?;
        for x in coset_representatives(&rs) {
            let g = psi(&rs, &x).map_err(|e| e.to_string())?;
            let lhs = TorusPoint::new(&g.matrix().mul_rat_vec(u.coords()));
            ensure(lhs == center_translate(&x, &u), || {
                format!("{kind} {x}: ψ(x)(u) ≠ xu")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{} types, {checked} pairs (x, u)", kinds.len()))
}

fn twist_classes() -> Outcome {
    let kinds = kinds_up_to_order(1_200);
    let mut rows = 0;
    for kind in &kinds {
        let rs = RootSystem::new(*kind);
        let group = cached_group(&rs, DEFAULT_CAP).map_err(|e| e.to_string())?;
        for x in coset_representatives(&rs) {
            let set = regular_twist_set(&rs, &x, &group);
            ensure(!set.is_empty(), || format!("{kind} {x}: S_x is empty"))?;
            let g = psi(&rs, &x).map_err(|e| e.to_string())?;
            let gi = group.index_of(&g).ok_or("ψ(x) not in W")?;
            let mut class = group.conjugacy_class(&g).map_err(|e| e.to_string())?;
            class.sort_unstable();
            ensure(set == class, || {
                format!("{kind} {x}: |S_x| = {}, |class of ψ(x)| = {}", set.len(), class.len())
            })?;
            ensure(set.contains(&gi), || format!("{kind} {x}: ψ(x) ∉ S_x"))?;
            for &k in &set {
                ensure(
                    group.are_conjugate(group.get(k), &g).map_err(|e| e.to_string())?,
                    || format!("{kind} {x}: element {k} of S_x not conjugate to ψ(x)"),
                )?;
            }
            rows += 1;
        }
    }
    Ok(format!("{} types, {rows} (type, x) rows", kinds.len()))
}

fn eigenvalues() -> Outcome {
    let kinds = kinds_up_to_order(51_840);
    let mut rows = 0;
    for kind in &kinds {
        let rs = RootSystem::new(*kind);
        for x in coset_representatives(&rs) {
            ensure(eigenvalue_check(&rs, &x), || format!("{kind} {x}: eigenvalues differ"))?;
            rows += 1;
        }
    }
    Ok(format!("{} types, {rows} (type, x) rows", kinds.len()))
}

fn criterion_i_ii() -> Outcome {
    let mut exact = 0;
    let mut sampled = 0;
    for kind in kinds_up_to_rank(3) {
        let rs = RootSystem::new(kind);
        let group = cached_group(&rs, DEFAULT_CAP).map_err(|e| e.to_string())?;
        for x in coset_representatives(&rs) {
            let a = a_of(&rs, &x);
            for w in group.elements() {
                let set = solve_twisted(&rs, w, &x);
                if !set.solvable {
                    continue;
                }
                let predicted = set.dim == a;
                let found = find_regular_solution(&rs, w, &x, DEFAULT_DENOM_BOUND, DEFAULT_SAMPLES, 0)
                    .map_err(|e| e.to_string())?;
                if let Some(u) = &found {
                    ensure(is_regular(&rs, u), || format!("{kind} {x} w={w}: bad witness"))?;
                }
                let tag = || format!("{kind} x={x} w={w} dim={} a(x)={a}", set.dim);
                if set.dim == 0 {
                    exact += 1;
                    // exhaustive over the finitely many points
                    let any_regular = set.components.iter().any(|u| is_regular(&rs, u));
                    ensure(any_regular == predicted, || format!("{}: exhaustive mismatch", tag()))?;
                } else {
                    sampled += 1;
                    if predicted {
                        ensure(found.is_some(), || format!("{}: sampling missed", tag()))?;
                    } else {
                        ensure(found.is_none(), || format!("{}: regular point off the criterion", tag()))?;
                    }
                }
            }
        }
    }
    Ok(format!("{exact} exact and {sampled} sampled solvable (w, x)"))
}

fn random_poly_json(rng: &mut ChaCha8Rng) -> String {
    let n = rng.gen_range(2..=8usize);
    let coeffs: Vec<serde_json::Value> = (0..n)
        .map(|i| {
            if i > 0 && rng.gen_bool(0.3) {
                return serde_json::json!([]);
            }
            let ord = rng.gen_range(0..=12i64);
            let extra = rng.gen_range(0..=2usize);
            let mut terms = vec![serde_json::json!([ord, format!("{}", rng.gen_range(1..=9)), "0"])];
            for k in 0..extra {
                let num = rng.gen_range(-5..=5i64);
                terms.push(serde_json::json!([ord + 1 + k as i64, num.to_string(), "1/2"]));
            }
            serde_json::Value::Array(terms)
        })
        .collect();
    serde_json::json!({ "n": n, "coeffs": coeffs }).to_string()
}

fn newton_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut sizes = Vec::new();
    for instance in 0..100 {
        let text = random_poly_json(&mut rng);
        let tag = |m: &str| format!("instance {instance} {text}: {m}");
        let poly = parse_poly_json(&text).map_err(|e| tag(&e.to_string()))?;
        let polygon = poly.newton_polygon().map_err(|e| tag(&e.to_string()))?;
        let (rs, lat) = AmbientLattice::gl(poly.n);
        let np = levi_of(&rs, &lat, &polygon.nu()).map_err(|e| tag(&e.to_string()))?;
        let twist = newton_twist(&rs, &np).map_err(|e| tag(&e.to_string()))?;
        let expected = gl_cycle_type(&polygon);
        ensure(twist.cycle_type.as_ref() == Some(&expected), || {
            tag(&format!("cycle type {:?} vs oracle {expected:?}", twist.cycle_type))
        })?;
        let witness = build_witness_gl(&polygon, None).map_err(|e| tag(&e.to_string()))?;
        for name in ["sigma", "surj3", "regular", "omega"] {
            ensure(witness.check(name) == Some(true), || tag(&format!("witness check {name} failed")))?;
        }
        let group = cached_group(&rs, DEFAULT_CAP).map_err(|e| e.to_string())?;
        ensure(
            group.are_conjugate(&witness.h, &twist.element).map_err(|e| e.to_string())?,
            || tag("h is not conjugate to w(ν)"),
        )?;
        sizes.push(poly.n);
    }
    Ok(format!("100 polynomials, degrees {}..={}", sizes.iter().min().unwrap(), sizes.iter().max().unwrap()))
}

fn m_nu_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut count = 0;
    for kind in kinds_up_to_rank(4) {
        let rs = RootSystem::new(kind);
        let lat = AmbientLattice::simply_connected(&rs);
        for _ in 0..50 {
            // ν = Σ c_j ω̄_j with c_j ≥ 0
            let mut nu = rational::zeros(rs.rank());
            for j in 0..rs.rank() {
                let c = Rat::new(rng.gen_range(0..=12), rng.gen_range(1..=6));
                nu = rational::add(&nu, &rational::scale(&c, rs.fund_coweight(j)));
            }
            let m = m_nu(&rs, &lat, &nu);
            let two_rho = two_rho_pairing(&rs, &lat, &nu);
            ensure(m == two_rho, || format!("{kind} ν={}: m_ν ≠ ⟨2ρ,ν⟩", rational::fmt_vec(&nu)))?;
            count += 1;
        }
        ensure(m_nu(&rs, &lat, &rational::zeros(rs.rank())).is_zero(), || {
            format!("{kind}: m_0 ≠ 0")
        })?;
    }
    for n in 2..=5 {
        let (rs, lat) = AmbientLattice::gl(n);
        for _ in 0..50 {
            let c = Rat::new(rng.gen_range(-12..=12), rng.gen_range(1..=n as i64));
            let nu = vec![c; n];
            ensure(m_nu(&rs, &lat, &nu).is_zero(), || format!("GL{n} central ν: m_ν ≠ 0"))?;
            ensure(two_rho_pairing(&rs, &lat, &nu).is_zero(), || format!("GL{n}: ⟨2ρ,ν⟩ ≠ 0"))?;
            count += 1;
        }
    }
    Ok(format!("{count} Newton points"))
}

fn torsion_points(rank: usize, max_denom: i64) -> Vec<TorusPoint> {
    let mut fracs: Vec<Rat> = (1..=max_denom)
        .flat_map(|d| (0..d).map(move |k| Rat::new(k, d)))
        .collect();
    fracs.sort();
    fracs.dedup();
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p: RatVec| {
                fracs.iter().map(move |f| {
                    let mut q = p.clone();
                    q.push(*f);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|v| TorusPoint::new(&v)).collect()
}

fn dilation() -> Outcome {
    let mut checked = 0;
    for kind in kinds_up_to_rank(2) {
        let rs = RootSystem::new(kind);
        let group = enumerate(&rs, DEFAULT_CAP).map_err(|e| e.to_string())?;
        let points = torsion_points(rs.rank(), 6);
        for x in coset_representatives(&rs) {
            let chars: Vec<_> = (0..rs.rank()).map(|i| fund_char_value(&rs, i, &x)).collect();
            for u in &points {
                let xu = center_translate(&x, u);
                let cu = chevalley_c(&rs, u);
                let cxu = chevalley_c(&rs, &xu);
                for i in 0..rs.rank() {
                    ensure(cxu[i] == &chars[i] * &cu[i], || {
                        format!("{kind} x={x} u={u}: c_{}(xu) ≠ ϖ(x)c(u)", i + 1)
                    })?;
                }
                let lhs = group
                    .elements()
                    .iter()
                    .any(|g| TorusPoint::new(&g.matrix().mul_rat_vec(u.coords())) == xu);
                let rhs = (0..rs.rank()).all(|i| cu[i].is_zero() || chars[i].is_one());
                ensure(lhs == rhs, || {
                    format!("{kind} x={x} u={u}: orbit test {lhs}, Chevalley test {rhs}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (type, x, u) triples"))
}

fn structural() -> Outcome {
    let kinds = Kind::all_supported();
    let mut enumerated = 0;
    for kind in &kinds {
        let rs = RootSystem::new(*kind);
        let det = rs.cartan().det();
        let reps = coset_representatives(&rs);
        ensure(det as usize == reps.len(), || {
            format!("{kind}: det = {det}, {} coset representatives", reps.len())
        })?;
        ensure(rs.roots().len() == kind.root_count(), || format!("{kind}: root count"))?;
        if kind.weyl_order() <= DEFAULT_CAP as u64 {
            let g = cached_group(&rs, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure(g.len() as u64 == kind.weyl_order(), || {
                format!("{kind}: |W| = {}, expected {}", g.len(), kind.weyl_order())
            })?;
            enumerated += 1;
        } else {
            match enumerate(&rs, DEFAULT_CAP) {
                Err(WeylError::CapExceeded { classical, .. }) => {
                    ensure(classical == kind.weyl_order(), || format!("{kind}: cap report"))?
                }
                _ => return Err(format!("{kind}: expected the enumeration cap to trigger")),
            }
        }
    }
    Ok(format!("{} types, {enumerated} groups enumerated", kinds.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 psi suite", psi_suite, 60),
        ("2 Exp(e) regular and psi(x)(u) = xu", monodromy, 10),
        ("3 S_x is the class of psi(x)", twist_classes, 300),
        ("4 eigenvalue identity", eigenvalues, 60),
        ("5 criterion (i) <=> (ii)", criterion_i_ii, 120),
        ("6 Newton/GL oracle and witnesses", newton_oracle, 60),
        ("7 m_nu identities", m_nu_identities, 10),
        ("8 dilation and Chevalley test", dilation, 60),
        ("9 structural tables", structural, 5),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        match outcome {
            Ok(msg) if !over => println!("PASS criterion {name}: {msg} ({:.2?})", took),
            Ok(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}, but took {:.2?} (budget {budget} s)", took);
            }
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({:.2?})", took);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
