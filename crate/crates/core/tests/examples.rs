//! Worked examples for every public operation, checked against values
//! computed by hand.

use newton_strata::alcove::{
    barycenter, fundamental_alcove_vertices, psi, validate_alcove_automorphism,
};
use newton_strata::matrix::IntMatrix;
use newton_strata::newton::{
    gl_cycle_type, gl_newton_polygon, levi_of, mu_class, newton_twist, NewtonError, NewtonPolygon,
};
use newton_strata::puiseux::{
    build_witness_central, build_witness_gl, CycloNumber, PuiseuxSeries, Val,
};
use newton_strata::rational::{int, rat, zeros, Rat};
use newton_strata::rootsys::{
    build_root_system, coset_representatives, smith_solve, AmbientLattice, RootSystem,
};
use newton_strata::springer::{
    a_of, center_translate, chevalley_c, eigenvalue_check, eigenvalue_report,
    find_regular_solution, is_regular, regular_twist_set, solve_twisted, CentralClass,
    SpringerError, TorusPoint,
};
use newton_strata::weyl::{act, are_conjugate, char_poly, enumerate, WeylElement, DEFAULT_CAP};

fn rs(name: &str) -> RootSystem {
    build_root_system(name).unwrap()
}

fn w(r: &RootSystem, word: &[usize]) -> WeylElement {
    WeylElement::from_word(r, word)
}

fn omega(r: &RootSystem, j: usize) -> CentralClass {
    CentralClass::fundamental(r, j)
}

#[test]
fn build_root_system_examples() {
    let a1 = rs("A1");
    assert_eq!(a1.roots().len(), 2);
    assert_eq!(a1.cartan(), &IntMatrix::from_rows(&[vec![2]]));
    assert_eq!(a1.marks(), &[1, 1]);
    assert_eq!(a1.minuscule(), &[0]);
    assert_eq!(rs("A3").minuscule(), &[0, 1, 2]);
    let g2 = rs("G2");
    let mut marks = g2.marks()[1..].to_vec();
    marks.sort_unstable();
    assert_eq!(marks, vec![2, 3]);
    assert!(g2.minuscule().is_empty());
    assert!(build_root_system("Q3").is_err());
    assert!(build_root_system("A9").is_err());
    assert!(build_root_system("D3").is_err());
}

#[test]
fn coset_representative_examples() {
    let a2 = rs("A2");
    let reps = coset_representatives(&a2);
    assert_eq!(reps.len(), 3);
    assert!(reps[0].is_zero());
    assert_eq!(reps[1].rep(), a2.fund_coweight(0));
    assert_eq!(reps[2].rep(), a2.fund_coweight(1));
    assert_eq!(coset_representatives(&rs("G2")).len(), 1);
    assert_eq!(coset_representatives(&rs("A1")).len(), 2);
}

#[test]
fn smith_solve_examples() {
    let s = smith_solve(&IntMatrix::identity(2), &zeros(2)).unwrap();
    assert!(s.solvable);
    assert_eq!(s.dim, 0);
    assert_eq!(s.components, vec![zeros(2)]);
    assert!(!smith_solve(&IntMatrix::zeros(1, 1), &[rat(1, 2)]).unwrap().solvable);
    let s = smith_solve(&IntMatrix::from_rows(&[vec![-2]]), &[rat(1, 2)]).unwrap();
    assert!(s.solvable);
    assert_eq!(s.dim, 0);
    assert_eq!(s.components, vec![vec![rat(1, 4)], vec![rat(3, 4)]]);
    assert!(smith_solve(&IntMatrix::identity(2), &zeros(3)).is_err());
}

#[test]
fn weyl_examples() {
    assert_eq!(enumerate(&rs("A3"), DEFAULT_CAP).unwrap().len(), 24);
    assert_eq!(enumerate(&rs("G2"), DEFAULT_CAP).unwrap().len(), 12);
    assert_eq!(enumerate(&rs("A1"), DEFAULT_CAP).unwrap().len(), 2);
    assert!(enumerate(&rs("A3"), 10).is_err());

    let a1 = rs("A1");
    assert_eq!(act(&w(&a1, &[0]), &[int(1)]).unwrap(), vec![int(-1)]);
    let a2 = rs("A2");
    let v = vec![rat(1, 3), rat(1, 3)];
    assert_eq!(act(&WeylElement::identity(2), &v).unwrap(), v);
    assert_eq!(act(&w(&a2, &[0, 1]), &v).unwrap(), vec![rat(-1, 3), int(0)]);
    assert!(act(&w(&a2, &[0, 1]), &[int(1)]).is_err());

    assert_eq!(char_poly(&WeylElement::identity(2)), vec![1, -2, 1]);
    assert_eq!(char_poly(&w(&a1, &[0])), vec![1, 1]);
    assert_eq!(char_poly(&w(&a2, &[0, 1])), vec![1, 1, 1]);

    let g = enumerate(&a2, DEFAULT_CAP).unwrap();
    let id = WeylElement::identity(2);
    assert!(are_conjugate(&id, &id, &g).unwrap());
    assert!(!are_conjugate(&id, &w(&a2, &[0]), &g).unwrap());
    assert!(are_conjugate(&w(&a2, &[0]), &w(&a2, &[1]), &g).unwrap());
    assert!(are_conjugate(&w(&a2, &[0, 1]), &w(&a2, &[1, 0]), &g).unwrap());
    let stranger = WeylElement::from_matrix(IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]));
    assert!(are_conjugate(&id, &stranger, &g).is_err());
}

#[test]
fn alcove_examples() {
    let a1 = rs("A1");
    let verts: Vec<Vec<Rat>> = fundamental_alcove_vertices(&a1)
        .iter()
        .map(|p| p.coords().to_vec())
        .collect();
    assert_eq!(verts, vec![vec![int(0)], vec![rat(1, 2)]]);
    assert_eq!(barycenter(&a1).coords(), &[rat(1, 4)]);
    let a2 = rs("A2");
    assert_eq!(fundamental_alcove_vertices(&a2).len(), 3);
    assert_eq!(barycenter(&a2).coords(), &[rat(1, 3), rat(1, 3)]);
    for name in ["B4", "C3", "D5", "E6", "F4", "G2"] {
        let r = rs(name);
        let e = barycenter(&r);
        assert!(e.is_interior(&r), "{name}");
        assert!((0..r.rank()).all(|i| r.simple_root_pairing(i, e.coords()) > int(0)));
        assert!(is_regular(&r, &TorusPoint::new(e.coords())));
    }

    assert!(psi(&a2, &CentralClass::zero(&a2)).unwrap().is_identity());
    assert_eq!(psi(&a1, &omega(&a1, 0)).unwrap(), w(&a1, &[0]));
    let p = psi(&a2, &omega(&a2, 0)).unwrap();
    assert_eq!(p, w(&a2, &[0, 1]));
    assert_eq!(p.order(), 3);

    for r in [&a1, &a2] {
        for mu in coset_representatives(r) {
            assert!(validate_alcove_automorphism(r, &mu));
        }
    }
}

#[test]
fn springer_examples() {
    let a1 = rs("A1");
    let a2 = rs("A2");
    let a3 = rs("A3");
    assert!(!is_regular(&a2, &TorusPoint::new(&zeros(2))));
    assert!(!is_regular(&a1, &TorusPoint::new(&[rat(1, 2)])));
    assert!(is_regular(&a2, &TorusPoint::new(&[rat(1, 3), rat(1, 3)])));

    let u = TorusPoint::new(&[rat(1, 4)]);
    let x = omega(&a1, 0);
    assert_eq!(center_translate(&CentralClass::zero(&a1), &u), u);
    assert_eq!(center_translate(&x, &u).coords(), &[rat(3, 4)]);
    let y = omega(&a2, 0);
    let v = TorusPoint::new(&[rat(1, 5), rat(2, 7)]);
    assert_eq!(center_translate(&y, &center_translate(&y.neg(&a2), &v)), v);

    let id = WeylElement::identity(1);
    let s = solve_twisted(&a1, &id, &CentralClass::zero(&a1));
    assert!(s.solvable && s.dim == 1);
    assert!(!solve_twisted(&a1, &id, &x).solvable);
    let s = solve_twisted(&a1, &w(&a1, &[0]), &x);
    assert!(s.solvable && s.dim == 0);
    let comps: Vec<&[Rat]> = s.components.iter().map(|p| p.coords()).collect();
    assert_eq!(comps, vec![&[rat(1, 4)][..], &[rat(3, 4)][..]]);
    assert!(s.components.iter().all(|p| is_regular(&a1, p)));

    assert_eq!(a_of(&a3, &CentralClass::zero(&a3)), 3);
    assert_eq!(a_of(&a1, &x), 0);
    assert_eq!(a_of(&a3, &omega(&a3, 1)), 1);

    let g1 = enumerate(&a1, DEFAULT_CAP).unwrap();
    let g2 = enumerate(&a2, DEFAULT_CAP).unwrap();
    let only = |k: Vec<usize>, g: &newton_strata::weyl::WeylGroup| -> Vec<WeylElement> {
        k.into_iter().map(|i| g.get(i).clone()).collect()
    };
    assert_eq!(
        only(regular_twist_set(&a2, &CentralClass::zero(&a2), &g2), &g2),
        vec![WeylElement::identity(2)]
    );
    assert_eq!(only(regular_twist_set(&a1, &x, &g1), &g1), vec![w(&a1, &[0])]);
    let mut set = only(regular_twist_set(&a2, &y, &g2), &g2);
    set.sort_by_key(|e| e.matrix().to_rows());
    let mut expected = vec![w(&a2, &[0, 1]), w(&a2, &[1, 0])];
    expected.sort_by_key(|e| e.matrix().to_rows());
    assert_eq!(set, expected);

    let found = find_regular_solution(&a1, &w(&a1, &[0]), &x, 60, 100, 0).unwrap();
    assert_eq!(found.unwrap().coords(), &[rat(1, 4)]);
    let found = find_regular_solution(&a2, &WeylElement::identity(2), &CentralClass::zero(&a2), 60, 100, 0)
        .unwrap()
        .unwrap();
    assert!(is_regular(&a2, &found));
    // s_1 moves ω̄_1 off its own fixed line, so A(s_1, x) is empty
    assert_eq!(
        find_regular_solution(&a2, &w(&a2, &[0]), &y, 60, 100, 0),
        Err(SpringerError::Unsolvable)
    );

    assert!(eigenvalue_check(&a2, &CentralClass::zero(&a2)));
    assert_eq!(eigenvalue_report(&a2, &CentralClass::zero(&a2)).char_poly, vec![1, -2, 1]);
    assert_eq!(eigenvalue_report(&a1, &x).char_poly, vec![1, 1]);
    assert!(eigenvalue_check(&a1, &x));
    assert_eq!(eigenvalue_report(&a2, &y).char_poly, vec![1, 1, 1]);
    assert!(eigenvalue_check(&a2, &y));

    let c = chevalley_c(&a2, &TorusPoint::new(&zeros(2)));
    assert_eq!(c, vec![CycloNumber::from_rat(int(3)), CycloNumber::from_rat(int(3))]);
    assert!(chevalley_c(&a1, &u)[0].is_zero());
}

#[test]
fn newton_examples() {
    let (gl4, lat4) = AmbientLattice::gl(4);
    let np = levi_of(&gl4, &lat4, &[int(1), int(1), int(0), int(0)]).unwrap();
    assert_eq!(np.levi(), &[0, 2]);
    let np = levi_of(&gl4, &lat4, &[int(3), int(2), int(1), int(0)]).unwrap();
    assert!(np.levi().is_empty());
    assert!(newton_twist(&gl4, &np).unwrap().element.is_identity());
    let np = levi_of(&gl4, &lat4, &zeros(4)).unwrap();
    assert_eq!(np.levi(), &[0, 1, 2]);
    assert!(matches!(
        levi_of(&gl4, &lat4, &[int(0), int(1), int(0), int(0)]),
        Err(NewtonError::NotDominant { index: 1, .. })
    ));

    let np = levi_of(&gl4, &lat4, &[int(2), int(2), int(1), int(1)]).unwrap();
    assert_eq!(mu_class(&gl4, &np).unwrap().order(), 1);

    let (gl2, lat2) = AmbientLattice::gl(2);
    let np = levi_of(&gl2, &lat2, &[rat(1, 2), rat(1, 2)]).unwrap();
    let mu = mu_class(&gl2, &np).unwrap();
    assert_eq!(mu.x_m, vec![rat(1, 2)]);
    assert_eq!(mu.components[0].1.node(), Some(0));
    assert!(mu.independent_of_lift);
    let t = newton_twist(&gl2, &np).unwrap();
    assert_eq!(t.element, w(&gl2, &[0]));
    assert_eq!(t.cycle_type, Some(vec![2]));

    let (gl6, lat6) = AmbientLattice::gl(6);
    let np = levi_of(&gl6, &lat6, &[rat(1, 3); 6]).unwrap();
    let mu = mu_class(&gl6, &np).unwrap();
    assert_eq!(mu.order(), 3);
    assert_eq!(mu.components[0].1.node(), Some(1));
    let t = newton_twist(&gl6, &np).unwrap();
    assert_eq!(t.cycle_type, Some(vec![3, 3]));

    let (gl3, lat3) = AmbientLattice::gl(3);
    assert!(matches!(
        mu_class(&gl3, &levi_of(&gl3, &lat3, &[rat(1, 2); 3]).unwrap()),
        Err(NewtonError::NotInLattice { .. })
    ));
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
    assert!(gl_newton_polygon(&[None, Some(0)]).is_err());
    let p = NewtonPolygon::from_blocks(&[(rat(1, 3), 6)]);
    assert_eq!(gl_cycle_type(&p), vec![3, 3]);
}

#[test]
fn puiseux_examples() {
    let eps = |q: Rat| PuiseuxSeries::eps_pow(q);
    assert_eq!(eps(int(1)).val(), Val::Finite(int(-1)));
    assert_eq!(eps(rat(1, 2)).val(), Val::Finite(rat(-1, 2)));
    assert_eq!(eps(int(1)).sigma(), eps(int(1)));
    assert_eq!(eps(rat(1, 2)).sigma(), -&eps(rat(1, 2)));

    let r = build_witness_gl(&NewtonPolygon::from_blocks(&[(rat(1, 2), 2)]), None).unwrap();
    assert_eq!(r.coords, vec![eps(rat(1, 2)), -&eps(rat(1, 2))]);
    assert_eq!(r.cycle_type, Some(vec![2]));
    assert!(r.pass());

    let units = vec![vec![CycloNumber::zeta(3, 1)], vec![CycloNumber::from_rat(rat(5, 2))]];
    let r = build_witness_gl(
        &NewtonPolygon::from_blocks(&[(int(0), 1), (int(1), 1)]),
        Some(&units),
    )
    .unwrap();
    assert!(r.h.is_identity());
    assert!(r.pass());

    let r = build_witness_gl(&NewtonPolygon::from_blocks(&[(rat(1, 3), 6)]), None).unwrap();
    let (gl6, lat6) = AmbientLattice::gl(6);
    let twist = newton_twist(&gl6, &levi_of(&gl6, &lat6, &[rat(-1, 3); 6]).unwrap()).unwrap();
    let g = enumerate(&gl6, DEFAULT_CAP).unwrap();
    assert!(are_conjugate(&r.h, &twist.element, &g).unwrap());

    let b3 = rs("B3");
    let r = build_witness_central(&b3, &AmbientLattice::simply_connected(&b3), &zeros(3)).unwrap();
    assert!(r.h.is_identity() && r.pass());

    let (gl3, lat3) = AmbientLattice::gl(3);
    let r = build_witness_central(&gl3, &lat3, &[rat(1, 3); 3]).unwrap();
    assert_eq!(r.cycle_type, Some(vec![3]));
    assert!(r.pass(), "{:?}", r.checks);
    let (gl2, lat2) = AmbientLattice::gl(2);
    let r = build_witness_central(&gl2, &lat2, &[rat(1, 2); 2]).unwrap();
    assert!(r.pass());
    assert_eq!(r.cycle_type, Some(vec![2]));
}
