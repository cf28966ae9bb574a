use super::*;
use crate::eqsys::{build_stump_system, build_stump_system_nonsym, build_symmetric_regular_system};
use crate::presentation::builtin;
use crate::series::{int, rat};

fn ones(n: usize) -> Series {
    let mut v = vec![0; n + 1];
    v[1..].fill(1);
    Series::from_ints(&v, n, Flavor::Ordinary)
}

#[test]
fn geometric_series() {
    let r = guess_rational(&ones(20), 4).unwrap().unwrap();
    assert_eq!(r, RationalFunction::from_ints(&[0, 1], &[1, -1]).unwrap());
    assert_eq!(r.to_string(), "z/(1 - z)");
}

#[test]
fn naturals() {
    let v: Vec<i64> = (0..=16).collect();
    let f = Series::from_ints(&v, 16, Flavor::Ordinary);
    let r = guess_rational(&f, 5).unwrap().unwrap();
    assert_eq!(r.to_string(), "z/(1 - 2*z + z^2)");
}

#[test]
fn rational_needs_order() {
    assert!(matches!(guess_rational(&ones(5), 4), Err(Error::InsufficientOrder(_))));
}

#[test]
fn no_rational_fit_for_catalan() {
    let p = builtin("free_binary").unwrap();
    let f = build_stump_system_nonsym(&p).unwrap().solve(20).unwrap().total;
    assert_eq!(guess_rational(&f, 8).unwrap(), None);
}

#[test]
fn identity_series_is_linear() {
    let f = Series::z(12, Flavor::Ordinary);
    let q = guess_algebraic(&f, 1, 1).unwrap().unwrap();
    assert_eq!(q.to_string(), "y - z");
    assert!(verify_equation(&f, &q));
    assert!(!verify_equation(&ones(12), &q));
}

#[test]
fn alia_cubic() {
    let p = builtin("alia").unwrap();
    let e = build_stump_system(&p).unwrap().solve(20).unwrap().total;
    let q = guess_algebraic(&e, 3, 2).unwrap().unwrap();
    let expected = AlgebraicEquation::from_terms([
        (0, 3, rat(1, 6)),
        (0, 2, int(-1)),
        (0, 1, int(1)),
        (1, 0, int(-1)),
    ])
    .unwrap();
    assert_eq!(q, expected);
    assert_eq!(q.to_string(), "y^3 - 6*y^2 + 6*y - 6*z");
    assert!(verify_equation(&e.truncate(12), &q));
}

#[test]
fn nu2_quadratic() {
    let p = builtin("nu2").unwrap();
    let e = build_symmetric_regular_system(&p).unwrap().solve(16).unwrap().total;
    let q = AlgebraicEquation::from_int_rows(&[&[0, 4, -1], &[-4, 2], &[3]]).unwrap();
    assert!(verify_equation(&e, &q));
    assert_eq!(guess_algebraic_auto(&e, 2).unwrap(), Some(q));
}

#[test]
fn rational_in_algebraic_form() {
    let r = RationalFunction::from_ints(&[0, 1, 3], &[1, -2, 5, 1]).unwrap();
    let f = r.expand(20);
    let q = guess_algebraic(&f, 1, 3).unwrap().unwrap();
    // den * y - num
    assert_eq!(q, AlgebraicEquation::from_int_rows(&[&[0, -1, -3], &[1, -2, 5, 1]]).unwrap());
}

#[test]
fn dependence_graphs() {
    let assoc = build_stump_system(&builtin("assoc").unwrap()).unwrap();
    let g = dependence_graph(&assoc);
    assert_eq!(g.edges.len(), 1);
    assert!(!g.edges[0].nonlinear && g.edges[0].from == g.edges[0].to);
    let report = classify_growth(&g, &assoc.solve(20).unwrap());
    assert_eq!(report.expectation, GrowthExpectation::Rational);
    assert_eq!(report.rational_fit.unwrap().to_string(), "z/(1 - z)");

    let free = build_stump_system(&builtin("free_binary").unwrap()).unwrap();
    let g = dependence_graph(&free);
    assert_eq!(g.nonlinear_cycles().len(), 1);
    let report = classify_growth(&g, &free.solve(20).unwrap());
    assert_eq!(report.expectation.to_string(), "exponential-or-faster expected");
    assert!(report.warning.is_none());

    let alia = build_stump_system(&builtin("alia").unwrap()).unwrap();
    let report = classify_growth(&dependence_graph(&alia), &alia.solve(16).unwrap());
    assert_eq!(report.expectation, GrowthExpectation::Factorial);
    assert!(report.rational_fit.is_none() && report.warning.is_none());
}

#[test]
fn normalization_is_primitive() {
    let q = AlgebraicEquation::from_int_rows(&[&[0, -4], &[2, 6]]).unwrap();
    assert_eq!(q.coeffs()[1], vec![int(1), int(3)]);
    assert_eq!(q.to_string(), "(1 + 3*z)*y - 2*z");
    let json = q.to_json();
    assert_eq!(json["deg_y"], 1);
    assert_eq!(json["deg_z"], 1);
}
