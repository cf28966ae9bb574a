use super::*;
use crate::enumerate::basis_dims;
use crate::presentation::builtin;
use crate::series::{int, rat};

fn dims(s: &EqSystem, n: usize) -> Vec<u64> {
    s.solve(n).unwrap().total.dims_u64().unwrap()
}

#[test]
fn assoc_stump_system() {
    let p = builtin("assoc").unwrap();
    let s = build_stump_system_nonsym(&p).unwrap();
    assert_eq!(s.unknowns(), 1);
    let text = emit_system(&s, EmitFormat::Text, false).unwrap();
    assert!(text.contains("y_mu = z^2 + z*y_mu"), "{text}");
    assert_eq!(dims(&s, 10), vec![1; 10]);
}

#[test]
fn free_binary_is_catalan() {
    let p = builtin("free_binary").unwrap();
    let s = build_stump_system_nonsym(&p).unwrap();
    let text = emit_system(&s, EmitFormat::Text, false).unwrap();
    assert!(text.contains("y_m = z^2 + 2*z*y_m + y_m^2"), "{text}");
    assert_eq!(dims(&s, 6), vec![1, 1, 2, 5, 14, 42]);
    let ie = build_incl_excl_system_nonsym(&p).unwrap();
    let text = emit_system(&ie, EmitFormat::Text, false).unwrap();
    assert!(text.contains("y_m = y_1^2"), "{text}");
    assert_eq!(dims(&ie, 6), vec![1, 1, 2, 5, 14, 42]);
}

#[test]
fn asw_systems_agree() {
    let p = builtin("asw").unwrap();
    let ie = build_incl_excl_system_nonsym(&p).unwrap();
    assert_eq!(ie.unknowns(), 5);
    let st = build_stump_system_nonsym(&p).unwrap();
    let expected = vec![1, 1, 2, 4, 8, 15, 28, 51, 92, 164, 290, 509];
    assert_eq!(dims(&ie, 12), expected);
    assert_eq!(dims(&st, 12), expected);
    assert_eq!(basis_dims(&p, 9).unwrap(), expected[..9].to_vec());
    let text = emit_system(&ie, EmitFormat::Text, false).unwrap();
    assert!(text.contains("y_1 = z + y_m"), "{text}");
}

#[test]
fn alia_shuffle_system() {
    let p = builtin("alia").unwrap();
    let s = build_stump_system_shuffle(&p).unwrap();
    assert_eq!(s.unknowns(), 2);
    let sol = s.solve(10).unwrap();
    let e = &sol.total;
    assert_eq!(e.coeff(3), &rat(11, 6));
    assert_eq!(e.coeff(10), &rat(2906189, 1296));
    assert_eq!(&e.exp_to_ord().dims_u64().unwrap()[..4], &[1, 2, 11, 100]);
    let ode = emit_system(&s, EmitFormat::Ode, false).unwrap();
    assert!(ode.contains("y_a' ="), "{ode}");
    assert!(ode.contains("y_a(0) = 0"), "{ode}");
}

#[test]
fn nu2_builders_agree() {
    let p = builtin("nu2").unwrap();
    let c = build_stump_system_shuffle(&p).unwrap();
    let sym = build_symmetric_regular_system(&p).unwrap();
    let a = c.solve(10).unwrap();
    let b = sym.solve(10).unwrap();
    assert_eq!(a.total, b.total);
    assert_eq!(a.total.coeff(10), &rat(396887, 128));
    assert_eq!(a.get("y_mu").unwrap(), a.get("y_a").unwrap());
}

#[test]
fn nu3_symmetric_series() {
    let p = builtin("nu3").unwrap();
    let sym = build_symmetric_regular_system(&p).unwrap();
    let e = sym.solve(10).unwrap().total;
    let expected = [
        int(0), int(1), int(1), int(2), int(5), int(14), rat(167, 4), int(130), rat(26745, 64), rat(44045, 32), rat(36969, 8),
    ];
    assert_eq!(e.coeffs(), &expected);
    let c = build_stump_system_shuffle(&p).unwrap();
    assert_eq!(c.solve(10).unwrap().total, e);
}

#[test]
fn lieadm_series() {
    let p = builtin("lieadm").unwrap();
    let s = build_stump_system_shuffle(&p).unwrap();
    let e = s.solve(10).unwrap().total;
    assert_eq!(e.coeff(4), &rat(49, 12));
    assert_eq!(e.coeff(10), &rat(116679221, 60480));
}

#[test]
fn json_round_trip() {
    for name in ["asw", "alia", "nu3"] {
        let p = builtin(name).unwrap();
        let s = build_stump_system(&p).unwrap();
        let back = EqSystem::from_json(&s.to_json(), s.generators.clone()).unwrap();
        assert_eq!(back.solve(8).unwrap().total, s.solve(8).unwrap().total);
        assert_eq!(back.to_json(), s.to_json());
    }
}

#[test]
fn same_arity_cycle_is_rejected() {
    let v = serde_json::json!({
        "kind": "nonsym-product",
        "ground": 0,
        "variables": [{"name": "z"}, {"name": "y"}, {"name": "w"}],
        "equations": [
            {"target": 1, "terms": [{"factors": [0]}, {"factors": [2]}]},
            {"target": 2, "terms": [{"factors": [1]}]},
        ],
        "total": [1],
    });
    let s = EqSystem::from_json(&v, Vec::new()).unwrap();
    assert!(matches!(s.solve(4), Err(crate::Error::NotWellFounded(_))));
}

#[test]
fn weighted_solution_collapses() {
    let p = crate::presentation::parse_presentation(
        "operad nonsym\ngen m : 2\ngen c : 3 weight 2\nrel m(m(-,-),-)\nrel c(-,m(-,-),-)\n",
    )
    .unwrap();
    let s = build_stump_system(&p).unwrap();
    let w = s.solve_weighted(9).unwrap().total;
    assert_eq!(w.eval_t(&int(1)), s.solve(9).unwrap().total);
    let oracle = crate::enumerate::basis_dims_weighted(&p, 9).unwrap();
    assert_eq!(&w.coeffs()[1..], &oracle[..]);
    let ie = build_incl_excl_system_nonsym(&p).unwrap().solve_weighted(9).unwrap().total;
    assert_eq!(ie, w);
}

#[test]
fn ode_needs_c_system() {
    let s = build_stump_system(&builtin("assoc").unwrap()).unwrap();
    assert!(emit_system(&s, EmitFormat::Ode, false).is_err());
    let json = emit_system(&s, EmitFormat::Json, false).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["variables"].as_array().unwrap().len(), 2);
}
