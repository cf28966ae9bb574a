use operad_gf::enumerate::basis_dims;
use operad_gf::eqsys::{
    build_incl_excl_system_nonsym, build_stump_system, build_symmetric_regular_system, EqSystem,
};
use operad_gf::presentation::{builtin, Presentation};
use operad_gf::tree::Kind;

fn system_dims(s: &EqSystem, n: usize) -> Vec<u64> {
    s.solve(n).unwrap().total.dims_u64().unwrap()
}

fn crosscheck(p: &Presentation) {
    let n = match p.kind() {
        Kind::Nonsym => 12,
        Kind::Shuffle => 7,
    };
    let oracle = basis_dims(p, n).unwrap();
    assert_eq!(system_dims(&build_stump_system(p).unwrap(), n), oracle);
    match p.kind() {
        Kind::Nonsym => assert_eq!(system_dims(&build_incl_excl_system_nonsym(p).unwrap(), n), oracle),
        Kind::Shuffle if p.check_symmetric_regular() => {
            assert_eq!(system_dims(&build_symmetric_regular_system(p).unwrap(), n), oracle)
        }
        Kind::Shuffle => assert!(build_symmetric_regular_system(p).is_err()),
    }
}

#[test]
fn nonsym_builtins() {
    for name in ["assoc", "asw", "free_binary", "q_k:3", "q_k:4"] {
        crosscheck(&builtin(name).unwrap());
    }
}

#[test]
fn shuffle_builtins() {
    for name in ["alia", "nu2", "lieadm", "free_shuffle_binary"] {
        crosscheck(&builtin(name).unwrap());
    }
}

#[test]
fn nu3_builtin() {
    crosscheck(&builtin("nu3").unwrap());
}
