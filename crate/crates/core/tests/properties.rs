mod common;

use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use operad_gf::analysis::{guess_algebraic, guess_rational, verify_equation, AlgebraicEquation, RationalFunction};
use operad_gf::enumerate::basis_dims;
use operad_gf::eqsys::{build_stump_system, build_symmetric_regular_system};
use operad_gf::presentation::{expand_tree_skeleton, parse_presentation, Presentation};
use operad_gf::series::{int, rat, Flavor, Series};
use operad_gf::tree::{
    canonical_realization, divides, is_valid_shuffle, left_divides, parse_monomial, shuffle_labelings, Kind,
    Skeleton, Tree,
};

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn small_series(order: usize, flavor: Flavor) -> impl Strategy<Value = Series> {
    prop::collection::vec(-4i64..=4, order).prop_map(move |v| {
        let mut c = vec![0];
        c.extend(v);
        Series::from_ints(&c, order, flavor)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn encode_parse_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens = common::random_generators(&mut r);
        let shape = common::random_shape(&mut r, &gens, 3);
        prop_assert_eq!(parse_monomial(&shape.encode(&gens), &gens).unwrap(), shape.clone());
        if shape.arity() <= 7 {
            for t in shuffle_labelings(&shape).into_iter().take(8) {
                prop_assert_eq!(parse_monomial(&t.encode(&gens), &gens).unwrap(), t);
            }
        }
    }

    #[test]
    fn shuffle_labelings_are_canonical(seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens = common::random_generators(&mut r);
        let shape = common::random_shape(&mut r, &gens, 2);
        prop_assume!(shape.arity() <= 7);
        let all = shuffle_labelings(&shape);
        prop_assert!(!all.is_empty());
        for t in &all {
            prop_assert!(is_valid_shuffle(t));
            prop_assert_eq!(&canonical_realization(t).unwrap(), t);
            prop_assert_eq!(&t.erase_labels(), &shape);
            prop_assert!(divides(t, t).unwrap() && left_divides(t, t).unwrap());
        }
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn truncation_left_divides(seed in any::<u64>(), level in 0isize..3) {
        let mut r = rng(seed);
        let gens = common::random_generators(&mut r);
        let t = common::random_shape(&mut r, &gens, 3);
        let s = t.truncate(level);
        prop_assert!(s.vertex_count() <= t.vertex_count());
        prop_assert!(left_divides(&s, &t).unwrap());
        prop_assert_eq!(s.truncate(level), s.clone());
        prop_assert_eq!(t.sorted_unordered().sorted_unordered(), t.sorted_unordered());
    }

    #[test]
    fn c_operator_identities(f in small_series(12, Flavor::Exponential), g in small_series(12, Flavor::Exponential)) {
        prop_assert_eq!(f.c_op(&g).unwrap().add(&g.c_op(&f).unwrap()).unwrap(), f.mul(&g).unwrap());
        let ff = Series::c_multi(&[f.clone(), f.clone()]).unwrap();
        prop_assert_eq!(ff, f.pow(2).scale(&rat(1, 2)));
        let lhs = f.c_op(&g).unwrap().derivative().truncate(11);
        prop_assert_eq!(lhs, f.derivative().mul(&g).unwrap().truncate(11));
    }

    #[test]
    fn reversion_inverts(f in small_series(12, Flavor::Ordinary), lead in prop::sample::select(vec![-2i64, -1, 1, 3])) {
        let mut f = f;
        f.set_coeff(1, int(lead));
        let g = f.reversion().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), Series::z(12, Flavor::Ordinary));
        prop_assert_eq!(g.compose(&f).unwrap(), Series::z(12, Flavor::Ordinary));
    }

    #[test]
    fn inverse_and_flavor_round_trip(f in small_series(12, Flavor::Ordinary)) {
        let one = Series::constant(BigRational::one(), 12, Flavor::Ordinary);
        let u = one.add(&f).unwrap();
        prop_assert_eq!(u.mul(&u.inverse().unwrap()).unwrap(), one);
        prop_assert_eq!(f.ord_to_exp().exp_to_ord(), f.clone());
        prop_assert_eq!(f.mul(&u).unwrap(), u.mul(&f).unwrap());
    }

    #[test]
    fn rational_guess_reexpands(
        num in prop::collection::vec(-3i64..=3, 1..4),
        den in prop::collection::vec(-3i64..=3, 0..3),
    ) {
        let mut d = vec![1];
        d.extend(den);
        let r = RationalFunction::from_ints(&num, &d).unwrap();
        let f = r.expand(16);
        let g = guess_rational(&f, 5).unwrap().expect("rational input");
        prop_assert_eq!(g.expand(16), f.clone());
        prop_assert_eq!(&g, &r);
        // as a degree-one algebraic equation: den * y - num
        let q = guess_algebraic(&f, 1, 3).unwrap().expect("linear equation");
        prop_assert!(verify_equation(&f, &q));
        let expected = AlgebraicEquation::from_coeffs(vec![
            r.numerator().iter().map(|c| -c).collect(),
            r.denominator().to_vec(),
        ]).unwrap();
        prop_assert_eq!(q, expected);
    }

    #[test]
    fn eventually_periodic_is_rational(
        pre in prop::collection::vec(0i64..=4, 0..4),
        period in prop::collection::vec(0i64..=4, 1..4),
    ) {
        let mut c = vec![0];
        c.extend(pre.iter().copied());
        while c.len() < 25 {
            c.extend(period.iter().copied());
        }
        c.truncate(25);
        let f = Series::from_ints(&c, 24, Flavor::Ordinary);
        let r = guess_rational(&f, 8).unwrap();
        prop_assert!(r.is_some());
        prop_assert_eq!(r.unwrap().expand(24), f);
    }

    #[test]
    fn more_relations_never_increase_dims(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = common::random_nonsym(&mut r);
        let extra = common::random_shape(&mut r, p.generators(), 2);
        let q = p.with_relation(extra).unwrap();
        let a = basis_dims(&p, 8).unwrap();
        let b = basis_dims(&q, 8).unwrap();
        prop_assert!(a.iter().zip(&b).all(|(x, y)| y <= x), "{:?} {:?}", a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_builder_matches_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens = common::random_generators(&mut r);
        let skeletons: Vec<Skeleton> = (0..2)
            .map(|_| loop {
                let shape = common::random_shape(&mut r, &gens, 2);
                if shape.arity() <= 5 {
                    break Skeleton::tree(&shape);
                }
            })
            .collect();
        let rels = skeletons.iter().flat_map(expand_tree_skeleton).collect();
        let p = Presentation::with_skeletons(Kind::Shuffle, gens, rels, skeletons).unwrap();
        prop_assert!(p.check_symmetric_regular());
        let oracle = basis_dims(&p, 6).unwrap();
        let sym = build_symmetric_regular_system(&p).unwrap().solve(6).unwrap().total;
        let c = build_stump_system(&p).unwrap().solve(6).unwrap().total;
        prop_assert_eq!(&sym, &c);
        prop_assert_eq!(sym.dims_u64().unwrap(), oracle);
    }
}

#[test]
fn identity_and_zero_cases() {
    let p = parse_presentation("operad nonsym\ngen m : 2\n").unwrap();
    assert_eq!(basis_dims(&p, 1).unwrap(), vec![1]);
    let f = Series::zero(6, Flavor::Ordinary);
    assert_eq!(guess_rational(&f, 2).unwrap().unwrap().expand(6), f);
    let z = Series::z(6, Flavor::Ordinary);
    assert_eq!(z.reversion().unwrap(), z);
    assert!(Tree::Hole.is_identity());
    assert!(Series::constant(BigRational::one(), 6, Flavor::Ordinary).reversion().is_err());
}
