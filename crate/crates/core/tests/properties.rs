use proptest::prelude::*;

use rankone_core::base::star_rule_sign;
use rankone_core::limit::{limit_fm_alg, limit_fm_closed, limit_fm_direct};
use rankone_core::oracle::{ExtClass, Oracle};
use rankone_core::{Atom, Bigrade, CycleB, CycleP, Expr, Monomial, Rational, Symbol};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q))
}

/// An admissible generator `name[i,j]` on a base of dimension `d`.
fn generator(d: usize) -> impl Strategy<Value = CycleB> {
    let d = d as i32;
    (0..3usize, 0..=d).prop_flat_map(move |(name, i)| {
        ((i - d).max(0)..=i).prop_map(move |j| CycleB::symbol(["x", "y", "z"][name], i, j, d as usize).unwrap())
    })
}

fn factor(d: usize) -> impl Strategy<Value = CycleB> {
    prop_oneof![
        4 => generator(d),
        1 => Just(CycleB::gamma(d)),
        1 => generator(d).prop_map(|x| x.fb()),
    ]
}

fn monomial(d: usize) -> impl Strategy<Value = CycleB> {
    prop::collection::vec(factor(d), 0..3).prop_map(move |fs| fs.iter().fold(CycleB::one(d), |acc, f| &acc * f))
}

fn class(d: usize) -> impl Strategy<Value = CycleB> {
    prop::collection::vec((rational(), monomial(d)), 0..4)
        .prop_map(move |ts| ts.iter().fold(CycleB::zero(d), |acc, (c, m)| &acc + &m.scale(c)))
}

fn linear(d: usize) -> impl Strategy<Value = CycleB> {
    prop::collection::vec((rational(), generator(d)), 0..4)
        .prop_map(move |ts| ts.iter().fold(CycleB::zero(d), |acc, (c, m)| &acc + &m.scale(c)))
}

fn dim_and<S: Strategy>(
    f: impl Fn(usize) -> S + Clone,
) -> impl Strategy<Value = (usize, S::Value, S::Value, S::Value)> {
    (0usize..4).prop_flat_map(move |d| (Just(d), f(d), f(d), f(d)))
}

proptest! {
    #[test]
    fn ring_axioms((_, x, y, z) in dim_and(class)) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn normal_form_is_canonical((d, x, _, _) in dim_and(class)) {
        let rebuilt = Expr::from_terms(d, x.terms().map(|(m, c)| (m.clone(), c.clone())));
        prop_assert_eq!(&rebuilt, &x);
        prop_assert_eq!(x.clone().normalize(), x.clone());
        prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn grades_add_and_truncate((d, x, y, _) in dim_and(monomial)) {
        let p = &x * &y;
        for (m, _) in p.terms() {
            let g = m.grade(d);
            prop_assert!(g.codim >= 0 && g.codim <= d as i32);
        }
        if let (Some(a), Some(b), Some(c)) = (x.grades().first(), y.grades().first(), p.grades().first()) {
            prop_assert_eq!(*a + *b, *c);
        }
    }

    #[test]
    fn weight_is_symbol_weight_plus_gamma_count((d, x, _, _) in dim_and(monomial)) {
        for (m, _) in x.terms() {
            let from_atoms: i32 = m
                .factors()
                .iter()
                .map(|(a, k)| match a {
                    Atom::Sym(s) => s.grade().weight * *k as i32,
                    Atom::Gamma => *k as i32,
                    other => other.grade(d).weight * *k as i32,
                })
                .sum();
            prop_assert_eq!(m.grade(d).weight, from_atoms);
        }
    }

    #[test]
    fn inversion_and_multiplication_maps((_, x, y, _) in dim_and(class), n in -3i64..=3, m in -3i64..=3) {
        prop_assert_eq!(x.inv().inv(), x.clone());
        prop_assert_eq!((&x * &y).inv(), &x.inv() * &y.inv());
        prop_assert_eq!(x.nstar(-1).unwrap(), x.inv());
        if n != 0 && m != 0 {
            prop_assert_eq!(x.nstar(n).unwrap().nstar(m).unwrap(), x.nstar(n * m).unwrap());
        }
        prop_assert_eq!((&x * &y).kill_gamma(), &x.kill_gamma() * &y.kill_gamma());
    }

    #[test]
    fn transform_squares_to_signed_inversion((d, x, _, _) in dim_and(linear)) {
        let sign = Rational::sign(d as i64);
        prop_assert_eq!(x.fb().fb(), x.inv().scale(&sign));
    }

    #[test]
    fn transform_is_linear((_, x, y, _) in dim_and(linear), c in rational()) {
        prop_assert_eq!((&x + &y.scale(&c)).fb(), &x.fb() + &y.fb().scale(&c));
    }

    #[test]
    fn limit_is_linear_and_routes_agree((d, z, w, v) in (0usize..3).prop_flat_map(|d| (Just(d), linear(d), linear(d), linear(d)))) {
        let g = d + 1;
        let l1 = limit_fm_closed(&z, &w, g);
        let l2 = limit_fm_closed(&v, &CycleB::zero(d), g);
        let sum = limit_fm_closed(&(&z + &v), &w, g);
        prop_assert_eq!(&sum.a, &(&l1.a + &l2.a));
        prop_assert_eq!(&sum.b, &(&l1.b + &l2.b));
        prop_assert!(limit_fm_direct(&z, &w, g).same_class(&l1));
        let alg = limit_fm_alg(&z, &w, g);
        prop_assert_eq!((alg.a, alg.b), (w.fb(), -z.fb()));
    }

    #[test]
    fn projective_bundle_is_associative((d, a, b, c) in dim_and(linear)) {
        let x = CycleP::new(a.clone(), b.clone()).unwrap();
        let y = CycleP::new(b, c.clone()).unwrap();
        let z = CycleP::new(c, a).unwrap();
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &CycleP::one(d), x.clone());
    }

    #[test]
    fn oracle_transform_squares(d in 0usize..3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let o = Oracle::new(d);
        let x = ExtClass::random(d, &mut rng);
        prop_assert_eq!(o.fourier(&o.fourier(&x)), x.inv().scale(&Rational::sign(d as i64)));
    }
}

#[test]
fn star_sign_agrees_with_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for d in 0..3 {
        let m = rankone_core::oracle::measure_intertwining(&Oracle::new(d), 6, &mut rng);
        assert_eq!(m.constant(), Some(&star_rule_sign(d)));
    }
    let c = Symbol::new("C", Bigrade::new(1, 0));
    let cc = CycleB::star(&c, &c, 1).unwrap();
    let f = CycleB::from_symbol(&c, 1).fb();
    assert_eq!(cc.fb(), (&f * &f).scale(&star_rule_sign(1)));
}
