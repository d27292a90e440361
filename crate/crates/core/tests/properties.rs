//! Randomized properties of the exact-arithmetic layers.

mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use splitq::fpoly::reduce;
use splitq::zfactor::factor_q;
use splitq::zpoly::{
    bezout_bound, gcd_q, resultant, resultant_linear_sub, resultant_linear_sub_sylvester, sylvester_resultant,
};
use splitq::{IntPoly, RatPoly, RatScalar};

use common::*;

fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| poly(&c))
}

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    int_poly(max_deg, bound).prop_filter("nonconstant", |f| !f.is_constant())
}

fn primitive(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    int_poly(max_deg, bound).prop_filter("primitive", |f| !f.is_zero() && f.content().unwrap().is_one())
}

fn rat_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((-20i64..=20, 1i64..=12), 1..=5).prop_map(|c| {
        RatPoly::new(c.into_iter().map(|(n, d)| RatScalar::new(n.into(), d.into())).collect())
    })
}

const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 101, 257, 499, 701, 907, 997];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gauss_lemma(a in primitive(8, 50), b in primitive(8, 50)) {
        prop_assert!((&a * &b).content().unwrap().is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn content_times_primitive_part(s in int_poly(8, 200).prop_filter("nonzero", |f| !f.is_zero())) {
        let l = s.content().unwrap();
        let t = s.primitive_part().unwrap();
        prop_assert!(t.content().unwrap().is_one());
        prop_assert!(t.lc().is_positive());
        let signed = if s.lc().is_negative() { -l } else { l };
        prop_assert_eq!(t.scale(&signed), s);
    }

    #[test]
    fn clearing_powers(f in rat_poly().prop_filter("nonzero", |f| !f.is_zero()), s in 1u32..4) {
        let mut fs = RatPoly::constant(RatScalar::one());
        for _ in 0..s {
            fs = fs.mul(&f);
        }
        let lhs = f.clear_denominators().primitive_part().unwrap().pow(s);
        let rhs = fs.clear_denominators().primitive_part().unwrap();
        prop_assert_eq!(lhs.normalize_sign(), rhs.normalize_sign());
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in int_poly(5, 9),
        b in int_poly(5, 9),
        common in int_poly(2, 5),
        engineer in any::<bool>(),
    ) {
        let (a, b) = if engineer && !common.is_constant() { (&a * &common, &b * &common) } else { (a, b) };
        prop_assume!(!a.is_zero() && !b.is_zero());
        let r = resultant(&a, &b);
        prop_assert_eq!(r.is_zero(), !gcd_q(&a, &b).is_constant());
        prop_assert_eq!(r, sylvester_resultant(&a, &b));
    }

    #[test]
    fn factorization_round_trip(f in int_poly(8, 20).prop_filter("nonzero", |f| !f.is_zero())) {
        let fac = factor_q(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
        for (g, m) in &fac.factors {
            prop_assert!(*m >= 1);
            prop_assert!(g.lc().is_positive());
            prop_assert!(g.content().unwrap().is_one());
        }
    }

    #[test]
    fn reduction_is_a_ring_map(a in int_poly(6, 1000), b in int_poly(6, 1000), i in 0usize..PRIMES.len()) {
        let p = PRIMES[i];
        prop_assume!(!(&a * &b).is_zero());
        let lhs = reduce(&(&a * &b), p).unwrap();
        let rhs = reduce(&a, p).unwrap().mul(&reduce(&b, p).unwrap());
        prop_assert_eq!(lhs.coeffs(), rhs.coeffs());
        let sum = reduce(&(&a + &b), p).unwrap();
        let sum2 = reduce(&a, p).unwrap().add(&reduce(&b, p).unwrap());
        prop_assert_eq!(sum.coeffs(), sum2.coeffs());
    }

    #[test]
    fn finite_field_predicates_match_brute_force(f in nonconstant(6, 50), i in 0usize..PRIMES.len()) {
        let p = PRIMES[i];
        let m = reduce(&f, p).unwrap();
        prop_assume!(m.degree().unwrap_or(0) >= 1);
        let brute = brute_roots(&f, p);
        prop_assert_eq!(m.roots_with_multiplicity().unwrap(), brute.clone());
        prop_assert_eq!(m.count_distinct_roots().unwrap(), brute.len());
        prop_assert_eq!(m.has_root().unwrap(), !brute.is_empty());
        prop_assert_eq!(m.splits_completely().unwrap(), brute_splits(&f, p));
    }

    #[test]
    fn scale_roots_composes(g in nonconstant(6, 30), t1 in -6i64..=6, t2 in -6i64..=6) {
        prop_assume!(t1 != 0 && t2 != 0);
        let (a, b) = (BigInt::from(t1), BigInt::from(t2));
        let twice = g.scale_roots(&a).unwrap().scale_roots(&b).unwrap();
        let once = g.scale_roots(&(&a * &b)).unwrap();
        prop_assert_eq!(twice.normalize_sign(), once.normalize_sign());
    }

    #[test]
    fn scaling_preserves_splitting(g in nonconstant(4, 20), t in prop::sample::select(vec![2i64, 3, 5, -2]), i in 4usize..PRIMES.len()) {
        let p = PRIMES[i];
        prop_assume!(!(g.lc() % BigInt::from(p)).is_zero());
        let scaled = g.scale_roots(&BigInt::from(t)).unwrap();
        prop_assert_eq!(brute_splits(&g, p), brute_splits(&scaled, p));
        prop_assert_eq!(
            reduce(&g, p).unwrap().splits_completely().unwrap(),
            reduce(&scaled, p).unwrap().splits_completely().unwrap()
        );
    }

    #[test]
    fn linear_substitution_routes_agree(m in nonconstant(3, 6), g in nonconstant(3, 6), c in -4i64..=4) {
        let c = BigInt::from(c);
        let a = resultant_linear_sub(&m, &g, &c).unwrap();
        let b = resultant_linear_sub_sylvester(&m, &g, &c).unwrap();
        prop_assert_eq!(&a, &b);
        if !c.is_zero() {
            prop_assert_eq!(a.degree(), Some(m.degree().unwrap() * g.degree().unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn bezout_bound_divides_every_gcd(r in nonconstant(4, 9), s in nonconstant(4, 9)) {
        prop_assume!(gcd_q(&r, &s).is_constant());
        let cert = bezout_bound(&r, &s).unwrap();
        prop_assert!(cert.lambda.is_positive());
        prop_assert_eq!(&(&r * &cert.a1) + &(&s * &cert.b1), IntPoly::constant(cert.lambda.clone()));
        for t in -1000i64..=1000 {
            let g = r.eval_i64(t).gcd(&s.eval_i64(t));
            prop_assert!(!g.is_zero() && (&cert.lambda % &g).is_zero());
        }
    }
}

#[test]
fn bezout_bound_rejects_common_roots() {
    let r = poly(&[-1, 0, 1]);
    let s = poly(&[-1, 1]);
    assert_eq!(bezout_bound(&r, &s).unwrap_err(), splitq::Error::CommonRoot);
}
