//! Property tests for the algebraic and combinatorial invariants.

use macdonald_interp::algebra::{rat, BigRat, Ctx, Field, Poly, QTPoly, RatQT};
use macdonald_interp::comb::{format_composition, k_stat, parse_composition, precedes, precedes_brute, sort_partition, tilde_point};
use macdonald_interp::hecke::{hecke_t, HeckeRelation};
use proptest::prelude::*;

fn qt_poly() -> impl Strategy<Value = QTPoly> {
    prop::collection::vec(((0..4i32, 0..4i32), -4..=4i64), 1..4)
        .prop_map(|terms| QTPoly::from_terms(terms.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

fn rat_qt() -> impl Strategy<Value = RatQT> {
    (qt_poly(), qt_poly()).prop_filter_map("nonzero denominator", |(n, d)| RatQT::new(n, d).ok())
}

fn sparse_poly(n: usize) -> impl Strategy<Value = Poly<RatQT>> {
    prop::collection::vec((prop::collection::vec(0..3i32, n), -3..=3i64, 0..2i32, 0..2i32), 1..4).prop_map(move |terms| {
        let mut p = Poly::zero(n);
        for (exp, c, a, b) in terms {
            p.add_term(exp, RatQT::monomial(rat(c, 1), a, b));
        }
        p
    })
}

fn composition(n: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(0..4i32, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_operations_invert(a in rat_qt(), b in rat_qt()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn common_factors_cancel(a in qt_poly(), b in qt_poly(), c in qt_poly()) {
        if b.is_zero() || c.is_zero() {
            return Ok(());
        }
        let reduced = RatQT::new(a.clone(), b.clone()).unwrap();
        let scaled = RatQT::new(a.mul(&c), b.mul(&c)).unwrap();
        prop_assert_eq!(scaled.numer(), reduced.numer());
        prop_assert_eq!(scaled.denom(), reduced.denom());
    }

    #[test]
    fn distributivity(a in rat_qt(), b in rat_qt(), c in rat_qt()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn specialization_is_a_homomorphism(a in rat_qt(), b in rat_qt()) {
        let (q0, t0) = (rat(7, 3), rat(-5, 2));
        let (Ok(x), Ok(y)) = (a.eval(&q0, &t0), b.eval(&q0, &t0)) else { return Ok(()) };
        prop_assert_eq!(a.add(&b).eval(&q0, &t0).unwrap(), &x + &y);
        prop_assert_eq!(a.mul(&b).eval(&q0, &t0).unwrap(), &x * &y);
    }

    #[test]
    fn hecke_relations_hold(a in sparse_poly(4)) {
        let ctx = Ctx::symbolic();
        for i in 1..4 {
            for rel in HeckeRelation::ALL {
                for j in rel.partners(4, i) {
                    prop_assert!(rel.holds(&a, i, j, &ctx).unwrap(), "{} i={} j={}", rel.name(), i, j);
                }
            }
        }
    }

    #[test]
    fn hecke_commutes_with_specialization(a in sparse_poly(3), i in 1usize..3) {
        let (q0, t0) = (rat(2, 5), rat(3, 4));
        let sym = hecke_t(&a, i, &Ctx::symbolic()).unwrap().specialize(&q0, &t0).unwrap();
        let num = hecke_t(&a.specialize(&q0, &t0).unwrap(), i, &Ctx::<BigRat>::specialized(q0, t0)).unwrap();
        prop_assert_eq!(sym, num);
    }

    #[test]
    fn polynomial_evaluation_is_multiplicative(a in sparse_poly(2), b in sparse_poly(2)) {
        let ctx = Ctx::symbolic();
        let point = tilde_point(&[1, 0], &ctx);
        let prod = a.checked_mul(&b).unwrap().evaluate(&point).unwrap();
        prop_assert_eq!(prod, a.evaluate(&point).unwrap().mul(&b.evaluate(&point).unwrap()));
    }

    #[test]
    fn composition_text_round_trips(mu in prop::collection::vec(-6..7i32, 1..6)) {
        prop_assert_eq!(parse_composition(&format_composition(&mu)).unwrap(), mu);
    }

    #[test]
    fn precedes_matches_brute_force(mu in composition(4), nu in composition(4)) {
        prop_assert_eq!(precedes(&mu, &nu), precedes_brute(&mu, &nu));
    }

    #[test]
    fn precedes_is_reflexive(mu in composition(4)) {
        prop_assert!(precedes(&mu, &mu));
    }

    #[test]
    fn k_stat_is_a_permutation_of_positions(mu in composition(5)) {
        let mut k = k_stat(&mu);
        k.sort_unstable();
        prop_assert_eq!(k, (0..5).collect::<Vec<i32>>());
    }

    #[test]
    fn sorting_gives_a_partition(mu in composition(5)) {
        let lambda = sort_partition(&mu);
        prop_assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
    }
}
