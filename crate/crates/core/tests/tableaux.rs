use std::collections::BTreeSet;

use macdonald_interp::algebra::{rat, Ctx, Field, Poly};
use macdonald_interp::comb::{orbit, partitions_up_to};
use macdonald_interp::queues::{collect_queues, f_star_queue, EnumOptions, PairingOrder, QueueFamily};
use macdonald_interp::tableaux::{classical_hook, enumerate_tableaux, enumerate_tableaux_typed, CoinvRule, QueueTableau};

#[test]
fn count_for_02() {
    assert_eq!(enumerate_tableaux_typed(&[2, 0], &[0, 2]).len(), 15);
    assert_eq!(enumerate_tableaux(&[0, 0]).len(), 1);
}

#[test]
fn tab_is_a_weight_preserving_bijection() {
    let ctx = Ctx::specialized(rat(3, 4), rat(-2, 5));
    for n in 1..=3 {
        for lambda in partitions_up_to(4, n) {
            for mu in orbit(&lambda) {
                let tabs: BTreeSet<QueueTableau> = enumerate_tableaux_typed(&lambda, &mu).into_iter().collect();
                let queues = collect_queues(QueueFamily::Signed, &mu, EnumOptions::default());
                assert_eq!(tabs.len(), queues.len(), "count for {mu:?}");
                for q in &queues {
                    let t = QueueTableau::from_queue(q).unwrap();
                    t.validate().unwrap_or_else(|e| panic!("{t}: {e}"));
                    assert!(tabs.contains(&t), "{t} not enumerated");
                    assert_eq!(&t.to_queue(), q);
                    assert_eq!(t.type_comp(), mu);
                    let (c, exp) = t.monomial(&ctx);
                    let (qc, qexp) = q.weight(&ctx, PairingOrder::Strands);
                    assert_eq!(exp, qexp);
                    assert_eq!(c.mul(&t.weight(&ctx)), qc, "weight of {t}");
                }
            }
        }
    }
}

#[test]
fn tableau_sum_is_f_star() {
    let ctx = Ctx::specialized(rat(-5, 3), rat(2, 7));
    for n in 1..=3 {
        for lambda in partitions_up_to(4, n) {
            for mu in orbit(&lambda) {
                let mut sum = Poly::zero(n);
                for t in enumerate_tableaux_typed(&lambda, &mu) {
                    sum = &sum + &t.term(&ctx);
                }
                assert_eq!(sum, f_star_queue(&mu, &ctx), "{mu:?}");
            }
        }
    }
}

/// Restricting coinversions to positive top cells loses the skipped balls
/// of negative signed pairings, and the sum stops matching `F*`.
#[test]
fn positive_only_coinversions_break_the_sum() {
    let ctx = Ctx::specialized(rat(-5, 3), rat(2, 7));
    let mut mismatch = None;
    'outer: for lambda in partitions_up_to(3, 3) {
        for mu in orbit(&lambda) {
            let mut sum = Poly::zero(3);
            for t in enumerate_tableaux_typed(&lambda, &mu) {
                let (c, exp) = t.monomial(&ctx);
                sum.add_term(exp, c.mul(&t.weight_with(CoinvRule::PositiveOnly, &ctx)));
            }
            if sum != f_star_queue(&mu, &ctx) {
                mismatch = Some(mu);
                break 'outer;
            }
        }
    }
    assert!(mismatch.is_some());
}

#[test]
fn hook_is_constant_and_classical() {
    for n in 1..=3 {
        for lambda in partitions_up_to(4, n) {
            let expect = classical_hook(&lambda);
            for t in enumerate_tableaux(&lambda) {
                assert_eq!(t.hook(), expect, "{t}");
            }
        }
    }
}
