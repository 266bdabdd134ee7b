//! Queue and tableau suites: golden objects, counts, the two-line
//! recursion, pairing orders and the tableau formula.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::{at_point, comp, err, expect, first_failure};
use crate::algebra::{Ctx, Field, Poly, RatQT};
use crate::comb::{compositions_up_to, is_packed, orbit, partitions_up_to, signed_orbit, swap};
use crate::interp::Interpolator;
use crate::queues::twoline::{g_coeffs, g_recursion_rule};
use crate::queues::{collect_queues, count_queues, f_star_queue, f_star_queue_ordered, EnumOptions, PairingOrder, QueueFamily};
use crate::tableaux::{enumerate_tableaux_typed, QueueTableau};
use crate::verify::fixtures::{golden_f_star_02, golden_queue, golden_queue_weight, golden_tableau};
use crate::verify::{Instance, Mode, VerifyConfig};

fn sym() -> Ctx<RatQT> {
    Ctx::symbolic()
}

fn tableau_sum<F: Field>(lambda: &[i32], mu: &[i32], ctx: &Ctx<F>) -> Poly<F> {
    enumerate_tableaux_typed(lambda, mu).iter().fold(Poly::zero(mu.len()), |acc, t| acc + t.term(ctx))
}

pub(crate) fn golden(_cfg: &VerifyConfig) -> Vec<Instance> {
    let against = |p: Poly<RatQT>| expect(p == golden_f_star_02(), || p.to_string());
    vec![
        Instance::new("F*(0,2) from signed queues", Mode::Symbolic, move || against(f_star_queue(&[0, 2], &sym()))),
        Instance::new("sum over tableaux of shape 2,0 and type 0,2", Mode::Symbolic, move || {
            against(tableau_sum(&[2, 0], &[0, 2], &sym()))
        }),
        Instance::new("T_1 E*(2,0) with E* solved", Mode::Symbolic, move || {
            against(Interpolator::new(2, sym()).f_star(&[0, 2]).map_err(err)?)
        }),
        Instance::new("T_1 E*(2,0) with E* from the packed recursion", Mode::Symbolic, move || {
            against(Interpolator::recursive(2, sym()).f_star_word(&[0, 2]).map_err(err)?)
        }),
    ]
}

pub(crate) fn counts(_cfg: &VerifyConfig) -> Vec<Instance> {
    let count = |got: usize, want: usize| expect(got == want, || format!("count {got}, expected {want}"));
    vec![
        Instance::new("signed queues of type 0,2", Mode::Symbolic, move || {
            count(count_queues(QueueFamily::Signed, &[0, 2], EnumOptions::default()), 15)
        }),
        Instance::new("tableaux of shape 2,0 and type 0,2", Mode::Symbolic, move || {
            count(enumerate_tableaux_typed(&[2, 0], &[0, 2]).len(), 15)
        }),
        Instance::new("signed queues of type 0,0", Mode::Symbolic, move || {
            let qs = collect_queues(QueueFamily::Signed, &[0, 0], EnumOptions::default());
            first_failure([
                count(qs.len(), 1),
                expect(qs.iter().all(|q| q.weight_poly(&sym(), PairingOrder::Columns) == Poly::one(2)), || "weight is not 1".into()),
            ])
        }),
    ]
}

pub(crate) fn weight_golden(_cfg: &VerifyConfig) -> Vec<Instance> {
    vec![
        Instance::new("queue of type 2,2,0,0,0,2,3,1 is valid", Mode::Symbolic, || {
            golden_queue().validate().map(|_| None).or_else(|e| Ok(Some(e.to_string())))
        }),
        Instance::new("queue weight", Mode::Symbolic, || {
            let ctx = sym();
            let q = golden_queue();
            let want = golden_queue_weight();
            let cols = q.weight(&ctx, PairingOrder::Columns);
            let strands = q.weight(&ctx, PairingOrder::Strands);
            expect(cols == want && strands == want, || format!("{} x^{:?}", cols.0, cols.1))
        }),
        Instance::new("tableau image", Mode::Symbolic, || {
            let q = golden_queue();
            let t = QueueTableau::from_queue(&q).map_err(err)?;
            let want = golden_tableau();
            first_failure([
                expect(t == want, || t.to_string()),
                t.validate().map(|_| None).or_else(|e| Ok(Some(e.to_string()))),
                expect(t.to_queue() == q, || "tableau does not map back to the queue".into()),
            ])
        }),
        Instance::new("tableau weight", Mode::Symbolic, || {
            let ctx = sym();
            let t = golden_tableau();
            let (c, exp) = t.monomial(&ctx);
            let got = (c.mul(&t.weight(&ctx)), exp);
            expect(got == golden_queue_weight(), || format!("{} x^{:?}", got.0, got.1))
        }),
    ]
}

/// Compositions `mu` of length `n <= max_n` with parts at most `labels`.
fn bounded_compositions(n: usize, labels: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i32>| {
                (0..=labels).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

pub(crate) fn twoline_recursion(cfg: &VerifyConfig) -> Vec<Instance> {
    let max_n = cfg.n(4);
    // `--max-size` bounds the largest label here
    let labels = cfg.size(3);
    let mut out = Vec::new();
    for n in 1..=max_n {
        for mu in bounded_compositions(n, labels) {
            if is_packed(&mu) {
                let m = mu.clone();
                out.push(Instance::new(format!("packed mu={}", comp(&mu)), Mode::Symbolic, move || {
                    let g: BTreeMap<Vec<i32>, RatQT> = g_coeffs(&m, &sym()).into_iter().collect();
                    let ok = signed_orbit(&m).iter().all(|alpha| {
                        let want = alpha.iter().map(|a| a.abs()).eq(m.iter().copied());
                        g.get(alpha).map_or(!want, |v| want && v.is_one())
                    });
                    expect(ok, || format!("{g:?}"))
                }));
            }
            for i in 1..n {
                if mu[i - 1] == 0 || mu[i] != 0 {
                    continue;
                }
                let m = mu.clone();
                out.push(Instance::new(format!("mu={} i={i}", comp(&mu)), Mode::Symbolic, move || {
                    let ctx = sym();
                    let below: BTreeMap<Vec<i32>, RatQT> = g_coeffs(&m, &ctx).into_iter().collect();
                    let above: BTreeMap<Vec<i32>, RatQT> = g_coeffs(&swap(&m, i), &ctx).into_iter().collect();
                    for alpha in signed_orbit(&m) {
                        let rhs = g_recursion_rule(&alpha, i, &ctx)
                            .iter()
                            .fold(RatQT::zero(), |acc, (beta, c)| acc.add(&c.mul(below.get(beta).unwrap_or(&RatQT::zero()))));
                        let lhs = above.get(&alpha).cloned().unwrap_or_else(RatQT::zero);
                        if lhs != rhs {
                            return Ok(Some(format!("alpha={}: enumerated {lhs}, recursion {rhs}", comp(&alpha))));
                        }
                    }
                    Ok(None)
                }));
            }
        }
    }
    out
}

pub(crate) fn pairing_order(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=cfg.n(3) {
        for mu in compositions_up_to(cfg.size(4), n) {
            out.push(Instance::new(format!("mu={}", comp(&mu)), Mode::Symbolic, move || {
                let ctx = sym();
                let a = f_star_queue_ordered(&mu, &ctx, PairingOrder::Columns);
                let b = f_star_queue_ordered(&mu, &ctx, PairingOrder::Strands);
                expect(a == b, || format!("columns {a}; strands {b}"))
            }));
        }
    }
    out
}

/// `Tab` is a weight-preserving bijection onto the attack-free fillings.
fn tab_bijection<F: Field>(lambda: &[i32], mu: &[i32], ctx: &Ctx<F>) -> Option<String> {
    let tabs: BTreeSet<QueueTableau> = enumerate_tableaux_typed(lambda, mu).into_iter().collect();
    let queues = collect_queues(QueueFamily::Signed, mu, EnumOptions::default());
    if tabs.len() != queues.len() {
        return Some(format!("{} tableaux, {} queues", tabs.len(), queues.len()));
    }
    let mut images = BTreeSet::new();
    for q in &queues {
        let t = match QueueTableau::from_queue(q) {
            Ok(t) => t,
            Err(e) => return Some(e.to_string()),
        };
        if let Err(e) = t.validate() {
            return Some(format!("{t}: {e}"));
        }
        if !tabs.contains(&t) || t.to_queue() != *q {
            return Some(format!("{t} is not the image of a unique queue"));
        }
        let (c, exp) = t.monomial(ctx);
        if (c.mul(&t.weight(ctx)), exp) != q.weight(ctx, PairingOrder::Strands) {
            return Some(format!("weight of {t}"));
        }
        images.insert(t);
    }
    (images.len() != tabs.len()).then(|| "Tab is not injective".to_string())
}

pub(crate) fn tableaux(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    let points = cfg.sample_points();
    for n in 1..=cfg.n(3) {
        let rec = Arc::new(Interpolator::recursive(n, sym()));
        for lambda in partitions_up_to(cfg.size(4), n) {
            for mu in orbit(&lambda) {
                if cfg.wants(Mode::Symbolic) {
                    let (l, m, rec) = (lambda.clone(), mu.clone(), rec.clone());
                    out.push(Instance::new(format!("mu={}", comp(&mu)), Mode::Symbolic, move || {
                        let ctx = sym();
                        let sum = tableau_sum(&l, &m, &ctx);
                        let f = rec.f_star(&m).map_err(err)?;
                        first_failure([
                            expect(tab_bijection(&l, &m, &ctx).is_none(), || tab_bijection(&l, &m, &ctx).unwrap_or_default()),
                            expect(sum == f_star_queue(&m, &ctx), || format!("tableaux {sum}")),
                            expect(sum == f, || format!("tableaux {sum}; f* {f}")),
                        ])
                    }));
                }
                if cfg.wants(Mode::Specialized) {
                    for ctx in &points {
                        let (l, m, c) = (lambda.clone(), mu.clone(), ctx.clone());
                        out.push(Instance::new(format!("mu={} {}", comp(&mu), at_point(ctx)), Mode::Specialized, move || {
                            let sum = tableau_sum(&l, &m, &c);
                            expect(sum == f_star_queue(&m, &c), || format!("tableaux {sum}"))
                        }));
                    }
                }
            }
        }
    }
    out
}
