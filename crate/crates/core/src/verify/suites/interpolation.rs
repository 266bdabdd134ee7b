//! Interpolation suites: the main theorem, the characterization, the
//! packed recursion, integrality and the factorization at `q = 1`.

use std::sync::Arc;

use super::{at_point, comp, err, expect, first_failure};
use crate::algebra::{fmt_rat, rat, BigRat, Ctx, Field, Poly, RatQT};
use crate::comb::{compositions_up_to, is_packed, orbit, partitions_up_to, precedes, size, sort_partition, tilde_point, truncate_below};
use crate::interp::{
    e_star_k, extra_vanishing_check, factorization_q1_check, one_row_product, packed_divisibility, packed_recursion_rhs,
    sum_a_q1, support_sum_check, verify_characterization, Interpolator,
};
use crate::queues::f_star_queue;
use crate::tableaux::{enumerate_tableaux, hook_product};
use crate::verify::{Instance, Mode, VerifyConfig};

fn sym() -> Ctx<RatQT> {
    Ctx::symbolic()
}

pub(crate) fn main_theorem(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    if cfg.wants(Mode::Specialized) {
        for ctx in cfg.sample_points() {
            for n in 1..=cfg.n(3) {
                let interp = Arc::new(Interpolator::new(n, ctx.clone()));
                for lambda in partitions_up_to(cfg.size(4), n) {
                    for mu in orbit(&lambda) {
                        let it = interp.clone();
                        out.push(Instance::new(format!("mu={} {}", comp(&mu), at_point(&ctx)), Mode::Specialized, move || {
                            let f = it.f_star(&mu).map_err(err)?;
                            let queues = f_star_queue(&mu, it.ctx());
                            expect(f == queues, || format!("F* {queues}; f* {f}"))
                        }));
                    }
                }
            }
        }
    }
    if cfg.wants(Mode::Symbolic) {
        for n in 1..=cfg.n(3).min(2) {
            let interp = Arc::new(Interpolator::new(n, sym()));
            for lambda in partitions_up_to(cfg.size(4).min(3), n) {
                for mu in orbit(&lambda) {
                    let it = interp.clone();
                    out.push(Instance::new(format!("mu={}", comp(&mu)), Mode::Symbolic, move || {
                        let f = it.f_star(&mu).map_err(err)?;
                        let queues = f_star_queue(&mu, it.ctx());
                        expect(f == queues, || format!("F* {queues}; f* {f}"))
                    }));
                }
            }
        }
    }
    out
}

/// `g` has degree `|mu|`, `[x^mu] g = 1` and `g(nu~) = 0` for every other
/// `nu` with `|nu| <= |mu|`: the defining conditions of `E*_mu`.
fn is_e_star<F: Field>(g: &Poly<F>, mu: &[i32], ctx: &Ctx<F>) -> Result<bool, String> {
    if g.degree() != Some(size(mu)) || !g.coeff(mu).is_one() {
        return Ok(false);
    }
    for nu in compositions_up_to(size(mu), mu.len()) {
        if nu != mu && !g.evaluate(&tilde_point(&nu, ctx)).map_err(err)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn characterization(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    if cfg.wants(Mode::Symbolic) {
        for n in 1..=cfg.n(3) {
            // the recursive route never imposes the vanishing conditions
            let interp = Arc::new(Interpolator::recursive(n, sym()));
            for mu in compositions_up_to(cfg.size(4), n) {
                let it = interp.clone();
                out.push(Instance::new(format!("f* mu={}", comp(&mu)), Mode::Symbolic, move || {
                    let f = it.f_star(&mu).map_err(err)?;
                    let e = it.e_star(&mu).map_err(err)?;
                    first_failure([
                        expect(verify_characterization(&f, &mu, it.ctx()).map_err(err)?, || format!("f* = {f}")),
                        expect(is_e_star(&e, &mu, it.ctx())?, || format!("E* = {e}")),
                    ])
                }));
            }
        }
    }
    if cfg.wants(Mode::Specialized) {
        let ctx = cfg.sample_points().into_iter().next().expect("at least one point");
        for n in 1..=cfg.n(3) {
            let interp = Arc::new(Interpolator::recursive(n, ctx.clone()));
            for mu in compositions_up_to(cfg.size(4).min(3), n) {
                let it = interp.clone();
                out.push(Instance::new(format!("extra vanishing mu={} {}", comp(&mu), at_point(&ctx)), Mode::Specialized, move || {
                    for nu in compositions_up_to(size(&mu) + 2, mu.len()) {
                        if !extra_vanishing_check(&it, &mu, &nu).map_err(err)? {
                            return Ok(Some(format!("E*_mu does not vanish at nu={}", comp(&nu))));
                        }
                    }
                    Ok(None)
                }));
            }
        }
        let c = ctx.clone();
        out.push(Instance::new(format!("extra vanishing mu=3,3,2,0 nu=5,4,0,3 {}", at_point(&ctx)), Mode::Specialized, move || {
            let (mu, tau) = ([3, 3, 2, 0], [5, 4, 0, 3]);
            let it = Interpolator::recursive(4, c);
            let e = it.e_star(&mu).map_err(err)?;
            first_failure([
                expect(precedes(&mu, &[5, 4, 1, 2]) && !precedes(&mu, &tau), || "precedence order".into()),
                expect(is_e_star(&e, &mu, it.ctx())?, || "not E*".into()),
                expect(extra_vanishing_check(&it, &mu, &tau).map_err(err)?, || "E*_mu(tau~) is nonzero".into()),
            ])
        }));
    }
    out
}

pub(crate) fn packed_recursion(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    let check = |it: &Interpolator<_>, mu: &[i32]| -> Result<Option<String>, String> {
        let f = it.f_star(mu).map_err(err)?;
        let rhs = packed_recursion_rhs(it, mu).map_err(err)?;
        first_failure([
            expect(f == rhs, || format!("recursion gives {rhs}")),
            expect(packed_divisibility(it, mu).map_err(err)?, || "not divisible".into()),
        ])
    };
    if cfg.wants(Mode::Specialized) {
        for ctx in cfg.sample_points() {
            for n in 1..=cfg.n(3) {
                let interp = Arc::new(Interpolator::new(n, ctx.clone()));
                for mu in compositions_up_to(cfg.size(4), n).into_iter().filter(|m| is_packed(m)) {
                    let it = interp.clone();
                    out.push(Instance::new(format!("mu={} {}", comp(&mu), at_point(&ctx)), Mode::Specialized, move || check(&it, &mu)));
                }
            }
        }
    }
    if cfg.wants(Mode::Symbolic) {
        for n in 1..=cfg.n(3) {
            let max = if n <= 2 { cfg.size(4) } else { cfg.size(4).min(3) };
            let interp = Arc::new(Interpolator::new(n, sym()));
            for mu in compositions_up_to(max, n).into_iter().filter(|m| is_packed(m)) {
                let it = interp.clone();
                out.push(Instance::new(format!("mu={}", comp(&mu)), Mode::Symbolic, move || {
                    let f = it.f_star(&mu).map_err(err)?;
                    let rhs = packed_recursion_rhs(&it, &mu).map_err(err)?;
                    first_failure([
                        expect(f == rhs, || format!("recursion gives {rhs}")),
                        expect(packed_divisibility(&it, &mu).map_err(err)?, || "not divisible".into()),
                    ])
                }));
            }
        }
    }
    out
}

/// `t^shift c` lies in `Z[q, t]`.
fn t_cleared_integral(c: &RatQT, shift: i32) -> bool {
    c.mul(&RatQT::monomial(rat(1, 1), 0, shift)).is_integral_polynomial()
}

pub(crate) fn integrality(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    if !cfg.wants(Mode::Symbolic) {
        return out;
    }
    for n in 1..=cfg.n(3) {
        let interp = Arc::new(Interpolator::recursive(n, sym()));
        for lambda in partitions_up_to(cfg.size(4), n) {
            let l = lambda.clone();
            out.push(Instance::new(format!("hook lambda={}", comp(&lambda)), Mode::Symbolic, move || {
                let want = hook_product(&l);
                let classical = crate::tableaux::classical_hook(&l);
                match enumerate_tableaux(&l).into_iter().find(|t| t.hook() != want) {
                    Some(t) => Ok(Some(format!("{t} has hook {}", t.hook()))),
                    None => expect(want == classical, || format!("hook {want}, classical {classical}")),
                }
            }));
            let (l, it) = (lambda.clone(), interp.clone());
            out.push(Instance::new(format!("J* lambda={}", comp(&lambda)), Mode::Symbolic, move || {
                let ctx = it.ctx().clone();
                let hook = ctx.embed(&hook_product(&l));
                let j = it.p_star(&l).map_err(err)?.scale(&hook);
                let tableaux = enumerate_tableaux(&l).iter().fold(Poly::zero(l.len()), |acc, t| {
                    let (c, exp) = t.monomial(&ctx);
                    acc + Poly::monomial(l.len(), exp, c.mul(&t.integral_weight(&ctx)))
                });
                let n1 = l.len() as i32 - 1;
                let bad = j
                    .terms()
                    .filter(|(e, _)| crate::comb::is_partition(e))
                    .find(|(e, c)| !t_cleared_integral(c, n1 * (size(&l) - size(e))));
                first_failure([
                    expect(bad.is_none(), || {
                        let (e, c) = bad.expect("checked");
                        format!("m_{} coefficient {c}", comp(e))
                    }),
                    expect(j == tableaux, || format!("integral tableau sum {tableaux}")),
                ])
            }));
            for mu in orbit(&lambda) {
                let (l, it) = (lambda.clone(), interp.clone());
                out.push(Instance::new(format!("hook f* mu={}", comp(&mu)), Mode::Symbolic, move || {
                    let hook = it.ctx().embed(&hook_product(&l));
                    let g = it.f_star(&mu).map_err(err)?.scale(&hook);
                    let n1 = mu.len() as i32 - 1;
                    let bad = g.terms().find(|(e, c)| !t_cleared_integral(c, n1 * (size(&mu) - size(e))));
                    expect(bad.is_none(), || {
                        let (e, c) = bad.expect("checked");
                        format!("x^{} coefficient {c}", comp(e))
                    })
                }));
            }
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

pub(crate) fn factorization_q1(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    if cfg.wants(Mode::Symbolic) {
        for n in 1..=cfg.n(4) {
            let interp = Arc::new(Interpolator::recursive(n, sym()));
            for k in 0..=n {
                for set in subsets(n, k) {
                    let it = interp.clone();
                    let mu: Vec<i32> = (1..=n).map(|i| i32::from(set.contains(&i))).collect();
                    out.push(Instance::new(format!("one row mu={}", comp(&mu)), Mode::Symbolic, move || {
                        let f = it.f_star(&mu).map_err(err)?;
                        expect(f == one_row_product(&set, mu.len(), it.ctx()), || format!("f* = {f}"))
                    }));
                }
                let it = interp.clone();
                out.push(Instance::new(format!("column n={n} k={k}"), Mode::Symbolic, move || {
                    let lambda: Vec<i32> = (0..n).map(|i| i32::from(i < k)).collect();
                    let p = it.p_star(&lambda).map_err(err)?;
                    expect(p == e_star_k(k, n, it.ctx()), || format!("P* = {p}"))
                }));
            }
        }
    }
    if cfg.wants(Mode::Specialized) {
        let mut sampler = cfg.sampler(2);
        let t_values: Vec<BigRat> = (0..cfg.points).map(|_| sampler.next_value()).collect();
        for t0 in t_values {
            for n in 1..=cfg.n(3).min(3) {
                let interp = Arc::new(Interpolator::recursive(n, Ctx::symbolic_q(&t0)));
                for lambda in partitions_up_to(cfg.size(4), n) {
                    let length = lambda.iter().filter(|&&p| p > 0).count();
                    let label = format!("lambda={} q=1 t={}", comp(&lambda), fmt_rat(&t0));
                    let (l, it, t) = (lambda.clone(), interp.clone(), t0.clone());
                    out.push(Instance::new(format!("factorization {label}"), Mode::Specialized, move || {
                        expect(factorization_q1_check(&it, &l, &t).map_err(err)?, || "P*(q=1) is not the product of e*".into())
                    }));
                    if length == 0 {
                        continue;
                    }
                    let (l, it, t) = (lambda.clone(), interp.clone(), t0.clone());
                    out.push(Instance::new(format!("partial symmetrization {label}"), Mode::Specialized, move || {
                        for set in subsets(l.len(), length) {
                            if !support_sum_check(&it, &l, &set, &t).map_err(err)? {
                                return Ok(Some(format!("support {set:?}")));
                            }
                        }
                        Ok(None)
                    }));
                    let (l, t) = (lambda.clone(), t0.clone());
                    out.push(Instance::new(format!("sum of a {label}"), Mode::Specialized, move || {
                        for nu in orbit(&truncate_below(&sort_partition(&l), 2)) {
                            for set in subsets(l.len(), length) {
                                let s = sum_a_q1(&l, &nu, &set, &t).map_err(err)?;
                                if s != rat(1, 1) {
                                    return Ok(Some(format!("nu={} support {set:?}: {}", comp(&nu), fmt_rat(&s))));
                                }
                            }
                        }
                        Ok(None)
                    }));
                }
            }
        }
    }
    out
}
