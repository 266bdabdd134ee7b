//! Hecke operator suites: algebra relations, the action on the polynomial
//! families, and the signed (extended) families.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng;

use super::{comp, err, expect, first_failure};
use crate::algebra::{rat, Ctx, Poly, RatQT};
use crate::comb::{abs_comp, compositions_up_to, signed_variants};
use crate::hecke::{f_extended, hecke_action_rule, hecke_t, h_alpha, n_entry, b_coeffs, HeckeRelation};
use crate::interp::{general_decomposition_rhs, Interpolator, SignedCoeffs};
use crate::queues::twoline::g_coeffs;
use crate::verify::{Instance, Mode, VerifyConfig};

const SAMPLES: usize = 5;

/// A sparse polynomial with 1 to 4 terms, exponents up to 3 and
/// coefficients `c q^a t^b`, `0 < |c| <= 9`, `a, b <= 2`.
fn random_sparse(n: usize, rng: &mut impl Rng) -> Poly<RatQT> {
    let mut p = Poly::zero(n);
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=4) {
            let exp: Vec<i32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let mut c = rng.gen_range(1..=9i64);
            if rng.gen_bool(0.5) {
                c = -c;
            }
            let coeff = RatQT::monomial(rat(c, 1), rng.gen_range(0..=2), rng.gen_range(0..=2));
            p.add_term(exp, coeff);
        }
    }
    p
}

pub(crate) fn hecke_relations(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    if !cfg.wants(Mode::Symbolic) {
        return out;
    }
    let mut sampler = cfg.sampler(1);
    for n in 2..=cfg.n(4) {
        for i in 1..n {
            for sample in 0..SAMPLES {
                let a = random_sparse(n, sampler.rng());
                out.push(Instance::new(format!("n={n} i={i} sample={sample}"), Mode::Symbolic, move || {
                    let ctx = Ctx::symbolic();
                    for rel in HeckeRelation::ALL {
                        for j in rel.partners(n, i) {
                            if !rel.holds(&a, i, j, &ctx).map_err(err)? {
                                return Ok(Some(format!("{} with j={j} on {a}", rel.name())));
                            }
                        }
                    }
                    Ok(None)
                }));
            }
        }
    }
    out
}

/// A polynomial family indexed by compositions.
type Family<'a> = dyn Fn(&[i32]) -> Result<Poly<RatQT>, String> + 'a;

fn action_matches(family: &str, mu: &[i32], i: usize, g: &Family, ctx: &Ctx<RatQT>) -> Result<Option<String>, String> {
    let lhs = hecke_t(&g(mu)?, i, ctx).map_err(err)?;
    let mut rhs = Poly::zero(mu.len());
    for (nu, c) in hecke_action_rule(mu, i, ctx) {
        rhs = rhs + g(&nu)?.scale(&c);
    }
    expect(lhs == rhs, || format!("{family}: T_{i} gives {lhs}"))
}

pub(crate) fn hecke_action(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    if !cfg.wants(Mode::Symbolic) {
        return out;
    }
    for n in 2..=cfg.n(3) {
        let interp = Arc::new(Interpolator::recursive(n, Ctx::symbolic()));
        for mu in compositions_up_to(cfg.size(3), n) {
            for i in 1..n {
                let (m, interp) = (mu.clone(), interp.clone());
                out.push(Instance::new(format!("mu={} i={i}", comp(&mu)), Mode::Symbolic, move || {
                    let ctx = interp.ctx().clone();
                    // f* through a reduced word, so no instance is true by construction
                    let f_star = |nu: &[i32]| interp.f_star_word(nu).map_err(err);
                    let f = |nu: &[i32]| f_star(nu)?.top_homogeneous().map_err(err);
                    let f_hat = |nu: &[i32]| Ok(f_star(nu)?.hat(crate::comb::size(nu), &ctx));
                    first_failure([
                        action_matches("f", &m, i, &f, &ctx),
                        action_matches("f*", &m, i, &f_star, &ctx),
                        action_matches("f-hat*", &m, i, &f_hat, &ctx),
                    ])
                }));
            }
        }
    }
    out
}

/// Signed compositions with `|alpha| <= max_size` in `n` parts.
fn signed_compositions(max_size: i32, n: usize) -> Vec<Vec<i32>> {
    compositions_up_to(max_size, n).iter().flat_map(|mu| signed_variants(mu)).collect()
}

pub(crate) fn extended_asep(cfg: &VerifyConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    if !cfg.wants(Mode::Symbolic) {
        return out;
    }
    let max_size = cfg.size(3);
    for n in 2..=cfg.n(3) {
        let interp = Arc::new(Interpolator::recursive(n, Ctx::symbolic()));
        for alpha in signed_compositions(max_size, n) {
            for i in 1..n {
                let (a, it) = (alpha.clone(), interp.clone());
                out.push(Instance::new(format!("T_i f_alpha alpha={} i={i}", comp(&alpha)), Mode::Symbolic, move || {
                    let ctx = it.ctx().clone();
                    let f = |beta: &[i32]| -> Result<Poly<RatQT>, String> {
                        let base = it.f_homogeneous(&abs_comp(beta)).map_err(err)?;
                        let ext = f_extended(beta, &base, &ctx);
                        let laurent = ext.terms().find(|(e, _)| e.iter().any(|&v| v < 0)).map(|(e, _)| e.clone());
                        match laurent {
                            Some(e) => Err(format!("f_{} has the monomial {e:?}", comp(beta))),
                            None => Ok(ext),
                        }
                    };
                    let lhs = hecke_t(&f(&a)?, i, &ctx).map_err(err)?;
                    let mut rhs = Poly::zero(a.len());
                    for (beta, c) in n_entry(&a, i, &ctx) {
                        rhs = rhs + f(&beta)?.scale(&c);
                    }
                    expect(lhs == rhs, || format!("T_{i} f_alpha = {lhs}"))
                }));
                let (a, it) = (alpha.clone(), interp.clone());
                out.push(Instance::new(format!("T_i h_alpha alpha={} i={i}", comp(&alpha)), Mode::Symbolic, move || {
                    let ctx = it.ctx().clone();
                    let hat = |nu: &[i32]| it.f_hat_star(nu).expect("f-hat* at a valid composition");
                    let lhs = hecke_t(&h_alpha(&a, &ctx, &hat), i, &ctx).map_err(err)?;
                    let rhs = n_entry(&a, i, &ctx)
                        .iter()
                        .fold(Poly::zero(a.len()), |acc, (beta, c)| acc + h_alpha(beta, &ctx, &hat).scale(c));
                    expect(lhs == rhs, || format!("T_{i} h_alpha = {lhs}"))
                }));
            }
        }
        for mu in compositions_up_to(max_size, n) {
            let m = mu.clone();
            out.push(Instance::new(format!("b equals G mu={}", comp(&mu)), Mode::Symbolic, move || {
                let ctx = Ctx::<RatQT>::symbolic();
                let b = b_coeffs(&m, &ctx);
                let g: BTreeMap<Vec<i32>, RatQT> = g_coeffs(&m, &ctx).into_iter().collect();
                expect(b == g, || {
                    let diff = b.keys().chain(g.keys()).find(|k| b.get(*k) != g.get(*k)).expect("maps differ");
                    format!("alpha={}: b={:?} G={:?}", comp(diff), b.get(diff), g.get(diff))
                })
            }));
            let (m, it) = (mu.clone(), interp.clone());
            out.push(Instance::new(format!("decomposition mu={}", comp(&mu)), Mode::Symbolic, move || {
                let f = it.f_star(&m).map_err(err)?;
                let from_b = general_decomposition_rhs(&it, &m, SignedCoeffs::Hecke).map_err(err)?;
                let from_g = general_decomposition_rhs(&it, &m, SignedCoeffs::Queues).map_err(err)?;
                first_failure([
                    expect(from_b == f, || format!("with b: {from_b}")),
                    expect(from_g == f, || format!("with G: {from_g}")),
                ])
            }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_sparse_is_nonzero_and_bounded() {
        let mut sampler = crate::algebra::PointSampler::new(3, 8);
        for _ in 0..20 {
            let p = random_sparse(3, sampler.rng());
            assert!(!p.is_zero() && p.len() <= 4);
            assert!(p.terms().all(|(e, _)| e.iter().all(|&v| (0..=3).contains(&v))));
        }
    }
}
