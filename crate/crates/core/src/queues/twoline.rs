//! Two-line queues: the coefficients `a^lambda_mu` (classic layer) and
//! `G^alpha_mu` (signed layer).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::layer::{columns_admissible, layer_matchings, layer_stats, pairing_weight, static_signed_counts, LayerKind, PairingOrder};
use crate::algebra::{Ctx, Field};
use crate::comb::{orbit, signed_orbit, sort_partition, truncate_below};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoLineQueue {
    pub signed: bool,
    pub top: Vec<i32>,
    pub bottom: Vec<i32>,
    pub links: Vec<Option<usize>>,
}

const CLASSIC_KIND: LayerKind = LayerKind::Classic { row: 2 };
const SIGNED_KIND: LayerKind = LayerKind::Signed { row: 1 };

impl TwoLineQueue {
    fn kind(&self) -> LayerKind {
        if self.signed {
            SIGNED_KIND
        } else {
            CLASSIC_KIND
        }
    }

    /// Product of the pairing weights. Signed layers use the static
    /// description of the skipped balls.
    pub fn weight<F: Field>(&self, ctx: &Ctx<F>) -> F {
        let stats = layer_stats(&self.top, &self.bottom, &self.links, PairingOrder::Columns, &|_| 0);
        let mut w = F::one();
        for mut s in stats.into_iter().filter(|s| !s.trivial) {
            if self.signed {
                let (skipped, empty) = static_signed_counts(s.upper, s.lower, &self.top, &self.bottom, &self.links);
                s.skipped = skipped;
                s.empty = empty;
            }
            w = w.mul(&pairing_weight(&s, self.kind(), ctx));
        }
        w
    }

    /// Product of the pairing weights with the dynamic right-to-left counts.
    pub fn dynamic_weight<F: Field>(&self, ctx: &Ctx<F>) -> F {
        let stats = layer_stats(&self.top, &self.bottom, &self.links, PairingOrder::Columns, &|_| 0);
        stats.iter().fold(F::one(), |w, s| w.mul(&pairing_weight(s, self.kind(), ctx)))
    }
}

impl fmt::Display for TwoLineQueue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = |row: &[i32]| row.iter().map(|&v| if v == 0 { ".".to_string() } else { v.to_string() }).collect::<Vec<_>>().join(" ");
        let links: Vec<String> = self.links.iter().map(|l| l.map_or(".".into(), |c| (c + 1).to_string())).collect();
        writeln!(f, "bottom: {}", cells(&self.bottom))?;
        writeln!(f, "top: {} | {}", cells(&self.top), links.join(" "))
    }
}

/// Classic two-line queues with the given rows; empty when the rows are
/// incompatible.
pub fn classic_twoline_queues(bottom: &[i32], top: &[i32]) -> Vec<TwoLineQueue> {
    let compatible = top.iter().all(|&v| v == 0 || v >= 2)
        && sort_partition(top) == sort_partition(&truncate_below(bottom, 2))
        && columns_admissible(top, bottom, CLASSIC_KIND);
    if !compatible {
        return Vec::new();
    }
    layer_matchings(top, bottom, CLASSIC_KIND)
        .into_iter()
        .map(|links| TwoLineQueue { signed: false, top: top.to_vec(), bottom: bottom.to_vec(), links })
        .collect()
}

/// Signed two-line queues with bottom row `bottom` and top row `top`.
pub fn signed_twoline_queues(bottom: &[i32], top: &[i32]) -> Vec<TwoLineQueue> {
    let abs: Vec<i32> = top.iter().map(|v| v.abs()).collect();
    if sort_partition(&abs) != sort_partition(bottom) || !columns_admissible(top, bottom, SIGNED_KIND) {
        return Vec::new();
    }
    layer_matchings(top, bottom, SIGNED_KIND)
        .into_iter()
        .map(|links| TwoLineQueue { signed: true, top: top.to_vec(), bottom: bottom.to_vec(), links })
        .collect()
}

/// `a^lambda_mu`: `lambda` is the top row, `mu` the bottom row.
pub fn a_coeff<F: Field>(mu: &[i32], lambda: &[i32], ctx: &Ctx<F>) -> F {
    classic_twoline_queues(mu, lambda).iter().fold(F::zero(), |acc, q| acc.add(&q.weight(ctx)))
}

/// Every nonzero `a^lambda_mu` for the given bottom row.
pub fn a_coeffs<F: Field>(mu: &[i32], ctx: &Ctx<F>) -> Vec<(Vec<i32>, F)> {
    orbit(&truncate_below(mu, 2))
        .into_iter()
        .map(|lambda| {
            let c = a_coeff(mu, &lambda, ctx);
            (lambda, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// `G^alpha_mu`: `alpha` is the signed top row, `mu` the bottom row.
pub fn g_coeff<F: Field>(mu: &[i32], alpha: &[i32], ctx: &Ctx<F>) -> F {
    signed_twoline_queues(mu, alpha).iter().fold(F::zero(), |acc, q| acc.add(&q.weight(ctx)))
}

/// Every nonzero `G^alpha_mu` for the given bottom row.
pub fn g_coeffs<F: Field>(mu: &[i32], ctx: &Ctx<F>) -> Vec<(Vec<i32>, F)> {
    signed_orbit(mu)
        .into_iter()
        .map(|alpha| {
            let c = g_coeff(mu, &alpha, ctx);
            (alpha, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// The recursion for `G^alpha` under one unpacking step: for `mu_i > 0 =
/// mu_{i+1}`, `G^alpha_{s_i mu} = sum_beta c_beta G^beta_mu` with the list of
/// `(beta, c_beta)` returned here.
pub fn g_recursion_rule<F: Field>(alpha: &[i32], i: usize, ctx: &Ctx<F>) -> Vec<(Vec<i32>, F)> {
    let (a, b) = (alpha[i - 1], alpha[i]);
    let s = crate::comb::swap(alpha, i);
    let fl = crate::comb::flip(alpha, i);
    let t = ctx.t.clone();
    let one = F::one();
    let m = ctx.one_minus_t().neg();
    let this = alpha.to_vec();
    if a == b {
        return vec![(this, t)];
    }
    if a >= 0 && b >= 0 || a < 0 && b < 0 {
        return if a.abs() > b.abs() {
            vec![(s, t)]
        } else {
            vec![(s, one), (this, m)]
        };
    }
    if a < 0 {
        // a < 0 <= b
        if b >= -a {
            vec![(s, one), (this, m)]
        } else if b == 0 {
            vec![(s, t), (this, m)]
        } else {
            vec![(s, t), (this, m), (fl, ctx.one_minus_t())]
        }
    } else if a == 0 {
        vec![(s, one)]
    } else if a >= -b {
        vec![(s, t)]
    } else {
        vec![(s, one), (fl, m)]
    }
}
