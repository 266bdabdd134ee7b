//! Right-hand sides of the packed recursion and of the general
//! decomposition of `f*_mu` into `f-hat*` of smaller compositions.

use std::collections::BTreeMap;

use super::{InterpError, Interpolator};
use crate::algebra::{Field, Poly};
use crate::comb::{abs_comp, is_packed, minus_one, wt_alpha};
use crate::hecke::b_coeffs;
use crate::queues::twoline::{a_coeffs, g_coeffs};

/// Where the signed coefficients of the decomposition come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignedCoeffs {
    /// `b^alpha_mu` from the `T_i` matrix recursion.
    Hecke,
    /// `G^alpha_mu` from signed two-line queues.
    Queues,
}

/// `prod_{i <= k} (x_i - t^{1-n}) * sum_nu a^nu_mu f-hat*_{nu^-}` for packed `mu`.
pub fn packed_recursion_rhs<F: Field>(interp: &Interpolator<F>, mu: &[i32]) -> Result<Poly<F>, InterpError> {
    if !is_packed(mu) {
        return Err(InterpError::NotPacked(mu.to_vec()));
    }
    let n = mu.len();
    let ctx = interp.ctx();
    let root = ctx.t_pow(1 - n as i64);
    let mut prefactor = Poly::one(n);
    for i in (0..n).filter(|&i| mu[i] != 0) {
        prefactor = &prefactor * &Poly::linear(n, i, root.clone());
    }
    let mut sum = Poly::zero(n);
    for (nu, a) in a_coeffs(mu, ctx) {
        sum = &sum + &interp.f_hat_star(&minus_one(&nu))?.scale(&a);
    }
    Ok(&prefactor * &sum)
}

/// Divide `f*_mu` by `x_i - t^{1-n}` for each `i <= k`; `true` when every
/// division is exact.
pub fn packed_divisibility<F: Field>(interp: &Interpolator<F>, mu: &[i32]) -> Result<bool, InterpError> {
    if !is_packed(mu) {
        return Err(InterpError::NotPacked(mu.to_vec()));
    }
    let root = interp.ctx().t_pow(1 - mu.len() as i64);
    let mut cur = interp.f_star(mu)?;
    for i in (0..mu.len()).filter(|&i| mu[i] != 0) {
        let (quot, rem) = cur.divide_linear(i, &root);
        if !rem.is_zero() {
            return Ok(false);
        }
        cur = quot;
    }
    Ok(true)
}

/// The polynomial coefficients `f^{*lambda}_mu = sum_alpha c^alpha_mu wt_alpha
/// a^lambda_{|alpha|}`, keyed by the top row `lambda`.
pub fn decomposition_coeffs<F: Field>(interp: &Interpolator<F>, mu: &[i32], source: SignedCoeffs) -> BTreeMap<Vec<i32>, Poly<F>> {
    let ctx = interp.ctx();
    let signed: Vec<(Vec<i32>, F)> = match source {
        SignedCoeffs::Hecke => b_coeffs(mu, ctx).into_iter().collect(),
        SignedCoeffs::Queues => g_coeffs(mu, ctx),
    };
    let mut out: BTreeMap<Vec<i32>, Poly<F>> = BTreeMap::new();
    for (alpha, c) in signed {
        let w = wt_alpha(&alpha, ctx).scale(&c);
        for (lambda, a) in a_coeffs(&abs_comp(&alpha), ctx) {
            let entry = out.entry(lambda).or_insert_with(|| Poly::zero(mu.len()));
            *entry = &*entry + &w.scale(&a);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// `sum_lambda f^{*lambda}_mu f-hat*_{lambda^-}`.
pub fn general_decomposition_rhs<F: Field>(interp: &Interpolator<F>, mu: &[i32], source: SignedCoeffs) -> Result<Poly<F>, InterpError> {
    let mut out = Poly::zero(mu.len());
    for (lambda, coeff) in decomposition_coeffs(interp, mu, source) {
        out = &out + &(&coeff * &interp.f_hat_star(&minus_one(&lambda))?);
    }
    Ok(out)
}
