//! Demazure-Lusztig operators and the linear relations they satisfy on the
//! families of polynomials attached to compositions.

mod extended;
mod relations;

pub use extended::*;
pub use relations::HeckeRelation;

use crate::algebra::{AlgebraError, Ctx, Field, Poly};

/// `T_i f = t f - (t x_i - x_{i+1}) (f - s_i f) / (x_i - x_{i+1})`, `i` one-based.
pub fn hecke_t<F: Field>(p: &Poly<F>, i: usize, ctx: &Ctx<F>) -> Result<Poly<F>, AlgebraError> {
    let n = p.n_vars();
    let dd = p.divided_difference(i)?;
    let factor = &Poly::var(n, i - 1).scale(&ctx.t) - &Poly::var(n, i);
    Ok(&p.scale(&ctx.t) - &(&factor * &dd))
}

/// `T_{i_1} ... T_{i_l} p`: the last letter acts first.
pub fn hecke_word<F: Field>(p: &Poly<F>, word: &[usize], ctx: &Ctx<F>) -> Result<Poly<F>, AlgebraError> {
    let mut out = p.clone();
    for &i in word.iter().rev() {
        out = hecke_t(&out, i, ctx)?;
    }
    Ok(out)
}

/// Expected `T_i g_mu` for the families `g = f, f*, f-hat*`, as a list of
/// `(composition, coefficient)`.
pub fn hecke_action_rule<F: Field>(mu: &[i32], i: usize, ctx: &Ctx<F>) -> Vec<(Vec<i32>, F)> {
    let (a, b) = (mu[i - 1], mu[i]);
    let swapped = crate::comb::swap(mu, i);
    if a > b {
        vec![(swapped, F::one())]
    } else if a == b {
        vec![(mu.to_vec(), ctx.t.clone())]
    } else {
        vec![(swapped, ctx.t.clone()), (mu.to_vec(), ctx.one_minus_t().neg())]
    }
}

/// `r_i(nu) = #{j < i : nu_{i+1} < nu_j <= nu_i} + #{j > i : nu_{i+1} <= nu_j < nu_i}`
/// with one-based `i`.
pub fn shape_r(nu: &[i32], i: usize) -> i32 {
    let (a, b) = (nu[i - 1], nu[i]);
    let before = nu[..i - 1].iter().filter(|&&v| b < v && v <= a).count();
    let after = nu[i..].iter().filter(|&&v| b <= v && v < a).count();
    (before + after) as i32
}

/// `(T_i + (1 - t) / (1 - q^{nu_i - nu_{i+1}} t^{r_i})) g` for `nu_i > nu_{i+1}`:
/// maps `E_nu` to `E_{s_i nu}` and `E*_nu` to `E*_{s_i nu}`. The two cases
/// share the constant because it is read off the top homogeneous part.
pub fn shape_permute<F: Field>(g: &Poly<F>, nu: &[i32], i: usize, ctx: &Ctx<F>) -> Result<Poly<F>, AlgebraError> {
    let (a, b) = (nu[i - 1], nu[i]);
    assert!(a > b, "shape_permute needs nu_i > nu_(i+1)");
    let coeff = ctx.one_minus_t().div(&ctx.one_minus((a - b) as i64, shape_r(nu, i) as i64))?;
    Ok(&hecke_t(g, i, ctx)? + &g.scale(&coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatQT;

    #[test]
    fn t1_on_variables() {
        let ctx = Ctx::symbolic();
        let x1: Poly<RatQT> = Poly::var(2, 0);
        let x2: Poly<RatQT> = Poly::var(2, 1);
        assert_eq!(hecke_t(&x1, 1, &ctx).unwrap(), x2);
        // T_1 x_2 = t x_1 - (1 - t) x_2
        let expect = &x1.scale(&ctx.t) - &x2.scale(&ctx.one_minus_t());
        assert_eq!(hecke_t(&x2, 1, &ctx).unwrap(), expect);
    }
}
