//! One-column interpolation polynomials and the factorization at `q = 1`.

use super::{InterpError, Interpolator};
use crate::algebra::{rat, BigRat, Ctx, Field, Poly, RatQT};
use crate::comb::{conjugate, orbit, support};
use crate::queues::twoline::a_coeff;

/// `prod_{i in S} (x_i - t^{#(S^c below i)} / t^{n-1})`, `S` one-based.
pub fn one_row_product<F: Field>(set: &[usize], n: usize, ctx: &Ctx<F>) -> Poly<F> {
    let mut out = Poly::one(n);
    for &i in set {
        let missing = (1..i).filter(|j| !set.contains(j)).count() as i64;
        out = &out * &Poly::linear(n, i - 1, ctx.t_pow(missing - (n as i64 - 1)));
    }
    out
}

/// `e*_k = sum over k-subsets S of one_row_product(S)`.
pub fn e_star_k<F: Field>(k: usize, n: usize, ctx: &Ctx<F>) -> Poly<F> {
    let mut out = Poly::zero(n);
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            let set: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            out = &out + &one_row_product(&set, n, ctx);
        }
    }
    out
}

/// `prod_i e*_{lambda'_i}` over the columns of `lambda` from `first` on
/// (zero-based).
fn column_product(lambda: &[i32], first: usize, ctx: &Ctx<BigRat>) -> Poly<BigRat> {
    let n = lambda.len();
    conjugate(lambda)
        .iter()
        .skip(first)
        .filter(|&&c| c > 0)
        .fold(Poly::one(n), |acc, &c| &acc * &e_star_k(c as usize, n, ctx))
}

fn at_q1(p: &Poly<RatQT>, t0: &BigRat) -> Result<Poly<BigRat>, InterpError> {
    Ok(p.specialize(&rat(1, 1), t0)?)
}

/// `P*_lambda(x; 1, t0) = prod_i e*_{lambda'_i}(x; t0)`. The left side is
/// computed by `interp`, which must work over `Q(q)` with `t = t0`, and
/// then specialized at `q = 1`.
pub fn factorization_q1_check(interp: &Interpolator<RatQT>, lambda: &[i32], t0: &BigRat) -> Result<bool, InterpError> {
    let lhs = at_q1(&interp.p_star(lambda)?, t0)?;
    let ctx = Ctx::specialized(rat(1, 1), t0.clone());
    Ok(lhs == column_product(lambda, 0, &ctx))
}

/// The partial symmetrization: the sum of `f*_mu(x; 1, t0)` over
/// rearrangements `mu` of `lambda` with support `set` equals
/// `one_row_product(set) * prod_{i >= 2} e*_{lambda'_i}`.
pub fn support_sum_check(interp: &Interpolator<RatQT>, lambda: &[i32], set: &[usize], t0: &BigRat) -> Result<bool, InterpError> {
    let n = lambda.len();
    let mut lhs = Poly::zero(n);
    for mu in orbit(lambda).into_iter().filter(|mu| support(mu) == set) {
        lhs = &lhs + &at_q1(&interp.f_star(&mu)?, t0)?;
    }
    let ctx = Ctx::specialized(rat(1, 1), t0.clone());
    Ok(lhs == &one_row_product(set, n, &ctx) * &column_product(lambda, 1, &ctx))
}

/// `sum_{mu : supp(mu) = set} a^nu_mu` at `q = 1`, over rearrangements
/// `mu` of `lambda`; expected to be 1.
pub fn sum_a_q1(lambda: &[i32], nu: &[i32], set: &[usize], t0: &BigRat) -> Result<BigRat, InterpError> {
    let ctx = Ctx::symbolic_q(t0);
    let mut total = RatQT::zero();
    for mu in orbit(lambda).into_iter().filter(|mu| support(mu) == set) {
        total = total.add(&a_coeff(&mu, nu, &ctx));
    }
    Ok(total.eval(&rat(1, 1), t0)?)
}
