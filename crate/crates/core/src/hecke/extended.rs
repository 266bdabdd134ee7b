//! Extended ASEP polynomials `f_alpha` for signed compositions, the matrix
//! of `T_i` on them, and the coefficients `b^alpha_mu` it generates.

use std::collections::BTreeMap;

use crate::algebra::{Ctx, Field, Poly};
use crate::comb::{abs_comp, flip, pack, signed_variants, swap, unpack_path, wt_alpha};
use crate::queues::twoline::a_coeffs;

/// Row `alpha` of the matrix: `T_i f_alpha = sum_beta N_{alpha,beta} f_beta`.
pub fn n_entry<F: Field>(alpha: &[i32], i: usize, ctx: &Ctx<F>) -> Vec<(Vec<i32>, F)> {
    let (a, b) = (alpha[i - 1], alpha[i]);
    let s = swap(alpha, i);
    let fl = flip(alpha, i);
    let t = ctx.t.clone();
    let one = F::one();
    let m = ctx.one_minus_t().neg();
    let same_sign = (a >= 0 && b >= 0) || (a < 0 && b < 0);
    if same_sign {
        if a == b {
            vec![(alpha.to_vec(), t)]
        } else if (a > b && b >= 0) || (-a > -b && -b > 0) {
            vec![(s, one)]
        } else {
            vec![(s, t), (alpha.to_vec(), m)]
        }
    } else if a >= 0 {
        // a >= 0 > b
        if a > -b {
            vec![(s, one), (fl, ctx.one_minus_t())]
        } else if a == -b {
            vec![(s, one)]
        } else {
            vec![(s, t)]
        }
    } else if -a > b {
        // a < 0 <= b
        vec![(s, one), (alpha.to_vec(), m)]
    } else if -a == b {
        vec![(s, t), (alpha.to_vec(), m)]
    } else {
        vec![(s, t), (alpha.to_vec(), m.clone()), (fl, m)]
    }
}

/// `f_alpha = f_{|alpha|} / prod_{alpha_i < 0} (-t^{n-1} x_i)`, given
/// `f_{|alpha|}`.
pub fn f_extended<F: Field>(alpha: &[i32], f_abs: &Poly<F>, ctx: &Ctx<F>) -> Poly<F> {
    let n = alpha.len();
    let exp: Vec<i32> = alpha.iter().map(|&a| if a < 0 { -1 } else { 0 }).collect();
    let negatives = alpha.iter().filter(|&&a| a < 0).count() as i64;
    let mut c = ctx.t_pow(-(n as i64 - 1) * negatives);
    if negatives % 2 == 1 {
        c = c.neg();
    }
    f_abs.mul_monomial(&exp).scale(&c)
}

/// `b^alpha_mu` for every `alpha`, via the matrix recursion along
/// [`unpack_path`].
pub fn b_coeffs<F: Field>(mu: &[i32], ctx: &Ctx<F>) -> BTreeMap<Vec<i32>, F> {
    b_coeffs_along(mu, &unpack_path(mu), ctx)
}

/// `b^alpha_mu` along an explicit path of unpacking steps from `pack(mu)`.
pub fn b_coeffs_along<F: Field>(mu: &[i32], path: &[usize], ctx: &Ctx<F>) -> BTreeMap<Vec<i32>, F> {
    let mut cur: BTreeMap<Vec<i32>, F> = signed_variants(&pack(mu)).into_iter().map(|a| (a, F::one())).collect();
    let mut shape = pack(mu);
    for &i in path {
        assert!(shape[i - 1] != 0 && shape[i] == 0, "unpacking step must move a part across a zero");
        let mut next: BTreeMap<Vec<i32>, F> = BTreeMap::new();
        for (beta, c) in &cur {
            for (alpha, v) in n_entry(beta, i, ctx) {
                let entry = next.entry(alpha).or_insert_with(F::zero);
                *entry = entry.add(&c.mul(&v));
            }
        }
        next.retain(|_, v| !v.is_zero());
        cur = next;
        shape = swap(&shape, i);
    }
    assert_eq!(shape, mu, "path must end at mu");
    cur
}

/// `h_alpha = sum_lambda wt_alpha a^lambda_{|alpha|} f-hat*_{lambda^-}`;
/// `f_hat_star(nu)` must return `q^{|nu|} f*_nu(x / q)`.
pub fn h_alpha<F: Field>(alpha: &[i32], ctx: &Ctx<F>, f_hat_star: &dyn Fn(&[i32]) -> Poly<F>) -> Poly<F> {
    let n = alpha.len();
    let wt = wt_alpha(alpha, ctx);
    let mut total = Poly::zero(n);
    for (lambda, a) in a_coeffs(&abs_comp(alpha), ctx) {
        let lowered = crate::comb::minus_one(&lambda);
        total = &total + &f_hat_star(&lowered).scale(&a);
    }
    &wt * &total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatQT;
    use crate::comb::compositions;

    #[test]
    fn packed_b_is_delta_on_signs() {
        let ctx = Ctx::symbolic();
        let b = b_coeffs(&[2, 1, 0], &ctx);
        assert_eq!(b.len(), 4);
        assert!(b.values().all(|v: &RatQT| *v == RatQT::one()));
    }

    #[test]
    fn path_independence_small() {
        let ctx = Ctx::symbolic();
        // two valid unpacking orders for (0,3,0,1)
        let a = b_coeffs_along(&[0, 3, 0, 1], &[2, 3, 1], &ctx);
        let b = b_coeffs_along(&[0, 3, 0, 1], &[2, 1, 3], &ctx);
        assert_eq!(a, b);
        for mu in compositions(2, 3) {
            let _ = b_coeffs(&mu, &ctx);
        }
    }
}
