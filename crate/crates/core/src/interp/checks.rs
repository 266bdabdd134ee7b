//! Predicates for the vanishing characterization, triangularity and the
//! extra vanishing of `E*`.

use super::{InterpError, Interpolator};
use crate::algebra::{Field, Poly};
use crate::comb::{comp_order_lt, compositions_up_to, orbit, precedes, size, sort_partition, tilde_point};

/// `g` has degree at most `|mu|`, vanishes at `nu~` for every `nu` outside
/// the orbit of `mu` with `|nu| <= |mu|`, and `[x^tau] g = delta_{tau,mu}`
/// on the orbit.
pub fn verify_characterization<F: Field>(g: &Poly<F>, mu: &[i32], ctx: &crate::algebra::Ctx<F>) -> Result<bool, InterpError> {
    let d = size(mu);
    if g.degree().unwrap_or(0) > d {
        return Ok(false);
    }
    let lambda = sort_partition(mu);
    for nu in compositions_up_to(d, mu.len()) {
        if sort_partition(&nu) == lambda {
            continue;
        }
        if !g.evaluate(&tilde_point(&nu, ctx))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(orbit(&lambda).iter().all(|tau| {
        let c = g.coeff(tau);
        if tau.as_slice() == mu {
            c.is_one()
        } else {
            c.is_zero()
        }
    }))
}

/// Every monomial of `g - x^mu` is strictly below `mu` and `[x^mu] g = 1`.
pub fn verify_triangular<F: Field>(g: &Poly<F>, mu: &[i32]) -> bool {
    g.coeff(mu).is_one() && g.terms().all(|(e, _)| e.as_slice() == mu || comp_order_lt(e, mu))
}

/// `precedes(mu, nu)` or `E*_mu(nu~) = 0`.
pub fn extra_vanishing_check<F: Field>(interp: &Interpolator<F>, mu: &[i32], nu: &[i32]) -> Result<bool, InterpError> {
    if precedes(mu, nu) {
        return Ok(true);
    }
    let e = interp.e_star(mu)?;
    Ok(e.evaluate(&tilde_point(nu, interp.ctx()))?.is_zero())
}

/// Both directions of: `g(nu~) = 0` for all `|nu| <= k` iff the `E*`
/// coefficients of `g` vanish for all `|nu| <= k`. Returns whether the two
/// sides agree for every `k` up to the degree of `g`.
pub fn vanishing_matches_expansion<F: Field>(interp: &Interpolator<F>, g: &Poly<F>) -> Result<bool, InterpError> {
    let d = g.degree().unwrap_or(0);
    let coeffs = interp.expand(g)?;
    for k in 0..=d {
        let values_vanish = compositions_up_to(k, interp.n())
            .iter()
            .map(|nu| g.evaluate(&tilde_point(nu, interp.ctx())))
            .collect::<Result<Vec<F>, _>>()?
            .iter()
            .all(Field::is_zero);
        let coeffs_vanish = coeffs.iter().filter(|(nu, _)| size(nu) <= k).all(|(_, c)| c.is_zero());
        if values_vanish != coeffs_vanish {
            return Ok(false);
        }
    }
    Ok(true)
}
