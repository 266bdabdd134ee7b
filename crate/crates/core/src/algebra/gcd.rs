//! Greatest common divisors in Q[q, t].
//!
//! Polynomials are viewed as elements of Q[q][t]; contents are univariate
//! gcds over Q and the t-direction uses a primitive pseudo-remainder sequence.

use num_traits::{One, Zero};

use super::field::BigRat;
use super::qtpoly::QTPoly;

/// Dense univariate polynomial in q, lowest degree first, no trailing zeros.
type UPoly = Vec<BigRat>;

/// Dense polynomial in t whose coefficients are [`UPoly`]s.
type BiPoly = Vec<UPoly>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_is_zero(p: &UPoly) -> bool {
    p.is_empty()
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigRat::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn u_scale(a: &UPoly, c: &BigRat) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Quotient and remainder over Q.
fn u_divrem(a: &UPoly, b: &UPoly) -> (UPoly, UPoly) {
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b.last().expect("nonzero divisor").recip();
    let mut quot = vec![BigRat::zero(); rem.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() * &lead_inv;
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] -= &factor * y;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn u_monic(a: &UPoly) -> UPoly {
    match a.last() {
        Some(lead) => {
            let inv = lead.recip();
            a.iter().map(|x| x * &inv).collect()
        }
        None => Vec::new(),
    }
}

fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    // monic remainders keep the rational coefficients small
    let (mut x, mut y) = (u_monic(a), u_monic(b));
    while !y.is_empty() {
        let (_, r) = u_divrem(&x, &y);
        x = y;
        y = u_monic(&r);
    }
    x
}

fn u_exact_div(a: &UPoly, b: &UPoly) -> UPoly {
    let (q, r) = u_divrem(a, b);
    debug_assert!(r.is_empty(), "inexact univariate division");
    q
}

fn bi_trim(p: &mut BiPoly) {
    while p.last().is_some_and(u_is_zero) {
        p.pop();
    }
}

fn content(p: &BiPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = if g.is_empty() { u_monic(c) } else { u_gcd(&g, c) };
        if g.len() == 1 {
            break;
        }
    }
    g
}

fn primitive_part(p: &BiPoly) -> BiPoly {
    let c = content(p);
    if c.len() <= 1 {
        return p.clone();
    }
    p.iter().map(|x| if x.is_empty() { Vec::new() } else { u_exact_div(x, &c) }).collect()
}

fn pseudo_rem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut rem = a.clone();
    let lead_b = b.last().expect("nonzero divisor").clone();
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let lead_r = rem.last().unwrap().clone();
        let (quot, r) = u_divrem(&lead_r, &lead_b);
        if r.is_empty() {
            // exact step: no need to scale the remainder
            for (i, y) in b.iter().enumerate() {
                rem[shift + i] = u_sub(&rem[shift + i], &u_mul(y, &quot));
            }
            rem.pop();
            bi_trim(&mut rem);
            continue;
        }
        for c in rem.iter_mut() {
            *c = u_mul(c, &lead_b);
        }
        for (i, y) in b.iter().enumerate() {
            let sub = u_mul(y, &lead_r);
            rem[shift + i] = u_sub(&rem[shift + i], &sub);
        }
        debug_assert!(rem.last().unwrap().is_empty());
        rem.pop();
        bi_trim(&mut rem);
    }
    rem
}

/// Normalize so the result is a canonical associate: the t-leading
/// coefficient is monic in q.
fn normalize(p: BiPoly) -> BiPoly {
    match p.last() {
        Some(lead) => {
            let inv = lead.last().unwrap().recip();
            p.iter().map(|c| u_scale(c, &inv)).collect()
        }
        None => p,
    }
}

fn u_eval(p: &UPoly, x: &BigRat) -> BigRat {
    p.iter().rev().fold(BigRat::zero(), |acc, c| acc * x + c)
}

fn u_degree(p: &UPoly) -> usize {
    p.len().saturating_sub(1)
}

/// The polynomial of degree below `xs.len()` through `(xs[i], ys[i])`,
/// in Newton form.
fn u_interpolate(xs: &[BigRat], ys: &[BigRat]) -> UPoly {
    let mut coef = ys.to_vec();
    for j in 1..xs.len() {
        for i in (j..xs.len()).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out: UPoly = Vec::new();
    for i in (0..xs.len()).rev() {
        // out = out * (x - xs[i]) + coef[i]
        let mut next = vec![BigRat::zero(); out.len() + 1];
        for (k, c) in out.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &coef[i];
        out = next;
    }
    trim(&mut out);
    out
}

fn bi_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return normalize(b.clone());
    }
    if b.is_empty() {
        return normalize(a.clone());
    }
    let cont = u_gcd(&content(a), &content(b));
    let x = primitive_part(a);
    let y = primitive_part(b);
    let g = if x.len() == 1 || y.len() == 1 {
        vec![vec![BigRat::one()]]
    } else {
        gcd_by_evaluation(&x, &y).unwrap_or_else(|| gcd_prs(x, y))
    };
    let g = primitive_part(&g);
    normalize(g.iter().map(|c| u_mul(c, &cont)).collect())
}

/// gcd of primitive polynomials from univariate images at `q = 1, 2, ...`,
/// scaled by the gcd of the leading coefficients and interpolated in `q`.
/// `None` when the interpolant fails the division check.
fn gcd_by_evaluation(x: &BiPoly, y: &BiPoly) -> Option<BiPoly> {
    let (lx, ly) = (x.last()?, y.last()?);
    let gamma = u_gcd(lx, ly);
    let max_q = |p: &BiPoly| p.iter().map(u_degree).max().unwrap_or(0);
    let needed = u_degree(&gamma) + max_q(x).min(max_q(y)) + 1;
    let mut points: Vec<BigRat> = Vec::new();
    let mut images: Vec<UPoly> = Vec::new();
    let mut best = usize::MAX;
    let mut c = BigRat::zero();
    let mut tries = 0;
    while images.len() < needed {
        tries += 1;
        if tries > 4 * needed + 16 {
            return None;
        }
        c += BigRat::one();
        if u_eval(lx, &c).is_zero() || u_eval(ly, &c).is_zero() {
            continue;
        }
        let image = |p: &BiPoly| {
            let mut v: UPoly = p.iter().map(|k| u_eval(k, &c)).collect();
            trim(&mut v);
            v
        };
        let g = u_gcd(&image(x), &image(y));
        let d = u_degree(&g);
        if d == 0 {
            return Some(vec![vec![BigRat::one()]]);
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            points.clear();
            images.clear();
        }
        images.push(u_scale(&g, &u_eval(&gamma, &c)));
        points.push(c.clone());
    }
    let mut g: BiPoly = (0..=best)
        .map(|k| {
            let ys: Vec<BigRat> = images.iter().map(|im| im.get(k).cloned().unwrap_or_else(BigRat::zero)).collect();
            u_interpolate(&points, &ys)
        })
        .collect();
    bi_trim(&mut g);
    let g = primitive_part(&g);
    (bi_div(x, &g).is_some() && bi_div(y, &g).is_some()).then_some(g)
}

/// Primitive pseudo-remainder sequence; the fallback for [`gcd_by_evaluation`].
fn gcd_prs(mut x: BiPoly, mut y: BiPoly) -> BiPoly {
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        if y.len() == 1 {
            break vec![vec![BigRat::one()]];
        }
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            break y;
        }
        x = y;
        y = primitive_part(&r);
    }
}

/// Exact quotient in Q[q][t]; `None` when the division leaves a remainder.
fn bi_div(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    let mut rem = a.clone();
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < b.len() {
        return None;
    }
    let lead_b = b.last().unwrap();
    let mut quot: BiPoly = vec![Vec::new(); rem.len() - b.len() + 1];
    while !rem.is_empty() && rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let (factor, r) = u_divrem(rem.last().unwrap(), lead_b);
        if !r.is_empty() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            rem[shift + i] = u_sub(&rem[shift + i], &u_mul(y, &factor));
        }
        if !rem.last().unwrap().is_empty() {
            return None;
        }
        quot[shift] = factor;
        rem.pop();
        bi_trim(&mut rem);
    }
    if !rem.is_empty() {
        return None;
    }
    bi_trim(&mut quot);
    Some(quot)
}

/// Requires a polynomial with nonnegative exponents.
fn to_dense(p: &QTPoly) -> BiPoly {
    let Some((_, max_t)) = p.max_exponents() else {
        return Vec::new();
    };
    let mut out: BiPoly = vec![Vec::new(); max_t as usize + 1];
    for ((eq, et), c) in p.terms() {
        debug_assert!(*eq >= 0 && *et >= 0);
        let slot = &mut out[*et as usize];
        if slot.len() <= *eq as usize {
            slot.resize(*eq as usize + 1, BigRat::zero());
        }
        slot[*eq as usize] = c.clone();
    }
    bi_trim(&mut out);
    out
}

fn from_dense(p: &BiPoly) -> QTPoly {
    let mut out = QTPoly::zero();
    for (et, coeffs) in p.iter().enumerate() {
        for (eq, c) in coeffs.iter().enumerate() {
            out.add_term((eq as i32, et as i32), c.clone());
        }
    }
    out
}

/// gcd of two polynomials with nonnegative exponents, up to a rational unit.
pub fn poly_gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    from_dense(&bi_gcd(&to_dense(a), &to_dense(b)))
}

/// Exact quotient of two polynomials with nonnegative exponents.
pub fn poly_div_exact(a: &QTPoly, b: &QTPoly) -> Option<QTPoly> {
    if let Some(c) = b.as_constant() {
        if c.is_zero() {
            return None;
        }
        return Some(a.scale(&c.recip()));
    }
    bi_div(&to_dense(a), &to_dense(b)).map(|d| from_dense(&d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(terms: &[((i32, i32), i64)]) -> QTPoly {
        QTPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigRat::from_integer(c.into()))))
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p: UPoly = [3, 0, -2, 1].iter().map(|&c| BigRat::from_integer(c.into())).collect();
        let xs: Vec<BigRat> = (1..=4).map(|c| BigRat::from_integer(c.into())).collect();
        let ys: Vec<BigRat> = xs.iter().map(|x| u_eval(&p, x)).collect();
        assert_eq!(u_interpolate(&xs, &ys), p);
    }

    #[test]
    fn evaluation_gcd_agrees_with_prs() {
        // (t - q)(1 - q t^2) and (t - q)^2 (1 + q^2 t)
        let a = qt(&[((0, 1), 1), ((1, 0), -1)]).mul(&qt(&[((0, 0), 1), ((1, 2), -1)]));
        let b = qt(&[((0, 1), 1), ((1, 0), -1)]).pow(2).mul(&qt(&[((0, 0), 1), ((2, 1), 1)]));
        let (da, db) = (to_dense(&a), to_dense(&b));
        let by_eval = gcd_by_evaluation(&primitive_part(&da), &primitive_part(&db)).expect("images interpolate");
        let by_prs = gcd_prs(primitive_part(&da), primitive_part(&db));
        assert_eq!(normalize(primitive_part(&by_eval)), normalize(primitive_part(&by_prs)));
        assert_eq!(from_dense(&bi_gcd(&da, &db)), from_dense(&normalize(to_dense(&qt(&[((0, 1), 1), ((1, 0), -1)])))));
    }

    #[test]
    fn coprime_inputs_have_unit_gcd() {
        let a = qt(&[((0, 0), 1), ((1, 1), -1)]);
        let b = qt(&[((0, 0), 1), ((2, 1), -1)]);
        assert_eq!(poly_gcd(&a, &b), QTPoly::one());
    }
}
