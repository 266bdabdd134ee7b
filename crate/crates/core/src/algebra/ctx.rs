//! The values of q and t a computation runs with.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::error::AlgebraError;
use super::field::{BigRat, Field};
use super::qtpoly::QTPoly;
use super::ratqt::RatQT;

/// The two parameters of the theory, as elements of the coefficient field.
#[derive(Clone, Debug)]
pub struct Ctx<F: Field> {
    pub q: F,
    pub t: F,
}

impl Ctx<RatQT> {
    /// q and t are indeterminates.
    pub fn symbolic() -> Self {
        Ctx { q: RatQT::q(), t: RatQT::t() }
    }

    /// q is an indeterminate, t a fixed rational.
    pub fn symbolic_q(t0: &BigRat) -> Self {
        Ctx { q: RatQT::q(), t: RatQT::constant(t0.clone()) }
    }

    /// t is an indeterminate, q a fixed rational.
    pub fn symbolic_t(q0: &BigRat) -> Self {
        Ctx { q: RatQT::constant(q0.clone()), t: RatQT::t() }
    }
}

impl Ctx<BigRat> {
    /// A numeric point; no pole check (see [`Ctx::specialized_checked`]).
    pub fn specialized(q0: BigRat, t0: BigRat) -> Self {
        Ctx { q: q0, t: t0 }
    }

    /// A numeric point that avoids `q^a t^{±b} = 1` for `0 <= a, b <= bound`
    /// (not both zero).
    pub fn specialized_checked(q0: BigRat, t0: BigRat, bound: u32) -> Result<Self, AlgebraError> {
        if is_resonant(&q0, &t0, bound) {
            return Err(AlgebraError::Pole {
                denominator: format!("1 - q^a t^b at q = {q0}, t = {t0}"),
            });
        }
        Ok(Ctx { q: q0, t: t0 })
    }
}

impl<F: Field> Ctx<F> {
    pub fn q_pow(&self, e: i64) -> F {
        self.q.pow(e).expect("q is invertible")
    }

    pub fn t_pow(&self, e: i64) -> F {
        self.t.pow(e).expect("t is invertible")
    }

    /// `c q^a t^b`.
    pub fn qt(&self, c: i64, a: i64, b: i64) -> F {
        F::from_int(c).mul(&self.q_pow(a)).mul(&self.t_pow(b))
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(&self, a: i64, b: i64) -> F {
        F::one().sub(&self.q_pow(a).mul(&self.t_pow(b)))
    }

    /// `1 - t`.
    pub fn one_minus_t(&self) -> F {
        F::one().sub(&self.t)
    }

    /// Map a Laurent polynomial in q, t into the field.
    pub fn embed(&self, p: &QTPoly) -> F {
        let mut acc = F::zero();
        for ((a, b), c) in p.terms() {
            acc = acc.add(&F::from_rat(c).mul(&self.q_pow(*a as i64)).mul(&self.t_pow(*b as i64)));
        }
        acc
    }
}

/// True when `q^a t^{±b} = 1` for some `0 <= a, b <= bound`, not both zero.
pub fn is_resonant(q0: &BigRat, t0: &BigRat, bound: u32) -> bool {
    if num_traits::Zero::is_zero(q0) || num_traits::Zero::is_zero(t0) {
        return true;
    }
    let one = <BigRat as num_traits::One>::one();
    let q_pows: Vec<BigRat> = (0..=bound).map(|a| num_traits::pow(q0.clone(), a as usize)).collect();
    let t_pows: Vec<BigRat> = (0..=bound).map(|b| num_traits::pow(t0.clone(), b as usize)).collect();
    for (a, qa) in q_pows.iter().enumerate() {
        for (b, tb) in t_pows.iter().enumerate() {
            if a == 0 && b == 0 {
                continue;
            }
            let prod = qa * tb;
            if prod == one || *qa == *tb {
                return true;
            }
        }
    }
    false
}

/// The sampling pool `{±a/b : 1 <= a, b <= 5} \ {0, ±1}`.
pub fn sample_pool() -> Vec<BigRat> {
    let mut pool: Vec<BigRat> = Vec::new();
    for a in 1..=5i64 {
        for b in 1..=5i64 {
            let v = super::field::rat(a, b);
            if num_traits::One::is_one(&v) || pool.contains(&v) {
                continue;
            }
            pool.push(v.clone());
            pool.push(-v);
        }
    }
    pool.sort();
    pool
}

/// Deterministic stream of admissible `(q0, t0)` points.
pub struct PointSampler {
    rng: ChaCha8Rng,
    pool: Vec<BigRat>,
    bound: u32,
}

impl PointSampler {
    pub fn new(seed: u64, bound: u32) -> Self {
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed), pool: sample_pool(), bound }
    }

    pub fn next_ctx(&mut self) -> Ctx<BigRat> {
        loop {
            let q0 = self.pool.choose(&mut self.rng).unwrap().clone();
            let t0 = self.pool.choose(&mut self.rng).unwrap().clone();
            if let Ok(ctx) = Ctx::specialized_checked(q0, t0, self.bound) {
                return ctx;
            }
        }
    }

    pub fn next_value(&mut self) -> BigRat {
        self.pool.choose(&mut self.rng).unwrap().clone()
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;

    #[test]
    fn rejects_resonant_points() {
        assert!(is_resonant(&rat(2, 1), &rat(1, 2), 4));
        assert!(is_resonant(&rat(4, 1), &rat(2, 1), 4)); // q = t^2
        assert!(!is_resonant(&rat(2, 3), &rat(5, 1), 4));
    }

    #[test]
    fn sampler_is_deterministic() {
        let mut a = PointSampler::new(7, 8);
        let mut b = PointSampler::new(7, 8);
        for _ in 0..5 {
            let (x, y) = (a.next_ctx(), b.next_ctx());
            assert_eq!((x.q, x.t), (y.q, y.t));
        }
    }
}
