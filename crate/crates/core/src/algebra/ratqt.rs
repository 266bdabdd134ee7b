//! Rational functions in q and t.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::error::AlgebraError;
use super::field::BigRat;
use super::gcd::{poly_div_exact, poly_gcd};
use super::qtpoly::QTPoly;

/// `num / den` with the common gcd removed, `den` a primitive integer
/// polynomial with minimal exponents zero and positive graded-lex leading
/// coefficient. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct RatQT {
    num: QTPoly,
    den: QTPoly,
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT { num: QTPoly::zero(), den: QTPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        RatQT { num: QTPoly::constant(c), den: QTPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(QTPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPoly::t())
    }

    pub fn monomial(c: BigRat, e_q: i32, e_t: i32) -> Self {
        Self::from_poly(QTPoly::monomial(c, e_q, e_t))
    }

    pub fn from_poly(num: QTPoly) -> Self {
        RatQT { num, den: QTPoly::one() }
    }

    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn numer(&self) -> &QTPoly {
        &self.num
    }

    pub fn denom(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// A Laurent polynomial (denominator is one).
    pub fn as_poly(&self) -> Option<&QTPoly> {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalized(num: QTPoly, den: QTPoly) -> Self {
        Self::normalize_with(num, den, true)
    }

    /// Normalization for a numerator and denominator already known to be
    /// coprime up to monomials.
    fn assembled(num: QTPoly, den: QTPoly) -> Self {
        Self::normalize_with(num, den, false)
    }

    fn normalize_with(num: QTPoly, den: QTPoly, reduce: bool) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (nq, nt) = num.min_exponents().unwrap();
        let (dq, dt) = den.min_exponents().unwrap();
        let mut num = num.shift(-nq, -nt);
        let mut den = den.shift(-dq, -dt);
        let (sq, st) = (nq - dq, nt - dt);
        if reduce && den.as_constant().is_none() && num.as_constant().is_none() {
            let g = poly_gcd(&num, &den);
            if g.as_constant().is_none() {
                num = poly_div_exact(&num, &g).expect("gcd divides numerator");
                den = poly_div_exact(&den, &g).expect("gcd divides denominator");
            }
        }
        let mut scale = den.primitive_scale();
        if den.scale(&scale).leading().unwrap().1.is_negative() {
            scale = -scale;
        }
        if !scale.is_one() {
            num = num.scale(&scale);
            den = den.scale(&scale);
        }
        RatQT { num: num.shift(sq, st), den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        if self.den.as_constant().is_some() || other.den.as_constant().is_some() {
            return Self::assembled(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den));
        }
        // Henrici: with g = gcd(d1, d2), only g can share factors with the
        // new numerator.
        let g = poly_gcd(&self.den, &other.den);
        if g.as_constant().is_some() {
            return Self::assembled(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den));
        }
        let d1 = poly_div_exact(&self.den, &g).expect("gcd divides");
        let d2 = poly_div_exact(&other.den, &g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&other.num.mul(&d1));
        if num.is_zero() {
            return Self::zero();
        }
        let (nq, nt) = num.min_exponents().unwrap();
        let (num, g_rest) = {
            let shifted = num.shift(-nq, -nt);
            let h = poly_gcd(&shifted, &g);
            if h.as_constant().is_some() {
                (num, g)
            } else {
                (poly_div_exact(&shifted, &h).expect("gcd divides").shift(nq, nt), poly_div_exact(&g, &h).expect("gcd divides"))
            }
        };
        Self::assembled(num, d1.mul(&d2).mul(&g_rest))
    }

    pub fn neg(&self) -> Self {
        RatQT { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.as_constant().is_some() && other.den.as_constant().is_some() {
            return Self::assembled(self.num.mul(&other.num), self.den.mul(&other.den));
        }
        // Cross-cancelling reduced inputs leaves a reduced product.
        let (a_num, b_den) = cancel(&self.num, &other.den);
        let (b_num, a_den) = cancel(&other.num, &self.den);
        Self::assembled(a_num.mul(&b_num), a_den.mul(&b_den))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Evaluate at numeric `(q, t)`; a vanishing denominator is a pole.
    pub fn eval(&self, q: &BigRat, t: &BigRat) -> Result<BigRat, AlgebraError> {
        let den = self.den.eval(q, t)?;
        if den.is_zero() {
            return Err(AlgebraError::Pole { denominator: self.den.to_string() });
        }
        Ok(self.num.eval(q, t)? / den)
    }

    /// Substitute numbers for `q` and/or `t`, keeping the rest symbolic.
    pub fn subs(&self, q: Option<&BigRat>, t: Option<&BigRat>) -> Result<RatQT, AlgebraError> {
        let den = self.den.subs(q, t)?;
        if den.is_zero() {
            return Err(AlgebraError::Pole { denominator: self.den.to_string() });
        }
        Ok(Self::normalized(self.num.subs(q, t)?, den))
    }

    /// Positive if the value is a polynomial in q, t (no negative powers)
    /// with integer coefficients.
    pub fn is_integral_polynomial(&self) -> bool {
        match self.as_poly() {
            Some(p) => p.is_polynomial() && p.has_integer_coefficients(),
            None => false,
        }
    }
}

fn cancel(num: &QTPoly, den: &QTPoly) -> (QTPoly, QTPoly) {
    if num.len() <= 1 || den.len() <= 1 {
        return (num.clone(), den.clone());
    }
    let (nq, nt) = num.min_exponents().unwrap();
    let (dq, dt) = den.min_exponents().unwrap();
    let a = num.shift(-nq, -nt);
    let b = den.shift(-dq, -dt);
    let g = poly_gcd(&a, &b);
    if g.as_constant().is_some() {
        return (num.clone(), den.clone());
    }
    (
        poly_div_exact(&a, &g).unwrap().shift(nq, nt),
        poly_div_exact(&b, &g).unwrap().shift(dq, dt),
    )
}

impl PartialEq for RatQT {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.as_poly().is_some() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let den = if self.den.len() > 1 { format!("({})", self.den) } else { self.den.to_string() };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatQT({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;

    fn one_minus(a: i32, b: i32) -> RatQT {
        RatQT::from_poly(QTPoly::one_minus(a, b))
    }

    #[test]
    fn cancels_common_factor() {
        // (1 - q^2 t^2) / (1 - q t) = 1 + q t
        let r = one_minus(2, 2).mul(&one_minus(1, 1).inv().unwrap());
        assert_eq!(r.as_poly().unwrap().to_string(), "1 + q*t");
    }

    #[test]
    fn canonical_denominator() {
        let r = RatQT::new(QTPoly::t().scale(&rat(3, 1)), QTPoly::one_minus(1, 1).scale(&rat(-6, 1)).shift(0, 2))
            .unwrap();
        // 3t / (-6 t^2 (1 - q t)) = -1/(2 t (1 - qt)) = 1/(2 t (q t - 1))
        assert_eq!(r.denom().to_string(), "-1 + q*t");
        assert_eq!(r.numer().to_string(), "1/2*t^-1");
    }

    #[test]
    fn sum_of_fractions_reduces() {
        // 1/(1-t) - t/(1-t) = 1
        let a = one_minus(0, 1).inv().unwrap();
        let b = RatQT::t().mul(&a);
        assert!(a.sub(&b).sub(&RatQT::one()).is_zero());
    }

    #[test]
    fn evaluation_reports_pole() {
        let r = one_minus(1, 1).inv().unwrap();
        let err = r.eval(&rat(2, 1), &rat(1, 2)).unwrap_err();
        assert!(matches!(err, AlgebraError::Pole { .. }));
        assert_eq!(r.eval(&rat(2, 1), &rat(1, 1)).unwrap(), rat(-1, 1));
    }
}
