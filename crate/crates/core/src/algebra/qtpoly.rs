//! Laurent polynomials in q and t with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::error::AlgebraError;
use super::field::{fmt_rat, BigRat};

/// Exponent pair `(e_q, e_t)`.
pub type QtExp = (i32, i32);

/// Graded-lex comparison on `(e_q, e_t)`: total degree, then the q exponent.
pub fn graded_lex(a: &QtExp, b: &QtExp) -> Ordering {
    (a.0 + a.1, a.0, a.1).cmp(&(b.0 + b.1, b.0, b.1))
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QTPoly {
    terms: BTreeMap<QtExp, BigRat>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRat, e_q: i32, e_t: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e_q, e_t), c);
        }
        QTPoly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(BigRat::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigRat::one(), 0, 1)
    }

    /// `1 - q^a t^b`, the ubiquitous denominator factor.
    pub fn one_minus(e_q: i32, e_t: i32) -> Self {
        let mut p = Self::one();
        p.add_term((e_q, e_t), -BigRat::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (QtExp, BigRat)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QtExp, &BigRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: QtExp) -> BigRat {
        self.terms.get(&e).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn add_term(&mut self, e: QtExp, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// The value when the polynomial is a constant, otherwise `None`.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// `Some((c, e))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(BigRat, QtExp)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn shift(&self, d_q: i32, d_t: i32) -> Self {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + d_q, b + d_t), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Smallest exponents of q and t over all terms.
    pub fn min_exponents(&self) -> Option<QtExp> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), (x, y)| (a.min(*x), b.min(*y))))
    }

    pub fn max_exponents(&self) -> Option<QtExp> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), (x, y)| (a.max(*x), b.max(*y))))
    }

    /// Highest term in graded-lex order.
    pub fn leading(&self) -> Option<(QtExp, &BigRat)> {
        self.terms
            .iter()
            .max_by(|a, b| graded_lex(a.0, b.0))
            .map(|(e, c)| (*e, c))
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|(a, b)| *a >= 0 && *b >= 0)
    }

    /// `(lcm of denominators) / (gcd of numerators)`, the factor that turns
    /// the coefficients into coprime integers.
    pub fn primitive_scale(&self) -> BigRat {
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        if gcd.is_zero() {
            return BigRat::one();
        }
        BigRat::new(lcm, gcd)
    }

    /// Evaluate at numeric `q`, `t`.
    pub fn eval(&self, q: &BigRat, t: &BigRat) -> Result<BigRat, AlgebraError> {
        let mut acc = BigRat::zero();
        for ((a, b), c) in &self.terms {
            acc += c * rat_pow(q, *a)? * rat_pow(t, *b)?;
        }
        Ok(acc)
    }

    /// Substitute numeric values for some of the variables.
    pub fn subs(&self, q: Option<&BigRat>, t: Option<&BigRat>) -> Result<QTPoly, AlgebraError> {
        let mut out = QTPoly::zero();
        for ((a, b), c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = (*a, *b);
            if let Some(qv) = q {
                coeff *= rat_pow(qv, *a)?;
                e.0 = 0;
            }
            if let Some(tv) = t {
                coeff *= rat_pow(tv, *b)?;
                e.1 = 0;
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }
}

pub(crate) fn rat_pow(base: &BigRat, exp: i32) -> Result<BigRat, AlgebraError> {
    if exp < 0 {
        if base.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
    } else {
        Ok(num_traits::pow(base.clone(), exp as usize))
    }
}

fn fmt_power(var: &str, e: i32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

impl fmt::Display for QTPoly {
    /// Terms in ascending graded-lex order, e.g. `1 - q*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&QtExp> = self.terms.keys().collect();
        keys.sort_by(|a, b| graded_lex(a, b));
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if e.0 != 0 {
                factors.push(fmt_power("q", e.0));
            }
            if e.1 != 0 {
                factors.push(fmt_power("t", e.1));
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPoly({self})")
    }
}
