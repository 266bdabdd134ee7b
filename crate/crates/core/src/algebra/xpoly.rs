//! Sparse Laurent polynomials in `x_1..x_n` over a [`Field`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ctx::Ctx;
use super::error::AlgebraError;
use super::field::{BigRat, Field};
use super::ratqt::RatQT;

/// Exponent vector ordered graded-lex: total degree first, then lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<i32>);

impl Mono {
    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    n_vars: usize,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(n_vars: usize) -> Self {
        Poly { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: F) -> Self {
        Self::monomial(n_vars, vec![0; n_vars], c)
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, F::one())
    }

    /// The variable `x_{index+1}` (zero-based index).
    pub fn var(n_vars: usize, index: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[index] = 1;
        Self::monomial(n_vars, e, F::one())
    }

    pub fn monomial(n_vars: usize, exp: Vec<i32>, c: F) -> Self {
        assert_eq!(exp.len(), n_vars, "exponent length");
        let mut p = Self::zero(n_vars);
        p.add_term(exp, c);
        p
    }

    /// `x_{index+1} - c`.
    pub fn linear(n_vars: usize, index: usize, c: F) -> Self {
        let mut p = Self::var(n_vars, index);
        p.add_term(vec![0; n_vars], c.neg());
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i32>, &F)> {
        self.terms.iter().map(|(m, c)| (&m.0, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i32]) -> F {
        self.terms.get(&Mono(exp.to_vec())).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i32>, c: F) {
        debug_assert_eq!(exp.len(), self.n_vars);
        if c.is_zero() {
            return;
        }
        let key = Mono(exp);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    fn check_dims(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.n_vars != other.n_vars {
            return Err(AlgebraError::DimensionMismatch { left: self.n_vars, right: other.n_vars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.n_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e: Vec<i32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &[i32]) -> Self {
        Poly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (Mono(m.0.iter().zip(exp).map(|(a, b)| a + b).collect()), v.clone()))
                .collect(),
        }
    }

    pub fn mul_var(&self, index: usize) -> Self {
        let mut e = vec![0; self.n_vars];
        e[index] = 1;
        self.mul_monomial(&e)
    }

    /// Highest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().map(Mono::degree)
    }

    /// Evaluate at a point of the field.
    pub fn evaluate(&self, point: &[F]) -> Result<F, AlgebraError> {
        if point.len() != self.n_vars {
            return Err(AlgebraError::DimensionMismatch { left: self.n_vars, right: point.len() });
        }
        let mut powers: Vec<BTreeMap<i32, F>> = vec![BTreeMap::new(); self.n_vars];
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let value = match powers[i].get(&e) {
                    Some(v) => v.clone(),
                    None => {
                        let v = point[i].pow(e as i64)?;
                        powers[i].insert(e, v.clone());
                        v
                    }
                };
                term = term.mul(&value);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// The degree-`d` part with `d` the top degree.
    pub fn top_homogeneous(&self) -> Result<Self, AlgebraError> {
        let d = self.degree().ok_or(AlgebraError::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    pub fn homogeneous_part(&self, d: i32) -> Self {
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Apply `s_i`: swap `x_i` and `x_{i+1}` (one-based `i`).
    pub fn swap(&self, i: usize) -> Self {
        self.map_exponents(|e| e.swap(i - 1, i))
    }

    /// Apply a permutation given in one-line notation (one-based values):
    /// `x_j -> x_{sigma(j)}`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        let n = self.n_vars;
        self.map_exponents(|e| {
            let mut out = vec![0; n];
            for (j, &v) in e.iter().enumerate() {
                out[sigma[j] - 1] = v;
            }
            *e = out;
        })
    }

    fn map_exponents(&self, f: impl Fn(&mut Vec<i32>)) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            f(&mut e);
            out.add_term(e, c.clone());
        }
        out
    }

    /// `(p - s_i p) / (x_i - x_{i+1})` (one-based `i`); the remainder is
    /// checked to be zero.
    pub fn divided_difference(&self, i: usize) -> Result<Self, AlgebraError> {
        if i == 0 || i >= self.n_vars {
            return Err(AlgebraError::IndexOutOfRange { index: i, n_vars: self.n_vars });
        }
        let (a_idx, b_idx) = (i - 1, i);
        let mut quot = Self::zero(self.n_vars);
        for (m, c) in &self.terms {
            let (a, b) = (m.0[a_idx], m.0[b_idx]);
            if a == b {
                continue;
            }
            // x_i^a x_{i+1}^b - x_i^b x_{i+1}^a = (x_i x_{i+1})^lo (x_i^k - x_{i+1}^k) up to sign
            let (lo, k, coeff) = if a > b { (b, a - b, c.clone()) } else { (a, b - a, c.neg()) };
            for j in 0..k {
                let mut e = m.0.clone();
                e[a_idx] = lo + j;
                e[b_idx] = lo + k - 1 - j;
                quot.add_term(e, coeff.clone());
            }
        }
        let numerator = self.checked_sub(&self.swap(i))?;
        let divisor = Self::var(self.n_vars, a_idx).checked_sub(&Self::var(self.n_vars, b_idx))?;
        let remainder = numerator.checked_sub(&quot.checked_mul(&divisor)?)?;
        if !remainder.is_zero() {
            return Err(AlgebraError::InexactDivision { remainder: remainder.to_string() });
        }
        Ok(quot)
    }

    /// Divide by `x_{index+1} - root`: returns `(quotient, remainder)` where
    /// the remainder no longer involves that variable. Requires nonnegative
    /// exponents in that variable.
    pub fn divide_linear(&self, index: usize, root: &F) -> (Self, Self) {
        // Group by the remaining exponents, then synthetic division in x_index.
        let mut groups: BTreeMap<Vec<i32>, BTreeMap<i32, F>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.0.clone();
            let e = rest[index];
            assert!(e >= 0, "negative exponent in divide_linear");
            rest[index] = 0;
            groups.entry(rest).or_default().insert(e, c.clone());
        }
        let mut quot = Self::zero(self.n_vars);
        let mut rem = Self::zero(self.n_vars);
        for (rest, coeffs) in groups {
            let top = *coeffs.keys().next_back().unwrap();
            let mut carry = F::zero();
            for e in (0..=top).rev() {
                let c = coeffs.get(&e).cloned().unwrap_or_else(F::zero).add(&carry);
                if e == 0 {
                    rem.add_term(rest.clone(), c);
                } else {
                    let mut exp = rest.clone();
                    exp[index] = e - 1;
                    carry = c.mul(root);
                    quot.add_term(exp, c);
                }
            }
        }
        (quot, rem)
    }

    /// `p(c x_1, ..., c x_n)` for a scalar `c`.
    pub fn scale_variables(&self, c: &F) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(self.n_vars);
        let mut cache: BTreeMap<i32, F> = BTreeMap::new();
        for (m, v) in &self.terms {
            let d = m.degree();
            let factor = match cache.get(&d) {
                Some(f) => f.clone(),
                None => {
                    let f = c.pow(d as i64)?;
                    cache.insert(d, f.clone());
                    f
                }
            };
            out.add_term(m.0.clone(), v.mul(&factor));
        }
        Ok(out)
    }

    /// `q^d p(x / q)`.
    pub fn hat(&self, d: i32, ctx: &Ctx<F>) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (m, v) in &self.terms {
            out.add_term(m.0.clone(), v.mul(&ctx.q_pow((d - m.degree()) as i64)));
        }
        out
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> Result<G, AlgebraError>) -> Result<Poly<G>, AlgebraError> {
        let mut out = Poly::zero(self.n_vars);
        for (m, c) in &self.terms {
            out.add_term(m.0.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Lift a polynomial with rational coefficients.
    pub fn from_rational(p: &Poly<BigRat>) -> Self {
        let mut out = Self::zero(p.n_vars);
        for (m, c) in &p.terms {
            out.add_term(m.0.clone(), F::from_rat(c));
        }
        out
    }
}

impl Poly<RatQT> {
    /// Substitute numeric `q0, t0`; a vanishing denominator is reported as a
    /// pole naming it.
    pub fn specialize(&self, q0: &BigRat, t0: &BigRat) -> Result<Poly<BigRat>, AlgebraError> {
        self.map_coeffs(|c| c.eval(q0, t0))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<F: Field> $tr<&Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            /// Panics on a variable-count mismatch; see the `checked_` variant.
            fn $method(self, rhs: &Poly<F>) -> Poly<F> {
                self.$checked(rhs).expect("polynomial dimension mismatch")
            }
        }
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    /// Canonical text: terms in descending graded-lex order, each as
    /// `(coeff)*x1^a*x2^b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.n_vars)
    }
}
