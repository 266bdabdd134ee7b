//! A single square linear system for one interpolation polynomial. Slow,
//! but independent of the graded construction; used as a cross-check.

use crate::algebra::linalg::solve;
use crate::algebra::{AlgebraError, Ctx, Field, Poly};
use crate::comb::{orbit, partitions_up_to, compositions_up_to, size, tilde_point};

pub struct VanishingSystem<F: Field> {
    pub degree: i32,
    /// Exponent vectors, or partitions in the symmetric case.
    pub basis: Vec<Vec<i32>>,
    /// `(point, required value)`; the last row is the normalization.
    pub constraints: Vec<(Vec<F>, F)>,
    symmetric: bool,
    target: Vec<i32>,
}

impl<F: Field> VanishingSystem<F> {
    /// The system defining `E*_mu`.
    pub fn nonsymmetric(mu: &[i32], ctx: &Ctx<F>) -> Self {
        Self::build(mu, false, ctx)
    }

    /// The system defining `P*_lambda`.
    pub fn symmetric(lambda: &[i32], ctx: &Ctx<F>) -> Self {
        Self::build(lambda, true, ctx)
    }

    fn build(target: &[i32], symmetric: bool, ctx: &Ctx<F>) -> Self {
        let n = target.len();
        let degree = size(target);
        let basis = if symmetric { partitions_up_to(degree, n) } else { compositions_up_to(degree, n) };
        let mut constraints: Vec<(Vec<F>, F)> = basis
            .iter()
            .filter(|nu| nu.as_slice() != target)
            .map(|nu| (tilde_point(nu, ctx), F::zero()))
            .collect();
        constraints.push((Vec::new(), F::one()));
        VanishingSystem { degree, basis, constraints, symmetric, target: target.to_vec() }
    }

    fn basis_poly(&self, kappa: &[i32]) -> Poly<F> {
        let n = self.target.len();
        if self.symmetric {
            let mut p = Poly::zero(n);
            for m in orbit(kappa) {
                p.add_term(m, F::one());
            }
            p
        } else {
            Poly::monomial(n, kappa.to_vec(), F::one())
        }
    }

    pub fn solve(&self) -> Result<Poly<F>, AlgebraError> {
        let basis_polys: Vec<Poly<F>> = self.basis.iter().map(|k| self.basis_poly(k)).collect();
        let mut matrix = Vec::with_capacity(self.constraints.len());
        let mut rhs = Vec::with_capacity(self.constraints.len());
        for (point, value) in &self.constraints {
            let row = if point.is_empty() {
                self.basis.iter().map(|k| if *k == self.target { F::one() } else { F::zero() }).collect()
            } else {
                basis_polys.iter().map(|b| b.evaluate(point)).collect::<Result<Vec<F>, _>>()?
            };
            matrix.push(row);
            rhs.push(value.clone());
        }
        let coeffs = solve(&matrix, &rhs)?;
        let mut out = Poly::zero(self.target.len());
        for (b, c) in basis_polys.iter().zip(coeffs) {
            if !c.is_zero() {
                out = &out + &b.scale(&c);
            }
        }
        Ok(out)
    }
}
