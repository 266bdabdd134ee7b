//! The defining relations of the Hecke algebra and the product rules of
//! `T_i`, as predicates on a test polynomial.

use super::hecke_t;
use crate::algebra::{AlgebraError, Ctx, Field, Poly};

/// A relation that `T_1, ..., T_{n-1}` satisfy on every polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum HeckeRelation {
    /// `(T_i - t)(T_i + 1) = 0`.
    Quadratic,
    /// `T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}`.
    Braid,
    /// `T_i T_j = T_j T_i` for `|i - j| >= 2`.
    Commute,
    /// `T_i(x_i x_{i+1} A) = x_i x_{i+1} T_i(A)`.
    SymmetricFactor,
    /// `T_i(x_i A) = x_{i+1} T_i(A) + (1 - t) x_{i+1} A`.
    LeftVariable,
    /// `T_i(x_{i+1} A) = x_i T_i(A) - (1 - t) x_{i+1} A`.
    RightVariable,
}

impl HeckeRelation {
    pub const ALL: [HeckeRelation; 6] = [
        HeckeRelation::Quadratic,
        HeckeRelation::Braid,
        HeckeRelation::Commute,
        HeckeRelation::SymmetricFactor,
        HeckeRelation::LeftVariable,
        HeckeRelation::RightVariable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HeckeRelation::Quadratic => "quadratic",
            HeckeRelation::Braid => "braid",
            HeckeRelation::Commute => "commute",
            HeckeRelation::SymmetricFactor => "symmetric-factor",
            HeckeRelation::LeftVariable => "left-variable",
            HeckeRelation::RightVariable => "right-variable",
        }
    }

    /// Second indices `j` the relation is tested with for a given `i`.
    pub fn partners(self, n: usize, i: usize) -> Vec<usize> {
        match self {
            HeckeRelation::Braid if i + 1 < n => vec![i + 1],
            HeckeRelation::Braid => Vec::new(),
            HeckeRelation::Commute => (i + 2..n).collect(),
            _ if i < n => vec![i],
            _ => Vec::new(),
        }
    }

    /// Whether the relation holds on `a` at indices `(i, j)` (one-based).
    pub fn holds<F: Field>(self, a: &Poly<F>, i: usize, j: usize, ctx: &Ctx<F>) -> Result<bool, AlgebraError> {
        let n = a.n_vars();
        let t = |p: &Poly<F>, k: usize| hecke_t(p, k, ctx);
        let (lhs, rhs) = match self {
            HeckeRelation::Quadratic => {
                let ta = t(a, i)?;
                let plus_one = &ta + a;
                let lhs = &t(&plus_one, i)? - &plus_one.scale(&ctx.t);
                (lhs, Poly::zero(n))
            }
            HeckeRelation::Braid => (t(&t(&t(a, i)?, j)?, i)?, t(&t(&t(a, j)?, i)?, j)?),
            HeckeRelation::Commute => (t(&t(a, j)?, i)?, t(&t(a, i)?, j)?),
            HeckeRelation::SymmetricFactor => {
                let both = a.mul_var(i - 1).mul_var(i);
                (t(&both, i)?, t(a, i)?.mul_var(i - 1).mul_var(i))
            }
            HeckeRelation::LeftVariable => {
                let rhs = &t(a, i)?.mul_var(i) + &a.mul_var(i).scale(&ctx.one_minus_t());
                (t(&a.mul_var(i - 1), i)?, rhs)
            }
            HeckeRelation::RightVariable => {
                let rhs = &t(a, i)?.mul_var(i - 1) - &a.mul_var(i).scale(&ctx.one_minus_t());
                (t(&a.mul_var(i), i)?, rhs)
            }
        };
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatQT;

    #[test]
    fn relations_on_a_small_polynomial() {
        let ctx = Ctx::symbolic();
        let mut a: Poly<RatQT> = Poly::var(4, 0);
        a.add_term(vec![0, 2, 1, 0], RatQT::q());
        a.add_term(vec![1, 0, 0, 3], RatQT::constant(crate::algebra::rat(-3, 2)));
        for rel in HeckeRelation::ALL {
            for i in 1..4 {
                for j in rel.partners(4, i) {
                    assert!(rel.holds(&a, i, j, &ctx).unwrap(), "{} at ({i},{j})", rel.name());
                }
            }
        }
    }
}
