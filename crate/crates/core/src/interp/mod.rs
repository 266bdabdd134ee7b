//! Interpolation polynomials: graded vanishing solvers for `E*_mu` and
//! `P*_lambda`, the Hecke-built `f*_mu`, and the recursions and
//! specializations relating them.

mod graded;
mod direct;
mod checks;
mod recursion;
mod special;

pub use checks::*;
pub use direct::VanishingSystem;
pub use recursion::*;
pub use special::*;

use std::collections::HashMap;
use std::sync::Mutex;

use thiserror::Error;

use crate::algebra::{AlgebraError, Ctx, Field, Poly};
use crate::comb::{is_composition, is_partition, reduced_word, shortest_perm, sort_partition, swap};
use crate::hecke::{hecke_t, hecke_word};
use graded::Graded;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InterpError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected {expected} parts, got {got}")]
    Length { expected: usize, got: usize },
    #[error("{0:?} is not a composition")]
    NotComposition(Vec<i32>),
    #[error("{0:?} is not a partition")]
    NotPartition(Vec<i32>),
    #[error("{0:?} is not packed")]
    NotPacked(Vec<i32>),
}

/// How `E*_lambda` for partitions is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Graded vanishing solves; `E*_mu` for every composition.
    Solve,
    /// The packed recursion from smaller `f-hat*`, with compositions reached
    /// by the shape-permuting operators. Avoids linear algebra, so it is the
    /// practical route for symbolic coefficients.
    Recursive,
}

/// Cached interpolation data for a fixed number of variables and a fixed
/// coefficient context. All methods take `&self`; caches are behind locks.
pub struct Interpolator<F: Field> {
    ctx: Ctx<F>,
    n: usize,
    strategy: Strategy,
    e_cache: Mutex<HashMap<Vec<i32>, Poly<F>>>,
    nonsym: Mutex<Graded<F>>,
    sym: Mutex<Graded<F>>,
    f_cache: Mutex<HashMap<Vec<i32>, Poly<F>>>,
}

impl<F: Field> Interpolator<F> {
    pub fn new(n: usize, ctx: Ctx<F>) -> Self {
        Self::with_strategy(n, ctx, Strategy::Solve)
    }

    /// An interpolator using [`Strategy::Recursive`].
    pub fn recursive(n: usize, ctx: Ctx<F>) -> Self {
        Self::with_strategy(n, ctx, Strategy::Recursive)
    }

    pub fn with_strategy(n: usize, ctx: Ctx<F>, strategy: Strategy) -> Self {
        Interpolator {
            strategy,
            e_cache: Mutex::new(HashMap::new()),
            nonsym: Mutex::new(Graded::new(n, false)),
            sym: Mutex::new(Graded::new(n, true)),
            f_cache: Mutex::new(HashMap::new()),
            ctx,
            n,
        }
    }

    pub fn ctx(&self) -> &Ctx<F> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, mu: &[i32]) -> Result<(), InterpError> {
        if mu.len() != self.n {
            return Err(InterpError::Length { expected: self.n, got: mu.len() });
        }
        if !is_composition(mu) {
            return Err(InterpError::NotComposition(mu.to_vec()));
        }
        Ok(())
    }

    /// `E*_mu`: degree `|mu|`, `[x^mu] = 1`, vanishing at every other
    /// `nu~` with `|nu| <= |mu|`.
    pub fn e_star(&self, mu: &[i32]) -> Result<Poly<F>, InterpError> {
        self.check(mu)?;
        if self.strategy == Strategy::Solve {
            let mut g = self.nonsym.lock().expect("cache lock");
            return Ok(g.poly(mu, &self.ctx)?.clone());
        }
        if let Some(p) = self.e_cache.lock().expect("cache lock").get(mu) {
            return Ok(p.clone());
        }
        let out = match (1..self.n).find(|&i| mu[i - 1] < mu[i]) {
            None if mu.iter().all(|&p| p == 0) => Poly::one(self.n),
            None => packed_recursion_rhs(self, mu)?,
            Some(i) => {
                let nu = swap(mu, i);
                crate::hecke::shape_permute(&self.e_star(&nu)?, &nu, i, &self.ctx)?
            }
        };
        self.e_cache.lock().expect("cache lock").insert(mu.to_vec(), out.clone());
        Ok(out)
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// `P*_lambda`: the symmetric analogue with `[m_lambda] = 1` and
    /// vanishing at partitions.
    pub fn p_star(&self, lambda: &[i32]) -> Result<Poly<F>, InterpError> {
        self.check(lambda)?;
        if !is_partition(lambda) {
            return Err(InterpError::NotPartition(lambda.to_vec()));
        }
        if self.strategy == Strategy::Recursive {
            let mut sum = Poly::zero(self.n);
            for mu in crate::comb::orbit(lambda) {
                sum = &sum + &self.f_star(&mu)?;
            }
            return Ok(sum);
        }
        let mut g = self.sym.lock().expect("cache lock");
        Ok(g.poly(lambda, &self.ctx)?.clone())
    }

    /// `E*_mu(mu~)`, nonzero for every `mu`.
    pub fn self_value(&self, mu: &[i32]) -> Result<F, InterpError> {
        self.check(mu)?;
        let mut g = self.nonsym.lock().expect("cache lock");
        Ok(g.self_value(mu, &self.ctx)?)
    }

    /// Coefficients of `g` in the `E*` basis, in increasing size. Zero
    /// coefficients are included.
    pub fn expand(&self, g: &Poly<F>) -> Result<Vec<(Vec<i32>, F)>, InterpError> {
        let mut cache = self.nonsym.lock().expect("cache lock");
        Ok(cache.expand(g, &self.ctx)?)
    }

    /// Coefficients of a symmetric `g` in the `P*` basis.
    pub fn expand_symmetric(&self, g: &Poly<F>) -> Result<Vec<(Vec<i32>, F)>, InterpError> {
        let mut cache = self.sym.lock().expect("cache lock");
        Ok(cache.expand(g, &self.ctx)?)
    }

    /// `f*_mu`, built from `E*_lambda` one transposition at a time:
    /// `f*_mu = T_i f*_{s_i mu}` at the leftmost ascent `i` of `mu`.
    pub fn f_star(&self, mu: &[i32]) -> Result<Poly<F>, InterpError> {
        self.check(mu)?;
        if let Some(p) = self.f_cache.lock().expect("cache lock").get(mu) {
            return Ok(p.clone());
        }
        let out = match (1..self.n).find(|&i| mu[i - 1] < mu[i]) {
            None => self.e_star(mu)?,
            Some(i) => hecke_t(&self.f_star(&swap(mu, i))?, i, &self.ctx)?,
        };
        self.f_cache.lock().expect("cache lock").insert(mu.to_vec(), out.clone());
        Ok(out)
    }

    /// `f*_mu = T_{sigma_mu} E*_lambda` with the reduced word applied
    /// directly; used to cross-check [`Self::f_star`].
    pub fn f_star_word(&self, mu: &[i32]) -> Result<Poly<F>, InterpError> {
        self.check(mu)?;
        let lambda = sort_partition(mu);
        let sigma = shortest_perm(mu);
        let word = reduced_word(&sigma);
        Ok(hecke_word(&self.e_star(&lambda)?, &word, &self.ctx)?)
    }

    /// `E_mu`, the top homogeneous part of `E*_mu`.
    pub fn e_homogeneous(&self, mu: &[i32]) -> Result<Poly<F>, InterpError> {
        Ok(self.e_star(mu)?.top_homogeneous()?)
    }

    /// `f_mu`, the top homogeneous part of `f*_mu`.
    pub fn f_homogeneous(&self, mu: &[i32]) -> Result<Poly<F>, InterpError> {
        Ok(self.f_star(mu)?.top_homogeneous()?)
    }

    /// `P_lambda`, the top homogeneous part of `P*_lambda`.
    pub fn p_homogeneous(&self, lambda: &[i32]) -> Result<Poly<F>, InterpError> {
        Ok(self.p_star(lambda)?.top_homogeneous()?)
    }

    /// `q^{|nu|} f*_nu(x / q)`.
    pub fn f_hat_star(&self, nu: &[i32]) -> Result<Poly<F>, InterpError> {
        Ok(self.f_star(nu)?.hat(crate::comb::size(nu), &self.ctx))
    }
}
