//! Degree-by-degree construction of the `E*` (or `P*`) basis.
//!
//! At degree `d` every basis element `b_kappa` (`x^kappa`, or `m_kappa` in the
//! symmetric case) is first corrected by lower `E*` so that it vanishes at
//! all lower points. The corrected elements are then combined, through the
//! inverse of their value matrix on degree-`d` points, into the degree-`d`
//! interpolation polynomials. The lower correction is a forward
//! substitution because `E*_nu` vanishes at `rho~` whenever
//! `|rho| <= |nu|`, `rho != nu`.

use std::collections::HashMap;

use crate::algebra::linalg::inverse;
use crate::algebra::{AlgebraError, Ctx, Field, Poly};
use crate::comb::{compositions, orbit, partitions, size, tilde_point};

/// Powers of the coordinates of one evaluation point.
pub(super) struct PointPowers<F: Field> {
    point: Vec<F>,
    powers: Vec<Vec<F>>,
}

impl<F: Field> PointPowers<F> {
    pub fn new(point: &[F], max_deg: i32) -> Self {
        let powers = point
            .iter()
            .map(|x| {
                let mut row = vec![F::one()];
                for _ in 0..max_deg {
                    let next = row.last().expect("nonempty").mul(x);
                    row.push(next);
                }
                row
            })
            .collect();
        PointPowers { point: point.to_vec(), powers }
    }

    fn extend(&mut self, max_deg: i32) {
        for (row, x) in self.powers.iter_mut().zip(&self.point) {
            while (row.len() as i32) <= max_deg {
                let next = row.last().expect("nonempty").mul(x);
                row.push(next);
            }
        }
    }

    pub fn eval(&self, p: &Poly<F>) -> F {
        let mut acc = F::zero();
        for (exp, c) in p.terms() {
            let mut term = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&self.powers[i][e as usize]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

pub(super) struct Graded<F: Field> {
    n: usize,
    symmetric: bool,
    keys: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    /// `level_start[d]` is the first index of size `d`; one extra entry ends
    /// the last built level.
    level_start: Vec<usize>,
    polys: Vec<Poly<F>>,
    diag: Vec<F>,
    points: Vec<PointPowers<F>>,
    /// `vals[j][i] = E*_{keys[i]}(keys[j]~)` for all `i` of smaller size.
    vals: Vec<Vec<F>>,
}

impl<F: Field> Graded<F> {
    pub fn new(n: usize, symmetric: bool) -> Self {
        Graded {
            n,
            symmetric,
            keys: Vec::new(),
            index: HashMap::new(),
            level_start: vec![0],
            polys: Vec::new(),
            diag: Vec::new(),
            points: Vec::new(),
            vals: Vec::new(),
        }
    }

    fn built(&self) -> i32 {
        self.level_start.len() as i32 - 2
    }

    fn basis_element(&self, kappa: &[i32]) -> Poly<F> {
        if self.symmetric {
            let mut p = Poly::zero(self.n);
            for m in orbit(kappa) {
                p.add_term(m, F::one());
            }
            p
        } else {
            Poly::monomial(self.n, kappa.to_vec(), F::one())
        }
    }

    fn ensure(&mut self, d: i32, ctx: &Ctx<F>) -> Result<(), AlgebraError> {
        while self.built() < d {
            let next = self.built() + 1;
            self.build_level(next, ctx)?;
        }
        Ok(())
    }

    fn build_level(&mut self, d: i32, ctx: &Ctx<F>) -> Result<(), AlgebraError> {
        let level = if self.symmetric { partitions(d, self.n) } else { compositions(d, self.n) };
        let lower = self.keys.len();
        for p in &mut self.points {
            p.extend(d);
        }
        let mut new_points = Vec::with_capacity(level.len());
        let mut new_vals = Vec::with_capacity(level.len());
        for rho in &level {
            let pp = PointPowers::new(&tilde_point(rho, ctx), d);
            new_vals.push(self.polys.iter().map(|e| pp.eval(e)).collect::<Vec<F>>());
            new_points.push(pp);
        }

        // corrections: r_kappa = b_kappa - sum_rho e[kappa][rho] E*_rho
        let basis: Vec<Poly<F>> = level.iter().map(|k| self.basis_element(k)).collect();
        let mut corr: Vec<Vec<F>> = Vec::with_capacity(level.len());
        let mut w: Vec<Vec<F>> = vec![Vec::with_capacity(level.len()); level.len()];
        for b in &basis {
            let lower_values: Vec<F> = self.points.iter().map(|pp| pp.eval(b)).collect();
            let e = self.forward(&lower_values)?;
            for (row, (pp, vals)) in w.iter_mut().zip(new_points.iter().zip(&new_vals)) {
                let mut v = pp.eval(b);
                for (ei, vi) in e.iter().zip(vals) {
                    if !ei.is_zero() && !vi.is_zero() {
                        v = v.sub(&ei.mul(vi));
                    }
                }
                row.push(v);
            }
            corr.push(e);
        }
        let winv = inverse(&w)?;

        let mut new_polys = Vec::with_capacity(level.len());
        let mut new_diag = Vec::with_capacity(level.len());
        for j in 0..level.len() {
            let pivot = winv[j][j].clone();
            if pivot.is_zero() {
                return Err(AlgebraError::Singular);
            }
            let c: Vec<F> = (0..level.len()).map(|k| winv[k][j].div(&pivot)).collect::<Result<_, _>>()?;
            let mut poly = Poly::zero(self.n);
            let mut lower_coeffs = vec![F::zero(); lower];
            for (k, ck) in c.iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                poly = &poly + &basis[k].scale(ck);
                for (acc, e) in lower_coeffs.iter_mut().zip(&corr[k]) {
                    if !e.is_zero() {
                        *acc = acc.add(&ck.mul(e));
                    }
                }
            }
            for (acc, e) in lower_coeffs.iter().zip(&self.polys) {
                if !acc.is_zero() {
                    poly = &poly - &e.scale(acc);
                }
            }
            new_polys.push(poly);
            new_diag.push(pivot.inv()?);
        }

        for (mu, ((p, dg), (pp, v))) in level.into_iter().zip(new_polys.into_iter().zip(new_diag).zip(new_points.into_iter().zip(new_vals))) {
            self.index.insert(mu.clone(), self.keys.len());
            self.keys.push(mu);
            self.polys.push(p);
            self.diag.push(dg);
            self.points.push(pp);
            self.vals.push(v);
        }
        self.level_start.push(self.keys.len());
        Ok(())
    }

    /// Solve for `E*` coefficients on every built point, from the values of
    /// a polynomial at those points.
    fn forward(&self, values: &[F]) -> Result<Vec<F>, AlgebraError> {
        let mut coeffs: Vec<F> = Vec::with_capacity(values.len());
        for (j, v) in values.iter().enumerate() {
            let mut acc = v.clone();
            for (c, e) in coeffs.iter().zip(&self.vals[j]) {
                if !c.is_zero() && !e.is_zero() {
                    acc = acc.sub(&c.mul(e));
                }
            }
            coeffs.push(acc.div(&self.diag[j])?);
        }
        Ok(coeffs)
    }

    fn locate(&mut self, key: &[i32], ctx: &Ctx<F>) -> Result<usize, AlgebraError> {
        self.ensure(size(key), ctx)?;
        Ok(self.index[key])
    }

    pub fn poly(&mut self, key: &[i32], ctx: &Ctx<F>) -> Result<&Poly<F>, AlgebraError> {
        let i = self.locate(key, ctx)?;
        Ok(&self.polys[i])
    }

    pub fn self_value(&mut self, key: &[i32], ctx: &Ctx<F>) -> Result<F, AlgebraError> {
        let i = self.locate(key, ctx)?;
        Ok(self.diag[i].clone())
    }

    pub fn expand(&mut self, g: &Poly<F>, ctx: &Ctx<F>) -> Result<Vec<(Vec<i32>, F)>, AlgebraError> {
        let d = g.degree().unwrap_or(0);
        self.ensure(d, ctx)?;
        let end = self.level_start[d as usize + 1];
        let values: Vec<F> = self.points[..end].iter().map(|pp| pp.eval(g)).collect();
        let coeffs = self.forward(&values)?;
        Ok(self.keys[..end].iter().cloned().zip(coeffs).collect())
    }
}
