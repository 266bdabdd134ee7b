//! Statistics and weights of signed queue tableaux.

use super::{row_number, QueueTableau};
use crate::algebra::{Ctx, Field, Poly, QTPoly};

/// Which triples count as coinversions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoinvRule {
    /// Every triple in cyclic position, whatever the sign of the top cell.
    AllCells,
    /// Only triples whose top cell is positive.
    PositiveOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauStats {
    pub maj: u32,
    pub coinv: u32,
    pub negative: u32,
    pub empty: u32,
}

impl QueueTableau {
    /// Classic cells strictly above a cell of row `r` or `r'`.
    pub fn leg(&self, i: usize, k: usize) -> i32 {
        self.lambda[i] - row_number(k)
    }

    fn exists(&self, i: usize, k: usize) -> bool {
        k < self.height(i)
    }

    fn unrestricted_cell(&self, i: usize, k: usize) -> bool {
        self.exists(i, k) && !self.restricted(i, k)
    }

    /// Arm of a cell. For a classic cell this is meant for unrestricted
    /// cells; for a primed cell it follows the cell above when that cell is
    /// unrestricted.
    pub fn arm(&self, i: usize, k: usize) -> i32 {
        let li = self.lambda[i];
        if k.is_multiple_of(2) {
            let shorter = (i + 1..self.n).filter(|&c| self.lambda[c] < li && self.exists(c, k - 1)).count();
            let equal = (i + 1..self.n).filter(|&c| self.lambda[c] == li && self.unrestricted_cell(c, k)).count();
            return (shorter + equal) as i32;
        }
        if self.unrestricted_cell(i, k + 1) {
            return self.arm(i, k + 1);
        }
        let right = (i + 1..self.n).filter(|&c| self.exists(c, k - 1)).count();
        let left = (0..i).filter(|&c| self.lambda[c] == li && self.unrestricted_cell(c, k + 1)).count();
        (right + left) as i32
    }

    pub fn maj(&self) -> u32 {
        let mut total = 0;
        for i in 0..self.n {
            for k in (2..self.height(i)).step_by(2) {
                if self.columns[i][k - 1].abs() < self.columns[i][k] {
                    total += (self.leg(i, k) + 1) as u32;
                }
            }
        }
        total
    }

    pub fn coinv_with(&self, rule: CoinvRule) -> u32 {
        let mut total = 0;
        for i in 0..self.n {
            for k in 1..self.height(i) {
                let x = self.columns[i][k];
                if rule == CoinvRule::PositiveOnly && x < 0 {
                    continue;
                }
                let (a, b) = (x.abs(), self.columns[i][k - 1].abs());
                for c_col in i + 1..self.n {
                    if !self.exists(c_col, k - 1) {
                        continue;
                    }
                    let counts = self.lambda[c_col] < self.lambda[i]
                        || (self.lambda[c_col] == self.lambda[i] && self.unrestricted_cell(c_col, k));
                    if !counts {
                        continue;
                    }
                    let c = self.columns[c_col][k - 1].abs();
                    if (a < c && c < b) || (b < a && a < c) || (c < b && b < a) {
                        total += 1;
                    }
                }
            }
        }
        total
    }

    /// Coinversions with [`CoinvRule::AllCells`], the count matching the
    /// skipped balls of signed layers.
    pub fn coinv(&self) -> u32 {
        self.coinv_with(CoinvRule::AllCells)
    }

    pub fn negative(&self) -> u32 {
        let mut total = 0;
        for i in 0..self.n {
            for k in (1..self.height(i)).step_by(2) {
                if self.columns[i][k] < 0 && !self.restricted(i, k) {
                    total += 1;
                }
            }
        }
        total
    }

    pub fn empty(&self) -> u32 {
        let mut total = 0;
        for i in 0..self.n {
            for k in (1..self.height(i)).step_by(2) {
                let (a, c) = (self.columns[i][k].abs(), self.columns[i][k - 1]);
                for b in a + 1..c {
                    if !self.row(k - 1).any(|(_, w)| w == b) {
                        total += 1;
                    }
                }
            }
        }
        total
    }

    pub fn stats_with(&self, rule: CoinvRule) -> TableauStats {
        TableauStats { maj: self.maj(), coinv: self.coinv_with(rule), negative: self.negative(), empty: self.empty() }
    }

    fn sign_and_powers<F: Field>(&self, rule: CoinvRule, ctx: &Ctx<F>) -> F {
        let s = self.stats_with(rule);
        let w = ctx.q_pow(s.maj as i64).mul(&ctx.t_pow((s.coinv + s.empty) as i64));
        if s.negative % 2 == 1 {
            w.neg()
        } else {
            w
        }
    }

    /// `wt(phi)`.
    pub fn weight<F: Field>(&self, ctx: &Ctx<F>) -> F {
        self.weight_with(CoinvRule::AllCells, ctx)
    }

    pub fn weight_with<F: Field>(&self, rule: CoinvRule, ctx: &Ctx<F>) -> F {
        let mut w = self.sign_and_powers(rule, ctx);
        for i in 0..self.n {
            for k in 1..self.height(i) {
                if self.restricted(i, k) {
                    continue;
                }
                if k % 2 == 0 {
                    let den = ctx.one_minus((self.leg(i, k) + 1) as i64, (self.arm(i, k) + 1) as i64);
                    w = w.mul(&ctx.one_minus_t()).div(&den).expect("tableau weight denominator vanishes");
                } else {
                    w = w.mul(&ctx.one_minus_t());
                }
            }
        }
        w
    }

    /// `x^phi` as `(coefficient, exponents)`.
    pub fn monomial<F: Field>(&self, ctx: &Ctx<F>) -> (F, Vec<i32>) {
        let mut exp = vec![0; self.n];
        let mut c = F::one();
        for col in &self.columns {
            for (k, &v) in col.iter().enumerate().skip(1).step_by(2) {
                if v > 0 {
                    exp[v as usize - 1] += 1;
                } else {
                    let r = row_number(k) as i64;
                    c = c.mul(&ctx.q_pow(r - 1).mul(&ctx.t_pow(1 - self.n as i64)).neg());
                }
            }
        }
        (c, exp)
    }

    /// `wt(phi) x^phi` as a polynomial.
    pub fn term<F: Field>(&self, ctx: &Ctx<F>) -> Poly<F> {
        let (c, exp) = self.monomial(ctx);
        Poly::monomial(self.n, exp, c.mul(&self.weight(ctx)))
    }

    /// `hook` read off this filling: the product over primed cells of
    /// `1 - q^leg t^{arm + 1}`.
    pub fn hook(&self) -> QTPoly {
        let mut h = QTPoly::one();
        for i in 0..self.n {
            for k in (1..self.height(i)).step_by(2) {
                h = h.mul(&QTPoly::one_minus(self.leg(i, k), self.arm(i, k) + 1));
            }
        }
        h
    }

    /// `hook * wt(phi)`, with the denominators already cancelled.
    pub fn integral_weight<F: Field>(&self, ctx: &Ctx<F>) -> F {
        let mut w = self.sign_and_powers(CoinvRule::AllCells, ctx);
        for i in 0..self.n {
            for k in (1..self.height(i)).step_by(2) {
                if self.unrestricted_cell(i, k + 1) {
                    w = w.mul(&ctx.one_minus_t());
                } else {
                    w = w.mul(&ctx.one_minus(self.leg(i, k) as i64, (self.arm(i, k) + 1) as i64));
                }
                if !self.restricted(i, k) {
                    w = w.mul(&ctx.one_minus_t());
                }
            }
        }
        w
    }
}

/// `prod_{cells (i, r) of lambda} (1 - q^{lambda_i - r} t^{#{k > i : lambda_k >= r} + 1})`.
pub fn classical_hook(lambda: &[i32]) -> QTPoly {
    let mut h = QTPoly::one();
    for (i, &li) in lambda.iter().enumerate() {
        for r in 1..=li {
            let below = lambda[i + 1..].iter().filter(|&&l| l >= r).count() as i32;
            h = h.mul(&QTPoly::one_minus(li - r, below + 1));
        }
    }
    h
}

/// `hook_lambda`, from an arbitrary filling of the diagram.
pub fn hook_product(lambda: &[i32]) -> QTPoly {
    let mut found = None;
    super::for_each_tableau(lambda, None, &mut |t| {
        if found.is_none() {
            found = Some(t.hook());
        }
    });
    found.unwrap_or_else(QTPoly::one)
}
