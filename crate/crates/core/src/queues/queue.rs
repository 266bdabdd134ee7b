//! Multiline queues and signed multiline queues as row/link data.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::layer::{columns_admissible, layer_stats, layer_weight, needy_violation, LayerKind, PairingOrder, PairingStat};
use crate::algebra::{Ctx, Field, Poly};
use crate::comb::{sort_partition, truncate_below};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QueueFamily {
    /// Rows `1, ..., L`, classic layers only.
    Classic,
    /// Rows `1, 1', ..., L, L'`, alternating signed and classic layers.
    Signed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueueError {
    #[error("row {row} has content {found:?}, expected a rearrangement of {expected:?}")]
    RowContent { row: String, found: Vec<i32>, expected: Vec<i32> },
    #[error("forbidden column pattern between rows {upper} and {lower}")]
    Columns { upper: String, lower: String },
    #[error("bad link from row {row}, column {col}: {reason}")]
    Link { row: String, col: usize, reason: &'static str },
    #[error("needy rule violated in row {row}: column {upper} takes the ball under column {lower}")]
    Needy { row: String, upper: usize, lower: usize },
    #[error("ragged rows")]
    Shape,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Queue {
    pub family: QueueFamily,
    pub n: usize,
    /// Rows from the bottom: `1, 1', 2, 2', ...` or `1, 2, ...`. Entries are
    /// labels (signed in primed rows), `0` for an empty cell.
    pub rows: Vec<Vec<i32>>,
    /// `links[k][j]` is the column of `rows[k - 1]` paired with the ball in
    /// column `j` of `rows[k]`; `links[0]` is empty.
    pub links: Vec<Vec<Option<usize>>>,
}

/// A strand: one ball per row from its top row down to row 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub label: i32,
    pub top_row: usize,
    /// `cols[k]` is the column in `rows[k]`; only `k <= top_row` are set.
    pub cols: Vec<usize>,
}

impl Queue {
    pub fn type_comp(&self) -> &[i32] {
        &self.rows[0]
    }

    pub fn lambda(&self) -> Vec<i32> {
        sort_partition(&self.rows[0])
    }

    /// Human row name of `rows[k]`.
    pub fn row_name(&self, k: usize) -> String {
        match self.family {
            QueueFamily::Classic => (k + 1).to_string(),
            QueueFamily::Signed if k.is_multiple_of(2) => (k / 2 + 1).to_string(),
            QueueFamily::Signed => format!("{}'", k / 2 + 1),
        }
    }

    pub fn is_primed(&self, k: usize) -> bool {
        self.family == QueueFamily::Signed && k % 2 == 1
    }

    /// The numeric row `r` of `rows[k]` (so `r'` gives `r`).
    pub fn row_index(&self, k: usize) -> i32 {
        match self.family {
            QueueFamily::Classic => k as i32 + 1,
            QueueFamily::Signed => (k / 2) as i32 + 1,
        }
    }

    /// Kind of the layer from `rows[k]` down to `rows[k - 1]`.
    pub fn layer_kind(&self, k: usize) -> LayerKind {
        let r = self.row_index(k);
        if self.is_primed(k) {
            LayerKind::Signed { row: r }
        } else {
            LayerKind::Classic { row: r }
        }
    }

    /// Expected multiset (absolute values, sorted) for `rows[k]`.
    pub fn expected_content(family: QueueFamily, lambda: &[i32], k: usize) -> Vec<i32> {
        let r = match family {
            QueueFamily::Classic => k as i32 + 1,
            QueueFamily::Signed => (k / 2) as i32 + 1,
        };
        sort_partition(&truncate_below(lambda, r))
    }

    pub fn strands(&self) -> Vec<Strand> {
        let rows = self.rows.len();
        let mut strands = Vec::new();
        for top in (0..rows).rev() {
            for j in 0..self.n {
                if self.rows[top][j] == 0 {
                    continue;
                }
                let is_target = top + 1 < rows && self.links[top + 1].contains(&Some(j));
                if is_target {
                    continue;
                }
                let mut cols = vec![0; top + 1];
                let mut c = j;
                cols[top] = c;
                for k in (1..=top).rev() {
                    c = self.links[k][c].expect("linked ball");
                    cols[k - 1] = c;
                }
                strands.push(Strand { label: self.rows[top][j].abs(), top_row: top, cols });
            }
        }
        // longer strands first; ties broken by the top ball further right
        strands.sort_by(|a, b| b.label.cmp(&a.label).then(b.top_row.cmp(&a.top_row)).then(b.cols[b.top_row].cmp(&a.cols[a.top_row])));
        strands
    }

    /// `rank[k][j]`: position of the strand through `rows[k]`, column `j`.
    pub fn strand_ranks(&self) -> Vec<Vec<usize>> {
        let mut rank = vec![vec![usize::MAX; self.n]; self.rows.len()];
        for (idx, s) in self.strands().iter().enumerate() {
            for (k, &c) in s.cols.iter().enumerate() {
                rank[k][c] = idx;
            }
        }
        rank
    }

    /// Statistics of the layer `rows[k] -> rows[k - 1]`.
    pub fn layer_stats(&self, k: usize, order: PairingOrder) -> Vec<PairingStat> {
        let ranks = if order == PairingOrder::Strands { self.strand_ranks() } else { Vec::new() };
        let rank = |j: usize| if ranks.is_empty() { 0 } else { ranks[k][j] };
        layer_stats(&self.rows[k], &self.rows[k - 1], &self.links[k], order, &rank)
    }

    /// Product of ball weights, as `(coefficient, exponent vector)`.
    pub fn ball_weight<F: Field>(&self, ctx: &Ctx<F>) -> (F, Vec<i32>) {
        let n = self.n;
        let mut exp = vec![0; n];
        let mut c = F::one();
        for (k, row) in self.rows.iter().enumerate() {
            let counts = match self.family {
                QueueFamily::Classic => true,
                QueueFamily::Signed => k % 2 == 1,
            };
            if !counts {
                continue;
            }
            let r = self.row_index(k) as i64;
            for (j, &label) in row.iter().enumerate() {
                if label > 0 {
                    exp[j] += 1;
                } else if label < 0 {
                    c = c.mul(&ctx.q_pow(r - 1).mul(&ctx.t_pow(-(n as i64 - 1))).neg());
                }
            }
        }
        (c, exp)
    }

    /// Pairing weights of all layers.
    pub fn pairing_weight<F: Field>(&self, ctx: &Ctx<F>, order: PairingOrder) -> F {
        let mut w = F::one();
        for k in 1..self.rows.len() {
            w = w.mul(&layer_weight(&self.layer_stats(k, order), self.layer_kind(k), ctx));
        }
        w
    }

    /// Full weight as a single term.
    pub fn weight<F: Field>(&self, ctx: &Ctx<F>, order: PairingOrder) -> (F, Vec<i32>) {
        let (c, exp) = self.ball_weight(ctx);
        (c.mul(&self.pairing_weight(ctx, order)), exp)
    }

    pub fn weight_poly<F: Field>(&self, ctx: &Ctx<F>, order: PairingOrder) -> Poly<F> {
        let (c, exp) = self.weight(ctx, order);
        Poly::monomial(self.n, exp, c)
    }

    /// Check every rule of the family.
    pub fn validate(&self) -> Result<(), QueueError> {
        if self.rows.is_empty() || self.rows.iter().any(|r| r.len() != self.n) || self.links.len() != self.rows.len() {
            return Err(QueueError::Shape);
        }
        let lambda = self.lambda();
        let top = lambda.first().copied().unwrap_or(0) as usize;
        let expected_rows = match self.family {
            QueueFamily::Classic => top.max(1),
            QueueFamily::Signed => (2 * top).max(1),
        };
        if self.rows.len() != expected_rows {
            return Err(QueueError::Shape);
        }
        for (k, row) in self.rows.iter().enumerate() {
            let found = sort_partition(&row.iter().map(|v| v.abs()).collect::<Vec<_>>());
            let expected = Self::expected_content(self.family, &lambda, k);
            if found != expected || (!self.is_primed(k) && row.iter().any(|&v| v < 0)) {
                return Err(QueueError::RowContent { row: self.row_name(k), found: row.clone(), expected });
            }
        }
        for k in 1..self.rows.len() {
            let (upper, lower, links) = (&self.rows[k], &self.rows[k - 1], &self.links[k]);
            let kind = self.layer_kind(k);
            let err = |col, reason| QueueError::Link { row: self.row_name(k), col, reason };
            if !columns_admissible(upper, lower, kind) {
                return Err(QueueError::Columns { upper: self.row_name(k), lower: self.row_name(k - 1) });
            }
            let mut hit = vec![false; self.n];
            for j in 0..self.n {
                match (upper[j], links[j]) {
                    (0, None) => {}
                    (0, Some(_)) => return Err(err(j, "link from an empty cell")),
                    (_, None) => return Err(err(j, "unlinked ball")),
                    (a, Some(c)) => {
                        if c >= self.n || lower[c].abs() != a.abs() {
                            return Err(err(j, "labels differ"));
                        }
                        if hit[c] {
                            return Err(err(j, "two balls share a partner"));
                        }
                        hit[c] = true;
                        let same_below = lower[j].abs() == a.abs();
                        match kind {
                            LayerKind::Classic { .. } if same_below && c != j => {
                                return Err(err(j, "must pair straight down"))
                            }
                            LayerKind::Signed { .. } if c < j => return Err(err(j, "signed strands cannot wrap")),
                            LayerKind::Signed { .. } if a > 0 && same_below && c != j => {
                                return Err(err(j, "positive ball must pair straight down"))
                            }
                            _ => {}
                        }
                    }
                }
            }
            if let LayerKind::Signed { .. } = kind {
                if let Some((u, l)) = needy_violation(upper, links) {
                    return Err(QueueError::Needy { row: self.row_name(k), upper: u, lower: l });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Queue {
    /// One line per row from the bottom, e.g. `1': -2 . | 2 .` where the
    /// part after `|` gives each ball's partner column below (one-based).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|&v| if v == 0 { ".".into() } else { v.to_string() }).collect();
            write!(f, "{}: {}", self.row_name(k), cells.join(" "))?;
            if k > 0 {
                let links: Vec<String> = self.links[k].iter().map(|l| l.map_or(".".into(), |c| (c + 1).to_string())).collect();
                write!(f, " | {}", links.join(" "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
