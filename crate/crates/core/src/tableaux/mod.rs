//! Signed queue tableaux: fillings of the doubled diagram of a partition,
//! the bijection with signed multiline queues, and tableau weights.

mod enumerate;
mod render;
mod stats;

pub use enumerate::{enumerate_tableaux, enumerate_tableaux_typed, for_each_tableau};
pub use render::{render_latex, render_svg};
pub use stats::*;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::comb::is_partition;
use crate::queues::{Queue, QueueFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("shape {0:?} is not a partition")]
    Shape(Vec<i32>),
    #[error("column {column} has {found} cells, expected {expected}")]
    ColumnHeight { column: usize, found: usize, expected: usize },
    #[error("entry {value} at column {column}, row {row} is out of range")]
    Range { column: usize, row: String, value: i32 },
    #[error("filling rule broken at column {column}, row {row}: {reason}")]
    Filling { column: usize, row: String, reason: &'static str },
    #[error("cells ({c1}, {r1}) and ({c2}, {r2}) attack each other with equal values")]
    Attack { c1: usize, r1: String, c2: usize, r2: String },
    #[error("queue is not a signed multiline queue")]
    NotSigned,
}

/// A filling of the doubled diagram. `columns[i]` lists the entries of
/// column `i` from the bottom, rows `1, 1', 2, 2', ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QueueTableau {
    pub n: usize,
    pub lambda: Vec<i32>,
    pub columns: Vec<Vec<i32>>,
}

/// Name of row index `k`: `1, 1', 2, 2', ...`.
pub fn row_name(k: usize) -> String {
    if k.is_multiple_of(2) {
        (k / 2 + 1).to_string()
    } else {
        format!("{}'", k / 2 + 1)
    }
}

/// The row `r` of row index `k` (for `r'` as well).
pub fn row_number(k: usize) -> i32 {
    (k / 2) as i32 + 1
}

impl QueueTableau {
    pub fn height(&self, i: usize) -> usize {
        2 * self.lambda[i] as usize
    }

    pub fn get(&self, i: usize, k: usize) -> Option<i32> {
        self.columns.get(i).and_then(|c| c.get(k)).copied()
    }

    /// Entries of row `k` as `(column, value)`.
    pub fn row(&self, k: usize) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.columns.iter().enumerate().filter_map(move |(i, c)| c.get(k).map(|&v| (i, v)))
    }

    pub fn n_rows(&self) -> usize {
        self.lambda.first().map_or(0, |&l| 2 * l as usize)
    }

    /// `mu_v` is half the height of the column holding `v` in row 1.
    pub fn type_comp(&self) -> Vec<i32> {
        let mut mu = vec![0; self.n];
        for (i, v) in self.row(0) {
            if v > 0 && (v as usize) <= self.n {
                mu[v as usize - 1] = self.lambda[i];
            }
        }
        mu
    }

    /// Cell `(i, k)` and the cell below hold equal absolute values; row 1
    /// and cells outside the diagram count as restricted.
    pub fn restricted(&self, i: usize, k: usize) -> bool {
        match (k, self.get(i, k)) {
            (0, _) | (_, None) => true,
            (_, Some(v)) => self.get(i, k - 1).map(i32::abs) == Some(v.abs()),
        }
    }

    /// Check the filling rules and attack-freeness.
    pub fn validate(&self) -> Result<(), TableauError> {
        if !is_partition(&self.lambda) || self.lambda.len() != self.n {
            return Err(TableauError::Shape(self.lambda.clone()));
        }
        for (i, col) in self.columns.iter().enumerate() {
            if col.len() != self.height(i) {
                return Err(TableauError::ColumnHeight { column: i + 1, found: col.len(), expected: self.height(i) });
            }
            for (k, &v) in col.iter().enumerate() {
                if v == 0 || v.unsigned_abs() as usize > self.n {
                    return Err(TableauError::Range { column: i + 1, row: row_name(k), value: v });
                }
            }
        }
        if self.columns.len() != self.n {
            return Err(TableauError::Shape(self.lambda.clone()));
        }
        let fail = |i: usize, k: usize, reason| TableauError::Filling { column: i + 1, row: row_name(k), reason };
        for i in 0..self.n {
            for k in 0..self.height(i) {
                let v = self.columns[i][k];
                if k % 2 == 0 && v < 0 {
                    return Err(fail(i, k, "negative entry in a classic row"));
                }
                if k % 2 == 1 {
                    if v > 0 && !self.row(k - 1).any(|(_, w)| w == v) {
                        return Err(fail(i, k, "positive entry missing from the row below"));
                    }
                    if self.columns[i][k - 1].abs() < v.abs() {
                        return Err(fail(i, k, "entry exceeds the one below"));
                    }
                }
            }
            if i + 1 < self.n && self.lambda[i] == self.lambda[i + 1] && self.lambda[i] > 0 {
                let top = self.height(i) - 1;
                if self.columns[i][top].abs() <= self.columns[i + 1][top].abs() {
                    return Err(fail(i, top, "top entries of equal columns must decrease"));
                }
            }
        }
        for k in 0..self.n_rows() {
            let row: Vec<(usize, i32)> = self.row(k).collect();
            for (a, &(i, v)) in row.iter().enumerate() {
                for &(i2, w) in &row[a + 1..] {
                    if v.abs() == w.abs() {
                        return Err(TableauError::Attack { c1: i + 1, r1: row_name(k), c2: i2 + 1, r2: row_name(k) });
                    }
                }
                if k == 0 {
                    continue;
                }
                for (i2, w) in self.row(k - 1) {
                    if i2 != i && attacks_below(&self.lambda, i, v, i2) && v.abs() == w.abs() {
                        return Err(TableauError::Attack { c1: i + 1, r1: row_name(k), c2: i2 + 1, r2: row_name(k - 1) });
                    }
                }
            }
        }
        Ok(())
    }

    /// The signed multiline queue with this tableau as image.
    pub fn to_queue(&self) -> Queue {
        let rows_n = self.n_rows().max(1);
        let mut rows = vec![vec![0; self.n]; rows_n];
        let mut links = vec![vec![None; self.n]; rows_n];
        for (i, col) in self.columns.iter().enumerate() {
            for (k, &v) in col.iter().enumerate() {
                let c = v.unsigned_abs() as usize - 1;
                rows[k][c] = v.signum() * self.lambda[i];
                if k > 0 {
                    links[k][c] = Some(col[k - 1].unsigned_abs() as usize - 1);
                }
            }
        }
        Queue { family: QueueFamily::Signed, n: self.n, rows, links }
    }

    /// The strands of `queue`, longest first, as signed column lists.
    pub fn from_queue(queue: &Queue) -> Result<Self, TableauError> {
        if queue.family != QueueFamily::Signed {
            return Err(TableauError::NotSigned);
        }
        let n = queue.n;
        let mut lambda = queue.lambda();
        lambda.resize(n, 0);
        let mut columns: Vec<Vec<i32>> = queue
            .strands()
            .iter()
            .map(|s| s.cols.iter().enumerate().map(|(k, &c)| queue.rows[k][c].signum() * (c as i32 + 1)).collect())
            .collect();
        columns.resize(n, Vec::new());
        Ok(QueueTableau { n, lambda, columns })
    }
}

/// Whether the cell in column `i` holding `v` attacks the cell of column
/// `i2` in the row below.
pub(crate) fn attacks_below(lambda: &[i32], i: usize, v: i32, i2: usize) -> bool {
    if v > 0 {
        lambda[i] >= lambda[i2]
    } else {
        i2 < i && lambda[i2] > lambda[i]
    }
}

impl fmt::Display for QueueTableau {
    /// Columns bottom to top, separated by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| c.iter().map(i32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", cols.join(" | "))
    }
}
