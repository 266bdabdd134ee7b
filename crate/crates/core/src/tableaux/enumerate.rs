//! Row-by-row enumeration of signed queue tableaux.

use super::{attacks_below, QueueTableau};
use crate::comb::sort_partition;

/// Visit every signed queue tableau of shape `lambda`, restricted to type
/// `mu` when given.
pub fn for_each_tableau(lambda: &[i32], mu: Option<&[i32]>, visit: &mut dyn FnMut(&QueueTableau)) {
    let n = lambda.len();
    let mut tab = QueueTableau {
        n,
        lambda: lambda.to_vec(),
        columns: lambda.iter().map(|&l| Vec::with_capacity(2 * l as usize)).collect(),
    };
    if let Some(mu) = mu {
        if sort_partition(mu) != lambda {
            return;
        }
    }
    fill_row(&mut tab, 0, 0, mu, visit);
}

fn fill_row(tab: &mut QueueTableau, k: usize, i: usize, mu: Option<&[i32]>, visit: &mut dyn FnMut(&QueueTableau)) {
    let rows = tab.n_rows();
    if k == rows {
        visit(tab);
        return;
    }
    if i == tab.n || tab.height(i) <= k {
        fill_row(tab, k + 1, 0, mu, visit);
        return;
    }
    let n = tab.n as i32;
    let primed = k % 2 == 1;
    let candidates: Vec<i32> = if primed {
        let cap = tab.columns[i][k - 1].abs();
        (1..=cap).flat_map(|v| [v, -v]).collect()
    } else {
        (1..=n).collect()
    };
    for v in candidates {
        if admissible(tab, k, i, v, mu) {
            tab.columns[i].push(v);
            fill_row(tab, k, i + 1, mu, visit);
            tab.columns[i].pop();
        }
    }
}

fn admissible(tab: &QueueTableau, k: usize, i: usize, v: i32, mu: Option<&[i32]>) -> bool {
    // cells of row k to the left are already set
    if (0..i).any(|j| tab.columns[j][k].abs() == v.abs()) {
        return false;
    }
    if k == 0 {
        if let Some(mu) = mu {
            if mu[v as usize - 1] != tab.lambda[i] {
                return false;
            }
        }
    } else {
        if v > 0 && k % 2 == 1 && !tab.row(k - 1).any(|(_, w)| w == v) {
            return false;
        }
        if tab.row(k - 1).any(|(i2, w)| i2 != i && w.abs() == v.abs() && attacks_below(&tab.lambda, i, v, i2)) {
            return false;
        }
    }
    let top = tab.height(i) - 1;
    if k == top && i > 0 && tab.lambda[i - 1] == tab.lambda[i] && tab.columns[i - 1][k].abs() <= v.abs() {
        return false;
    }
    true
}

pub fn enumerate_tableaux(lambda: &[i32]) -> Vec<QueueTableau> {
    let mut out = Vec::new();
    for_each_tableau(lambda, None, &mut |t| out.push(t.clone()));
    out
}

pub fn enumerate_tableaux_typed(lambda: &[i32], mu: &[i32]) -> Vec<QueueTableau> {
    let mut out = Vec::new();
    for_each_tableau(lambda, Some(mu), &mut |t| out.push(t.clone()));
    out
}
