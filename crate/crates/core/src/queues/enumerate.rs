//! Depth-first enumeration of multiline queues of a given type, bottom row
//! first.

use super::layer::{columns_admissible, layer_matchings, needy_violation, LayerKind};
use super::queue::{Queue, QueueFamily};
use crate::comb::{orbit, signed_variants, sort_partition, truncate_below};

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Apply the needy rule when building signed layers.
    pub needy: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { needy: true }
    }
}

/// Visit every queue of `family` whose bottom row is `mu`.
pub fn for_each_queue(family: QueueFamily, mu: &[i32], opts: EnumOptions, visit: &mut dyn FnMut(&Queue)) {
    let lambda = sort_partition(mu);
    let top = lambda.first().copied().unwrap_or(0).max(0) as usize;
    let n_rows = match family {
        QueueFamily::Classic => top.max(1),
        QueueFamily::Signed => (2 * top).max(1),
    };
    let mut queue = Queue { family, n: mu.len(), rows: vec![mu.to_vec()], links: vec![vec![None; mu.len()]] };
    extend(&mut queue, &lambda, n_rows, opts, visit);
}

fn extend(queue: &mut Queue, lambda: &[i32], n_rows: usize, opts: EnumOptions, visit: &mut dyn FnMut(&Queue)) {
    let k = queue.rows.len();
    if k == n_rows {
        visit(queue);
        return;
    }
    let primed = queue.family == QueueFamily::Signed && k % 2 == 1;
    let r = match queue.family {
        QueueFamily::Classic => k as i32 + 1,
        QueueFamily::Signed => (k / 2) as i32 + 1,
    };
    let kind = if primed { LayerKind::Signed { row: r } } else { LayerKind::Classic { row: r } };
    let content = truncate_below(lambda, r);
    let below = queue.rows[k - 1].clone();
    for arrangement in orbit(&content) {
        let candidates = if primed { signed_variants(&arrangement) } else { vec![arrangement] };
        for row in candidates {
            if !columns_admissible(&row, &below, kind) {
                continue;
            }
            for links in layer_matchings(&row, &below, kind) {
                if primed && opts.needy && needy_violation(&row, &links).is_some() {
                    continue;
                }
                queue.rows.push(row.clone());
                queue.links.push(links);
                extend(queue, lambda, n_rows, opts, visit);
                queue.rows.pop();
                queue.links.pop();
            }
        }
    }
}

pub fn collect_queues(family: QueueFamily, mu: &[i32], opts: EnumOptions) -> Vec<Queue> {
    let mut out = Vec::new();
    for_each_queue(family, mu, opts, &mut |q| out.push(q.clone()));
    out
}

pub fn count_queues(family: QueueFamily, mu: &[i32], opts: EnumOptions) -> usize {
    let mut count = 0;
    for_each_queue(family, mu, opts, &mut |_| count += 1);
    count
}
