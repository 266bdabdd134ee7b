//! One layer of a ball system: two adjacent rows and the pairing between
//! them, with the statistics that enter the weights.

use serde::{Deserialize, Serialize};

use crate::algebra::{Ctx, Field};

/// How balls are linked between two adjacent rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LayerKind {
    /// Strands may wrap around; the weight uses `q^{a-r+1}` with `r` the
    /// upper row index.
    Classic { row: i32 },
    /// Strands go straight down or rightward and never wrap; `row` is `r` for
    /// the layer `r' -> r`.
    Signed { row: i32 },
}

/// Order in which the nontrivial pairings of one label are processed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairingOrder {
    /// Right to left within a label.
    Columns,
    /// By the rank of the strand the upper ball belongs to.
    Strands,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingStat {
    pub upper: usize,
    pub lower: usize,
    /// Label of the upper ball, signed for signed layers.
    pub label: i32,
    pub trivial: bool,
    pub wraps: bool,
    pub free: usize,
    pub skipped: usize,
    pub empty: usize,
}

/// Per-pairing statistics for one layer. `links[j]` is the lower column
/// paired with the upper ball in column `j`; `rank(j)` orders balls of one
/// label when `order` is [`PairingOrder::Strands`].
pub fn layer_stats(
    upper: &[i32],
    lower: &[i32],
    links: &[Option<usize>],
    order: PairingOrder,
    rank: &dyn Fn(usize) -> usize,
) -> Vec<PairingStat> {
    let n = upper.len();
    let mut matched = vec![false; n];
    let mut stats = Vec::new();
    let mut labels: Vec<i32> = upper.iter().filter(|&&a| a != 0).map(|a| a.abs()).collect();
    labels.sort_unstable_by(|a, b| b.cmp(a));
    labels.dedup();
    for a in labels {
        let balls: Vec<usize> = (0..n).filter(|&j| upper[j].abs() == a).collect();
        let (trivial, mut nontrivial): (Vec<usize>, Vec<usize>) =
            balls.into_iter().partition(|&j| links[j] == Some(j));
        for &j in &trivial {
            matched[j] = true;
            stats.push(PairingStat {
                upper: j,
                lower: j,
                label: upper[j],
                trivial: true,
                wraps: false,
                free: 0,
                skipped: 0,
                empty: 0,
            });
        }
        match order {
            PairingOrder::Columns => nontrivial.sort_unstable_by(|a, b| b.cmp(a)),
            PairingOrder::Strands => nontrivial.sort_unstable_by_key(|&j| rank(j)),
        }
        for j in nontrivial {
            let target = links[j].expect("every upper ball is linked");
            let free = (0..n).filter(|&c| lower[c] != 0 && !matched[c]).count();
            let between: Vec<usize> = cyclic_between(j, target, n);
            let skipped = between.iter().filter(|&&c| lower[c] != 0 && !matched[c]).count();
            let empty = between.iter().filter(|&&c| lower[c] == 0).count();
            let wraps = target < j;
            matched[target] = true;
            stats.push(PairingStat { upper: j, lower: target, label: upper[j], trivial: false, wraps, free, skipped, empty });
        }
    }
    stats
}

/// Columns strictly between `from` and `to` going rightward, wrapping.
pub fn cyclic_between(from: usize, to: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut c = (from + 1) % n;
    while c != to {
        out.push(c);
        c = (c + 1) % n;
    }
    out
}

/// Product of the pairing weights of a layer.
pub fn layer_weight<F: Field>(stats: &[PairingStat], kind: LayerKind, ctx: &Ctx<F>) -> F {
    let mut w = F::one();
    for s in stats.iter().filter(|s| !s.trivial) {
        w = w.mul(&pairing_weight(s, kind, ctx));
    }
    w
}

pub fn pairing_weight<F: Field>(s: &PairingStat, kind: LayerKind, ctx: &Ctx<F>) -> F {
    if s.trivial {
        return F::one();
    }
    match kind {
        LayerKind::Classic { row } => {
            let qexp = (s.label.abs() - row + 1) as i64;
            let mut w = ctx
                .one_minus_t()
                .mul(&ctx.t_pow(s.skipped as i64))
                .div(&ctx.one_minus(qexp, s.free as i64))
                .expect("pairing denominator vanishes; resample (q, t)");
            if s.wraps {
                w = w.mul(&ctx.q_pow(qexp));
            }
            w
        }
        LayerKind::Signed { .. } => {
            let w = ctx.one_minus_t().mul(&ctx.t_pow((s.skipped + s.empty) as i64));
            if s.label < 0 {
                w.neg()
            } else {
                w
            }
        }
    }
}

/// `skipped` and `empty` for a signed pairing read off the final
/// configuration: a lower ball strictly between the columns counts when its
/// label is smaller, or equal with its partner further left than `upper`.
pub fn static_signed_counts(upper_col: usize, lower_col: usize, upper: &[i32], lower: &[i32], links: &[Option<usize>]) -> (usize, usize) {
    let a = upper[upper_col].abs();
    let mut partner_of = vec![None; lower.len()];
    for (j, l) in links.iter().enumerate() {
        if let Some(c) = l {
            partner_of[*c] = Some(j);
        }
    }
    let mut skipped = 0;
    let mut empty = 0;
    for c in upper_col + 1..lower_col {
        let label = lower[c].abs();
        if label == 0 {
            empty += 1;
        } else if label < a || (label == a && partner_of[c].is_some_and(|k| k < upper_col)) {
            skipped += 1;
        }
    }
    (skipped, empty)
}

/// The informal "needy" rule, replayed in column order: nobody may take a
/// ball lying directly below a negative ball that has not been paired yet.
/// Returns the offending `(upper, lower)` columns.
pub fn needy_violation(upper: &[i32], links: &[Option<usize>]) -> Option<(usize, usize)> {
    let n = upper.len();
    let mut order: Vec<usize> = (0..n).filter(|&j| upper[j] != 0).collect();
    order.sort_unstable_by(|&a, &b| upper[b].abs().cmp(&upper[a].abs()).then(b.cmp(&a)));
    let mut paired = vec![false; n];
    for j in order {
        let c = links[j]?;
        if c != j && upper[c] < 0 && !paired[c] {
            return Some((j, c));
        }
        paired[j] = true;
    }
    None
}

/// Validity of the column pattern between two rows, ignoring links.
pub fn columns_admissible(upper: &[i32], lower: &[i32], kind: LayerKind) -> bool {
    upper.iter().zip(lower).all(|(&u, &l)| {
        let l = l.abs();
        match kind {
            LayerKind::Classic { .. } => u == 0 || l == 0 || l >= u.abs(),
            LayerKind::Signed { .. } => {
                if u > 0 {
                    l >= u
                } else if u < 0 {
                    l == 0 || l <= -u
                } else {
                    true
                }
            }
        }
    })
}

/// Every admissible set of links between two rows with admissible columns.
pub fn layer_matchings(upper: &[i32], lower: &[i32], kind: LayerKind) -> Vec<Vec<Option<usize>>> {
    let n = upper.len();
    let mut all = vec![vec![None; n]];
    let mut labels: Vec<i32> = upper.iter().filter(|&&a| a != 0).map(|a| a.abs()).collect();
    labels.sort_unstable();
    labels.dedup();
    for a in labels {
        let ups: Vec<usize> = (0..n).filter(|&j| upper[j].abs() == a).collect();
        let downs: Vec<usize> = (0..n).filter(|&c| lower[c].abs() == a).collect();
        if ups.len() != downs.len() {
            return Vec::new();
        }
        let mut options: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut cur = Vec::new();
        let mut used = vec![false; downs.len()];
        label_bijections(&ups, &downs, upper, kind, 0, &mut used, &mut cur, &mut options);
        let mut next = Vec::with_capacity(all.len() * options.len());
        for base in &all {
            for opt in &options {
                let mut links = base.clone();
                for &(j, c) in opt {
                    links[j] = Some(c);
                }
                next.push(links);
            }
        }
        all = next;
        if all.is_empty() {
            break;
        }
    }
    all
}

#[allow(clippy::too_many_arguments)]
fn label_bijections(
    ups: &[usize],
    downs: &[usize],
    upper: &[i32],
    kind: LayerKind,
    idx: usize,
    used: &mut [bool],
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if idx == ups.len() {
        out.push(cur.clone());
        return;
    }
    let j = ups[idx];
    let below_same = downs.contains(&j);
    for (k, &c) in downs.iter().enumerate() {
        if used[k] {
            continue;
        }
        let ok = match kind {
            // a ball over a same-label ball pairs straight down, and a ball
            // sitting under a same-label ball is reserved for it
            LayerKind::Classic { .. } => {
                if below_same {
                    c == j
                } else {
                    !ups.contains(&c)
                }
            }
            LayerKind::Signed { .. } => c >= j && (upper[j] < 0 || !below_same || c == j),
        };
        if ok {
            used[k] = true;
            cur.push((j, c));
            label_bijections(ups, downs, upper, kind, idx + 1, used, cur, out);
            cur.pop();
            used[k] = false;
        }
    }
}
