use crate::algebra::{Ctx, Field, Poly};

/// `|mu|`, the sum of absolute values of the parts.
pub fn size(mu: &[i32]) -> i32 {
    mu.iter().map(|p| p.abs()).sum()
}

/// Parts sorted in decreasing order.
pub fn sort_partition(mu: &[i32]) -> Vec<i32> {
    let mut lam = mu.to_vec();
    lam.sort_unstable_by(|a, b| b.cmp(a));
    lam
}

pub fn is_partition(mu: &[i32]) -> bool {
    mu.windows(2).all(|w| w[0] >= w[1]) && mu.iter().all(|&p| p >= 0)
}

pub fn is_composition(mu: &[i32]) -> bool {
    mu.iter().all(|&p| p >= 0)
}

/// `k_i(mu) = #{j < i : mu_j > mu_i} + #{j > i : mu_j >= mu_i}`.
pub fn k_stat(mu: &[i32]) -> Vec<i32> {
    (0..mu.len())
        .map(|i| {
            let before = mu[..i].iter().filter(|&&m| m > mu[i]).count();
            let after = mu[i + 1..].iter().filter(|&&m| m >= mu[i]).count();
            (before + after) as i32
        })
        .collect()
}

/// The evaluation point `(q^{mu_i} t^{-k_i(mu)})_i`.
pub fn tilde_point<F: Field>(mu: &[i32], ctx: &Ctx<F>) -> Vec<F> {
    mu.iter()
        .zip(k_stat(mu))
        .map(|(&m, k)| ctx.q_pow(m as i64).mul(&ctx.t_pow(-(k as i64))))
        .collect()
}

/// `s_i mu` with one-based `i`.
pub fn swap(mu: &[i32], i: usize) -> Vec<i32> {
    let mut out = mu.to_vec();
    out.swap(i - 1, i);
    out
}

/// `(..., -alpha_i, -alpha_{i+1}, ...)` with one-based `i`.
pub fn flip(alpha: &[i32], i: usize) -> Vec<i32> {
    let mut out = alpha.to_vec();
    out[i - 1] = -out[i - 1];
    out[i] = -out[i];
    out
}

/// `nu^-`: every part lowered by one, floored at zero.
pub fn minus_one(nu: &[i32]) -> Vec<i32> {
    nu.iter().map(|&p| (p - 1).max(0)).collect()
}

pub fn abs_comp(alpha: &[i32]) -> Vec<i32> {
    alpha.iter().map(|p| p.abs()).collect()
}

/// Nonzero parts all to the left of the zero parts.
pub fn is_packed(mu: &[i32]) -> bool {
    let k = mu.iter().filter(|&&p| p != 0).count();
    mu[..k].iter().all(|&p| p != 0)
}

/// Move the nonzero parts to the front, keeping their order.
pub fn pack(mu: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = mu.iter().copied().filter(|&p| p != 0).collect();
    out.resize(mu.len(), 0);
    out
}

/// Support `{i : mu_i != 0}` as one-based indices.
pub fn support(mu: &[i32]) -> Vec<usize> {
    mu.iter().enumerate().filter(|(_, &p)| p != 0).map(|(i, _)| i + 1).collect()
}

/// Adjacent transpositions `s_{i_1}, s_{i_2}, ...` which, applied in order
/// to `pack(mu)`, each move a nonzero part right across a zero and end at `mu`.
/// The rightmost nonzero part is moved first.
pub fn unpack_path(mu: &[i32]) -> Vec<usize> {
    let targets = support(mu);
    let mut steps = Vec::new();
    for (k, &target) in targets.iter().enumerate().rev() {
        // part k currently sits at position k + 1
        for pos in (k + 1)..target {
            steps.push(pos);
        }
    }
    steps
}

/// All `2^k` sign choices on the nonzero parts.
pub fn signed_variants(mu: &[i32]) -> Vec<Vec<i32>> {
    let nonzero: Vec<usize> = (0..mu.len()).filter(|&i| mu[i] != 0).collect();
    (0..1u32 << nonzero.len())
        .map(|mask| {
            let mut out = mu.to_vec();
            for (bit, &i) in nonzero.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    out[i] = -out[i];
                }
            }
            out
        })
        .collect()
}

/// `wt_alpha = prod_{alpha_i > 0} x_i * prod_{alpha_i < 0} (-1 / t^{n-1})`.
pub fn wt_alpha<F: Field>(alpha: &[i32], ctx: &Ctx<F>) -> Poly<F> {
    let n = alpha.len();
    let exp: Vec<i32> = alpha.iter().map(|&a| i32::from(a > 0)).collect();
    let negatives = alpha.iter().filter(|&&a| a < 0).count() as i64;
    let mut c = ctx.t_pow(-(n as i64 - 1) * negatives);
    if negatives % 2 == 1 {
        c = c.neg();
    }
    Poly::monomial(n, exp, c)
}

/// Compositions of `size` into exactly `n` nonnegative parts, in
/// lexicographically decreasing order.
pub fn compositions(size: i32, n: usize) -> Vec<Vec<i32>> {
    fn rec(rest: i32, slots: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            rec(rest - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if size == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(size, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of every size `0..=max_size`, grouped by increasing size.
pub fn compositions_up_to(max_size: i32, n: usize) -> Vec<Vec<i32>> {
    (0..=max_size).flat_map(|d| compositions(d, n)).collect()
}

/// Partitions of `size` with at most `n` parts, padded with zeros to length
/// `n`, in lexicographically decreasing order.
pub fn partitions(size: i32, n: usize) -> Vec<Vec<i32>> {
    fn rec(rest: i32, max_part: i32, slots: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest == 0 {
            let mut p = cur.clone();
            p.resize(cur.len() + slots, 0);
            out.push(p);
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, n, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_up_to(max_size: i32, n: usize) -> Vec<Vec<i32>> {
    (0..=max_size).flat_map(|d| partitions(d, n)).collect()
}

/// Distinct rearrangements of `lambda`, lexicographically decreasing.
pub fn orbit(lambda: &[i32]) -> Vec<Vec<i32>> {
    let mut cur = sort_partition(lambda);
    let mut out = vec![cur.clone()];
    // prev_permutation over a decreasing start enumerates everything
    while prev_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn prev_permutation(v: &mut [i32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every signed rearrangement of `mu`.
pub fn signed_orbit(mu: &[i32]) -> Vec<Vec<i32>> {
    orbit(mu).iter().flat_map(|p| signed_variants(p)).collect()
}

/// Conjugate partition `lambda'` (only the nonzero parts).
pub fn conjugate(lambda: &[i32]) -> Vec<i32> {
    let top = lambda.iter().copied().max().unwrap_or(0);
    (1..=top).map(|i| lambda.iter().filter(|&&p| p >= i).count() as i32).collect()
}

/// `lambda^{(r)}`: parts below `r` replaced by zero.
pub fn truncate_below(lambda: &[i32], r: i32) -> Vec<i32> {
    lambda.iter().map(|&p| if p.abs() >= r { p } else { 0 }).collect()
}

pub fn parse_composition(text: &str) -> Result<Vec<i32>, std::num::ParseIntError> {
    let trimmed = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed.split(',').map(|p| p.trim().parse::<i32>()).collect()
}

pub fn format_composition(mu: &[i32]) -> String {
    mu.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{QTPoly, RatQT};

    #[test]
    fn k_statistic_and_tilde() {
        let mu = [4, 2, 0, 1, 4];
        assert_eq!(k_stat(&mu), vec![1, 2, 4, 3, 0]);
        let ctx = Ctx::symbolic();
        let pt = tilde_point(&mu, &ctx);
        let expect = [(4, -1), (2, -2), (0, -4), (1, -3), (4, 0)];
        for (v, (a, b)) in pt.iter().zip(expect) {
            assert_eq!(*v, RatQT::from_poly(QTPoly::monomial(crate::algebra::rat(1, 1), a, b)));
        }
    }

    #[test]
    fn unpack_path_moves_into_place() {
        for mu in [vec![0, 3, 0, 1], vec![2, 0, 0, 1], vec![0, 0, 1, 1], vec![1, 2, 0]] {
            let mut cur = pack(&mu);
            for i in unpack_path(&mu) {
                assert!(cur[i - 1] != 0 && cur[i] == 0, "step must move a part across a zero");
                cur = swap(&cur, i);
            }
            assert_eq!(cur, mu);
        }
        assert_eq!(unpack_path(&[0, 3, 0, 1]), vec![2, 3, 1]);
    }

    #[test]
    fn counts() {
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions_up_to(4, 3).len(), 35);
        assert_eq!(partitions(4, 3).len(), 4);
        assert_eq!(partitions(5, 2), vec![vec![5, 0], vec![4, 1], vec![3, 2]]);
        assert_eq!(orbit(&[2, 1, 1]).len(), 3);
        assert_eq!(orbit(&[2, 0]), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(signed_orbit(&[2, 0]).len(), 4);
        assert_eq!(conjugate(&[3, 1, 1]), vec![3, 1, 1]);
        assert_eq!(conjugate(&[2, 2, 0]), vec![2, 2]);
    }

    #[test]
    fn weight_of_signed_composition() {
        let ctx = Ctx::symbolic();
        let w = wt_alpha(&[-2, 1, 0], &ctx);
        assert_eq!(w.to_string(), "(-t^-2)*x2");
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_composition("0,2").unwrap(), vec![0, 2]);
        assert_eq!(parse_composition("(3, -1, 0)").unwrap(), vec![3, -1, 0]);
        assert_eq!(format_composition(&[3, -1, 0]), "3,-1,0");
    }
}
