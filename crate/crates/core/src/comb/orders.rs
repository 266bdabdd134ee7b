//! The orders on compositions used by the vanishing theory.

use std::cmp::Ordering;

use super::composition::{size, sort_partition};

/// Dominance-with-size on partitions: `Some(Less)` when `a < b`.
pub fn partition_cmp(a: &[i32], b: &[i32]) -> Option<Ordering> {
    let (sa, sb) = (size(a), size(b));
    if sa != sb {
        return Some(sa.cmp(&sb));
    }
    if a == b {
        return Some(Ordering::Equal);
    }
    let (mut pa, mut pb) = (0, 0);
    let (mut le, mut ge) = (true, true);
    for i in 0..a.len().max(b.len()) {
        pa += a.get(i).copied().unwrap_or(0);
        pb += b.get(i).copied().unwrap_or(0);
        le &= pa <= pb;
        ge &= pa >= pb;
    }
    match (le, ge) {
        (true, _) => Some(Ordering::Less),
        (_, true) => Some(Ordering::Greater),
        _ => None,
    }
}

/// The partial order on compositions: compare sorted parts by
/// dominance-with-size; if they sort to the same partition, `kappa < nu`
/// when every partial sum of `kappa` is at least that of `nu`.
pub fn comp_order_lt(kappa: &[i32], nu: &[i32]) -> bool {
    let (lk, ln) = (sort_partition(kappa), sort_partition(nu));
    if lk != ln {
        return partition_cmp(&lk, &ln) == Some(Ordering::Less);
    }
    if kappa == nu {
        return false;
    }
    let (mut pk, mut pn) = (0, 0);
    kappa.iter().zip(nu).all(|(a, b)| {
        pk += a;
        pn += b;
        pk >= pn
    })
}

/// `mu ⪯ nu`: some permutation `pi` has `mu_i <= nu_{pi(i)}` for all `i`,
/// strictly whenever `i > pi(i)`. Decided by bipartite matching.
pub fn precedes(mu: &[i32], nu: &[i32]) -> bool {
    let n = mu.len();
    let allowed = |i: usize, j: usize| mu[i] < nu[j] || (mu[i] == nu[j] && i <= j);
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(
        i: usize,
        n: usize,
        allowed: &dyn Fn(usize, usize) -> bool,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..n {
            if allowed(i, j) && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, n, allowed, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|i| {
        let mut seen = vec![false; n];
        augment(i, n, &allowed, &mut seen, &mut owner)
    })
}

/// Brute-force `precedes` over all permutations; a test oracle.
pub fn precedes_brute(mu: &[i32], nu: &[i32]) -> bool {
    fn rec(i: usize, mu: &[i32], nu: &[i32], used: &mut [bool]) -> bool {
        if i == mu.len() {
            return true;
        }
        for j in 0..nu.len() {
            if used[j] {
                continue;
            }
            let ok = mu[i] <= nu[j] && (i <= j || mu[i] < nu[j]);
            if ok {
                used[j] = true;
                if rec(i + 1, mu, nu, used) {
                    used[j] = false;
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    rec(0, mu, nu, &mut vec![false; nu.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comb::compositions_up_to;

    #[test]
    fn precedes_examples() {
        assert!(precedes(&[3, 3, 2, 0], &[5, 4, 1, 2]));
        assert!(!precedes(&[3, 3, 2, 0], &[5, 4, 0, 3]));
    }

    #[test]
    fn precedes_matches_brute_force() {
        for mu in compositions_up_to(3, 3) {
            for nu in compositions_up_to(4, 3) {
                assert_eq!(precedes(&mu, &nu), precedes_brute(&mu, &nu), "{mu:?} {nu:?}");
            }
        }
    }

    #[test]
    fn composition_order_examples() {
        assert!(comp_order_lt(&[2, 0], &[0, 2]));
        assert!(!comp_order_lt(&[0, 2], &[2, 0]));
        assert!(comp_order_lt(&[1, 1], &[0, 2]));
        assert!(comp_order_lt(&[1, 0], &[0, 2]));
    }
}
