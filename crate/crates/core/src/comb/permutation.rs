//! Permutations in one-line notation with one-based values.

use super::composition::sort_partition;

/// `sigma . mu = (mu_{sigma^{-1}(1)}, ..., mu_{sigma^{-1}(n)})`.
pub fn act(sigma: &[usize], mu: &[i32]) -> Vec<i32> {
    let mut out = vec![0; mu.len()];
    for (i, &s) in sigma.iter().enumerate() {
        out[s - 1] = mu[i];
    }
    out
}

pub fn identity(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

pub fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut out = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        out[s - 1] = i + 1;
    }
    out
}

/// Number of inversions, the Coxeter length.
pub fn length(sigma: &[usize]) -> usize {
    let n = sigma.len();
    (0..n).map(|i| (i + 1..n).filter(|&j| sigma[i] > sigma[j]).count()).sum()
}

/// The shortest `sigma` with `sigma . lambda = mu`, `lambda` the sorted
/// version of `mu`: the k-th leftmost part of each size in `lambda` goes to
/// the k-th leftmost part of that size in `mu`.
pub fn shortest_perm(mu: &[i32]) -> Vec<usize> {
    let lambda = sort_partition(mu);
    let mut used = vec![false; mu.len()];
    lambda
        .iter()
        .map(|&part| {
            let pos = (0..mu.len()).find(|&j| !used[j] && mu[j] == part).expect("rearrangement");
            used[pos] = true;
            pos + 1
        })
        .collect()
}

/// A reduced word `[i_1, ..., i_l]` with `sigma = s_{i_1} ... s_{i_l}`.
pub fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    let mut tau = sigma.to_vec();
    let mut word = Vec::new();
    loop {
        let inv = inverse(&tau);
        let Some(i) = (1..tau.len()).find(|&i| inv[i - 1] > inv[i]) else {
            break;
        };
        word.push(i);
        // tau <- s_i tau: swap the values i and i + 1
        for v in tau.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    word
}

/// `s_{i_1} ... s_{i_l}` in one-line notation.
pub fn from_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut sigma = identity(n);
    for &i in word.iter().rev() {
        for v in sigma.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
    sigma
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_permutation_regression() {
        let mu = [3, 4, 1, 4, 3];
        let sigma = shortest_perm(&mu);
        assert_eq!(sigma, vec![2, 4, 1, 5, 3]);
        assert_eq!(act(&sigma, &[4, 4, 3, 3, 1]), mu.to_vec());
    }

    #[test]
    fn reduced_word_round_trip() {
        let sigma = vec![2, 4, 1, 5, 3];
        let w = reduced_word(&sigma);
        assert_eq!(w.len(), length(&sigma));
        assert_eq!(from_word(5, &w), sigma);
    }
}
