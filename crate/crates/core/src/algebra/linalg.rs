//! Exact dense linear algebra over a [`Field`].

use super::error::AlgebraError;
use super::field::Field;

pub type Matrix<F> = Vec<Vec<F>>;

/// Solve `A X = B` for a square nonsingular `A` by Gauss-Jordan elimination.
/// Each column of `B` is one right-hand side.
pub fn solve_many<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>, AlgebraError> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "square system");
            row.iter().chain(rhs.iter()).cloned().collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(AlgebraError::Singular)?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inv()?;
        for v in aug[col].iter_mut().skip(col) {
            *v = v.mul(&inv);
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v = v.sub(&factor.mul(p));
                }
            }
        }
    }
    Ok(aug.into_iter().map(|row| row[n..n + m].to_vec()).collect())
}

pub fn solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Vec<F>, AlgebraError> {
    let rhs: Matrix<F> = b.iter().map(|v| vec![v.clone()]).collect();
    Ok(solve_many(a, &rhs)?.into_iter().map(|mut r| r.remove(0)).collect())
}

pub fn inverse<F: Field>(a: &Matrix<F>) -> Result<Matrix<F>, AlgebraError> {
    let n = a.len();
    let id: Matrix<F> = (0..n).map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect()).collect();
    solve_many(a, &id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, BigRat};

    #[test]
    fn solves_small_system() {
        let a: Matrix<BigRat> = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        let x = solve(&a, &[rat(3, 1), rat(5, 1)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn detects_singular() {
        let a: Matrix<BigRat> = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert_eq!(solve(&a, &[rat(1, 1), rat(1, 1)]).unwrap_err(), AlgebraError::Singular);
    }
}
