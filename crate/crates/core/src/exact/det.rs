use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Every division is by the previous pivot and is exact, so the whole
/// computation stays in the integers.
pub fn det_exact(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquareMatrix);
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, r);
            negate = !negate;
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let lead = std::mem::replace(&mut row[k], BigInt::zero());
            for j in k + 1..n {
                row[j] = (&row[j] * &pivot_row[k] - &lead * &pivot_row[j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
