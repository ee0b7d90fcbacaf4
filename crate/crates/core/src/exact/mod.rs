//! Exact arithmetic substrate: arbitrary-precision integers, the degenerate
//! binomial conventions used throughout, Gaussian binomials, integer
//! polynomials and truncated series, and fraction-free determinants.
//!
//! No floating point anywhere; every value is exact.

mod bipoly;
mod det;
mod poly;
mod series;

pub use bipoly::BiPoly;
pub use det::det_exact;
pub use num_bigint::BigInt;
pub use poly::UniPoly;
pub use series::TruncatedSeries;

use num_traits::{One, Zero};

/// Binomial coefficient under the degenerate convention:
/// `m!/((m-n)! n!)` if `m >= n > 0`, `1` if `n == 0` (for any `m`, including
/// negative), and `0` otherwise.
pub fn binomial(m: i64, n: i64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    if !(m >= n && n > 0) {
        return BigInt::zero();
    }
    let k = n.min(m - n);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(m - k + i) / BigInt::from(i);
    }
    acc
}

/// Gaussian binomial coefficient as a polynomial in `t`, with the same
/// degenerate convention as [`binomial`]: `[m]!/([m-n]! [n]!)` if
/// `m >= n > 0`, the constant `1` if `n == 0`, and `0` otherwise.
///
/// Computed by the q-Pascal recurrence
/// `[m, n] = [m-1, n-1] + t^n * [m-1, n]`, which stays in integer
/// coefficients throughout. Evaluating at `t = 1` recovers [`binomial`].
pub fn t_binomial(m: i64, n: i64) -> UniPoly {
    if n == 0 {
        return UniPoly::one();
    }
    if !(m >= n && n > 0) {
        return UniPoly::zero();
    }
    let (m, n) = (m as usize, n as usize);
    // row r holds [r, c] for c = 0..=min(r, n)
    let mut row = vec![UniPoly::one()];
    for r in 1..=m {
        let width = r.min(n);
        let mut next = Vec::with_capacity(width + 1);
        next.push(UniPoly::one());
        for c in 1..=width {
            let keep = if c < r {
                row[c].shifted(c)
            } else {
                UniPoly::zero()
            };
            next.push(&row[c - 1] + &keep);
        }
        row = next;
    }
    row[n].clone()
}

/// Chebyshev polynomial of the second kind, from the explicit sum
/// `U_n(x) = sum_j (-1)^j C(n-j, j) (2x)^(n-2j)`.
pub fn chebyshev_u(n: usize) -> UniPoly {
    let n = n as i64;
    let mut p = UniPoly::zero();
    for j in 0..=n / 2 {
        let c = binomial(n - j, j);
        if c.is_zero() {
            continue;
        }
        let deg = (n - 2 * j) as usize;
        let coeff = c * BigInt::from(2).pow(deg as u32);
        let term = UniPoly::monomial(if j % 2 == 0 { coeff } else { -coeff }, deg);
        p = &p + &term;
    }
    p
}

/// Fibonacci numbers under the convention `F_0 = F_1 = 1`.
pub fn fibonacci(m: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..m {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}
