//! Closed-form and generating-function counts of ideals by class of
//! nilpotence, each computed by an independent route so they can be
//! cross-checked against one another and against brute-force enumeration.

use crate::error::{Error, Result};
use crate::exact::{binomial, det_exact, fibonacci, BigInt, TruncatedSeries, UniPoly};
use crate::nilpotence::class_fast;
use crate::staircase::partitions_with_first;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Catalan number `C_m = binom(2m, m) / (m+1)`.
pub fn catalan(m: usize) -> BigInt {
    let m = m as i64;
    binomial(2 * m, m) / BigInt::from(m + 1)
}

/// Visit every index chain `0 = i_0 .. i_{len+1} = n+1` (strictly or weakly
/// increasing in between), passing the full vector including both sentinels.
pub(crate) fn for_each_chain(n: usize, len: usize, strict: bool, f: &mut dyn FnMut(&[i64])) {
    let top = (n + 1) as i64;
    let mut chain = vec![0i64; len + 2];
    chain[len + 1] = top;
    fn rec(pos: usize, len: usize, top: i64, strict: bool, chain: &mut [i64], f: &mut dyn FnMut(&[i64])) {
        if pos > len {
            f(chain);
            return;
        }
        let (lo, hi) = if strict {
            (chain[pos - 1] + 1, top - (len - pos + 1) as i64)
        } else {
            (chain[pos - 1], top)
        };
        for v in lo..=hi {
            chain[pos] = v;
            rec(pos + 1, len, top, strict, chain, f);
        }
    }
    rec(1, len, top, strict, &mut chain, f);
}

/// Small memo for the binomials appearing in chain products.
struct BinomMemo {
    table: Vec<Vec<BigInt>>, // [top + 1][bottom], tops from -1
}

impl BinomMemo {
    fn new(max_top: i64, max_bot: i64) -> Self {
        let table = (-1..=max_top)
            .map(|m| (0..=max_bot).map(|n| binomial(m, n)).collect())
            .collect();
        BinomMemo { table }
    }

    fn get(&self, m: i64, n: i64) -> &BigInt {
        &self.table[(m + 1) as usize][n as usize]
    }
}

fn chain_product(chain: &[i64], memo: &BinomMemo) -> BigInt {
    let len = chain.len() - 2;
    let mut acc = BigInt::one();
    for j in 0..len {
        let factor = memo.get(chain[j + 2] - chain[j] - 1, chain[j + 1] - chain[j]);
        if factor.is_zero() {
            return BigInt::zero();
        }
        acc *= factor;
    }
    acc
}

/// Number of ideals at rank `n` with class of nilpotence exactly `k`:
/// the sum over strict chains `0 < i_1 < ... < i_k < n+1` of
/// `prod_j binom(i_{j+2} - i_j - 1, i_{j+1} - i_j)`.
pub fn count_exact_class(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let memo = BinomMemo::new(n as i64, n as i64 + 1);
    let mut total = BigInt::zero();
    for_each_chain(n, k, true, &mut |chain| total += chain_product(chain, &memo));
    total
}

/// Number of ideals at rank `n` with class of nilpotence at most `h`:
/// the same product summed over weak chains `0 <= i_1 <= ... <= i_h <= n+1`.
/// The degenerate binomial conventions make repeated indices collapse onto
/// the strict-chain sum, so this equals the sum of [`count_exact_class`]
/// over `k <= h`.
pub fn count_atmost_sum(n: usize, h: usize) -> BigInt {
    let memo = BinomMemo::new(n as i64, n as i64 + 1);
    let mut total = BigInt::zero();
    for_each_chain(n, h, false, &mut |chain| total += chain_product(chain, &memo));
    total
}

/// The two determinant routes for the class-at-most-`h` count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetVariant {
    /// Entries `binom(i - max(0, j-h) + 1, j - i + 1)`.
    MaxClamp,
    /// Entries `binom(min(i+h, n+1) - j + 1, j - i + 1)`.
    MinClamp,
}

/// Class-at-most-`h` count as an `n x n` banded binomial determinant.
pub fn count_atmost_det(n: usize, h: usize, variant: DetVariant) -> BigInt {
    let (n, h) = (n as i64, h as i64);
    let matrix: Vec<Vec<BigInt>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let top = match variant {
                        DetVariant::MaxClamp => i - 0.max(j - h) + 1,
                        DetVariant::MinClamp => (i + h).min(n + 1) - j + 1,
                    };
                    binomial(top, j - i + 1)
                })
                .collect()
        })
        .collect();
    det_exact(&matrix).expect("matrix is square by construction")
}

/// Class-at-most-`h` count by the reflection sum
/// `sum_k (2k(h+3)+1)/(2n+3) * binom(2n+3, n+1-k(h+3))`, accumulated as
/// exact rationals; the total is asserted integral.
pub fn count_atmost_reflection(n: usize, h: usize) -> BigInt {
    let n = n as i64;
    let period = h as i64 + 3;
    let denom = BigInt::from(2 * n + 3);
    let bound = (n + 2) / period + 1;
    let mut acc = BigRational::zero();
    for k in -bound..=bound {
        let b = binomial(2 * n + 3, n + 1 - k * period);
        if b.is_zero() {
            continue;
        }
        acc += BigRational::new(BigInt::from(2 * k * period + 1) * b, denom.clone());
    }
    assert!(acc.is_integer(), "reflection sum must be an integer");
    acc.to_integer()
}

/// `P_m(x) = sum_j (-1)^j binom(m-j, j) x^j`, the integer polynomial
/// satisfying `x^(m/2) U_m(1/(2 sqrt x)) = P_m(x)` for the Chebyshev
/// polynomial `U_m` of the second kind. Clearing the square roots this way
/// keeps the generating-function quotient in integer arithmetic.
pub fn chebyshev_rescaled(m: usize) -> UniPoly {
    let m = m as i64;
    let mut coeffs = Vec::with_capacity((m / 2 + 1) as usize);
    for j in 0..=m / 2 {
        let c = binomial(m - j, j);
        coeffs.push(if j % 2 == 0 { c } else { -c });
    }
    UniPoly::from_coeffs(coeffs)
}

/// The generating function `1 + sum_n alpha_n(h) x^(n+1)` for the
/// class-at-most-`h` counts, as the series of `P_{h+1}(x) / P_{h+2}(x)`.
pub fn series_chebyshev(h: usize, order: usize) -> TruncatedSeries {
    let num = TruncatedSeries::from_poly(&chebyshev_rescaled(h + 1), order);
    let den = TruncatedSeries::from_poly(&chebyshev_rescaled(h + 2), order);
    num.mul(&den.invert().expect("P_m has constant term 1"))
}

/// The same generating function as the finite continued fraction
/// `1/(1 - x/(1 - x/(... /(1 - x))))` with `h+1` occurrences of `x`.
pub fn series_contfrac(h: usize, order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let mut denom = one.clone();
    for _ in 0..=h {
        let inv = denom.invert().expect("denominator has unit constant term");
        denom = one.sub(&inv.shifted(1));
    }
    denom.invert().expect("denominator has unit constant term")
}

/// The closed forms for classes at most 1, 2 and 3: `2^n`, the Fibonacci
/// number `F_{2n}` (convention `F_0 = F_1 = 1`), and `(3^n + 1) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryCounts {
    pub abelian: BigInt,
    pub atmost2: BigInt,
    pub atmost3: BigInt,
}

pub fn corollary_counts(n: usize) -> CorollaryCounts {
    let three_n = BigInt::from(3).pow(n as u32);
    CorollaryCounts {
        abelian: BigInt::from(2).pow(n as u32),
        atmost2: fibonacci(2 * n),
        atmost3: (three_n + 1u32) / 2,
    }
}

/// Default cap for exhaustive enumeration (`C_13 = 742900` ideals).
pub const DEFAULT_BRUTE_MAX: usize = 12;

/// Classify every ideal at rank `n` by class of nilpotence and tally.
///
/// Shards the partition stream by first part across worker threads; the
/// merge is plain addition of tallies, so the result is deterministic under
/// any schedule. Refuses `n > max_n`.
pub fn classify_bruteforce(n: usize, max_n: usize) -> Result<BTreeMap<usize, BigInt>> {
    if n > max_n {
        return Err(Error::BruteForceBound { n, max: max_n });
    }
    let merged: BTreeMap<usize, u64> = (0..=n)
        .into_par_iter()
        .map(|first| {
            let mut tally: BTreeMap<usize, u64> = BTreeMap::new();
            for p in partitions_with_first(n, first) {
                *tally.entry(class_fast(&p)).or_insert(0) += 1;
            }
            tally
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(merged
        .into_iter()
        .map(|(k, v)| (k, BigInt::from(v)))
        .collect())
}
