//! The (q,t)-Catalan polynomial counting ideals by dimension (exponent of
//! `t`) and class of nilpotence (exponent of `q`), and the four extremal
//! formulas relating the two statistics.

use crate::counting::for_each_chain;
use crate::error::{Error, Result};
use crate::exact::{t_binomial, BiPoly, BigInt, UniPoly};
use crate::nilpotence::{class_fast, TouchSequence};
use crate::staircase::{partitions_with_first, StaircasePartition};
use num_integer::Roots;
use rayon::prelude::*;

/// The (q,t)-Catalan polynomial by the interval-decomposition formula:
///
/// `C_n(q,t) = sum_k q^k sum_(0=i_0<i_1<...<i_k<i_(k+1)=n+1)
///   prod_(j=0..k-1) t^(i_(j+1) (i_(j+3)-i_(j+2)))
///   [i_(j+2)-i_j-1 choose i_(j+1)-i_j]_t`
///
/// with the extra sentinel `i_(k+2) = n+2`. Each interval of the touch
/// decomposition contributes its fixed cells as a power of `t` and each free
/// rectangle as a Gaussian binomial.
pub fn qt_catalan_formula(n: usize) -> BiPoly {
    // Gaussian binomials reused across chains
    let mut memo: Vec<Vec<Option<UniPoly>>> = vec![vec![None; n + 2]; n + 2];
    let mut out = BiPoly::zero();
    for k in 0..=n {
        for_each_chain(n, k, true, &mut |chain| {
            let ext = |i: usize| -> usize {
                if i < chain.len() {
                    chain[i] as usize
                } else {
                    n + 2 // i_(k+2)
                }
            };
            let mut shift = 0usize;
            let mut product = UniPoly::one();
            for j in 0..k {
                shift += ext(j + 1) * (ext(j + 3) - ext(j + 2));
                let (top, bot) = (ext(j + 2) - ext(j) - 1, ext(j + 1) - ext(j));
                let factor = memo[top][bot]
                    .get_or_insert_with(|| t_binomial(top as i64, bot as i64));
                product = &product * factor;
            }
            for (deg, c) in product.coeffs().iter().enumerate() {
                out.add_term(k, deg + shift, c.clone());
            }
        });
    }
    out
}

/// The same polynomial by direct tally: `q^class t^dimension` summed over
/// every ideal. Shards the enumeration by first part; the merge is term-wise
/// addition, so the result is schedule-independent.
pub fn qt_catalan_bruteforce(n: usize, max_n: usize) -> Result<BiPoly> {
    if n > max_n {
        return Err(Error::BruteForceBound { n, max: max_n });
    }
    let merged = (0..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = BiPoly::zero();
            for p in partitions_with_first(n, first) {
                acc.add_term(class_fast(&p), p.dimension() as usize, BigInt::from(1));
            }
            acc
        })
        .reduce(BiPoly::zero, |mut a, b| {
            a.add_assign(&b);
            a
        });
    Ok(merged)
}

fn check_class_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::OutOfRange(format!(
            "class {k} exceeds the maximum class {n} at rank {n}"
        )));
    }
    Ok(())
}

/// Minimal dimension among ideals of class exactly `k`:
/// `binom(k+1, 2) + (k-1)(n-k)` for `k >= 1`, and 0 for the zero ideal.
pub fn dim_min(n: usize, k: usize) -> Result<u64> {
    check_class_range(n, k)?;
    if k == 0 {
        return Ok(0);
    }
    let (n, k) = (n as u64, k as u64);
    Ok(k * (k + 1) / 2 + (k - 1) * (n - k))
}

/// Maximal dimension among ideals of class exactly `k`:
/// `binom(n+1, 2) - (n+1) f + (k+1) binom(f+1, 2)` with
/// `f = floor((n+1)/(k+1))`, and 0 for `k = 0`.
pub fn dim_max(n: usize, k: usize) -> Result<u64> {
    check_class_range(n, k)?;
    if k == 0 {
        return Ok(0);
    }
    let (n, k) = (n as i128, k as i128);
    let f = (n + 1) / (k + 1);
    let v = n * (n + 1) / 2 - (n + 1) * f + (k + 1) * f * (f + 1) / 2;
    Ok(v as u64)
}

fn max_dimension(n: usize) -> u64 {
    (n as u64) * (n as u64 + 1) / 2
}

/// Minimal class among ideals of dimension `A`: the least `k` with
/// `dim_max(n, k) >= A`.
pub fn class_min(n: usize, a: u64) -> Result<usize> {
    if a > max_dimension(n) {
        return Err(Error::OutOfRange(format!(
            "dimension {a} exceeds the staircase size {}",
            max_dimension(n)
        )));
    }
    for k in 0..=n {
        if dim_max(n, k)? >= a {
            return Ok(k);
        }
    }
    unreachable!("dim_max(n, n) is the full staircase size")
}

/// Maximal class among ideals of dimension `A >= 1`:
/// `floor(n + 3/2 - sqrt(4n^2 + 4n + 9 - 8A)/2)`, evaluated with an integer
/// square root so the floor is exact, and cross-checked against the pure
/// integer search `max{k : dim_min(n, k) <= A}`.
pub fn class_max(n: usize, a: u64) -> Result<usize> {
    if a < 1 || a > max_dimension(n) {
        return Err(Error::OutOfRange(format!(
            "dimension must be in 1..={}, got {a}",
            max_dimension(n)
        )));
    }
    let d: u64 = 4 * (n as u64) * (n as u64) + 4 * (n as u64) + 9 - 8 * a;
    let s = d.sqrt();
    let t = 2 * (n as u64) + 3;
    let closed = if s * s == d {
        // d = 1 mod 8, so a perfect square root is odd and t - s is even
        (t - s) / 2
    } else {
        let u = t - s;
        if u % 2 == 1 {
            (u - 1) / 2
        } else {
            u / 2 - 1
        }
    } as usize;
    let searched = (0..=n)
        .rev()
        .find(|&k| dim_min(n, k).expect("k <= n") <= a)
        .expect("dim_min(n, 0) = 0");
    assert_eq!(closed, searched, "closed form disagrees with integer search");
    Ok(closed)
}

/// A composition `(μ_0, ..., μ_k)` of `n+1` into positive parts, encoding
/// the partition with all outer corners on the antidiagonal whose successive
/// corner gaps are the `μ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerComposition {
    n: usize,
    parts: Vec<usize>,
}

impl CornerComposition {
    pub fn new(parts: Vec<usize>, n: usize) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::OutOfRange(
                "composition parts must be positive".into(),
            ));
        }
        if parts.iter().sum::<usize>() != n + 1 {
            return Err(Error::OutOfRange(format!(
                "composition must sum to n+1 = {}",
                n + 1
            )));
        }
        Ok(CornerComposition { n, parts })
    }

    /// The balanced composition with parts `floor((n+1)/(k+1))` and
    /// `ceil((n+1)/(k+1))`, ceiling parts first; it maximizes the encoded
    /// partition's size among class-`k` corner partitions.
    pub fn balanced(n: usize, k: usize) -> Result<Self> {
        check_class_range(n, k)?;
        let f = (n + 1) / (k + 1);
        let ceil_count = (n + 1) - (k + 1) * f;
        let mut parts = vec![f + 1; ceil_count];
        parts.resize(k + 1, f);
        CornerComposition::new(parts, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Touch indices `i_j = μ_k + μ_(k-1) + ... + μ_(k-j+1)` (suffix sums).
    pub fn touch_sequence(&self) -> TouchSequence {
        let mut idx: Vec<usize> = Vec::with_capacity(self.parts.len() - 1);
        let mut acc = 0;
        for &p in self.parts.iter().skip(1).rev() {
            acc += p;
            idx.push(acc);
        }
        TouchSequence::new(idx, self.n).expect("suffix sums are strictly increasing and < n+1")
    }

    /// The encoded partition: the maximal member of the interval of this
    /// composition's touch sequence (all corners on the antidiagonal).
    pub fn to_partition(&self) -> StaircasePartition {
        self.touch_sequence().interval_bounds().1
    }
}

/// A member of the interval of `ts` with the given dimension, if the
/// interval's size range contains it. Rows are raised greedily from the top
/// within the interval's bounds; the intermediate shapes stay weakly
/// decreasing because the bounds are, so every size in the range is hit.
pub fn interval_member_with_dimension(
    ts: &TouchSequence,
    a: u64,
) -> Option<StaircasePartition> {
    let (lo, hi) = ts.interval_bounds();
    if a < lo.dimension() || a > hi.dimension() {
        return None;
    }
    let mut budget = a - lo.dimension();
    let mut parts = lo.parts().to_vec();
    for i in 0..parts.len() {
        if budget == 0 {
            break;
        }
        let cap = if i == 0 {
            hi.parts()[0]
        } else {
            hi.parts()[i].min(parts[i - 1])
        };
        let add = ((cap - parts[i]) as u64).min(budget) as usize;
        parts[i] += add;
        budget -= add as u64;
    }
    debug_assert_eq!(budget, 0);
    Some(StaircasePartition::new(&parts, ts.rank()).expect("greedy fill stays in the staircase"))
}

/// Witness ideals of dimension `A` attaining the extremal classes
/// `(class_min(n, A), class_max(n, A))`. The maximal-class witness lives in
/// the interval of `(1, ..., k)`; the minimal-class witness in the balanced
/// interval, or in a single-touch interval when the minimal class is 1.
pub fn dimension_witness(
    n: usize,
    a: u64,
) -> Result<(StaircasePartition, StaircasePartition)> {
    let k_min = class_min(n, a)?;
    if a == 0 {
        let zero = StaircasePartition::zero(n);
        return Ok((zero.clone(), zero));
    }
    let k_max = class_max(n, a)?;
    let mut min_candidates = vec![CornerComposition::balanced(n, k_min)?.touch_sequence()];
    if k_min == 1 {
        for j in [1, n.div_ceil(2)] {
            min_candidates.push(TouchSequence::new(vec![j], n).expect("single touch"));
        }
    }
    let min_witness = min_candidates
        .iter()
        .find_map(|ts| interval_member_with_dimension(ts, a))
        .ok_or_else(|| Error::OutOfRange(format!("no ideal of dimension {a} at rank {n}")))?;
    let prefix = TouchSequence::new((1..=k_max).collect(), n).expect("1..=k is valid");
    let max_witness = interval_member_with_dimension(&prefix, a)
        .ok_or_else(|| Error::OutOfRange(format!("no ideal of dimension {a} at rank {n}")))?;
    Ok((min_witness, max_witness))
}

/// Witness ideals attaining the extremal dimensions at class `k`: the
/// minimal one is the interval floor of the touch sequence `(1, 2, ..., k)`,
/// the maximal one is the corner partition of the balanced composition.
pub fn extremal_witness(
    n: usize,
    k: usize,
) -> Result<(StaircasePartition, StaircasePartition)> {
    if k < 1 {
        return Err(Error::OutOfRange("class must be at least 1".into()));
    }
    check_class_range(n, k)?;
    let staircase_prefix = TouchSequence::new((1..=k).collect(), n).expect("1..=k is valid");
    let (p_min, _) = staircase_prefix.interval_bounds();
    let p_max = CornerComposition::balanced(n, k)?.to_partition();
    Ok((p_min, p_max))
}
