//! Class-of-nilpotence algorithms: the full bracket-depth tableau, the fast
//! re-ranking recursion, the zig-zag touch sequence with its interval
//! decomposition, and the affine-permutation encoding of an ideal.

use crate::error::{Error, Result};
use crate::staircase::{partitions, RootCell, StaircasePartition};

/// The bracket-depth table of an ideal: `t[i][j]` is the largest `m` such
/// that the root space of cell `(i, j)` still occurs in the m-fold bracket
/// of the ideal with itself.
///
/// Entries are zero exactly outside the partition, one at corner cells, and
/// otherwise `max over j < k <= n-i+1 of t[i][k] + t[n-k+2][j]` (the two
/// factors are the unique ways the cell's root splits as a sum of roots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotenceFilling {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl NilpotenceFilling {
    pub fn compute(p: &StaircasePartition) -> Self {
        let n = p.rank();
        let mut rows: Vec<Vec<u32>> = (0..n).map(|i| vec![0u32; n - i]).collect();
        // Evaluate by decreasing i+j. Both dependencies of cell (i, j) have a
        // strictly larger index sum inside the staircase, so one sweep from
        // the antidiagonal inward needs no fixpoint iteration.
        for s in (2..=n + 1).rev() {
            for i in s.saturating_sub(n + 1).max(1)..s {
                let j = s - i;
                if j > n - i + 1 {
                    continue;
                }
                let lam = p.part(i);
                if j > lam {
                    continue; // outside the partition: stays 0
                }
                if j == lam && p.part(i + 1) < lam {
                    rows[i - 1][j - 1] = 1; // corner cell
                    continue;
                }
                let mut best = 0;
                for k in j + 1..=n - i + 1 {
                    let v = rows[i - 1][k - 1] + rows[n - k + 1][j - 1];
                    best = best.max(v);
                }
                rows[i - 1][j - 1] = best;
            }
        }
        NilpotenceFilling { n, rows }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// 1-based cell access, `1 <= i <= n`, `1 <= j <= n-i+1`.
    pub fn value(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The class of nilpotence: the top-left entry.
    pub fn class(&self) -> usize {
        self.rows[0][0] as usize
    }

    /// Total of all entries, i.e. the size of the inversion multiset.
    pub fn total(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|&v| v as u64)
            .sum()
    }
}

/// Class of nilpotence by the full tableau.
pub fn class_tableau(p: &StaircasePartition) -> usize {
    NilpotenceFilling::compute(p).class()
}

/// Class of nilpotence by the fast recursion: strip the first row and
/// re-rank `(λ_{n+2-λ_1}, ..., λ_n)` at rank `λ_1 - 1`, adding one per step.
pub fn class_fast(p: &StaircasePartition) -> usize {
    let mut parts: &[usize] = p.parts();
    let mut class = 0;
    while let Some(&first) = parts.first() {
        if first == 0 {
            break;
        }
        let rank = parts.len();
        parts = &parts[rank + 1 - first..];
        class += 1;
    }
    class
}

/// The indices `0 < i_1 < ... < i_k < n+1` where the zig-zag line of the
/// partition touches the antidiagonal `x + y = n + 1`; its length is the
/// class of nilpotence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TouchSequence {
    n: usize,
    indices: Vec<usize>,
}

impl TouchSequence {
    /// Validate a sequence `0 < i_1 < ... < i_k < n+1`.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        for (pos, &i) in indices.iter().enumerate() {
            let lower = if pos == 0 { 0 } else { indices[pos - 1] };
            if i <= lower || i > n {
                return Err(Error::InvalidTouchSequence(format!(
                    "indices must be strictly increasing in 1..={n}"
                )));
            }
        }
        Ok(TouchSequence { n, indices })
    }

    /// The touch sequence of a partition: `i_k = λ_1`, then repeatedly
    /// `i_{j-1} = λ_{n - i_j + 2}` until the next value would be zero.
    pub fn of(p: &StaircasePartition) -> Self {
        let n = p.rank();
        let mut descending = Vec::new();
        let mut cur = p.part(1);
        while cur > 0 {
            descending.push(cur);
            cur = p.part(n - cur + 2);
        }
        descending.reverse();
        TouchSequence {
            n,
            indices: descending,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Ascending indices `i_1 < ... < i_k`.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The minimal and maximal partitions `(λ^m, λ^M)` sharing this touch
    /// sequence: `λ^M = (i_k^(n-i_k+1), i_(k-1)^(i_k - i_(k-1)), ...,
    /// i_1^(i_2-i_1), 0^(i_1-1))` and `λ^m = (i_k, i_(k-1)^(n-i_k+1),
    /// i_(k-2)^(i_k - i_(k-1)), ..., i_1^(i_3-i_2), 0^(i_2-2))`.
    pub fn interval_bounds(&self) -> (StaircasePartition, StaircasePartition) {
        let n = self.n;
        let k = self.indices.len();
        if k == 0 {
            return (StaircasePartition::zero(n), StaircasePartition::zero(n));
        }
        let idx = &self.indices; // idx[j-1] = i_j

        let mut upper = Vec::with_capacity(n);
        for j in (1..=k).rev() {
            let count = if j == k {
                n - idx[k - 1] + 1
            } else {
                idx[j] - idx[j - 1]
            };
            upper.extend(std::iter::repeat_n(idx[j - 1], count));
        }
        upper.resize(n, 0);

        let mut lower = Vec::with_capacity(n);
        lower.push(idx[k - 1]);
        for j in (1..k).rev() {
            let count = if j == k - 1 {
                n - idx[k - 1] + 1
            } else {
                idx[j + 1] - idx[j]
            };
            lower.extend(std::iter::repeat_n(idx[j - 1], count));
        }
        lower.resize(n, 0);

        let lo = StaircasePartition::new(&lower, n).expect("interval lower bound is valid");
        let hi = StaircasePartition::new(&upper, n).expect("interval upper bound is valid");
        (lo, hi)
    }
}

/// The interval decomposition at rank `n`: one entry `(touch sequence, λ^m,
/// λ^M)` per subset of `1..=n`, ordered by subset size then lexicographically.
/// The intervals are pairwise disjoint and cover every staircase partition;
/// all members of an interval share its touch sequence and class.
pub fn decomposition(n: usize) -> Vec<(TouchSequence, StaircasePartition, StaircasePartition)> {
    let mut out = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    fn rec(
        n: usize,
        k: usize,
        start: usize,
        subset: &mut Vec<usize>,
        out: &mut Vec<(TouchSequence, StaircasePartition, StaircasePartition)>,
    ) {
        if subset.len() == k {
            let ts = TouchSequence::new(subset.clone(), n).expect("subset is valid");
            let (lo, hi) = ts.interval_bounds();
            out.push((ts, lo, hi));
            return;
        }
        for i in start..=n {
            subset.push(i);
            rec(n, k, i + 1, subset, out);
            subset.pop();
        }
    }
    for k in 0..=n {
        rec(n, k, 1, &mut subset, &mut out);
    }
    out
}

/// The window `w^{-1}(1), ..., w^{-1}(n+1)` of the affine permutation
/// attached to an ideal. The window sums to `(n+2)(n+1)/2` and its residues
/// mod `n+1` are pairwise distinct, which pins down the permutation via
/// `w(t + n + 1) = w(t) + n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWindow {
    n: usize,
    values: Vec<i64>,
}

impl AffineWindow {
    /// `w^{-1}(i) = i + sum_{j<i} t[j][n-i+2] - sum_{j>i} t[i][n-j+2]`.
    pub fn of(p: &StaircasePartition) -> Self {
        let filling = NilpotenceFilling::compute(p);
        AffineWindow::from_filling(&filling)
    }

    pub fn from_filling(filling: &NilpotenceFilling) -> Self {
        let n = filling.rank();
        let mut values = Vec::with_capacity(n + 1);
        for i in 1..=n + 1 {
            let mut v = i as i64;
            for j in 1..i {
                v += filling.value(j, n + 2 - i) as i64;
            }
            for j in i + 1..=n + 1 {
                v -= filling.value(i, n + 2 - j) as i64;
            }
            values.push(v);
        }
        AffineWindow { n, values }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `values()[i-1]` is `w^{-1}(i)`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn window_sum(&self) -> i64 {
        self.values.iter().sum()
    }

    /// Both window invariants: the sum and the distinct-residues condition.
    pub fn invariants_hold(&self) -> bool {
        let n1 = (self.n + 1) as i64;
        let want: i64 = (n1 + 1) * n1 / 2;
        if self.window_sum() != want {
            return false;
        }
        let mut seen = vec![false; self.n + 1];
        for &v in &self.values {
            let r = v.rem_euclid(n1) as usize;
            if seen[r] {
                return false;
            }
            seen[r] = true;
        }
        true
    }
}

/// The inversion multiset of the affine permutation: one entry `(cell, h)`
/// for every cell and every level `1 <= h <= t[i][j]`.
pub fn inversion_levels(p: &StaircasePartition) -> Vec<(RootCell, u32)> {
    let filling = NilpotenceFilling::compute(p);
    let n = filling.rank();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n - i + 1 {
            for h in 1..=filling.value(i, j) {
                out.push((RootCell { row: i, col: j }, h));
            }
        }
    }
    out
}

/// Check the inversion-table identity
/// `floor((w^{-1}(j) - w^{-1}(i)) / (n+1)) = t[i][n-j+2]` for all
/// `1 <= i < j <= n+1`; returns the first violated pair if any.
pub fn inversion_table_mismatch(p: &StaircasePartition) -> Option<(usize, usize)> {
    let filling = NilpotenceFilling::compute(p);
    let window = AffineWindow::from_filling(&filling);
    let n = p.rank();
    let w = window.values();
    for i in 1..=n {
        for j in i + 1..=n + 1 {
            let got = (w[j - 1] - w[i - 1]).div_euclid(n as i64 + 1);
            if got != filling.value(i, n + 2 - j) as i64 {
                return Some((i, j));
            }
        }
    }
    None
}

/// Exhaustive consistency of the three class computations up to `n_max`;
/// returns the first disagreeing partition.
pub fn class_agreement_mismatch(n_max: usize) -> Option<StaircasePartition> {
    for n in 1..=n_max {
        for p in partitions(n) {
            let a = class_tableau(&p);
            let b = class_fast(&p);
            let c = TouchSequence::of(&p).len();
            if a != b || b != c {
                return Some(p);
            }
        }
    }
    None
}
