//! The partition model of ad-nilpotent ideals: partitions contained in the
//! staircase `(n, n-1, ..., 1)`, their enumeration in lexicographic order,
//! and the correspondence with positive roots.

use crate::error::{Error, Result};
use std::fmt;

/// A partition contained in the staircase `(n, n-1, ..., 1)`.
///
/// Carries its rank explicitly: the same part list denotes different ideals
/// at different ranks, and the fast class recursion re-ranks sub-partitions.
/// Parts are stored with trailing zeros, always exactly `n` of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StaircasePartition {
    n: usize,
    parts: Vec<usize>,
}

impl StaircasePartition {
    /// Validate and normalize a part list at rank `n` (pads with zeros).
    pub fn new(parts: &[usize], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPartition("rank must be positive".into()));
        }
        if parts.len() > n && parts[n..].iter().any(|&p| p > 0) {
            return Err(Error::InvalidPartition(format!(
                "more than {n} nonzero parts"
            )));
        }
        let mut normalized = vec![0usize; n];
        for (i, &p) in parts.iter().take(n).enumerate() {
            if i > 0 && p > parts[i - 1] {
                return Err(Error::InvalidPartition(format!(
                    "parts not weakly decreasing at position {}",
                    i + 1
                )));
            }
            if p > n - i {
                return Err(Error::InvalidPartition(format!(
                    "part {} = {p} exceeds the staircase bound {}",
                    i + 1,
                    n - i
                )));
            }
            normalized[i] = p;
        }
        Ok(StaircasePartition { n, parts: normalized })
    }

    /// The zero ideal.
    pub fn zero(n: usize) -> Self {
        StaircasePartition {
            n,
            parts: vec![0; n],
        }
    }

    /// The full staircase `(n, n-1, ..., 1)`, i.e. the whole positive system.
    pub fn full(n: usize) -> Self {
        StaircasePartition {
            n,
            parts: (1..=n).rev().collect(),
        }
    }

    /// Parse the comma-separated literal, e.g. `10,10,9,6,5,4,4,3,1,1,1,1,0`.
    /// An empty string denotes the zero ideal.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return StaircasePartition::new(&[], n);
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?}")))
            })
            .collect::<Result<_>>()?;
        StaircasePartition::new(&parts, n)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// 1-based part access; indices beyond `n` read as 0.
    pub fn part(&self, i: usize) -> usize {
        debug_assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.first().is_none_or(|&p| p == 0)
    }

    /// Dimension of the corresponding ideal: the number of root spaces, `|λ|`.
    pub fn dimension(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Cell-wise containment (both partitions must have the same rank).
    pub fn contains(&self, other: &StaircasePartition) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.parts
            .iter()
            .zip(&other.parts)
            .all(|(&a, &b)| a >= b)
    }

    /// The cells of the diagram, i.e. the roots whose spaces span the ideal.
    pub fn ideal_roots(&self) -> Vec<RootCell> {
        let mut cells = Vec::with_capacity(self.dimension() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                cells.push(RootCell { row: i + 1, col: j });
            }
        }
        cells
    }

    /// Cells with no cell to the right and none below.
    pub fn corner_cells(&self) -> Vec<RootCell> {
        let mut corners = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            let below = self.parts.get(i + 1).copied().unwrap_or(0);
            if p > 0 && p > below {
                corners.push(RootCell { row: i + 1, col: p });
            }
        }
        corners
    }
}

impl fmt::Display for StaircasePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// A cell `(i, j)` of the staircase, identified with the positive root
/// `α_i + ... + α_(n-j+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootCell {
    pub row: usize,
    pub col: usize,
}

impl RootCell {
    /// The simple-root interval `(i, n-j+1)` of the root this cell carries.
    pub fn root_interval(&self, n: usize) -> (usize, usize) {
        (self.row, n - self.col + 1)
    }
}

/// Lexicographic enumeration of all staircase partitions at rank `n`,
/// smallest first: `(0,...,0)`, `(1,0,...)`, `(1,1,0,...)`, ...
///
/// The stream splits by first part into `n+1` independent sub-ranges
/// ([`partitions_with_first`]) that concatenate, in order, to the full
/// enumeration; shards may be consumed concurrently.
pub fn partitions(n: usize) -> impl Iterator<Item = StaircasePartition> {
    (0..=n).flat_map(move |v| partitions_with_first(n, v))
}

/// The contiguous lexicographic sub-range with `λ_1 = first`.
pub fn partitions_with_first(n: usize, first: usize) -> PartitionRange {
    assert!(first <= n, "first part exceeds the staircase bound");
    let mut parts = vec![0usize; n];
    parts[0] = first;
    PartitionRange {
        n,
        state: Some(parts),
    }
}

/// Iterator over one first-part shard of the partition stream.
pub struct PartitionRange {
    n: usize,
    state: Option<Vec<usize>>,
}

impl Iterator for PartitionRange {
    type Item = StaircasePartition;

    fn next(&mut self) -> Option<Self::Item> {
        let parts = self.state.as_mut()?;
        let item = StaircasePartition {
            n: self.n,
            parts: parts.clone(),
        };
        // advance: bump the last position that can grow, zero the tail;
        // position 0 is pinned to the shard's first part
        let mut advanced = false;
        for i in (1..self.n).rev() {
            let bound = (self.n - i).min(parts[i - 1]);
            if parts[i] < bound {
                parts[i] += 1;
                for p in parts[i + 1..].iter_mut() {
                    *p = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.state = None;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::catalan;
    use crate::exact::BigInt;

    #[test]
    fn validation_examples() {
        let p = StaircasePartition::new(&[3, 1], 3).unwrap();
        assert_eq!(p.parts(), &[3, 1, 0]);
        let z = StaircasePartition::new(&[], 5).unwrap();
        assert_eq!(z.parts(), &[0, 0, 0, 0, 0]);
        assert!(StaircasePartition::new(&[4, 1], 3).is_err()); // 4 > 3
        assert!(StaircasePartition::new(&[1, 2], 3).is_err()); // increasing
        assert!(StaircasePartition::new(&[1, 1, 1, 1], 3).is_err()); // too many
        assert!(StaircasePartition::new(&[2, 2], 2).is_err()); // row-2 bound
    }

    #[test]
    fn parse_roundtrip() {
        let p = StaircasePartition::parse("10,10,9,6,5,4,4,3,1,1,1,1,0", 13).unwrap();
        assert_eq!(p.dimension(), 55);
        assert_eq!(p.to_string(), "10,10,9,6,5,4,4,3,1,1,1,1,0");
        assert_eq!(
            StaircasePartition::parse("", 3).unwrap(),
            StaircasePartition::zero(3)
        );
        assert!(StaircasePartition::parse("a,b", 3).is_err());
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        for n in 1..=12 {
            let count = partitions(n).count();
            assert_eq!(BigInt::from(count), catalan(n + 1), "n={n}");
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let at1: Vec<_> = partitions(1).map(|p| p.parts().to_vec()).collect();
        assert_eq!(at1, vec![vec![0], vec![1]]);
        let at2: Vec<_> = partitions(2).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            at2,
            vec![
                vec![0, 0],
                vec![1, 0],
                vec![1, 1],
                vec![2, 0],
                vec![2, 1]
            ]
        );
    }

    #[test]
    fn enumeration_is_valid_sorted_unique() {
        for n in 1..=7 {
            let all: Vec<_> = partitions(n).collect();
            for p in &all {
                StaircasePartition::new(p.parts(), n).unwrap();
            }
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(all, sorted, "n={n}");
        }
    }

    #[test]
    fn shards_concatenate_to_full_stream() {
        let n = 6;
        let full: Vec<_> = partitions(n).collect();
        let mut glued = Vec::new();
        for v in 0..=n {
            glued.extend(partitions_with_first(n, v));
        }
        assert_eq!(full, glued);
    }

    #[test]
    fn roots_and_corners() {
        let p = StaircasePartition::new(&[3, 1], 3).unwrap();
        let roots = p.ideal_roots();
        assert_eq!(
            roots,
            vec![
                RootCell { row: 1, col: 1 },
                RootCell { row: 1, col: 2 },
                RootCell { row: 1, col: 3 },
                RootCell { row: 2, col: 1 },
            ]
        );
        assert_eq!(
            p.corner_cells(),
            vec![RootCell { row: 1, col: 3 }, RootCell { row: 2, col: 1 }]
        );
        assert!(StaircasePartition::zero(4).ideal_roots().is_empty());
        assert!(StaircasePartition::zero(4).corner_cells().is_empty());
        assert_eq!(StaircasePartition::full(3).ideal_roots().len(), 6);
        let q = StaircasePartition::new(&[2, 2, 1], 3).unwrap();
        assert_eq!(
            q.corner_cells(),
            vec![RootCell { row: 2, col: 2 }, RootCell { row: 3, col: 1 }]
        );
    }

    #[test]
    fn root_interval_endpoints() {
        // cell (1,2) at n=3 carries α_1 + α_2
        let c = RootCell { row: 1, col: 2 };
        assert_eq!(c.root_interval(3), (1, 2));
        // cell (1,1) carries the full sum α_1 + ... + α_n
        assert_eq!(RootCell { row: 1, col: 1 }.root_interval(3), (1, 3));
    }

    #[test]
    fn corners_regenerate_partition() {
        for n in 1..=7 {
            for p in partitions(n) {
                let corners = p.corner_cells();
                let mut parts = vec![0usize; n];
                // each corner (i, c) forces rows 1..=i to have at least c cells
                for c in corners {
                    for part in parts.iter_mut().take(c.row) {
                        *part = (*part).max(c.col);
                    }
                }
                assert_eq!(parts, p.parts(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn roots_form_dual_order_ideal() {
        // the cell set equals the union of cells weakly above-left of corners
        for n in 1..=6 {
            for p in partitions(n) {
                let cells: std::collections::BTreeSet<_> =
                    p.ideal_roots().into_iter().collect();
                let corners = p.corner_cells();
                let mut from_corners = std::collections::BTreeSet::new();
                for c in &corners {
                    for i in 1..=c.row {
                        for j in 1..=c.col {
                            from_corners.insert(RootCell { row: i, col: j });
                        }
                    }
                }
                assert_eq!(cells, from_corners, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(
            StaircasePartition::new(&[3, 1], 3).unwrap().dimension(),
            4
        );
        assert_eq!(StaircasePartition::zero(9).dimension(), 0);
    }
}
