//! Dyck paths with their height and area statistics, the 45-degree rotation
//! of a partition border, and the peak-insertion bijection that converts
//! class of nilpotence into path height.

use crate::error::{Error, Result};
use crate::nilpotence::TouchSequence;
use crate::staircase::StaircasePartition;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A lattice path of `(1,1)` and `(1,-1)` steps from the origin back to the
/// axis that never dips below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i64;
        for s in &steps {
            h += step_delta(*s);
            if h < 0 {
                return Err(Error::InvalidPath("path dips below the axis".into()));
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath(
                "unequal numbers of up- and down-steps".into(),
            ));
        }
        Ok(DyckPath { steps })
    }

    /// Parse a step literal over `U`/`D` (case-insensitive) or the digit
    /// encoding `3` = up, `4` = down.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' | '3' => Ok(Step::Up),
                'D' | 'd' | '4' => Ok(Step::Down),
                other => Err(Error::InvalidPath(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Maximum ordinate reached; 0 for the empty path.
    pub fn height(&self) -> usize {
        max_height(&self.steps) as usize
    }

    /// The geometric area between the path and the axis, always an integer
    /// (each step contributes a half-integer trapezoid and steps pair up).
    /// This is twice the half-unit normalization in which the full pyramid
    /// over `2m` steps has area `m^2 / 2`.
    pub fn twice_area(&self) -> u64 {
        let mut h = 0i64;
        let mut doubled = 0i64;
        for s in &self.steps {
            let next = h + step_delta(*s);
            doubled += h + next;
            h = next;
        }
        (doubled / 2) as u64
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

fn step_delta(s: Step) -> i64 {
    match s {
        Step::Up => 1,
        Step::Down => -1,
    }
}

fn max_height(steps: &[Step]) -> i64 {
    let mut h = 0i64;
    let mut max = 0i64;
    for s in steps {
        h += step_delta(*s);
        max = max.max(h);
    }
    max
}

fn alternating(pairs: usize) -> Vec<Step> {
    let mut v = Vec::with_capacity(2 * pairs);
    for _ in 0..pairs {
        v.push(Step::Up);
        v.push(Step::Down);
    }
    v
}

/// All Dyck paths of the given semilength, in lexicographic step order
/// (up before down).
pub fn all_paths(semilength: usize) -> Vec<DyckPath> {
    fn rec(ups: usize, downs: usize, m: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if downs == m {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < m {
            cur.push(Step::Up);
            rec(ups + 1, downs, m, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::Down);
            rec(ups, downs + 1, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, semilength, &mut Vec::new(), &mut out);
    out
}

/// Rotate the partition border by 45 degrees: read the border of `λ` inside
/// the staircase from top-right to bottom-left as left/down steps (row `i`
/// contributes its overhang of left-steps then one down-step), reverse, and
/// map down to `Up`, left to `Down`.
///
/// The zero ideal maps to the pyramid `U^(n+1) D^(n+1)` and the full
/// staircase to `(UD)^(n+1)`; the area satisfies
/// `twice_area = (n+1)^2 - 2|λ|`.
pub fn rotation_path(p: &StaircasePartition) -> DyckPath {
    let n = p.rank();
    let mut border = Vec::with_capacity(2 * n + 2); // true = down-step in reading order
    let mut prev = n + 1;
    for i in 1..=n + 1 {
        let lam = p.part(i);
        border.extend(std::iter::repeat_n(false, prev - lam));
        border.push(true);
        prev = lam;
    }
    let steps: Vec<Step> = border
        .iter()
        .rev()
        .map(|&down| if down { Step::Up } else { Step::Down })
        .collect();
    DyckPath::new(steps).expect("rotated border is a valid path")
}

/// The layout of the independent rectangles cut out by a touch sequence,
/// processed top to bottom. Rectangle `k` spans partition rows
/// `2 ..= n-i_k+1` and columns `i_(k-1)+1 ..= i_k`; rectangle `j < k` spans
/// rows `n-i_(j+1)+3 ..= n-i_j+1` and columns `i_(j-1)+1 ..= i_j`.
fn rectangle(idx: &[usize], n: usize, j: usize) -> (usize, usize, usize, usize) {
    let k = idx.len();
    let i_j = idx[j - 1];
    let i_jm1 = if j >= 2 { idx[j - 2] } else { 0 };
    let (row_start, row_count) = if j == k {
        (2, n - i_j)
    } else {
        let i_jp1 = idx[j];
        (n - i_jp1 + 3, i_jp1 - i_j - 1)
    };
    (row_start, row_count, i_jm1, i_j - i_jm1)
}

/// Insert `counts[s]` up-down pairs at the apex of the `(s+1)`-th highest
/// peak, left to right. Panics if the number of highest peaks differs from
/// `counts.len()`: each stage of the construction must see exactly one more
/// highest peak than its rectangle has rows.
fn insert_at_highest_peaks(steps: &[Step], counts: &[usize]) -> Vec<Step> {
    let max = max_height(steps);
    let mut peaks = Vec::new();
    let mut h = 0i64;
    for (i, s) in steps.iter().enumerate() {
        h += step_delta(*s);
        if *s == Step::Up && h == max {
            debug_assert_eq!(steps.get(i + 1), Some(&Step::Down));
            peaks.push(i);
        }
    }
    assert_eq!(
        peaks.len(),
        counts.len(),
        "stage invariant violated: {} highest peaks for {} insertion slots",
        peaks.len(),
        counts.len()
    );
    let extra: usize = counts.iter().sum();
    let mut out = Vec::with_capacity(steps.len() + 2 * extra);
    let mut slot = 0;
    for (i, s) in steps.iter().enumerate() {
        out.push(*s);
        if slot < peaks.len() && peaks[slot] == i {
            out.extend(alternating(counts[slot]));
            slot += 1;
        }
    }
    out
}

/// The stagewise construction of [`height_bijection`]: the initial zig-zag
/// followed by the path after each rectangle is folded in, top to bottom.
/// The final entry is the image path; its height is `class + 1`.
pub fn height_bijection_stages(p: &StaircasePartition) -> Vec<DyckPath> {
    let n = p.rank();
    let ts = TouchSequence::of(p);
    let k = ts.len();
    if k == 0 {
        return vec![DyckPath {
            steps: alternating(n + 1),
        }];
    }
    let idx = ts.indices();
    let mut steps = alternating(n + 1 - idx[k - 1]);
    let mut stages = vec![DyckPath {
        steps: steps.clone(),
    }];
    for j in (1..=k).rev() {
        let (row_start, row_count, col_offset, width) = rectangle(idx, n, j);
        // border word of the sub-partition clipped to the rectangle:
        // counts[s] is the number of left-steps before the (s+1)-th down-step
        let mut counts = Vec::with_capacity(row_count + 1);
        let mut prev = width;
        for r in 0..row_count {
            let part = p.part(row_start + r);
            assert!(
                part >= col_offset && part - col_offset <= width,
                "partition row escapes its rectangle"
            );
            let clipped = part - col_offset;
            counts.push(prev - clipped);
            prev = clipped;
        }
        counts.push(prev);
        steps = insert_at_highest_peaks(&steps, &counts);
        stages.push(DyckPath {
            steps: steps.clone(),
        });
    }
    stages
}

/// The bijection from ideals at rank `n` to Dyck paths of length `2n+2`,
/// sending class of nilpotence `k` to height `k+1`: start from the zig-zag
/// `(UD)^(n+1-i_k)` and fold in the border word of each touch-sequence
/// rectangle, top to bottom, by inserting up-down pairs into highest peaks.
pub fn height_bijection(p: &StaircasePartition) -> DyckPath {
    height_bijection_stages(p).pop().expect("at least one stage")
}

/// Inverse of [`height_bijection`]: peel insertions level by level from the
/// top. At the top level `m`, the slots of the last stage are the maximal
/// runs `U(UD)^a D` with apexes at `m` (which read back `a`) and the plain
/// peaks at `m-1` (which read back 0), in left-to-right order; flattening
/// every run to `UD` recovers the previous stage.
pub fn height_bijection_inverse(path: &DyckPath, n: usize) -> Result<StaircasePartition> {
    let want = 2 * n + 2;
    if path.len() != want {
        return Err(Error::PathLength {
            got: path.len(),
            want,
        });
    }
    let mut steps = path.steps().to_vec();
    let mut words: Vec<Vec<usize>> = Vec::new(); // words[j-1] belongs to rectangle j
    loop {
        let m = max_height(&steps);
        if m <= 1 {
            break;
        }
        let (word, flattened) = peel_level(&steps, m)?;
        words.push(word);
        steps = flattened;
    }
    let k = words.len();
    if k == 0 {
        return Ok(StaircasePartition::zero(n));
    }

    // touch indices from the rectangle widths
    let widths: Vec<usize> = words.iter().map(|w| w.iter().sum()).collect();
    let mut idx = Vec::with_capacity(k);
    let mut acc = 0usize;
    for w in &widths {
        acc += w;
        idx.push(acc);
    }
    let i_k = idx[k - 1];
    if i_k > n || steps.len() != 2 * (n + 1 - i_k) {
        return Err(Error::InvalidPath(
            "level words are inconsistent with the path length".into(),
        ));
    }
    for j in 1..=k {
        let (_, row_count, _, _) = rectangle(&idx, n, j);
        if words[j - 1].len() != row_count + 1 {
            return Err(Error::InvalidPath(
                "level word does not fit its rectangle".into(),
            ));
        }
    }

    let mut parts = vec![0usize; n];
    parts[0] = i_k;
    for j in (1..=k).rev() {
        let (row_start, row_count, col_offset, width) = rectangle(&idx, n, j);
        let word = &words[j - 1];
        let mut cur = width;
        for r in 0..row_count {
            cur = cur
                .checked_sub(word[r])
                .ok_or_else(|| Error::InvalidPath("level word overruns its rectangle".into()))?;
            parts[row_start + r - 1] = col_offset + cur;
        }
        if j >= 2 {
            // row n - i_j + 2 is the touch row between rectangles j and j-1
            parts[n - idx[j - 1] + 1] = idx[j - 2];
        }
    }
    let p = StaircasePartition::new(&parts, n)?;
    if &height_bijection(&p) != path {
        return Err(Error::InvalidPath(
            "path is not in the image of the height bijection".into(),
        ));
    }
    Ok(p)
}

/// One peeling pass at the current top level `m >= 2`; returns the slot word
/// and the flattened path.
fn peel_level(steps: &[Step], m: i64) -> Result<(Vec<usize>, Vec<Step>)> {
    fn bad() -> Error {
        Error::InvalidPath("malformed level structure".into())
    }
    let mut word = Vec::new();
    let mut out = Vec::with_capacity(steps.len());
    let mut h = 0i64;
    let mut i = 0;
    while i < steps.len() {
        let s = steps[i];
        if s == Step::Up && h == m - 2 {
            match steps.get(i + 1) {
                Some(Step::Down) => {
                    // plain peak with apex at m-1
                    word.push(0);
                    out.push(Step::Up);
                    out.push(Step::Down);
                    i += 2;
                    continue;
                }
                Some(Step::Up) => {
                    // run U (UD)^a D between m-2 and m
                    let mut a = 0usize;
                    let mut j = i + 1;
                    loop {
                        if steps.get(j) != Some(&Step::Up)
                            || steps.get(j + 1) != Some(&Step::Down)
                        {
                            return Err(bad());
                        }
                        a += 1;
                        j += 2;
                        match steps.get(j) {
                            Some(Step::Down) => break,
                            Some(Step::Up) => {}
                            None => return Err(bad()),
                        }
                    }
                    word.push(a);
                    out.push(Step::Up);
                    out.push(Step::Down);
                    i = j + 1;
                    continue;
                }
                None => return Err(bad()),
            }
        }
        h += step_delta(s);
        if h >= m {
            return Err(bad());
        }
        out.push(s);
        i += 1;
    }
    Ok((word, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilpotence::class_fast;
    use crate::staircase::partitions;
    use std::collections::BTreeSet;

    const FIG_3B: &str = "UDUUDDUUDUDUDDUUDD";
    const FIG_3C: &str = "UDUUUDDDUUDUUDDUUUDDUDDDUUDD";

    fn sp(parts: &[usize], n: usize) -> StaircasePartition {
        StaircasePartition::new(parts, n).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p = DyckPath::parse("UDUD").unwrap();
        assert_eq!(p.to_string(), "UDUD");
        assert_eq!(DyckPath::parse("3434").unwrap(), p);
        assert_eq!(DyckPath::parse("udud").unwrap(), p);
        assert!(DyckPath::parse("UDX").is_err());
        assert!(DyckPath::parse("DU").is_err()); // dips below axis
        assert!(DyckPath::parse("UUD").is_err()); // does not return
    }

    #[test]
    fn height_examples() {
        assert_eq!(DyckPath::parse("UDUD").unwrap().height(), 1);
        assert_eq!(DyckPath::parse("UUUUDDDD").unwrap().height(), 4);
        assert_eq!(DyckPath::parse(FIG_3C).unwrap().height(), 4);
        assert_eq!(DyckPath::new(vec![]).unwrap().height(), 0);
    }

    #[test]
    fn area_examples() {
        assert_eq!(DyckPath::parse("UD").unwrap().twice_area(), 1);
        assert_eq!(DyckPath::parse("UUDD").unwrap().twice_area(), 4);
        for n in 0..6 {
            let zigzag = DyckPath {
                steps: alternating(n + 1),
            };
            assert_eq!(zigzag.twice_area(), (n + 1) as u64);
        }
    }

    #[test]
    fn path_statistics_invariants() {
        // nonempty paths have height >= 1 and twice-area >= semilength
        for m in 1..=7 {
            for d in all_paths(m) {
                assert!(d.height() >= 1, "{d}");
                assert!(d.twice_area() >= d.semilength() as u64, "{d}");
            }
        }
    }

    #[test]
    fn all_paths_are_counted_by_catalan() {
        use crate::counting::catalan;
        use crate::exact::BigInt;
        for m in 0..=8 {
            let paths = all_paths(m);
            assert_eq!(BigInt::from(paths.len()), catalan(m), "m={m}");
            let unique: BTreeSet<_> = paths.iter().collect();
            assert_eq!(unique.len(), paths.len());
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(
            rotation_path(&StaircasePartition::zero(1)).to_string(),
            "UUDD"
        );
        assert_eq!(rotation_path(&sp(&[1], 1)).to_string(), "UDUD");
        for n in 1..=6 {
            assert_eq!(
                rotation_path(&StaircasePartition::full(n)),
                DyckPath {
                    steps: alternating(n + 1)
                },
                "n={n}"
            );
        }
    }

    #[test]
    fn rotation_area_law_and_bijectivity() {
        for n in 1..=7 {
            let mut images = BTreeSet::new();
            for p in partitions(n) {
                let d = rotation_path(&p);
                assert_eq!(d.len(), 2 * n + 2, "n={n} p={p}");
                let want = ((n + 1) * (n + 1)) as u64 - 2 * p.dimension();
                assert_eq!(d.twice_area(), want, "n={n} p={p}");
                images.insert(d);
            }
            let everything: BTreeSet<_> = all_paths(n + 1).into_iter().collect();
            assert_eq!(images, everything, "n={n}");
        }
    }

    #[test]
    fn worked_example_with_intermediate_stage() {
        let p = sp(&[10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0], 13);
        let stages = height_bijection_stages(&p);
        assert_eq!(stages[0].to_string(), "UDUDUDUD");
        assert_eq!(stages[1].to_string(), FIG_3B);
        assert_eq!(stages[3].to_string(), FIG_3C);
        assert_eq!(height_bijection(&p).to_string(), FIG_3C);
        assert_eq!(height_bijection(&p).height(), 4);
    }

    #[test]
    fn bijection_edge_images() {
        for n in 1..=7 {
            let zero = height_bijection(&StaircasePartition::zero(n));
            assert_eq!(zero.steps, alternating(n + 1), "n={n}");
            let full = height_bijection(&StaircasePartition::full(n));
            let pyramid: Vec<Step> = std::iter::repeat_n(Step::Up, n + 1)
                .chain(std::iter::repeat_n(Step::Down, n + 1))
                .collect();
            assert_eq!(full.steps, pyramid, "n={n}");
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            height_bijection_inverse(&DyckPath::parse("UDUD").unwrap(), 1).unwrap(),
            StaircasePartition::zero(1)
        );
        let p = height_bijection_inverse(&DyckPath::parse(FIG_3C).unwrap(), 13).unwrap();
        assert_eq!(p, sp(&[10, 10, 9, 6, 5, 4, 4, 3, 1, 1, 1, 1, 0], 13));
        let full = height_bijection_inverse(&DyckPath::parse("UUUUDDDD").unwrap(), 3).unwrap();
        assert_eq!(full, StaircasePartition::full(3));
        assert!(matches!(
            height_bijection_inverse(&DyckPath::parse("UD").unwrap(), 3),
            Err(Error::PathLength { got: 2, want: 8 })
        ));
    }

    #[test]
    fn bijectivity_and_height_law_small() {
        for n in 1..=6 {
            let mut images = BTreeSet::new();
            for p in partitions(n) {
                let d = height_bijection(&p);
                assert_eq!(d.height(), class_fast(&p) + 1, "n={n} p={p}");
                let back = height_bijection_inverse(&d, n).unwrap();
                assert_eq!(back, p, "n={n} p={p}");
                images.insert(d);
            }
            let everything: BTreeSet<_> = all_paths(n + 1).into_iter().collect();
            assert_eq!(images, everything, "n={n}");
        }
    }
}
