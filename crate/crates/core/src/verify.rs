//! The cross-verification harness: every identity the crate computes by more
//! than one route, checked exhaustively up to a configurable rank. Each check
//! reports pass/fail plus either a summary or the first counterexample in
//! full (rank, partition literal, expected value, actual value).

use crate::counting::{
    catalan, classify_bruteforce, corollary_counts, count_atmost_det, count_atmost_reflection,
    count_atmost_sum, count_exact_class, series_chebyshev, series_contfrac, DetVariant,
};
use crate::dyck::{
    all_paths, height_bijection, height_bijection_inverse, height_bijection_stages, rotation_path,
};
use crate::exact::{BigInt, BiPoly};
use crate::nilpotence::{
    class_fast, class_tableau, decomposition, inversion_table_mismatch, AffineWindow,
    NilpotenceFilling, TouchSequence,
};
use crate::qt_catalan::{
    class_max, class_min, dim_max, dim_min, extremal_witness, qt_catalan_bruteforce,
    qt_catalan_formula,
};
use crate::staircase::{partitions, partitions_with_first, StaircasePartition};
use num_traits::One;
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CheckReport {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckReport {
            name,
            pass: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckReport {
            name,
            pass: false,
            detail,
        }
    }
}

/// Deliberate corruptions for exercising the harness itself: the run must
/// fail and print a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Perturb the reflection-formula count by one at the smallest rank.
    MiscountReflection,
}

/// Every check, in a fixed order, each limited to ranks `<= n_max` (brute
/// force additionally capped by `brute_max`). `filter` keeps the checks
/// whose name contains the given substring.
pub fn run_all(
    n_max: usize,
    brute_max: usize,
    filter: Option<&str>,
    fault: Fault,
) -> Vec<CheckReport> {
    let cap = n_max.min(brute_max);
    let checks: Vec<fn(usize, usize, Fault) -> CheckReport> = vec![
        |_, _, _| check_worked_example(),
        |_, _, _| check_displayed_fillings(),
        |n, _, _| check_class_agreement(n),
        |n, _, _| check_interval_decomposition(n),
        |n, c, f| check_count_agreement(n.min(c), f),
        |n, c, _| check_corollaries(n, c),
        |n, _, _| check_height_bijection(n),
        |n, _, _| check_rotation_area(n),
        |n, c, _| check_qt_catalan(n.min(c), c),
        |n, _, _| check_extremal(n),
        |n, _, _| check_affine(n),
    ];
    checks
        .into_iter()
        .map(|c| c(n_max, cap, fault))
        .filter(|r| filter.is_none_or(|f| r.name.contains(f)))
        .collect()
}

/// The rank-13 classification anchor: class 3 with touch sequence (1, 5, 10).
pub fn check_worked_example() -> CheckReport {
    const NAME: &str = "worked_example";
    let p = match StaircasePartition::parse("10,10,9,6,5,4,4,3,1,1,1,1,0", 13) {
        Ok(p) => p,
        Err(e) => return CheckReport::fail(NAME, format!("parse failed: {e}")),
    };
    let fast = class_fast(&p);
    let slow = class_tableau(&p);
    let ts = TouchSequence::of(&p);
    if fast != 3 || slow != 3 {
        return CheckReport::fail(
            NAME,
            format!("partition={p} expected class 3, got fast={fast} tableau={slow}"),
        );
    }
    if ts.indices() != [1, 5, 10] {
        return CheckReport::fail(
            NAME,
            format!("partition={p} expected touch (1,5,10), got {:?}", ts.indices()),
        );
    }
    CheckReport::pass(NAME, "class 3, touch sequence (1,5,10)".into())
}

/// The three displayed rank-4 fillings, cell for cell.
pub fn check_displayed_fillings() -> CheckReport {
    const NAME: &str = "displayed_fillings";
    let cases: [(&[usize], &[&[u32]]); 3] = [
        (&[2, 1], &[&[1, 1, 0, 0], &[1, 0, 0], &[0, 0], &[0]]),
        (&[3, 3, 2, 1], &[&[3, 2, 1, 0], &[3, 2, 1], &[2, 1], &[1]]),
        (&[4, 3, 2, 1], &[&[4, 3, 2, 1], &[3, 2, 1], &[2, 1], &[1]]),
    ];
    for (parts, want) in cases {
        let p = StaircasePartition::new(parts, 4).expect("display case is valid");
        let f = NilpotenceFilling::compute(&p);
        let got: Vec<Vec<u32>> = f.rows().to_vec();
        let want: Vec<Vec<u32>> = want.iter().map(|r| r.to_vec()).collect();
        if got != want {
            return CheckReport::fail(
                NAME,
                format!("partition={p} expected {want:?}, got {got:?}"),
            );
        }
    }
    CheckReport::pass(NAME, "3 fillings reproduced cell-for-cell".into())
}

/// Tableau class, fast class and touch-sequence length agree on every ideal.
pub fn check_class_agreement(n_max: usize) -> CheckReport {
    const NAME: &str = "class_agreement";
    let mismatch = (1..=n_max)
        .flat_map(|n| (0..=n).map(move |first| (n, first)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .find_map_first(|(n, first)| {
            partitions_with_first(n, first).find_map(|p| {
                let slow = class_tableau(&p);
                let fast = class_fast(&p);
                let touch = TouchSequence::of(&p).len();
                (slow != fast || fast != touch).then_some((n, p, slow, fast, touch))
            })
        });
    match mismatch {
        Some((n, p, slow, fast, touch)) => CheckReport::fail(
            NAME,
            format!("n={n} partition={p} tableau={slow} fast={fast} touch-length={touch}"),
        ),
        None => {
            let total: usize = (1..=n_max).map(|n| partitions(n).count()).sum();
            CheckReport::pass(NAME, format!("{total} ideals agree through n={n_max}"))
        }
    }
}

/// The touch intervals bracket their members, partition the whole lattice
/// interval, and have sizes given by the product of binomials.
pub fn check_interval_decomposition(n_max: usize) -> CheckReport {
    const NAME: &str = "interval_decomposition";
    for n in 1..=n_max {
        // every ideal lies in the interval of its own touch sequence
        for p in partitions(n) {
            let ts = TouchSequence::of(&p);
            let (lo, hi) = ts.interval_bounds();
            if !(p.contains(&lo) && hi.contains(&p)) {
                return CheckReport::fail(
                    NAME,
                    format!("n={n} partition={p} escapes its interval [{lo} .. {hi}]"),
                );
            }
            if ts.len() != class_fast(&p) {
                return CheckReport::fail(
                    NAME,
                    format!("n={n} partition={p} interval class mismatch"),
                );
            }
        }
        // Interval sizes by the binomial product; up to rank 8 also by
        // direct membership count. Every ideal lies in its own interval and
        // the product sizes sum to the Catalan number, so the intervals are
        // pairwise disjoint and covering at every rank checked.
        let mut total = BigInt::from(0u32);
        for (ts, lo, hi) in decomposition(n) {
            let idx = ts.indices();
            let k = idx.len();
            let mut product = BigInt::one();
            for j in 0..k {
                let prev = if j == 0 { 0 } else { idx[j - 1] as i64 };
                let next = if j + 1 < k { idx[j + 1] as i64 } else { n as i64 + 1 };
                product *= crate::exact::binomial(next - prev - 1, idx[j] as i64 - prev);
            }
            if n <= 8 {
                let members = partitions(n)
                    .filter(|p| p.contains(&lo) && hi.contains(p))
                    .count();
                if BigInt::from(members) != product {
                    return CheckReport::fail(
                        NAME,
                        format!(
                            "n={n} touch={idx:?} expected {product} members, counted {members}"
                        ),
                    );
                }
            }
            total += product;
        }
        if total != catalan(n + 1) {
            return CheckReport::fail(
                NAME,
                format!("n={n} interval sizes sum to {total}, expected {}", catalan(n + 1)),
            );
        }
    }
    CheckReport::pass(NAME, format!("intervals partition the ideals through n={n_max}"))
}

/// Five-way count agreement: weak-chain sum, both determinants, reflection,
/// the Chebyshev-quotient series, the continued fraction, and brute force.
pub fn check_count_agreement(n_max: usize, fault: Fault) -> CheckReport {
    const NAME: &str = "count_agreement";
    let pairs: Vec<(usize, usize)> = (1..=n_max)
        .flat_map(|n| (0..=n).map(move |h| (n, h)))
        .collect();
    let failure = pairs.into_par_iter().find_map_first(|(n, h)| {
        let want = count_atmost_sum(n, h);
        let mut routes: Vec<(&str, BigInt)> = vec![
            ("det-max-clamp", count_atmost_det(n, h, DetVariant::MaxClamp)),
            ("det-min-clamp", count_atmost_det(n, h, DetVariant::MinClamp)),
            ("reflection", count_atmost_reflection(n, h)),
            (
                "chebyshev-series",
                series_chebyshev(h, n + 1).coeff(n + 1).clone(),
            ),
            (
                "continued-fraction",
                series_contfrac(h, n + 1).coeff(n + 1).clone(),
            ),
        ];
        if fault == Fault::MiscountReflection && n == 1 {
            routes[2].1 += 1u32;
        }
        for (route, got) in routes {
            if got != want {
                return Some(format!(
                    "n={n} h={h} route={route} expected {want}, got {got}"
                ));
            }
        }
        None
    });
    if let Some(detail) = failure {
        return CheckReport::fail(NAME, detail);
    }
    // brute force against the sum, and the rank-3 anchor value
    if count_atmost_sum(3, 2) != BigInt::from(13u32) {
        return CheckReport::fail(
            NAME,
            format!("n=3 h=2 anchor expected 13, got {}", count_atmost_sum(3, 2)),
        );
    }
    for n in 1..=n_max {
        let tally = match classify_bruteforce(n, n_max) {
            Ok(t) => t,
            Err(e) => return CheckReport::fail(NAME, format!("n={n}: {e}")),
        };
        let mut acc = BigInt::from(0u32);
        for h in 0..=n {
            if let Some(c) = tally.get(&h) {
                if c != &count_exact_class(n, h) {
                    return CheckReport::fail(
                        NAME,
                        format!(
                            "n={n} k={h} brute force {c}, formula {}",
                            count_exact_class(n, h)
                        ),
                    );
                }
                acc += c;
            }
            if acc != count_atmost_sum(n, h) {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} h={h} brute-force partial sum {acc}, formula {}",
                        count_atmost_sum(n, h)
                    ),
                );
            }
        }
    }
    CheckReport::pass(
        NAME,
        format!("all routes agree for n<={n_max}, 0<=h<=n, incl. anchor 13 at n=3,h=2"),
    )
}

/// Closed forms `2^n`, `F_2n`, `(3^n+1)/2` against the sum formula (all
/// ranks up to `n_max`) and against brute force (up to the brute cap).
pub fn check_corollaries(n_max: usize, brute_cap: usize) -> CheckReport {
    const NAME: &str = "corollary_counts";
    for n in 1..=n_max {
        let c = corollary_counts(n);
        for (label, value, h) in [
            ("2^n", &c.abelian, 1),
            ("F_2n", &c.atmost2, 2),
            ("(3^n+1)/2", &c.atmost3, 3),
        ] {
            let want = count_atmost_sum(n, h);
            if value != &want {
                return CheckReport::fail(
                    NAME,
                    format!("n={n} {label} = {value}, sum formula gives {want}"),
                );
            }
        }
    }
    for n in 1..=n_max.min(15) {
        let total: BigInt = (0..=n).map(|k| count_exact_class(n, k)).sum();
        if total != catalan(n + 1) {
            return CheckReport::fail(
                NAME,
                format!("n={n} classes sum to {total}, expected {}", catalan(n + 1)),
            );
        }
    }
    for n in 1..=n_max.min(brute_cap) {
        let tally = classify_bruteforce(n, brute_cap).expect("within cap");
        let c = corollary_counts(n);
        let upto = |h: usize| -> BigInt { (0..=h).filter_map(|k| tally.get(&k)).sum() };
        if upto(1) != c.abelian || upto(2) != c.atmost2 || upto(3) != c.atmost3 {
            return CheckReport::fail(NAME, format!("n={n} brute force disagrees"));
        }
    }
    CheckReport::pass(NAME, format!("closed forms hold through n={n_max}"))
}

/// The height bijection: exhaustive bijectivity onto Dyck paths, the height
/// law `height = class + 1`, round-trip identity, and the worked rank-13
/// step sequences including the intermediate stage.
pub fn check_height_bijection(n_max: usize) -> CheckReport {
    const NAME: &str = "height_bijection";
    let p = StaircasePartition::parse("10,10,9,6,5,4,4,3,1,1,1,1,0", 13).expect("valid");
    let stages = height_bijection_stages(&p);
    let fig_b = "UDUUDDUUDUDUDDUUDD";
    let fig_c = "UDUUUDDDUUDUUDDUUUDDUDDDUUDD";
    if stages[1].to_string() != fig_b {
        return CheckReport::fail(
            NAME,
            format!("intermediate stage expected {fig_b}, got {}", stages[1]),
        );
    }
    if stages[3].to_string() != fig_c {
        return CheckReport::fail(
            NAME,
            format!("final stage expected {fig_c}, got {}", stages[3]),
        );
    }
    for n in 1..=n_max {
        let mut images = BTreeSet::new();
        for p in partitions(n) {
            let d = height_bijection(&p);
            if d.height() != class_fast(&p) + 1 {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} partition={p} class={} but height={}",
                        class_fast(&p),
                        d.height()
                    ),
                );
            }
            match height_bijection_inverse(&d, n) {
                Ok(back) if back == p => {}
                Ok(back) => {
                    return CheckReport::fail(
                        NAME,
                        format!("n={n} partition={p} round-trips to {back}"),
                    )
                }
                Err(e) => {
                    return CheckReport::fail(NAME, format!("n={n} partition={p} inverse: {e}"))
                }
            }
            images.insert(d);
        }
        let everything: BTreeSet<_> = all_paths(n + 1).into_iter().collect();
        if images != everything {
            return CheckReport::fail(
                NAME,
                format!(
                    "n={n} image has {} paths, expected {}",
                    images.len(),
                    everything.len()
                ),
            );
        }
        // the tally of paths by height matches the class counts shifted by one
        let mut by_height: Vec<usize> = vec![0; n + 2];
        for d in &everything {
            by_height[d.height()] += 1;
        }
        for k in 0..=n {
            if BigInt::from(by_height[k + 1]) != count_exact_class(n, k) {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} paths of height {} number {}, class count is {}",
                        k + 1,
                        by_height[k + 1],
                        count_exact_class(n, k)
                    ),
                );
            }
        }
    }
    CheckReport::pass(NAME, format!("bijective with height = class+1 through n={n_max}"))
}

/// The rotation correspondence satisfies `twice_area = (n+1)^2 - 2|λ|` and
/// is a bijection onto Dyck paths of length `2n+2`.
pub fn check_rotation_area(n_max: usize) -> CheckReport {
    const NAME: &str = "rotation_area";
    for n in 1..=n_max {
        let mut images = BTreeSet::new();
        for p in partitions(n) {
            let d = rotation_path(&p);
            let want = ((n + 1) * (n + 1)) as u64 - 2 * p.dimension();
            if d.twice_area() != want {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} partition={p} twice-area {} expected {want}",
                        d.twice_area()
                    ),
                );
            }
            images.insert(d);
        }
        if images.len() != partitions(n).count() {
            return CheckReport::fail(NAME, format!("n={n} rotation not injective"));
        }
    }
    CheckReport::pass(NAME, format!("area law holds through n={n_max}"))
}

/// The interval formula for `C_n(q,t)` against the brute-force tally, its
/// specializations, and the area statistic over all Dyck paths.
pub fn check_qt_catalan(n_max: usize, brute_cap: usize) -> CheckReport {
    const NAME: &str = "qt_catalan";
    // anchor C_2(q,t) = 1 + qt + 2qt^2 + q^2 t^3
    let mut want = BiPoly::zero();
    for (q, t, c) in [(0, 0, 1), (1, 1, 1), (1, 2, 2), (2, 3, 1)] {
        want.add_term(q, t, BigInt::from(c));
    }
    if qt_catalan_formula(2) != want {
        return CheckReport::fail(NAME, format!("C_2 expected {want}, got {}", qt_catalan_formula(2)));
    }
    for n in 1..=n_max.min(brute_cap) {
        let formula = qt_catalan_formula(n);
        let brute = qt_catalan_bruteforce(n, brute_cap).expect("within cap");
        if formula != brute {
            // report the first differing monomial
            let mut detail = format!("n={n} formula and tally differ");
            for ((q, t), c) in formula.terms() {
                let b = brute.coeff(q, t);
                if &b != c {
                    let _ = write!(detail, ": q^{q} t^{t} formula {c}, tally {b}");
                    break;
                }
            }
            return CheckReport::fail(NAME, detail);
        }
        if formula.eval(&BigInt::one(), &BigInt::one()) != catalan(n + 1) {
            return CheckReport::fail(NAME, format!("n={n} C_n(1,1) != C_(n+1)"));
        }
        // q = 1: the area statistic over all Dyck paths under rotation
        let at_q1 = formula.at_q_one();
        let mut by_dim: Vec<BigInt> = vec![BigInt::from(0u32); (n * (n + 1)) / 2 + 1];
        for d in all_paths(n + 1) {
            let h = (((n + 1) * (n + 1)) as u64 - d.twice_area()) / 2;
            by_dim[h as usize] += 1u32;
        }
        for (h, c) in by_dim.iter().enumerate() {
            if &at_q1.coeff(h) != c {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} dimension {h}: C_n(1,t) coefficient {}, path tally {c}",
                        at_q1.coeff(h)
                    ),
                );
            }
        }
        // t = 1: class counts
        let at_t1 = formula.at_t_one();
        for k in 0..=n {
            if at_t1.coeff(k) != count_exact_class(n, k) {
                return CheckReport::fail(
                    NAME,
                    format!("n={n} q^{k} coefficient at t=1 mismatches the class count"),
                );
            }
        }
    }
    CheckReport::pass(NAME, format!("formula = tally with both specializations through n={}", n_max.min(brute_cap)))
}

/// Extremal dimensions and classes against brute force, witness partitions
/// re-verified, and the t-support of each `q^k` being a full interval.
pub fn check_extremal(n_max: usize) -> CheckReport {
    const NAME: &str = "extremal";
    for n in 1..=n_max {
        let dims = max_dim_table(n);
        for k in 0..=n {
            let (want_min, want_max) = dims.by_class[k];
            if dim_min(n, k).unwrap() != want_min || dim_max(n, k).unwrap() != want_max {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} k={k} dim range formula ({}, {}) brute ({want_min}, {want_max})",
                        dim_min(n, k).unwrap(),
                        dim_max(n, k).unwrap()
                    ),
                );
            }
        }
        for a in 0..=(n * (n + 1) / 2) as u64 {
            let (want_min, want_max) = dims.by_dim[a as usize];
            if class_min(n, a).unwrap() != want_min {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} A={a} class_min formula {} brute {want_min}",
                        class_min(n, a).unwrap()
                    ),
                );
            }
            if a >= 1 && class_max(n, a).unwrap() != want_max {
                return CheckReport::fail(
                    NAME,
                    format!(
                        "n={n} A={a} class_max formula {} brute {want_max}",
                        class_max(n, a).unwrap()
                    ),
                );
            }
        }
        for k in 1..=n {
            let (lo, hi) = extremal_witness(n, k).unwrap();
            if class_fast(&lo) != k
                || class_fast(&hi) != k
                || lo.dimension() != dim_min(n, k).unwrap()
                || hi.dimension() != dim_max(n, k).unwrap()
            {
                return CheckReport::fail(
                    NAME,
                    format!("n={n} k={k} witnesses {lo} / {hi} fail re-verification"),
                );
            }
        }
        let c = qt_catalan_formula(n);
        for k in 0..=n {
            let degrees = c.t_degrees_at_q(k);
            let want: Vec<usize> =
                (dim_min(n, k).unwrap() as usize..=dim_max(n, k).unwrap() as usize).collect();
            if degrees != want {
                return CheckReport::fail(
                    NAME,
                    format!("n={n} k={k} t-support {degrees:?} is not the full interval"),
                );
            }
        }
    }
    CheckReport::pass(NAME, format!("extremal formulas match brute force through n={n_max}"))
}

struct ExtremaTables {
    by_class: Vec<(u64, u64)>,
    by_dim: Vec<(usize, usize)>,
}

fn max_dim_table(n: usize) -> ExtremaTables {
    let mut by_class = vec![(u64::MAX, 0u64); n + 1];
    let mut by_dim = vec![(usize::MAX, 0usize); n * (n + 1) / 2 + 1];
    for p in partitions(n) {
        let k = class_fast(&p);
        let a = p.dimension();
        by_class[k].0 = by_class[k].0.min(a);
        by_class[k].1 = by_class[k].1.max(a);
        by_dim[a as usize].0 = by_dim[a as usize].0.min(k);
        by_dim[a as usize].1 = by_dim[a as usize].1.max(k);
    }
    ExtremaTables { by_class, by_dim }
}

/// Window invariants and the inversion-table identity on every ideal.
pub fn check_affine(n_max: usize) -> CheckReport {
    const NAME: &str = "affine_encoding";
    let failure = (1..=n_max)
        .flat_map(|n| (0..=n).map(move |first| (n, first)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .find_map_first(|(n, first)| {
            for p in partitions_with_first(n, first) {
                let w = AffineWindow::of(&p);
                if !w.invariants_hold() {
                    return Some(format!(
                        "n={n} partition={p} window {:?} violates invariants",
                        w.values()
                    ));
                }
                if let Some((i, j)) = inversion_table_mismatch(&p) {
                    return Some(format!(
                        "n={n} partition={p} inversion identity fails at (i,j)=({i},{j})"
                    ));
                }
            }
            None
        });
    match failure {
        Some(detail) => CheckReport::fail(NAME, detail),
        None => CheckReport::pass(NAME, format!("windows and inversion tables valid through n={n_max}")),
    }
}
