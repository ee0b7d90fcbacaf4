//! Randomized invariants complementing the exhaustive small-rank checks:
//! these reach ranks far beyond what enumeration can cover.

use adnil::dyck::{height_bijection, height_bijection_inverse, rotation_path};
use adnil::exact::{binomial, det_exact, t_binomial, BigInt, TruncatedSeries, UniPoly};
use adnil::nilpotence::{class_fast, class_tableau, AffineWindow, TouchSequence};
use adnil::staircase::StaircasePartition;
use adnil::DyckPath;
use proptest::prelude::*;

/// A uniformly seeded staircase partition: each part is drawn below the
/// running bound min(previous part, staircase row length).
fn arb_partition(max_n: usize) -> impl Strategy<Value = StaircasePartition> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |seeds| {
            let mut parts = Vec::with_capacity(n);
            let mut prev = usize::MAX;
            for (i, seed) in seeds.into_iter().enumerate() {
                let bound = prev.min(n - i);
                let part = (seed % (bound as u64 + 1)) as usize;
                parts.push(part);
                prev = part;
            }
            StaircasePartition::new(&parts, n).expect("seeded parts satisfy the invariants")
        })
    })
}

proptest! {
    #[test]
    fn binomial_is_symmetric(m in 0i64..=60, shift in 0i64..=60) {
        let n = shift % (m + 1);
        prop_assert_eq!(binomial(m, n), binomial(m, m - n));
    }

    #[test]
    fn t_binomial_specializes_to_binomial(m in -3i64..=22, n in -3i64..=24) {
        prop_assert_eq!(t_binomial(m, n).eval_one(), binomial(m, n));
    }

    #[test]
    fn series_inversion_round_trips(
        coeffs in proptest::collection::vec(-50i64..=50, 1..=12),
        negate in any::<bool>(),
    ) {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        c[0] = BigInt::from(if negate { -1 } else { 1 });
        let order = c.len() - 1;
        let s = TruncatedSeries::from_poly(&UniPoly::from_coeffs(c), order);
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv), TruncatedSeries::one(order));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(
        n in 1usize..=4,
        entries in proptest::collection::vec(-30i64..=30, 16),
    ) {
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(entries[4 * i + j])).collect())
            .collect();
        prop_assert_eq!(det_exact(&m).unwrap(), cofactor(&m));
    }

    #[test]
    fn partition_literal_round_trips(p in arb_partition(24)) {
        let n = p.rank();
        prop_assert_eq!(StaircasePartition::parse(&p.to_string(), n).unwrap(), p);
    }

    #[test]
    fn class_computations_agree(p in arb_partition(40)) {
        let fast = class_fast(&p);
        prop_assert_eq!(class_tableau(&p), fast);
        prop_assert_eq!(TouchSequence::of(&p).len(), fast);
    }

    #[test]
    fn touch_interval_brackets_the_partition(p in arb_partition(40)) {
        let (lo, hi) = TouchSequence::of(&p).interval_bounds();
        prop_assert!(p.contains(&lo));
        prop_assert!(hi.contains(&p));
    }

    #[test]
    fn height_bijection_round_trips(p in arb_partition(30)) {
        let d = height_bijection(&p);
        prop_assert_eq!(d.len(), 2 * p.rank() + 2);
        prop_assert_eq!(d.height(), class_fast(&p) + 1);
        prop_assert_eq!(height_bijection_inverse(&d, p.rank()).unwrap(), p);
    }

    #[test]
    fn rotation_satisfies_the_area_law(p in arb_partition(40)) {
        let n = p.rank() as u64;
        let d = rotation_path(&p);
        prop_assert_eq!(d.twice_area(), (n + 1) * (n + 1) - 2 * p.dimension());
        prop_assert_eq!(DyckPath::parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn affine_window_invariants_hold(p in arb_partition(25)) {
        prop_assert!(AffineWindow::of(&p).invariants_hold());
        prop_assert_eq!(adnil::nilpotence::inversion_table_mismatch(&p), None);
    }

    #[test]
    fn arbitrary_part_lists_validate_or_reject(
        parts in proptest::collection::vec(0usize..=9, 0..=9),
        n in 1usize..=8,
    ) {
        match StaircasePartition::new(&parts, n) {
            Ok(p) => {
                prop_assert_eq!(p.parts().len(), n);
                for (i, &a) in p.parts().iter().enumerate() {
                    prop_assert!(a <= n - i);
                    if i > 0 {
                        prop_assert!(a <= p.parts()[i - 1]);
                    }
                }
            }
            Err(_) => {
                let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
                let bounded = parts.iter().enumerate().all(|(i, &a)| i < n && a <= n - i);
                let extra_nonzero =
                    parts.len() > n && parts[n..].iter().any(|&a| a > 0);
                prop_assert!(!decreasing || !bounded || extra_nonzero);
            }
        }
    }
}

fn cofactor(a: &[Vec<BigInt>]) -> BigInt {
    use num_traits::Zero;
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
