use std::collections::BTreeSet;

use groth_lattice::partitions::{
    column_multiplicities, conjugate, enumerate_partitions, is_horizontal_strip, is_vertical_strip, outer_row_stat,
    row_multiplicities, skew_boxes, skew_stats, subpartitions, Partition,
};
use proptest::prelude::*;

fn all(max_size: u32) -> Vec<Partition> {
    enumerate_partitions(max_size, usize::MAX, u32::MAX)
}

#[test]
fn multiplicities_swap_under_conjugation() {
    for lam in all(10) {
        assert_eq!(row_multiplicities(&lam), column_multiplicities(&conjugate(&lam)), "{}", lam);
        assert_eq!(conjugate(&conjugate(&lam)), lam);
    }
}

#[test]
fn strips_swap_under_conjugation() {
    for lam in all(7) {
        for mu in subpartitions(&lam) {
            assert_eq!(
                is_horizontal_strip(&lam, &mu),
                is_vertical_strip(&conjugate(&lam), &conjugate(&mu)),
                "{} / {}",
                lam,
                mu
            );
        }
    }
}

#[test]
fn skew_stats_bounds() {
    for lam in all(8) {
        for mu in subpartitions(&lam) {
            let (r, c, b) = skew_stats(&lam, &mu).unwrap();
            let size = lam.size() - mu.size();
            assert!(r + c <= size + b, "{} / {}", lam, mu);
            assert!(b <= r.min(c), "{} / {}", lam, mu);
        }
    }
}

/// Removable boxes of `μ` whose column holds no box of `λ/μ`.
fn outer_row_brute(lam: &Partition, mu: &Partition) -> u32 {
    let strip_cols: BTreeSet<u32> = skew_boxes(lam, mu).into_iter().map(|(_, j)| j).collect();
    (0..mu.len()).filter(|&i| mu.part(i) > mu.part(i + 1)).filter(|&i| !strip_cols.contains(&(mu.part(i) - 1))).count()
        as u32
}

#[test]
fn outer_row_stat_counts_free_corners() {
    for lam in all(8) {
        for mu in subpartitions(&lam) {
            if is_horizontal_strip(&lam, &mu) {
                assert_eq!(outer_row_stat(&lam, &mu).unwrap(), outer_row_brute(&lam, &mu), "{} / {}", lam, mu);
            } else {
                assert!(outer_row_stat(&lam, &mu).is_err());
            }
        }
    }
}

#[test]
fn enumeration_is_complete_and_ordered() {
    // p(0..=8) = 1 1 2 3 5 7 11 15 22
    assert_eq!(all(8).len(), 67);
    let bounded = enumerate_partitions(6, 2, 3);
    assert!(bounded.iter().all(|p| p.len() <= 2 && p.width() <= 3));
    let sizes: Vec<u32> = bounded.iter().map(|p| p.size()).collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..6).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition()) {
        prop_assert_eq!(conjugate(&conjugate(&lam)), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        prop_assert_eq!(lam.conjugate().len(), lam.width() as usize);
    }

    #[test]
    fn multiplicities_decode(lam in partition()) {
        prop_assert_eq!(Partition::from_row_multiplicities(&row_multiplicities(&lam)), lam.clone());
        prop_assert_eq!(Partition::from_column_multiplicities(&column_multiplicities(&lam)), lam);
    }
}
