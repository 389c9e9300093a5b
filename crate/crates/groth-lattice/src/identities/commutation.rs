use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{labels, occ, occupancy_vectors, CheckReport, Checker};
use crate::algebra::{MultiPoly, Rf, TruncatedSeries, Var};
use crate::models::{Params, WeightModel};
use crate::partitions::{enumerate_partitions, row_multiplicities};
use crate::transfer::{Row, TransferSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommutationKind {
    /// `T(x)T(y) = T(y)T(x)`, row `G` model.
    RowG,
    /// `t(x)t(y) = t(y)t(x)`, row `g` model.
    RowDualg,
    /// Column `G` model.
    ColG,
    /// Column `g` model.
    ColDualg,
    /// `(1-xy) t(y)T*(x) = T*(x)t(y)` with `T*` the dual `G` row at `(-α,-β)`.
    Mixed,
}

impl CommutationKind {
    pub const ALL: [CommutationKind; 5] = [
        CommutationKind::RowG,
        CommutationKind::RowDualg,
        CommutationKind::ColG,
        CommutationKind::ColDualg,
        CommutationKind::Mixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CommutationKind::RowG => "TT",
            CommutationKind::RowDualg => "tt",
            CommutationKind::ColG => "T~T~",
            CommutationKind::ColDualg => "t~t~",
            CommutationKind::Mixed => "mixed",
        }
    }
}

/// `Σ i·v_i`, the size of the partition `v` encodes.
fn weighted(v: &[u32]) -> u32 {
    v.iter().enumerate().map(|(i, &k)| (i as u32 + 1) * k).sum()
}

/// States `w` on `sites` sites whose suffix sums are dominated by those of
/// `u`. Only these can reach `u` through a row with right boundary 0.
fn dominated(u: &[u32]) -> Vec<Vec<u32>> {
    let total = u.iter().sum();
    occupancy_vectors(u.len(), total)
        .into_iter()
        .filter(|w| {
            let (mut sw, mut su) = (0, 0);
            (0..u.len()).rev().all(|i| {
                sw += w[i];
                su += u[i];
                sw <= su
            })
        })
        .collect()
}

fn product(bottom: &mut Row, top: &mut Row, v: &[u32], u: &[u32], ws: &[Vec<u32>]) -> Rf {
    let mut sum = Rf::zero();
    for w in ws {
        let f = bottom.weight(v, w);
        if f.is_zero() {
            continue;
        }
        let g = top.weight(w, u);
        if !g.is_zero() {
            sum = &sum + &(&f * &g);
        }
    }
    sum
}

pub fn check_commutation(kind: CommutationKind, sites: usize, occ_max: u32) -> CheckReport {
    check_commutation_with_bound(kind, sites, occ_max, 4)
}

/// Exchange relation between two rows on all states with `sites` sites and
/// entries `≤ occ_max`. The mixed relation involves an infinite intermediate
/// sum on one side and is compared as a series in `x` up to degree `bound`.
pub fn check_commutation_with_bound(kind: CommutationKind, sites: usize, occ_max: u32, bound: u32) -> CheckReport {
    let (x, y) = (Rf::var(Var::X(1)), Rf::var(Var::Y(1)));
    let mut ck = Checker::new(format!("commutation/{}", kind.name())).param("sites", sites).param("occ_max", occ_max);
    let model = match kind {
        CommutationKind::RowG => WeightModel::RowG,
        CommutationKind::RowDualg => WeightModel::RowDualg,
        CommutationKind::ColG => WeightModel::ColG,
        CommutationKind::ColDualg => WeightModel::ColDualg,
        CommutationKind::Mixed => {
            ck = ck.param("bound", bound);
            return mixed(ck, sites, occ_max, bound);
        }
    };
    let spec = TransferSpec::new(model, sites);
    let (mut rx, mut ry) = (spec.row(&x).expect("homogeneous"), spec.row(&y).expect("homogeneous"));
    let vectors = occupancy_vectors(sites, occ_max);
    for u in &vectors {
        let ws = dominated(u);
        for v in &vectors {
            let xy = product(&mut rx, &mut ry, v, u, &ws);
            let yx = product(&mut ry, &mut rx, v, u, &ws);
            ck.compare(|| labels(&[("v", &occ(v)), ("u", &occ(u))]), &xy, &yx, |f| f.render());
        }
    }
    ck.finish()
}

fn mixed(mut ck: Checker, sites: usize, occ_max: u32, bound: u32) -> CheckReport {
    let (x, y) = (Rf::var(Var::X(1)), Rf::var(Var::Y(1)));
    let vars = [Var::X(1)];
    let dual = TransferSpec::new(WeightModel::RowGDual, sites).with_params(Params::negated());
    let g = TransferSpec::new(WeightModel::RowDualg, sites);
    let (mut big_t, mut small_t) = (dual.row(&x).expect("homogeneous"), g.row(&y).expect("homogeneous"));
    let factor = TruncatedSeries::from_poly(
        &(&MultiPoly::one() - &(&MultiPoly::var(Var::X(1)) * &MultiPoly::var(Var::Y(1)))),
        &vars,
        bound,
    );
    let vectors = occupancy_vectors(sites, occ_max);
    for u in &vectors {
        // t(y)T*(x): the T* row lowers w to u and costs x^{|w|-|u|}, so states
        // with |w| > |u| + bound do not reach the truncation
        let ws: Vec<Vec<u32>> =
            enumerate_partitions(weighted(u) + bound, usize::MAX, u32::MAX).iter().map(row_multiplicities).collect();
        let mut tops: BTreeMap<usize, TruncatedSeries> = BTreeMap::new();
        for (k, w) in ws.iter().enumerate() {
            let f = big_t.weight(w, u);
            if !f.is_zero() {
                let s = TruncatedSeries::from_rf(&f, &vars, bound).expect("1+αx is invertible");
                tops.insert(k, s);
            }
        }
        let exact_ws = dominated(u);
        for v in &vectors {
            let mut lhs = TruncatedSeries::zero(&vars, bound);
            for (k, top) in &tops {
                let b = small_t.weight(v, &ws[*k]);
                if b.is_zero() {
                    continue;
                }
                let b = TruncatedSeries::from_poly(b.as_poly().expect("g weights are polynomial"), &vars, bound);
                lhs = lhs.add(&b.mul(top).expect("same bound")).expect("same bound");
            }
            let lhs = factor.mul(&lhs).expect("same bound");
            let rhs = product(&mut big_t, &mut small_t, v, u, &exact_ws);
            let rhs = TruncatedSeries::from_rf(&rhs, &vars, bound).expect("1+αx is invertible");
            ck.compare(|| labels(&[("v", &occ(v)), ("u", &occ(u))]), &lhs, &rhs, |s| s.as_poly().render());
        }
    }
    ck.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominated_states() {
        let ws = dominated(&[0, 1]);
        assert_eq!(ws, [[0, 0], [0, 1], [1, 0]]);
    }

    #[test]
    fn all_kinds_small() {
        for kind in CommutationKind::ALL {
            let r = check_commutation_with_bound(kind, 2, 1, 3);
            assert!(r.passed, "{:?}", r);
        }
    }
}
