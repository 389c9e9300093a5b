use alloc::format;
use alloc::vec::Vec;

use super::{labels, occ, occupancy_vectors, CheckReport, Checker};
use crate::algebra::{Rf, Var};
use crate::models::{Params, WeightModel};
use crate::transfer::Row;

/// `Σ_w <v|B|w><w|T|u> = δ_{v,u}` over all `u, v` on `sites` sites with
/// entries `≤ occ_max`. `B` has a fermionic line, so `w` differs from `v` by at
/// most one per site.
fn check_product_is_identity(
    mut ck: Checker,
    bottom: &mut Row,
    top: &mut Row,
    sites: usize,
    occ_max: u32,
) -> CheckReport {
    let vectors = occupancy_vectors(sites, occ_max);
    let shifts = occupancy_vectors(sites, 2);
    for v in &vectors {
        // intermediate states reachable from v through the fermionic row
        let ws: Vec<Vec<u32>> = shifts
            .iter()
            .filter_map(|s| v.iter().zip(s).map(|(&vi, &si)| (vi + si).checked_sub(1)).collect::<Option<Vec<u32>>>())
            .collect();
        let first: Vec<(usize, Rf)> =
            ws.iter().enumerate().map(|(k, w)| (k, bottom.weight(v, w))).filter(|(_, f)| !f.is_zero()).collect();
        for u in &vectors {
            let mut sum = Rf::zero();
            for (k, f) in &first {
                let g = top.weight(&ws[*k], u);
                if !g.is_zero() {
                    sum = &sum + &(f * &g);
                }
            }
            let expect = if u == v { Rf::one() } else { Rf::zero() };
            ck.compare(|| labels(&[("v", &occ(v)), ("u", &occ(u))]), &sum, &expect, |f| f.render());
        }
    }
    ck.finish()
}

fn site_spectral(x: &Rf, sites: usize, with_z: bool) -> Vec<Rf> {
    (0..sites)
        .map(|j| if with_z { x.checked_div(&Rf::var(Var::Z(j as u16 + 1))).expect("z is nonzero") } else { x.clone() })
        .collect()
}

/// `T(-x) T̃(x/(1+(α-β)x)) = 1` between the row and column `G` models. With
/// `with_z`, site `j` uses `x/z_j` in place of `x` in both rows.
pub fn check_inversion_g(sites: usize, occ_max: u32, with_z: bool) -> CheckReport {
    let p = Params::formal();
    let x = Rf::var(Var::X(1));
    let s = site_spectral(&x, sites, with_z);
    let shift = &p.alpha - &p.beta;
    let neg: Vec<Rf> = s.iter().map(|u| -u.clone()).collect();
    let col: Vec<Rf> = s.iter().map(|u| u.checked_div(&(&Rf::one() + &(&shift * u))).expect("nonzero")).collect();
    let mut bottom = Row::from_site_parameters(WeightModel::RowG, &p, neg);
    let mut top = Row::from_site_parameters(WeightModel::ColG, &p, col);
    let ck = Checker::new(format!("inversion/G{}", if with_z { "/z" } else { "" }))
        .param("sites", sites)
        .param("occ_max", occ_max)
        .param("with_z", with_z);
    check_product_is_identity(ck, &mut bottom, &mut top, sites, occ_max)
}

/// `𝔱(-x) t̃(x) = 1` between the `j` row model and the column `g` model at
/// `(α, β) = (0, 1)`, whose weights are `x^{min(a,d)}`.
pub fn check_inversion_dual(sites: usize, occ_max: u32, with_z: bool) -> CheckReport {
    let x = Rf::var(Var::X(1));
    let s = site_spectral(&x, sites, with_z);
    let neg: Vec<Rf> = s.iter().map(|u| -u.clone()).collect();
    let mut bottom = Row::from_site_parameters(WeightModel::JRow, &Params::formal(), neg);
    let mut top = Row::from_site_parameters(WeightModel::ColDualg, &Params::ints(0, 1), s);
    let ck = Checker::new(format!("inversion/dual{}", if with_z { "/z" } else { "" }))
        .param("sites", sites)
        .param("occ_max", occ_max)
        .param("with_z", with_z);
    check_product_is_identity(ck, &mut bottom, &mut top, sites, occ_max)
}
