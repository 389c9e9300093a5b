use alloc::collections::BTreeMap;
use alloc::format;

use super::{labels, CheckReport, Checker};
use crate::algebra::{Rf, Var};
use crate::models::{rmatrix_entry_with, Params, RMatrixFamily, WeightModel, WeightTable};

/// The six (vertex model, R-matrix) pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RllPair {
    RowG,
    RowDualg,
    ColG,
    ColDualg,
    JRow,
    /// Dual `G` row at `(-α,-β)` on the `x` line, `g` row on the `y` line.
    Mixed,
}

struct Setup {
    x_model: WeightModel,
    x_params: Params,
    y_model: WeightModel,
    y_params: Params,
    family: RMatrixFamily,
}

impl RllPair {
    pub const ALL: [RllPair; 6] =
        [RllPair::RowG, RllPair::RowDualg, RllPair::ColG, RllPair::ColDualg, RllPair::JRow, RllPair::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            RllPair::RowG => "RowG+FiveVertexR",
            RllPair::RowDualg => "RowDualg+RowDualr",
            RllPair::ColG => "ColG+ColGR",
            RllPair::ColDualg => "ColDualg+ColDualr",
            RllPair::JRow => "JRow+JR",
            RllPair::Mixed => "Mixed(RowGDual,RowDualg)+MixedR",
        }
    }

    fn setup(self) -> Setup {
        let same =
            |m, f| Setup { x_model: m, x_params: Params::formal(), y_model: m, y_params: Params::formal(), family: f };
        match self {
            RllPair::RowG => same(WeightModel::RowG, RMatrixFamily::FiveVertexR),
            RllPair::RowDualg => same(WeightModel::RowDualg, RMatrixFamily::RowDualr),
            RllPair::ColG => same(WeightModel::ColG, RMatrixFamily::ColGR),
            RllPair::ColDualg => same(WeightModel::ColDualg, RMatrixFamily::ColDualr),
            RllPair::JRow => same(WeightModel::JRow, RMatrixFamily::JR),
            RllPair::Mixed => Setup {
                x_model: WeightModel::RowGDual,
                x_params: Params::negated(),
                y_model: WeightModel::RowDualg,
                y_params: Params::formal(),
                family: RMatrixFamily::MixedR,
            },
        }
    }
}

/// Supports as stated next to each table: the entries outside are zero.
fn model_support(m: WeightModel, _a: u32, b: u32, c: u32, _d: u32) -> bool {
    match m {
        WeightModel::ColG => b >= c,
        _ => true,
    }
}

fn r_support(f: RMatrixFamily, a: u32, b: u32, c: u32, d: u32) -> bool {
    match f {
        RMatrixFamily::ColGR | RMatrixFamily::ColDualr => b >= c,
        RMatrixFamily::RowDualr => b <= c,
        RMatrixFamily::FiveVertexR | RMatrixFamily::JR => (a, b, c, d) != (0, 1, 0, 1),
        RMatrixFamily::MixedR => true,
    }
}

struct Sides {
    x: WeightTable,
    y: WeightTable,
    r: BTreeMap<(u32, u32, u32, u32), Rf>,
    setup: Setup,
    xv: Rf,
    yv: Rf,
}

impl Sides {
    fn wx(&mut self, a: u32, b: u32, c: u32, d: u32) -> Rf {
        self.x.get(a, b, c, d).unwrap_or_else(|_| Rf::zero())
    }

    fn wy(&mut self, a: u32, b: u32, c: u32, d: u32) -> Rf {
        self.y.get(a, b, c, d).unwrap_or_else(|_| Rf::zero())
    }

    fn r(&mut self, a: u32, b: u32, c: u32, d: u32) -> Rf {
        let Setup { family, y_params, .. } = &self.setup;
        let (xv, yv) = (&self.xv, &self.yv);
        self.r
            .entry((a, b, c, d))
            .or_insert_with(|| rmatrix_entry_with(*family, a, b, c, d, xv, yv, y_params).unwrap_or_else(|_| Rf::zero()))
            .clone()
    }

    /// `Σ R^{a,d}_{b,c} w_x(c,p;e,g) w_y(d,g;f,q)`; the `x` line is the bottom row after the cross.
    fn lhs(&mut self, ext: [u32; 6], stated: bool) -> Rf {
        let [a, b, p, e, f, q] = ext;
        let (xf, yf) = (self.setup.x_model.is_fermionic(), self.setup.y_model.is_fermionic());
        let mut acc = Rf::zero();
        for c in 0..=a + b {
            let d = a + b - c;
            if (xf && c > 1) || (yf && d > 1) || c + p < e {
                continue;
            }
            let g = c + p - e;
            if stated
                && !(r_support(self.setup.family, a, b, c, d)
                    && model_support(self.setup.x_model, c, p, e, g)
                    && model_support(self.setup.y_model, d, g, f, q))
            {
                continue;
            }
            let t = self.r(a, b, c, d);
            if t.is_zero() {
                continue;
            }
            let t = &t * &self.wx(c, p, e, g);
            if t.is_zero() {
                continue;
            }
            acc = &acc + &(&t * &self.wy(d, g, f, q));
        }
        acc
    }

    /// `Σ w_y(b,p;h,g') w_x(a,g';k,q) R^{k,f}_{h,e}`; the `y` line is the bottom row.
    fn rhs(&mut self, ext: [u32; 6], stated: bool) -> Rf {
        let [a, b, p, e, f, q] = ext;
        let (xf, yf) = (self.setup.x_model.is_fermionic(), self.setup.y_model.is_fermionic());
        let mut acc = Rf::zero();
        for h in 0..=b + p {
            let g = b + p - h;
            if (yf && h > 1) || a + g < q {
                continue;
            }
            let k = a + g - q;
            if (xf && k > 1) || k + h != e + f {
                continue;
            }
            if stated
                && !(r_support(self.setup.family, k, h, e, f)
                    && model_support(self.setup.y_model, b, p, h, g)
                    && model_support(self.setup.x_model, a, g, k, q))
            {
                continue;
            }
            let t = self.wy(b, p, h, g);
            if t.is_zero() {
                continue;
            }
            let t = &t * &self.wx(a, g, k, q);
            if t.is_zero() {
                continue;
            }
            acc = &acc + &(&t * &self.r(k, h, e, f));
        }
        acc
    }
}

/// Replays the RLL relation of `pair` on every external configuration with
/// auxiliary labels in `{0,1}` (fermionic) or `0..=aux_max` (bosonic) and
/// vertical labels in `0..=phys_max`. Each side is also summed over the
/// stated supports only, and the two summations must agree.
pub fn check_rll(pair: RllPair, aux_max: u32, phys_max: u32) -> CheckReport {
    let setup = pair.setup();
    let (xv, yv) = (Rf::var(Var::X(1)), Rf::var(Var::Y(1)));
    let xmax = if setup.x_model.is_fermionic() { 1 } else { aux_max };
    let ymax = if setup.y_model.is_fermionic() { 1 } else { aux_max };
    let mut sides = Sides {
        x: WeightTable::new(setup.x_model, xv.clone(), setup.x_params.clone()),
        y: WeightTable::new(setup.y_model, yv.clone(), setup.y_params.clone()),
        r: BTreeMap::new(),
        setup,
        xv,
        yv,
    };
    let mut ck = Checker::new(format!("rll/{}", pair.name())).param("aux_max", aux_max).param("phys_max", phys_max);
    let render = |f: &Rf| f.render();
    for a in 0..=xmax {
        for b in 0..=ymax {
            for p in 0..=phys_max {
                for e in 0..=xmax {
                    for f in 0..=ymax {
                        if a + b + p < e + f || a + b + p - e - f > phys_max {
                            continue;
                        }
                        let q = a + b + p - e - f;
                        let ext = [a, b, p, e, f, q];
                        let lbl = || labels(&[("a", &a), ("b", &b), ("p", &p), ("e", &e), ("f", &f), ("q", &q)]);
                        let lhs = sides.lhs(ext, false);
                        let rhs = sides.rhs(ext, false);
                        ck.compare(lbl, &lhs, &rhs, render);
                        let lhs_s = sides.lhs(ext, true);
                        ck.compare(|| format!("{} (stated range, left)", lbl()), &lhs_s, &lhs, render);
                        let rhs_s = sides.rhs(ext, true);
                        ck.compare(|| format!("{} (stated range, right)", lbl()), &rhs_s, &rhs, render);
                    }
                }
            }
        }
    }
    ck.finish()
}
