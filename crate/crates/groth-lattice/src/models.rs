//! Vertex weights of the seven lattice models and entries of the six R-matrices.
//!
//! Labels follow the vertex picture `(a, b, c, d)` = (left, bottom, right, top).
//! For R-matrices `a` is the top-left input (the `x` line), `b` the
//! bottom-left input (the `y` line), `c` the bottom-right output of the `x`
//! line and `d` the top-right output of the `y` line. Every function returns
//! 0 unless `a + b = c + d`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{Rf, Var};
use crate::error::{Error, Result};

/// The seven vertex-weight tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightModel {
    /// Row model of `G`, fermionic auxiliary line.
    RowG,
    /// Upside-down tiles of `RowG`, used with right boundary 1.
    RowGDual,
    /// Row model of `g`, bosonic auxiliary line.
    RowDualg,
    /// Column model of `G`.
    ColG,
    /// Column model of `g`.
    ColDualg,
    /// Row model of `j` (fermionic, no parameters).
    JRow,
    /// Upside-down tiles of `JRow`.
    JRowDual,
}

impl WeightModel {
    pub const ALL: [WeightModel; 7] = [
        WeightModel::RowG,
        WeightModel::RowGDual,
        WeightModel::RowDualg,
        WeightModel::ColG,
        WeightModel::ColDualg,
        WeightModel::JRow,
        WeightModel::JRowDual,
    ];

    /// Auxiliary labels restricted to {0, 1}.
    pub fn is_fermionic(self) -> bool {
        matches!(self, WeightModel::RowG | WeightModel::RowGDual | WeightModel::JRow | WeightModel::JRowDual)
    }

    /// Right-boundary auxiliary label of a transfer row.
    pub fn right_boundary(self) -> u32 {
        match self {
            WeightModel::RowGDual | WeightModel::JRowDual => 1,
            _ => 0,
        }
    }

    /// True if partitions enter through column multiplicities.
    pub fn uses_column_encoding(self) -> bool {
        matches!(self, WeightModel::ColG | WeightModel::ColDualg | WeightModel::JRow | WeightModel::JRowDual)
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightModel::RowG => "RowG",
            WeightModel::RowGDual => "RowGDual",
            WeightModel::RowDualg => "RowDualg",
            WeightModel::ColG => "ColG",
            WeightModel::ColDualg => "ColDualg",
            WeightModel::JRow => "JRow",
            WeightModel::JRowDual => "JRowDual",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|m| m.name().eq_ignore_ascii_case(s))
    }
}

/// Values of the two deformation parameters. Formal by default; other values
/// are specializations such as `(-a, -b)` or `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub alpha: Rf,
    pub beta: Rf,
}

impl Params {
    pub fn formal() -> Self {
        Params { alpha: Rf::var(Var::Alpha), beta: Rf::var(Var::Beta) }
    }

    pub fn new(alpha: Rf, beta: Rf) -> Self {
        Params { alpha, beta }
    }

    /// `(α, β) ↦ (-α, -β)`.
    pub fn negated() -> Self {
        Params { alpha: -Rf::var(Var::Alpha), beta: -Rf::var(Var::Beta) }
    }

    pub fn ints(a: i64, b: i64) -> Self {
        Params { alpha: Rf::int(a), beta: Rf::int(b) }
    }
}

impl Default for Params {
    fn default() -> Self {
        Self::formal()
    }
}

/// `x/(1-αx)`.
pub fn geometric(x: &Rf, p: &Params) -> Rf {
    x.checked_div(&(&Rf::one() - &(&p.alpha * x))).expect("1 - αx is nonzero")
}

/// `(1+βx)/(1-αx)`.
pub fn pass_weight(x: &Rf, p: &Params) -> Rf {
    (&Rf::one() + &(&p.beta * x)).checked_div(&(&Rf::one() - &(&p.alpha * x))).expect("1 - αx is nonzero")
}

fn check_fermionic(a: u32, c: u32) -> Result<()> {
    if a > 1 || c > 1 {
        Err(Error::LabelOutOfRange { a, c })
    } else {
        Ok(())
    }
}

/// Weight of one vertex at formal `(α, β)`.
pub fn vertex_weight(model: WeightModel, a: u32, b: u32, c: u32, d: u32, x: &Rf) -> Result<Rf> {
    WeightTable::new(model, x.clone(), Params::formal()).get(a, b, c, d)
}

/// Weight of one vertex with spectral parameter `x/z`.
pub fn vertex_weight_inhom(model: WeightModel, a: u32, b: u32, c: u32, d: u32, x: &Rf, z: &Rf) -> Result<Rf> {
    vertex_weight(model, a, b, c, d, &x.checked_div(z)?)
}

/// Memoized weights of one model at a fixed spectral parameter.
#[derive(Clone, Debug)]
pub struct WeightTable {
    model: WeightModel,
    params: Params,
    x: Rf,
    geo: Rf,
    pass: Rf,
    cache: BTreeMap<(u32, u32, u32, u32), Rf>,
}

impl WeightTable {
    pub fn new(model: WeightModel, x: Rf, params: Params) -> Self {
        let (geo, pass) = match model {
            WeightModel::RowG | WeightModel::RowGDual | WeightModel::ColG => {
                (geometric(&x, &params), pass_weight(&x, &params))
            }
            _ => (Rf::zero(), Rf::zero()),
        };
        WeightTable { model, params, x, geo, pass, cache: BTreeMap::new() }
    }

    pub fn model(&self) -> WeightModel {
        self.model
    }

    pub fn get(&mut self, a: u32, b: u32, c: u32, d: u32) -> Result<Rf> {
        if self.model.is_fermionic() {
            check_fermionic(a, c)?;
        }
        if a + b != c + d {
            return Ok(Rf::zero());
        }
        if let Some(w) = self.cache.get(&(a, b, c, d)) {
            return Ok(w.clone());
        }
        let w = self.compute(a, b, c, d);
        self.cache.insert((a, b, c, d), w.clone());
        Ok(w)
    }

    fn compute(&self, a: u32, b: u32, c: u32, d: u32) -> Rf {
        let p = &self.params;
        let x = &self.x;
        match self.model {
            WeightModel::RowG => self.row_g(a, b, c, d),
            // upside-down flip with 0 and 1 exchanged on the auxiliary line
            WeightModel::RowGDual => self.row_g(1 - a, d, 1 - c, b),
            WeightModel::RowDualg => {
                if a > d {
                    &(&(&p.alpha + &p.beta).pow(a - d - 1) * &(x + &p.alpha)) * &p.beta.pow(d)
                } else if a > 0 {
                    &p.beta.pow(a - 1) * x
                } else {
                    Rf::one()
                }
            }
            WeightModel::ColG => {
                if b < c {
                    Rf::zero()
                } else if b == c {
                    self.geo.pow(a)
                } else {
                    &self.geo.pow(a) * &self.pass
                }
            }
            WeightModel::ColDualg => {
                if a > d {
                    &(&(&p.alpha + &p.beta).pow(a - d - 1) * &p.beta) * &(x + &p.alpha).pow(d)
                } else if a > 0 {
                    x * &(x + &p.alpha).pow(a - 1)
                } else {
                    Rf::one()
                }
            }
            WeightModel::JRow => j_row(a, b, c, x),
            WeightModel::JRowDual => j_row(1 - a, d, 1 - c, x),
        }
    }

    fn row_g(&self, a: u32, b: u32, c: u32, d: u32) -> Rf {
        if a == 0 && b == 0 && c == 0 && d == 0 {
            Rf::one()
        } else if a == 1 {
            self.geo.clone()
        } else {
            self.pass.clone()
        }
    }
}

fn j_row(a: u32, b: u32, c: u32, x: &Rf) -> Rf {
    if a == 0 {
        Rf::one()
    } else if c == 1 && b == 0 {
        x + &Rf::one()
    } else {
        x.clone()
    }
}

/// The six R-matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RMatrixFamily {
    /// Five-vertex R for the row `G` model.
    FiveVertexR,
    /// r-matrix of the row `g` model.
    RowDualr,
    /// R-matrix of the column `G` model.
    ColGR,
    /// r-matrix of the column `g` model.
    ColDualr,
    /// Five-vertex R at β = 0, for the `j` model.
    JR,
    /// Mixed fermion/boson matrix intertwining the dual `G` row with the `g` row.
    MixedR,
}

impl RMatrixFamily {
    pub const ALL: [RMatrixFamily; 6] = [
        RMatrixFamily::FiveVertexR,
        RMatrixFamily::RowDualr,
        RMatrixFamily::ColGR,
        RMatrixFamily::ColDualr,
        RMatrixFamily::JR,
        RMatrixFamily::MixedR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RMatrixFamily::FiveVertexR => "FiveVertexR",
            RMatrixFamily::RowDualr => "RowDualr",
            RMatrixFamily::ColGR => "ColGR",
            RMatrixFamily::ColDualr => "ColDualr",
            RMatrixFamily::JR => "JR",
            RMatrixFamily::MixedR => "MixedR",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|m| m.name().eq_ignore_ascii_case(s))
    }

    /// Whether the `x` line (labels a, c) and the `y` line (labels b, d) are fermionic.
    pub fn fermionic_lines(self) -> (bool, bool) {
        match self {
            RMatrixFamily::FiveVertexR | RMatrixFamily::JR => (true, true),
            RMatrixFamily::MixedR => (true, false),
            _ => (false, false),
        }
    }
}

type Cond = fn(u32, u32, u32, u32) -> bool;

/// One row of an R-matrix case table; the first matching case wins.
#[derive(Clone, Copy, Debug)]
pub struct RCase {
    pub label: &'static str,
    cond: Cond,
}

macro_rules! case {
    ($label:expr, |$a:ident, $b:ident, $c:ident, $d:ident| $e:expr) => {
        RCase {
            label: $label,
            cond: {
                #[allow(unused_variables)]
                fn f($a: u32, $b: u32, $c: u32, $d: u32) -> bool {
                    $e
                }
                f
            },
        }
    };
}

const FIVE_VERTEX_CASES: [RCase; 6] = [
    case!("a=b=c=d=0", |a, b, c, d| a == 0 && b == 0 && c == 0 && d == 0),
    case!("a=b=c=d=1", |a, b, c, d| a == 1 && b == 1 && c == 1 && d == 1),
    case!("(a,b,c,d)=(0,1,0,1)", |a, b, c, d| a == 0 && b == 1 && c == 0 && d == 1),
    case!("(a,b,c,d)=(0,1,1,0)", |a, b, c, d| a == 0 && b == 1 && c == 1 && d == 0),
    case!("(a,b,c,d)=(1,0,0,1)", |a, b, c, d| a == 1 && b == 0 && c == 0 && d == 1),
    case!("(a,b,c,d)=(1,0,1,0)", |a, b, c, d| a == 1 && b == 0 && c == 1 && d == 0),
];

const ROW_DUAL_R_CASES: [RCase; 5] = [
    case!("b>c", |a, b, c, d| b > c),
    case!("b=c=0", |a, b, c, d| b == 0 && c == 0),
    case!("b=c>0", |a, b, c, d| b == c),
    case!("b=0", |a, b, c, d| b == 0),
    case!("b>0", |a, b, c, d| true),
];

const COL_G_R_CASES: [RCase; 3] =
    [case!("b<c", |a, b, c, d| b < c), case!("b=c", |a, b, c, d| b == c), case!("b>c", |a, b, c, d| true)];

// k = a, l = d, i = b, j = c
const COL_DUAL_R_CASES: [RCase; 5] = [
    case!("i<j", |a, b, c, d| b < c),
    case!("k=l=0", |a, b, c, d| a == 0 && d == 0),
    case!("k=l>0", |a, b, c, d| a == d),
    case!("k=0", |a, b, c, d| a == 0),
    case!("k>0", |a, b, c, d| true),
];

const MIXED_R_CASES: [RCase; 5] = [
    case!("i=j=k=l=0", |a, b, c, d| a == 0 && b == 0 && c == 0 && d == 0),
    case!("j=k=1,i=l=0", |a, b, c, d| c == 1 && a == 1 && b == 0 && d == 0),
    case!("k=l=0,i=j=1", |a, b, c, d| a == 0 && d == 0 && b == 1 && c == 1),
    case!("k=1", |a, b, c, d| a == 1),
    case!("k=0", |a, b, c, d| true),
];

fn cases(family: RMatrixFamily) -> &'static [RCase] {
    match family {
        RMatrixFamily::FiveVertexR | RMatrixFamily::JR => &FIVE_VERTEX_CASES,
        RMatrixFamily::RowDualr => &ROW_DUAL_R_CASES,
        RMatrixFamily::ColGR => &COL_G_R_CASES,
        RMatrixFamily::ColDualr => &COL_DUAL_R_CASES,
        RMatrixFamily::MixedR => &MIXED_R_CASES,
    }
}

/// The first-match order used by `rmatrix_entry`.
pub fn rmatrix_case_precedence(family: RMatrixFamily) -> Vec<&'static str> {
    cases(family).iter().map(|c| c.label).collect()
}

/// Index of the case that decides entry `(a, b, c, d)`.
pub fn rmatrix_case(family: RMatrixFamily, a: u32, b: u32, c: u32, d: u32) -> Option<usize> {
    cases(family).iter().position(|k| (k.cond)(a, b, c, d))
}

/// R-matrix entry at formal `(α, β)`.
pub fn rmatrix_entry(family: RMatrixFamily, a: u32, b: u32, c: u32, d: u32, x: &Rf, y: &Rf) -> Result<Rf> {
    rmatrix_entry_with(family, a, b, c, d, x, y, &Params::formal())
}

#[allow(clippy::too_many_arguments)]
pub fn rmatrix_entry_with(
    family: RMatrixFamily,
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    x: &Rf,
    y: &Rf,
    p: &Params,
) -> Result<Rf> {
    let (fx, fy) = family.fermionic_lines();
    if fx {
        check_fermionic(a, c)?;
    }
    if fy && (b > 1 || d > 1) {
        return Err(Error::LabelOutOfRange { a: b, c: d });
    }
    if family == RMatrixFamily::RowDualr && p.beta.is_zero() {
        return Err(Error::UndefinedAtBetaZero);
    }
    if a + b != c + d {
        return Ok(Rf::zero());
    }
    let Some(k) = rmatrix_case(family, a, b, c, d) else {
        return Ok(Rf::zero());
    };
    let one = Rf::one();
    let div = |n: &Rf, m: &Rf| n.checked_div(m);
    let w = match family {
        RMatrixFamily::FiveVertexR | RMatrixFamily::JR => {
            let beta = if family == RMatrixFamily::JR { Rf::zero() } else { p.beta.clone() };
            let f = div(&(y * &(&one + &(&beta * x))), &(x * &(&one + &(&beta * y))))?;
            match k {
                0 | 1 => one,
                2 => Rf::zero(),
                3 => f,
                4 => one,
                _ => &one - &f,
            }
        }
        RMatrixFamily::RowDualr => {
            let ratio = div(y, x)?;
            match k {
                0 => Rf::zero(),
                1 => one,
                2 => ratio,
                _ => {
                    let y_b = div(y, &p.beta)?;
                    let base = &(&one - &ratio) * &(&one - &y_b).pow(a - d - 1);
                    if k == 3 {
                        base
                    } else {
                        &base * &y_b
                    }
                }
            }
        }
        RMatrixFamily::ColGR => {
            let pre = div(&geometric(x, p), &geometric(y, p))?.pow(a);
            match k {
                0 => Rf::zero(),
                1 => pre,
                _ => {
                    let ax = &one - &(&p.alpha * x);
                    let t = &div(&one, &ax)? - &div(x, &(&ax * y))?;
                    &pre * &t
                }
            }
        }
        RMatrixFamily::ColDualr => {
            let x_y = div(x, y)?;
            let s = div(&(y + &p.alpha), &(x + &p.alpha))?;
            match k {
                0 => Rf::zero(),
                1 => one,
                2 => &x_y * &s.powi(1 - a as i64)?,
                3 => &one - &x_y,
                _ => &(&x_y * &(&s - &one)) * &s.powi(-(a as i64))?,
            }
        }
        RMatrixFamily::MixedR => {
            let xy = x * y;
            let xb = x * &p.beta;
            match k {
                0 => one,
                1 => &one - &xy,
                2 => xy,
                3 => &one - &xb,
                _ => xb,
            }
        }
    };
    Ok(w)
}
