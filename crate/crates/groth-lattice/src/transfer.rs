//! Single-row transfer-matrix elements and the polynomials built from chains of them.
//!
//! A polynomial in `x_1..x_n` is `<0|T(x_1)...T(x_n)|λ>` with `x_1` on the
//! bottom row. The dual route is `<λ|T*(x_n)...T*(x_1)|0>`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{MultiPoly, Rf, Var};
use crate::error::{Error, Result};
use crate::models::{Params, WeightModel, WeightTable};
use crate::partitions::{column_multiplicities, row_multiplicities, subpartitions, Occupancies, Partition};

/// How partitions become occupancy vectors on the vertical lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Encoding {
    Row,
    Column,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Direct,
    Dual,
}

/// One row of the lattice: a model on `sites` vertical lines, optionally with
/// a column parameter `z_j` on line `j` (spectral parameter becomes `x/z_j`).
#[derive(Clone, Debug)]
pub struct TransferSpec {
    pub model: WeightModel,
    pub sites: usize,
    pub inhomogeneities: Option<Vec<Rf>>,
    pub params: Params,
}

impl TransferSpec {
    pub fn new(model: WeightModel, sites: usize) -> Self {
        TransferSpec { model, sites, inhomogeneities: None, params: Params::formal() }
    }

    pub fn with_params(mut self, params: Params) -> Self {
        self.params = params;
        self
    }

    pub fn with_inhomogeneities(mut self, z: Vec<Rf>) -> Self {
        self.inhomogeneities = Some(z);
        self
    }

    /// True for the upside-down tile sets with right boundary 1.
    pub fn dual(&self) -> bool {
        self.model.right_boundary() == 1
    }

    pub fn encoding(&self) -> Encoding {
        if self.model.uses_column_encoding() {
            Encoding::Column
        } else {
            Encoding::Row
        }
    }

    pub fn encode(&self, p: &Partition) -> Occupancies {
        encode(self.encoding(), p)
    }

    pub fn row(&self, x: &Rf) -> Result<Row> {
        Row::new(self, x)
    }
}

pub fn encode(enc: Encoding, p: &Partition) -> Occupancies {
    match enc {
        Encoding::Row => row_multiplicities(p),
        Encoding::Column => column_multiplicities(p),
    }
}

/// Minimum number of sites that carries `p` in the given encoding.
pub fn min_sites(enc: Encoding, p: &Partition) -> usize {
    match enc {
        Encoding::Row => p.width() as usize,
        Encoding::Column => p.len(),
    }
}

/// One row of weights at a fixed spectral parameter, with one table per site
/// when the row is inhomogeneous.
pub struct Row {
    model: WeightModel,
    sites: usize,
    tables: Vec<WeightTable>,
}

impl Row {
    pub fn new(spec: &TransferSpec, x: &Rf) -> Result<Self> {
        match &spec.inhomogeneities {
            None => Ok(Row {
                model: spec.model,
                sites: spec.sites,
                tables: vec![WeightTable::new(spec.model, x.clone(), spec.params.clone())],
            }),
            Some(z) => {
                if z.len() < spec.sites {
                    return Err(Error::MissingInhomogeneity { needed: spec.sites, given: z.len() });
                }
                let per_site = z[..spec.sites].iter().map(|zj| x.checked_div(zj)).collect::<Result<Vec<_>>>()?;
                Ok(Row::from_site_parameters(spec.model, &spec.params, per_site))
            }
        }
    }

    /// A row whose site `j` uses spectral parameter `per_site[j]`. Labels
    /// beyond the last site are not allowed.
    pub fn from_site_parameters(model: WeightModel, params: &Params, per_site: Vec<Rf>) -> Self {
        let sites = per_site.len();
        let tables = per_site.into_iter().map(|s| WeightTable::new(model, s, params.clone())).collect();
        Row { model, sites, tables }
    }

    fn table(&mut self, site: usize) -> &mut WeightTable {
        if self.tables.len() == 1 {
            &mut self.tables[0]
        } else {
            &mut self.tables[site]
        }
    }

    /// Weight of the unique configuration with these vertical labels. Scans
    /// right to left from the fixed right boundary; the left edge is free.
    pub fn weight(&mut self, bottom: &[u32], top: &[u32]) -> Rf {
        let n = self.sites.max(bottom.len()).max(top.len());
        if n > self.sites && self.tables.len() != 1 {
            let tail = bottom.iter().skip(self.sites).chain(top.iter().skip(self.sites));
            if tail.into_iter().any(|&l| l != 0) {
                return Rf::zero();
            }
        }
        let n = if self.tables.len() == 1 { n } else { self.sites };
        let fermionic = self.model.is_fermionic();
        let mut c = self.model.right_boundary();
        let mut w = Rf::one();
        for i in (0..n).rev() {
            let b = bottom.get(i).copied().unwrap_or(0);
            let d = top.get(i).copied().unwrap_or(0);
            if c + d < b {
                return Rf::zero();
            }
            let a = c + d - b;
            if fermionic && a > 1 {
                return Rf::zero();
            }
            let v = match self.table(i).get(a, b, c, d) {
                Ok(v) => v,
                Err(_) => return Rf::zero(),
            };
            if v.is_zero() {
                return Rf::zero();
            }
            if !v.is_one() {
                w = &w * &v;
            }
            c = a;
        }
        w
    }
}

/// Weight of the unique row configuration with the given vertical labels;
/// 0 when the scan leaves the model's admissible labels.
pub fn row_configuration_weight(spec: &TransferSpec, bottom: &[u32], top: &[u32], x: &Rf) -> Result<Rf> {
    Ok(spec.row(x)?.weight(bottom, top))
}

/// `<μ|T(x)|λ>`: bottom labels encode `μ`, top labels encode `λ`.
pub fn transfer_element(spec: &TransferSpec, mu: &Partition, lambda: &Partition, x: &Rf) -> Result<Rf> {
    row_configuration_weight(spec, &spec.encode(mu), &spec.encode(lambda), x)
}

/// The spectral variables `x_1..x_n`.
pub fn xs(n: usize) -> Vec<Rf> {
    (1..=n).map(|i| Rf::var(Var::X(i as u16))).collect()
}

/// Sum over chains `∅ ⊆ μ^1 ⊆ ... ⊆ μ^n = λ` of products of row weights, one
/// row per entry of `xs`. Dual-tile models are read along the dual route.
pub fn lattice_poly(spec: &TransferSpec, lambda: &Partition, xs: &[Rf]) -> Result<Rf> {
    lattice_skew(spec, &Partition::empty(), lambda, xs)
}

/// `<inner|T(x_1)...T(x_n)|outer>`, or `<outer|T*(x_n)...T*(x_1)|inner>` for
/// dual-tile models. Zero unless `inner ⊆ outer`.
pub fn lattice_skew(spec: &TransferSpec, inner: &Partition, outer: &Partition, xs: &[Rf]) -> Result<Rf> {
    if !outer.contains(inner) {
        return Ok(Rf::zero());
    }
    let subs: Vec<Partition> = subpartitions(outer).into_iter().filter(|p| p.contains(inner)).collect();
    let enc: Vec<Occupancies> = subs.iter().map(|p| spec.encode(p)).collect();
    let index: BTreeMap<&Partition, usize> = subs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // containment lists
    let below: Vec<Vec<usize>> =
        subs.iter().map(|mu| (0..subs.len()).filter(|&j| mu.contains(&subs[j])).collect()).collect();

    let dual = spec.dual();
    let mut f: Vec<Rf> = vec![Rf::zero(); subs.len()];
    f[index[inner]] = Rf::one();
    for x in xs {
        let mut row = spec.row(x)?;
        let mut next: Vec<Rf> = vec![Rf::zero(); subs.len()];
        for (i, cell) in next.iter_mut().enumerate() {
            let mut acc = Rf::zero();
            for &j in &below[i] {
                if f[j].is_zero() {
                    continue;
                }
                let w = if dual { row.weight(&enc[i], &enc[j]) } else { row.weight(&enc[j], &enc[i]) };
                if w.is_zero() {
                    continue;
                }
                acc = &acc + &(&f[j] * &w);
            }
            *cell = acc;
        }
        f = next;
    }
    Ok(f[index[outer]].clone())
}

/// Homogeneous row on the fewest sites that carry `λ`.
pub fn spec_for(model: WeightModel, lambda: &Partition, params: Params) -> TransferSpec {
    let enc = if model.uses_column_encoding() { Encoding::Column } else { Encoding::Row };
    TransferSpec::new(model, min_sites(enc, lambda)).with_params(params)
}

/// Canonical Grothendieck polynomial `G^(α,β)_λ(x_1..x_n)` at formal parameters.
pub fn groth_poly(lambda: &Partition, n: usize, encoding: Encoding) -> Rf {
    groth_poly_with(lambda, n, encoding, &Params::formal())
}

pub fn groth_poly_with(lambda: &Partition, n: usize, encoding: Encoding, params: &Params) -> Rf {
    let model = match encoding {
        Encoding::Row => WeightModel::RowG,
        Encoding::Column => WeightModel::ColG,
    };
    lattice_poly(&spec_for(model, lambda, params.clone()), lambda, &xs(n)).expect("homogeneous row")
}

/// `G^(α,β)_λ` through the upside-down tiles and right boundary 1.
pub fn groth_poly_dual_route(lambda: &Partition, n: usize) -> Rf {
    lattice_poly(&spec_for(WeightModel::RowGDual, lambda, Params::formal()), lambda, &xs(n)).expect("homogeneous row")
}

/// Dual canonical Grothendieck polynomial `g^(α,β)_λ(x_1..x_n)`.
pub fn dual_groth_poly(lambda: &Partition, n: usize, encoding: Encoding) -> MultiPoly {
    dual_groth_poly_with(lambda, n, encoding, &Params::formal())
}

pub fn dual_groth_poly_with(lambda: &Partition, n: usize, encoding: Encoding, params: &Params) -> MultiPoly {
    let model = match encoding {
        Encoding::Row => WeightModel::RowDualg,
        Encoding::Column => WeightModel::ColDualg,
    };
    let f = lattice_poly(&spec_for(model, lambda, params.clone()), lambda, &xs(n)).expect("homogeneous row");
    f.as_poly().cloned().expect("dual Grothendieck weights are polynomial")
}

/// Dual weak Grothendieck polynomial `j_λ(x_1..x_n)`.
pub fn j_poly(lambda: &Partition, n: usize, route: Route) -> MultiPoly {
    let model = match route {
        Route::Direct => WeightModel::JRow,
        Route::Dual => WeightModel::JRowDual,
    };
    let f = lattice_poly(&spec_for(model, lambda, Params::formal()), lambda, &xs(n)).expect("homogeneous row");
    f.as_poly().cloned().expect("j weights are polynomial")
}

/// Families that accept column parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneralizedKind {
    /// `G^(0,-α)_λ`, column model.
    G,
    /// `g^(0,α)_λ`, column model.
    DualG,
    /// `G^(-α,0)_{λ'}`, row model.
    J,
    /// `g^(α,0)_{λ'}`, row model.
    DualJ,
    /// Row model at α = β = 0.
    SchurRow,
    /// Column model at α = β = 0.
    SchurCol,
}

impl GeneralizedKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "G" => GeneralizedKind::G,
            "g" => GeneralizedKind::DualG,
            "J" => GeneralizedKind::J,
            "j" => GeneralizedKind::DualJ,
            "s_r" | "sr" => GeneralizedKind::SchurRow,
            "s_c" | "sc" => GeneralizedKind::SchurCol,
            _ => return None,
        })
    }

    fn setup(self, alpha: &Rf, lambda: &Partition) -> (WeightModel, Params, Partition) {
        let zero = Rf::zero();
        match self {
            GeneralizedKind::G => (WeightModel::ColG, Params::new(zero, -alpha.clone()), lambda.clone()),
            GeneralizedKind::DualG => (WeightModel::ColDualg, Params::new(zero, alpha.clone()), lambda.clone()),
            GeneralizedKind::J => (WeightModel::RowG, Params::new(-alpha.clone(), zero), lambda.conjugate()),
            GeneralizedKind::DualJ => (WeightModel::RowDualg, Params::new(alpha.clone(), zero), lambda.conjugate()),
            GeneralizedKind::SchurRow => (WeightModel::RowG, Params::new(zero.clone(), zero), lambda.clone()),
            GeneralizedKind::SchurCol => (WeightModel::ColG, Params::new(zero.clone(), zero), lambda.clone()),
        }
    }
}

/// Checks that the model's R-matrix is scale invariant at these parameters:
/// row models need β = 0, column models need α = 0.
pub fn has_difference_property(model: WeightModel, params: &Params) -> bool {
    match model {
        WeightModel::RowG | WeightModel::RowGDual | WeightModel::RowDualg => params.beta.is_zero(),
        WeightModel::ColG | WeightModel::ColDualg => params.alpha.is_zero(),
        WeightModel::JRow | WeightModel::JRowDual => true,
    }
}

/// Lattice polynomial with column parameters `z`; `z[j]` sits on site `j+1`.
pub fn inhomogeneous_poly(model: WeightModel, params: &Params, lambda: &Partition, xs: &[Rf], z: &[Rf]) -> Result<Rf> {
    if !has_difference_property(model, params) {
        return Err(Error::DifferencePropertyViolation);
    }
    let spec = spec_for(model, lambda, params.clone()).with_inhomogeneities(z.to_vec());
    lattice_poly(&spec, lambda, xs)
}

/// Generalised polynomial at formal α.
pub fn generalized_poly(kind: GeneralizedKind, lambda: &Partition, n: usize, z: &[Rf]) -> Result<Rf> {
    generalized_poly_with(kind, lambda, &xs(n), z, &Rf::var(Var::Alpha))
}

pub fn generalized_poly_with(kind: GeneralizedKind, lambda: &Partition, xs: &[Rf], z: &[Rf], alpha: &Rf) -> Result<Rf> {
    let (model, params, shape) = kind.setup(alpha, lambda);
    inhomogeneous_poly(model, &params, &shape, xs, z)
}

/// The column parameters `z_1..z_k`.
pub fn zs(k: usize) -> Vec<Rf> {
    (1..=k).map(|i| Rf::var(Var::Z(i as u16))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn x(i: u16) -> Rf {
        Rf::var(Var::X(i))
    }
    fn one() -> Rf {
        Rf::one()
    }
    fn geo(x: &Rf) -> Rf {
        x.checked_div(&(&one() - &(&Rf::var(Var::Alpha) * x))).unwrap()
    }
    fn pass(x: &Rf) -> Rf {
        (&one() + &(&Rf::var(Var::Beta) * x)).checked_div(&(&one() - &(&Rf::var(Var::Alpha) * x))).unwrap()
    }

    #[test]
    fn single_row_examples() {
        let spec = TransferSpec::new(WeightModel::RowG, 1);
        let w = row_configuration_weight(&spec, &row_multiplicities(&p(&[])), &row_multiplicities(&p(&[1])), &x(1));
        assert_eq!(w.unwrap(), geo(&x(1)));
        let spec = TransferSpec::new(WeightModel::RowDualg, 2);
        let w = row_configuration_weight(&spec, &row_multiplicities(&p(&[1])), &row_multiplicities(&p(&[2])), &x(1));
        assert_eq!(w.unwrap(), x(1));
        for m in WeightModel::ALL {
            let spec = TransferSpec::new(m, 3);
            assert_eq!(row_configuration_weight(&spec, &[], &[], &x(1)).unwrap(), one());
        }
    }

    #[test]
    fn skew_element() {
        let spec = TransferSpec::new(WeightModel::RowG, 4);
        let w = transfer_element(&spec, &p(&[3, 2, 2, 1]), &p(&[4, 3, 2, 1]), &x(1)).unwrap();
        assert_eq!(w, &geo(&x(1)).pow(2) * &pass(&x(1)).pow(2));
        // (2,2)/(1,1) is not a horizontal strip
        assert!(transfer_element(&spec, &p(&[1, 1]), &p(&[2, 2]), &x(1)).unwrap().is_zero());
        for m in WeightModel::ALL {
            let spec = TransferSpec::new(m, 4);
            let lam = p(&[3, 1]);
            assert_eq!(transfer_element(&spec, &lam, &lam, &Rf::zero()).unwrap(), one(), "{:?}", m);
        }
    }

    #[test]
    fn small_grothendieck() {
        let g1 = groth_poly(&p(&[1]), 2, Encoding::Row);
        assert_eq!(g1, &(&geo(&x(1)) * &pass(&x(2))) + &geo(&x(2)));
        let g11 = groth_poly(&p(&[1, 1]), 2, Encoding::Row);
        assert_eq!(g11, &geo(&x(1)) * &geo(&x(2)));
        let g2 = groth_poly(&p(&[2]), 2, Encoding::Column);
        let expect = &(&(&geo(&x(1)).pow(2) * &pass(&x(2))) + &(&(&geo(&x(1)) * &geo(&x(2))) * &pass(&x(2))))
            + &geo(&x(2)).pow(2);
        assert_eq!(g2, expect);
        assert!(groth_poly(&p(&[1, 1, 1]), 2, Encoding::Row).is_zero());
        assert_eq!(groth_poly_dual_route(&p(&[1]), 1), geo(&x(1)));
        assert_eq!(groth_poly_dual_route(&p(&[]), 3), one());
    }

    #[test]
    fn small_dual_grothendieck() {
        let m = |s: &str| -> MultiPoly {
            // tiny parser for sums of products, good enough for these fixtures
            let mut acc = MultiPoly::zero();
            for t in s.split('+') {
                let mut prod = MultiPoly::one();
                for f in t.split('*') {
                    prod = &prod * &MultiPoly::var(Var::parse(f.trim()).unwrap());
                }
                acc = &acc + &prod;
            }
            acc
        };
        assert_eq!(dual_groth_poly(&p(&[1]), 2, Encoding::Row), m("x1+x2"));
        assert_eq!(dual_groth_poly(&p(&[2]), 2, Encoding::Row), m("x1*x1+x1*x2+x2*x2+a*x1+a*x2"));
        assert_eq!(dual_groth_poly(&p(&[1, 1]), 2, Encoding::Row), m("x1*x2+b*x1+b*x2"));
        assert_eq!(dual_groth_poly(&p(&[2]), 2, Encoding::Column), m("x1*x1+x1*x2+x2*x2+a*x1+a*x2"));
        assert_eq!(j_poly(&p(&[1]), 1, Route::Direct), m("x1"));
        assert_eq!(j_poly(&p(&[]), 2, Route::Dual), MultiPoly::one());
        let j11 = &m("x1*x1+x1*x2+x2*x2") + &m("x1+x2");
        assert_eq!(j_poly(&p(&[1, 1]), 2, Route::Direct), j11);
        assert_eq!(j_poly(&p(&[1, 1]), 2, Route::Dual), j11);
    }

    #[test]
    fn generalized_examples() {
        let z = zs(3);
        let r = |a: &Rf, b: &Rf| a.checked_div(b).unwrap();
        let g = generalized_poly_with(GeneralizedKind::G, &p(&[1]), &xs(1), &z, &one()).unwrap();
        assert_eq!(g, r(&x(1), &z[0]));

        let (x1, x2) = (x(1), x(2));
        let (z1, z2, z3) = (&z[0], &z[1], &z[2]);
        let sr = generalized_poly(GeneralizedKind::SchurRow, &p(&[3, 1]), 2, &z).unwrap();
        let expect = &(&(&r(&x1.pow(3), &(&(z1 * z2) * z3)) * &r(&x2, z1))
            + &(&r(&x1.pow(2), &(z1 * z2)) * &r(&x2.pow(2), &(z1 * z3))))
            + &(&r(&x1, z1) * &r(&x2.pow(3), &(&(z1 * z2) * z3)));
        assert_eq!(sr, expect);

        let sc = generalized_poly(GeneralizedKind::SchurCol, &p(&[3, 1]), 2, &z).unwrap();
        let expect = &(&(&r(&x1.pow(2), &(z1 * z2)) * &r(&x2, z1).pow(2))
            + &(&r(&x1.pow(3), &(&z1.pow(2) * z2)) * &r(&x2, z1)))
            + &(&r(&x1, z2) * &r(&x2, z1).pow(3));
        assert_eq!(sc, expect);

        let g31 = generalized_poly_with(GeneralizedKind::G, &p(&[3, 1]), &xs(2), &z, &one()).unwrap();
        let q = &one() - &r(&x1, z1);
        let expect = &(&(&(&r(&x1.pow(2), &(z1 * z2)) * &q) * &r(&x2, z1).pow(2))
            + &(&r(&x1.pow(3), &(&z1.pow(2) * z2)) * &r(&x2, z1)))
            + &(&(&q * &r(&x1, z2)) * &r(&x2, z1).pow(3));
        assert_eq!(g31, expect);
    }

    #[test]
    fn difference_property_guard() {
        let z = zs(2);
        let p11 = p(&[1, 1]);
        assert_eq!(
            inhomogeneous_poly(WeightModel::RowG, &Params::formal(), &p11, &xs(2), &z),
            Err(Error::DifferencePropertyViolation)
        );
        assert_eq!(
            generalized_poly(GeneralizedKind::G, &p(&[1, 1]), 2, &z[..1]),
            Err(Error::MissingInhomogeneity { needed: 2, given: 1 })
        );
    }
}
