use std::collections::BTreeMap;

use groth_lattice::algebra::{Rf, Var};
use groth_lattice::models::{Params, WeightModel};
use groth_lattice::partitions::{enumerate_partitions, is_horizontal_strip, is_vertical_strip, Partition};
use groth_lattice::transfer::{lattice_poly, min_sites, spec_for, transfer_element, xs, TransferSpec};

const MAX_SIZE: u32 = 5;

fn shapes(max: u32) -> Vec<Partition> {
    enumerate_partitions(max, usize::MAX, u32::MAX)
}

fn poly(model: WeightModel, lam: &Partition, n: usize) -> Rf {
    lattice_poly(&spec_for(model, lam, Params::formal()), lam, &xs(n)).unwrap()
}

fn swap(f: &Rf, i: u16) -> Rf {
    let map: BTreeMap<Var, Rf> =
        [(Var::X(i), Rf::var(Var::X(i + 1))), (Var::X(i + 1), Rf::var(Var::X(i)))].into_iter().collect();
    f.substitute(&map).unwrap()
}

#[test]
fn constructors_are_symmetric() {
    for lam in shapes(MAX_SIZE) {
        for model in WeightModel::ALL {
            for n in 2..=3 {
                let f = poly(model, &lam, n);
                for i in 1..n as u16 {
                    assert_eq!(swap(&f, i), f, "{} {} n={} swap {}", model.name(), lam, n, i);
                }
            }
        }
    }
}

#[test]
fn last_variable_at_zero_drops_a_row() {
    for lam in shapes(MAX_SIZE) {
        for model in WeightModel::ALL {
            for n in 1..=3 {
                let f = poly(model, &lam, n).subs(Var::X(n as u16), &Rf::zero()).unwrap();
                assert_eq!(f, poly(model, &lam, n - 1), "{} {} n={}", model.name(), lam, n);
            }
        }
    }
}

#[test]
fn extra_sites_do_not_change_the_polynomial() {
    for lam in shapes(MAX_SIZE) {
        for model in WeightModel::ALL {
            let base = poly(model, &lam, 2);
            let minimal = spec_for(model, &lam, Params::formal()).sites;
            for margin in 1..=2 {
                let spec = TransferSpec::new(model, minimal + margin);
                assert_eq!(lattice_poly(&spec, &lam, &xs(2)).unwrap(), base, "{} {} +{}", model.name(), lam, margin);
            }
        }
    }
}

#[test]
fn fermionic_row_models_vanish_past_n_variables() {
    for lam in shapes(6) {
        for n in 0..=3 {
            for model in [WeightModel::RowG, WeightModel::RowGDual, WeightModel::ColG] {
                assert_eq!(poly(model, &lam, n).is_zero(), lam.len() > n, "{} {} n={}", model.name(), lam, n);
            }
            // j_λ = g^(1,0)_{λ'} needs λ_1 ≤ n
            for model in [WeightModel::JRow, WeightModel::JRowDual] {
                assert_eq!(
                    poly(model, &lam, n).is_zero(),
                    lam.width() as usize > n,
                    "{} {} n={}",
                    model.name(),
                    lam,
                    n
                );
            }
        }
    }
}

#[test]
fn single_rows_respect_their_supports() {
    let x = Rf::var(Var::X(1));
    let all = shapes(MAX_SIZE);
    for model in [WeightModel::RowG, WeightModel::ColG, WeightModel::RowDualg, WeightModel::ColDualg, WeightModel::JRow]
    {
        let spec = spec_for(model, &Partition::new(vec![MAX_SIZE]).unwrap(), Params::formal());
        let spec = TransferSpec::new(model, spec.sites.max(MAX_SIZE as usize));
        for lam in &all {
            for mu in &all {
                let w = transfer_element(&spec, mu, lam, &x).unwrap();
                if w.is_zero() {
                    continue;
                }
                let ok = match model {
                    WeightModel::RowG | WeightModel::ColG => is_horizontal_strip(lam, mu),
                    WeightModel::JRow => is_vertical_strip(lam, mu),
                    _ => lam.contains(mu),
                };
                assert!(ok, "{} <{}|T|{}> = {}", model.name(), mu, lam, w.render());
            }
        }
    }
}

#[test]
fn minimal_sites_follow_the_encoding() {
    let lam = Partition::new(vec![3, 1]).unwrap();
    assert_eq!(min_sites(groth_lattice::transfer::Encoding::Row, &lam), 3);
    assert_eq!(min_sites(groth_lattice::transfer::Encoding::Column, &lam), 2);
}
