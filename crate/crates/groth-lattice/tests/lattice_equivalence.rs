use groth_lattice::algebra::Rf;
use groth_lattice::oracles::{branch_poly, BranchKind};
use groth_lattice::partitions::enumerate_partitions;
use groth_lattice::transfer::{dual_groth_poly, groth_poly, groth_poly_dual_route, j_poly, Encoding, Route};

const MAX_SIZE: u32 = 6;
const MAX_VARS: usize = 3;

#[test]
fn row_column_and_oracle_agree() {
    for lam in enumerate_partitions(MAX_SIZE, usize::MAX, u32::MAX) {
        for n in 0..=MAX_VARS {
            let row = groth_poly(&lam, n, Encoding::Row);
            assert_eq!(row, groth_poly(&lam, n, Encoding::Column), "G {} n={}", lam, n);
            assert_eq!(row, branch_poly(BranchKind::G, &lam, n), "G oracle {} n={}", lam, n);
            assert_eq!(row.is_zero(), lam.len() > n);

            let g = Rf::from_poly(dual_groth_poly(&lam, n, Encoding::Row));
            assert_eq!(g, Rf::from_poly(dual_groth_poly(&lam, n, Encoding::Column)), "g {} n={}", lam, n);
            assert_eq!(g, branch_poly(BranchKind::DualG, &lam, n), "g oracle {} n={}", lam, n);

            let j = Rf::from_poly(j_poly(&lam, n, Route::Direct));
            assert_eq!(j, branch_poly(BranchKind::J, &lam, n), "j oracle {} n={}", lam, n);
        }
    }
}

#[test]
fn direct_and_dual_routes_agree() {
    for lam in enumerate_partitions(MAX_SIZE - 1, usize::MAX, u32::MAX) {
        for n in 0..=MAX_VARS {
            assert_eq!(groth_poly(&lam, n, Encoding::Row), groth_poly_dual_route(&lam, n), "{} n={}", lam, n);
            assert_eq!(j_poly(&lam, n, Route::Direct), j_poly(&lam, n, Route::Dual), "j {} n={}", lam, n);
        }
    }
}
