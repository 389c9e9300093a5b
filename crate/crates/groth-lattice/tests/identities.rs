use groth_lattice::algebra::{Rf, Var};
use groth_lattice::identities::*;
use groth_lattice::partitions::Partition;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn assert_pass(r: CheckReport) {
    assert!(r.passed, "{} {:?}: {:?}", r.name, r.params, r.counterexample);
    assert!(r.cases > 0, "{} compared nothing", r.name);
}

#[test]
fn first_cauchy_with_unequal_variable_counts() {
    // with n < m the sum must still run over ℓ(λ) ≤ m: g_λ(y_1) is nonzero for long λ
    assert_pass(check_cauchy_1(2, 1, 4));
    assert_pass(check_cauchy_1(1, 2, 4));
    assert_pass(check_cauchy_1(3, 1, 3));
}

#[test]
fn trivial_bounds() {
    assert_pass(check_cauchy_1(2, 2, 0));
    assert_pass(check_gen_cauchy(1, 1, 0));
    assert_pass(check_yeliussizov(2, 2, 0));
}

#[test]
fn skew_cauchy_small_shapes() {
    let shapes = [p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])];
    for lam in &shapes {
        for mu in &shapes[..4] {
            assert_pass(check_skew_cauchy(lam, mu, 2, 2, 4));
        }
    }
}

#[test]
fn generalized_variants() {
    assert_pass(check_gen_cauchy(2, 1, 3));
    assert_pass(check_gen_cauchy_at_alpha(1, 2, 3, &Rf::var(Var::Alpha)));
    assert_pass(check_gen_cauchy_weak(1, 1, 3));
    assert_pass(check_gen_cauchy_weak(2, 1, 3));
    assert_pass(check_gen_cauchy_dual_weak(1, 2));
    assert_pass(check_gen_cauchy_dual_weak(2, 2));
}

#[test]
fn yeliussizov_in_two_variables() {
    assert_pass(check_yeliussizov(1, 2, 3));
    assert_pass(check_yeliussizov(2, 2, 2));
}

#[test]
fn g_at_z_holds_for_short_shapes() {
    assert_pass(check_g_at_z_range(4, 5, 3, true));
    for lam in [p(&[]), p(&[1]), p(&[2, 1]), p(&[3, 2, 1])] {
        assert_pass(check_g_at_z(&lam, 3));
    }
    let r = check_g_at_z(&p(&[1, 1, 1, 1]), 3);
    assert!(!r.passed);
    assert_eq!(r.counterexample.unwrap().lhs, "0");
}

#[test]
fn second_cauchy_as_a_series() {
    assert_pass(check_cauchy_2_series(2, 2, 5));
    assert_pass(check_cauchy_2_beta_zero(3, 2));
}

#[test]
fn commutation_on_three_sites() {
    for kind in CommutationKind::ALL {
        assert_pass(check_commutation_with_bound(kind, 3, 1, 3));
    }
}

#[test]
fn failures_name_a_case() {
    let r = check_cauchy_2(1, 1);
    let c = r.counterexample.expect("the finite sum misses long shapes at formal β");
    assert!(c.lhs.contains('b'));
    assert_eq!(c.rhs, "x1*y1 + 1");
}
