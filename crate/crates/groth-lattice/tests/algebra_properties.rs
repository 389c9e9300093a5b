use std::collections::BTreeMap;

use groth_lattice::algebra::{qf, Monomial, MultiPoly, Rf, TruncatedSeries, Var, Q};
use proptest::prelude::*;

const VARS: [Var; 3] = [Var::X(1), Var::X(2), Var::Alpha];

fn poly_from(terms: &[(i64, [u32; 3])]) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for (c, e) in terms {
        let m = Monomial::from_pairs(VARS.iter().copied().zip(e.iter().copied()));
        p = &p + &MultiPoly::term(m, Q::from_integer((*c).into()));
    }
    p
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-3i64..=3, [0u32..=2, 0u32..=2, 0u32..=1]), 0..4).prop_map(|t| poly_from(&t))
}

/// `1 + (terms that each carry some x)`, so expansions in `x` exist with
/// coefficients in ℚ[α].
fn unit_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-3i64..=3, [0u32..=2, 0u32..=2, 0u32..=1]), 0..4).prop_map(|t| {
        let t: Vec<_> = t.into_iter().filter(|(_, e)| e[0] + e[1] > 0).collect();
        &poly_from(&t) + &MultiPoly::one()
    })
}

fn rf() -> impl Strategy<Value = Rf> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| Rf::new(n, d).ok())
}

fn point() -> impl Strategy<Value = BTreeMap<Var, Q>> {
    [(-5i64..=5, 1i64..=4), (-5i64..=5, 1i64..=4), (-5i64..=5, 1i64..=4)]
        .prop_map(|v| VARS.iter().copied().zip(v.iter().map(|&(n, d)| qf(n, d))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normalizing_twice_is_normalizing_once(f in rf()) {
        let again = Rf::new(f.numer().clone(), f.denom().clone()).unwrap();
        prop_assert_eq!(again, f);
    }

    #[test]
    fn field_axioms(f in rf(), g in rf(), h in rf()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
        if !f.is_zero() {
            prop_assert!((&f * &f.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn series_expansion_is_multiplicative(a in poly(), b in unit_poly(), c in poly(), d in unit_poly()) {
        let vars = [Var::X(1), Var::X(2)];
        let f = Rf::new(a, b).unwrap();
        let g = Rf::new(c, d).unwrap();
        let bound = 3;
        let fg = TruncatedSeries::from_rf(&(&f * &g), &vars, bound).unwrap();
        let sf = TruncatedSeries::from_rf(&f, &vars, bound).unwrap();
        let sg = TruncatedSeries::from_rf(&g, &vars, bound).unwrap();
        prop_assert_eq!(fg, sf.mul(&sg).unwrap());
    }

    #[test]
    fn evaluation_commutes_with_arithmetic(f in rf(), g in rf(), p in point()) {
        if let (Some(a), Some(b)) = (f.eval(&p), g.eval(&p)) {
            if let Some(s) = (&f + &g).eval(&p) {
                prop_assert_eq!(s, &a + &b);
            }
            if let Some(s) = (&f * &g).eval(&p) {
                prop_assert_eq!(s, &a * &b);
            }
            if let Some(s) = (&f - &g).eval(&p) {
                prop_assert_eq!(s, &a - &b);
            }
            if !g.is_zero() && b != Q::from_integer(0.into()) {
                if let Some(s) = f.checked_div(&g).unwrap().eval(&p) {
                    prop_assert_eq!(s, &a / &b);
                }
            }
        }
    }
}

#[test]
fn zero_numerator_has_unit_denominator() {
    let f = Rf::new(MultiPoly::zero(), poly_from(&[(3, [1, 0, 0]), (1, [0, 0, 1])])).unwrap();
    assert!(f.denom().is_one());
    assert!(f.is_zero());
}
