//! Cross-module invariants on random inputs.

use binomsum::exact::{binomial_gen, rat, Rat};
use binomsum::hypergeom::{second_proof_chain, transform_3f2_check};
use binomsum::identities::theorem1::{lhs_theorem1, rhs_theorem1, single_sum_k};
use binomsum::identities::{lhs_theorem2, rhs_theorem2, lhs_theorem3, rhs_theorem3};
use binomsum::series::{remark_series, revert_u, reversion_holds, LaurentSeries};
use binomsum::Error;
use proptest::prelude::*;

fn alpha() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=9)
        .prop_map(|(p, q)| rat(p, q))
        .prop_filter("alpha outside {0, -1}", |a| !a.is_zero() && *a != Rat::from(-1))
}

fn any_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=11).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theorem1_three_ways(m in 0i64..10, n in 0i64..10, a in alpha()) {
        match rhs_theorem1(m, n, &a) {
            Ok(rhs) => {
                prop_assert_eq!(lhs_theorem1(m, n, &a), rhs.clone());
                prop_assert_eq!(single_sum_k(m, n, &a), rhs);
            }
            Err(Error::Degenerate(_)) => prop_assert!(m == 0 && n == 0 || (a.recip() * n + m).is_zero()),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }

    #[test]
    fn theorem2_random(m in 0i64..8, n in 0i64..8, r in 0i64..4, a in alpha()) {
        if let Ok(rhs) = rhs_theorem2(m, n, r, &a) {
            prop_assert_eq!(lhs_theorem2(m, n, r, &a), rhs);
        }
    }

    #[test]
    fn theorem3_at_rational_x(m in 1i64..7, n in 1i64..7, x in any_rat()) {
        if let Ok(rhs) = rhs_theorem3(m, n, &x) {
            prop_assert_eq!(lhs_theorem3(m, n, &x), rhs);
        }
    }

    #[test]
    fn chain_agrees_or_reports_pole(m in 1i64..6, n in 1i64..6, a in alpha()) {
        match (second_proof_chain(m, n, &a), rhs_theorem1(m, n, &a)) {
            (Ok(v), Ok(rhs)) => prop_assert_eq!(v, rhs),
            (Err(Error::PipelinePole(_)), _) | (_, Err(Error::Degenerate(_))) => {}
            (l, r) => prop_assert!(false, "chain {l:?} vs closed form {r:?}"),
        }
    }

    #[test]
    fn transformation_random(n in 0i64..7, a in any_rat(), b in any_rat(), d in any_rat(), e in any_rat()) {
        let low = &b - &e - n + 1;
        prop_assume!(![&d, &e, &low].iter().any(|p| p.is_nonpositive_integer()));
        prop_assert!(transform_3f2_check(n, &a, &b, &d, &e).unwrap());
    }

    #[test]
    fn reversion_and_remark(a in alpha(), order in 1i64..10) {
        let t = revert_u(&a, order).unwrap();
        prop_assert!(reversion_holds(&a, &t));
        prop_assert_eq!(t.coeff(1), Rat::one());
        let rs = remark_series(&a, &t);
        for m in 0..=order {
            prop_assert_eq!(rs.coeff(m), binomial_gen(&((&a + 1) * m), m));
        }
    }

    #[test]
    fn series_powers_consistent(cs in prop::collection::vec(any_rat(), 6), k in -3i64..4) {
        prop_assume!(!cs[0].is_zero());
        let s = LaurentSeries::new(0, cs);
        let lhs = &s.powi(k) * &s.powi(-k);
        prop_assert_eq!(lhs.coeff(0), Rat::one());
        for e in 1..=lhs.trunc_order() {
            prop_assert!(lhs.coeff(e).is_zero());
        }
    }
}
