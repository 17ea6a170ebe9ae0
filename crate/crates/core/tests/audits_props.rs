mod common;

use std::f64::consts::SQRT_2;

use common::*;
use proptest::prelude::*;
use signed_bell::audits::*;
use signed_bell::classical::FrequencyVector;
use signed_bell::SpinSign;

fn sign_triple() -> impl Strategy<Value = [SpinSign; 3]> {
    (arb_sign(), arb_sign(), arb_sign()).prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #[test]
    fn bell64_holds_for_densities(w in arb_simplex(5), rows in prop::collection::vec(sign_triple(), 5)) {
        let d = SignedDensity::new(w, rows).unwrap();
        let r = bell64_audit(&d);
        prop_assert!(r.bound_respected);
        prop_assert!(r.witness.is_none());
        prop_assert!((r.detail("abs_weight_rhs").unwrap() - r.rhs).abs() <= 1e-12);
    }

    #[test]
    fn stapp71_closed_form_matches_direct_sum(pairs in prop::collection::vec((arb_sign(), arb_sign()), 1..200)) {
        let r = stapp71_from_pairs(&pairs).unwrap();
        let direct: f64 = pairs.iter().map(|(a, b)| (a.value() * b.value() - 1.0).abs()).sum::<f64>() / pairs.len() as f64;
        prop_assert!((r.detail("2(1-N1/N)").unwrap() - direct).abs() <= 1e-12);
        prop_assert!((r.detail("direct_mean").unwrap() - direct).abs() <= 1e-12);
        prop_assert!(r.bound_respected);
    }

    #[test]
    fn stapp85_nonnegative_counts_hold(n1 in 0.0f64..1e4, n2 in 0.0f64..1e4, n3 in 0.0f64..1e4) {
        prop_assume!(n1 + n2 + n3 > 1e-3);
        let r = stapp85_audit(n1, n2, n3).unwrap();
        prop_assert!(r.bound_respected);
        let rel = (r.lhs - r.detail("rearranged").unwrap()).abs() / r.lhs.abs().max(1.0);
        prop_assert!(rel <= 1e-12);
    }

    #[test]
    fn bell71_convex_mixtures_hold(w in arb_simplex(4), pts in prop::collection::vec(prop::array::uniform4(-1.0f64..=1.0), 4)) {
        let mix: Vec<_> = w.into_iter().zip(pts).collect();
        let r = bell71_mixture_audit(&mix).unwrap();
        prop_assert!(r.lhs <= 2.0 + 1e-12);
        prop_assert!(r.bound_respected);
    }

    #[test]
    fn gamma_bounded_by_largest_outcomes(x in prop::array::uniform4(-1.0f64..=1.0)) {
        let amax = x[0].abs().max(x[1].abs());
        let bmax = x[2].abs().max(x[3].abs());
        prop_assert!(gamma_real(x).abs() <= 2.0 * amax.min(bmax) + 1e-12);
    }

    #[test]
    fn chsh_signed_nonnegative_holds(n1 in 0i64..5000, n2 in 0i64..5000) {
        prop_assume!(n1 + n2 > 0);
        prop_assert!(chsh_signed_audit(&FrequencyVector::new(n1, n2).unwrap()).bound_respected);
    }
}

#[test]
fn stapp85_enumeration_is_three_values() {
    let v = stapp85_summand_values();
    let want = [((2.0 + SQRT_2).powi(2), 2), (2.0, 4), ((2.0 - SQRT_2).powi(2), 2)];
    assert_eq!(v.len(), 3);
    for ((x, k), (y, m)) in v.iter().zip(want) {
        assert!((x - y).abs() <= 1e-12);
        assert_eq!(*k, m);
    }
}

#[test]
fn stapp85_signed_instance() {
    let r = stapp85_audit(130.0, -30.0, 0.0).unwrap();
    let direct = (2.0 * 130.0 + (2.0 + SQRT_2).powi(2) * -30.0) / 100.0;
    assert!((r.lhs - direct).abs() <= 1e-12);
    assert!(r.lhs < (SQRT_2 - 2.0).powi(2));
    assert!(r.lhs < 0.0);
}

#[test]
fn bell71_grid_maximizers() {
    let r = bell71_grid_audit(11).unwrap();
    assert!((r.lhs - 2.0).abs() <= 1e-12);
    let grid = unit_grid(11);
    for &a1 in &grid {
        for &a2 in &grid {
            for &b1 in &grid {
                for &b2 in &grid {
                    if (gamma_real([a1, a2, b1, b2]).abs() - 2.0).abs() <= 1e-12 {
                        assert_eq!(a1.abs().max(a2.abs()), 1.0);
                        assert_eq!(b1.abs().max(b2.abs()), 1.0);
                    }
                }
            }
        }
    }
    assert!(r.detail("maximizers_off_vertices").unwrap() > 0.0);
}

#[test]
fn signed_witnesses_replay() {
    for kind in AuditKind::ALL {
        let (pass, signed) = default_instances(kind).unwrap();
        assert!(pass.bound_respected, "{kind}");
        assert!(pass.witness.is_none() && pass.replay().is_none());
        assert!(!signed.bound_respected, "{kind}");
        let again = signed.replay().expect("witness present").unwrap();
        assert_eq!(again.lhs, signed.lhs);
        assert!(!again.bound_respected);
    }
}

#[test]
fn randomized_runs_are_clean() {
    for kind in AuditKind::ALL {
        assert_eq!(randomized_nonnegative(kind, 200, 3).unwrap(), 0, "{kind}");
    }
}
