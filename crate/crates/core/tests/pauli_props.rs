mod common;

use common::*;
use num_complex::Complex64 as C;
use proptest::prelude::*;
use signed_bell::pauli::{expectation, pauli_dot, product_identity_check, projector, sigma_dot};
use signed_bell::{Axis, Operator2, SpinSign};

const TOL: f64 = 1e-12;

fn close(a: C, b: C) -> bool {
    (a - b).norm() <= TOL
}

#[test]
fn product_identity_on_1000_pairs() {
    let quads = random_quadruples(11, 500);
    let mut worst = 0.0f64;
    for q in &quads {
        for (a, b) in [(q.a1, q.a2), (q.b1, q.b2)] {
            let (lhs, rhs) = product_identity_check(&a, &b);
            worst = worst.max(lhs.max_abs_diff(&rhs));
        }
    }
    assert!(worst <= TOL, "worst deviation {worst}");
}

proptest! {
    #[test]
    fn projector_matches_oracle(a in arb_axis(), s in arb_sign()) {
        let p = projector(&a, s);
        let o = oracle_projector(a.components(), s.value());
        for (i, row) in o.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                prop_assert!(close(p.get(i, j), *want));
            }
        }
    }

    #[test]
    fn projectors_are_complementary_idempotent_hermitian(a in arb_axis()) {
        let p = projector(&a, SpinSign::Plus);
        let m = projector(&a, SpinSign::Minus);
        prop_assert!(p.is_idempotent(TOL));
        prop_assert!(p.is_hermitian(TOL));
        prop_assert!((p + m).approx_eq(&Operator2::identity(), TOL));
        prop_assert!((p * m).approx_eq(&Operator2::zero(), TOL));
        prop_assert!(close(p.trace(), C::new(1.0, 0.0)));
    }

    #[test]
    fn sigma_dot_squares_to_identity(a in arb_axis()) {
        let s = pauli_dot(&a);
        prop_assert!((s * s).approx_eq(&Operator2::identity(), TOL));
        prop_assert!(close(s.trace(), C::new(0.0, 0.0)));
    }

    #[test]
    fn sigma_dot_is_linear(u in prop::array::uniform3(-2.0f64..2.0), v in prop::array::uniform3(-2.0f64..2.0)) {
        let sum = [u[0] + v[0], u[1] + v[1], u[2] + v[2]];
        prop_assert!(sigma_dot(sum).approx_eq(&(sigma_dot(u) + sigma_dot(v)), TOL));
    }

    #[test]
    fn unpolarized_expectations(a in arb_axis(), b in arb_axis()) {
        let rho = Operator2::unpolarized();
        prop_assert!(close(expectation(&rho, &pauli_dot(&a)), C::new(0.0, 0.0)));
        let ab = pauli_dot(&a) * pauli_dot(&b);
        prop_assert!(close(expectation(&rho, &ab), C::new(a.dot(&b), 0.0)));
    }

    #[test]
    fn axis_rejects_off_unit_input(x in -3.0f64..3.0, y in -3.0f64..3.0, z in -3.0f64..3.0) {
        let n = (x * x + y * y + z * z).sqrt();
        let r = Axis::new(x, y, z);
        if (n - 1.0).abs() > 1e-6 {
            prop_assert!(r.is_err());
        } else {
            prop_assert!((r.unwrap().norm() - 1.0).abs() <= 1e-15);
        }
    }
}

#[test]
fn z_and_x_examples() {
    let (lhs, rhs) = product_identity_check(&Axis::Z, &Axis::X);
    assert!(lhs.approx_eq(&rhs, TOL));
    let i_sy = Operator2::sigma_y().scale(C::new(0.0, 1.0));
    assert!(lhs.approx_eq(&i_sy, TOL));
    assert!(projector(&Axis::Z, SpinSign::Plus).approx_eq(&Operator2::diag(1.0, 0.0), TOL));
}
