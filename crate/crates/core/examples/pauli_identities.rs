//! Pauli algebra on a pair of axes: the product identity, projectors, and
//! expectation values in the unpolarized state.
//!
//! ```bash
//! cargo run --example pauli_identities
//! ```

use signed_bell::pauli::{expectation, pauli_dot, product_identity_check, projector};
use signed_bell::{Axis, Operator2, Result, SpinSign};

fn main() -> Result<()> {
    let a = Axis::from_spherical(0.7, 0.3);
    let b = Axis::new(0.0, 0.6, 0.8)?;

    let (lhs, rhs) = product_identity_check(&a, &b);
    println!("(σ·a)(σ·b) vs (a·b)1 + iσ·(a×b): max entry gap {:.1e}", lhs.max_abs_diff(&rhs));

    let p = projector(&a, SpinSign::Plus);
    let m = projector(&a, SpinSign::Minus);
    println!("Π(+a) idempotent: {}", p.is_idempotent(1e-12));
    println!("Π(+a) + Π(-a) = 1: {}", (p + m).approx_eq(&Operator2::identity(), 1e-12));

    let rho = Operator2::unpolarized();
    println!("<σ·a> = {:.3}", expectation(&rho, &pauli_dot(&a)).re);
    println!("<(σ·a)(σ·b)> = {:.6}, a·b = {:.6}", expectation(&rho, &(pauli_dot(&a) * pauli_dot(&b))).re, a.dot(&b));
    Ok(())
}
