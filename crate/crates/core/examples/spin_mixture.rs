//! A state that always gives `S_z = +` cannot be written as a mixture of
//! `S_x = +` and `S_x = −`, not even with a signed weight: every such
//! combination gives `P(S_z = −) = ½`.
//!
//! ```bash
//! cargo run --example spin_mixture
//! ```

use signed_bell::pauli::{expectation, projector};
use signed_bell::{Axis, SpinSign};

fn main() {
    let x_plus = projector(&Axis::X, SpinSign::Plus);
    let x_minus = projector(&Axis::X, SpinSign::Minus);
    let z_minus = projector(&Axis::Z, SpinSign::Minus);

    println!("target: P(S_z = -) = {:.3}", expectation(&projector(&Axis::Z, SpinSign::Plus), &z_minus).re);
    for lambda in [-1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0] {
        let rho = x_plus.scale_real(lambda) + x_minus.scale_real(1.0 - lambda);
        println!("λ = {lambda:>5}: P(S_z = -) = {:.3}", expectation(&rho, &z_minus).re);
    }
}
