//! The sixteen four-probabilities on one axis quadruple, their marginals,
//! and the complex unsymmetrized trace they come from.
//!
//! ```bash
//! cargo run --example four_probability_table
//! ```

use std::f64::consts::FRAC_PI_4;

use signed_bell::quantum::{complex_table, coplanar_axes, delta, table2};
use signed_bell::{Axis, AxisQuadruple, Result, Slot, SpinSign, Symmetry};

fn main() -> Result<()> {
    let q = coplanar_axes(FRAC_PI_4);
    let t = table2(&q, Symmetry::Symmetric);

    println!("coplanar axes at θ = 45°, Δ = {:.3e}", delta(&q));
    for (s, p) in t.iter() {
        let flag = if p < 0.0 { "  <- negative" } else { "" };
        println!("  P({s}) = {p:+.6}{flag}");
    }
    println!("sum = {:.15}", t.sum());

    let keep = (Slot::A1, Slot::B1);
    let plus = (SpinSign::Plus, SpinSign::Plus);
    println!("marginal P(a1+, b1+) = {:.6}", t.marginal_pair(keep, plus)?);

    // off the plane the unsymmetrized traces pick up imaginary parts
    let skew = AxisQuadruple::new(Axis::X, Axis::Y, Axis::Z, Axis::from_spherical(1.0, 2.0));
    let c = complex_table(&skew, Symmetry::Symmetric);
    let worst_im = c.iter().map(|(_, z)| z.im.abs()).fold(0.0, f64::max);
    println!("non-coplanar unsymmetrized trace: largest imaginary part {worst_im:.4}");
    let m = c.marginal_pair(keep, plus)?;
    println!("  its marginal P(a1+, b1+) = {:.6} {:+.1e}i", m.re, m.im);
    Ok(())
}
