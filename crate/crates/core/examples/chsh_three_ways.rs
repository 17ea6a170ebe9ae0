//! The CHSH combination evaluated from the closed form `3cos θ − cos 3θ`,
//! from dot products, and from the signed master tables.
//!
//! ```bash
//! cargo run --example chsh_three_ways
//! ```

use signed_bell::quantum::{chsh_closed_form, chsh_dot_form, chsh_master_form, chsh_maximum, coplanar_axes, table2};
use signed_bell::{Result, Symmetry};

fn main() -> Result<()> {
    println!("{:>6} {:>12} {:>12} {:>12}", "θ°", "closed", "dot", "master");
    for deg in [0.0, 15.0, 30.0, 45.0, 60.0, 90.0, 135.0, 180.0] {
        let theta: f64 = f64::to_radians(deg);
        let q = coplanar_axes(theta);
        let master = chsh_master_form(&table2(&q, Symmetry::Symmetric), &table2(&q, Symmetry::Antisymmetric))?;
        println!("{deg:>6} {:>12.8} {:>12.8} {:>12.8}", chsh_closed_form(theta), chsh_dot_form(&q), master);
    }
    let (theta, value) = chsh_maximum();
    println!("maximum {value:.12} at θ = {:.9}°", theta.to_degrees());
    Ok(())
}
