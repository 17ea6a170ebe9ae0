//! The three-axis Bell inequality: singlet pair probabilities violate it,
//! nonnegative populations satisfy it, a signed population does not.
//!
//! ```bash
//! cargo run --example bell_three_axes
//! ```

use signed_bell::classical::{bell_pairwise_from_populations, BellPopulations};
use signed_bell::quantum::bell_inequality_check;
use signed_bell::{Axis, Result};

fn main() -> Result<()> {
    let deg = |d: f64| Axis::in_xz_plane(d.to_radians());
    for (a, b, c) in [(0.0, 120.0, 60.0), (0.0, 90.0, 45.0), (0.0, 60.0, 30.0), (0.0, 180.0, 90.0)] {
        let r = bell_inequality_check(&deg(a), &deg(b), &deg(c));
        println!("a={a:>5}° b={b:>5}° c={c:>5}°  {:.4} ≤ {:.4}? violated: {}", r.lhs, r.rhs, r.violated);
    }

    for n in [[10, 20, 30, 40, 5, 15, 25, 35], [25, -25, 50, 0, 50, 0, 0, 0]] {
        let r = bell_pairwise_from_populations(&BellPopulations::new(n)?);
        println!("N = {n:?}: P(a+,b+) = {:.3}, P(a+,c+) + P(c+,b+) = {:.3}, holds: {}", r.p_ab, r.p_ac + r.p_cb, r.holds);
    }
    Ok(())
}
