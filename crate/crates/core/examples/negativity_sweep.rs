//! Where the coplanar four-probabilities go negative, and a sweep written
//! as CSV through the same code path as the `sweep` subcommand.
//!
//! ```bash
//! cargo run --example negativity_sweep
//! ```

use std::f64::consts::PI;

use signed_bell::cli::{cmd_sweep, OutputArgs, SweepArgs};
use signed_bell::format::Delimiter;
use signed_bell::quantum::negative_intervals;
use signed_bell::{Result, SignQuadruple, Symmetry};

fn main() -> Result<()> {
    for label in ["+++-", "+-+-", "++--", "++++"] {
        let s: SignQuadruple = label.parse()?;
        let spans = negative_intervals(s, Symmetry::Symmetric, 0.0, PI, 1801)?;
        let text: Vec<String> = spans
            .iter()
            .map(|(lo, hi)| format!("[{:.3}°, {:.3}°]", lo.to_degrees(), hi.to_degrees()))
            .collect();
        println!("P({label}) < 0 on {}", if text.is_empty() { "nowhere".into() } else { text.join(", ") });
    }

    let sweep = cmd_sweep(&SweepArgs {
        theta_min: 0.0,
        theta_max: 90.0,
        steps: 7,
        symmetry: Symmetry::Symmetric,
        photon: false,
        output: OutputArgs { out: None, format: Delimiter::Csv },
    })?;
    print!("{}", sweep.text);
    Ok(())
}
