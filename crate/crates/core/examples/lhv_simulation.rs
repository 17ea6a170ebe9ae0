//! Monte-Carlo runs of local hidden-variable strategies. Every nonnegative
//! strategy stays inside `|𝒞| ≤ 2`; the output is the same for any number
//! of worker threads.
//!
//! ```bash
//! cargo run --release --example lhv_simulation
//! ```

use signed_bell::classical::{correlations_from_strategy, simulate_lhv, simulate_lhv_with_threads, LhvStrategy};
use signed_bell::Result;

fn main() -> Result<()> {
    let strategies = [
        ("uniform", LhvStrategy::uniform()),
        ("point mass ++++", "point:++++".parse()?),
        ("skewed", "weights:5,1,1,1,1,1,1,1,1,1,1,1,1,1,1,5".parse()?),
    ];
    for (name, s) in &strategies {
        let est = simulate_lhv(s, 1_000_000, 42)?;
        let exact = correlations_from_strategy(s).chsh();
        println!(
            "{name:<16} CHSH estimate {:+.5} ± {:.5} (exact {exact:+.5}), within 2 + 5σ: {}",
            est.chsh(),
            est.chsh_std_error(),
            est.within_bound(5.0)
        );
    }

    let s = &strategies[2].1;
    let one = simulate_lhv_with_threads(s, 500_000, 7, 1)?;
    let four = simulate_lhv_with_threads(s, 500_000, 7, 4)?;
    println!("1 thread vs 4 threads identical: {}", one == four);
    Ok(())
}
