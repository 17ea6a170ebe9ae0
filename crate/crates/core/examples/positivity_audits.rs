//! Audits of classic inequality proofs: a nonnegative instance that passes
//! and a signed instance that breaks the bound, for each proof.
//!
//! ```bash
//! cargo run --example positivity_audits
//! ```

use signed_bell::audits::{default_instances, randomized_nonnegative, stapp85_summand_values, AuditKind};
use signed_bell::Result;

fn main() -> Result<()> {
    let values: Vec<String> = stapp85_summand_values().iter().map(|(v, k)| format!("{v:.4}×{k}")).collect();
    println!("stapp85 summand values: {}", values.join(", "));

    for kind in AuditKind::ALL {
        let (pass, signed) = default_instances(kind)?;
        let random_failures = randomized_nonnegative(kind, 500, 1)?;
        println!(
            "{kind:<12} {}: nonnegative {:.4} vs {:.4} ({}), signed {:.4} vs {:.4} ({}), random failures {random_failures}/500",
            pass.bound.describe(),
            pass.lhs,
            pass.rhs,
            if pass.bound_respected { "holds" } else { "broken" },
            signed.lhs,
            signed.rhs,
            if signed.bound_respected { "holds" } else { "broken" },
        );
    }
    Ok(())
}
