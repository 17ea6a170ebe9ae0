//! Signed master distributions over spin measurement axes.
//!
//! The crate evaluates quantum "four-probabilities" over the axes
//! `(a₁, a₂, b₁, b₂)`, shows that their pairwise marginals are the usual
//! quantum predictions while individual entries go negative, computes the
//! CHSH value three independent ways, and contrasts this with classical
//! local hidden-variable strategies, where every weight is nonnegative and
//! `|𝒞| ≤ 2` holds.
//!
//! - [`pauli`]: 2×2 complex operators, Pauli vectors, projectors.
//! - [`quantum`]: pair probabilities, four-probability tables, marginals,
//!   CHSH evaluations, the three-axis Bell check.
//! - [`classical`]: deterministic assignments, γ, signed frequencies,
//!   population bookkeeping, Monte-Carlo simulation.
//! - [`audits`]: where positivity enters several classic proofs.
//! - [`cli`], [`format`]: the `signed-bell` command and its output format.

pub mod audits;
pub mod classical;
pub mod cli;
pub mod error;
pub mod format;
pub mod pauli;
pub mod quantum;
pub mod rng;

pub use error::{Error, Result};
pub use pauli::{Axis, Complex, Operator2, SpinSign};
pub use quantum::{AxisQuadruple, FourProbTable, SignQuadruple, Slot, Symmetry};
