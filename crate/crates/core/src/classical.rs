//! Deterministic outcome assignments and local hidden-variable strategies.
//!
//! A [`LhvStrategy`] is an ordinary probability distribution over the 16
//! assignments `(α₁, α₂, β₁, β₂)`. Signed weights live in separate types
//! ([`FrequencyVector`], [`BellPopulations`]) so a "physical" strategy can
//! never silently carry a negative weight.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pauli::{SpinSign, IDENTITY_TOL};
use crate::rng::{unit_f64, CounterRng};

/// Definite ±1 outcomes for both knob positions on both stations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassicalAssignment {
    pub alpha1: SpinSign,
    pub alpha2: SpinSign,
    pub beta1: SpinSign,
    pub beta2: SpinSign,
}

impl ClassicalAssignment {
    pub const fn new(alpha1: SpinSign, alpha2: SpinSign, beta1: SpinSign, beta2: SpinSign) -> Self {
        ClassicalAssignment { alpha1, alpha2, beta1, beta2 }
    }

    /// Index with bit `3 − k` set when field `k` is `−`; `++++` is 0.
    pub fn index(&self) -> usize {
        [self.alpha1, self.alpha2, self.beta1, self.beta2]
            .iter()
            .fold(0, |acc, s| (acc << 1) | usize::from(*s == SpinSign::Minus))
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 16, "assignment index out of range");
        let bit = |k: usize| if (i >> (3 - k)) & 1 == 1 { SpinSign::Minus } else { SpinSign::Plus };
        ClassicalAssignment::new(bit(0), bit(1), bit(2), bit(3))
    }

    pub fn all() -> impl Iterator<Item = ClassicalAssignment> {
        (0..16).map(ClassicalAssignment::from_index)
    }

    /// Outcome at station A for knob position `knob` (0 or 1).
    pub fn alpha(&self, knob: usize) -> SpinSign {
        if knob == 0 {
            self.alpha1
        } else {
            self.alpha2
        }
    }

    pub fn beta(&self, knob: usize) -> SpinSign {
        if knob == 0 {
            self.beta1
        } else {
            self.beta2
        }
    }

    /// `α₁β₁ + α₁β₂ + α₂β₁ − α₂β₂`.
    pub fn gamma(&self) -> i32 {
        let [a1, a2, b1, b2] = [self.alpha1, self.alpha2, self.beta1, self.beta2].map(SpinSign::as_i32);
        a1 * b1 + a1 * b2 + a2 * b1 - a2 * b2
    }

    /// `α₁(β₁ + β₂) + α₂(β₁ − β₂)`; one bracket always vanishes.
    pub fn gamma_regrouped(&self) -> i32 {
        let [a1, a2, b1, b2] = [self.alpha1, self.alpha2, self.beta1, self.beta2].map(SpinSign::as_i32);
        a1 * (b1 + b2) + a2 * (b1 - b2)
    }
}

impl FromStr for ClassicalAssignment {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let signs = s.chars().map(SpinSign::from_char).collect::<Result<Vec<_>>>()?;
        match signs.as_slice() {
            [a1, a2, b1, b2] => Ok(ClassicalAssignment::new(*a1, *a2, *b1, *b2)),
            _ => Err(Error::Invalid(format!("assignment needs four signs, got {s:?}"))),
        }
    }
}

impl fmt::Display for ClassicalAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.alpha1, self.alpha2, self.beta1, self.beta2)
    }
}

/// Every assignment paired with its γ.
pub fn enumerate_assignments() -> Vec<(ClassicalAssignment, i32)> {
    ClassicalAssignment::all().map(|a| (a, a.gamma())).collect()
}

/// Occurrence counts of γ = +2 (`n1`) and γ = −2 (`n2`). Either count may
/// be negative; only the total must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrequencyVector {
    n1: i64,
    n2: i64,
}

impl FrequencyVector {
    pub fn new(n1: i64, n2: i64) -> Result<Self> {
        let total = n1 + n2;
        if total <= 0 {
            return Err(Error::NonPositiveTotal(total as f64));
        }
        Ok(FrequencyVector { n1, n2 })
    }

    pub fn n1(&self) -> i64 {
        self.n1
    }

    pub fn n2(&self) -> i64 {
        self.n2
    }

    pub fn total(&self) -> i64 {
        self.n1 + self.n2
    }

    pub fn is_nonnegative(&self) -> bool {
        self.n1 >= 0 && self.n2 >= 0
    }
}

/// `𝒞 = (2/N)(n₁ − n₂)`.
pub fn chsh_from_frequencies(f: &FrequencyVector) -> f64 {
    2.0 * (f.n1 - f.n2) as f64 / f.total() as f64
}

/// The four correlations `C_ij = ⟨α_i β_j⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Correlations {
    pub c11: f64,
    pub c12: f64,
    pub c21: f64,
    pub c22: f64,
}

impl Correlations {
    pub fn from_matrix(m: [[f64; 2]; 2]) -> Self {
        Correlations { c11: m[0][0], c12: m[0][1], c21: m[1][0], c22: m[1][1] }
    }

    pub fn as_matrix(&self) -> [[f64; 2]; 2] {
        [[self.c11, self.c12], [self.c21, self.c22]]
    }

    /// `C₁₁ + C₁₂ + C₂₁ − C₂₂`.
    pub fn chsh(&self) -> f64 {
        self.c11 + self.c12 + self.c21 - self.c22
    }
}

/// Nonnegative normalized weights over the 16 assignments.
#[derive(Debug, Clone, PartialEq)]
pub struct LhvStrategy {
    weights: [f64; 16],
}

impl LhvStrategy {
    pub fn new(weights: [f64; 16]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite("strategy weight"));
        }
        if let Some((index, &weight)) = weights.iter().enumerate().find(|(_, w)| **w < 0.0) {
            return Err(Error::NegativeWeight { index, weight });
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > IDENTITY_TOL {
            return Err(Error::Unnormalized { what: "strategy", sum });
        }
        Ok(LhvStrategy { weights })
    }

    /// Rescales nonnegative weights to sum to one.
    pub fn from_unnormalized(weights: [f64; 16]) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        if !(sum.is_finite() && sum > 0.0) {
            return Err(Error::Unnormalized { what: "strategy", sum });
        }
        LhvStrategy::new(weights.map(|w| w / sum))
    }

    pub fn uniform() -> Self {
        LhvStrategy { weights: [1.0 / 16.0; 16] }
    }

    pub fn point_mass(a: ClassicalAssignment) -> Self {
        let mut weights = [0.0; 16];
        weights[a.index()] = 1.0;
        LhvStrategy { weights }
    }

    pub fn weights(&self) -> &[f64; 16] {
        &self.weights
    }

    pub fn weight(&self, a: ClassicalAssignment) -> f64 {
        self.weights[a.index()]
    }

    // Index of the assignment whose cumulative interval contains `u`.
    fn sample(&self, cdf: &[f64; 16], u: f64) -> ClassicalAssignment {
        let i = cdf.iter().position(|&c| u < c).unwrap_or_else(|| {
            // u landed above the rounded total; take the last supported entry
            self.weights.iter().rposition(|&w| w > 0.0).unwrap_or(15)
        });
        ClassicalAssignment::from_index(i)
    }

    fn cdf(&self) -> [f64; 16] {
        let mut acc = 0.0;
        self.weights.map(|w| {
            acc += w;
            acc
        })
    }
}

/// Parses `uniform`, `point:<4 signs>` or `weights:<16 comma-separated
/// numbers>` (weights are rescaled to sum to one).
impl FromStr for LhvStrategy {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "uniform" {
            return Ok(LhvStrategy::uniform());
        }
        if let Some(signs) = text.strip_prefix("point:") {
            return Ok(LhvStrategy::point_mass(signs.trim().parse()?));
        }
        let list = text.strip_prefix("weights:").unwrap_or(text);
        let values = list
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|e| Error::Invalid(format!("bad weight {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let weights: [f64; 16] = values
            .try_into()
            .map_err(|v: Vec<f64>| Error::Invalid(format!("strategy needs 16 weights, got {}", v.len())))?;
        LhvStrategy::from_unnormalized(weights)
    }
}

/// Exact `C_ij` under the strategy.
pub fn correlations_from_strategy(s: &LhvStrategy) -> Correlations {
    let mut m = [[0.0; 2]; 2];
    for a in ClassicalAssignment::all() {
        let w = s.weight(a);
        for (i, row) in m.iter_mut().enumerate() {
            for (j, c) in row.iter_mut().enumerate() {
                *c += w * f64::from(a.alpha(i).as_i32() * a.beta(j).as_i32());
            }
        }
    }
    Correlations::from_matrix(m)
}

/// Monte-Carlo estimate of the four correlations.
#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloEstimate {
    pub trials: u64,
    pub seed: u64,
    /// Trials that landed on knob pair `(i, j)`.
    pub counts: [[u64; 2]; 2],
    /// Sum of `α_i β_j` over those trials.
    pub product_sums: [[i64; 2]; 2],
    pub estimates: Correlations,
    /// Plug-in binomial standard errors `√((1 − Ĉ²)/n)`.
    pub std_errors: Correlations,
}

impl MonteCarloEstimate {
    pub fn chsh(&self) -> f64 {
        self.estimates.chsh()
    }

    pub fn chsh_std_error(&self) -> f64 {
        let e = self.std_errors;
        (e.c11 * e.c11 + e.c12 * e.c12 + e.c21 * e.c21 + e.c22 * e.c22).sqrt()
    }

    /// `|𝒞̂| ≤ 2 + k·σ`.
    pub fn within_bound(&self, k_sigma: f64) -> bool {
        self.chsh().abs() <= 2.0 + k_sigma * self.chsh_std_error()
    }
}

const CHUNK: u64 = 1 << 14;

#[derive(Default, Clone, Copy)]
struct Tally {
    counts: [[u64; 2]; 2],
    sums: [[i64; 2]; 2],
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..2 {
            for j in 0..2 {
                self.counts[i][j] += other.counts[i][j];
                self.sums[i][j] += other.sums[i][j];
            }
        }
        self
    }
}

/// Runs `trials` independent events. Each event draws a hidden assignment
/// from the strategy and then, independently per station, a knob position;
/// one product `α_i β_j` is recorded. The result depends only on
/// `(strategy, trials, seed)`.
pub fn simulate_lhv(s: &LhvStrategy, trials: u64, seed: u64) -> Result<MonteCarloEstimate> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let rng = CounterRng::new(seed);
    let cdf = s.cdf();
    let chunks = trials.div_ceil(CHUNK);

    let tally = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let len = CHUNK.min(trials - start);
            let mut t = Tally::default();
            for [w0, w1] in rng.records(start, len) {
                let hidden = s.sample(&cdf, unit_f64(w0));
                // station A reads bit 0 only, station B bit 1 only
                let knob_a = (w1 & 1) as usize;
                let knob_b = ((w1 >> 1) & 1) as usize;
                t.counts[knob_a][knob_b] += 1;
                t.sums[knob_a][knob_b] += i64::from(hidden.alpha(knob_a).as_i32() * hidden.beta(knob_b).as_i32());
            }
            t
        })
        .reduce(Tally::default, Tally::merge);

    let mut est = [[f64::NAN; 2]; 2];
    let mut se = [[f64::NAN; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let n = tally.counts[i][j];
            if n > 0 {
                let c = tally.sums[i][j] as f64 / n as f64;
                est[i][j] = c;
                se[i][j] = ((1.0 - c * c).max(0.0) / n as f64).sqrt();
            }
        }
    }
    Ok(MonteCarloEstimate {
        trials,
        seed,
        counts: tally.counts,
        product_sums: tally.sums,
        estimates: Correlations::from_matrix(est),
        std_errors: Correlations::from_matrix(se),
    })
}

/// [`simulate_lhv`] on a dedicated pool of `threads` workers.
pub fn simulate_lhv_with_threads(s: &LhvStrategy, trials: u64, seed: u64, threads: usize) -> Result<MonteCarloEstimate> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    pool.install(|| simulate_lhv(s, trials, seed))
}

/// Measurement axis label for the three-axis Bell setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellAxis {
    A,
    B,
    C,
}

impl BellAxis {
    fn index(self) -> usize {
        self as usize
    }
}

use SpinSign::{Minus as M, Plus as P};

/// Particle-1 spins along `(a, b, c)` for rows `N₁ … N₈`; particle 2 carries
/// the opposite spins.
pub const HIDDEN_OUTCOME_ROWS: [[SpinSign; 3]; 8] = [
    [P, P, P],
    [P, P, M],
    [P, M, P],
    [M, P, P],
    [P, M, M],
    [M, P, M],
    [M, M, P],
    [M, M, M],
];

/// Signed populations `N₁ … N₈` over the rows of [`HIDDEN_OUTCOME_ROWS`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BellPopulations {
    n: [i64; 8],
}

impl BellPopulations {
    pub fn new(n: [i64; 8]) -> Result<Self> {
        let total: i64 = n.iter().sum();
        if total <= 0 {
            return Err(Error::NonPositiveTotal(total as f64));
        }
        Ok(BellPopulations { n })
    }

    pub fn counts(&self) -> &[i64; 8] {
        &self.n
    }

    pub fn total(&self) -> i64 {
        self.n.iter().sum()
    }

    /// Sum of populations with particle 1 at `s1` along `first` and
    /// particle 2 at `s2` along `second`.
    pub fn pair_count(&self, first: BellAxis, s1: SpinSign, second: BellAxis, s2: SpinSign) -> i64 {
        HIDDEN_OUTCOME_ROWS
            .iter()
            .zip(self.n.iter())
            .filter(|(row, _)| row[first.index()] == s1 && -row[second.index()] == s2)
            .map(|(_, n)| n)
            .sum()
    }

    pub fn pair_prob(&self, first: BellAxis, s1: SpinSign, second: BellAxis, s2: SpinSign) -> f64 {
        self.pair_count(first, s1, second, s2) as f64 / self.total() as f64
    }
}

/// Pairwise probabilities from populations and the inequality
/// `P(a+, b+) ≤ P(a+, c+) + P(c+, b+)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellPopulationReport {
    pub p_ab: f64,
    pub p_ac: f64,
    pub p_cb: f64,
    pub holds: bool,
}

pub fn bell_pairwise_from_populations(p: &BellPopulations) -> BellPopulationReport {
    use BellAxis::{A, B, C};
    let p_ab = p.pair_prob(A, P, B, P);
    let p_ac = p.pair_prob(A, P, C, P);
    let p_cb = p.pair_prob(C, P, B, P);
    // integer form avoids rounding at equality
    let holds = p.pair_count(A, P, B, P) <= p.pair_count(A, P, C, P) + p.pair_count(C, P, B, P);
    BellPopulationReport { p_ab, p_ac, p_cb, holds }
}
