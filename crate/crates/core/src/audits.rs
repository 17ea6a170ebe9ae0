//! Positivity audits of classic Bell-type arguments.
//!
//! Each audit evaluates the quantity a published proof bounds, for a given
//! weighting of outcomes. With nonnegative weights the bound always holds;
//! with signed weights (still normalized) it can fail, and the failing
//! configuration is returned as a replayable [`Witness`].

use std::fmt;
use std::str::FromStr;

use crate::classical::{chsh_from_frequencies, FrequencyVector};
use crate::error::{Error, Result};
use crate::pauli::{SpinSign, IDENTITY_TOL};
use crate::rng::{unit_f64, CounterRng};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AuditKind {
    Bell64,
    ChshSigned,
    Stapp71,
    Stapp85,
    Bell71,
}

impl AuditKind {
    pub const ALL: [AuditKind; 5] =
        [AuditKind::Bell64, AuditKind::ChshSigned, AuditKind::Stapp71, AuditKind::Stapp85, AuditKind::Bell71];

    pub fn name(self) -> &'static str {
        match self {
            AuditKind::Bell64 => "bell64",
            AuditKind::ChshSigned => "chsh-signed",
            AuditKind::Stapp71 => "stapp71",
            AuditKind::Stapp85 => "stapp85",
            AuditKind::Bell71 => "bell71",
        }
    }
}

impl FromStr for AuditKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AuditKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown audit {s:?}")))
    }
}

impl fmt::Display for AuditKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Relation the audit checks between `lhs` and `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// `lhs ≤ rhs`
    AtMost,
    /// `lhs ≥ rhs`
    AtLeast,
    /// `0 ≤ lhs ≤ rhs`
    Within,
}

impl Bound {
    fn holds(self, lhs: f64, rhs: f64) -> bool {
        match self {
            Bound::AtMost => lhs <= rhs + IDENTITY_TOL,
            Bound::AtLeast => lhs >= rhs - IDENTITY_TOL,
            Bound::Within => (-IDENTITY_TOL..=rhs + IDENTITY_TOL).contains(&lhs),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Bound::AtMost => "lhs <= rhs",
            Bound::AtLeast => "lhs >= rhs",
            Bound::Within => "0 <= lhs <= rhs",
        }
    }
}

/// Finite hidden-variable support with signed weights. Column `k` of each
/// outcome row is `A(axis_k, λ)` for axes `(a, b, c)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedDensity {
    weights: Vec<f64>,
    outcomes: Vec<[SpinSign; 3]>,
}

impl SignedDensity {
    pub fn new(weights: Vec<f64>, outcomes: Vec<[SpinSign; 3]>) -> Result<Self> {
        if weights.is_empty() || weights.len() != outcomes.len() {
            return Err(Error::Invalid("density needs one outcome row per weight".into()));
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite("density weight"));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > IDENTITY_TOL {
            return Err(Error::Unnormalized { what: "density", sum });
        }
        Ok(SignedDensity { weights, outcomes })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn outcomes(&self) -> &[[SpinSign; 3]] {
        &self.outcomes
    }

    pub fn is_nonnegative(&self) -> bool {
        self.weights.iter().all(|&w| w >= 0.0)
    }

    /// `P(x, y) = −Σ ρ(λ) A(x, λ) A(y, λ)`.
    pub fn correlation(&self, x: usize, y: usize) -> f64 {
        -self
            .weights
            .iter()
            .zip(&self.outcomes)
            .map(|(w, o)| w * (o[x] * o[y]).value())
            .sum::<f64>()
    }
}

/// Data sufficient to rerun a failing audit.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    Density(SignedDensity),
    Frequencies(Vec<f64>),
    Mixture(Vec<(f64, [f64; 4])>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub kind: AuditKind,
    pub lhs: f64,
    pub rhs: f64,
    pub bound: Bound,
    pub bound_respected: bool,
    /// Named intermediate quantities, in evaluation order.
    pub details: Vec<(String, f64)>,
    /// Present exactly when the bound fails.
    pub witness: Option<Witness>,
}

impl AuditReport {
    fn build(
        kind: AuditKind,
        lhs: f64,
        rhs: f64,
        bound: Bound,
        details: Vec<(&str, f64)>,
        witness: impl FnOnce() -> Witness,
    ) -> Self {
        let bound_respected = bound.holds(lhs, rhs);
        AuditReport {
            kind,
            lhs,
            rhs,
            bound,
            bound_respected,
            details: details.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            witness: (!bound_respected).then(witness),
        }
    }

    pub fn detail(&self, name: &str) -> Option<f64> {
        self.details.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    /// Re-evaluates the witness, if any.
    pub fn replay(&self) -> Option<Result<AuditReport>> {
        let w = self.witness.as_ref()?;
        Some(match (self.kind, w) {
            (AuditKind::Bell64, Witness::Density(d)) => Ok(bell64_audit(d)),
            (AuditKind::ChshSigned, Witness::Frequencies(f)) => {
                FrequencyVector::new(f[0] as i64, f[1] as i64).map(|f| chsh_signed_audit(&f))
            }
            (AuditKind::Stapp71, Witness::Frequencies(f)) => stapp71_audit(f[0], f[1]),
            (AuditKind::Stapp85, Witness::Frequencies(f)) => stapp85_audit(f[0], f[1], f[2]),
            (AuditKind::Bell71, Witness::Mixture(m)) => bell71_mixture_audit(m),
            _ => Err(Error::Invariant("witness does not match audit kind".into())),
        })
    }
}

/// Bell's 1964 chain: `|P(a,b) − P(a,c)| ≤ 1 + P(b,c)`, i.e. the right side
/// `Σ ρ(λ)[1 − A(b,λ)A(c,λ)]`. Replacing `ρ` by `|ρ|` gives the bound the
/// triangle inequality actually licenses; it is reported alongside.
pub fn bell64_audit(d: &SignedDensity) -> AuditReport {
    let (p_ab, p_ac, p_bc) = (d.correlation(0, 1), d.correlation(0, 2), d.correlation(1, 2));
    let lhs = (p_ab - p_ac).abs();
    let rhs = 1.0 + p_bc;
    let abs_rhs: f64 = d
        .weights
        .iter()
        .zip(&d.outcomes)
        .map(|(w, o)| w.abs() * (1.0 - (o[1] * o[2]).value()))
        .sum();
    AuditReport::build(
        AuditKind::Bell64,
        lhs,
        rhs,
        Bound::AtMost,
        vec![("P(a,b)", p_ab), ("P(a,c)", p_ac), ("P(b,c)", p_bc), ("abs_weight_rhs", abs_rhs)],
        || Witness::Density(d.clone()),
    )
}

/// `|𝒞| ≤ 2` with `𝒞 = (2/N)(n₁ − n₂)`.
pub fn chsh_signed_audit(f: &FrequencyVector) -> AuditReport {
    let c = chsh_from_frequencies(f);
    AuditReport::build(
        AuditKind::ChshSigned,
        c.abs(),
        2.0,
        Bound::AtMost,
        vec![("n1", f.n1() as f64), ("n2", f.n2() as f64), ("N", f.total() as f64), ("C", c)],
        || Witness::Frequencies(vec![f.n1() as f64, f.n2() as f64]),
    )
}

/// Stapp (1971): `(1/N)Σ|n″n′ − 1| = 2(1 − N₁/N)` where `N₁` counts the
/// zero summands and `N₂` the summands equal to 2. Positive frequencies
/// confine the mean to `[0, 2]`.
pub fn stapp71_audit(n1: f64, n2: f64) -> Result<AuditReport> {
    let n = n1 + n2;
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::NonPositiveTotal(n));
    }
    let mean = (n1 * 0.0 + n2 * 2.0) / n;
    let closed = 2.0 * (1.0 - n1 / n);
    Ok(AuditReport::build(
        AuditKind::Stapp71,
        mean,
        2.0,
        Bound::Within,
        vec![("N1", n1), ("N2", n2), ("mean", mean), ("2(1-N1/N)", closed), ("sqrt2", SQRT_2)],
        || Witness::Frequencies(vec![n1, n2]),
    ))
}

/// [`stapp71_audit`] from explicit `(n″, n′)` pairs; the direct summation
/// is recorded as `direct_mean`.
pub fn stapp71_from_pairs(pairs: &[(SpinSign, SpinSign)]) -> Result<AuditReport> {
    if pairs.is_empty() {
        return Err(Error::NonPositiveTotal(0.0));
    }
    let direct = pairs.iter().map(|(a, b)| ((*a * *b).value() - 1.0).abs()).sum::<f64>() / pairs.len() as f64;
    let n1 = pairs.iter().filter(|(a, b)| a == b).count() as f64;
    let mut report = stapp71_audit(n1, pairs.len() as f64 - n1)?;
    report.details.push(("direct_mean".into(), direct));
    Ok(report)
}

/// The summand `(√2·r_A + r_B + r_B′)²` over all eight sign triples,
/// grouped into distinct values with multiplicities (descending value).
pub fn stapp85_summand_values() -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for ra in SpinSign::BOTH {
        for rb in SpinSign::BOTH {
            for rb2 in SpinSign::BOTH {
                let v = (SQRT_2 * ra.value() + rb.value() + rb2.value()).powi(2);
                match out.iter_mut().find(|(x, _)| (*x - v).abs() <= 1e-9) {
                    Some(entry) => entry.1 += 1,
                    None => out.push((v, 1)),
                }
            }
        }
    }
    out.sort_by(|a, b| b.0.total_cmp(&a.0));
    out
}

/// Stapp (1985): the mean `(1/n)[2n₁ + (2+√2)²n₂ + (2−√2)²n₃]` must exceed
/// `(√2 − 2)²`. Also reports the equivalent form
/// `2 + 2√2[(2+√2)n₂ − (2−√2)n₃]/n` and the `n₂` thresholds below which the
/// mean turns negative or falls under the bound.
pub fn stapp85_audit(n1: f64, n2: f64, n3: f64) -> Result<AuditReport> {
    let n = n1 + n2 + n3;
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::NonPositiveTotal(n));
    }
    let hi = (2.0 + SQRT_2).powi(2);
    let lo = (2.0 - SQRT_2).powi(2);
    let mean = (2.0 * n1 + hi * n2 + lo * n3) / n;
    let rearranged = 2.0 + 2.0 * SQRT_2 * ((2.0 + SQRT_2) * n2 - (2.0 - SQRT_2) * n3) / n;
    let bound = (SQRT_2 - 2.0).powi(2);
    // n₂ at which the mean crosses `level`, holding n and n₃ fixed
    let n2_at = |level: f64| ((level - 2.0) * n + 2.0 * SQRT_2 * (2.0 - SQRT_2) * n3) / (2.0 * SQRT_2 * (2.0 + SQRT_2));
    Ok(AuditReport::build(
        AuditKind::Stapp85,
        mean,
        bound,
        Bound::AtLeast,
        vec![
            ("n1", n1),
            ("n2", n2),
            ("n3", n3),
            ("mean", mean),
            ("rearranged", rearranged),
            ("n2_threshold_negative", n2_at(0.0)),
            ("n2_threshold_bound", n2_at(bound)),
        ],
        || Witness::Frequencies(vec![n1, n2, n3]),
    ))
}

/// `α₁(β₁ + β₂) + α₂(β₁ − β₂)` for real outcomes `(α₁, α₂, β₁, β₂)`.
pub fn gamma_real(x: [f64; 4]) -> f64 {
    let [a1, a2, b1, b2] = x;
    a1 * (b1 + b2) + a2 * (b1 - b2)
}

/// Evenly spaced levels on `[−1, 1]`.
pub fn unit_grid(levels: usize) -> Vec<f64> {
    (0..levels).map(|k| -1.0 + 2.0 * k as f64 / (levels - 1) as f64).collect()
}

/// Bell (1971) relaxes outcomes to `|A|, |B| ≤ 1`. Scans a `levels⁴` grid of
/// real outcomes for `max |γ|` and checks it against 2.
pub fn bell71_grid_audit(levels: usize) -> Result<AuditReport> {
    if levels < 2 {
        return Err(Error::Invalid("grid needs at least 2 levels".into()));
    }
    let grid = unit_grid(levels);
    let mut max = 0.0f64;
    let mut maximizers = 0usize;
    let mut off_vertex = 0usize;
    for &a1 in &grid {
        for &a2 in &grid {
            for &b1 in &grid {
                for &b2 in &grid {
                    let g = gamma_real([a1, a2, b1, b2]).abs();
                    if g > max + IDENTITY_TOL {
                        max = g;
                        maximizers = 0;
                        off_vertex = 0;
                    }
                    if (g - max).abs() <= IDENTITY_TOL {
                        maximizers += 1;
                        if [a1, a2, b1, b2].iter().any(|x| x.abs() != 1.0) {
                            off_vertex += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(AuditReport::build(
        AuditKind::Bell71,
        max,
        2.0,
        Bound::AtMost,
        vec![
            ("max_abs_gamma", max),
            ("maximizers", maximizers as f64),
            ("maximizers_off_vertices", off_vertex as f64),
        ],
        || Witness::Mixture(Vec::new()),
    ))
}

/// `|Σ w·γ(x)| ≤ 2` for a weighted mixture of real-valued outcome tuples.
pub fn bell71_mixture_audit(points: &[(f64, [f64; 4])]) -> Result<AuditReport> {
    if points.is_empty() {
        return Err(Error::Invalid("mixture needs at least one point".into()));
    }
    for (w, x) in points {
        if !w.is_finite() || x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("mixture"));
        }
        if let Some(&value) = x.iter().find(|v| v.abs() > 1.0) {
            return Err(Error::OutOfRange { value, lo: -1.0, hi: 1.0 });
        }
    }
    let sum: f64 = points.iter().map(|(w, _)| w).sum();
    if (sum - 1.0).abs() > IDENTITY_TOL {
        return Err(Error::Unnormalized { what: "mixture", sum });
    }
    let c: f64 = points.iter().map(|(w, x)| w * gamma_real(*x)).sum();
    Ok(AuditReport::build(
        AuditKind::Bell71,
        c.abs(),
        2.0,
        Bound::AtMost,
        vec![("C", c)],
        || Witness::Mixture(points.to_vec()),
    ))
}

/// Default paired instances: one with nonnegative weights and one signed
/// configuration that breaks the bound.
pub fn default_instances(kind: AuditKind) -> Result<(AuditReport, AuditReport)> {
    use SpinSign::{Minus as M, Plus as P};
    match kind {
        AuditKind::Bell64 => {
            let pass = SignedDensity::new(vec![0.25; 4], vec![[P, P, P], [P, M, P], [M, P, M], [P, P, M]])?;
            let signed = SignedDensity::new(vec![1.5, -0.5], vec![[P, P, P], [P, M, P]])?;
            Ok((bell64_audit(&pass), bell64_audit(&signed)))
        }
        AuditKind::ChshSigned => Ok((
            chsh_signed_audit(&FrequencyVector::new(750, 250)?),
            chsh_signed_audit(&FrequencyVector::new(1100, -100)?),
        )),
        AuditKind::Stapp71 => Ok((stapp71_audit(50.0, 50.0)?, stapp71_audit(-50.0, 150.0)?)),
        AuditKind::Stapp85 => Ok((stapp85_audit(100.0, 0.0, 0.0)?, stapp85_audit(130.0, -30.0, 0.0)?)),
        AuditKind::Bell71 => Ok((
            bell71_grid_audit(21)?,
            bell71_mixture_audit(&[(1.5, [1.0, 1.0, 1.0, 1.0]), (-0.5, [1.0, 1.0, -1.0, -1.0])])?,
        )),
    }
}

struct Draws<I: Iterator<Item = [u64; 2]>> {
    records: I,
    pending: Option<u64>,
}

impl<I: Iterator<Item = [u64; 2]>> Draws<I> {
    fn word(&mut self) -> u64 {
        if let Some(w) = self.pending.take() {
            return w;
        }
        let [a, b] = self.records.next().expect("record budget exhausted");
        self.pending = Some(b);
        a
    }

    fn unit(&mut self) -> f64 {
        unit_f64(self.word())
    }

    fn below(&mut self, n: u64) -> u64 {
        self.word() % n
    }

    fn sign(&mut self) -> SpinSign {
        if self.word() & 1 == 0 {
            SpinSign::Plus
        } else {
            SpinSign::Minus
        }
    }
}

const RECORDS_PER_INSTANCE: u64 = 256;

/// Runs `instances` random nonnegative-weight instances of an audit and
/// returns how many broke the bound (expected: zero). Instance `i` draws
/// from its own record range of the seeded stream.
pub fn randomized_nonnegative(kind: AuditKind, instances: u64, seed: u64) -> Result<u64> {
    let rng = CounterRng::new(seed);
    let mut failures = 0;
    for i in 0..instances {
        let mut d = Draws { records: rng.records(i * RECORDS_PER_INSTANCE, RECORDS_PER_INSTANCE), pending: None };
        let report = match kind {
            AuditKind::Bell64 => {
                let k = 1 + d.below(6) as usize;
                let raw: Vec<f64> = (0..k).map(|_| d.unit() + 1e-3).collect();
                let total: f64 = raw.iter().sum();
                let mut weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
                let drift: f64 = 1.0 - weights.iter().sum::<f64>();
                weights[0] += drift;
                let outcomes = (0..k).map(|_| [d.sign(), d.sign(), d.sign()]).collect();
                bell64_audit(&SignedDensity::new(weights, outcomes)?)
            }
            AuditKind::ChshSigned => {
                let n1 = d.below(1001) as i64;
                chsh_signed_audit(&FrequencyVector::new(n1, 1000 - n1)?)
            }
            AuditKind::Stapp71 => {
                let len = 1 + d.below(64) as usize;
                let pairs: Vec<_> = (0..len).map(|_| (d.sign(), d.sign())).collect();
                stapp71_from_pairs(&pairs)?
            }
            AuditKind::Stapp85 => {
                let n = [d.below(100), d.below(100), d.below(100) + 1].map(|v| v as f64);
                stapp85_audit(n[0], n[1], n[2])?
            }
            AuditKind::Bell71 => {
                let k = 1 + d.below(5) as usize;
                let raw: Vec<f64> = (0..k).map(|_| d.unit() + 1e-3).collect();
                let total: f64 = raw.iter().sum();
                let points: Vec<_> = raw
                    .iter()
                    .map(|w| (w / total, [0; 4].map(|_| 2.0 * d.unit() - 1.0)))
                    .collect();
                let drift: f64 = 1.0 - points.iter().map(|(w, _)| w).sum::<f64>();
                let mut points = points;
                points[0].0 += drift;
                bell71_mixture_audit(&points)?
            }
        };
        if !report.bound_respected {
            failures += 1;
        }
    }
    Ok(failures)
}
