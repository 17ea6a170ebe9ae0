//! Quantum four-probabilities over the axes `a₁, a₂, b₁, b₂`.
//!
//! The joint "probability" of simultaneous outcomes along four axes is
//! `½Tr[Π(λa₁)Π(μa₂)Π(νb₁)Π(τb₂)]`. Taken in a fixed order it is complex;
//! averaged over all 24 orderings it is real but may be negative. Its
//! two-slot marginals are the ordinary pairwise probabilities `¼(1 ± a·b)`.
//!
//! For the antisymmetric (singlet) case the signs on the two `b` slots are
//! reversed before evaluation.

mod bell;
mod chsh;
mod table;

use std::fmt;
use std::str::FromStr;

pub use bell::{bell_inequality_check, BellCheck};
pub use chsh::{
    chsh_closed_form, chsh_dot_form, chsh_master_form, chsh_maximum, correlation, master_coefficient,
    negative_intervals, signed_chsh_sum, MASTER_TERMS,
};
pub use table::{complex_table, table2, ComplexFourProbTable, FourProbTable};

use crate::error::Error;
use crate::pauli::{projector, Axis, Complex, Operator2, SpinSign};

/// Pair wavefunction symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    /// Singlet: a `+` on the `a` side pairs with `−` on the `b` side.
    Antisymmetric,
}

impl Symmetry {
    pub fn other(self) -> Self {
        match self {
            Symmetry::Symmetric => Symmetry::Antisymmetric,
            Symmetry::Antisymmetric => Symmetry::Symmetric,
        }
    }

    /// Sign applied to `b`-side outcomes before evaluation.
    fn b_sign(self) -> SpinSign {
        match self {
            Symmetry::Symmetric => SpinSign::Plus,
            Symmetry::Antisymmetric => SpinSign::Minus,
        }
    }
}

impl FromStr for Symmetry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "symmetric" | "sym" => Ok(Symmetry::Symmetric),
            "antisymmetric" | "anti" | "singlet" => Ok(Symmetry::Antisymmetric),
            other => Err(Error::Invalid(format!("unknown symmetry {other:?}"))),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Antisymmetric => "antisymmetric",
        })
    }
}

/// Position in the ordered quadruple `(a₁, a₂, b₁, b₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    A1,
    A2,
    B1,
    B2,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::A1, Slot::A2, Slot::B1, Slot::B2];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Outcome signs `(λ, μ, ν, τ)` on `(a₁, a₂, b₁, b₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignQuadruple {
    pub lambda: SpinSign,
    pub mu: SpinSign,
    pub nu: SpinSign,
    pub tau: SpinSign,
}

impl SignQuadruple {
    pub const fn new(lambda: SpinSign, mu: SpinSign, nu: SpinSign, tau: SpinSign) -> Self {
        SignQuadruple { lambda, mu, nu, tau }
    }

    pub fn from_array(s: [SpinSign; 4]) -> Self {
        SignQuadruple::new(s[0], s[1], s[2], s[3])
    }

    pub fn as_array(&self) -> [SpinSign; 4] {
        [self.lambda, self.mu, self.nu, self.tau]
    }

    pub fn get(&self, slot: Slot) -> SpinSign {
        self.as_array()[slot.index()]
    }

    /// Canonical index: bit `3 − k` is set when slot `k` is `−`, so
    /// `++++` is 0 and `----` is 15.
    pub fn index(&self) -> usize {
        self.as_array()
            .iter()
            .fold(0, |acc, s| (acc << 1) | usize::from(*s == SpinSign::Minus))
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 16, "sign quadruple index out of range");
        let bit = |k: usize| if (i >> (3 - k)) & 1 == 1 { SpinSign::Minus } else { SpinSign::Plus };
        SignQuadruple::new(bit(0), bit(1), bit(2), bit(3))
    }

    /// All 16 quadruples in canonical order.
    pub fn all() -> impl Iterator<Item = SignQuadruple> {
        (0..16).map(SignQuadruple::from_index)
    }

    pub fn negated(&self) -> Self {
        SignQuadruple::new(-self.lambda, -self.mu, -self.nu, -self.tau)
    }

    /// Reverses the signs on the two `b` slots.
    pub fn flip_b(&self) -> Self {
        SignQuadruple::new(self.lambda, self.mu, -self.nu, -self.tau)
    }

    fn with_symmetry(&self, symmetry: Symmetry) -> Self {
        let f = symmetry.b_sign();
        SignQuadruple::new(self.lambda, self.mu, self.nu * f, self.tau * f)
    }
}

impl FromStr for SignQuadruple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let signs = s.chars().map(SpinSign::from_char).collect::<Result<Vec<_>, _>>()?;
        let arr: [SpinSign; 4] = signs
            .try_into()
            .map_err(|_| Error::Invalid(format!("sign quadruple needs four signs, got {s:?}")))?;
        Ok(SignQuadruple::from_array(arr))
    }
}

impl fmt::Display for SignQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.as_array() {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Measurement axes `(a₁, a₂, b₁, b₂)`. Unit norm is enforced by [`Axis`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisQuadruple {
    pub a1: Axis,
    pub a2: Axis,
    pub b1: Axis,
    pub b2: Axis,
}

impl AxisQuadruple {
    pub fn new(a1: Axis, a2: Axis, b1: Axis, b2: Axis) -> Self {
        AxisQuadruple { a1, a2, b1, b2 }
    }

    pub fn uniform(a: Axis) -> Self {
        AxisQuadruple::new(a, a, a, a)
    }

    pub fn as_array(&self) -> [Axis; 4] {
        [self.a1, self.a2, self.b1, self.b2]
    }

    pub fn get(&self, slot: Slot) -> Axis {
        self.as_array()[slot.index()]
    }

    pub fn approx_eq(&self, other: &AxisQuadruple, tol: f64) -> bool {
        self.as_array().iter().zip(other.as_array().iter()).all(|(u, v)| {
            u.components()
                .iter()
                .zip(v.components().iter())
                .all(|(p, q)| (p - q).abs() <= tol)
        })
    }
}

/// Coplanar axes in the x–z plane at planar angles `(θ, −θ, 0, 2θ)`, so that
/// `a₁·b₁ = a₁·b₂ = a₂·b₁ = cos θ` and `a₂·b₂ = cos 3θ`.
pub fn coplanar_axes(theta: f64) -> AxisQuadruple {
    AxisQuadruple::new(
        Axis::in_xz_plane(theta),
        Axis::in_xz_plane(-theta),
        Axis::in_xz_plane(0.0),
        Axis::in_xz_plane(2.0 * theta),
    )
}

/// Pairwise probability of `sa` along `a` on the first particle and `sb`
/// along `b` on the second, as `½Tr[Π(sa·a)Π(sb·b)]` with the `b` sign
/// reversed for the antisymmetric case.
pub fn pair_prob(a: &Axis, sa: SpinSign, b: &Axis, sb: SpinSign, symmetry: Symmetry) -> f64 {
    let sb = sb * symmetry.b_sign();
    0.5 * (projector(a, sa) * projector(b, sb)).trace().re
}

/// `¼(1 ± sa·sb·a·b)`.
pub fn pair_prob_closed_form(a: &Axis, sa: SpinSign, b: &Axis, sb: SpinSign, symmetry: Symmetry) -> f64 {
    let s = (sa * sb * symmetry.b_sign()).value();
    0.25 * (1.0 + s * a.dot(b))
}

/// `⅓[(a₁·a₂)(b₁·b₂) + (a₁·b₁)(a₂·b₂) + (a₁·b₂)(b₁·a₂)]`.
pub fn delta(q: &AxisQuadruple) -> f64 {
    let AxisQuadruple { a1, a2, b1, b2 } = q;
    (a1.dot(a2) * b1.dot(b2) + a1.dot(b1) * a2.dot(b2) + a1.dot(b2) * b1.dot(a2)) / 3.0
}

fn half_trace_product(factors: &[(Axis, SpinSign)]) -> Complex {
    let product = factors
        .iter()
        .fold(Operator2::identity(), |acc, (axis, s)| acc * projector(axis, *s));
    product.trace() * 0.5
}

/// `½Tr[Π(λa₁)Π(μa₂)Π(νb₁)Π(τb₂)]` in that argument order. Complex in
/// general.
pub fn four_prob_complex(q: &AxisQuadruple, s: SignQuadruple, symmetry: Symmetry) -> Complex {
    let s = s.with_symmetry(symmetry);
    let axes = q.as_array();
    let signs = s.as_array();
    let factors: [(Axis, SpinSign); 4] = std::array::from_fn(|k| (axes[k], signs[k]));
    half_trace_product(&factors)
}

/// Closed-form expansion of [`four_prob_complex`]: pair terms, four
/// imaginary triple products, and the quartic term
/// `λμντ[(a₁·a₂)(b₁·b₂) − (a₁×a₂)·(b₁×b₂)]`.
pub fn four_prob_expansion(q: &AxisQuadruple, s: SignQuadruple, symmetry: Symmetry) -> Complex {
    let [l, m, n, t] = s.with_symmetry(symmetry).as_array().map(SpinSign::value);
    let AxisQuadruple { a1, a2, b1, b2 } = q;
    let dot = crate::pauli::dot3;
    let a12 = a1.cross(a2);
    let b12 = b1.cross(b2);

    let real = 1.0
        + l * m * a1.dot(a2)
        + l * n * a1.dot(b1)
        + l * t * a1.dot(b2)
        + m * n * a2.dot(b1)
        + m * t * a2.dot(b2)
        + n * t * b1.dot(b2)
        + l * m * n * t * (a1.dot(a2) * b1.dot(b2) - dot(a12, b12));
    let imag = l * m * n * dot(a12, b1.components())
        + l * m * t * dot(a12, b2.components())
        + l * n * t * dot(b12, a1.components())
        + m * n * t * dot(b12, a2.components());
    Complex::new(real, imag) / 16.0
}

/// Real symmetrized four-probability:
/// `(1/16){1 + λμ a₁·a₂ + λν a₁·b₁ + λτ a₁·b₂ + μν a₂·b₁ + μτ a₂·b₂ + ντ b₁·b₂ + λμντΔ}`.
///
/// May be negative.
pub fn four_prob_symmetrized(q: &AxisQuadruple, s: SignQuadruple, symmetry: Symmetry) -> f64 {
    let [l, m, n, t] = s.with_symmetry(symmetry).as_array().map(SpinSign::value);
    let AxisQuadruple { a1, a2, b1, b2 } = q;
    (1.0 + l * m * a1.dot(a2)
        + l * n * a1.dot(b1)
        + l * t * a1.dot(b2)
        + m * n * a2.dot(b1)
        + m * t * a2.dot(b2)
        + n * t * b1.dot(b2)
        + l * m * n * t * delta(q))
        / 16.0
}

/// All 24 orderings of four positions.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in (0..4).filter(|&j| j != i) {
            for k in (0..4).filter(|&k| k != i && k != j) {
                out.push([i, j, k, 6 - i - j - k]);
            }
        }
    }
    out
}

/// Average of the complex trace over every ordering of the four
/// (sign, axis) arguments. Signs travel with their axes.
pub fn four_prob_permutation_average(q: &AxisQuadruple, s: SignQuadruple, symmetry: Symmetry) -> Complex {
    let s = s.with_symmetry(symmetry);
    let axes = q.as_array();
    let signs = s.as_array();
    let perms = permutations4();
    let total: Complex = perms
        .iter()
        .map(|p| {
            let factors: [(Axis, SpinSign); 4] = std::array::from_fn(|k| (axes[p[k]], signs[p[k]]));
            half_trace_product(&factors)
        })
        .sum();
    total / perms.len() as f64
}

/// Symmetrized three-axis probability
/// `(1/8)(1 + s₁s₂ a·b + s₁s₃ a·c + s₂s₃ b·c)`.
///
/// The first slot belongs to the first particle; for the antisymmetric case
/// the signs on the second and third slots are reversed, so marginals over
/// one of them give the singlet pair probabilities for `(a, b)` and `(a, c)`.
pub fn three_prob(a: &Axis, b: &Axis, c: &Axis, s: [SpinSign; 3], symmetry: Symmetry) -> f64 {
    let f = symmetry.b_sign();
    let [s1, s2, s3] = [s[0].value(), (s[1] * f).value(), (s[2] * f).value()];
    0.125 * (1.0 + s1 * s2 * a.dot(b) + s1 * s3 * a.dot(c) + s2 * s3 * b.dot(c))
}

/// Average of `½Tr[ΠΠΠ]` over the six orderings of the three arguments.
pub fn three_prob_trace_average(a: &Axis, b: &Axis, c: &Axis, s: [SpinSign; 3], symmetry: Symmetry) -> Complex {
    let f = symmetry.b_sign();
    let args = [(*a, s[0]), (*b, s[1] * f), (*c, s[2] * f)];
    const ORDERS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let total: Complex = ORDERS
        .iter()
        .map(|o| half_trace_product(&[args[o[0]], args[o[1]], args[o[2]]]))
        .sum();
    total / 6.0
}
