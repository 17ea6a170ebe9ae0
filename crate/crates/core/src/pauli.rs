//! Spin-½ operator algebra on 2×2 complex matrices.
//!
//! Everything downstream is built from three pieces defined here: unit
//! measurement axes, the Pauli vector contracted with an axis (`σ·a`), and the
//! projectors `Π(±a) = ½(1 ± σ·a)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Complex = Complex64;

/// Tolerance for algebraic identities in double precision.
pub const IDENTITY_TOL: f64 = 1e-12;

/// Inputs within this distance of unit norm are renormalized, anything
/// further away is rejected.
pub const AXIS_NORMALIZE_TOL: f64 = 1e-6;

/// Outcome or orientation label, `+1` (up) or `−1` (down).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinSign {
    Plus,
    Minus,
}

impl SpinSign {
    pub const BOTH: [SpinSign; 2] = [SpinSign::Plus, SpinSign::Minus];

    #[inline]
    pub fn value(self) -> f64 {
        match self {
            SpinSign::Plus => 1.0,
            SpinSign::Minus => -1.0,
        }
    }

    #[inline]
    pub fn as_i32(self) -> i32 {
        match self {
            SpinSign::Plus => 1,
            SpinSign::Minus => -1,
        }
    }

    #[inline]
    pub fn flip(self) -> Self {
        match self {
            SpinSign::Plus => SpinSign::Minus,
            SpinSign::Minus => SpinSign::Plus,
        }
    }

    pub fn from_i32(v: i32) -> Result<Self> {
        match v {
            1 => Ok(SpinSign::Plus),
            -1 => Ok(SpinSign::Minus),
            other => Err(Error::Invalid(format!("spin sign must be ±1, got {other}"))),
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '+' => Ok(SpinSign::Plus),
            '-' | '−' => Ok(SpinSign::Minus),
            other => Err(Error::Invalid(format!("spin sign must be '+' or '-', got {other:?}"))),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            SpinSign::Plus => '+',
            SpinSign::Minus => '-',
        }
    }
}

impl Neg for SpinSign {
    type Output = SpinSign;
    fn neg(self) -> SpinSign {
        self.flip()
    }
}

impl Mul for SpinSign {
    type Output = SpinSign;
    fn mul(self, rhs: SpinSign) -> SpinSign {
        if self == rhs {
            SpinSign::Plus
        } else {
            SpinSign::Minus
        }
    }
}

impl fmt::Display for SpinSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[inline]
pub fn dot3(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

#[inline]
pub fn cross3(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

/// A unit measurement direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    x: f64,
    y: f64,
    z: f64,
}

impl Axis {
    pub const X: Axis = Axis { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: Axis = Axis { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: Axis = Axis { x: 0.0, y: 0.0, z: 1.0 };

    /// Builds an axis from direction cosines, renormalizing inputs that are
    /// within [`AXIS_NORMALIZE_TOL`] of unit norm.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite("axis"));
        }
        let norm = (x * x + y * y + z * z).sqrt();
        if (norm - 1.0).abs() > AXIS_NORMALIZE_TOL {
            return Err(Error::NonUnitAxis { x, y, z, norm });
        }
        Ok(Axis { x: x / norm, y: y / norm, z: z / norm })
    }

    /// Direction at `angle` radians from +z towards +x, in the x–z plane.
    pub fn in_xz_plane(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Axis { x: s, y: 0.0, z: c }
    }

    /// Direction from spherical angles (polar from +z, azimuth from +x).
    pub fn from_spherical(polar: f64, azimuth: f64) -> Self {
        let (sp, cp) = polar.sin_cos();
        let (sa, ca) = azimuth.sin_cos();
        Axis { x: sp * ca, y: sp * sa, z: cp }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn norm(&self) -> f64 {
        dot3(self.components(), self.components()).sqrt()
    }

    pub fn dot(&self, other: &Axis) -> f64 {
        dot3(self.components(), other.components())
    }

    pub fn cross(&self, other: &Axis) -> [f64; 3] {
        cross3(self.components(), other.components())
    }

    /// The axis scaled by a sign, `±a`.
    pub fn signed(&self, s: SpinSign) -> Axis {
        match s {
            SpinSign::Plus => *self,
            SpinSign::Minus => Axis { x: -self.x, y: -self.y, z: -self.z },
        }
    }
}

impl Neg for Axis {
    type Output = Axis;
    fn neg(self) -> Axis {
        self.signed(SpinSign::Minus)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Complex 2×2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Operator2 {
    m: [[Complex; 2]; 2],
}

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);
const I: Complex = Complex::new(0.0, 1.0);

impl Operator2 {
    pub fn new(m: [[Complex; 2]; 2]) -> Result<Self> {
        if m.iter().flatten().all(|c| c.re.is_finite() && c.im.is_finite()) {
            Ok(Operator2 { m })
        } else {
            Err(Error::NonFinite("operator entry"))
        }
    }

    pub(crate) const fn from_entries(m: [[Complex; 2]; 2]) -> Self {
        Operator2 { m }
    }

    pub const fn zero() -> Self {
        Operator2 { m: [[ZERO, ZERO], [ZERO, ZERO]] }
    }

    pub const fn identity() -> Self {
        Operator2 { m: [[ONE, ZERO], [ZERO, ONE]] }
    }

    pub const fn sigma_x() -> Self {
        Operator2 { m: [[ZERO, ONE], [ONE, ZERO]] }
    }

    pub const fn sigma_y() -> Self {
        Operator2 { m: [[ZERO, Complex::new(0.0, -1.0)], [I, ZERO]] }
    }

    pub const fn sigma_z() -> Self {
        Operator2 { m: [[ONE, ZERO], [ZERO, Complex::new(-1.0, 0.0)]] }
    }

    pub fn diag(a: f64, b: f64) -> Self {
        Operator2 { m: [[Complex::new(a, 0.0), ZERO], [ZERO, Complex::new(b, 0.0)]] }
    }

    /// Unpolarized density matrix `diag(½, ½)`.
    pub fn unpolarized() -> Self {
        Self::diag(0.5, 0.5)
    }

    pub fn entries(&self) -> [[Complex; 2]; 2] {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.m[row][col]
    }

    pub fn scale(&self, k: Complex) -> Self {
        let mut m = self.m;
        m.iter_mut().flatten().for_each(|c| *c *= k);
        Operator2 { m }
    }

    pub fn scale_real(&self, k: f64) -> Self {
        self.scale(Complex::new(k, 0.0))
    }

    pub fn trace(&self) -> Complex {
        self.m[0][0] + self.m[1][1]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Operator2 {
            m: [[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]],
        }
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Operator2) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Operator2, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.adjoint(), tol)
    }

    pub fn is_idempotent(&self, tol: f64) -> bool {
        self.approx_eq(&(*self * *self), tol)
    }
}

impl Add for Operator2 {
    type Output = Operator2;
    fn add(self, rhs: Operator2) -> Operator2 {
        let mut m = self.m;
        for (r, row) in m.iter_mut().enumerate() {
            for (c, v) in row.iter_mut().enumerate() {
                *v += rhs.m[r][c];
            }
        }
        Operator2 { m }
    }
}

impl Sub for Operator2 {
    type Output = Operator2;
    fn sub(self, rhs: Operator2) -> Operator2 {
        self + rhs.scale_real(-1.0)
    }
}

impl Mul for Operator2 {
    type Output = Operator2;
    fn mul(self, rhs: Operator2) -> Operator2 {
        let (a, b) = (&self.m, &rhs.m);
        Operator2 {
            m: [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ],
        }
    }
}

/// `σ·v` for an arbitrary real 3-vector.
pub fn sigma_dot(v: [f64; 3]) -> Operator2 {
    let [x, y, z] = v;
    Operator2::from_entries([
        [Complex::new(z, 0.0), Complex::new(x, -y)],
        [Complex::new(x, y), Complex::new(-z, 0.0)],
    ])
}

/// `σₓaₓ + σᵧaᵧ + σ_z a_z`. Traceless and Hermitian with eigenvalues ±1.
pub fn pauli_dot(a: &Axis) -> Operator2 {
    sigma_dot(a.components())
}

/// `Π(±a) = ½(1 ± σ·a)`.
pub fn projector(a: &Axis, s: SpinSign) -> Operator2 {
    (Operator2::identity() + pauli_dot(a).scale_real(s.value())).scale_real(0.5)
}

/// Both sides of `(σ·a)(σ·b) = (a·b)1 + iσ·(a×b)`.
pub fn product_identity_check(a: &Axis, b: &Axis) -> (Operator2, Operator2) {
    let lhs = pauli_dot(a) * pauli_dot(b);
    let rhs = Operator2::identity().scale_real(a.dot(b)) + sigma_dot(a.cross(b)).scale(I);
    (lhs, rhs)
}

pub fn trace(m: &Operator2) -> Complex {
    m.trace()
}

/// `Tr(ρ𝒪)`.
pub fn expectation(rho: &Operator2, op: &Operator2) -> Complex {
    (*rho * *op).trace()
}
