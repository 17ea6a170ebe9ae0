use crate::pauli::{Axis, SpinSign, IDENTITY_TOL};

use super::{pair_prob, Symmetry};

/// Both sides of `P(a+, b+) ≤ P(a+, c+) + P(c+, b+)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub violated: bool,
}

/// Evaluates the three-axis Bell inequality with singlet pair probabilities.
/// Equality within [`IDENTITY_TOL`] is not a violation.
pub fn bell_inequality_check(a: &Axis, b: &Axis, c: &Axis) -> BellCheck {
    let p = |x: &Axis, y: &Axis| pair_prob(x, SpinSign::Plus, y, SpinSign::Plus, Symmetry::Antisymmetric);
    let lhs = p(a, b);
    let rhs = p(a, c) + p(c, b);
    BellCheck { lhs, rhs, violated: lhs > rhs + IDENTITY_TOL }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixty_degree_spacing_violates() {
        let deg = |d: f64| Axis::in_xz_plane(d.to_radians());
        let r = bell_inequality_check(&deg(0.0), &deg(120.0), &deg(60.0));
        assert!((r.lhs - 0.375).abs() <= IDENTITY_TOL);
        assert!((r.rhs - 0.25).abs() <= IDENTITY_TOL);
        assert!(r.violated);
    }

    #[test]
    fn equality_is_not_a_violation() {
        let deg = |d: f64| Axis::in_xz_plane(d.to_radians());
        let r = bell_inequality_check(&deg(0.0), &deg(180.0), &deg(90.0));
        assert!((r.lhs - r.rhs).abs() <= IDENTITY_TOL);
        assert!(!r.violated);
    }

    #[test]
    fn parallel_axes_never_violate() {
        let a = Axis::in_xz_plane(0.7);
        let r = bell_inequality_check(&a, &a, &Axis::Y);
        assert!(r.lhs.abs() <= IDENTITY_TOL);
        assert!(!r.violated);
    }

    #[test]
    fn orthogonal_axes_hold() {
        let r = bell_inequality_check(&Axis::X, &Axis::Y, &Axis::Z);
        assert!((r.lhs - 0.25).abs() <= IDENTITY_TOL);
        assert!((r.rhs - 0.5).abs() <= IDENTITY_TOL);
        assert!(!r.violated);
    }
}
