use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::pauli::{Axis, SpinSign, IDENTITY_TOL};

use super::{coplanar_axes, four_prob_symmetrized, pair_prob, AxisQuadruple, FourProbTable, SignQuadruple, Symmetry};

/// `3 cos θ − cos 3θ`, the CHSH value on the coplanar family.
pub fn chsh_closed_form(theta: f64) -> f64 {
    3.0 * theta.cos() - (3.0 * theta).cos()
}

/// Same-sign minus opposite-sign weight for the pair `(a, b)`, built as the
/// symmetric same-sign probability minus the antisymmetric one:
/// `½(1 + a·b) − ½(1 − a·b) = a·b`.
pub fn correlation(a: &Axis, b: &Axis) -> f64 {
    let same = |sym| {
        SpinSign::BOTH
            .iter()
            .map(|&s| pair_prob(a, s, b, s, sym))
            .sum::<f64>()
    };
    same(Symmetry::Symmetric) - same(Symmetry::Antisymmetric)
}

/// `a₁·b₁ + a₁·b₂ + a₂·b₁ − a₂·b₂`, each term from [`correlation`].
pub fn chsh_dot_form(q: &AxisQuadruple) -> f64 {
    correlation(&q.a1, &q.b1) + correlation(&q.a1, &q.b2) + correlation(&q.a2, &q.b1)
        - correlation(&q.a2, &q.b2)
}

/// The sixteen master-distribution terms with their coefficients, in the
/// order they are usually written out.
pub const MASTER_TERMS: [(&str, i32); 16] = [
    ("++++", 2),
    ("----", 2),
    ("+++-", 2),
    ("---+", 2),
    ("+-++", 2),
    ("-+--", 2),
    ("+--+", 2),
    ("-++-", 2),
    ("++-+", -2),
    ("--+-", -2),
    ("-+++", -2),
    ("+---", -2),
    ("++--", -2),
    ("--++", -2),
    ("+-+-", -2),
    ("-+-+", -2),
];

/// Coefficient of `P(s)` in the master-distribution CHSH sum.
pub fn master_coefficient(s: SignQuadruple) -> i32 {
    let key = s.to_string();
    MASTER_TERMS
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, c)| *c)
        .expect("every sign quadruple appears in the master sum")
}

/// `Σ_s coeff(s)·P(s)` over a single table.
pub fn signed_chsh_sum(t: &FourProbTable) -> f64 {
    t.iter().map(|(s, p)| f64::from(master_coefficient(s)) * p).sum()
}

/// CHSH value from a pair of master tables: half the difference of the
/// signed sums over the symmetric and antisymmetric tables.
pub fn chsh_master_form(symmetric: &FourProbTable, antisymmetric: &FourProbTable) -> Result<f64> {
    if symmetric.symmetry() != Symmetry::Symmetric || antisymmetric.symmetry() != Symmetry::Antisymmetric {
        return Err(Error::TableMismatch(format!(
            "expected (symmetric, antisymmetric), got ({}, {})",
            symmetric.symmetry(),
            antisymmetric.symmetry()
        )));
    }
    if let (Some(p), Some(q)) = (symmetric.axes(), antisymmetric.axes()) {
        if !p.approx_eq(q, IDENTITY_TOL) {
            return Err(Error::TableMismatch("tables were evaluated on different axes".into()));
        }
    }
    Ok(0.5 * (signed_chsh_sum(symmetric) - signed_chsh_sum(antisymmetric)))
}

/// Location and value of the maximum of [`chsh_closed_form`] on `[0, π]`:
/// a 1801-point grid, then bisection on the derivative
/// `3(sin 3θ − sin θ)` inside the bracketing cells.
pub fn chsh_maximum() -> (f64, f64) {
    let n = 1801;
    let step = PI / (n - 1) as f64;
    let best = (0..n)
        .max_by(|&i, &j| chsh_closed_form(i as f64 * step).total_cmp(&chsh_closed_form(j as f64 * step)))
        .unwrap();
    if best == 0 || best == n - 1 {
        let theta = best as f64 * step;
        return (theta, chsh_closed_form(theta));
    }
    let slope = |t: f64| 3.0 * ((3.0 * t).sin() - t.sin());
    let (mut lo, mut hi) = ((best - 1) as f64 * step, (best + 1) as f64 * step);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if slope(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let theta = 0.5 * (lo + hi);
    (theta, chsh_closed_form(theta))
}

/// Maximal θ intervals (radians) on the coplanar family where the
/// symmetrized `P(s)` is negative. Boundaries are located on a grid of
/// `steps` points and refined by bisection.
pub fn negative_intervals(
    s: SignQuadruple,
    symmetry: Symmetry,
    theta_min: f64,
    theta_max: f64,
    steps: usize,
) -> Result<Vec<(f64, f64)>> {
    if steps < 2 || !theta_min.is_finite() || !theta_max.is_finite() || theta_max <= theta_min {
        return Err(Error::Invalid("degenerate theta range".into()));
    }
    let f = |theta: f64| four_prob_symmetrized(&coplanar_axes(theta), s, symmetry);
    let h = (theta_max - theta_min) / (steps - 1) as f64;
    let grid: Vec<f64> = (0..steps).map(|i| theta_min + i as f64 * h).collect();

    let crossing = |a: f64, b: f64| {
        let (mut lo, mut hi) = (a, b);
        let lo_neg = f(lo) < 0.0;
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if (f(mid) < 0.0) == lo_neg {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    let mut out = Vec::new();
    let mut start: Option<f64> = None;
    for (k, &theta) in grid.iter().enumerate() {
        let neg = f(theta) < 0.0;
        match (neg, start) {
            (true, None) => start = Some(if k == 0 { theta } else { crossing(grid[k - 1], theta) }),
            (false, Some(s0)) => {
                out.push((s0, crossing(grid[k - 1], theta)));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s0) = start {
        out.push((s0, theta_max));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::table2;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    #[test]
    fn closed_form_examples() {
        assert!((chsh_closed_form(FRAC_PI_4) - 2.0 * SQRT_2).abs() <= IDENTITY_TOL);
        assert!((chsh_closed_form(0.0) - 2.0).abs() <= IDENTITY_TOL);
        assert!(chsh_closed_form(FRAC_PI_2).abs() <= IDENTITY_TOL);
    }

    #[test]
    fn dot_form_examples() {
        assert!((chsh_dot_form(&coplanar_axes(FRAC_PI_4)) - 2.0 * SQRT_2).abs() <= IDENTITY_TOL);
        assert!((chsh_dot_form(&AxisQuadruple::uniform(Axis::X)) - 2.0).abs() <= IDENTITY_TOL);
    }

    #[test]
    fn master_form_examples() {
        let q = coplanar_axes(FRAC_PI_4);
        let v = chsh_master_form(&table2(&q, Symmetry::Symmetric), &table2(&q, Symmetry::Antisymmetric)).unwrap();
        assert!((v - 2.0 * SQRT_2).abs() <= IDENTITY_TOL);

        let u = FourProbTable::uniform(Symmetry::Symmetric);
        assert!(chsh_master_form(&u, &u.flip_b()).unwrap().abs() <= IDENTITY_TOL);

        // all weight on the positively-signed terms
        let mut e = [0.0; 16];
        for (k, c) in MASTER_TERMS {
            if c > 0 {
                e[k.parse::<SignQuadruple>().unwrap().index()] = 1.0 / 8.0;
            }
        }
        let t = FourProbTable::new(e, Symmetry::Symmetric).unwrap();
        assert!((signed_chsh_sum(&t) - 2.0).abs() <= IDENTITY_TOL);
        assert!((chsh_master_form(&t, &t.flip_b()).unwrap() - 2.0).abs() <= IDENTITY_TOL);
    }

    #[test]
    fn master_form_rejects_mismatched_tables() {
        let s = table2(&coplanar_axes(0.3), Symmetry::Symmetric);
        let a = table2(&coplanar_axes(0.4), Symmetry::Antisymmetric);
        assert!(matches!(chsh_master_form(&s, &a), Err(Error::TableMismatch(_))));
        assert!(matches!(chsh_master_form(&s, &s), Err(Error::TableMismatch(_))));
    }

    #[test]
    fn maximum_at_quarter_pi() {
        let (theta, value) = chsh_maximum();
        assert!((theta - FRAC_PI_4).abs() <= 1e-9);
        assert!((value - 2.0 * SQRT_2).abs() <= 1e-9);
    }

    #[test]
    fn negative_interval_contains_45_degrees() {
        let s: SignQuadruple = "+-+-".parse().unwrap();
        let iv = negative_intervals(s, Symmetry::Symmetric, 0.0, PI, 181).unwrap();
        assert!(iv.iter().any(|&(lo, hi)| lo < FRAC_PI_4 && FRAC_PI_4 < hi));
        for (lo, hi) in iv {
            let q = four_prob_symmetrized(&coplanar_axes(0.5 * (lo + hi)), s, Symmetry::Symmetric);
            assert!(q < 0.0);
        }
        assert!(negative_intervals(s, Symmetry::Symmetric, 1.0, 1.0, 10).is_err());
    }
}
