//! Shared helpers: independent numeric oracles and deterministic samplers.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64 as C;
use proptest::prelude::*;
use signed_bell::rng::{unit_f64, CounterRng};
use signed_bell::{Axis, AxisQuadruple, SignQuadruple, SpinSign, Symmetry};

pub type M2 = [[C; 2]; 2];

/// `½(1 + s·σ·v)` built entry by entry.
pub fn oracle_projector(v: [f64; 3], s: f64) -> M2 {
    let h = 0.5;
    [
        [C::new(h * (1.0 + s * v[2]), 0.0), C::new(h * s * v[0], -h * s * v[1])],
        [C::new(h * s * v[0], h * s * v[1]), C::new(h * (1.0 - s * v[2]), 0.0)],
    ]
}

pub fn oracle_mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[C::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

/// `½Tr` of the ordered product of projectors.
pub fn oracle_half_trace(factors: &[([f64; 3], f64)]) -> C {
    let id = [[C::new(1.0, 0.0), C::new(0.0, 0.0)], [C::new(0.0, 0.0), C::new(1.0, 0.0)]];
    let p = factors
        .iter()
        .fold(id, |acc, (v, s)| oracle_mul(&acc, &oracle_projector(*v, *s)));
    (p[0][0] + p[1][1]) * 0.5
}

pub fn dot(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn cross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

/// Signs with the b-side flipped for the antisymmetric case.
pub fn effective_signs(s: SignQuadruple, sym: Symmetry) -> [f64; 4] {
    let f = if sym == Symmetry::Antisymmetric { -1.0 } else { 1.0 };
    let [l, m, n, t] = s.as_array().map(SpinSign::value);
    [l, m, f * n, f * t]
}

/// Uniform on the sphere from two uniforms.
pub fn sphere_point(u: f64, v: f64) -> Axis {
    let z = 2.0 * u - 1.0;
    let r = (1.0 - z * z).max(0.0).sqrt();
    let phi = 2.0 * PI * v;
    Axis::new(r * phi.cos(), r * phi.sin(), z).expect("unit by construction")
}

/// `count` quadruples drawn deterministically from `seed`.
pub fn random_quadruples(seed: u64, count: u64) -> Vec<AxisQuadruple> {
    let rng = CounterRng::new(seed);
    let mut words = rng.records(0, count * 4).map(|[x, y]| sphere_point(unit_f64(x), unit_f64(y)));
    (0..count)
        .map(|_| {
            let mut next = || words.next().unwrap();
            AxisQuadruple::new(next(), next(), next(), next())
        })
        .collect()
}

pub fn arb_axis() -> impl Strategy<Value = Axis> {
    (0.0f64..1.0, 0.0f64..1.0).prop_map(|(u, v)| sphere_point(u, v))
}

pub fn arb_quadruple() -> impl Strategy<Value = AxisQuadruple> {
    (arb_axis(), arb_axis(), arb_axis(), arb_axis()).prop_map(|(a, b, c, d)| AxisQuadruple::new(a, b, c, d))
}

pub fn arb_sign() -> impl Strategy<Value = SpinSign> {
    prop_oneof![Just(SpinSign::Plus), Just(SpinSign::Minus)]
}

pub fn arb_signs() -> impl Strategy<Value = SignQuadruple> {
    (0usize..16).prop_map(SignQuadruple::from_index)
}

pub fn arb_symmetry() -> impl Strategy<Value = Symmetry> {
    prop_oneof![Just(Symmetry::Symmetric), Just(Symmetry::Antisymmetric)]
}

/// Weights on the probability simplex.
pub fn arb_simplex(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..1.0, n).prop_filter_map("positive total", |raw| {
        let total: f64 = raw.iter().sum();
        (total > 1e-6).then(|| raw.iter().map(|w| w / total).collect())
    })
}
