#![allow(dead_code)]

use bregman_kaczmarz::dgf::Dgf;
use proptest::prelude::*;

/// DGFs of every kind, including products and scaled variants.
pub fn any_dgf() -> impl Strategy<Value = Dgf> {
    prop_oneof![
        (1usize..7).prop_map(Dgf::euclidean),
        (0.0..3.0f64, 1usize..7).prop_map(|(l, d)| Dgf::l1_half_square(l, d).unwrap()),
        (2usize..7).prop_map(|d| Dgf::simplex_entropy(d).unwrap()),
        (2usize..4, 1usize..4).prop_map(|(r, m)| Dgf::entropy_columns(r, m).unwrap()),
        (2usize..4, 0.0..2.0f64, 1usize..4).prop_map(|(a, l, b)| {
            Dgf::product(vec![
                Dgf::simplex_entropy(a).unwrap(),
                Dgf::l1_half_square(l, b).unwrap(),
            ])
            .unwrap()
        }),
        (0.25..4.0f64, 2usize..6).prop_map(|(c, d)| Dgf::simplex_entropy(d).unwrap().scaled(c).unwrap()),
        (0.25..4.0f64, 0.0..2.0f64, 1usize..6)
            .prop_map(|(c, l, d)| Dgf::l1_half_square(l, d).unwrap().scaled(c).unwrap()),
    ]
}

/// A DGF together with `k` dual points of matching dimension.
pub fn dgf_with_points(k: usize) -> impl Strategy<Value = (Dgf, Vec<Vec<f64>>)> {
    any_dgf().prop_flat_map(move |g| {
        let d = g.dim();
        (
            Just(g),
            prop::collection::vec(prop::collection::vec(-4.0..4.0f64, d), k),
        )
    })
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_inf(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m: f64, x| m.max(x.abs()))
}

/// Central finite-difference gradient.
pub fn fd_gradient(f: impl Fn(&[f64]) -> f64, x: &[f64], h: f64) -> Vec<f64> {
    let mut y = x.to_vec();
    (0..x.len())
        .map(|i| {
            y[i] = x[i] + h;
            let up = f(&y);
            y[i] = x[i] - h;
            let down = f(&y);
            y[i] = x[i];
            (up - down) / (2.0 * h)
        })
        .collect()
}

/// `‖a − b‖∞ / max(1, ‖b‖∞)`.
pub fn rel_err(a: &[f64], b: &[f64]) -> f64 {
    let diff = a.iter().zip(b).fold(0.0, |m: f64, (x, y)| m.max((x - y).abs()));
    diff / norm_inf(b).max(1.0)
}
