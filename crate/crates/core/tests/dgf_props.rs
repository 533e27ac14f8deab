mod common;

use bregman_kaczmarz::dgf::{softmax_into, Dgf, PrimalDualPair};
use common::{dgf_with_points, dot, fd_gradient, norm_inf, rel_err};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fenchel_equality_at_conjugate_gradient((dgf, pts) in dgf_with_points(1)) {
        let p = &pts[0];
        let x = dgf.conjugate_gradient(p).unwrap();
        let gap = dgf.value(&x).unwrap() + dgf.conjugate(p).unwrap() - dot(&x, p);
        prop_assert!(gap.abs() <= 1e-9, "gap {gap}");
    }

    #[test]
    fn bregman_distance_is_nonnegative_and_strongly_convex((dgf, pts) in dgf_with_points(2)) {
        let pair = PrimalDualPair::from_dual(&dgf, pts[0].clone()).unwrap();
        let y = dgf.conjugate_gradient(&pts[1]).unwrap();
        let d = dgf.bregman_distance(&pair, &y).unwrap();
        prop_assert!(d >= -1e-12, "D = {d}");
        let diff: Vec<f64> = pair.x.iter().zip(&y).map(|(a, b)| a - b).collect();
        if norm_inf(&diff) > 1e-6 {
            prop_assert!(d > 0.0, "D = {d} with |x - y| = {}", norm_inf(&diff));
        }
        let n = dgf.primal_norm(&diff).unwrap();
        prop_assert!(d >= 0.5 * dgf.sigma() * n * n - 1e-9, "D = {d}, norm {n}");
    }

    #[test]
    fn conjugate_gradient_matches_finite_differences((dgf, pts) in dgf_with_points(1)) {
        let p = &pts[0];
        let fd = fd_gradient(|q| dgf.conjugate(q).unwrap(), p, 1e-6);
        let g = dgf.conjugate_gradient(p).unwrap();
        prop_assert!(rel_err(&fd, &g) <= 1e-5, "fd {fd:?} vs {g:?}");
    }

    #[test]
    fn softmax_is_strictly_inside_the_simplex(p in prop::collection::vec(-50.0..50.0f64, 1..12)) {
        let mut out = vec![0.0; p.len()];
        softmax_into(&p, &mut out);
        prop_assert!(out.iter().all(|&v| v > 0.0));
        prop_assert!((out.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn pair_from_primal_round_trips((dgf, pts) in dgf_with_points(1)) {
        let x = dgf.conjugate_gradient(&pts[0]).unwrap();
        // ℓ1 kinks at zero entries have no unique dual point.
        let Some(pair) = PrimalDualPair::from_primal(&dgf, &x) else {
            prop_assert!(x.contains(&0.0));
            return Ok(());
        };
        prop_assert!(rel_err(&pair.x, &x) <= 1e-9);
        prop_assert!(pair.reconstruction_error(&dgf) <= 1e-12);
    }

    #[test]
    fn scaling_rescales_the_dual_point(
        (dgf, pts) in dgf_with_points(1),
        c in 0.25..4.0f64,
    ) {
        let scaled = dgf.clone().scaled(c).unwrap();
        let p: Vec<f64> = pts[0].iter().map(|v| c * v).collect();
        let x = dgf.conjugate_gradient(&pts[0]).unwrap();
        let xs = scaled.conjugate_gradient(&p).unwrap();
        prop_assert!(rel_err(&xs, &x) <= 1e-12);
        prop_assert!((scaled.sigma() - c * dgf.sigma()).abs() <= 1e-12 * c);
    }
}

#[test]
fn entropy_bregman_distance_allows_boundary_targets() {
    let dgf = Dgf::simplex_entropy(3).unwrap();
    let pair = PrimalDualPair::from_primal(&dgf, &[0.2, 0.3, 0.5]).unwrap();
    let d = dgf.bregman_distance(&pair, &[1.0, 0.0, 0.0]).unwrap();
    assert!((d - (1.0 / 0.2_f64).ln()).abs() < 1e-12);
}
