use ncomp::bset::{
    fiber_extreme_points, fiber_hausdorff, fiber_lipschitz_constant, same_cell, sample_b_of_a_witnessed,
};
use ncomp::hrnr::{lambda_k_lisze, lambda_k_normal, Refinement, SweepConfig};
use ncomp::normcomp::{construct_rank2_witness, necessary_condition_check, verify_compression};
use ncomp::numkit::{compress, ComplexMatrix};
use ncomp::planegeom::{cross, polygon_hausdorff, Polygon, PolygonKind};
use ncomp::{Spectrum, C64};
use proptest::prelude::*;

/// `n` points on a rotated, shifted ellipse, counterclockwise, with
/// angular gaps of at least `0.3 * 2pi / n`.
fn ellipse_spectrum(n: usize) -> impl Strategy<Value = Spectrum> {
    (
        prop::collection::vec(0.3f64..1.0, n),
        0.6f64..1.4,
        0.6f64..1.4,
        0.0f64..std::f64::consts::TAU,
        -1.0f64..1.0,
        -1.0f64..1.0,
    )
        .prop_map(move |(gaps, rx, ry, rot, cx, cy)| {
            let total: f64 = gaps.iter().sum();
            let mut angle = 0.0f64;
            let values = gaps
                .iter()
                .map(|g| {
                    let p = C64::new(rx * angle.cos(), ry * angle.sin());
                    angle += std::f64::consts::TAU * g / total;
                    p * C64::from_polar(1.0, rot) + C64::new(cx, cy)
                })
                .collect();
            Spectrum::new(values).unwrap()
        })
}

fn spectrum_any() -> impl Strategy<Value = Spectrum> {
    (4usize..=8).prop_flat_map(ellipse_spectrum)
}

/// A point given by normalised positive weights over the eigenvalues.
fn interior_point(z: &Spectrum, w: &[f64]) -> C64 {
    let s: f64 = w.iter().take(z.len()).sum();
    z.values().iter().zip(w).map(|(z, w)| z * (w / s)).sum()
}

fn point_in_lambda2(z: &Spectrum, w: &[f64]) -> Option<C64> {
    let l2 = lambda_k_normal(z, 2).unwrap();
    if l2.is_empty() {
        return None;
    }
    let v = l2.vertices();
    let s: f64 = w.iter().take(v.len()).sum();
    Some(v.iter().zip(w.iter().cycle()).map(|(p, w)| p * (w / s)).sum())
}

fn is_convex_ccw(p: &Polygon) -> bool {
    if p.kind() != PolygonKind::Region {
        return true;
    }
    let v = p.vertices();
    (0..v.len()).all(|i| {
        let (a, b, c) = (v[i], v[(i + 1) % v.len()], v[(i + 2) % v.len()]);
        cross(b - a, c - b) > -1e-12
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_monotonicity(z in spectrum_any()) {
        for k in 1..z.len() {
            let outer = lambda_k_normal(&z, k).unwrap();
            let inner = lambda_k_normal(&z, k + 1).unwrap();
            for v in inner.vertices() {
                prop_assert!(outer.distance(*v) <= 1e-9);
            }
        }
    }

    #[test]
    fn normal_engine_is_convex(z in spectrum_any(), k in 1usize..4) {
        let p = lambda_k_normal(&z, k.min(z.len())).unwrap();
        prop_assert!(is_convex_ccw(&p));
    }

    #[test]
    fn affine_covariance_normal(z in spectrum_any(), k in 1usize..4, ar in -2.0f64..2.0, ai in -2.0f64..2.0,
                                br in -1.0f64..1.0, bi in -1.0f64..1.0) {
        let alpha = C64::new(ar, ai);
        prop_assume!(alpha.norm() > 0.1);
        let beta = C64::new(br, bi);
        let k = k.min(z.len());
        let mapped = Spectrum::new(z.values().iter().map(|v| alpha * v + beta).collect()).unwrap();
        let direct = lambda_k_normal(&mapped, k).unwrap();
        let image = lambda_k_normal(&z, k).unwrap().map(|p| alpha * p + beta);
        prop_assert_eq!(direct.is_empty(), image.is_empty());
        if !direct.is_empty() {
            prop_assert!(polygon_hausdorff(&direct, &image).distance <= 1e-9);
        }
    }

    #[test]
    fn lisze_is_an_outer_approximation(z in spectrum_any(), k in 1usize..3) {
        let cfg = SweepConfig::new(512, Refinement::None).unwrap();
        let outer = lambda_k_lisze(&z.matrix(), k, &cfg).unwrap();
        for v in lambda_k_normal(&z, k).unwrap().vertices() {
            prop_assert!(outer.distance(*v) <= 1e-9);
        }
        prop_assert!(is_convex_ccw(&outer));
    }

    #[test]
    fn lisze_affine_covariance(entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 16),
                               scale in 0.2f64..3.0, br in -1.0f64..1.0, bi in -1.0f64..1.0) {
        let m = ComplexMatrix::new(4, entries.iter().map(|&(r, i)| C64::new(r, i)).collect()).unwrap();
        let beta = C64::new(br, bi);
        let cfg = SweepConfig::new(256, Refinement::None).unwrap();
        let direct = lambda_k_lisze(&m.affine(beta, C64::new(scale, 0.0)), 2, &cfg).unwrap();
        let image = lambda_k_lisze(&m, 2, &cfg).unwrap().map(|p| p * scale + beta);
        prop_assert_eq!(direct.is_empty(), image.is_empty());
        if !direct.is_empty() {
            prop_assert!(polygon_hausdorff(&direct, &image).distance <= 1e-9 * (1.0 + scale));
        }
    }

    #[test]
    fn fiber_extremes_are_valid(z in spectrum_any(), w in prop::collection::vec(0.01f64..1.0, 8)) {
        let a = interior_point(&z, &w);
        prop_assume!(z.is_generic(1e-6));
        let fiber = fiber_extreme_points(&z, a).unwrap();
        prop_assert!(!fiber.is_empty());
        for e in fiber.extremes() {
            let t = e.point.weights();
            prop_assert!((e.point.image(z.values()) - a).norm() <= 1e-10);
            prop_assert!((t.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            prop_assert!(t.iter().all(|&x| x >= 0.0));
            prop_assert!(e.point.support().len() <= 3);
        }
    }

    #[test]
    fn sampled_witnesses_verify(z in spectrum_any(), w in prop::collection::vec(0.01f64..1.0, 8), seed in 0u64..1000) {
        let a = interior_point(&z, &w);
        prop_assume!(z.is_generic(1e-6));
        let m = z.matrix();
        for s in sample_b_of_a_witnessed(&z, a, 16, seed).unwrap() {
            let f = s.frame().unwrap();
            let c = compress(&m, &f).unwrap();
            prop_assert!((c[(0, 0)] - a).norm() <= 1e-10);
            prop_assert!(c[(0, 1)].norm() <= 1e-10 && c[(1, 0)].norm() <= 1e-10);
            prop_assert!((c[(1, 1)] - s.b).norm() <= 1e-10);
            let mut swapped = f.clone();
            swapped.swap_columns(0, 1);
            prop_assert!(verify_compression(&m, &swapped, &ComplexMatrix::from_diag(&[s.b, a]), 1e-10).is_ok());
            prop_assert!(necessary_condition_check(&[a, s.b], &z).unwrap().holds);
            prop_assert!(s.b.norm() <= z.max_modulus() + 1e-12);
        }
    }

    #[test]
    fn rank2_witness_and_swap(z in (4usize..=7).prop_flat_map(ellipse_spectrum),
                              wa in prop::collection::vec(0.01f64..1.0, 8),
                              wb in prop::collection::vec(0.01f64..1.0, 8)) {
        let (Some(a), Some(b)) = (point_in_lambda2(&z, &wa), point_in_lambda2(&z, &wb)) else {
            return Ok(());
        };
        let wit = construct_rank2_witness(&z, a, b).unwrap();
        prop_assert!(wit.residual <= 1e-9);
        let m = z.matrix();
        let sw = wit.swapped();
        prop_assert!(verify_compression(&m, &sw.frame, &ComplexMatrix::from_diag(&[b, a]), 1e-9).is_ok());
        prop_assert!(necessary_condition_check(&[a, b], &z).unwrap().holds);
    }

    #[test]
    fn fiber_lipschitz(z in (4usize..=6).prop_flat_map(ellipse_spectrum),
                       w in prop::collection::vec(0.01f64..1.0, 8),
                       dr in -1e-3f64..1e-3, di in -1e-3f64..1e-3) {
        prop_assume!(z.is_generic(1e-6));
        let a = interior_point(&z, &w);
        let b = a + C64::new(dr, di);
        prop_assume!(same_cell(&z, a, b) && z.hull().distance(b) == 0.0);
        let k = fiber_lipschitz_constant(&z).unwrap();
        let fa = fiber_extreme_points(&z, a).unwrap();
        let fb = fiber_extreme_points(&z, b).unwrap();
        prop_assert!(fiber_hausdorff(&fa, &fb) <= k.k * (a - b).norm() + 1e-9);
    }
}
