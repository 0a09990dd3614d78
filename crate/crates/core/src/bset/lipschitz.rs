//! Lipschitz behaviour of the fiber map `a -> C(a)`.
//!
//! Inside one grid cell every extreme point `t(i, j, l)(a)` is the affine
//! function `T^{-1} (1, Re a, Im a)`, so `d_H(C(a), C(a')) <= K |a - a'|` with
//! `K = max ||T^{-1}||_2` over all triples.

use serde::{Deserialize, Serialize};

use super::fiber::{check_generic, FiberPolytope};
use crate::numkit::{hermitian_eigenvalues, ComplexMatrix};
use crate::planegeom::{segment_intersection, SegmentIntersection};
use crate::{Result, Spectrum, C64};

/// Constants above this are reported as ill-conditioned.
pub const ILL_CONDITIONED: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LipschitzConstant {
    pub k: f64,
    pub worst_triple: [usize; 3],
    pub ill_conditioned: bool,
}

/// `||T^{-1}||_2 = 1 / sigma_min(T)` for `T = [1 1 1; Re z; Im z]`.
pub fn triple_inverse_norm(z: &[C64], [i, j, l]: [usize; 3]) -> Result<f64> {
    let cols = [z[i], z[j], z[l]];
    let rows = [
        [1.0, 1.0, 1.0],
        cols.map(|c| c.re),
        cols.map(|c| c.im),
    ];
    // T^T T
    let mut g = ComplexMatrix::zeros(3);
    for a in 0..3 {
        for b in 0..3 {
            let s: f64 = (0..3).map(|r| rows[r][a] * rows[r][b]).sum();
            g[(a, b)] = C64::new(s, 0.0);
        }
    }
    let smallest = hermitian_eigenvalues(&g)?[0].max(0.0);
    Ok(1.0 / smallest.sqrt())
}

/// Maximum of `||T^{-1}||_2` over all triples of a generic spectrum.
pub fn fiber_lipschitz_constant(z: &Spectrum) -> Result<LipschitzConstant> {
    check_generic(z)?;
    let v = z.values();
    let n = v.len();
    let mut best = LipschitzConstant {
        k: 0.0,
        worst_triple: [0, 1, 2],
        ill_conditioned: false,
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for l in (j + 1)..n {
                let k = triple_inverse_norm(v, [i, j, l])?;
                if k > best.k {
                    best.k = k;
                    best.worst_triple = [i, j, l];
                }
            }
        }
    }
    best.ill_conditioned = best.k > ILL_CONDITIONED;
    Ok(best)
}

/// Hausdorff distance in `R^N` between the extreme-point sets of two fibers.
pub fn fiber_hausdorff(a: &FiberPolytope, b: &FiberPolytope) -> f64 {
    let dist = |x: &[f64], y: &[f64]| -> f64 {
        x.iter().zip(y).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt()
    };
    let directed = |p: &FiberPolytope, q: &FiberPolytope| -> f64 {
        p.extremes()
            .iter()
            .map(|e| {
                q.extremes()
                    .iter()
                    .map(|f| dist(e.point.weights(), f.point.weights()))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// True when the segment `[a, b]` meets no grid segment `[z_i, z_j]`.
pub fn same_cell(z: &Spectrum, a: C64, b: C64) -> bool {
    let v = z.values();
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            if !matches!(
                segment_intersection(a, b, v[i], v[j]),
                SegmentIntersection::Disjoint | SegmentIntersection::Parallel
            ) {
                return false;
            }
        }
    }
    true
}
