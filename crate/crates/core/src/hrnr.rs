//! Rank-k numerical range `Lambda_k(M)`.
//!
//! Three engines:
//!
//! - [`lambda_k_lisze`]: intersection of the half-planes
//!   `{w : Re(e^{-i theta} w) <= lambda_{N-k+1}(Re(e^{-i theta} M))}` over a
//!   theta grid (ascending eigenvalue order), for arbitrary `M`. This is an
//!   outer approximation.
//! - [`lambda_k_normal`]: for normal `M`, the exact intersection of
//!   `conv{z_j : j in J}` over all `|J| = N - k + 1`.
//! - [`lambda_k_hermitian`]: the interval `[a_k, a_{N-k+1}]`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::numkit::{hermitian_eigenvalues, ComplexMatrix};
use crate::planegeom::{convex_hull, intersect_halfplanes, intersect_polygons, HalfPlane, Polygon};
use crate::{Error, Result, Spectrum, Tolerances, C64};

/// Largest `N` accepted by the subset-enumeration engines.
pub const SUBSET_LIMIT: usize = 20;

const MIN_THETA: usize = 16;
const REFINE_TOL: f64 = 1e-6;
const REFINE_DEPTH: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Refinement {
    None,
    /// Bisect angular intervals whose neighbouring half-planes leave a
    /// corner that the midpoint half-plane cuts by more than `1e-6`.
    Adaptive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    n_theta: usize,
    refinement: Refinement,
}

impl SweepConfig {
    pub fn new(n_theta: usize, refinement: Refinement) -> Result<Self> {
        if n_theta < MIN_THETA {
            return Err(Error::InvalidInput(format!(
                "n_theta = {n_theta} is below {MIN_THETA}"
            )));
        }
        Ok(Self { n_theta, refinement })
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn refinement(&self) -> Refinement {
        self.refinement
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_theta: 4096,
            refinement: Refinement::None,
        }
    }
}

/// The supporting half-plane `H(M, theta)` for rank `k`.
pub fn lisze_halfplane(m: &ComplexMatrix, k: usize, theta: f64) -> Result<HalfPlane> {
    let n = m.n();
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    let eigs = hermitian_eigenvalues(&m.rotated_real_part(-theta))?;
    Ok(HalfPlane::new(theta, eigs[n - k]))
}

fn corner(a: &HalfPlane, b: &HalfPlane) -> Option<C64> {
    let (s1, c1) = a.theta().sin_cos();
    let (s2, c2) = b.theta().sin_cos();
    let det = c1 * s2 - s1 * c2;
    if det.abs() < 1e-14 {
        return None;
    }
    let x = (a.offset() * s2 - b.offset() * s1) / det;
    let y = (c1 * b.offset() - c2 * a.offset()) / det;
    Some(C64::new(x, y))
}

/// Li-Sze sweep for arbitrary `M` and `1 <= k <= N`.
pub fn lambda_k_lisze(m: &ComplexMatrix, k: usize, cfg: &SweepConfig) -> Result<Polygon> {
    let n = m.n();
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    let step = std::f64::consts::TAU / cfg.n_theta as f64;
    let mut planes: Vec<(f64, HalfPlane)> = (0..cfg.n_theta)
        .into_par_iter()
        .map(|j| {
            let theta = j as f64 * step;
            lisze_halfplane(m, k, theta).map(|h| (theta, h))
        })
        .collect::<Result<_>>()?;

    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);
    if cfg.refinement == Refinement::Adaptive {
        let cut = REFINE_TOL * scale.max(1.0);
        let mut gap = step;
        for _ in 0..REFINE_DEPTH {
            let len = planes.len();
            let candidates: Vec<(usize, C64)> = (0..len)
                .filter_map(|i| {
                    let (t0, h0) = &planes[i];
                    let (t1, h1) = &planes[(i + 1) % len];
                    let width = (t1 - t0).rem_euclid(std::f64::consts::TAU);
                    if (width - gap).abs() > 1e-3 * gap {
                        return None;
                    }
                    corner(h0, h1).map(|p| (i, p))
                })
                .collect();
            let fresh: Vec<(f64, HalfPlane, C64)> = candidates
                .par_iter()
                .map(|&(i, p)| {
                    let theta = planes[i].0 + gap / 2.0;
                    lisze_halfplane(m, k, theta).map(|h| (theta, h, p))
                })
                .collect::<Result<_>>()?;
            let keep: Vec<(f64, HalfPlane)> = fresh
                .into_iter()
                .filter(|(_, h, p)| h.excess(*p) > cut)
                .map(|(t, h, _)| (t, h))
                .collect();
            if keep.is_empty() {
                break;
            }
            planes.extend(keep);
            planes.sort_by(|a, b| a.0.total_cmp(&b.0));
            gap /= 2.0;
        }
    }
    let hp: Vec<HalfPlane> = planes.into_iter().map(|(_, h)| h).collect();
    Ok(intersect_halfplanes(&hp, Some(4.0 * scale.max(1e-300))))
}

fn check_subsets(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    if n > SUBSET_LIMIT {
        return Err(Error::BudgetExceeded {
            n,
            limit: SUBSET_LIMIT,
        });
    }
    Ok(())
}

/// Calls `f` on each `size`-subset of `0..n` in lexicographic order until it
/// returns `false`.
pub fn for_each_subset(n: usize, size: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - size + i {
                idx[i] += 1;
                for j in (i + 1)..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return;
            }
        }
    }
}

/// Exact `Lambda_k` of a normal matrix from its eigenvalues, `N <= 20`.
pub fn lambda_k_normal(z: &Spectrum, k: usize) -> Result<Polygon> {
    let n = z.len();
    check_subsets(n, k)?;
    let vals = z.values();
    let mut acc = convex_hull(vals);
    for_each_subset(n, n - k + 1, |idx| {
        let pts: Vec<C64> = idx.iter().map(|&j| vals[j]).collect();
        acc = intersect_polygons(&acc, &convex_hull(&pts));
        !acc.is_empty()
    });
    Ok(acc)
}

/// `[a_k, a_{N-k+1}]` for ascending `a`, or `None` when empty.
pub fn lambda_k_hermitian(a: &[f64], k: usize) -> Result<Option<(f64, f64)>> {
    let n = a.len();
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    if a.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::NotSorted);
    }
    let (lo, hi) = (a[k - 1], a[n - k]);
    if hi < lo - Tolerances::DEFAULT.eigen_compare {
        Ok(None)
    } else {
        Ok(Some((lo, hi.max(lo))))
    }
}
