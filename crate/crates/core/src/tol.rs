//! Centralised numerical tolerances.
//!
//! Every engine reads its thresholds from [`Tolerances::DEFAULT`]; the CLI
//! echoes the active record into each output header.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// `||F*F - I||_F` bound for frames.
    pub orthonormality: f64,
    /// `||H - H*||_F` bound for Hermitian input.
    pub hermitian: f64,
    /// Planar membership / distance tolerance.
    pub geometry: f64,
    /// Cross-product threshold for collinearity in hulls.
    pub collinear: f64,
    /// A simplex weight above this counts as a positive component.
    pub support: f64,
    /// Absolute tolerance on eigenvalue comparisons.
    pub eigen_compare: f64,
    /// Jacobi stops once the off-diagonal Frobenius norm is below this
    /// (scaled by `max(1, ||H||_F)`).
    pub jacobi_offdiag: f64,
    /// Gram-Schmidt drops residuals shorter than this.
    pub drop: f64,
    /// Fiber points closer than this are merged.
    pub fiber_dedup: f64,
    /// `a` within this distance of a segment `[z_i, z_j]` is on the grid.
    pub grid: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        orthonormality: 1e-10,
        hermitian: 1e-10,
        geometry: 1e-9,
        collinear: 1e-12,
        support: 1e-12,
        eigen_compare: 1e-12,
        jacobi_offdiag: 1e-13,
        drop: 1e-12,
        fiber_dedup: 1e-10,
        grid: 1e-9,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
