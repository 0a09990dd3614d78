//! Monte Carlo sampling of `B(a)`.
//!
//! Each sample draws `t` in `C(a)` as a flat-Dirichlet mixture of the fiber
//! extreme points, sets `u = sqrt(t)`, and draws `w` uniformly from the unit
//! sphere of `C^N ⊖ span{u, u∘Re z, u∘Im z}` by projecting a standard
//! complex Gaussian. Then `(u, w)` is an orthonormal pair with
//! `(Mu, u) = a`, `(Mu, w) = 0` and `b = (Mw, w) = sum_j |w_j|^2 z_j`.
//!
//! Sample `i` uses its own ChaCha stream `i` under the given seed, so
//! results do not depend on thread scheduling, and two calls with the same
//! seed share their random numbers (common random numbers).

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fiber::{fiber_extreme_points, FiberPolytope, SimplexPoint};
use crate::numkit::{norm, orthonormal_span_basis, project_out, Frame};
use crate::rng::{complex_gaussian, dirichlet_flat, seeded, SeededRng};
use crate::{Error, Result, Spectrum, C64};

/// One sampled `b` with its witness data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BSample {
    pub b: C64,
    pub t: Vec<f64>,
    pub w: Vec<C64>,
}

impl BSample {
    /// `u = sqrt(t)`.
    pub fn u(&self) -> Vec<C64> {
        self.t.iter().map(|t| C64::new(t.sqrt(), 0.0)).collect()
    }

    /// The frame `(u, w)`, whose compression of `diag(z)` is `diag(a, b)`.
    pub fn frame(&self) -> Result<Frame> {
        Frame::new(self.t.len(), vec![self.u(), self.w.clone()])
    }
}

fn stream(seed: u64, i: usize) -> SeededRng {
    let mut rng = seeded(seed);
    rng.set_stream(i as u64);
    rng
}

/// A Dirichlet-weighted point of the fiber.
pub fn draw_fiber_point<R: Rng + ?Sized>(fiber: &FiberPolytope, rng: &mut R) -> SimplexPoint {
    let lambda = dirichlet_flat(rng, fiber.len());
    fiber.combine(&lambda)
}

/// The three sampler constraints `u, u∘Re z, u∘Im z`.
pub fn constraint_vectors(z: &[C64], u: &[C64]) -> Vec<Vec<C64>> {
    vec![
        u.to_vec(),
        u.iter().zip(z).map(|(u, z)| u * z.re).collect(),
        u.iter().zip(z).map(|(u, z)| u * z.im).collect(),
    ]
}

/// Uniform unit vector orthogonal to `constraints`.
pub fn draw_orthogonal_unit<R: Rng + ?Sized>(
    n: usize,
    constraints: &[Vec<C64>],
    rng: &mut R,
) -> Result<Vec<C64>> {
    let basis = orthonormal_span_basis(n, constraints)?;
    if basis.len() >= n {
        return Err(Error::EmptyComplement);
    }
    loop {
        let mut g: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        project_out(&mut g, &basis);
        let ng = norm(&g);
        if ng > 1e-8 {
            g.iter_mut().for_each(|x| *x /= ng);
            return Ok(g);
        }
    }
}

fn sample_with_t<R: Rng + ?Sized>(z: &[C64], t: SimplexPoint, rng: &mut R) -> Result<BSample> {
    let u = t.sqrt_vector();
    let w = draw_orthogonal_unit(z.len(), &constraint_vectors(z, &u), rng)?;
    let b = w.iter().zip(z).map(|(w, z)| z * w.norm_sqr()).sum();
    Ok(BSample {
        b,
        t: t.weights().to_vec(),
        w,
    })
}

fn check_size(z: &Spectrum) -> Result<()> {
    if z.len() < 4 {
        return Err(Error::BadConfiguration(format!(
            "sampling B(a) needs N >= 4, got {}",
            z.len()
        )));
    }
    Ok(())
}

/// `n` samples of `B(a)` with witnesses.
pub fn sample_b_of_a_witnessed(z: &Spectrum, a: C64, n: usize, seed: u64) -> Result<Vec<BSample>> {
    check_size(z)?;
    let fiber = fiber_extreme_points(z, a)?;
    sample_from_fiber(z, &fiber, n, seed)
}

/// Samples with a precomputed fiber.
pub fn sample_from_fiber(z: &Spectrum, fiber: &FiberPolytope, n: usize, seed: u64) -> Result<Vec<BSample>> {
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = stream(seed, i);
            let t = draw_fiber_point(fiber, &mut rng);
            sample_with_t(z.values(), t, &mut rng)
        })
        .collect()
}

/// `n` samples of `B(a)`.
pub fn sample_b_of_a(z: &Spectrum, a: C64, n: usize, seed: u64) -> Result<Vec<C64>> {
    Ok(sample_b_of_a_witnessed(z, a, n, seed)?
        .into_iter()
        .map(|s| s.b)
        .collect())
}

/// `n` samples of `B(a, t)` for a fixed fiber point `t`.
pub fn sample_b_given_t(z: &Spectrum, t: &SimplexPoint, n: usize, seed: u64) -> Result<Vec<BSample>> {
    check_size(z)?;
    (0..n)
        .into_par_iter()
        .map(|i| sample_with_t(z.values(), t.clone(), &mut stream(seed, i)))
        .collect()
}
