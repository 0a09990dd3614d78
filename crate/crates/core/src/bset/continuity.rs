//! Empirical continuity of `a -> B(a)` in the Hausdorff metric.
//!
//! Clouds for `B(a)` and every `B(a_n)` are drawn with the same seed, so
//! sample `i` of each cloud uses the same random numbers. Away from the
//! grid this coupling makes the cloud distances track the set distances
//! closely.
//!
//! For `N <= 4` the exact description of each set is known, and distances
//! are measured from each cloud to the other exact set. This removes the
//! bias of comparing two finite clouds, which is of the order of the
//! sample spacing.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cases::{b_of_a, BDescription, BKind};
use super::sampler::sample_b_of_a;
use crate::planegeom::{directed_hausdorff, distance_to_segment};
use crate::{Result, Spectrum, Tolerances, C64};

/// Distance from `p` to the grid, the union of all segments `[z_i, z_j]`.
pub fn grid_distance(z: &Spectrum, p: C64) -> f64 {
    let v = z.values();
    let mut d = f64::INFINITY;
    for i in 0..v.len() {
        for j in (i + 1)..v.len() {
            d = d.min(distance_to_segment(p, v[i], v[j]));
        }
    }
    d
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub index: usize,
    pub a_n: C64,
    /// `|a_n - a|`.
    pub step: f64,
    pub grid_distance: f64,
    /// One-sided `max_{b in B(a_n)} d(b, B(a))`.
    pub forward: f64,
    /// One-sided `max_{b in B(a)} d(b, B(a_n))`.
    pub backward: f64,
    pub full: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContinuityReport {
    pub a: C64,
    pub grid_distance: f64,
    pub on_grid: bool,
    pub n_samples: usize,
    pub seed: u64,
    /// Distances measured against exact sets rather than clouds.
    pub exact_reference: bool,
    pub rows: Vec<ProbeRow>,
}

/// Cloud plus, when available, the exact set.
struct Sampled {
    cloud: Vec<C64>,
    exact: Option<BDescription>,
}

impl Sampled {
    fn new(z: &Spectrum, a: C64, n_samples: usize, seed: u64) -> Result<Self> {
        let cloud = sample_b_of_a(z, a, n_samples, seed)?;
        let exact = if z.len() <= 4 {
            b_of_a(z, a, 0, seed).ok().filter(|d| d.kind() != BKind::Cloud)
        } else {
            None
        };
        Ok(Self { cloud, exact })
    }

    /// `max_{b in self} d(b, other)`.
    fn directed_to(&self, other: &Sampled) -> f64 {
        match &other.exact {
            Some(set) => self
                .cloud
                .par_iter()
                .map(|&b| set.distance(b))
                .reduce(|| 0.0, f64::max),
            None => directed_hausdorff(&self.cloud, &other.cloud),
        }
    }
}

/// Cloud estimates of `d(B(a_n), B(a))` along `sequence`.
pub fn continuity_probe(
    z: &Spectrum,
    a: C64,
    sequence: &[C64],
    n_samples: usize,
    seed: u64,
) -> Result<ContinuityReport> {
    let base = Sampled::new(z, a, n_samples, seed)?;
    let mut exact_reference = base.exact.is_some();
    let mut rows = Vec::with_capacity(sequence.len());
    for (index, &a_n) in sequence.iter().enumerate() {
        let probe = Sampled::new(z, a_n, n_samples, seed)?;
        exact_reference &= probe.exact.is_some();
        let forward = probe.directed_to(&base);
        let backward = base.directed_to(&probe);
        rows.push(ProbeRow {
            index,
            a_n,
            step: (a_n - a).norm(),
            grid_distance: grid_distance(z, a_n),
            forward,
            backward,
            full: forward.max(backward),
        });
    }
    let gd = grid_distance(z, a);
    Ok(ContinuityReport {
        a,
        grid_distance: gd,
        on_grid: gd <= Tolerances::DEFAULT.grid,
        n_samples,
        seed,
        exact_reference,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_distance_of_square_centre_and_quadrant() {
        let z = Spectrum::roots_of_unity(4).unwrap();
        assert!(grid_distance(&z, C64::new(0., 0.)) < 1e-15);
        let d = grid_distance(&z, C64::new(0.25, 0.25));
        // nearest grid lines are the diagonals (the axes)
        assert!((d - 0.25).abs() < 1e-15);
    }

    #[test]
    fn jump_at_a_vertex() {
        let z = Spectrum::roots_of_unity(4).unwrap();
        let v = z.values();
        let seq: Vec<C64> = (1..=4).map(|j| v[0] + (v[1] - v[0]) * 0.5f64.powi(j * 4)).collect();
        let rep = continuity_probe(&z, v[0], &seq, 4000, 5).unwrap();
        assert!(rep.on_grid);
        for row in &rep.rows {
            assert!(row.forward < 1e-9, "{}", row.forward);
            assert!(row.full > 0.9 * 2f64.sqrt());
        }
    }
}
