//! Eigenvalue lists of normal matrices.

use serde::{Deserialize, Serialize};

use crate::numkit::{ComplexMatrix, MAX_DIM};
use crate::planegeom::{convex_hull, cross, Polygon};
use crate::{Error, Result, C64};

/// Ordered eigenvalues `z_1, ..., z_N` of a normal matrix `M = diag(z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: Vec<C64>,
}

impl Spectrum {
    pub fn new(values: Vec<C64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        if values.len() > MAX_DIM {
            return Err(Error::InvalidInput(format!(
                "spectrum of length {} exceeds {MAX_DIM}",
                values.len()
            )));
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite eigenvalue".into()));
        }
        Ok(Self { values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// The `n`-th roots of unity `exp(2 pi i j / n)`, `j = 0..n`.
    pub fn roots_of_unity(n: usize) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|j| C64::from_polar(1.0, std::f64::consts::TAU * j as f64 / n as f64))
                .collect(),
        )
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_modulus(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_diag(&self.values)
    }

    pub fn hull(&self) -> Polygon {
        convex_hull(&self.values)
    }

    /// Smallest pairwise distance (infinite for a single value).
    pub fn min_separation(&self) -> f64 {
        let z = &self.values;
        let mut d = f64::INFINITY;
        for i in 0..z.len() {
            for j in (i + 1)..z.len() {
                d = d.min((z[i] - z[j]).norm());
            }
        }
        d
    }

    /// `det [1 1 1; Re z; Im z]` over the triple.
    pub fn triple_det(&self, i: usize, j: usize, l: usize) -> f64 {
        let z = &self.values;
        cross(z[j] - z[i], z[l] - z[i])
    }

    /// No three eigenvalues collinear (every triple determinant exceeds `tol`).
    pub fn is_generic(&self, tol: f64) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for l in (j + 1)..n {
                    if self.triple_det(i, j, l).abs() <= tol {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every `z_j` is a vertex of `conv{z}` and the list runs counterclockwise.
    pub fn check_convex_ccw(&self, tol: f64) -> Result<()> {
        let n = self.len();
        if n < 3 {
            return Err(Error::BadConfiguration(format!("need N >= 3, got {n}")));
        }
        let sep = self.min_separation();
        if sep <= tol {
            return Err(Error::BadConfiguration(format!(
                "eigenvalues coincide (separation {sep:e})"
            )));
        }
        let z = &self.values;
        let mut turning = 0.0;
        for i in 0..n {
            let e1 = z[(i + 1) % n] - z[i];
            let e2 = z[(i + 2) % n] - z[(i + 1) % n];
            let c = cross(e1, e2);
            if c <= tol * e1.norm() * e2.norm() {
                return Err(Error::BadConfiguration(format!(
                    "z_{} is not a strictly convex counterclockwise vertex",
                    (i + 1) % n + 1
                )));
            }
            turning += (e2 / e1).arg();
        }
        if (turning - std::f64::consts::TAU).abs() > 1e-6 {
            return Err(Error::BadConfiguration(
                "eigenvalue polygon winds more than once".into(),
            ));
        }
        Ok(())
    }
}
