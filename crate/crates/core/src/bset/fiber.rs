//! The fiber `C(a) = { t in simplex : sum_j t_j z_j = a }` and its extreme
//! points `t(i, j, l)`.

use serde::{Deserialize, Serialize};

use crate::{Error, Result, Spectrum, Tolerances, C64};

/// A point of the probability simplex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimplexPoint {
    t: Vec<f64>,
}

impl SimplexPoint {
    /// Accepts weights `>= -1e-12` summing to `1 +- 1e-12`; small negatives
    /// are clamped to zero.
    pub fn new(mut t: Vec<f64>) -> Result<Self> {
        let tol = Tolerances::DEFAULT.support;
        if t.is_empty() {
            return Err(Error::EmptyInput);
        }
        if t.iter().any(|x| !x.is_finite() || *x < -tol) {
            return Err(Error::InvalidInput("simplex weights must be nonnegative".into()));
        }
        t.iter_mut().for_each(|x| *x = x.max(0.0));
        let sum: f64 = t.iter().sum();
        if (sum - 1.0).abs() > tol * t.len() as f64 {
            return Err(Error::InvalidInput(format!("simplex weights sum to {sum}")));
        }
        Ok(Self { t })
    }

    pub(crate) fn from_unchecked(t: Vec<f64>) -> Self {
        Self { t }
    }

    pub fn weights(&self) -> &[f64] {
        &self.t
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// Indices with weight above `1e-12`.
    pub fn support(&self) -> Vec<usize> {
        let tol = Tolerances::DEFAULT.support;
        (0..self.t.len()).filter(|&j| self.t[j] > tol).collect()
    }

    /// `sum_j t_j z_j`.
    pub fn image(&self, z: &[C64]) -> C64 {
        self.t.iter().zip(z).map(|(t, z)| z * *t).sum()
    }

    /// `u = sqrt(t)`, entrywise and nonnegative.
    pub fn sqrt_vector(&self) -> Vec<C64> {
        self.t.iter().map(|t| C64::new(t.sqrt(), 0.0)).collect()
    }
}

/// Extreme point `t(i, j, l)` of the fiber, with its defining triple.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberExtreme {
    pub triple: [usize; 3],
    pub point: SimplexPoint,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberPolytope {
    a: C64,
    extremes: Vec<FiberExtreme>,
}

impl FiberPolytope {
    pub fn base(&self) -> C64 {
        self.a
    }

    /// Extreme points in lexicographic triple order.
    pub fn extremes(&self) -> &[FiberExtreme] {
        &self.extremes
    }

    pub fn len(&self) -> usize {
        self.extremes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extremes.is_empty()
    }

    /// `sum_e lambda_e e` for convex weights `lambda` over the extreme points.
    pub fn combine(&self, lambda: &[f64]) -> SimplexPoint {
        let n = self.extremes[0].point.len();
        let mut t = vec![0.0; n];
        for (l, e) in lambda.iter().zip(&self.extremes) {
            for (acc, x) in t.iter_mut().zip(e.point.weights()) {
                *acc += l * x;
            }
        }
        SimplexPoint::from_unchecked(t)
    }
}

/// Fails with [`Error::NonGeneric`] on the first collinear triple.
pub fn check_generic(z: &Spectrum) -> Result<()> {
    let n = z.len();
    let tol = Tolerances::DEFAULT.collinear * z.max_modulus().max(1.0).powi(2);
    for i in 0..n {
        for j in (i + 1)..n {
            for l in (j + 1)..n {
                let det = z.triple_det(i, j, l);
                if det.abs() <= tol {
                    return Err(Error::NonGeneric {
                        triple: [i, j, l],
                        det: det.abs(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Barycentric coordinates of `a` in the triangle `(z_i, z_j, z_l)`, the
/// solution of `T t = (1, Re a, Im a)`.
pub fn triangle_coordinates(z: &[C64], [i, j, l]: [usize; 3], a: C64) -> [f64; 3] {
    let (p, q, r) = (z[i], z[j], z[l]);
    let cr = |u: C64, v: C64| u.re * v.im - u.im * v.re;
    let det = cr(q - p, r - p);
    [
        cr(q - a, r - a) / det,
        cr(r - a, p - a) / det,
        cr(p - a, q - a) / det,
    ]
}

/// Extreme points of `C(a)` for generic `z` and `a` in `conv{z}`.
///
/// Every triple is solved; nonnegative solutions (to `-1e-12`) are kept,
/// and solutions within `1e-10` of an earlier one are merged.
pub fn fiber_extreme_points(z: &Spectrum, a: C64) -> Result<FiberPolytope> {
    check_generic(z)?;
    let dist = z.hull().distance(a);
    if dist > Tolerances::DEFAULT.geometry {
        return Err(Error::OutsideHull { distance: dist });
    }
    let n = z.len();
    let vals = z.values();
    let neg = Tolerances::DEFAULT.support;
    let dedup = Tolerances::DEFAULT.fiber_dedup;
    let mut extremes: Vec<FiberExtreme> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for l in (j + 1)..n {
                let c = triangle_coordinates(vals, [i, j, l], a);
                if c.iter().any(|&x| x < -neg) {
                    continue;
                }
                let c = c.map(|x| x.max(0.0));
                let s: f64 = c.iter().sum();
                let mut t = vec![0.0; n];
                t[i] = c[0] / s;
                t[j] = c[1] / s;
                t[l] = c[2] / s;
                let dup = extremes.iter().any(|e| {
                    e.point
                        .weights()
                        .iter()
                        .zip(&t)
                        .map(|(x, y)| (x - y) * (x - y))
                        .sum::<f64>()
                        .sqrt()
                        <= dedup
                });
                if !dup {
                    extremes.push(FiberExtreme {
                        triple: [i, j, l],
                        point: SimplexPoint::from_unchecked(t),
                    });
                }
            }
        }
    }
    if extremes.is_empty() {
        // a is within tolerance of the hull but every triangle test failed
        return Err(Error::OutsideHull { distance: dist });
    }
    Ok(FiberPolytope { a, extremes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn square() -> Spectrum {
        Spectrum::new(vec![c(1., 0.), c(0., 1.), c(-1., 0.), c(0., -1.)]).unwrap()
    }

    #[test]
    fn square_centre_has_two_extremes() {
        let f = fiber_extreme_points(&square(), c(0., 0.)).unwrap();
        let pts: Vec<&[f64]> = f.extremes().iter().map(|e| e.point.weights()).collect();
        assert_eq!(pts, vec![&[0.5, 0.0, 0.5, 0.0][..], &[0.0, 0.5, 0.0, 0.5][..]]);
    }

    #[test]
    fn vertex_gives_unit_vector() {
        let f = fiber_extreme_points(&square(), c(1., 0.)).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.extremes()[0].point.weights(), &[1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn pentagon_centre_triples() {
        let z = Spectrum::roots_of_unity(5).unwrap();
        let f = fiber_extreme_points(&z, c(0., 0.)).unwrap();
        assert_eq!(f.len(), 5);
        // t(k, k+2, k+3), 0-based
        let mut expected: Vec<[usize; 3]> = (0..5)
            .map(|k| {
                let mut t = [k, (k + 2) % 5, (k + 3) % 5];
                t.sort();
                t
            })
            .collect();
        expected.sort();
        let got: Vec<[usize; 3]> = f.extremes().iter().map(|e| e.triple).collect();
        assert_eq!(got, expected);
        for e in f.extremes() {
            assert!(e.point.image(z.values()).norm() < 1e-15);
            assert!(e.point.support().len() == 3);
        }
    }

    #[test]
    fn quadrant_point_of_square() {
        let f = fiber_extreme_points(&square(), c(0.25, 0.25)).unwrap();
        let pts: Vec<&[f64]> = f.extremes().iter().map(|e| e.point.weights()).collect();
        assert_eq!(pts, vec![&[0.5, 0.25, 0.25, 0.0][..], &[0.25, 0.5, 0.0, 0.25][..]]);
    }

    #[test]
    fn rejects_collinear_and_outside() {
        let z = Spectrum::new(vec![c(0., 0.), c(1., 0.), c(2., 0.), c(0., 1.)]).unwrap();
        assert!(matches!(
            fiber_extreme_points(&z, c(0.5, 0.1)),
            Err(Error::NonGeneric { triple: [0, 1, 2], .. })
        ));
        assert!(matches!(
            fiber_extreme_points(&square(), c(2., 0.)),
            Err(Error::OutsideHull { .. })
        ));
    }

    #[test]
    fn simplex_point_validation() {
        assert!(SimplexPoint::new(vec![0.5, 0.5]).is_ok());
        assert!(SimplexPoint::new(vec![0.6, 0.5]).is_err());
        assert!(SimplexPoint::new(vec![1.0 + 1e-13, -1e-13]).is_ok());
        assert!(SimplexPoint::new(vec![1.1, -0.1]).is_err());
    }
}
