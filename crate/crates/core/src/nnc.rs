//! Numerical ranges of `2 x 2` compressions that need not be normal.
//!
//! The numerical range of a `2 x 2` matrix `X` is a filled ellipse with
//! foci at the eigenvalues of `X` and minor axis `|x|`, where `x` is the
//! off-diagonal entry of any upper-triangular unitary form of `X`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bset::fiber_extreme_points;
use crate::bset::sampler::{draw_fiber_point, draw_orthogonal_unit};
use crate::hrnr::{for_each_subset, SUBSET_LIMIT};
use crate::numkit::{compress, ComplexMatrix, Frame};
use crate::planegeom::{convex_hull, dot, Polygon, PolygonKind};
use crate::rng::seeded;
use crate::{Error, Result, Spectrum, C64};

/// Directions in the coarse support-function scan.
pub const SCAN_DIRECTIONS: usize = 256;
/// Tolerance for ellipse/convex-set predicates.
pub const ELLIPSE_TOL: f64 = 1e-8;

const GOLDEN_ITERS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ellipse {
    pub foci: [C64; 2],
    /// Full length of the minor axis.
    pub minor_axis: f64,
}

impl Ellipse {
    pub fn new(foci: [C64; 2], minor_axis: f64) -> Result<Self> {
        if !(minor_axis >= 0.0 && minor_axis.is_finite()) || foci.iter().any(|f| !f.re.is_finite() || !f.im.is_finite()) {
            return Err(Error::InvalidInput(format!("bad ellipse: foci {foci:?}, minor axis {minor_axis}")));
        }
        Ok(Self { foci, minor_axis })
    }

    pub fn center(&self) -> C64 {
        (self.foci[0] + self.foci[1]) / 2.0
    }

    /// Full length of the major axis, `sqrt(minor^2 + |f_1 - f_2|^2)`.
    pub fn major_axis(&self) -> f64 {
        self.minor_axis.hypot((self.foci[0] - self.foci[1]).norm())
    }

    /// Semi-axes `(alpha, beta)`.
    pub fn semi_axes(&self) -> (f64, f64) {
        (self.major_axis() / 2.0, self.minor_axis / 2.0)
    }

    /// Angle of the major axis (0 when the foci coincide).
    pub fn rotation(&self) -> f64 {
        let d = self.foci[1] - self.foci[0];
        if d.norm() == 0.0 {
            0.0
        } else {
            d.arg()
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.minor_axis == 0.0
    }

    /// `max_{x in E} Re(e^{-i theta} x)`.
    pub fn support(&self, theta: f64) -> f64 {
        let (alpha, beta) = self.semi_axes();
        let phi = theta - self.rotation();
        let dir = C64::from_polar(1.0, theta);
        dot(dir, self.center()) + (alpha * alpha * phi.cos().powi(2) + beta * beta * phi.sin().powi(2)).sqrt()
    }

    /// Boundary point `center + e^{i rot} (alpha cos s + i beta sin s)`.
    pub fn point_at(&self, s: f64) -> C64 {
        let (alpha, beta) = self.semi_axes();
        self.center() + C64::from_polar(1.0, self.rotation()) * C64::new(alpha * s.cos(), beta * s.sin())
    }

    /// `m` boundary points at equally spaced parameters.
    pub fn boundary(&self, m: usize) -> Vec<C64> {
        let m = m.max(1);
        (0..m)
            .map(|i| self.point_at(std::f64::consts::TAU * i as f64 / m as f64))
            .collect()
    }

    /// `|p - f_1| + |p - f_2| - major`, negative inside.
    pub fn focal_excess(&self, p: C64) -> f64 {
        (p - self.foci[0]).norm() + (p - self.foci[1]).norm() - self.major_axis()
    }

    pub fn contains(&self, p: C64, tol: f64) -> bool {
        self.focal_excess(p) <= tol
    }

    /// Distance between the ellipse and a convex polygon (0 when they
    /// meet), by maximising the support-function gap
    /// `-(h_E(u) + h_P(-u))` over directions `u`.
    pub fn distance_to_polygon(&self, poly: &Polygon) -> f64 {
        if poly.is_empty() {
            return f64::INFINITY;
        }
        let gap = |theta: f64| -(self.support(theta) + poly.support(-C64::from_polar(1.0, theta)));
        let step = std::f64::consts::TAU / SCAN_DIRECTIONS as f64;
        let (best_i, _) = (0..SCAN_DIRECTIONS)
            .map(|i| (i, gap(i as f64 * step)))
            .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        let centre = best_i as f64 * step;
        let theta = golden_max(gap, centre - step, centre + step);
        gap(theta).max(gap(centre)).max(0.0)
    }

    /// Whether the ellipse lies inside the convex polygon, comparing
    /// support values along the polygon's outward normals.
    pub fn inside_polygon(&self, poly: &Polygon, tol: f64) -> bool {
        self.containment_excess(poly) <= tol
    }

    /// Largest `h_E(n) - h_P(n)` over the outward normals `n` of `poly`.
    pub fn containment_excess(&self, poly: &Polygon) -> f64 {
        outward_normals(poly)
            .into_iter()
            .map(|n| self.support(n.arg()) - poly.support(n))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

fn outward_normals(poly: &Polygon) -> Vec<C64> {
    match poly.kind() {
        PolygonKind::Empty => vec![],
        PolygonKind::Point => vec![C64::new(1., 0.), C64::new(0., 1.), C64::new(-1., 0.), C64::new(0., -1.)],
        PolygonKind::Segment => {
            let v = poly.vertices();
            let d = (v[1] - v[0]) / (v[1] - v[0]).norm();
            vec![d, -d, d * C64::i(), -d * C64::i()]
        }
        PolygonKind::Region => poly
            .edges()
            .map(|(a, b)| -C64::i() * (b - a) / (b - a).norm())
            .collect(),
    }
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - g * (hi - lo);
    let mut d = lo + g * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_ITERS {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = f(d);
        }
    }
    (lo + hi) / 2.0
}

/// Eigenvalues of a `2 x 2` matrix from the characteristic quadratic.
pub fn eigenvalues_2x2(x: &ComplexMatrix) -> Result<[C64; 2]> {
    if x.n() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: x.n() });
    }
    let half_tr = (x[(0, 0)] + x[(1, 1)]) / 2.0;
    let half_diff = (x[(0, 0)] - x[(1, 1)]) / 2.0;
    let disc = (half_diff * half_diff + x[(0, 1)] * x[(1, 0)]).sqrt();
    Ok([half_tr + disc, half_tr - disc])
}

/// The numerical range of a `2 x 2` matrix as an ellipse.
pub fn numerical_range_ellipse(x: &ComplexMatrix) -> Result<Ellipse> {
    let foci = eigenvalues_2x2(x)?;
    let f = x.frobenius_norm();
    let minor2 = f * f - foci[0].norm_sqr() - foci[1].norm_sqr();
    Ellipse::new(foci, minor2.max(0.0).sqrt())
}

/// Whether `e` is inscribed in the triangle `z3`: tangent to each side
/// line within `tol` and contained within `tol`.
pub fn williams_tangency_check(z3: &[C64; 3], e: &Ellipse, tol: f64) -> Result<bool> {
    let tri = convex_hull(z3);
    if tri.kind() != PolygonKind::Region {
        return Err(Error::BadConfiguration("degenerate triangle".into()));
    }
    let tangent = outward_normals(&tri)
        .into_iter()
        .all(|n| (e.support(n.arg()) - tri.support(n)).abs() <= tol);
    Ok(tangent && e.inside_polygon(&tri, tol))
}

/// One compression from the pinned sampler.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PinnedCompression {
    pub t: Vec<f64>,
    pub w: Vec<C64>,
    /// `[[a, (Mw, u)], [0, (Mw, w)]]`.
    pub x: ComplexMatrix,
    pub ellipse: Ellipse,
}

/// `n` random `2 x 2` compressions of `diag(z)` having `a` as an
/// eigenvalue, with their numerical-range ellipses.
///
/// `t` is drawn from the fiber as in the `B(a)` sampler and `u = sqrt(t)`;
/// `w` is uniform on the unit sphere of `C^N ⊖ span{u, z∘u}`, so
/// `(Mu, u) = a` and `(Mu, w) = 0`.
pub fn sample_eigenvalue_pinned_compressions(
    z: &Spectrum,
    a: C64,
    n: usize,
    seed: u64,
) -> Result<Vec<PinnedCompression>> {
    if z.len() < 3 {
        return Err(Error::BadConfiguration(format!("pinned sampling needs N >= 3, got {}", z.len())));
    }
    let fiber = fiber_extreme_points(z, a)?;
    let m = z.matrix();
    let v = z.values();
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = seeded(seed);
            rng.set_stream(i as u64);
            let t = draw_fiber_point(&fiber, &mut rng);
            let u = t.sqrt_vector();
            let zu: Vec<C64> = u.iter().zip(v).map(|(u, z)| u * z).collect();
            let w = draw_orthogonal_unit(z.len(), &[u.clone(), zu], &mut rng)?;
            let frame = Frame::new(z.len(), vec![u, w.clone()])?;
            let x = compress(&m, &frame)?;
            let ellipse = numerical_range_ellipse(&x)?;
            Ok(PinnedCompression {
                t: t.weights().to_vec(),
                w,
                x,
                ellipse,
            })
        })
        .collect()
}

/// First `J` with `|J| = N - k + 1` (0-based, lexicographic) whose hull
/// lies farther than `tol` from the ellipse, with that distance.
pub fn ellipse_subset_violation(e: &Ellipse, z: &Spectrum, k: usize, tol: f64) -> Result<Option<(Vec<usize>, f64)>> {
    let n = z.len();
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    if n > SUBSET_LIMIT {
        return Err(Error::BudgetExceeded { n, limit: SUBSET_LIMIT });
    }
    let v = z.values();
    let mut found = None;
    for_each_subset(n, n - k + 1, |idx| {
        let pts: Vec<C64> = idx.iter().map(|&j| v[j]).collect();
        let d = e.distance_to_polygon(&convex_hull(&pts));
        if d > tol {
            found = Some((idx.to_vec(), d));
            return false;
        }
        true
    });
    Ok(found)
}
