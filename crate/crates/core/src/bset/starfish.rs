//! The starfish region for five eigenvalues.
//!
//! For `a` strictly inside `Lambda_2`, deleting `z_k` leaves a quadrilateral
//! `Q_k` in which `a` lies inside the quadrant next to `z_k`. Its curve
//! `beta_k` joins `z_{k+3}` (r = 0) to `z_{k+2}` (r = 1). The wedge `W_k` is
//! the fan of segments `[z_k, b(r)]`, i.e. all `s b(r) + (1 - s) z_k`; each
//! such point has an explicit witness, so `W_k ⊆ B(a)`. The starfish is the
//! union of the five wedges.

use serde::{Deserialize, Serialize};

use super::curve::{BCurve, CurveTrace};
use super::quad::Quad;
use crate::hrnr::lambda_k_normal;
use crate::planegeom::{distance_to_segment, Containment};
use crate::{Error, Result, Spectrum, Tolerances, C64};

const BISECT_ITERS: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Wedge {
    index: usize,
    apex: C64,
    curve: BCurve,
}

/// `b = s * b(r) + (1 - s) * z_k` inside wedge `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WedgePoint {
    pub wedge: usize,
    pub r: f64,
    pub s: f64,
}

impl Wedge {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn apex(&self) -> C64 {
        self.apex
    }

    pub fn curve(&self) -> &BCurve {
        &self.curve
    }

    /// Angle of `p - apex` measured from the direction of `b(0) - apex`.
    fn angle(&self, p: C64) -> f64 {
        ((p - self.apex) / (self.curve.start() - self.apex)).arg()
    }

    /// Parameter `r` whose ray from the apex passes through `p`, if the
    /// direction of `p` lies in the wedge's angular span. Smallest such
    /// `r` when the curve is tangent to the ray.
    pub fn ray_parameter(&self, p: C64) -> Option<f64> {
        if (p - self.apex).norm() == 0.0 {
            return Some(0.0);
        }
        let end = self.angle(self.curve.end());
        let phi = self.angle(p);
        let sign = end.signum();
        let slack = 1e-15;
        if phi * sign < -slack || (phi - end) * sign > slack {
            return None;
        }
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..BISECT_ITERS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if (self.angle(self.curve.eval(mid)) - phi) * sign < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(hi)
    }

    /// Writes `p = s b(r) + (1 - s) z_k` with `0 <= s <= 1`, allowing `s`
    /// up to `1 + tol / |b(r) - z_k|`.
    pub fn decompose(&self, p: C64, tol: f64) -> Option<WedgePoint> {
        let r = self.ray_parameter(p)?;
        let reach = (self.curve.eval(r) - self.apex).norm();
        let dist = (p - self.apex).norm();
        if dist > reach + tol {
            return None;
        }
        let s = if reach > 0.0 { (dist / reach).min(1.0) } else { 0.0 };
        Some(WedgePoint {
            wedge: self.index,
            r,
            s,
        })
    }

    /// Euclidean distance from `p` to the closed wedge.
    pub fn distance(&self, p: C64) -> f64 {
        if self.decompose(p, 0.0).is_some() {
            return 0.0;
        }
        let d1 = distance_to_segment(p, self.apex, self.curve.start());
        let d2 = distance_to_segment(p, self.apex, self.curve.end());
        d1.min(d2).min(self.curve.distance(p))
    }

    /// Closed boundary polyline: apex, curve from `r = 0` to `1`, apex.
    pub fn boundary(&self, m: usize) -> Vec<C64> {
        let mut pts = vec![self.apex];
        pts.extend(self.curve.trace(m).points);
        pts.push(self.apex);
        pts
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Starfish {
    z: Vec<C64>,
    a: C64,
    wedges: Vec<Wedge>,
}

impl Starfish {
    pub fn base(&self) -> C64 {
        self.a
    }

    pub fn wedges(&self) -> &[Wedge] {
        &self.wedges
    }

    /// Curve traces `beta_1..beta_5` with `m + 1` points each.
    pub fn curves(&self, m: usize) -> Vec<CurveTrace> {
        self.wedges.iter().map(|w| w.curve.trace(m)).collect()
    }

    /// First wedge (in index order) containing `p` within `tol`, with its
    /// decomposition.
    pub fn locate(&self, p: C64, tol: f64) -> Option<WedgePoint> {
        self.wedges.iter().find_map(|w| w.decompose(p, tol))
    }

    /// Distance from `p` to the wedge union.
    pub fn distance(&self, p: C64) -> f64 {
        self.wedges
            .iter()
            .map(|w| w.distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: C64, tol: f64) -> bool {
        self.locate(p, tol).is_some() || self.distance(p) <= tol
    }
}

/// Starfish for five distinct, extreme, counterclockwise eigenvalues and
/// `a` strictly inside `Lambda_2`.
pub fn starfish(z: &Spectrum, a: C64) -> Result<Starfish> {
    if z.len() != 5 {
        return Err(Error::BadConfiguration(format!(
            "the starfish needs N = 5, got {}",
            z.len()
        )));
    }
    z.check_convex_ccw(Tolerances::DEFAULT.collinear)?;
    let lambda2 = lambda_k_normal(z, 2)?;
    if lambda2.locate(a, 1e-10) != Containment::Inside {
        return Err(Error::NotInLambda2 {
            which: "a",
            distance: lambda2.distance(a),
        });
    }
    let v = z.values();
    let wedges = (0..5)
        .map(|k| {
            let idx = [(k + 1) % 5, (k + 2) % 5, (k + 3) % 5, (k + 4) % 5];
            let quad = Quad::new(idx.map(|j| v[j]))?;
            Ok(Wedge {
                index: k,
                apex: v[k],
                curve: BCurve::new(&quad, idx, a)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Starfish {
        z: v.to_vec(),
        a,
        wedges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planegeom::cross;

    fn pentagon() -> Spectrum {
        Spectrum::roots_of_unity(5).unwrap()
    }

    #[test]
    fn curve_endpoints_follow_the_labels() {
        let s = starfish(&pentagon(), C64::new(0., 0.)).unwrap();
        for w in s.wedges() {
            let k = w.index();
            let tr = w.curve().trace(8);
            assert_eq!(tr.start_label, (k + 3) % 5);
            assert_eq!(tr.end_label, (k + 2) % 5);
        }
    }

    #[test]
    fn wedges_are_rotations_at_the_centre() {
        let s = starfish(&pentagon(), C64::new(0., 0.)).unwrap();
        let rot = C64::from_polar(1.0, std::f64::consts::TAU / 5.0);
        let base = s.wedges()[0].curve().trace(64).points;
        for k in 1..5 {
            let tr = s.wedges()[k].curve().trace(64).points;
            for (p, q) in base.iter().zip(&tr) {
                assert!((p * rot.powi(k as i32) - q).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn contains_a_and_inner_pentagon() {
        let z = pentagon();
        let s = starfish(&z, C64::new(0., 0.)).unwrap();
        assert!(s.contains(C64::new(0., 0.), 0.0));
        for v in lambda_k_normal(&z, 2).unwrap().vertices() {
            assert!(s.contains(*v, 1e-8));
        }
        // outer vertices are apexes
        for v in z.values() {
            assert!(s.contains(*v, 0.0));
        }
        // midpoint of an outer side is not reached
        let mid = (z.values()[0] + z.values()[1]) / 2.0;
        assert!(s.distance(mid) > 0.05);
    }

    #[test]
    fn curve_angle_is_monotone_from_apex() {
        for a in [C64::new(0., 0.), C64::new(0.1, 0.05), C64::new(-0.2, 0.1)] {
            let s = starfish(&pentagon(), a).unwrap();
            for w in s.wedges() {
                let pts = w.curve().trace(4000).points;
                let turn: Vec<f64> = pts
                    .windows(2)
                    .map(|p| cross(p[0] - w.apex(), p[1] - w.apex()))
                    .collect();
                assert!(turn.iter().all(|&c| c < 0.0));
            }
        }
    }

    #[test]
    fn decomposition_reconstructs_point() {
        let s = starfish(&pentagon(), C64::new(0.1, 0.05)).unwrap();
        for p in [C64::new(0.1, 0.15), C64::new(-0.3, 0.0), C64::new(0.0, -0.3)] {
            let wp = s.locate(p, 0.0).expect("point inside starfish");
            let w = &s.wedges()[wp.wedge];
            let q = w.curve().eval(wp.r) * wp.s + w.apex() * (1.0 - wp.s);
            assert!((p - q).norm() < 1e-10);
        }
    }

    #[test]
    fn rejects_a_outside_inner_pentagon() {
        assert!(matches!(
            starfish(&pentagon(), C64::new(0.5, 0.0)),
            Err(Error::NotInLambda2 { .. })
        ));
    }
}
