//! The rational curve `b(r)` describing `B(a)` for `a` inside a quadrant
//! of a quadrilateral of eigenvalues.
//!
//! After relabelling so that `a` lies in the quadrant `(z_1, z_2, q)`, let
//! `x = t(1,2,3)` and `y = t(1,2,4)`, the two extreme points of `C(a)`. With
//! `t(r) = (1-r) x + r y` and weights `g_k(r) = (x_k - y_k)^2 / t_k(r)`,
//!
//! ```text
//! b(r) = sum_k g_k(r) z_k / sum_k g_k(r),   b(0) = z_4,  b(1) = z_3.
//! ```

use serde::{Deserialize, Serialize};

use super::fiber::triangle_coordinates;
use super::quad::{describe, Quad, QuadLocation};
use crate::{Error, Result, C64};

const GOLDEN_ITERS: usize = 80;
const COARSE: usize = 512;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BCurve {
    /// Positions of `z'_1..z'_4` in the caller's labelling.
    labels: [usize; 4],
    z: [C64; 4],
    x: [f64; 4],
    y: [f64; 4],
}

/// Sampled curve with its parameters and the caller's labels of the two
/// endpoints (`b(0)` then `b(1)`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveTrace {
    pub r: Vec<f64>,
    pub points: Vec<C64>,
    pub start_label: usize,
    pub end_label: usize,
}

impl BCurve {
    /// `a` must lie strictly inside one quadrant of `quad`; `labels[i]` is the
    /// caller's index of `quad.vertices()[i]`.
    pub fn new(quad: &Quad, labels: [usize; 4], a: C64) -> Result<Self> {
        let i = match quad.locate(a)? {
            QuadLocation::Quadrant(i) => i,
            other => return Err(Error::OnGrid { feature: describe(other) }),
        };
        let v = quad.vertices();
        let order = [i, (i + 1) % 4, (i + 2) % 4, (i + 3) % 4];
        let z = order.map(|k| v[k]);
        let lab = order.map(|k| labels[k]);
        let cx = triangle_coordinates(&z, [0, 1, 2], a);
        let cy = triangle_coordinates(&z, [0, 1, 3], a);
        Ok(Self {
            labels: lab,
            z,
            x: [cx[0], cx[1], cx[2], 0.0],
            y: [cy[0], cy[1], 0.0, cy[2]],
        })
    }

    /// Relabelled vertices `z'_1..z'_4`.
    pub fn vertices(&self) -> [C64; 4] {
        self.z
    }

    pub fn labels(&self) -> [usize; 4] {
        self.labels
    }

    /// `t(1,2,3)` in relabelled order.
    pub fn x(&self) -> [f64; 4] {
        self.x
    }

    /// `t(1,2,4)` in relabelled order.
    pub fn y(&self) -> [f64; 4] {
        self.y
    }

    /// `(1-r) x + r y`, relabelled order.
    pub fn fiber_point(&self, r: f64) -> [f64; 4] {
        std::array::from_fn(|k| (1.0 - r) * self.x[k] + r * self.y[k])
    }

    pub fn start(&self) -> C64 {
        self.z[3]
    }

    pub fn end(&self) -> C64 {
        self.z[2]
    }

    pub fn eval(&self, r: f64) -> C64 {
        if r <= 0.0 {
            return self.start();
        }
        if r >= 1.0 {
            return self.end();
        }
        let t = self.fiber_point(r);
        let mut num = C64::new(0.0, 0.0);
        let mut den = 0.0;
        for k in 0..4 {
            let d = self.x[k] - self.y[k];
            let g = d * d / t[k];
            num += self.z[k] * g;
            den += g;
        }
        num / den
    }

    /// Unit vector `(x - y) / sqrt(t(r))` (relabelled order), whose squared
    /// moduli weight `z'` to give `b(r)`. At `r = 0, 1` it is the limiting
    /// basis vector.
    pub fn null_direction(&self, r: f64) -> [f64; 4] {
        if r <= 0.0 {
            return [0.0, 0.0, 0.0, 1.0];
        }
        if r >= 1.0 {
            return [0.0, 0.0, 1.0, 0.0];
        }
        let t = self.fiber_point(r);
        let v: [f64; 4] = std::array::from_fn(|k| (self.x[k] - self.y[k]) / t[k].sqrt());
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        v.map(|x| x / n)
    }

    pub fn trace(&self, m: usize) -> CurveTrace {
        let m = m.max(1);
        let r: Vec<f64> = (0..=m).map(|i| i as f64 / m as f64).collect();
        let points = r.iter().map(|&r| self.eval(r)).collect();
        CurveTrace {
            r,
            points,
            start_label: self.labels[3],
            end_label: self.labels[2],
        }
    }

    /// Parameter of the point of the curve nearest to `p`, and its distance.
    pub fn nearest(&self, p: C64) -> (f64, f64) {
        let dist = |r: f64| (self.eval(r) - p).norm();
        let grid: Vec<f64> = (0..=COARSE).map(|i| dist(i as f64 / COARSE as f64)).collect();
        let mut best = (0.0, grid[0]);
        for i in 0..=COARSE {
            let is_local_min = (i == 0 || grid[i] <= grid[i - 1]) && (i == COARSE || grid[i] <= grid[i + 1]);
            if !is_local_min {
                continue;
            }
            let lo = i.saturating_sub(1) as f64 / COARSE as f64;
            let hi = (i + 1).min(COARSE) as f64 / COARSE as f64;
            let r = golden_min(dist, lo, hi);
            for cand in [r, i as f64 / COARSE as f64] {
                let d = dist(cand);
                if d < best.1 {
                    best = (cand, d);
                }
            }
        }
        best
    }

    pub fn distance(&self, p: C64) -> f64 {
        self.nearest(p).1
    }
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - g * (hi - lo);
    let mut d = lo + g * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..GOLDEN_ITERS {
        if fc <= fd {
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

/// Samples `b(r)` at `m + 1` uniform parameters for four counterclockwise
/// eigenvalues and `a` strictly inside a quadrant.
pub fn b_curve(z4: &[C64; 4], a: C64, m: usize) -> Result<CurveTrace> {
    let quad = Quad::new(*z4)?;
    Ok(BCurve::new(&quad, [0, 1, 2, 3], a)?.trace(m))
}
