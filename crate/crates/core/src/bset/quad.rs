//! Convex quadrilaterals `z_1 z_2 z_3 z_4` and the location of a point
//! relative to their sides, diagonals and diagonal crossing `q`.

use serde::{Deserialize, Serialize};

use crate::planegeom::{cross, distance_to_segment, segment_intersection, SegmentIntersection};
use crate::{Error, Result, Spectrum, Tolerances, C64};

/// Distance below which a point is on a feature.
pub const ON_FEATURE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quad {
    z: [C64; 4],
    q: C64,
}

/// Where a point sits in a quadrilateral. Indices are 0-based; quadrant
/// `i` is the open triangle `(z_i, z_{i+1}, q)`, diagonal `i` the open
/// half-diagonal `(z_i, q)` and side `i` the open side `(z_i, z_{i+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuadLocation {
    Vertex(usize),
    Center,
    Side(usize),
    Diagonal(usize),
    Quadrant(usize),
}

impl Quad {
    /// Requires four distinct, strictly convex, counterclockwise points.
    pub fn new(z: [C64; 4]) -> Result<Self> {
        Spectrum::new(z.to_vec())?.check_convex_ccw(Tolerances::DEFAULT.collinear)?;
        let q = match segment_intersection(z[0], z[2], z[1], z[3]) {
            SegmentIntersection::Point(q) => q,
            _ => {
                return Err(Error::BadConfiguration(
                    "quadrilateral diagonals do not cross".into(),
                ))
            }
        };
        Ok(Self { z, q })
    }

    pub fn vertices(&self) -> [C64; 4] {
        self.z
    }

    /// Crossing point of the diagonals `[z_1, z_3]` and `[z_2, z_4]`.
    pub fn center(&self) -> C64 {
        self.q
    }

    /// Closed triangle `(z_i, z_{i+1}, q)` as vertices.
    pub fn quadrant(&self, i: usize) -> [C64; 3] {
        [self.z[i % 4], self.z[(i + 1) % 4], self.q]
    }

    /// Features in priority order, with their distances to `p`.
    fn features(&self, p: C64) -> Vec<(QuadLocation, f64)> {
        let z = &self.z;
        let mut out = Vec::with_capacity(13);
        for i in 0..4 {
            out.push((QuadLocation::Vertex(i), (p - z[i]).norm()));
        }
        out.push((QuadLocation::Center, (p - self.q).norm()));
        for i in 0..4 {
            out.push((
                QuadLocation::Side(i),
                distance_to_segment(p, z[i], z[(i + 1) % 4]),
            ));
        }
        for i in 0..4 {
            out.push((QuadLocation::Diagonal(i), distance_to_segment(p, z[i], self.q)));
        }
        out
    }

    /// Classifies `p` with tolerance `1e-10`; points between `1e-10` and
    /// `1e-9` from a feature are reported as ambiguous.
    pub fn locate(&self, p: C64) -> Result<QuadLocation> {
        let feats = self.features(p);
        if let Some(&(loc, _)) = feats.iter().find(|(_, d)| *d <= ON_FEATURE) {
            return Ok(loc);
        }
        let (closest, dmin) = feats
            .iter()
            .copied()
            .fold((QuadLocation::Center, f64::INFINITY), |acc, f| if f.1 < acc.1 { f } else { acc });
        if dmin <= Tolerances::DEFAULT.grid {
            return Err(Error::BoundaryAmbiguous {
                feature: describe(closest),
                distance: dmin,
            });
        }
        for i in 0..4 {
            let [u, v, w] = self.quadrant(i);
            if cross(v - u, p - u) > 0.0 && cross(w - v, p - v) > 0.0 && cross(u - w, p - w) > 0.0 {
                return Ok(QuadLocation::Quadrant(i));
            }
        }
        let outside = (0..4)
            .map(|i| -cross(self.z[(i + 1) % 4] - self.z[i], p - self.z[i]) / (self.z[(i + 1) % 4] - self.z[i]).norm())
            .fold(f64::NEG_INFINITY, f64::max);
        Err(Error::OutsideHull { distance: outside.max(dmin) })
    }
}

/// Human-readable 1-based feature name.
pub fn describe(loc: QuadLocation) -> String {
    match loc {
        QuadLocation::Vertex(i) => format!("vertex z_{}", i + 1),
        QuadLocation::Center => "diagonal crossing q".into(),
        QuadLocation::Side(i) => format!("side (z_{}, z_{})", i + 1, (i + 1) % 4 + 1),
        QuadLocation::Diagonal(i) => format!("half-diagonal (z_{}, q)", i + 1),
        QuadLocation::Quadrant(i) => format!("quadrant (z_{}, z_{}, q)", i + 1, (i + 1) % 4 + 1),
    }
}
