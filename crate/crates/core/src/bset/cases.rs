//! Exact descriptions of `B(a)` and of the pieces `B(a, t)`.

use super::curve::BCurve;
use super::fiber::{check_generic, SimplexPoint};
use super::quad::{Quad, QuadLocation};
use super::sampler::{sample_b_given_t, sample_b_of_a};
use super::starfish::{starfish, Starfish};
use crate::planegeom::{convex_hull, cross, distance_to_segment, Polygon};
use crate::{Error, Result, Spectrum, Tolerances, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum BKind {
    /// Three eigenvalues: a side, a vertex or nothing.
    TriangleCase,
    Segment,
    /// A convex hull of eigenvalues (and possibly one curve point).
    Polygon,
    Curve,
    TShape,
    DiagonalCross,
    WedgeUnion,
    Cloud,
}

impl BKind {
    pub fn name(&self) -> &'static str {
        match self {
            BKind::TriangleCase => "triangle-case",
            BKind::Segment => "segment",
            BKind::Polygon => "polygon",
            BKind::Curve => "curve",
            BKind::TShape => "T-shape",
            BKind::DiagonalCross => "diagonal-cross",
            BKind::WedgeUnion => "wedge-union",
            BKind::Cloud => "cloud",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Component {
    Set(Polygon),
    Curve(BCurve),
    Wedges(Starfish),
    Cloud(Vec<C64>),
}

impl Component {
    /// Distance from `p`; for clouds, to the nearest sample.
    pub fn distance(&self, p: C64) -> f64 {
        match self {
            Component::Set(poly) => poly.distance(p),
            Component::Curve(c) => c.distance(p),
            Component::Wedges(s) => s.distance(p),
            Component::Cloud(pts) => pts.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min),
        }
    }
}

/// `B(a)` (or a piece of it) as a union of components.
#[derive(Debug, Clone, PartialEq)]
pub struct BDescription {
    kind: BKind,
    components: Vec<Component>,
}

impl BDescription {
    pub fn new(kind: BKind, components: Vec<Component>) -> Self {
        Self { kind, components }
    }

    pub fn kind(&self) -> BKind {
        self.kind
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|c| match c {
            Component::Set(p) => p.is_empty(),
            Component::Cloud(v) => v.is_empty(),
            _ => false,
        })
    }

    /// Distance from `p` to the union (infinite when empty).
    pub fn distance(&self, p: C64) -> f64 {
        self.components
            .iter()
            .map(|c| c.distance(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: C64, tol: f64) -> bool {
        self.distance(p) <= tol
    }
}

fn set(kind: BKind, poly: Polygon) -> BDescription {
    BDescription::new(kind, vec![Component::Set(poly)])
}

/// `B(a)` for three non-collinear eigenvalues: the opposite side when `a`
/// is a vertex, the opposite vertex when `a` is inside a side, else empty.
pub fn b_of_a_n3(z3: &[C64; 3], a: C64) -> Result<BDescription> {
    let det = cross(z3[1] - z3[0], z3[2] - z3[0]);
    if det.abs() <= Tolerances::DEFAULT.collinear {
        return Err(Error::NonGeneric {
            triple: [0, 1, 2],
            det: det.abs(),
        });
    }
    let tol = Tolerances::DEFAULT.grid;
    for i in 0..3 {
        let (j, l) = ((i + 1) % 3, (i + 2) % 3);
        if (a - z3[i]).norm() <= tol {
            return Ok(set(BKind::TriangleCase, Polygon::segment(z3[j], z3[l])));
        }
    }
    for i in 0..3 {
        let (j, l) = ((i + 1) % 3, (i + 2) % 3);
        if distance_to_segment(a, z3[j], z3[l]) <= tol {
            return Ok(set(BKind::TriangleCase, Polygon::point(z3[i])));
        }
    }
    Ok(set(BKind::TriangleCase, Polygon::empty()))
}

/// `B(a)` for four extreme counterclockwise eigenvalues, by the location of
/// `a` relative to the sides, diagonals and their crossing `q`.
pub fn b_of_a_n4(z4: &[C64; 4], a: C64) -> Result<BDescription> {
    let quad = Quad::new(*z4)?;
    let z = z4;
    let q = quad.center();
    let seg = |i: usize, j: usize| Polygon::segment(z[i % 4], z[j % 4]);
    Ok(match quad.locate(a)? {
        QuadLocation::Quadrant(_) => BDescription::new(
            BKind::Curve,
            vec![Component::Curve(BCurve::new(&quad, [0, 1, 2, 3], a)?)],
        ),
        QuadLocation::Side(i) => set(BKind::Segment, seg(i + 2, i + 3)),
        QuadLocation::Vertex(i) => set(
            BKind::Polygon,
            convex_hull(&[z[(i + 1) % 4], z[(i + 2) % 4], z[(i + 3) % 4]]),
        ),
        QuadLocation::Diagonal(i) => BDescription::new(
            BKind::TShape,
            vec![
                Component::Set(seg(i + 1, i + 3)),
                Component::Set(Polygon::segment(q, z[(i + 2) % 4])),
            ],
        ),
        QuadLocation::Center => BDescription::new(
            BKind::DiagonalCross,
            vec![Component::Set(seg(0, 2)), Component::Set(seg(1, 3))],
        ),
    })
}

/// Null vector of `[1; Re z; Im z]` restricted to four indices.
fn null_vector4(z: &[C64], s: &[usize]) -> [f64; 4] {
    let minor = |a: usize, b: usize, c: usize| cross(z[s[b]] - z[s[a]], z[s[c]] - z[s[a]]);
    [minor(1, 2, 3), -minor(0, 2, 3), minor(0, 1, 3), -minor(0, 1, 2)]
}

/// `B(a, t)`: the `b` reachable with the fixed first vector `u = sqrt(t)`.
///
/// With support size at most 3 the `w` constraints pin nothing outside the
/// support, giving `conv{z_j : j not in supp t}`. With support size 4 the
/// part of `w` on the support is a multiple of `n / sqrt(t)` for the null
/// vector `n`, which adds the single point `b_0` (a point of the `b(r)`
/// curve). Larger supports are sampled with `n_samples` draws.
pub fn b_of_a_t(z: &Spectrum, t: &SimplexPoint, a: C64, n_samples: usize, seed: u64) -> Result<BDescription> {
    if t.len() != z.len() {
        return Err(Error::DimensionMismatch {
            expected: z.len(),
            found: t.len(),
        });
    }
    let residual = (t.image(z.values()) - a).norm();
    if residual > Tolerances::DEFAULT.fiber_dedup {
        return Err(Error::NotInFiber { residual });
    }
    let supp = t.support();
    let v = z.values();
    let outside: Vec<C64> = (0..z.len()).filter(|j| !supp.contains(j)).map(|j| v[j]).collect();
    match supp.len() {
        0..=3 => {
            let hull = convex_hull(&outside);
            let kind = if hull.kind() == crate::planegeom::PolygonKind::Segment {
                BKind::Segment
            } else {
                BKind::Polygon
            };
            Ok(set(kind, hull))
        }
        4 => {
            check_generic(z)?;
            let n = null_vector4(v, &supp);
            let w = t.weights();
            let (mut num, mut den) = (C64::new(0.0, 0.0), 0.0);
            for (k, &j) in supp.iter().enumerate() {
                let g = n[k] * n[k] / w[j];
                num += v[j] * g;
                den += g;
            }
            let mut pts = outside;
            pts.push(num / den);
            Ok(set(BKind::Polygon, convex_hull(&pts)))
        }
        _ => {
            let cloud = sample_b_given_t(z, t, n_samples, seed)?
                .into_iter()
                .map(|s| s.b)
                .collect();
            Ok(BDescription::new(BKind::Cloud, vec![Component::Cloud(cloud)]))
        }
    }
}

/// Best available description of `B(a)`: exact for `N = 3, 4`, the starfish
/// for `N = 5` with `a` strictly inside `Lambda_2`, otherwise a sample cloud.
pub fn b_of_a(z: &Spectrum, a: C64, n_samples: usize, seed: u64) -> Result<BDescription> {
    let v = z.values();
    let convex = z.check_convex_ccw(Tolerances::DEFAULT.collinear).is_ok();
    match z.len() {
        3 => return b_of_a_n3(&[v[0], v[1], v[2]], a),
        4 if convex => return b_of_a_n4(&[v[0], v[1], v[2], v[3]], a),
        5 if convex => {
            if let Ok(s) = starfish(z, a) {
                return Ok(BDescription::new(BKind::WedgeUnion, vec![Component::Wedges(s)]));
            }
        }
        _ => {}
    }
    let cloud = sample_b_of_a(z, a, n_samples, seed)?;
    Ok(BDescription::new(BKind::Cloud, vec![Component::Cloud(cloud)]))
}
