//! Convex geometry in the complex plane, identified with R^2.
//!
//! [`Polygon`] is a closed convex set stored as a counterclockwise vertex
//! list. Empty sets, single points and segments are ordinary values with
//! an explicit [`PolygonKind`], because several of the sets this crate
//! computes (Hermitian rank-k ranges, many `B(a)` components) are
//! degenerate.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result, Tolerances, C64};

/// Vertex tolerance used when clipping and merging.
const VERTEX_EPS: f64 = 1e-12;

/// `Im(conj(a) b)`: z-component of the planar cross product.
#[inline]
pub fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

#[inline]
pub fn dot(a: C64, b: C64) -> f64 {
    a.re * b.re + a.im * b.im
}

/// Point of the closed segment `[a, b]` nearest to `p`.
pub fn closest_on_segment(p: C64, a: C64, b: C64) -> C64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return a;
    }
    let t = (dot(p - a, d) / len2).clamp(0.0, 1.0);
    a + d * t
}

/// Distance from `p` to the closed segment `[a, b]`.
pub fn distance_to_segment(p: C64, a: C64, b: C64) -> f64 {
    (p - closest_on_segment(p, a, b)).norm()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolygonKind {
    Empty,
    Point,
    Segment,
    Region,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    kind: PolygonKind,
    vertices: Vec<C64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

impl Polygon {
    pub fn empty() -> Self {
        Self {
            kind: PolygonKind::Empty,
            vertices: Vec::new(),
        }
    }

    pub fn point(p: C64) -> Self {
        Self {
            kind: PolygonKind::Point,
            vertices: vec![p],
        }
    }

    /// The segment `[a, b]`; collapses to a point when `a == b`.
    pub fn segment(a: C64, b: C64) -> Self {
        convex_hull(&[a, b])
    }

    pub fn kind(&self) -> PolygonKind {
        self.kind
    }

    pub fn vertices(&self) -> &[C64] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.kind == PolygonKind::Empty
    }

    /// Directed edges `(v_i, v_{i+1})`; a segment yields both directions,
    /// a point yields none.
    pub fn edges(&self) -> impl Iterator<Item = (C64, C64)> + '_ {
        let n = self.vertices.len();
        let count = if n >= 2 { n } else { 0 };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> f64 {
        if self.kind != PolygonKind::Region {
            return 0.0;
        }
        0.5 * self.edges().map(|(a, b)| cross(a, b)).sum::<f64>()
    }

    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                d = d.max((v[i] - v[j]).norm());
            }
        }
        d
    }

    /// Largest vertex modulus (distance of the farthest vertex from 0).
    pub fn circumradius_about(&self, center: C64) -> f64 {
        self.vertices
            .iter()
            .map(|v| (v - center).norm())
            .fold(0.0, f64::max)
    }

    /// Support value `max_{x in P} Re(conj(dir) x)`; `-inf` for the empty set.
    pub fn support(&self, dir: C64) -> f64 {
        self.vertices
            .iter()
            .map(|&v| dot(dir, v))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest outward signed distance over the edge lines of a region.
    fn max_edge_excess(&self, p: C64) -> f64 {
        self.edges()
            .map(|(a, b)| -cross(b - a, p - a) / (b - a).norm())
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn boundary_distance(&self, p: C64) -> f64 {
        match self.kind {
            PolygonKind::Empty => f64::INFINITY,
            PolygonKind::Point => (p - self.vertices[0]).norm(),
            _ => self
                .edges()
                .map(|(a, b)| distance_to_segment(p, a, b))
                .fold(f64::INFINITY, f64::min),
        }
    }

    /// Euclidean distance from `p` to the set (0 inside).
    pub fn distance(&self, p: C64) -> f64 {
        if self.kind == PolygonKind::Region && self.max_edge_excess(p) <= 0.0 {
            return 0.0;
        }
        self.boundary_distance(p)
    }

    /// Nearest point of the set to `p` (`None` for the empty set).
    pub fn closest_point(&self, p: C64) -> Option<C64> {
        match self.kind {
            PolygonKind::Empty => None,
            PolygonKind::Point => Some(self.vertices[0]),
            _ => {
                if self.kind == PolygonKind::Region && self.max_edge_excess(p) <= 0.0 {
                    return Some(p);
                }
                self.edges()
                    .map(|(a, b)| closest_on_segment(p, a, b))
                    .min_by(|x, y| (p - x).norm().total_cmp(&(p - y).norm()))
            }
        }
    }

    pub fn locate(&self, p: C64, tol: f64) -> Containment {
        point_in_polygon(p, self, tol)
    }

    pub fn contains(&self, p: C64, tol: f64) -> bool {
        point_in_polygon(p, self, tol) != Containment::Outside
    }

    /// Image under a map that preserves convexity (affine maps).
    pub fn map(&self, f: impl Fn(C64) -> C64) -> Polygon {
        let pts: Vec<C64> = self.vertices.iter().map(|&v| f(v)).collect();
        convex_hull(&pts)
    }
}

/// Counterclockwise convex hull (Andrew's monotone chain).
///
/// Duplicates and interior points are dropped; turns with cross product
/// at most `1e-12` count as collinear, so collinear input collapses to a
/// segment.
pub fn convex_hull(points: &[C64]) -> Polygon {
    let mut pts: Vec<C64> = points
        .iter()
        .copied()
        .filter(|p| p.re.is_finite() && p.im.is_finite())
        .collect();
    if pts.is_empty() {
        return Polygon::empty();
    }
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup_by(|a, b| (*a - *b).norm() <= VERTEX_EPS);
    if pts.len() == 1 {
        return Polygon::point(pts[0]);
    }
    let tol = Tolerances::DEFAULT.collinear;
    let mut hull: Vec<C64> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &C64>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if cross(b - a, p - a) <= tol {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        hull.pop();
    }
    // merge near-coincident neighbours left by the tolerance
    let mut out: Vec<C64> = Vec::with_capacity(hull.len());
    for p in hull {
        if out.last().is_none_or(|q: &C64| (p - q).norm() > VERTEX_EPS) {
            out.push(p);
        }
    }
    while out.len() > 1 && (out[0] - out[out.len() - 1]).norm() <= VERTEX_EPS {
        out.pop();
    }
    match out.len() {
        0 => Polygon::empty(),
        1 => Polygon::point(out[0]),
        2 => Polygon {
            kind: PolygonKind::Segment,
            vertices: out,
        },
        _ => Polygon {
            kind: PolygonKind::Region,
            vertices: out,
        },
    }
}

/// `e^{i theta} { z : Re z <= offset }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    theta: f64,
    offset: f64,
}

impl HalfPlane {
    pub fn new(theta: f64, offset: f64) -> Self {
        Self {
            theta: theta.rem_euclid(std::f64::consts::TAU),
            offset,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// `Re(e^{-i theta} p) - offset`; non-positive inside.
    pub fn excess(&self, p: C64) -> f64 {
        let (s, c) = self.theta.sin_cos();
        c * p.re + s * p.im - self.offset
    }
}

/// Sutherland-Hodgman step: keep the part of the closed vertex loop where
/// `f <= eps`.
fn clip(poly: &[C64], f: impl Fn(C64) -> f64, eps: f64) -> Vec<C64> {
    let n = poly.len();
    if n == 0 {
        return Vec::new();
    }
    let vals: Vec<f64> = poly.iter().map(|&p| f(p)).collect();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        let (fp, fq) = (vals[i], vals[(i + 1) % n]);
        let p_in = fp <= eps;
        let q_in = fq <= eps;
        if p_in {
            out.push(p);
        }
        if p_in != q_in {
            let t = (fp / (fp - fq)).clamp(0.0, 1.0);
            out.push(p + (q - p) * t);
        }
    }
    out
}

/// Intersection of half-planes by clipping a bounding square.
///
/// `bound` is the half-width of the starting square centred at 0; without
/// it, `4 * max(1, max |offset|)` is used. The result is empty exactly
/// when clipping removes every vertex.
pub fn intersect_halfplanes(planes: &[HalfPlane], bound: Option<f64>) -> Polygon {
    let r = bound.unwrap_or_else(|| {
        4.0 * planes
            .iter()
            .map(|h| h.offset.abs())
            .fold(1.0, f64::max)
    });
    let mut poly = vec![
        C64::new(-r, -r),
        C64::new(r, -r),
        C64::new(r, r),
        C64::new(-r, r),
    ];
    let eps = VERTEX_EPS * r.max(1.0);
    for h in planes {
        poly = clip(&poly, |p| h.excess(p), eps);
        if poly.is_empty() {
            return Polygon::empty();
        }
    }
    convex_hull(&poly)
}

/// Outward signed distance to the edge line `a -> b` of a ccw region.
fn edge_excess(a: C64, b: C64, p: C64) -> f64 {
    -cross(b - a, p - a) / (b - a).norm()
}

fn clip_by_region(pts: &[C64], region: &Polygon) -> Vec<C64> {
    let mut cur = pts.to_vec();
    for (a, b) in region.edges() {
        cur = clip(&cur, |p| edge_excess(a, b, p), VERTEX_EPS);
        if cur.is_empty() {
            break;
        }
    }
    cur
}

/// Intersection of two convex polygons (either may be degenerate).
pub fn intersect_polygons(a: &Polygon, b: &Polygon) -> Polygon {
    use PolygonKind::*;
    match (a.kind, b.kind) {
        (Empty, _) | (_, Empty) => Polygon::empty(),
        (_, Region) => convex_hull(&clip_by_region(&a.vertices, b)),
        (Region, _) => convex_hull(&clip_by_region(&b.vertices, a)),
        (Point, _) => {
            if b.distance(a.vertices[0]) <= VERTEX_EPS {
                a.clone()
            } else {
                Polygon::empty()
            }
        }
        (_, Point) => intersect_polygons(b, a),
        (Segment, Segment) => {
            let (p1, p2) = (a.vertices[0], a.vertices[1]);
            let (p3, p4) = (b.vertices[0], b.vertices[1]);
            match segment_intersection(p1, p2, p3, p4) {
                SegmentIntersection::Point(p) => Polygon::point(p),
                SegmentIntersection::Overlap(x, y) => Polygon::segment(x, y),
                _ => Polygon::empty(),
            }
        }
    }
}

/// Intersection of a family of convex polygons by pairwise folding.
pub fn intersect_all<'a>(polys: impl IntoIterator<Item = &'a Polygon>) -> Polygon {
    let mut iter = polys.into_iter();
    let Some(first) = iter.next() else {
        return Polygon::empty();
    };
    let mut acc = first.clone();
    for p in iter {
        acc = intersect_polygons(&acc, p);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentIntersection {
    /// Unique common point.
    Point(C64),
    /// Collinear segments sharing a sub-segment `[from, to]`.
    Overlap(C64, C64),
    /// Parallel with no common point.
    Parallel,
    /// Not parallel and not meeting.
    Disjoint,
}

/// Intersection of the closed segments `[p1, p2]` and `[p3, p4]`.
pub fn segment_intersection(p1: C64, p2: C64, p3: C64, p4: C64) -> SegmentIntersection {
    let eps = VERTEX_EPS;
    let d1 = p2 - p1;
    let d2 = p4 - p3;
    let (l1, l2) = (d1.norm(), d2.norm());
    if l1 == 0.0 || l2 == 0.0 {
        // point-like input
        let (pt, (a, b)) = if l1 == 0.0 { (p1, (p3, p4)) } else { (p3, (p1, p2)) };
        return if distance_to_segment(pt, a, b) <= eps {
            SegmentIntersection::Point(pt)
        } else {
            SegmentIntersection::Disjoint
        };
    }
    let denom = cross(d1, d2);
    let w = p3 - p1;
    if denom.abs() <= eps * l1 * l2 {
        if cross(d1, w).abs() > eps * l1 * l1.max(1.0) {
            return SegmentIntersection::Parallel;
        }
        let t3 = dot(w, d1) / (l1 * l1);
        let t4 = dot(p4 - p1, d1) / (l1 * l1);
        let lo = t3.min(t4).max(0.0);
        let hi = t3.max(t4).min(1.0);
        if lo > hi + eps / l1 {
            return SegmentIntersection::Parallel;
        }
        let (x, y) = (p1 + d1 * lo, p1 + d1 * hi.max(lo));
        return if (x - y).norm() <= eps {
            SegmentIntersection::Point(x)
        } else {
            SegmentIntersection::Overlap(x, y)
        };
    }
    let t = cross(w, d2) / denom;
    let s = cross(w, d1) / denom;
    let te = eps / l1;
    let se = eps / l2;
    if t >= -te && t <= 1.0 + te && s >= -se && s <= 1.0 + se {
        SegmentIntersection::Point(p1 + d1 * t.clamp(0.0, 1.0))
    } else {
        SegmentIntersection::Disjoint
    }
}

/// One-sided and symmetric Hausdorff distances between finite clouds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hausdorff {
    /// `max_{a in A} min_{b in B} |a - b|`.
    pub forward: f64,
    /// `max_{b in B} min_{a in A} |a - b|`.
    pub backward: f64,
    pub distance: f64,
}

/// Directed Hausdorff distance `max_{a in A} min_{b in B} |a - b|`.
pub fn directed_hausdorff(a: &[C64], b: &[C64]) -> f64 {
    a.par_iter()
        .map(|p| b.iter().map(|q| (p - q).norm_sqr()).fold(f64::INFINITY, f64::min))
        .reduce(|| 0.0, f64::max)
        .sqrt()
}

/// Exact Hausdorff distances between two finite samples, O(|A||B|).
pub fn hausdorff(a: &[C64], b: &[C64]) -> Result<Hausdorff> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput);
    }
    let forward = directed_hausdorff(a, b);
    let backward = directed_hausdorff(b, a);
    Ok(Hausdorff {
        forward,
        backward,
        distance: forward.max(backward),
    })
}

/// Hausdorff distance between convex polygons (directed parts attained at
/// vertices). Empty vs empty is 0, empty vs non-empty is infinite.
pub fn polygon_hausdorff(a: &Polygon, b: &Polygon) -> Hausdorff {
    let directed = |x: &Polygon, y: &Polygon| -> f64 {
        match (x.is_empty(), y.is_empty()) {
            (true, _) => 0.0,
            (false, true) => f64::INFINITY,
            _ => x.vertices.iter().map(|&v| y.distance(v)).fold(0.0, f64::max),
        }
    };
    let (forward, backward) = if a.is_empty() && b.is_empty() {
        (0.0, 0.0)
    } else if a.is_empty() || b.is_empty() {
        (f64::INFINITY, f64::INFINITY)
    } else {
        (directed(a, b), directed(b, a))
    };
    Hausdorff {
        forward,
        backward,
        distance: forward.max(backward),
    }
}

/// Euclidean distance between two convex polygons (0 when they meet).
pub fn polygon_distance(a: &Polygon, b: &Polygon) -> f64 {
    if a.is_empty() || b.is_empty() {
        return f64::INFINITY;
    }
    let d = a
        .vertices
        .iter()
        .map(|&v| b.distance(v))
        .chain(b.vertices.iter().map(|&v| a.distance(v)))
        .fold(f64::INFINITY, f64::min);
    if d == 0.0 {
        return 0.0;
    }
    for (p1, p2) in a.edges() {
        for (p3, p4) in b.edges() {
            if matches!(
                segment_intersection(p1, p2, p3, p4),
                SegmentIntersection::Point(_) | SegmentIntersection::Overlap(..)
            ) {
                return 0.0;
            }
        }
    }
    d
}

/// Convex containment with a boundary band of width `tol`.
pub fn point_in_polygon(p: C64, poly: &Polygon, tol: f64) -> Containment {
    match poly.kind {
        PolygonKind::Empty => Containment::Outside,
        PolygonKind::Point | PolygonKind::Segment => {
            if poly.boundary_distance(p) <= tol {
                Containment::Boundary
            } else {
                Containment::Outside
            }
        }
        PolygonKind::Region => {
            let excess = poly.max_edge_excess(p);
            if excess < -tol {
                Containment::Inside
            } else if excess <= 0.0 || poly.boundary_distance(p) <= tol {
                Containment::Boundary
            } else {
                Containment::Outside
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn roots(n: usize) -> Vec<C64> {
        (0..n)
            .map(|j| C64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64))
            .collect()
    }

    fn same_vertex_set(a: &Polygon, b: &Polygon, tol: f64) -> bool {
        a.vertices().len() == b.vertices().len()
            && a
                .vertices()
                .iter()
                .all(|v| b.vertices().iter().any(|w| (v - w).norm() <= tol))
    }

    #[test]
    fn hull_drops_interior_point() {
        let h = convex_hull(&[c(0., 0.), c(1., 0.), c(0., 1.), c(1., 1.), c(0.5, 0.5)]);
        assert_eq!(h.kind(), PolygonKind::Region);
        assert_eq!(h.vertices().len(), 4);
        assert!((h.area() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hull_of_collinear_is_segment() {
        let h = convex_hull(&[c(0., 0.), c(1., 0.), c(2., 0.)]);
        assert_eq!(h.kind(), PolygonKind::Segment);
        assert!(same_vertex_set(&h, &Polygon::segment(c(0., 0.), c(2., 0.)), 0.0));
    }

    #[test]
    fn hull_of_pentagon_area() {
        let h = convex_hull(&roots(5));
        let expected = 2.5 * (2.0 * PI / 5.0).sin();
        assert!((h.area() - expected).abs() < 1e-14);
    }

    #[test]
    fn hull_of_nothing_is_empty() {
        assert!(convex_hull(&[]).is_empty());
    }

    #[test]
    fn halfplanes_unit_square() {
        let planes = [
            HalfPlane::new(0.0, 1.0),
            HalfPlane::new(PI, 0.0),
            HalfPlane::new(PI / 2.0, 1.0),
            HalfPlane::new(3.0 * PI / 2.0, 0.0),
        ];
        let sq = intersect_halfplanes(&planes, None);
        let expected = convex_hull(&[c(0., 0.), c(1., 0.), c(1., 1.), c(0., 1.)]);
        assert!(same_vertex_set(&sq, &expected, 1e-12));
    }

    #[test]
    fn halfplanes_with_empty_intersection() {
        // Re z <= 0, Re z >= 1 (as -Re z <= -1), Im z <= 5
        let planes = [
            HalfPlane::new(0.0, 0.0),
            HalfPlane::new(PI, -1.0),
            HalfPlane::new(PI / 2.0, 5.0),
        ];
        assert!(intersect_halfplanes(&planes, None).is_empty());
    }

    #[test]
    fn halfplanes_of_disk_approach_pi() {
        let n = 4096;
        let planes: Vec<HalfPlane> = (0..n)
            .map(|j| HalfPlane::new(2.0 * PI * j as f64 / n as f64, 1.0))
            .collect();
        let p = intersect_halfplanes(&planes, None);
        // circumscribed 4096-gon exceeds pi by ~ pi^3 / (3 n^2)
        assert!((p.area() - PI).abs() <= 1e-5, "area {}", p.area());
    }

    #[test]
    fn polygon_intersections() {
        let sq = convex_hull(&[c(0., 0.), c(1., 0.), c(1., 1.), c(0., 1.)]);
        let shifted = sq.map(|z| z + c(0.5, 0.5));
        let i = intersect_polygons(&sq, &shifted);
        assert!((i.area() - 0.25).abs() < 1e-14);

        let t1 = convex_hull(&[c(0., 0.), c(1., 0.), c(0., 1.)]);
        let t2 = t1.map(|z| z + c(3., 0.));
        assert!(intersect_polygons(&t1, &t2).is_empty());
    }

    #[test]
    fn hexagram_core_vertices_are_chord_intersections() {
        let z = roots(6);
        let odd = convex_hull(&[z[0], z[2], z[4]]);
        let even = convex_hull(&[z[1], z[3], z[5]]);
        let core = intersect_polygons(&odd, &even);
        assert_eq!(core.vertices().len(), 6);
        // oracle: every side of one triangle meets two sides of the other
        let mut expected = Vec::new();
        for (a, b) in odd.edges() {
            for (p, q) in even.edges() {
                if let SegmentIntersection::Point(x) = segment_intersection(a, b, p, q) {
                    expected.push(x);
                }
            }
        }
        let oracle = convex_hull(&expected);
        assert!(same_vertex_set(&core, &oracle, 1e-12));
        for v in core.vertices() {
            assert!((v.norm() - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn segment_cases() {
        assert_eq!(
            segment_intersection(c(-1., 0.), c(1., 0.), c(0., -1.), c(0., 1.)),
            SegmentIntersection::Point(c(0., 0.))
        );
        assert_eq!(
            segment_intersection(c(0., 0.), c(1., 0.), c(0., 1.), c(1., 1.)),
            SegmentIntersection::Parallel
        );
        match segment_intersection(c(0., 0.), c(2., 0.), c(1., 0.), c(3., 0.)) {
            SegmentIntersection::Overlap(a, b) => {
                assert!((a - c(1., 0.)).norm() < 1e-15 && (b - c(2., 0.)).norm() < 1e-15)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pentagon_chords_meet_at_inverse_golden_square() {
        let z = roots(5);
        let SegmentIntersection::Point(p) = segment_intersection(z[0], z[2], z[1], z[4]) else {
            panic!("chords must cross");
        };
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((p.norm() - 1.0 / (phi * phi)).abs() < 1e-12);
        assert!((p.norm() - 0.381_966_0).abs() < 1e-7);
    }

    #[test]
    fn hausdorff_cases() {
        let a = [c(0., 0.), c(1., 1.)];
        let h = hausdorff(&a, &a).unwrap();
        assert_eq!((h.forward, h.backward, h.distance), (0.0, 0.0, 0.0));

        let h = hausdorff(&[c(0., 0.)], &[c(3., 0.), c(0., 4.)]).unwrap();
        assert_eq!((h.forward, h.backward, h.distance), (3.0, 4.0, 4.0));

        assert!(matches!(hausdorff(&[], &a), Err(Error::EmptyInput)));
    }

    #[test]
    fn hausdorff_against_segment_discretization() {
        // [z_3, z_4] for the fourth roots: [-1, -i]
        let (p, q) = (c(-1., 0.), c(0., -1.));
        let m = 1000;
        let grid: Vec<C64> = (0..=m).map(|i| p + (q - p) * (i as f64 / m as f64)).collect();
        let cloud: Vec<C64> = (0..357).map(|i| p + (q - p) * ((i as f64 * 0.618_034) % 1.0)).collect();
        let h = hausdorff(&cloud, &grid).unwrap();
        let spacing = (q - p).norm() / m as f64;
        assert!(h.forward <= spacing / 2.0 + 1e-12);
    }

    #[test]
    fn containment() {
        let pent = convex_hull(&roots(5));
        assert_eq!(point_in_polygon(c(0., 0.), &pent, 1e-9), Containment::Inside);
        assert_eq!(point_in_polygon(roots(5)[1], &pent, 1e-9), Containment::Boundary);
        assert_eq!(point_in_polygon(roots(5)[1] * 1.01, &pent, 1e-9), Containment::Outside);
    }

    #[test]
    fn polygon_distance_detects_crossing_segments() {
        let a = Polygon::segment(c(-1., 0.), c(1., 0.));
        let b = Polygon::segment(c(0., -1.), c(0., 1.));
        assert_eq!(polygon_distance(&a, &b), 0.0);
        let far = Polygon::segment(c(0., 2.), c(0., 3.));
        assert!((polygon_distance(&a, &far) - 2.0).abs() < 1e-15);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;
        use rand::seq::SliceRandom;

        fn cloud() -> impl Strategy<Value = Vec<C64>> {
            prop::collection::vec((-3.0f64..3.0, -3.0f64..3.0), 1..24)
                .prop_map(|v| v.into_iter().map(|(x, y)| C64::new(x, y)).collect())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn hull_is_idempotent(pts in cloud()) {
                let h = convex_hull(&pts);
                let h2 = convex_hull(h.vertices());
                prop_assert!(same_vertex_set(&h, &h2, 0.0));
            }

            #[test]
            fn intersection_lies_in_both(a in cloud(), b in cloud()) {
                let (pa, pb) = (convex_hull(&a), convex_hull(&b));
                let i = intersect_polygons(&pa, &pb);
                for &v in i.vertices() {
                    prop_assert!(pa.contains(v, 1e-9) && pb.contains(v, 1e-9));
                }
                let j = intersect_polygons(&pb, &pa);
                prop_assert_eq!(i.is_empty(), j.is_empty());
                if !i.is_empty() {
                    prop_assert!(polygon_hausdorff(&i, &j).distance <= 1e-12);
                }
            }

            #[test]
            fn hausdorff_is_a_metric(a in cloud(), b in cloud(), cc in cloud()) {
                let ab = hausdorff(&a, &b).unwrap();
                let ba = hausdorff(&b, &a).unwrap();
                prop_assert_eq!(ab.distance, ba.distance);
                let ac = hausdorff(&a, &cc).unwrap().distance;
                let bc = hausdorff(&b, &cc).unwrap().distance;
                prop_assert!(ac <= ab.distance + bc + 1e-12);
            }

            #[test]
            fn halfplane_order_does_not_matter(seed in any::<u64>(), thetas in prop::collection::vec((0.0f64..std::f64::consts::TAU, 0.2f64..2.0), 3..40)) {
                let planes: Vec<HalfPlane> = thetas.iter().map(|&(t, o)| HalfPlane::new(t, o)).collect();
                let mut shuffled = planes.clone();
                shuffled.shuffle(&mut crate::rng::seeded(seed));
                let p = intersect_halfplanes(&planes, Some(10.0));
                let q = intersect_halfplanes(&shuffled, Some(10.0));
                prop_assert!(polygon_hausdorff(&p, &q).distance <= 1e-9);
            }
        }
    }
}
