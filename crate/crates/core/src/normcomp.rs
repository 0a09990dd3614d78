//! Constructing and checking normal compressions.
//!
//! A `k x k` matrix `C` is a compression of `M` when `C = F* M F` for some
//! `N x k` frame `F`. This module builds explicit frames for diagonal
//! targets (block partitions, interlacing spectra, rank-2 pairs in
//! `Lambda_2`) and checks the convex-hull necessary condition.

use serde::{Deserialize, Serialize};

use crate::bset::starfish;
use crate::hrnr::{for_each_subset, lambda_k_normal, SUBSET_LIMIT};
use crate::numkit::{compress, hermitian_eigenvalues, orthonormal_complement_basis, ComplexMatrix, Frame};
use crate::planegeom::{convex_hull, dot, polygon_distance};
use crate::{Error, Result, Spectrum, Tolerances, C64};

/// Residual bound for partition witnesses.
pub const PARTITION_TOL: f64 = 1e-10;
/// Residual bound for rank-2 witnesses.
pub const WITNESS_TOL: f64 = 1e-9;
/// Spectral agreement for interlacing constructions.
pub const INTERLACING_TOL: f64 = 1e-8;
/// Residual bound for the collinearity test.
pub const COLLINEAR_TOL: f64 = 1e-9;
/// Points closer than this count as shared.
pub const SHARED_TOL: f64 = 1e-10;

const NEWTON_ITERS: usize = 200;
const EXHAUSTIVE_LIMIT: usize = 16;

/// `||F* M F - C||_F`.
pub fn compression_residual(m: &ComplexMatrix, f: &Frame, expected: &ComplexMatrix) -> Result<f64> {
    let c = compress(m, f)?;
    if c.n() != expected.n() {
        return Err(Error::DimensionMismatch {
            expected: expected.n(),
            found: c.n(),
        });
    }
    Ok(c.sub(expected).frobenius_norm())
}

/// Returns the residual, or a verification error if it exceeds `tol`.
pub fn verify_compression(m: &ComplexMatrix, f: &Frame, expected: &ComplexMatrix, tol: f64) -> Result<f64> {
    let residual = compression_residual(m, f, expected)?;
    if residual > tol || residual.is_nan() {
        return Err(Error::Verification {
            what: "compression".into(),
            residual,
            tol,
        });
    }
    Ok(residual)
}

fn solve3(a: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let mut m = [[0.0; 4]; 3];
    for i in 0..3 {
        m[i][..3].copy_from_slice(&a[i]);
        m[i][3] = b[i];
    }
    for col in 0..3 {
        let piv = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        for row in 0..3 {
            if row != col {
                let f = m[row][col] / m[col][col];
                for c in col..4 {
                    m[row][c] -= f * m[col][c];
                }
            }
        }
    }
    Some([m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]])
}

/// Minimum-norm nonnegative barycentric coordinates of `p` with respect to
/// `points`: minimises `||t||` subject to `t >= 0`, `sum t = 1`,
/// `sum t_j points_j = p`.
///
/// A `p` within `1e-9` of the hull is first moved to its nearest hull
/// point. Three or more points are handled by semismooth Newton on the
/// dual, where `t = max(0, A^T lambda)` for `lambda in R^3`.
pub fn min_norm_barycentric(points: &[C64], p: C64) -> Result<Vec<f64>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let hull = convex_hull(points);
    let dist = hull.distance(p);
    if dist > Tolerances::DEFAULT.geometry {
        return Err(Error::OutsideHull { distance: dist });
    }
    let p = if dist > 0.0 { hull.closest_point(p).unwrap_or(p) } else { p };
    let m = points.len();
    if m == 1 {
        return Ok(vec![1.0]);
    }
    if m == 2 {
        let d = points[1] - points[0];
        let len2 = d.norm_sqr();
        if len2 == 0.0 {
            return Ok(vec![0.5, 0.5]);
        }
        let s = (dot(p - points[0], d) / len2).clamp(0.0, 1.0);
        return Ok(vec![1.0 - s, s]);
    }
    let cols: Vec<[f64; 3]> = points.iter().map(|z| [1.0, z.re - p.re, z.im - p.im]).collect();
    let b = [1.0, 0.0, 0.0];
    let primal = |lam: &[f64; 3]| -> Vec<f64> {
        cols.iter()
            .map(|a| (a[0] * lam[0] + a[1] * lam[1] + a[2] * lam[2]).max(0.0))
            .collect()
    };
    let residual = |t: &[f64]| -> [f64; 3] {
        let mut r = b;
        for (a, &t) in cols.iter().zip(t) {
            for i in 0..3 {
                r[i] -= a[i] * t;
            }
        }
        r
    };
    let dual = |lam: &[f64; 3]| -> f64 {
        let t = primal(lam);
        lam[0] - 0.5 * t.iter().map(|x| x * x).sum::<f64>()
    };
    let scale = cols.iter().map(|a| a[1] * a[1] + a[2] * a[2]).fold(1.0, f64::max);
    let mut lam = [1.0 / m as f64, 0.0, 0.0];
    for _ in 0..NEWTON_ITERS {
        let t = primal(&lam);
        let r = residual(&t);
        let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
        if rn <= 1e-15 {
            break;
        }
        let mut h = [[0.0; 3]; 3];
        for (a, &tj) in cols.iter().zip(&t) {
            if tj > 0.0 {
                for i in 0..3 {
                    for j in 0..3 {
                        h[i][j] += a[i] * a[j];
                    }
                }
            }
        }
        for (i, row) in h.iter_mut().enumerate() {
            row[i] += 1e-14 * scale;
        }
        let Some(d) = solve3(h, r) else { break };
        let g0 = dual(&lam);
        let slope = r[0] * d[0] + r[1] * d[1] + r[2] * d[2];
        let mut alpha = 1.0;
        loop {
            let trial = [lam[0] + alpha * d[0], lam[1] + alpha * d[1], lam[2] + alpha * d[2]];
            if dual(&trial) >= g0 + 1e-4 * alpha * slope || alpha < 1e-12 {
                lam = trial;
                break;
            }
            alpha *= 0.5;
        }
    }
    let t = primal(&lam);
    let r = residual(&t);
    let rn = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if rn > 1e-12 {
        return Err(Error::Verification {
            what: "barycentric coordinates".into(),
            residual: rn,
            tol: 1e-12,
        });
    }
    let sum: f64 = t.iter().sum();
    Ok(t.into_iter().map(|x| x / sum).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionWitness {
    pub partition: Vec<Vec<usize>>,
    /// `weights[i][m]` belongs to `partition[i][m]`.
    pub weights: Vec<Vec<f64>>,
    pub frame: Frame,
    pub compression: ComplexMatrix,
    pub residual: f64,
}

fn check_partition(n: usize, partition: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; n];
    for block in partition {
        if block.is_empty() {
            return Err(Error::InvalidInput("empty block in partition".into()));
        }
        for &j in block {
            if j >= n {
                return Err(Error::InvalidInput(format!("index {j} out of range for N = {n}")));
            }
            if seen[j] {
                return Err(Error::InvalidInput(format!("index {j} appears in two blocks")));
            }
            seen[j] = true;
        }
    }
    if let Some(j) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidInput(format!("index {j} is not covered by the partition")));
    }
    Ok(())
}

/// Frame with columns `w_i = sum_{j in J_i} sqrt(t_ij) e_j`, compressing
/// `diag(z)` to `diag(c)` when each `c_i` lies in the hull of its block.
pub fn construct_partition_compression(
    z: &Spectrum,
    partition: &[Vec<usize>],
    targets: &[C64],
) -> Result<PartitionWitness> {
    let n = z.len();
    if targets.len() != partition.len() {
        return Err(Error::DimensionMismatch {
            expected: partition.len(),
            found: targets.len(),
        });
    }
    check_partition(n, partition)?;
    let v = z.values();
    let mut weights = Vec::with_capacity(partition.len());
    let mut columns = Vec::with_capacity(partition.len());
    for (i, (block, &c)) in partition.iter().zip(targets).enumerate() {
        let pts: Vec<C64> = block.iter().map(|&j| v[j]).collect();
        let t = min_norm_barycentric(&pts, c).map_err(|e| match e {
            Error::OutsideHull { distance } => Error::BlockMembership { block: i, distance },
            other => other,
        })?;
        let mut col = vec![C64::new(0.0, 0.0); n];
        for (&j, &tj) in block.iter().zip(&t) {
            col[j] = C64::new(tj.sqrt(), 0.0);
        }
        weights.push(t);
        columns.push(col);
    }
    let frame = Frame::new(n, columns)?;
    let compression = ComplexMatrix::from_diag(targets);
    let residual = verify_compression(&z.matrix(), &frame, &compression, PARTITION_TOL)?;
    Ok(PartitionWitness {
        partition: partition.to_vec(),
        weights,
        frame,
        compression,
        residual,
    })
}

fn check_sorted(x: &[f64]) -> Result<()> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput("non-finite value".into()));
    }
    if x.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::NotSorted);
    }
    Ok(())
}

/// `a_j <= b_j <= a_{N-k+j}` for all `j`, up to `1e-12`.
pub fn interlacing_check(a: &[f64], b: &[f64]) -> Result<bool> {
    let (n, k) = (a.len(), b.len());
    if k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    check_sorted(a)?;
    check_sorted(b)?;
    let tol = Tolerances::DEFAULT.eigen_compare;
    Ok((0..k).all(|j| a[j] - tol <= b[j] && b[j] <= a[n - k + j] + tol))
}

/// `(N-1)`-frame whose compression of `diag(a)` has spectrum `b`, for
/// strictly interlacing `a_1 < b_1 < a_2 < ... < b_{N-1} < a_N`.
///
/// The frame spans the complement of the unit vector `v` with
/// `|v_j|^2 = prod_i (b_i - a_j) / prod_{i != j} (a_i - a_j)`.
pub fn construct_interlacing_compression(a: &[f64], b: &[f64]) -> Result<Frame> {
    let n = a.len();
    if n < 2 || b.len() + 1 != n {
        return Err(Error::DimensionMismatch {
            expected: n.saturating_sub(1),
            found: b.len(),
        });
    }
    check_sorted(a)?;
    check_sorted(b)?;
    for j in 0..n - 1 {
        if !(a[j] < b[j]) {
            return Err(Error::NotStrictlyInterlacing { index: 2 * j });
        }
        if !(b[j] < a[j + 1]) {
            return Err(Error::NotStrictlyInterlacing { index: 2 * j + 1 });
        }
    }
    let mut v: Vec<f64> = (0..n)
        .map(|j| {
            let num: f64 = b.iter().map(|bi| bi - a[j]).product();
            let den: f64 = (0..n).filter(|&i| i != j).map(|i| a[i] - a[j]).product();
            num / den
        })
        .collect();
    let total: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x = (*x / total).sqrt());
    let v: Vec<C64> = v.into_iter().map(|x| C64::new(x, 0.0)).collect();
    let frame = orthonormal_complement_basis(n, &[v])?;
    let c = compress(&ComplexMatrix::from_real_diag(a), &frame)?;
    let eig = hermitian_eigenvalues(&c)?;
    let residual = eig.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    if residual > INTERLACING_TOL {
        return Err(Error::Verification {
            what: "compression spectrum".into(),
            residual,
            tol: INTERLACING_TOL,
        });
    }
    Ok(frame)
}

/// Whether the `z` and `c` points all lie on one line and alternate
/// `z, c, z, ..., c, z` along it. The two lists must share no point.
pub fn fanpall_collinear_alternating(z: &[C64], c: &[C64]) -> Result<bool> {
    for (zi, zv) in z.iter().enumerate() {
        for (ci, cv) in c.iter().enumerate() {
            if (zv - cv).norm() <= SHARED_TOL {
                return Err(Error::SharedElement {
                    z_index: zi,
                    c_index: ci,
                });
            }
        }
    }
    if c.len() + 1 != z.len() {
        return Ok(false);
    }
    let all: Vec<(C64, bool)> = z.iter().map(|&p| (p, true)).chain(c.iter().map(|&p| (p, false))).collect();
    let mean = all.iter().map(|(p, _)| p).sum::<C64>() / all.len() as f64;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (p, _) in &all {
        let d = p - mean;
        sxx += d.re * d.re;
        sxy += d.re * d.im;
        syy += d.im * d.im;
    }
    let angle = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    let dir = C64::from_polar(1.0, angle);
    let normal = dir * C64::i();
    if all.iter().any(|(p, _)| dot(p - mean, normal).abs() > COLLINEAR_TOL) {
        return Ok(false);
    }
    let mut along: Vec<(f64, bool)> = all.iter().map(|(p, is_z)| (dot(p - mean, dir), *is_z)).collect();
    along.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(along.iter().enumerate().all(|(i, (_, is_z))| *is_z == (i % 2 == 0)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NecessaryReport {
    pub holds: bool,
    /// First `J` (0-based, lexicographic) whose hull misses `conv{c}`.
    pub violated: Option<Vec<usize>>,
    /// Distance between `conv{c}` and that hull.
    pub gap: f64,
}

/// Checks `conv{c} ∩ conv{z_j : j in J} != ∅` for every `|J| = N - k + 1`,
/// with tolerance `1e-9`.
pub fn necessary_condition_check(c: &[C64], z: &Spectrum) -> Result<NecessaryReport> {
    let (n, k) = (z.len(), c.len());
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    if n > SUBSET_LIMIT {
        return Err(Error::BudgetExceeded {
            n,
            limit: SUBSET_LIMIT,
        });
    }
    let hc = convex_hull(c);
    let v = z.values();
    let mut report = NecessaryReport {
        holds: true,
        violated: None,
        gap: 0.0,
    };
    for_each_subset(n, n - k + 1, |idx| {
        let pts: Vec<C64> = idx.iter().map(|&j| v[j]).collect();
        let d = polygon_distance(&hc, &convex_hull(&pts));
        if d > Tolerances::DEFAULT.geometry {
            report = NecessaryReport {
                holds: false,
                violated: Some(idx.to_vec()),
                gap: d,
            };
            return false;
        }
        true
    });
    Ok(report)
}

/// How a rank-2 witness was built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum WitnessRoute {
    /// `a` from the hull of `blocks[0]`, `b` from `blocks[1]`.
    Partition { blocks: [Vec<usize>; 2] },
    /// `b = s b(r) + (1 - s) z_k` in wedge `k` of the starfish about
    /// `base`; `swapped` when the starfish was built about `b`.
    Wedge {
        wedge: usize,
        r: f64,
        s: f64,
        swapped: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Rank2Witness {
    pub a: C64,
    pub b: C64,
    /// Columns `(u, w)` with `F* diag(z) F = diag(a, b)`.
    pub frame: Frame,
    pub route: WitnessRoute,
    pub residual: f64,
}

impl Rank2Witness {
    /// The witness for `(b, a)` obtained by swapping the columns.
    pub fn swapped(&self) -> Self {
        let mut frame = self.frame.clone();
        frame.swap_columns(0, 1);
        Self {
            a: self.b,
            b: self.a,
            frame,
            route: self.route.clone(),
            residual: self.residual,
        }
    }
}

fn wedge_frame(z: &Spectrum, a: C64, b: C64) -> Result<(Frame, usize, f64, f64)> {
    let sf = starfish(z, a)?;
    let Some(wp) = sf.locate(b, 1e-10) else {
        return Err(Error::WedgeDecomposition {
            distances: sf.wedges().iter().map(|w| w.distance(b)).collect(),
        });
    };
    let wedge = &sf.wedges()[wp.wedge];
    let curve = wedge.curve();
    let labels = curve.labels();
    let t = curve.fiber_point(wp.r);
    let dir = curve.null_direction(wp.r);
    let n = z.len();
    let mut u = vec![C64::new(0.0, 0.0); n];
    let mut w = vec![C64::new(0.0, 0.0); n];
    for m in 0..4 {
        u[labels[m]] = C64::new(t[m].max(0.0).sqrt(), 0.0);
        w[labels[m]] = C64::new(wp.s.sqrt() * dir[m], 0.0);
    }
    w[wedge.index()] = C64::new((1.0 - wp.s).sqrt(), 0.0);
    Ok((Frame::new(n, vec![u, w])?, wp.wedge, wp.r, wp.s))
}

fn parity_partitions(n: usize) -> Vec<[Vec<usize>; 2]> {
    let mut out = Vec::new();
    let shifts = if n.is_multiple_of(2) { 2 } else { n };
    for s in 0..shifts {
        let first: Vec<usize> = (0..n.div_ceil(2)).map(|i| (s + 2 * i) % n).collect();
        let mut first_sorted = first.clone();
        first_sorted.sort_unstable();
        let second: Vec<usize> = (0..n).filter(|j| !first.contains(j)).collect();
        out.push([first_sorted.clone(), second.clone()]);
        out.push([second, first_sorted]);
    }
    out
}

fn bipartitions(n: usize) -> impl Iterator<Item = [Vec<usize>; 2]> {
    (1u32..(1u32 << n) - 1).map(move |mask| {
        let first = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        let second = (0..n).filter(|&j| mask >> j & 1 == 0).collect();
        [first, second]
    })
}

fn partition_route(z: &Spectrum, a: C64, b: C64) -> Result<Option<PartitionWitness>> {
    let n = z.len();
    let v = z.values();
    let hull_distance = |block: &[usize], p: C64| {
        let pts: Vec<C64> = block.iter().map(|&j| v[j]).collect();
        convex_hull(&pts).distance(p)
    };
    let fits = |blocks: &[Vec<usize>; 2], tol: f64| {
        hull_distance(&blocks[0], a) <= tol && hull_distance(&blocks[1], b) <= tol
    };
    let mut candidates = parity_partitions(n);
    if n <= EXHAUSTIVE_LIMIT {
        candidates.extend(bipartitions(n));
    }
    for tol in [0.0, Tolerances::DEFAULT.geometry] {
        if let Some(blocks) = candidates.iter().find(|p| fits(p, tol)) {
            return construct_partition_compression(z, blocks, &[a, b]).map(Some);
        }
    }
    Ok(None)
}

/// A frame `(u, w)` with `F* diag(z) F = diag(a, b)` for `a, b` in
/// `Lambda_2`, for distinct eigenvalues that are all extreme points of
/// their hull, labelled counterclockwise.
///
/// For `N = 5` the pair is placed in a wedge of the starfish about `a` (or
/// about `b`, then swapped). Otherwise, and as a fallback, a two-block
/// partition is searched: alternating blocks first, then all
/// bipartitions for `N <= 16`.
pub fn construct_rank2_witness(z: &Spectrum, a: C64, b: C64) -> Result<Rank2Witness> {
    let n = z.len();
    z.check_convex_ccw(Tolerances::DEFAULT.collinear)?;
    if n > SUBSET_LIMIT {
        return Err(Error::BudgetExceeded {
            n,
            limit: SUBSET_LIMIT,
        });
    }
    let lambda2 = lambda_k_normal(z, 2)?;
    for (which, p) in [("a", a), ("b", b)] {
        let d = if lambda2.is_empty() { f64::INFINITY } else { lambda2.distance(p) };
        if d > Tolerances::DEFAULT.geometry {
            return Err(Error::NotInLambda2 { which, distance: d });
        }
    }
    let m = z.matrix();
    let expected = ComplexMatrix::from_diag(&[a, b]);
    let mut wedge_error = None;
    if n == 5 {
        let direct = wedge_frame(z, a, b).map(|(f, k, r, s)| (f, k, r, s, false));
        let attempt = direct.or_else(|e| {
            wedge_error = Some(e);
            wedge_frame(z, b, a).map(|(mut f, k, r, s)| {
                f.swap_columns(0, 1);
                (f, k, r, s, true)
            })
        });
        if let Ok((frame, wedge, r, s, swapped)) = attempt {
            let residual = verify_compression(&m, &frame, &expected, WITNESS_TOL)?;
            return Ok(Rank2Witness {
                a,
                b,
                frame,
                route: WitnessRoute::Wedge { wedge, r, s, swapped },
                residual,
            });
        }
    }
    match partition_route(z, a, b)? {
        Some(pw) => {
            let residual = verify_compression(&m, &pw.frame, &expected, WITNESS_TOL)?;
            let mut blocks = pw.partition.into_iter();
            let blocks = [blocks.next().unwrap_or_default(), blocks.next().unwrap_or_default()];
            Ok(Rank2Witness {
                a,
                b,
                frame: pw.frame,
                route: WitnessRoute::Partition { blocks },
                residual,
            })
        }
        None => Err(wedge_error.unwrap_or(Error::WedgeDecomposition { distances: vec![] })),
    }
}
