//! Dense complex linear algebra for small matrices (n <= 64).
//!
//! Everything here is self-contained: a cyclic complex Jacobi eigensolver for
//! Hermitian matrices, pivoted Gram-Schmidt for orthogonal complements, Haar
//! random frames via Gaussian QR, and compression `F* M F`.

use std::ops::{Index, IndexMut};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rng::complex_gaussian;
use crate::{Error, Result, Tolerances, C64};

pub const MAX_DIM: usize = 64;
const MAX_SWEEPS: usize = 100;

/// Inner product `(x, y) = sum_j x_j conj(y_j)`, linear in the first slot.
pub fn inner(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

pub fn norm(x: &[C64]) -> f64 {
    x.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn new(n: usize, data: Vec<C64>) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidInput(format!(
                "matrix dimension {n} outside 1..={MAX_DIM}"
            )));
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        if data.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite matrix entry".into()));
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![C64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diag(&vec![C64::new(1.0, 0.0); n])
    }

    pub fn from_diag(d: &[C64]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn from_real_diag(d: &[f64]) -> Self {
        let d: Vec<C64> = d.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::from_diag(&d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        self.data.chunks(self.n).map(<[C64]>::to_vec).collect()
    }

    pub fn diag(&self) -> Vec<C64> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matmul dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self[(i, l)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[l * n + j];
                }
            }
        }
        out
    }

    /// `alpha * I + beta * self`.
    pub fn affine(&self, alpha: C64, beta: C64) -> Self {
        let mut out = self.clone();
        out.data.iter_mut().for_each(|x| *x *= beta);
        for i in 0..self.n {
            out[(i, i)] += alpha;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "sub dimension mismatch");
        Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        norm(&self.data)
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn mul_vec(&self, x: &[C64]) -> Vec<C64> {
        self.data
            .chunks(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `||M - M*||_F`.
    pub fn hermitian_defect(&self) -> f64 {
        self.sub(&self.adjoint()).frobenius_norm()
    }

    /// `||MM* - M*M||_F`.
    pub fn normal_defect(&self) -> f64 {
        let adj = self.adjoint();
        self.matmul(&adj).sub(&adj.matmul(self)).frobenius_norm()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }

    pub fn is_normal(&self, tol: f64) -> bool {
        self.normal_defect() <= tol
    }

    /// `Re(e^{i theta} M) = (e^{i theta} M + e^{-i theta} M*) / 2`, exactly Hermitian.
    pub fn rotated_real_part(&self, theta: f64) -> Self {
        let n = self.n;
        let ph = C64::from_polar(1.0, theta);
        let mut out = Self::zeros(n);
        for i in 0..n {
            out[(i, i)] = C64::new((ph * self[(i, i)]).re, 0.0);
            for j in (i + 1)..n {
                let v = (ph * self[(i, j)] + (ph * self[(j, i)]).conj()) * 0.5;
                out[(i, j)] = v;
                out[(j, i)] = v.conj();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

/// `k` orthonormal columns in `C^n` spanning a compression subspace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    n: usize,
    columns: Vec<Vec<C64>>,
}

impl Frame {
    /// Builds a frame, rejecting columns that are not orthonormal to
    /// `Tolerances::DEFAULT.orthonormality`.
    pub fn new(n: usize, columns: Vec<Vec<C64>>) -> Result<Self> {
        if let Some(c) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.len(),
            });
        }
        let f = Self { n, columns };
        let defect = f.orthonormality_defect();
        let tol = Tolerances::DEFAULT.orthonormality;
        if defect > tol {
            return Err(Error::Verification {
                what: "frame orthonormality".into(),
                residual: defect,
                tol,
            });
        }
        Ok(f)
    }

    pub(crate) fn from_columns_unchecked(n: usize, columns: Vec<Vec<C64>>) -> Self {
        Self { n, columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<C64>] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &[C64] {
        &self.columns[i]
    }

    pub fn into_columns(self) -> Vec<Vec<C64>> {
        self.columns
    }

    pub fn swap_columns(&mut self, i: usize, j: usize) {
        self.columns.swap(i, j);
    }

    /// `||F*F - I_k||_F`.
    pub fn orthonormality_defect(&self) -> f64 {
        let k = self.k();
        let mut acc = 0.0;
        for i in 0..k {
            for j in 0..k {
                let g = inner(&self.columns[j], &self.columns[i]);
                let target = if i == j { 1.0 } else { 0.0 };
                acc += (g - target).norm_sqr();
            }
        }
        acc.sqrt()
    }
}

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic complex Jacobi: each pivot is first made real by a diagonal phase,
/// then annihilated by a real plane rotation. Sweeps continue until the
/// off-diagonal Frobenius norm is below `1e-13 * max(1, ||H||_F)`.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let mut a = symmetrised(h)?;
    let n = a.n();
    jacobi_in_place(&mut a, None);
    let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

fn symmetrised(h: &ComplexMatrix) -> Result<ComplexMatrix> {
    let defect = h.hermitian_defect();
    if defect > Tolerances::DEFAULT.hermitian {
        return Err(Error::NotHermitian { defect });
    }
    let n = h.n();
    let mut a = h.clone();
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let v = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = v;
            a[(j, i)] = v.conj();
        }
    }
    Ok(a)
}

/// Eigenvalues (ascending) and matching orthonormal eigenvectors of a
/// Hermitian matrix.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<(Vec<f64>, Vec<Vec<C64>>)> {
    let mut a = symmetrised(h)?;
    let n = a.n();
    let mut v = ComplexMatrix::identity(n);
    jacobi_in_place(&mut a, Some(&mut v));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = order.iter().map(|&i| (0..n).map(|r| v[(r, i)]).collect()).collect();
    Ok((values, vectors))
}

const NORMAL_ANGLES: [f64; 4] = [0.377, 1.234, 2.087, 2.719];

/// Eigenvalues of a normal matrix.
///
/// Diagonalises `Re(e^{-i theta} M)` and reads `z_j = (M v_j, v_j)`;
/// clusters of equal Hermitian eigenvalues are compressed and split again
/// at the next angle. A cluster that never splits is scalar.
pub fn normal_eigenvalues(m: &ComplexMatrix) -> Result<Vec<C64>> {
    let scale = m.frobenius_norm().max(1.0);
    let defect = m.normal_defect();
    if defect > Tolerances::DEFAULT.hermitian * scale * scale {
        return Err(Error::NotNormal { defect });
    }
    split_normal(m, 0, scale)
}

fn split_normal(m: &ComplexMatrix, depth: usize, scale: f64) -> Result<Vec<C64>> {
    let n = m.n();
    if n == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    if depth == NORMAL_ANGLES.len() {
        return Ok(vec![m.trace() / n as f64; n]);
    }
    let (values, vectors) = hermitian_eigen(&m.rotated_real_part(-NORMAL_ANGLES[depth]))?;
    let gap = 1e-8 * scale;
    let mut out = Vec::with_capacity(n);
    let mut start = 0;
    for end in 1..=n {
        if end < n && values[end] - values[end - 1] <= gap {
            continue;
        }
        let cluster = &vectors[start..end];
        if cluster.len() == 1 {
            out.push(inner(&m.mul_vec(&cluster[0]), &cluster[0]));
        } else {
            let f = Frame::from_columns_unchecked(n, cluster.to_vec());
            out.extend(split_normal(&compress(m, &f)?, depth + 1, scale)?);
        }
        start = end;
    }
    Ok(out)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.n();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn jacobi_in_place(a: &mut ComplexMatrix, mut vecs: Option<&mut ComplexMatrix>) {
    let n = a.n();
    let threshold = Tolerances::DEFAULT.jacobi_offdiag * a.frobenius_norm().max(1.0);
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(a) <= threshold {
            return;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                // D* A D with D = diag(.., e^{-i phi} at q, ..) makes a_pq = r
                let ph = apq / r;
                for i in 0..n {
                    a[(i, q)] *= ph.conj();
                }
                for j in 0..n {
                    a[(q, j)] *= ph;
                }
                if let Some(v) = vecs.as_deref_mut() {
                    for i in 0..n {
                        v[(i, q)] *= ph.conj();
                    }
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let (ip, iq) = (a[(i, p)], a[(i, q)]);
                    a[(i, p)] = ip * c - iq * s;
                    a[(i, q)] = ip * s + iq * c;
                }
                for j in 0..n {
                    let (pj, qj) = (a[(p, j)], a[(q, j)]);
                    a[(p, j)] = pj * c - qj * s;
                    a[(q, j)] = pj * s + qj * c;
                }
                if let Some(v) = vecs.as_deref_mut() {
                    for i in 0..n {
                        let (ip, iq) = (v[(i, p)], v[(i, q)]);
                        v[(i, p)] = ip * c - iq * s;
                        v[(i, q)] = ip * s + iq * c;
                    }
                }
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
            }
        }
    }
}

/// Removes the components of `v` along the orthonormal `basis` (twice, for
/// stability).
pub fn project_out(v: &mut [C64], basis: &[Vec<C64>]) {
    for _ in 0..2 {
        for q in basis {
            let c = inner(v, q);
            v.iter_mut().zip(q).for_each(|(x, y)| *x -= c * y);
        }
    }
}

/// Orthonormal basis of `span(vectors)`, by the pivoted Gram-Schmidt used in
/// [`orthonormal_complement_basis`].
pub fn orthonormal_span_basis(n: usize, vectors: &[Vec<C64>]) -> Result<Vec<Vec<C64>>> {
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let scale = vectors.iter().map(|v| norm(v)).fold(1.0, f64::max);
    Ok(pivoted_gram_schmidt(
        vectors.to_vec(),
        &[],
        Tolerances::DEFAULT.drop * scale,
        n,
    ))
}

/// Orthonormal basis of `C^n ⊖ span(vectors)`.
///
/// The span is orthonormalised by pivoted Gram-Schmidt (largest residual
/// first, residuals below `1e-12 * max(1, max ||v||)` dropped), then the
/// standard basis is swept the same way to fill the complement. The
/// complement may be zero-dimensional, giving an empty frame.
pub fn orthonormal_complement_basis(n: usize, vectors: &[Vec<C64>]) -> Result<Frame> {
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let scale = vectors.iter().map(|v| norm(v)).fold(1.0, f64::max);
    let drop = Tolerances::DEFAULT.drop * scale;
    let span = pivoted_gram_schmidt(vectors.to_vec(), &[], drop, n);
    let rank = span.len();
    let unit: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[j] = C64::new(1.0, 0.0);
            e
        })
        .collect();
    let complement = pivoted_gram_schmidt(unit, &span, Tolerances::DEFAULT.drop, n - rank);
    Ok(Frame::from_columns_unchecked(n, complement))
}

/// Greedy Gram-Schmidt: repeatedly takes the candidate with the largest
/// residual against `fixed` and the vectors accepted so far.
fn pivoted_gram_schmidt(
    mut candidates: Vec<Vec<C64>>,
    fixed: &[Vec<C64>],
    drop: f64,
    max_count: usize,
) -> Vec<Vec<C64>> {
    for c in candidates.iter_mut() {
        project_out(c, fixed);
    }
    let mut accepted: Vec<Vec<C64>> = Vec::new();
    while accepted.len() < max_count && !candidates.is_empty() {
        let (idx, best) = candidates
            .iter()
            .enumerate()
            .map(|(i, c)| (i, norm(c)))
            .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= drop {
            break;
        }
        let mut q = candidates.swap_remove(idx);
        project_out(&mut q, fixed);
        project_out(&mut q, &accepted);
        let nq = norm(&q);
        if nq <= drop {
            continue;
        }
        q.iter_mut().for_each(|x| *x /= nq);
        for c in candidates.iter_mut() {
            let coef = inner(c, &q);
            c.iter_mut().zip(&q).for_each(|(x, y)| *x -= coef * y);
        }
        accepted.push(q);
    }
    accepted
}

/// `F* M F`, the compression of `M` to the span of `F`.
pub fn compress(m: &ComplexMatrix, f: &Frame) -> Result<ComplexMatrix> {
    if f.n() != m.n() {
        return Err(Error::DimensionMismatch {
            expected: m.n(),
            found: f.n(),
        });
    }
    let k = f.k();
    if k == 0 {
        return Err(Error::RankOutOfRange { k, n: m.n() });
    }
    let images: Vec<Vec<C64>> = f.columns().iter().map(|c| m.mul_vec(c)).collect();
    let mut out = ComplexMatrix::zeros(k);
    for i in 0..k {
        for j in 0..k {
            // (M f_j, f_i)
            out[(i, j)] = inner(&images[j], f.column(i));
        }
    }
    Ok(out)
}

/// Haar-distributed `k`-frame in `C^n`.
///
/// QR of an `n x k` matrix of standard complex Gaussians by classical
/// Gram-Schmidt with reorthogonalisation; Gram-Schmidt yields a positive
/// real `R` diagonal, which is the phase fix that makes `Q` Haar.
pub fn haar_random_frame<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Frame> {
    if k == 0 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(k);
    while cols.len() < k {
        let mut v: Vec<C64> = (0..n).map(|_| complex_gaussian(rng)).collect();
        project_out(&mut v, &cols);
        let nv = norm(&v);
        if nv <= 1e-8 {
            // measure-zero rank deficiency; redraw
            continue;
        }
        v.iter_mut().for_each(|x| *x /= nv);
        cols.push(v);
    }
    Ok(Frame::from_columns_unchecked(n, cols))
}

/// Haar unitary as a square matrix whose columns are a full Haar frame.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let f = haar_random_frame(n, n, rng).expect("k = n is a valid rank");
    let mut u = ComplexMatrix::zeros(n);
    for (j, col) in f.columns().iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            u[(i, j)] = v;
        }
    }
    u
}

/// `U diag(z) U*` for a Haar unitary `U`: a random normal matrix with spectrum `z`.
pub fn random_normal_with_spectrum<R: Rng + ?Sized>(z: &[C64], rng: &mut R) -> ComplexMatrix {
    let u = haar_unitary(z.len(), rng);
    u.matmul(&ComplexMatrix::from_diag(z)).matmul(&u.adjoint())
}

/// Random Hermitian matrix with i.i.d. complex Gaussian off-diagonal entries.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut h = ComplexMatrix::zeros(n);
    for i in 0..n {
        h[(i, i)] = C64::new(complex_gaussian(rng).re * 2.0, 0.0);
        for j in (i + 1)..n {
            let v = complex_gaussian(rng);
            h[(i, j)] = v;
            h[(j, i)] = v.conj();
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<C64>) -> Vec<C64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    #[test]
    fn hermitian_eigenvectors_diagonalise() {
        let mut rng = seeded(41);
        for n in [1, 2, 5, 9] {
            let h = random_hermitian(n, &mut rng);
            let (vals, vecs) = hermitian_eigen(&h).unwrap();
            assert_eq!(vals, hermitian_eigenvalues(&h).unwrap());
            for (l, v) in vals.iter().zip(&vecs) {
                let hv = h.mul_vec(v);
                let r: f64 = hv.iter().zip(v).map(|(a, b)| (a - b * l).norm_sqr()).sum();
                assert!(r.sqrt() < 1e-11);
            }
            assert!(Frame::new(n, vecs).is_ok());
        }
    }

    #[test]
    fn normal_eigenvalues_recover_spectrum() {
        let mut rng = seeded(43);
        let spectra = [
            vec![c(1., 0.), c(0., 1.), c(-1., 0.), c(0., -1.)],
            vec![c(2., 1.), c(2., 1.), c(-1., 0.5), c(0.3, -0.2), c(0.3, -0.2)],
            vec![c(1., 1.); 3],
            vec![c(0.5, 0.); 1],
        ];
        for z in spectra {
            let m = random_normal_with_spectrum(&z, &mut rng);
            let got = sorted(normal_eigenvalues(&m).unwrap());
            for (a, b) in got.iter().zip(sorted(z.clone())) {
                assert!((a - b).norm() < 1e-10, "{a} vs {b}");
            }
        }
        let jordan = ComplexMatrix::from_rows(vec![vec![c(0., 0.), c(1., 0.)], vec![c(0., 0.), c(0., 0.)]]).unwrap();
        assert!(matches!(normal_eigenvalues(&jordan), Err(Error::NotNormal { .. })));
    }
    use crate::rng::seeded;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// det(H - lambda I) by Gaussian elimination with partial pivoting.
    fn charpoly(h: &ComplexMatrix, lambda: f64) -> f64 {
        let n = h.n();
        let mut a = h.rows();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] -= lambda;
        }
        let mut det = c(1.0, 0.0);
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap();
            if a[piv][col].norm() == 0.0 {
                return 0.0;
            }
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            det *= a[col][col];
            for r in (col + 1)..n {
                let f = a[r][col] / a[col][col];
                for cc in col..n {
                    let v = a[col][cc];
                    a[r][cc] -= f * v;
                }
            }
        }
        det.re
    }

    fn bisection_eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
        let r = h.frobenius_norm() + 1.0;
        let steps = 40_000;
        let mut roots = Vec::new();
        let mut prev_x = -r;
        let mut prev_f = charpoly(h, prev_x);
        for s in 1..=steps {
            let x = -r + 2.0 * r * s as f64 / steps as f64;
            let f = charpoly(h, x);
            if prev_f.signum() != f.signum() {
                let (mut lo, mut hi, mut flo) = (prev_x, x, prev_f);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    let fm = charpoly(h, mid);
                    if fm.signum() == flo.signum() {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_f = f;
        }
        roots
    }

    #[test]
    fn eigenvalues_of_diagonal_are_sorted_diagonal() {
        let h = ComplexMatrix::from_real_diag(&[3.0, 1.0, 2.0]);
        assert_eq!(hermitian_eigenvalues(&h).unwrap(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn eigenvalues_of_swap_matrix() {
        let h = ComplexMatrix::from_rows(vec![vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]])
            .unwrap();
        let e = hermitian_eigenvalues(&h).unwrap();
        assert!((e[0] + 1.0).abs() < 1e-14 && (e[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_match_charpoly_bisection() {
        let mut rng = seeded(7);
        let h = random_hermitian(5, &mut rng);
        let jac = hermitian_eigenvalues(&h).unwrap();
        let oracle = bisection_eigenvalues(&h);
        assert_eq!(oracle.len(), 5, "oracle found {oracle:?}");
        for (a, b) in jac.iter().zip(&oracle) {
            assert!((a - b).abs() <= 1e-8, "{jac:?} vs {oracle:?}");
        }
        let tr = h.trace().re;
        assert!((jac.iter().sum::<f64>() - tr).abs() <= 1e-9 * 5.0);
    }

    #[test]
    fn non_hermitian_is_rejected_with_norm() {
        let h = ComplexMatrix::from_rows(vec![vec![c(0., 0.), c(1., 0.)], vec![c(0., 0.), c(0., 0.)]])
            .unwrap();
        match hermitian_eigenvalues(&h) {
            Err(Error::NotHermitian { defect }) => assert!((defect - 2f64.sqrt()).abs() < 1e-15),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn complement_of_e1() {
        let mut e1 = vec![c(0., 0.); 3];
        e1[0] = c(1., 0.);
        let f = orthonormal_complement_basis(3, &[e1.clone()]).unwrap();
        assert_eq!(f.k(), 2);
        assert!(f.orthonormality_defect() < 1e-14);
        for col in f.columns() {
            assert!(inner(col, &e1).norm() < 1e-15);
        }
    }

    #[test]
    fn complement_with_dependent_inputs() {
        let v = vec![c(1., 2.), c(0., -1.), c(3., 0.), c(0.5, 0.5)];
        let v2: Vec<C64> = v.iter().map(|x| x * 2.0).collect();
        let f = orthonormal_complement_basis(4, &[v.clone(), v2]).unwrap();
        assert_eq!(f.k(), 3);
        assert!(f.orthonormality_defect() < 1e-12);
        for col in f.columns() {
            assert!(inner(col, &v).norm() < 1e-12);
        }
    }

    #[test]
    fn complement_of_sampler_constraints_is_two_dimensional() {
        let z: Vec<C64> = (0..5)
            .map(|j| C64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / 5.0))
            .collect();
        let t = [0.3, 0.1, 0.25, 0.15, 0.2];
        let u: Vec<C64> = t.iter().map(|&x: &f64| c(x.sqrt(), 0.0)).collect();
        let ure: Vec<C64> = u.iter().zip(&z).map(|(a, b)| a * b.re).collect();
        let uim: Vec<C64> = u.iter().zip(&z).map(|(a, b)| a * b.im).collect();
        let f = orthonormal_complement_basis(5, &[u.clone(), ure.clone(), uim.clone()]).unwrap();
        assert_eq!(f.k(), 2);
        for col in f.columns() {
            for v in [&u, &ure, &uim] {
                assert!(inner(col, v).norm() <= 1e-10);
            }
        }
        assert!(f.orthonormality_defect() <= 1e-10);
    }

    #[test]
    fn complement_can_be_empty() {
        let vs: Vec<Vec<C64>> = (0..2)
            .map(|j| {
                let mut e = vec![c(0., 0.); 2];
                e[j] = c(0., 1.);
                e
            })
            .collect();
        assert_eq!(orthonormal_complement_basis(2, &vs).unwrap().k(), 0);
    }

    #[test]
    fn compress_to_coordinate_plane() {
        let m = ComplexMatrix::from_real_diag(&[1., 2., 3.]);
        let f = Frame::new(3, vec![vec![c(1., 0.), c(0., 0.), c(0., 0.)], vec![c(0., 0.), c(1., 0.), c(0., 0.)]])
            .unwrap();
        let cm = compress(&m, &f).unwrap();
        assert_eq!(cm, ComplexMatrix::from_real_diag(&[1., 2.]));
    }

    #[test]
    fn compress_partition_frame_of_fourth_roots_is_zero() {
        // w_1 = (e_1 + e_3)/sqrt2, w_2 = (e_2 + e_4)/sqrt2 for z = (1, i, -1, -i)
        let m = ComplexMatrix::from_diag(&[c(1., 0.), c(0., 1.), c(-1., 0.), c(0., -1.)]);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let f = Frame::new(
            4,
            vec![
                vec![c(h, 0.), c(0., 0.), c(h, 0.), c(0., 0.)],
                vec![c(0., 0.), c(h, 0.), c(0., 0.), c(h, 0.)],
            ],
        )
        .unwrap();
        let cm = compress(&m, &f).unwrap();
        assert!(cm.frobenius_norm() < 1e-15);
    }

    #[test]
    fn compress_dimension_mismatch() {
        let m = ComplexMatrix::identity(3);
        let f = haar_random_frame(4, 2, &mut seeded(0)).unwrap();
        assert!(matches!(compress(&m, &f), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn haar_square_frame_is_unitary() {
        let f = haar_random_frame(3, 3, &mut seeded(11)).unwrap();
        assert!(f.orthonormality_defect() <= 1e-12);
    }

    #[test]
    fn haar_is_deterministic_per_seed() {
        let a = haar_random_frame(5, 2, &mut seeded(1)).unwrap();
        let b = haar_random_frame(5, 2, &mut seeded(1)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn haar_rank_too_large() {
        assert!(matches!(
            haar_random_frame(2, 3, &mut seeded(1)),
            Err(Error::RankOutOfRange { k: 3, n: 2 })
        ));
    }

    #[test]
    fn haar_marginal_is_uniform() {
        // |u_1|^2 of a Haar unit vector in C^2 is uniform on [0, 1]
        let mut rng = seeded(2024);
        let draws = 10_000;
        let mean = (0..draws)
            .map(|_| haar_random_frame(2, 1, &mut rng).unwrap().column(0)[0].norm_sqr())
            .sum::<f64>()
            / draws as f64;
        assert!((mean - 0.5).abs() <= 0.02, "mean {mean}");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn frames_are_orthonormal(seed in any::<u64>(), n in 1usize..12, kk in 1usize..12) {
                let k = kk.min(n);
                let f = haar_random_frame(n, k, &mut seeded(seed)).unwrap();
                prop_assert!(f.orthonormality_defect() <= 1e-10);
            }

            #[test]
            fn eigenvalues_are_unitarily_invariant(seed in any::<u64>(), n in 2usize..9) {
                let mut rng = seeded(seed);
                let h = random_hermitian(n, &mut rng);
                let u = haar_unitary(n, &mut rng);
                let conj = u.adjoint().matmul(&h).matmul(&u);
                let a = hermitian_eigenvalues(&h).unwrap();
                // conjugation leaves rounding-level skew; re-symmetrise via the solver's own check
                let b = hermitian_eigenvalues(&conj).unwrap();
                for (x, y) in a.iter().zip(&b) {
                    prop_assert!((x - y).abs() <= 1e-8);
                }
            }

            #[test]
            fn compression_is_affine(seed in any::<u64>(), n in 2usize..8, kk in 1usize..8,
                                     ar in -2.0f64..2.0, ai in -2.0f64..2.0,
                                     br in -2.0f64..2.0, bi in -2.0f64..2.0) {
                let k = kk.min(n);
                let mut rng = seeded(seed);
                let z: Vec<C64> = (0..n).map(|_| complex_gaussian(&mut rng)).collect();
                let m = random_normal_with_spectrum(&z, &mut rng);
                let f = haar_random_frame(n, k, &mut rng).unwrap();
                let (alpha, beta) = (c(ar, ai), c(br, bi));
                let lhs = compress(&m.affine(alpha, beta), &f).unwrap();
                let rhs = compress(&m, &f).unwrap().affine(alpha, beta);
                prop_assert!(lhs.sub(&rhs).frobenius_norm() <= 1e-12);
            }

            #[test]
            fn full_rank_compression_preserves_trace(seed in any::<u64>(), n in 2usize..10) {
                let mut rng = seeded(seed);
                let m = random_hermitian(n, &mut rng).affine(c(0., 0.), c(0.3, 0.7));
                let f = haar_random_frame(n, n, &mut rng).unwrap();
                let cm = compress(&m, &f).unwrap();
                prop_assert!((cm.trace() - m.trace()).norm() <= 1e-10);
            }
        }
    }
}
