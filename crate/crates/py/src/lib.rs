//! Python bindings. Spectra are lists of `complex`, matrices are lists of
//! rows, and polygons come back as counterclockwise vertex lists.

use ncomp::bset::{b_of_a, fiber_extreme_points, sample_b_of_a, starfish};
use ncomp::hrnr::{self, Refinement, SweepConfig};
use ncomp::nnc;
use ncomp::normcomp;
use ncomp::numkit::{self, ComplexMatrix};
use ncomp::{Spectrum, C64};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(pyncomp, NcompError, PyValueError);

fn err(e: ncomp::Error) -> PyErr {
    NcompError::new_err(e.to_string())
}

fn spectrum(z: Vec<C64>) -> PyResult<Spectrum> {
    Spectrum::new(z).map_err(err)
}

fn matrix(rows: Vec<Vec<C64>>) -> PyResult<ComplexMatrix> {
    ComplexMatrix::from_rows(rows).map_err(err)
}

#[pyfunction]
fn hermitian_eigenvalues(rows: Vec<Vec<C64>>) -> PyResult<Vec<f64>> {
    numkit::hermitian_eigenvalues(&matrix(rows)?).map_err(err)
}

#[pyfunction]
fn normal_eigenvalues(rows: Vec<Vec<C64>>) -> PyResult<Vec<C64>> {
    numkit::normal_eigenvalues(&matrix(rows)?).map_err(err)
}

/// Rank-k numerical range of `diag(z)` as the intersection of subset hulls.
#[pyfunction]
fn lambda_k_normal(z: Vec<C64>, k: usize) -> PyResult<Vec<C64>> {
    let p = hrnr::lambda_k_normal(&spectrum(z)?, k).map_err(err)?;
    Ok(p.vertices().to_vec())
}

/// Rank-k numerical range of an arbitrary matrix by the half-plane sweep.
#[pyfunction]
#[pyo3(signature = (rows, k, n_theta = 4096, adaptive = false))]
fn lambda_k_lisze(rows: Vec<Vec<C64>>, k: usize, n_theta: usize, adaptive: bool) -> PyResult<Vec<C64>> {
    let refinement = if adaptive { Refinement::Adaptive } else { Refinement::None };
    let cfg = SweepConfig::new(n_theta, refinement).map_err(err)?;
    let p = hrnr::lambda_k_lisze(&matrix(rows)?, k, &cfg).map_err(err)?;
    Ok(p.vertices().to_vec())
}

#[pyfunction]
fn lambda_k_hermitian(a: Vec<f64>, k: usize) -> PyResult<Option<(f64, f64)>> {
    hrnr::lambda_k_hermitian(&a, k).map_err(err)
}

/// Extreme points of the fiber over `a`: `(triple, weights)` pairs.
#[pyfunction]
fn fiber_extremes(z: Vec<C64>, a: C64) -> PyResult<Vec<([usize; 3], Vec<f64>)>> {
    let f = fiber_extreme_points(&spectrum(z)?, a).map_err(err)?;
    Ok(f.extremes().iter().map(|e| (e.triple, e.point.weights().to_vec())).collect())
}

/// Name of the exact description of B(a): "curve", "wedge-union", ...
#[pyfunction]
fn b_kind(z: Vec<C64>, a: C64) -> PyResult<String> {
    Ok(b_of_a(&spectrum(z)?, a, 0, 0).map_err(err)?.kind().name().to_string())
}

#[pyfunction]
#[pyo3(signature = (z, a, b, tol = 1e-8))]
fn b_contains(z: Vec<C64>, a: C64, b: C64, tol: f64) -> PyResult<bool> {
    Ok(b_of_a(&spectrum(z)?, a, 0, 0).map_err(err)?.contains(b, tol))
}

#[pyfunction]
#[pyo3(signature = (z, a, n, seed = 1))]
fn sample_b(z: Vec<C64>, a: C64, n: usize, seed: u64) -> PyResult<Vec<C64>> {
    sample_b_of_a(&spectrum(z)?, a, n, seed).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (z, a, b, tol = 1e-8))]
fn starfish_contains(z: Vec<C64>, a: C64, b: C64, tol: f64) -> PyResult<bool> {
    Ok(starfish(&spectrum(z)?, a).map_err(err)?.contains(b, tol))
}

/// Frame columns `[u, w]` compressing `diag(z)` to `diag(a, b)`, and the
/// residual.
#[pyfunction]
fn rank2_witness(z: Vec<C64>, a: C64, b: C64) -> PyResult<(Vec<Vec<C64>>, f64)> {
    let w = normcomp::construct_rank2_witness(&spectrum(z)?, a, b).map_err(err)?;
    Ok((w.frame.columns().to_vec(), w.residual))
}

#[pyfunction]
fn interlacing_check(a: Vec<f64>, b: Vec<f64>) -> PyResult<bool> {
    normcomp::interlacing_check(&a, &b).map_err(err)
}

/// Whether `c` passes the subset-hull test for being the spectrum of a
/// normal compression of `diag(z)`.
#[pyfunction]
fn necessary_condition(c: Vec<C64>, z: Vec<C64>) -> PyResult<bool> {
    Ok(normcomp::necessary_condition_check(&c, &spectrum(z)?).map_err(err)?.holds)
}

/// Foci and full minor axis of the numerical range of a 2x2 matrix.
#[pyfunction]
fn numerical_range_ellipse(rows: Vec<Vec<C64>>) -> PyResult<([C64; 2], f64)> {
    let e = nnc::numerical_range_ellipse(&matrix(rows)?).map_err(err)?;
    Ok((e.foci, e.minor_axis))
}

#[pymodule]
fn pyncomp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("NcompError", m.py().get_type::<NcompError>())?;
    m.add_function(wrap_pyfunction!(hermitian_eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(normal_eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_k_normal, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_k_lisze, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_k_hermitian, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_extremes, m)?)?;
    m.add_function(wrap_pyfunction!(b_kind, m)?)?;
    m.add_function(wrap_pyfunction!(b_contains, m)?)?;
    m.add_function(wrap_pyfunction!(sample_b, m)?)?;
    m.add_function(wrap_pyfunction!(starfish_contains, m)?)?;
    m.add_function(wrap_pyfunction!(rank2_witness, m)?)?;
    m.add_function(wrap_pyfunction!(interlacing_check, m)?)?;
    m.add_function(wrap_pyfunction!(necessary_condition, m)?)?;
    m.add_function(wrap_pyfunction!(numerical_range_ellipse, m)?)?;
    Ok(())
}
