//! Higher-rank numerical ranges and normal compressions of normal matrices.
//!
//! The crate is organised bottom-up:
//!
//! - [`numkit`]: small dense complex linear algebra (Jacobi eigenvalues,
//!   orthonormal complements, Haar frames, compressions).
//! - [`planegeom`]: convex geometry in the complex plane.
//! - [`hrnr`]: the rank-k numerical range, by half-plane sweep and by
//!   subset-hull intersection.
//! - [`normcomp`]: constructors and checkers for normal compressions.
//! - [`bset`]: the matching set `B(a)` of a rank-2 normal compression
//!   `diag(a, b)`, including the fiber polytope `C(a)`.
//! - [`nnc`]: 2x2 non-normal compressions and their elliptical numerical ranges.
//! - [`io`]: JSON and text formats.
//! - [`rng`], [`spectrum`], [`tol`]: seeded randomness, eigenvalue lists and
//!   shared tolerances.

pub mod bset;
pub mod error;
pub mod hrnr;
pub mod io;
pub mod nnc;
pub mod normcomp;
pub mod numkit;
pub mod planegeom;
pub mod rng;
pub mod spectrum;
pub mod tol;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use spectrum::Spectrum;
pub use tol::Tolerances;
