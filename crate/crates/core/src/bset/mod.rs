//! The set `B(a)` of all `b` for which `diag(a, b)` is a compression of a
//! normal matrix with eigenvalues `z`.
//!
//! `B(a)` is the union over `t` in the fiber `C(a)` of the pieces `B(a, t)`
//! obtained with first vector `u = sqrt(t)`. Exact descriptions exist for
//! three and four eigenvalues, and for five in terms of the starfish; in
//! general the set is sampled.

pub mod cases;
pub mod continuity;
pub mod curve;
pub mod fiber;
pub mod lipschitz;
pub mod quad;
pub mod sampler;
pub mod starfish;

pub use cases::{b_of_a, b_of_a_n3, b_of_a_n4, b_of_a_t, BDescription, BKind, Component};
pub use continuity::{continuity_probe, grid_distance, ContinuityReport, ProbeRow};
pub use curve::{b_curve, BCurve, CurveTrace};
pub use fiber::{fiber_extreme_points, FiberExtreme, FiberPolytope, SimplexPoint};
pub use lipschitz::{fiber_hausdorff, fiber_lipschitz_constant, same_cell, LipschitzConstant};
pub use quad::{Quad, QuadLocation};
pub use sampler::{sample_b_of_a, sample_b_of_a_witnessed, BSample};
pub use starfish::{starfish, Starfish, Wedge, WedgePoint};
