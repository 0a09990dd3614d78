use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian: ||H - H*||_F = {defect:e}")]
    NotHermitian { defect: f64 },

    #[error("matrix is not normal: ||MM* - M*M||_F = {defect:e}")]
    NotNormal { defect: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("rank {k} out of range for dimension {n}")]
    RankOutOfRange { k: usize, n: usize },

    #[error("combinatorial budget exceeded: N = {n} > {limit}")]
    BudgetExceeded { n: usize, limit: usize },

    #[error("input must be sorted ascending")]
    NotSorted,

    #[error("non-finite or malformed input: {0}")]
    InvalidInput(String),

    #[error("target c_{block} lies outside its block hull (distance {distance:e})")]
    BlockMembership { block: usize, distance: f64 },

    #[error("eigenvalues {triple:?} are collinear (|det T| = {det:e})")]
    NonGeneric { triple: [usize; 3], det: f64 },

    #[error("point lies outside conv{{z}} (distance {distance:e})")]
    OutsideHull { distance: f64 },

    #[error("interlacing is not strict at position {index}")]
    NotStrictlyInterlacing { index: usize },

    #[error("z_{z_index} and c_{c_index} coincide")]
    SharedElement { z_index: usize, c_index: usize },

    #[error("point is on the grid ({feature}); use the case analysis instead")]
    OnGrid { feature: String },

    #[error("location is ambiguous near {feature} (distance {distance:e})")]
    BoundaryAmbiguous { feature: String, distance: f64 },

    #[error("eigenvalues must be distinct, extreme and counterclockwise: {0}")]
    BadConfiguration(String),

    #[error("{which} lies outside Lambda_2 (distance {distance:e})")]
    NotInLambda2 { which: &'static str, distance: f64 },

    #[error("wedge decomposition failed; distances to wedges {distances:?}")]
    WedgeDecomposition { distances: Vec<f64> },

    #[error("t is not in the fiber C(a) (residual {residual:e})")]
    NotInFiber { residual: f64 },

    #[error("orthogonal complement is zero-dimensional")]
    EmptyComplement,

    #[error("empty input")]
    EmptyInput,

    #[error("numerical verification failed: residual {residual:e} > {tol:e} ({what})")]
    Verification {
        what: String,
        residual: f64,
        tol: f64,
    },
}

impl Error {
    /// Errors from residual checks, as opposed to precondition failures.
    pub fn is_verification(&self) -> bool {
        matches!(self, Error::Verification { .. })
    }
}
