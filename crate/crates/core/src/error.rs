//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes do not admit the requested product.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Symmetry deviation exceeded the caller's tolerance.
    NotSymmetric { deviation: f64, tolerance: f64 },
    /// Entry (row, col) breaks exact skew-symmetry (a[i][j] != -a[j][i], or a
    /// nonzero diagonal entry when row == col).
    NotSkewSymmetric { row: usize, col: usize },
    /// Entry (row, col) breaks the skew-adjacency pattern (zero diagonal,
    /// off-diagonal entries +-1, antisymmetric).
    NotSkewAdjacency { row: usize, col: usize },
    /// Jacobi sweeps hit the cap before the off-diagonal threshold.
    ConvergenceFailure { sweeps: usize, off_diag: f64 },
    /// -S^2 produced an eigenvalue below the negativity threshold; the input
    /// is not skew-symmetric or the eigensolver failed.
    NegativeSquareSpectrum { value: f64, threshold: f64 },
    /// A nonzero eigenvalue cluster of -S^2 has odd size, so it cannot come
    /// from conjugate pairs +-i*lambda. Carries the cluster sizes and the
    /// lambda estimate of each cluster for diagnosis.
    OddCluster {
        sizes: Vec<usize>,
        lambdas: Vec<f64>,
    },
    /// A tolerance parameter must be positive.
    InvalidTolerance { value: f64 },
    /// The matrix has no zero eigenvalue, so there is no null space to return.
    EmptyNullspace,
    /// No spectral cluster matches the requested eigenvalue magnitude.
    NoMatchingCluster { lambda: f64 },
    /// The matrix is already quasi-orthogonal; there is nothing to border.
    NothingToExtend,
    /// A border step failed to shrink the deficiency as the construction
    /// guarantees; carries a rendered step log.
    ExtensionStalled { detail: String },
    /// Paley construction rejected the order.
    InvalidPaleyOrder { q: usize, reason: &'static str },
    /// The operation does not support this matrix or tournament order.
    UnsupportedOrder { n: usize, context: &'static str },
    /// Exact and floating classification routes disagree.
    ClassificationInconsistency { detail: String },
    /// A structured text input failed to parse (1-based line number).
    Parse { line: usize, detail: String },
    /// A tournament description is structurally invalid.
    InvalidTournament { detail: String },
    /// The supplied (lambda, x) is not an eigenpair of the matrix within the
    /// oracle's residual bound.
    EigenpairResidual { residual: f64, allowed: f64 },
    /// A vector argument that must be nonzero was zero.
    ZeroVector,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} with {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => {
                write!(f, "matrix must be square, got {rows}x{cols}")
            }
            Error::NotSymmetric {
                deviation,
                tolerance,
            } => write!(
                f,
                "matrix is not symmetric: deviation {deviation:e} exceeds {tolerance:e}"
            ),
            Error::NotSkewSymmetric { row, col } => write!(
                f,
                "matrix is not skew-symmetric at entry ({row}, {col})"
            ),
            Error::NotSkewAdjacency { row, col } => write!(
                f,
                "matrix is not a skew-adjacency matrix at entry ({row}, {col})"
            ),
            Error::ConvergenceFailure { sweeps, off_diag } => write!(
                f,
                "Jacobi eigensolver failed to converge in {sweeps} sweeps \
                 (max off-diagonal {off_diag:e})"
            ),
            Error::NegativeSquareSpectrum { value, threshold } => write!(
                f,
                "-S^2 has eigenvalue {value:e} below -{threshold:e}; \
                 input is not skew-symmetric"
            ),
            Error::OddCluster { sizes, lambdas } => write!(
                f,
                "odd-sized eigenvalue cluster: sizes {sizes:?} at lambdas {lambdas:?}; \
                 widen or shrink gap_tol"
            ),
            Error::InvalidTolerance { value } => {
                write!(f, "tolerance must be positive, got {value:e}")
            }
            Error::EmptyNullspace => write!(f, "matrix has no zero eigenvalue"),
            Error::NoMatchingCluster { lambda } => {
                write!(f, "no eigenvalue cluster matches lambda = {lambda:e}")
            }
            Error::NothingToExtend => {
                write!(f, "matrix is already quasi-orthogonal; nothing to border")
            }
            Error::ExtensionStalled { detail } => {
                write!(f, "border step failed to reduce the deficiency: {detail}")
            }
            Error::InvalidPaleyOrder { q, reason } => {
                write!(f, "invalid Paley order {q}: {reason}")
            }
            Error::UnsupportedOrder { n, context } => {
                write!(f, "unsupported order {n} for {context}")
            }
            Error::ClassificationInconsistency { detail } => {
                write!(f, "classification inconsistency: {detail}")
            }
            Error::Parse { line, detail } => write!(f, "parse error at line {line}: {detail}"),
            Error::InvalidTournament { detail } => write!(f, "invalid tournament: {detail}"),
            Error::EigenpairResidual { residual, allowed } => write!(
                f,
                "(lambda, x) is not an eigenpair: residual {residual:e} exceeds {allowed:e}"
            ),
            Error::ZeroVector => write!(f, "vector must be nonzero"),
        }
    }
}

impl std::error::Error for Error {}
