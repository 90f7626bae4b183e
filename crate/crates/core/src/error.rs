use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Two operands had different sizes.
    DimensionMismatch { left: usize, right: usize },
    /// An operand had the wrong size for the operation.
    WrongDimension { expected: usize, found: usize },
    /// Matrix data did not describe a square matrix.
    NotSquare { len: usize },
    NotSkewHermitian { residual: f64 },
    NotDensityMatrix(&'static str),
    OutsideBlochBall { norm: f64 },
    NotSpecialUnitary { residual: f64 },
    NotPure { largest_eigenvalue: f64 },
    /// The target state is `½·1`, for which no steering question is posed.
    MaximallyMixed,
    /// The interaction matrix `K` vanishes.
    ZeroInteraction,
    ZeroControlAxis,
    NonFinite(&'static str),
    /// The operation requires a different control type.
    WrongControl { expected: &'static str },
    /// The operation requires `ω_S = 0`.
    NonzeroOmegaS { omega_s: f64 },
    /// Parameters for which a construction is undefined.
    Degenerate(&'static str),
    InvalidConfig(&'static str),
    NoConvergence(&'static str),
    VerificationFailed { residual: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left}x{left} vs {right}x{right}")
            }
            Error::WrongDimension { expected, found } => {
                write!(f, "expected a {expected}x{expected} matrix, got {found}x{found}")
            }
            Error::NotSquare { len } => write!(f, "{len} entries do not form a square matrix"),
            Error::NotSkewHermitian { residual } => {
                write!(f, "matrix is not skew-Hermitian (|A + A†| = {residual:e})")
            }
            Error::NotDensityMatrix(why) => write!(f, "not a density matrix: {why}"),
            Error::OutsideBlochBall { norm } => {
                write!(f, "Bloch vector has norm {norm} > 1")
            }
            Error::NotSpecialUnitary { residual } => {
                write!(f, "matrix is not in SU(2) (residual {residual:e})")
            }
            Error::NotPure { largest_eigenvalue } => {
                write!(f, "state is not pure (largest eigenvalue {largest_eigenvalue})")
            }
            Error::MaximallyMixed => f.write_str("target state is maximally mixed"),
            Error::ZeroInteraction => f.write_str("interaction matrix K is zero"),
            Error::ZeroControlAxis => f.write_str("control axis has zero length"),
            Error::NonFinite(what) => write!(f, "{what} contains a non-finite value"),
            Error::WrongControl { expected } => {
                write!(f, "operation requires {expected} control")
            }
            Error::NonzeroOmegaS { omega_s } => {
                write!(f, "operation requires omega_S = 0, got {omega_s}")
            }
            Error::Degenerate(why) => write!(f, "degenerate parameters: {why}"),
            Error::InvalidConfig(why) => write!(f, "invalid configuration: {why}"),
            Error::NoConvergence(what) => write!(f, "{what} did not converge"),
            Error::VerificationFailed { residual } => {
                write!(f, "cross-check failed with residual {residual:e}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
