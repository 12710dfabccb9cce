use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("iteration did not converge: {0}")]
    NonConvergent(String),
    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
    #[error("amplitude imaginary part {im} exceeds cap {cap}")]
    AmplitudeOverflow { im: f64, cap: f64 },

    #[error("theta truncation radius {n} exceeds the limit")]
    TruncationOverflow { n: usize },
    #[error("invalid period matrix: {0}")]
    PeriodMatrix(String),

    #[error("invalid branch data: {0}")]
    InvalidBranch(String),
    #[error("point {re}+{im}i is at a branch point")]
    AtBranchPoint { re: f64, im: f64 },
    #[error("elliptic modulus degenerate: p' = {0}")]
    ModulusDegenerate(f64),
    #[error("path violates the cut margin: {0}")]
    PathThroughCut(String),
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
    #[error("reality violated for {what}: imaginary part {imag:e}")]
    RealityViolation { what: String, imag: f64 },

    #[error("theta denominator vanishes at (s,t)=({s},{t}): |theta|={modulus:e}")]
    ThetaDivisorHit { s: f64, t: f64, modulus: f64 },
    #[error("finite-difference stencil straddles a branch cut at lambda={0}")]
    SheetCrossing(f64),
    #[error("curvature vanishes at (s,t)=({s},{t})")]
    VanishingCurvature { s: f64, t: f64 },
    #[error("divisor does not yield a unitary frame: {0}")]
    NonUnitaryDivisor(String),
    #[error("invalid reconstruction point: {0}")]
    InvalidReconstructionPoint(String),

    #[error("critical-point quadratic has no real root")]
    NoRealRoot,
    #[error("critical-point quadratic has no admissible positive root")]
    NoPositiveRoot,
    #[error("Jacobi-form phase disagrees with quadrature phase by {0:e}")]
    JacobiFormMismatch(f64),
    #[error("no quantization level reachable in the bracket (best distance {0:e})")]
    NoRootInBracket(f64),
    #[error("critical point lost at family parameter {0}")]
    CriticalPointLost(f64),

    #[error("{skipped} of {total} grid points hit the theta divisor")]
    SkipBudgetExceeded { skipped: usize, total: usize },

    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}
