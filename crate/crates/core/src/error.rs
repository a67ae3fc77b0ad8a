use alloc::string::String;

use crate::liealg::Family;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("action is not a compact su(2) action (residual {residual:e})")]
    NonClosedAction { residual: f64 },
    #[error("isotypic decomposition failed: {0}")]
    DecompositionResidual(String),
    #[error("Clebsch-Gordan arguments must satisfy m >= n (got m = {m}, n = {n})")]
    ArgumentOrder { m: usize, n: usize },
    #[error("S^{0} is quaternionic and has no real form")]
    NoRealForm(usize),
    #[error("unsupported parameter {param} for {family}")]
    UnsupportedParam { family: Family, param: usize },
    #[error("operation is not defined for the {0} family")]
    WrongFamily(Family),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not skew-symmetric (residual {residual:e})")]
    NotSkew { residual: f64 },
    #[error("no Clifford module recipe for dimension {0}")]
    UnsupportedDim(usize),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("subspaces differ: {0}")]
    Mismatch(String),
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("form degree {0} exceeds the exact antisymmetrization cap of 11")]
    DegreeTooLarge(usize),
    #[error("zero vector")]
    ZeroVector,
    #[error("evaluator has degree {expected} but the frame has dimension {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("frame is not critical (gradient norm {grad_norm:e} > {tol:e})")]
    NotCritical { grad_norm: f64, tol: f64 },
    #[error("j_transform needs odd formal degree, got {0}")]
    EvenDegree(usize),
    #[error("structure kind does not match the parity of n = {0}")]
    WrongParity(usize),
    #[error("every sample fell below the resultant floor")]
    DegenerateSample,
}
