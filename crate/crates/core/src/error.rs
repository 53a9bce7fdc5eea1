use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("determinant {det} != 1 for matrix ({a},{b},{c},{d})")]
    Determinant {
        a: String,
        b: String,
        c: String,
        d: String,
        det: String,
    },

    #[error("fundamental-domain reduction of {z} did not terminate within {cap} steps")]
    Reduction { z: Complex64, cap: usize },

    #[error("precision: {0}")]
    Precision(String),

    #[error("point {0} is not in the upper half-plane")]
    Domain(Complex64),

    #[error("path endpoints do not match: {end} vs {start}")]
    EndpointMismatch { end: Complex64, start: Complex64 },

    #[error("word {0} mixes holomorphic and anti-holomorphic letters")]
    MixedWord(String),

    #[error("period matrix is numerically singular (condition estimate {condition:.3e} > {bound:.3e})")]
    SingularPeriodMatrix { condition: f64, bound: f64 },

    #[error("order certificate failed: tuple [{tuple}] at z = {z}: residual {residual:.3e} > {tol:.3e}")]
    CertificateFailure {
        tuple: String,
        z: Complex64,
        residual: f64,
        tol: f64,
    },

    #[error("grading: {0}")]
    Grading(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
