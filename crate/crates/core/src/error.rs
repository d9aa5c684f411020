use thiserror::Error;

pub type Result<T> = std::result::Result<T, StellarError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StellarError {
    #[error("zero state")]
    ZeroState,

    #[error("expected {expected} coefficients for {n} qubits, got {got}")]
    CoefficientCount { n: usize, expected: usize, got: usize },

    #[error("qubit count must be at least 1")]
    NoQubits,

    #[error("Dicke index {l} out of range for {n} qubits")]
    DickeIndex { n: usize, l: usize },

    #[error("permutation expansion too large: {n} spinors (limit {limit})")]
    PermutationTooLarge { n: usize, limit: usize },

    #[error("state dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit index {qubit} out of range for {n} qubits")]
    QubitIndex { n: usize, qubit: usize },

    #[error("zero polynomial has no constellation")]
    ZeroPolynomial,

    #[error("empty constellation")]
    EmptyConstellation,

    #[error("eigenvalue iteration did not converge for degree {degree}")]
    NoConvergence { degree: usize },

    #[error("star at infinity: pre-rotate first")]
    StarAtInfinity,

    #[error("{op} requires n = {expected}, got n = {got}")]
    WrongDegree {
        op: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("classification table defined for 3 and 4 qubits (got n = {0})")]
    UnsupportedQubits(usize),

    #[error("depression defined for 3 and 4 qubits (got n = {0})")]
    DepressionDegree(usize),

    #[error("state is not depressed (|coefficient| = {0:.3e}): compress first")]
    NotDepressed(f64),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("internal consistency: {0}")]
    Inconsistent(String),
}
