use thiserror::Error;

/// Failures raised by the library constructors and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("empty generating set")]
    EmptyGeneratingSet,

    #[error("invalid degree {0}: degrees must be positive")]
    InvalidDegree(i64),

    #[error("insufficient Segre data: need coefficients to order {needed}, got {got} coefficient(s)")]
    InsufficientSegreData { needed: usize, got: usize },

    #[error("invalid Segre data: {0}")]
    InvalidSegreData(String),

    #[error("input is not a Segre class for these degrees: {0}")]
    NotASegreClass(String),

    #[error("counts exceed Bézout bound: N_{index} = {count} > {bound}")]
    CountsExceedBezout {
        index: usize,
        count: u64,
        bound: String,
    },

    #[error("N_0 must be 1 (intersection of n general hyperplanes)")]
    BadHyperplaneCount,

    #[error("expected {expected} counts N_0..N_n, got {got}")]
    CountLength { expected: usize, got: usize },

    #[error("zero series")]
    ZeroSeries,

    #[error("trailing coefficient {0} is not positive")]
    NonPositiveDegree(String),

    #[error("unit ideal: the exponent (0,0) is a generator")]
    UnitIdeal,

    #[error("codimension exceeds ambient dimension: codim {codim} > n = {n}")]
    CodimExceedsAmbient { codim: usize, n: usize },

    #[error("too many generators for the ℤ[H]-lifting argument: {m} > n - codim = {bound}")]
    TooManyGenerators { m: usize, bound: usize },

    #[error("ambient dimension must be positive")]
    ZeroAmbientDimension,
}

pub type Result<T> = std::result::Result<T, ZetaError>;
