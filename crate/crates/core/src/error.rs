use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    ModulusDegree { expected: u32, got: Vec<u32> },
    #[error("modulus {0:?} is reducible over the prime field")]
    ReducibleModulus(Vec<u32>),
    #[error("field of size {p}^{e} exceeds 2^16")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element encoding {value} out of range for a field of size {q}")]
    ElementOutOfRange { value: u32, q: u32 },

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("point has {got} coordinates, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("projective space has {count} points, above the enumeration guard {limit}")]
    SpaceTooLarge { count: u128, limit: u128 },
    #[error("expected {expected} defining polynomials, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("not a split smooth complete intersection: {0}")]
    NotCompleteIntersection(String),

    #[error("no normalizer nonvanishing on all points found after {trials} trials")]
    NoNormalizerFound { trials: usize },
    #[error("normalizer vanishes at point index {index}")]
    NormalizerVanishes { index: usize },
    #[error("distance search needs {required} codewords, cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },

    #[error("subset contains a point outside the ambient set")]
    NotASubset,
    #[error("degree {a} outside the admissible range [{lo}, {hi}]")]
    DegreeOutOfRange { a: i64, lo: i64, hi: i64 },
    #[error("unsupported field size {0}: not a prime power")]
    NotPrimePower(u32),

    #[error("line {line}: {msg}")]
    VarietyFile { line: usize, msg: String },
}
