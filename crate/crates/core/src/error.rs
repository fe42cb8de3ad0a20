use thiserror::Error;

/// Errors raised while loading or validating a presentation, or when an
/// operation is asked to do something outside its supported range.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PcError {
    #[error("malformed presentation document: {0}")]
    Malformed(String),

    #[error("prime {0} is not supported (need a prime below 256)")]
    BadPrime(u32),

    #[error("exponent {exponent} of generator {generator} is outside [0, {prime})")]
    ExponentOutOfRange {
        generator: usize,
        exponent: i64,
        prime: u8,
    },

    #[error("generator index {0} is out of range")]
    IndexOutOfRange(usize),

    #[error("relation {relation} uses generator {generator}, which is not above {bound}")]
    Triangularity {
        relation: String,
        generator: usize,
        bound: usize,
    },

    #[error("weight vector is invalid: {0}")]
    Weights(String),

    #[error("relation {relation} uses generator {generator} of weight {weight}, below the required {required}")]
    WeightCondition {
        relation: String,
        generator: usize,
        weight: u32,
        required: u32,
    },

    #[error("definition of generator {generator} is invalid: {reason}")]
    Definition { generator: usize, reason: String },

    #[error("word has length {got} but the presentation has {expected} generators")]
    LengthMismatch { expected: usize, got: usize },

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u64 },

    #[error("only p = 2 is supported by the consistency test (got p = {0})")]
    UnsupportedPrime(u8),

    #[error("generator {0} has no definition word; supply \"definitions\" in the document")]
    MissingDefinition(usize),

    #[error("the map violates relation {0}")]
    RelationViolated(String),

    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, PcError>;
