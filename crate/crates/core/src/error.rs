use thiserror::Error;

/// Errors raised by semigroup, identity, smooth-sequence and Sylvester-sum operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive (found 0)")]
    ZeroGenerator,
    #[error("generators are not coprime (gcd = {gcd})")]
    NonCoprimeGenerators { gcd: u64 },
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("modulus {t} is not an element of the semigroup")]
    ModulusNotInSemigroup { t: u64 },
    #[error("the semigroup is all of N0; it has no positive Frobenius number (-1 by convention)")]
    FullSemigroup,
    #[error("non-integral result {value} while computing {context}")]
    NonIntegralResult { context: &'static str, value: String },
    #[error("exponential base must be nonzero")]
    ZeroExponentialBase,
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence entry {index} is not positive")]
    ZeroEntry { index: usize },
    #[error("tuples A and B have different lengths ({a} vs {b})")]
    PairLengthMismatch { a: usize, b: usize },
    #[error("pair is not suitable: gcd(a_{i}, b_{j}) = {gcd}")]
    UnsuitablePair { i: usize, j: usize, gcd: String },
    #[error("sequence is not compound")]
    NotCompoundInput,
    #[error("index {j} is out of range for a sequence with last index {k}")]
    IndexOutOfRange { j: usize, k: usize },
    #[error("sequence is not smooth")]
    NotSmooth,
    #[error("sequence entries are not coprime (gcd = {gcd})")]
    NotCoprime { gcd: String },
    #[error("ordering search is limited to 8 elements (got {len})")]
    SequenceTooLongForSetSearch { len: usize },
    #[error("closed forms exist only for m in {{0, 1, 2}} (got {m})")]
    UnsupportedPower { m: u32 },
    #[error("second argument must be odd (got {b}); swap the arguments")]
    EvenSecondArgument { b: u64 },
    #[error("Frobenius number {frobenius} exceeds the enumeration cap {cap}")]
    EnumerationCapExceeded { frobenius: String, cap: u64 },
    #[error("value {0} does not fit in a machine integer")]
    ValueTooLarge(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NonIntegralResult { .. } | Error::InvariantViolation(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
