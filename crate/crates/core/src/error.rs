use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("{value} needs more than {length} binary digits")]
    WordTooShort { value: String, length: usize },
    #[error("dyadic exponent does not fit in 32 bits")]
    ExponentOverflow,
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: u8, right: u8 },
    #[error("{operation} is only defined for arity {expected}, got {arity}")]
    UnsupportedArity {
        operation: &'static str,
        expected: u8,
        arity: u8,
    },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("rotation {rotation} is outside 1..={leaves}")]
    InvalidRotation { rotation: usize, leaves: usize },
    #[error("domain has {domain} leaves but range has {range}")]
    LeafCountMismatch { domain: usize, range: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("element does not fix 0 (rotation {0} after reduction)")]
    NotInF(usize),
    #[error("element is not in Jones' subgroup")]
    NotInJonesSubgroup,
    #[error("element is already in Jones' subgroup")]
    InJonesSubgroup,
    #[error("no witness exponent up to {cap}")]
    CapExhausted { cap: u32 },
    #[error("{alpha} is not an interior fixed point")]
    NotAFixedPoint { alpha: String },
    #[error("a core needs at least one generator")]
    EmptyGeneratorList,
    #[error("unknown relation suite `{0}`")]
    UnknownSuite(String),
    #[error("letter `{0}` is not allowed here")]
    UnsupportedLetter(String),
    #[error("index {index} is outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
}
