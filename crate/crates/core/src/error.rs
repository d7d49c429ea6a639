use thiserror::Error;

use crate::word::BinaryWord;

/// Errors raised when an operation's precondition does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid character {found:?} at position {position}: words use only '0' and '1'")]
    Parse { position: usize, found: char },

    #[error("factor bounds [{i}..{j}] are out of range for a word of length {len}")]
    Bounds { i: usize, j: usize, len: usize },

    #[error("factor length {k} exceeds word length {len}")]
    FactorLength { k: usize, len: usize },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("(a, b) = (0, 0) does not determine a segment")]
    ZeroVector,

    #[error("({a}, {b}) must be coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("word {0} is not balanced")]
    NotBalanced(BinaryWord),

    #[error("word {0} is not central")]
    NotCentral(BinaryWord),

    #[error("word {0} is not a prefix of a lower Christoffel word")]
    NotPlc(BinaryWord),

    #[error("digital bar for Parikh vector ({a}, {b}) is degenerate: both letters must occur")]
    DegenerateBar { a: u64, b: u64 },

    #[error("integer overflow while computing with ({a}, {b})")]
    Overflow { a: u64, b: u64 },

    #[error("size {size} exceeds the cap of {cap}")]
    CapExceeded { size: u64, cap: u64 },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = WordError> = std::result::Result<T, E>;
