//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by validation, exact linear algebra, and enumeration.
///
/// Every `Display` message starts with the variant name, so diagnostics
/// surfaced by the CLI always name the violated invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The matrix is ragged, not square, or the rank is out of range.
    #[error("BadDimension: {0}")]
    BadDimension(String),

    /// A diagonal skew exponent is nonzero.
    #[error("NonzeroDiagonal: {0}")]
    NonzeroDiagonal(String),

    /// The exponent matrix is not skew-symmetric.
    #[error("NotSkewSymmetric: {0}")]
    NotSkewSymmetric(String),

    /// Every off-diagonal exponent vanishes, so the ring is a commutative
    /// polynomial ring and carries no skew structure to classify.
    #[error("CommutativeRing: all skew exponents are 0 mod {ell}")]
    CommutativeRing { ell: i64 },

    /// 128-bit intermediate arithmetic overflowed, or an input exceeds the
    /// documented caps.
    #[error("Overflow: {0}")]
    Overflow(&'static str),

    /// An operation defined only in even rank was called with odd rank.
    #[error("OddDimension: {0}")]
    OddDimension(String),

    /// A vector length does not match the matrix dimension.
    #[error("DimensionMismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operation specific to one rank was called with another.
    #[error("WrongDimension: operation requires n = {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },

    /// An enumeration would exceed its configured budget.
    #[error("BudgetExceeded: {task} needs {needed} steps, budget is {budget}")]
    BudgetExceeded {
        task: &'static str,
        needed: u128,
        budget: u128,
    },

    /// Two supposedly equivalent brute-force computations disagreed.
    /// Reaching this indicates a bug, never bad input.
    #[error("DefinitionMismatch: {0}")]
    DefinitionMismatch(String),

    /// The input text could not be parsed at all.
    #[error("Parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
