use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports.
///
/// Display output starts with the condition name so that command-line
/// diagnostics can be matched on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotPrimePower: {0} is not a prime power")]
    NotPrimePower(usize),
    #[error("MixedFields: operands belong to GF({0}) and GF({1})")]
    MixedFields(usize, usize),
    #[error("ZeroInverse: zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("OrderMismatch: Latin squares have orders {0} and {1}")]
    OrderMismatch(usize, usize),
    #[error("NotLatin: rows do not form a Latin square")]
    NotLatin,
    #[error("NonIntegralParams: no (v={v}, t={t}, lambda={lambda}) design exists with integral replication")]
    NonIntegralParams { v: usize, t: usize, lambda: usize },
    #[error("NotDivisible: {dividend} is not divisible by {divisor} ({context})")]
    NotDivisible {
        dividend: usize,
        divisor: usize,
        context: &'static str,
    },
    #[error("OutOfRegime: capacity {k} is outside sqrt(n) <= k <= n/2 for n = {n}")]
    OutOfRegime { n: usize, k: usize },
    #[error("InvalidRange: capacity {k} out of range for n = {n}")]
    InvalidRange { n: usize, k: usize },
    #[error("TooLarge: exact search handles at most {max} proposals, got {n}")]
    TooLarge { n: usize, max: usize },
}
