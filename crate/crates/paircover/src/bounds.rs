//! Referee-count bounds and method comparison, all in exact arithmetic.
//!
//! For n proposals and capacity k:
//!
//! - `lower_bound`:     ⌈n(n−1) / (k(k−1))⌉ — no covering can do better.
//! - `upper_bound_new`: ⌈n(n+k) / k²⌉ — the block-design assignment, valid
//!   when n/k is a prime power, n | k², and √n ≤ k ≤ n/2.
//! - `upper_bound_prior`: ⌈n(2n−k) / k²⌉ — the earlier splitting method,
//!   which needs k | n and wins for k ≥ n/2.
//!
//! Ratios against the lower bound are exact rationals so the ≤ 3/2 checks
//! are decidable without tolerances; nothing here touches floating point.

use num_rational::Ratio;

use crate::{Error, Result};

/// Exact rational used for bound ratios.
pub type Rational = Ratio<u64>;

fn check_range(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidRange { n, k });
    }
    Ok(())
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// ⌈n(n−1) / (k(k−1))⌉ referees are necessary.
pub fn lower_bound(n: usize, k: usize) -> Result<usize> {
    check_range(n, k)?;
    let (n, k) = (n as u64, k as u64);
    Ok(ceil_div(n * (n - 1), k * (k - 1)) as usize)
}

/// ⌈n(n+k) / k²⌉ referees suffice for the block-design assignment.
pub fn upper_bound_new(n: usize, k: usize) -> Result<usize> {
    check_range(n, k)?;
    let (n, k) = (n as u64, k as u64);
    Ok(ceil_div(n * (n + k), k * k) as usize)
}

/// ⌈n(2n−k) / k²⌉ referees suffice for the earlier method; requires k | n.
pub fn upper_bound_prior(n: usize, k: usize) -> Result<usize> {
    check_range(n, k)?;
    if !n.is_multiple_of(k) {
        return Err(Error::NotDivisible {
            dividend: n,
            divisor: k,
            context: "the prior bound applies when capacity divides the proposal count",
        });
    }
    let (n, k) = (n as u64, k as u64);
    Ok(ceil_div(n * (2 * n - k), k * k) as usize)
}

/// Which construction needs fewer referees for a given (n, k).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// The block-design assignment (smaller bound for k ≤ n/2).
    Bibd,
    /// The earlier splitting method (smaller bound for k ≥ n/2).
    Prior,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Bibd => write!(f, "bibd"),
            Method::Prior => write!(f, "prior"),
        }
    }
}

/// Both bounds, the lower bound, and the exact upper/lower ratios.
///
/// The prior-method fields use the printed formula for every k (the
/// divisibility requirement applies to running that method, not to
/// evaluating its bound).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub lower: usize,
    pub upper_new: usize,
    pub upper_prior: usize,
    /// (n+k)(k−1) / ((n−1)k), reduced.
    pub ratio_new: Rational,
    /// (2n−k)(k−1) / ((n−1)k), reduced.
    pub ratio_prior: Rational,
    pub recommended: Method,
}

/// Full comparison for one (n, k).
pub fn compare(n: usize, k: usize) -> Result<BoundsReport> {
    check_range(n, k)?;
    let lower = lower_bound(n, k)?;
    let upper_new = upper_bound_new(n, k)?;
    let (nu, ku) = (n as u64, k as u64);
    let upper_prior = ceil_div(nu * (2 * nu - ku), ku * ku) as usize;
    let recommended = if upper_new <= upper_prior {
        Method::Bibd
    } else {
        Method::Prior
    };
    Ok(BoundsReport {
        n,
        k,
        lower,
        upper_new,
        upper_prior,
        ratio_new: Ratio::new((nu + ku) * (ku - 1), (nu - 1) * ku),
        ratio_prior: Ratio::new((2 * nu - ku) * (ku - 1), (nu - 1) * ku),
        recommended,
    })
}
