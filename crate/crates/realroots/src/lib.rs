//! Exact real-rootedness and root-location decisions.
//!
//! Root counting runs over exact rationals: Sturm chains on the
//! square-free part give distinct-root counts, and a gcd chain recovers
//! multiplicities, so "real-rooted" always means total multiplicity
//! equals degree. Degree 0/1 and quadratic inputs short-circuit before
//! any chain is built.
//!
//! On top of the counting kernel sit the ratio-based sufficient
//! conditions (consecutive coefficient ratios `>= 4`, and the
//! nonincreasing-parameter variant with the `3.2336367` cutoff) and the
//! finite multiplier-sequence decision.

pub mod checks;
pub mod report;
pub mod sturm;

pub use checks::{
    hutchinson_check, hutchinson_check_window, is_real_rooted_nonpositive, lp1_sufficient_ngthv,
    ms_finite_decide, q_lo,
};
pub use report::{Endpoint, RatioReport, RootMethod, RootReport};
pub use sturm::{distinct_real_roots, real_roots_with_multiplicity, sturm_count};

/// Errors for root-location decisions.
#[derive(Debug, Clone, thiserror::Error)]
pub enum RealRootsError {
    #[error("the zero polynomial has no root-location decision")]
    ZeroPolynomial,
    #[error("invalid interval: lower endpoint must be strictly below upper endpoint")]
    InvalidInterval,
    #[error("coefficient at index {index} is negative; hypothesis requires nonnegative coefficients")]
    NegativeCoefficient { index: usize },
    #[error("coefficient at index {index} is not strictly positive; ratio test requires positive coefficients (restrict the window first)")]
    NonPositiveCoefficient { index: usize },
    #[error("all-zero input has no decision")]
    AllZeroInput,
}
