//! Toeplitz windows, exact minor scanning and total-positivity verdicts.
//!
//! A coefficient prefix `(a_k)` spans the upper-triangular Toeplitz
//! window with entry `(i, j) = a_{j-i}` (zero below the diagonal band).
//! [`minor_scan`] checks every minor up to a given order with exact
//! fraction-free determinants and reports either a concrete negative
//! witness or consistency up to that order. For finitely supported
//! sequences, [`tp_infty_finite_decide`] settles full total positivity
//! exactly through real-rootedness of the polynomial part.
//!
//! Verdict vocabulary is deliberate: a scan over a finite window never
//! asserts more than `consistent_up_to`; only the finitely-supported
//! decision path may say `exact_tp_infinity`.

pub mod decide;
pub mod det;
pub mod report;
pub mod scan;
pub mod window;

pub use decide::{tp2_check, tp_infty_finite_decide};
pub use det::{det_cofactor, det_exact};
pub use report::{MinorWitness, TPReport, Verdict};
pub use scan::{
    count_canonical_pairs, count_dominated_pairs, minor_scan, minor_scan_with_cap, ScanOptions,
    DEFAULT_CAP, DEFAULT_MAX_ORDER, DEFAULT_WINDOW,
};
pub use window::{toeplitz_window, ToeplitzWindow};

/// Errors for window construction and minor scanning.
#[derive(Debug, Clone, thiserror::Error)]
pub enum TpcheckError {
    #[error("window must have at least one row and one column (got {rows}x{cols})")]
    EmptyWindow { rows: usize, cols: usize },
    #[error("minor order m = {m} must satisfy 1 <= m <= min(R, C) = {limit}")]
    BadOrder { m: usize, limit: usize },
    #[error("window needs coefficient a_{needed}, but only {known} coefficients are known and the tail is not exact")]
    WindowExceedsKnown { needed: usize, known: usize },
    #[error("scan requires {required} determinants, over the configured cap {cap}; reduce m or the window, or raise the cap")]
    BudgetExceeded { required: u128, cap: u64 },
    #[error("coefficient at index {index} is negative")]
    NegativeCoefficient { index: usize },
    #[error("sequence tail is not exact: total positivity cannot be decided from a finite prefix")]
    NotFinitelySupported,
    #[error(transparent)]
    RealRoots(#[from] realroots::RealRootsError),
}
