//! Coefficientwise convolution and the preserver decision procedures.
//!
//! A nonnegative sequence `(a_k)` acts on sequences by `(b_k) ->
//! (a_k b_k)`. This crate decides, where a finite criterion exists,
//! whether that action maps every totally positive sequence to a
//! totally positive sequence:
//!
//! - generating functions with a pole: preserver exactly for
//!   `C / (1 - beta z)` ([`decide_meromorphic_preserver`]), with the
//!   partial-fraction and series machinery behind the necessity
//!   argument implemented and checked exactly;
//! - supports of length at most 5: decided through real-rootedness of
//!   the section polynomials ([`decide_finite_preserver`]);
//! - everything else: refutation batteries and evidence scanners that
//!   never overclaim ([`l1_battery`], [`conjecture_scan`]).

pub mod battery;
pub mod conjecture;
pub mod finite;
pub mod hadamard;
pub mod hcoeff;
pub mod lemma2;
pub mod meromorphic;
pub mod pfrac;
pub mod s7;
pub mod surd;
pub mod tt2;
pub mod verdict;

pub use battery::{l1_battery, l1_battery_with_cap};
pub use conjecture::{conjecture_scan, ConjectureCell};
pub use finite::decide_finite_preserver;
pub use hadamard::{hadamard, hadamard_prefix};
pub use hcoeff::h2n3_coefficient;
pub use lemma2::{lemma2_q, Lemma2Result};
pub use meromorphic::decide_meromorphic_preserver;
pub use pfrac::partial_fractions_single_pole;
pub use s7::{normalize_c0_c1, s7_inequalities, S7Report};
pub use surd::QuadExt;
pub use tt2::{tt2_witness, TT2Flags, TT2Witness};
pub use verdict::{Basis, Decision, PreserverVerdict, SubCheck, SubReport};

/// Errors for preserver decisions and the proof-witness computations.
#[derive(Debug, Clone, thiserror::Error)]
pub enum PreserverError {
    #[error("sequence tail is not exact; the finite-support decision needs a finitely supported sequence")]
    NotFinitelySupported,
    #[error("coefficient at index {index} is negative; preservers are nonnegative sequences")]
    NegativeCoefficient { index: usize },
    #[error("no pole given (betas empty): use the finite-support or evidence pathways instead")]
    NoPole,
    #[error("C = 0 makes the function identically zero, so it has no pole: use the finite-support pathway instead")]
    ZeroScale,
    #[error("polynomial degree {degree} must be strictly below the pole order {n}")]
    DegreeTooHigh { degree: usize, n: usize },
    #[error("internal identity mismatch in {what}: formula transcription bug")]
    IdentityMismatch { what: &'static str },
    #[error("parameter {name} = {value} violates constraint: {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: String,
        constraint: &'static str,
    },
    #[error("sequence is not normalized to c0 = c1 = 1; rescale first")]
    NotNormalized,
    #[error("need at least {needed} known coefficients, have {have}")]
    MissingCoefficients { needed: usize, have: usize },
    #[error(transparent)]
    RealRoots(#[from] realroots::RealRootsError),
    #[error(transparent)]
    Tpcheck(#[from] tpcheck::TpcheckError),
    #[error(transparent)]
    Genfun(#[from] genfun::GenfunError),
}
