//! Named generating-function families expanded to exact coefficient
//! prefixes.
//!
//! Families covered:
//!
//! - ASWE-form functions `C z^q e^{gamma z} prod(1+alpha_k z) / prod(1-beta_k z)`
//!   with finitely many factors,
//! - the `q`-parameterized entire functions with
//!   `a_k = 1/(q_2^{k-1} q_3^{k-2} ... q_k)`,
//! - the partial theta function `sum_j z^j a^{-j^2}`,
//! - the seven derived test sequences used by the battery in the
//!   preserver crate.
//!
//! Every generator returns a [`CoeffSeq`]: a series prefix tagged with
//! the family and the parameters that produced it.

pub mod aswe;
pub mod descriptor;
pub mod families;
pub mod seq;

pub use aswe::{expand_aswe, ASWEParams};
pub use descriptor::{expand_descriptor, FamilyDescriptor};
pub use families::{expand_e1, lemma_l1_sequences, partial_theta, L1_FAMILY_COUNT};
pub use seq::{CoeffSeq, FamilyTag, ParamsEcho};

/// Errors for family expansion.
#[derive(Debug, Clone, thiserror::Error)]
pub enum GenfunError {
    #[error("shift exponent q = {q} is negative: Laurent shifts are not supported")]
    NegativeShift { q: i64 },
    #[error("parameter {name} = {value} violates constraint: {constraint}")]
    InvalidParameter {
        name: &'static str,
        value: String,
        constraint: &'static str,
    },
    #[error("prefix of length {requested} needs q_k up to k = {needed}, but only {provided} values were provided")]
    MissingE1Parameter {
        requested: usize,
        needed: usize,
        provided: usize,
    },
}
