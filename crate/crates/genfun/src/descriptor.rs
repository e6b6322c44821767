//! JSON family descriptors: a single tagged object that names a family,
//! its parameters and the truncation order.

use exact_core::Rat;
use serde::{Deserialize, Serialize};

use crate::aswe::{expand_aswe, ASWEParams};
use crate::families::{expand_e1, lemma_l1_sequences, partial_theta};
use crate::seq::CoeffSeq;
use crate::GenfunError;

fn rat_one() -> Rat {
    Rat::one()
}

fn rat_zero() -> Rat {
    Rat::zero()
}

fn rat_two() -> Rat {
    Rat::from_int(2)
}

/// `{"family": "...", ..., "N": n}` descriptor accepted on the wire.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyDescriptor {
    Aswe {
        #[serde(rename = "C", default = "rat_one")]
        c: Rat,
        #[serde(default)]
        q: i64,
        #[serde(default = "rat_zero")]
        gamma: Rat,
        #[serde(default)]
        alphas: Vec<Rat>,
        #[serde(default)]
        betas: Vec<Rat>,
        #[serde(rename = "N")]
        n: usize,
    },
    E1 {
        qs: Vec<Rat>,
        #[serde(rename = "N")]
        n: usize,
    },
    PartialTheta {
        a: Rat,
        #[serde(rename = "N")]
        n: usize,
    },
    L1 {
        which: u8,
        #[serde(default = "rat_two")]
        c: Rat,
        #[serde(default = "rat_zero")]
        d: Rat,
        #[serde(default)]
        n: usize,
        #[serde(rename = "N")]
        len: usize,
    },
}

/// Expands a descriptor to its coefficient sequence.
pub fn expand_descriptor(desc: &FamilyDescriptor) -> Result<CoeffSeq, GenfunError> {
    match desc {
        FamilyDescriptor::Aswe {
            c,
            q,
            gamma,
            alphas,
            betas,
            n,
        } => {
            if *n == 0 {
                return Err(bad_n());
            }
            expand_aswe(
                &ASWEParams::new(c.clone(), *q, gamma.clone(), alphas.clone(), betas.clone()),
                *n,
            )
        }
        FamilyDescriptor::E1 { qs, n } => {
            if *n == 0 {
                return Err(bad_n());
            }
            expand_e1(qs, *n)
        }
        FamilyDescriptor::PartialTheta { a, n } => {
            if *n == 0 {
                return Err(bad_n());
            }
            partial_theta(a, *n)
        }
        FamilyDescriptor::L1 { which, c, d, n, len } => {
            if *len == 0 {
                return Err(bad_n());
            }
            if !(1..=7).contains(which) {
                return Err(GenfunError::InvalidParameter {
                    name: "which",
                    value: which.to_string(),
                    constraint: "family index in 1..=7",
                });
            }
            if !c.is_positive() || *c == Rat::one() {
                return Err(GenfunError::InvalidParameter {
                    name: "c",
                    value: c.to_string(),
                    constraint: "c > 0 and c != 1",
                });
            }
            if d.is_negative() {
                return Err(GenfunError::InvalidParameter {
                    name: "d",
                    value: d.to_string(),
                    constraint: "d >= 0",
                });
            }
            let mut fams = lemma_l1_sequences(c, d, *n, *len);
            Ok(fams.swap_remove(usize::from(which - 1)))
        }
    }
}

fn bad_n() -> GenfunError {
    GenfunError::InvalidParameter {
        name: "N",
        value: "0".to_owned(),
        constraint: "N >= 1",
    }
}
