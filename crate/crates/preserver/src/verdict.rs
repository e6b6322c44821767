//! Structured preserver verdicts.

use genfun::CoeffSeq;
use realroots::{RatioReport, RootReport};
use serde::Serialize;
use tpcheck::TPReport;

use crate::conjecture::ConjectureCell;

/// The three possible outcomes of a preserver decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Preserver,
    NotPreserver,
    EvidenceOnly,
}

/// Which criterion produced the decision. A definite verdict
/// (preserver / not-preserver) is only ever issued under a criterion
/// matching the input's shape; everything else stays evidence-only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Theorem1,
    Statement1,
    Theorem2,
    Theorem3,
    TrivialShort,
    L1Battery,
    ConjectureScan,
}

/// A named sub-check carried in the verdict details.
#[derive(Debug, Clone, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub report: SubReport,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum SubReport {
    Root(RootReport),
    Tp(TPReport),
    Ratio(RatioReport),
    Cell(ConjectureCell),
    Note(String),
}

/// Decision plus the evidence it rests on.
#[derive(Debug, Clone, Serialize)]
pub struct PreserverVerdict {
    pub decision: Decision,
    pub basis: Basis,
    pub details: Vec<SubCheck>,
    #[serde(skip)]
    pub subject: Option<CoeffSeq>,
}

impl PreserverVerdict {
    pub fn new(decision: Decision, basis: Basis) -> Self {
        PreserverVerdict {
            decision,
            basis,
            details: Vec::new(),
            subject: None,
        }
    }

    pub fn with_detail(mut self, name: impl Into<String>, report: SubReport) -> Self {
        self.details.push(SubCheck {
            name: name.into(),
            report,
        });
        self
    }

    pub fn is_preserver(&self) -> bool {
        self.decision == Decision::Preserver
    }
}
