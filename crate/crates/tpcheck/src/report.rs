//! Scan verdicts and witnesses.

use exact_core::Rat;
use serde::{Deserialize, Serialize};

/// Outcome vocabulary for total-positivity checks.
///
/// A finite window can refute but never certify the infinite condition,
/// so positive scan evidence is always `ConsistentUpTo`;
/// `ExactTpInfinity` is reserved for finitely supported sequences
/// decided through real-rootedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Violated,
    ConsistentUpTo,
    ExactTpInfinity,
}

/// First negative minor found, in (size, row-set, column-set) order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Rat,
}

/// Result of a total-positivity check.
///
/// `min_minor` is the smallest minor value encountered: over all orders
/// `1..=max_order_checked` when the scan completes, or over all orders
/// up to and including the witness order when a violation stops the
/// scan. Structurally zero minors (index pairs whose submatrix has a
/// forced zero block) count as zeros. Decisions reached without
/// scanning any window carry no `min_minor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TPReport {
    pub verdict: Verdict,
    #[serde(rename = "m")]
    pub max_order_checked: usize,
    #[serde(rename = "R")]
    pub rows: usize,
    #[serde(rename = "C")]
    pub cols: usize,
    pub witness: Option<MinorWitness>,
    #[serde(rename = "min_minor")]
    pub min_minor_seen: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl TPReport {
    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}
