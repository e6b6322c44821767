//! Result types for root-location decisions.

use exact_core::Rat;
use serde::{Deserialize, Serialize};

/// Interval endpoint: finite rational or an infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl Endpoint {
    /// Strict ordering on the extended rational line.
    pub fn strictly_below(&self, other: &Endpoint) -> bool {
        match (self, other) {
            (Endpoint::NegInf, Endpoint::NegInf) => false,
            (Endpoint::NegInf, _) => true,
            (_, Endpoint::NegInf) => false,
            (Endpoint::PosInf, _) => false,
            (_, Endpoint::PosInf) => true,
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a < b,
        }
    }
}

impl From<Rat> for Endpoint {
    fn from(r: Rat) -> Self {
        Endpoint::Finite(r)
    }
}

/// How a real-rootedness verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootMethod {
    Sturm,
    Quadratic,
    Degree01,
}

/// Outcome of a real-rootedness decision for one polynomial.
///
/// `real_root_count` counts with multiplicity, so `all_real` holds
/// exactly when it equals the degree. `all_nonpositive` is only
/// meaningful when `all_real` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub real_root_count: usize,
    pub degree: usize,
    pub all_real: bool,
    pub all_nonpositive: bool,
    pub method: RootMethod,
}

/// Consecutive coefficient ratios `a_{n-1}^2 / (a_{n-2} a_n)` over a
/// positive-coefficient window, and whether every ratio reaches 4.
///
/// A window shorter than three coefficients carries no ratio; the test
/// then passes vacuously and `min_ratio` is absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub ratios: Vec<Rat>,
    pub min_ratio: Option<Rat>,
    pub passes_hutchinson: bool,
}
