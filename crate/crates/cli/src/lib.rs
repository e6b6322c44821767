//! Command-line front end: family expansion, minor scans, convolution,
//! preserver decisions, the refutation battery, the remainder scanner
//! and canned reproduction scenarios.
//!
//! Machine-readable JSON goes to standard output; a short human summary
//! goes to standard error. Exit codes partition outcomes: 0 for
//! success / no violation, 1 when a mathematical violation was found,
//! 2 for usage or configuration errors.

pub mod commands;
pub mod repro;
pub mod seqsource;

/// Exit status conventions.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Command failure that maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

impl UsageError {
    pub fn new(msg: impl Into<String>) -> Self {
        UsageError(msg.into())
    }
}

macro_rules! usage_from {
    ($($ty:ty),*) => {
        $(impl From<$ty> for UsageError {
            fn from(e: $ty) -> Self {
                UsageError(e.to_string())
            }
        })*
    };
}

usage_from!(
    genfun::GenfunError,
    realroots::RealRootsError,
    tpcheck::TpcheckError,
    preserver::PreserverError,
    serde_json::Error,
    std::io::Error,
    exact_core::rat::ParseRatError
);
