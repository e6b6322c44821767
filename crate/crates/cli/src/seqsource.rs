//! Resolving a coefficient sequence from command-line input: an inline
//! `p/q` comma list, a JSON file, or a family descriptor.

use std::path::PathBuf;

use clap::Args;
use exact_core::Rat;
use genfun::{expand_descriptor, CoeffSeq, FamilyDescriptor};

use crate::UsageError;

/// Where a sequence comes from. Exactly one source must be given.
#[derive(Debug, Clone, Args)]
pub struct SeqSource {
    /// Inline coefficients: comma-separated rationals, e.g. "1,1/2,1/4"
    #[arg(long, value_name = "LIST")]
    pub seq: Option<String>,

    /// Treat the inline sequence as finitely supported (all omitted
    /// coefficients are zero)
    #[arg(long, default_value_t = false)]
    pub exact_tail: bool,

    /// JSON file holding a serialized coefficient sequence
    #[arg(long, value_name = "PATH", conflicts_with = "seq")]
    pub file: Option<PathBuf>,

    /// Inline family descriptor, e.g.
    /// '{"family":"aswe","betas":["1"],"N":8}'
    #[arg(long, value_name = "JSON", conflicts_with_all = ["seq", "file"])]
    pub family_json: Option<String>,
}

/// Parses a comma-separated rational list.
pub fn parse_rat_list(input: &str) -> Result<Vec<Rat>, UsageError> {
    input
        .split(',')
        .map(|tok| tok.trim().parse::<Rat>().map_err(UsageError::from))
        .collect()
}

impl SeqSource {
    pub fn resolve(&self) -> Result<CoeffSeq, UsageError> {
        match (&self.seq, &self.file, &self.family_json) {
            (Some(list), None, None) => {
                let coeffs = parse_rat_list(list)?;
                if coeffs.is_empty() {
                    return Err(UsageError::new("--seq needs at least one coefficient"));
                }
                Ok(CoeffSeq::from_rats(coeffs, self.exact_tail))
            }
            (None, Some(path), None) => {
                let text = std::fs::read_to_string(path)?;
                Ok(serde_json::from_str(&text)?)
            }
            (None, None, Some(json)) => {
                let desc: FamilyDescriptor = serde_json::from_str(json)?;
                Ok(expand_descriptor(&desc)?)
            }
            _ => Err(UsageError::new(
                "give exactly one sequence source: --seq, --file or --family-json",
            )),
        }
    }
}
