//! Subcommand implementations.
//!
//! Each command returns the JSON value to emit plus the exit code
//! derived from its mathematical outcome.

use clap::{Args, Subcommand};
use exact_core::Rat;
use genfun::{expand_descriptor, ASWEParams, FamilyDescriptor};
use preserver::{
    conjecture_scan, decide_finite_preserver, decide_meromorphic_preserver, hadamard,
    l1_battery_with_cap, Decision,
};
use serde_json::{json, Value};
use tpcheck::{minor_scan_with_cap, tp_infty_finite_decide, Verdict};

use crate::seqsource::{parse_rat_list, SeqSource};
use crate::{repro, UsageError, EXIT_OK, EXIT_VIOLATION};

/// Reads the determinant budget: `TPKIT_BUDGET` overrides the default.
pub fn scan_cap() -> Result<u64, UsageError> {
    match std::env::var("TPKIT_BUDGET") {
        Err(_) => Ok(tpcheck::DEFAULT_CAP),
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| UsageError::new(format!("TPKIT_BUDGET = {text:?} is not an integer"))),
    }
}

fn parse_rat(name: &str, text: &str) -> Result<Rat, UsageError> {
    text.parse::<Rat>()
        .map_err(|e| UsageError::new(format!("{name}: {e}")))
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Family name: aswe, e1, partial-theta, l1
    #[arg(long)]
    pub family: String,

    /// Scale factor C (aswe)
    #[arg(long = "C", default_value = "1")]
    pub scale: String,

    /// Power-of-z shift (aswe)
    #[arg(long, default_value_t = 0)]
    pub shift: i64,

    /// Exponential rate gamma (aswe)
    #[arg(long, default_value = "0")]
    pub gamma: String,

    /// Zero factors alpha_k (aswe), comma-separated
    #[arg(long, visible_alias = "alpha", value_name = "LIST")]
    pub alphas: Option<String>,

    /// Pole factors beta_k (aswe), comma-separated
    #[arg(long, visible_alias = "beta", value_name = "LIST")]
    pub betas: Option<String>,

    /// Ratio parameters q_2, q_3, ... (e1), comma-separated
    #[arg(long = "q", visible_alias = "qs", value_name = "LIST")]
    pub qs: Option<String>,

    /// Base a (partial-theta)
    #[arg(long)]
    pub a: Option<String>,

    /// Test-family index 1..=7 (l1)
    #[arg(long)]
    pub which: Option<u8>,

    /// Ratio parameter c (l1)
    #[arg(long, default_value = "2")]
    pub c: String,

    /// Offset parameter d (l1)
    #[arg(long, default_value = "0")]
    pub d: String,

    /// Delay parameter n (l1)
    #[arg(long, default_value_t = 0)]
    pub n: usize,

    /// Number of coefficients to emit
    #[arg(long = "N", default_value_t = 32)]
    pub len: usize,
}

impl ExpandArgs {
    fn descriptor(&self) -> Result<FamilyDescriptor, UsageError> {
        let list = |field: &Option<String>| -> Result<Vec<Rat>, UsageError> {
            field.as_deref().map_or(Ok(Vec::new()), parse_rat_list)
        };
        match self.family.as_str() {
            "aswe" => Ok(FamilyDescriptor::Aswe {
                c: parse_rat("--C", &self.scale)?,
                q: self.shift,
                gamma: parse_rat("--gamma", &self.gamma)?,
                alphas: list(&self.alphas)?,
                betas: list(&self.betas)?,
                n: self.len,
            }),
            "e1" => Ok(FamilyDescriptor::E1 {
                qs: list(&self.qs)?,
                n: self.len,
            }),
            "partial-theta" | "partial_theta" => {
                let a = self
                    .a
                    .as_deref()
                    .ok_or_else(|| UsageError::new("partial-theta needs --a"))?;
                Ok(FamilyDescriptor::PartialTheta {
                    a: parse_rat("--a", a)?,
                    n: self.len,
                })
            }
            "l1" => Ok(FamilyDescriptor::L1 {
                which: self
                    .which
                    .ok_or_else(|| UsageError::new("l1 needs --which 1..=7"))?,
                c: parse_rat("--c", &self.c)?,
                d: parse_rat("--d", &self.d)?,
                n: self.n,
                len: self.len,
            }),
            other => Err(UsageError::new(format!(
                "unknown family {other:?}: expected aswe, e1, partial-theta or l1"
            ))),
        }
    }
}

pub fn cmd_expand(args: &ExpandArgs) -> Result<(Value, i32, String), UsageError> {
    let seq = expand_descriptor(&args.descriptor()?)?;
    let summary = format!(
        "expanded {} coefficients (exact_tail = {})",
        seq.truncation_order(),
        seq.exact_tail()
    );
    Ok((serde_json::to_value(&seq)?, EXIT_OK, summary))
}

#[derive(Debug, Args)]
pub struct TpcheckArgs {
    #[command(flatten)]
    pub source: SeqSource,

    /// Maximum minor order
    #[arg(long, default_value_t = tpcheck::DEFAULT_MAX_ORDER)]
    pub m: usize,

    /// Window rows
    #[arg(long, default_value_t = tpcheck::DEFAULT_WINDOW)]
    pub rows: usize,

    /// Window columns
    #[arg(long, default_value_t = tpcheck::DEFAULT_WINDOW)]
    pub cols: usize,

    /// Force a minor scan even for finitely supported input
    #[arg(long, default_value_t = false)]
    pub scan_only: bool,
}

pub fn cmd_tpcheck(args: &TpcheckArgs) -> Result<(Value, i32, String), UsageError> {
    let seq = args.source.resolve()?;
    let report = if seq.exact_tail() && !args.scan_only {
        tp_infty_finite_decide(&seq)?
    } else {
        minor_scan_with_cap(&seq, args.m, args.rows, args.cols, scan_cap()?)?
    };
    let code = if report.is_violated() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let summary = match report.verdict {
        Verdict::Violated => "violated: negative minor or non-real-rooted polynomial".to_owned(),
        Verdict::ConsistentUpTo => format!(
            "consistent up to order {} on a {}x{} window",
            report.max_order_checked, report.rows, report.cols
        ),
        Verdict::ExactTpInfinity => "exactly totally positive (finite support)".to_owned(),
    };
    Ok((serde_json::to_value(&report)?, code, summary))
}

#[derive(Debug, Args)]
pub struct HadamardArgs {
    /// First factor: comma-separated rationals
    #[arg(long, value_name = "LIST")]
    pub seq_a: String,

    /// First factor is finitely supported
    #[arg(long, default_value_t = false)]
    pub exact_tail_a: bool,

    /// Second factor: comma-separated rationals
    #[arg(long, value_name = "LIST")]
    pub seq_b: String,

    /// Second factor is finitely supported
    #[arg(long, default_value_t = false)]
    pub exact_tail_b: bool,
}

pub fn cmd_hadamard(args: &HadamardArgs) -> Result<(Value, i32, String), UsageError> {
    let a = genfun::CoeffSeq::from_rats(parse_rat_list(&args.seq_a)?, args.exact_tail_a);
    let b = genfun::CoeffSeq::from_rats(parse_rat_list(&args.seq_b)?, args.exact_tail_b);
    let image = hadamard(&a, &b);
    let summary = format!("coefficientwise product of {} entries", image.truncation_order());
    Ok((serde_json::to_value(&image)?, EXIT_OK, summary))
}

#[derive(Debug, Subcommand)]
pub enum PreserverCmd {
    /// Decide a finitely supported sequence (support length <= 5)
    Finite {
        #[command(flatten)]
        source: SeqSource,
    },
    /// Decide a product-form function with at least one pole
    Meromorphic {
        /// Scale factor C
        #[arg(long = "C", default_value = "1")]
        scale: String,
        /// Power-of-z shift
        #[arg(long, default_value_t = 0)]
        shift: i64,
        /// Exponential rate gamma
        #[arg(long, default_value = "0")]
        gamma: String,
        /// Zero factors, comma-separated
        #[arg(long, visible_alias = "alpha", value_name = "LIST")]
        alphas: Option<String>,
        /// Pole factors, comma-separated
        #[arg(long, visible_alias = "beta", value_name = "LIST")]
        betas: Option<String>,
    },
}

pub fn cmd_preserver(cmd: &PreserverCmd) -> Result<(Value, i32, String), UsageError> {
    let verdict = match cmd {
        PreserverCmd::Finite { source } => {
            let seq = source.resolve()?;
            decide_finite_preserver(&seq)?
        }
        PreserverCmd::Meromorphic {
            scale,
            shift,
            gamma,
            alphas,
            betas,
        } => {
            let list = |field: &Option<String>| -> Result<Vec<Rat>, UsageError> {
                field.as_deref().map_or(Ok(Vec::new()), parse_rat_list)
            };
            let params = ASWEParams::new(
                parse_rat("--C", scale)?,
                *shift,
                parse_rat("--gamma", gamma)?,
                list(alphas)?,
                list(betas)?,
            );
            decide_meromorphic_preserver(&params)?
        }
    };
    let code = if verdict.decision == Decision::NotPreserver {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let summary = format!("decision: {:?} (basis {:?})", verdict.decision, verdict.basis);
    Ok((serde_json::to_value(&verdict)?, code, summary))
}

#[derive(Debug, Args)]
pub struct BatteryArgs {
    #[command(flatten)]
    pub source: SeqSource,

    /// Ratio parameter c for the geometric test families
    #[arg(long, default_value = "2")]
    pub c: String,

    /// Offset parameter d
    #[arg(long, default_value = "0")]
    pub d: String,

    /// Delay parameter n
    #[arg(long, default_value_t = 0)]
    pub n: usize,

    #[arg(long, default_value_t = tpcheck::DEFAULT_MAX_ORDER)]
    pub m: usize,

    #[arg(long, default_value_t = tpcheck::DEFAULT_WINDOW)]
    pub rows: usize,

    #[arg(long, default_value_t = tpcheck::DEFAULT_WINDOW)]
    pub cols: usize,
}

pub fn cmd_l1_battery(args: &BatteryArgs) -> Result<(Value, i32, String), UsageError> {
    let seq = args.source.resolve()?;
    let c = parse_rat("--c", &args.c)?;
    let d = parse_rat("--d", &args.d)?;
    if !c.is_positive() || c == Rat::one() {
        return Err(UsageError::new("--c must be positive and different from 1"));
    }
    if d.is_negative() {
        return Err(UsageError::new("--d must be nonnegative"));
    }
    let reports = l1_battery_with_cap(
        &seq, &c, &d, args.n, args.m, args.rows, args.cols, scan_cap()?,
    )?;
    let violated: Vec<u8> = reports
        .iter()
        .filter(|(_, r)| r.is_violated())
        .map(|(id, _)| *id)
        .collect();
    let code = if violated.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    let summary = if violated.is_empty() {
        "no family violated".to_owned()
    } else {
        format!("violated families: {violated:?}")
    };
    let value = json!({
        "families": reports
            .iter()
            .map(|(id, r)| json!({"family": id, "report": r}))
            .collect::<Vec<_>>(),
        "violated": violated,
    });
    Ok((value, code, summary))
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[command(flatten)]
    pub source: SeqSource,

    /// Largest remainder shift to test
    #[arg(long, default_value_t = 3)]
    pub l_max: usize,

    /// Truncation degrees, comma-separated
    #[arg(long, default_value = "2,4,6", value_name = "LIST")]
    pub degrees: String,
}

pub fn cmd_conjecture_scan(args: &ConjectureArgs) -> Result<(Value, i32, String), UsageError> {
    let seq = args.source.resolve()?;
    let degrees: Vec<usize> = args
        .degrees
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| UsageError::new(format!("bad degree {tok:?}")))
        })
        .collect::<Result<_, _>>()?;
    let verdict = conjecture_scan(&seq, args.l_max, &degrees)?;
    let summary = format!(
        "evidence grid over {} cells (never a definite verdict)",
        verdict.details.len()
    );
    Ok((serde_json::to_value(&verdict)?, EXIT_OK, summary))
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Scenario: counterexample, lemma2, h-sign, tt2-witness,
    /// e1-hutchinson
    #[arg(long)]
    pub which: String,

    /// Seed for the sampled parts of a scenario
    #[arg(long, default_value_t = 0x7051_7153)]
    pub seed: u64,
}

pub fn cmd_reproduce(args: &ReproduceArgs) -> Result<(Value, i32, String), UsageError> {
    let report = match args.which.as_str() {
        "counterexample" => repro::counterexample(),
        "lemma2" => repro::lemma2(args.seed),
        "h-sign" => repro::h_sign(args.seed),
        "tt2-witness" => repro::tt2_witness_scenario(args.seed),
        "e1-hutchinson" => repro::e1_hutchinson(),
        other => {
            return Err(UsageError::new(format!(
                "unknown scenario {other:?}: expected counterexample, lemma2, h-sign, \
                 tt2-witness or e1-hutchinson"
            )))
        }
    };
    let code = if report.pass { EXIT_OK } else { EXIT_VIOLATION };
    let summary = format!(
        "{}: {} ({} steps)",
        report.target,
        if report.pass { "pass" } else { "FAIL" },
        report.steps.len()
    );
    Ok((serde_json::to_value(&report)?, code, summary))
}
