use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tpkit::commands::{
    cmd_conjecture_scan, cmd_expand, cmd_hadamard, cmd_l1_battery, cmd_preserver, cmd_reproduce,
    cmd_tpcheck, BatteryArgs, ConjectureArgs, ExpandArgs, HadamardArgs, PreserverCmd,
    ReproduceArgs, TpcheckArgs,
};
use tpkit::{EXIT_USAGE, EXIT_VIOLATION};

/// Exact-arithmetic toolkit for totally positive sequences and their
/// coefficientwise preservers.
#[derive(Parser)]
#[command(name = "tpkit", version, about)]
struct Cli {
    /// Write the JSON report to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a named generating-function family to coefficients
    Expand(ExpandArgs),
    /// Scan Toeplitz minors or decide total positivity exactly
    Tpcheck(TpcheckArgs),
    /// Coefficientwise product of two sequences
    Hadamard(HadamardArgs),
    /// Preserver decisions (finite support or single pole)
    Preserver {
        #[command(subcommand)]
        which: PreserverCmd,
    },
    /// Convolve against the seven derived test families and check each
    /// image
    L1Battery(BatteryArgs),
    /// Evidence grid for remainder real-rootedness
    ConjectureScan(ConjectureArgs),
    /// Re-run a canned verification scenario
    Reproduce(ReproduceArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Tpcheck(args) => cmd_tpcheck(args),
        Command::Hadamard(args) => cmd_hadamard(args),
        Command::Preserver { which } => cmd_preserver(which),
        Command::L1Battery(args) => cmd_l1_battery(args),
        Command::ConjectureScan(args) => cmd_conjecture_scan(args),
        Command::Reproduce(args) => cmd_reproduce(args),
    };

    match result {
        Ok((value, code, summary)) => {
            let rendered = match serde_json::to_string_pretty(&value) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_USAGE as u8);
                }
            };
            let written = match &cli.output {
                Some(path) => std::fs::write(path, rendered.as_bytes() as &[u8])
                    .and_then(|()| std::fs::OpenOptions::new().append(true).open(path))
                    .and_then(|mut f| f.write_all(b"\n")),
                None => {
                    println!("{rendered}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(EXIT_USAGE as u8);
            }
            eprintln!("{summary}");
            debug_assert!(code == 0 || code == EXIT_VIOLATION);
            ExitCode::from(code as u8)
        }
        Err(usage) => {
            eprintln!("error: {usage}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
