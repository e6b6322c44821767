//! Timing probe for the minor-scan kernel at the default window.
//!
//! Run with `cargo run -p tpcheck --release --example bench_scan`.

use std::time::Instant;

use exact_core::Rat;
use genfun::{expand_aswe, ASWEParams, CoeffSeq};

fn main() {
    // rational-heavy sequence: two fractional poles plus an exponential
    let params = ASWEParams::new(
        Rat::one(),
        0,
        Rat::new(1, 2),
        vec![Rat::new(2, 3)],
        vec![Rat::new(1, 3), Rat::new(1, 2)],
    );
    let s = expand_aswe(&params, 16).unwrap();
    let t = Instant::now();
    let rep = tpcheck::minor_scan(&s, 4, 16, 16).unwrap();
    println!(
        "rational-heavy default scan: {:?} ({:?}, min {:?})",
        t.elapsed(),
        rep.verdict,
        rep.min_minor_seen.map(|m| m.to_string())
    );

    let ones = CoeffSeq::from_ints(&[1; 16], false);
    let t = Instant::now();
    let rep = tpcheck::minor_scan(&ones, 4, 16, 16).unwrap();
    println!(
        "integer default scan:        {:?} ({:?})",
        t.elapsed(),
        rep.verdict
    );
}
