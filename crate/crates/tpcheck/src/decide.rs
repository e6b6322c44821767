//! Order-2 consistency and the exact decision for finitely supported
//! sequences.

use exact_core::Rat;
use genfun::CoeffSeq;
use realroots::is_real_rooted_nonpositive;

use crate::report::{TPReport, Verdict};
use crate::TpcheckError;

/// Finite-data transcription of two-fold positivity: nonnegative
/// entries, contiguous support, and log-concavity on the support
/// interior (`a_k^2 >= a_{k-1} a_{k+1}`). These are exactly the
/// nonnegativity of the contiguous 2x2 minors.
pub fn tp2_check(s: &CoeffSeq) -> bool {
    let c = s.coeffs();
    if c.iter().any(Rat::is_negative) {
        return false;
    }
    let Some(first) = c.iter().position(|v| !v.is_zero()) else {
        return true; // zero sequence
    };
    let last = c.iter().rposition(|v| !v.is_zero()).unwrap();
    if c[first..=last].iter().any(Rat::is_zero) {
        return false; // gap in the support
    }
    (first + 1..last).all(|k| &c[k] * &c[k] >= &c[k - 1] * &c[k + 1])
}

/// Exact total-positivity decision for a finitely supported sequence:
/// `(a_0, ..., a_n, 0, 0, ...)` is totally positive precisely when its
/// polynomial has only real (nonpositive) zeros, a leading zero run
/// acting as a plain power-of-`z` factor.
pub fn tp_infty_finite_decide(s: &CoeffSeq) -> Result<TPReport, TpcheckError> {
    if !s.exact_tail() {
        return Err(TpcheckError::NotFinitelySupported);
    }
    if let Some(index) = s.first_negative_index() {
        return Err(TpcheckError::NegativeCoefficient { index });
    }

    let no_window = |verdict: Verdict, note: String| TPReport {
        verdict,
        max_order_checked: 0,
        rows: 0,
        cols: 0,
        witness: None,
        min_minor_seen: None,
        note: Some(note),
    };

    let poly = s.to_poly().expect("exact tail checked");
    let Some(shift) = poly.coeffs().iter().position(|c| !c.is_zero()) else {
        return Ok(no_window(
            Verdict::ExactTpInfinity,
            "zero sequence: every minor vanishes".to_owned(),
        ));
    };
    let core = poly.shift_down(shift);
    let report = is_real_rooted_nonpositive(&core)?;
    if report.all_real {
        Ok(no_window(
            Verdict::ExactTpInfinity,
            format!("z^{shift} * ({core}) has only real nonpositive zeros"),
        ))
    } else {
        Ok(no_window(
            Verdict::Violated,
            format!(
                "{core} has {} real zeros (with multiplicity) out of degree {}",
                report.real_root_count, report.degree
            ),
        ))
    }
}
