//! Refutation battery: convolve against the seven derived test
//! sequences and check each image.

use genfun::{lemma_l1_sequences, CoeffSeq};
use exact_core::Rat;
use tpcheck::{minor_scan_with_cap, tp_infty_finite_decide, TPReport, TpcheckError};

use crate::hadamard::hadamard;
use crate::PreserverError;

/// Runs the seven-family battery against `a`: each family is expanded
/// to `a`'s truncation, convolved coefficientwise, and the image is
/// checked. A violated entry certifies that `a` is not a preserver,
/// with a witness.
///
/// Finitely supported images are settled exactly through the polynomial
/// decision; a violated one is additionally scanned to attach a
/// concrete negative-minor witness when the window budget finds one.
/// Infinite-support images fall back to the minor scan over the given
/// window.
pub fn l1_battery(
    a: &CoeffSeq,
    c: &Rat,
    d: &Rat,
    n: usize,
    m: usize,
    rows: usize,
    cols: usize,
) -> Result<Vec<(u8, TPReport)>, PreserverError> {
    l1_battery_with_cap(a, c, d, n, m, rows, cols, tpcheck::DEFAULT_CAP)
}

#[allow(clippy::too_many_arguments)]
pub fn l1_battery_with_cap(
    a: &CoeffSeq,
    c: &Rat,
    d: &Rat,
    n: usize,
    m: usize,
    rows: usize,
    cols: usize,
    cap: u64,
) -> Result<Vec<(u8, TPReport)>, PreserverError> {
    if let Some(index) = a.first_negative_index() {
        return Err(PreserverError::NegativeCoefficient { index });
    }
    let len = a.truncation_order();
    let families = lemma_l1_sequences(c, d, n, len);

    let mut out = Vec::with_capacity(families.len());
    for (idx, family) in families.iter().enumerate() {
        let id = (idx + 1) as u8;
        let image = hadamard(a, family);
        let report = if image.exact_tail() {
            let mut rep = tp_infty_finite_decide(&image)?;
            if rep.is_violated() {
                // best effort: attach a concrete negative minor
                match minor_scan_with_cap(&image, m, rows, cols, cap) {
                    Ok(scan) if scan.is_violated() => {
                        let note = rep.note.take();
                        rep = scan;
                        rep.note = note;
                    }
                    Ok(_) | Err(TpcheckError::BudgetExceeded { .. }) => {}
                    Err(e) => return Err(e.into()),
                }
            }
            rep
        } else {
            minor_scan_with_cap(&image, m, rows, cols, cap)?
        };
        out.push((id, report));
    }
    Ok(out)
}
