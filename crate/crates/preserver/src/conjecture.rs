//! Evidence scanner for the remainder conjecture.
//!
//! The conjectured characterization of entire preservers asks every
//! remainder `sum_{k>=l} a_k z^k` to have only real nonpositive zeros.
//! That is not decidable from a finite prefix, so this scanner only
//! gathers evidence: for each shift `l` and truncation degree `D` it
//! tests the window `a_l..a_{l+D}` with the ratio condition (sufficient)
//! and exact real-rootedness of the truncated remainder. The verdict is
//! always evidence-only.

use exact_core::{Poly, Rat};
use genfun::CoeffSeq;
use realroots::{hutchinson_check_window, is_real_rooted_nonpositive};
use serde::Serialize;

use crate::verdict::{Basis, Decision, PreserverVerdict, SubCheck, SubReport};
use crate::PreserverError;

/// One cell of the evidence grid.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureCell {
    pub l: usize,
    pub degree: usize,
    /// Ratio-condition outcome on the window; absent when the window
    /// has a nonpositive entry (hypothesis unavailable).
    pub hutchinson_passes: Option<bool>,
    /// Exact real-rootedness of the truncated remainder; absent when
    /// the window carries no data (all zeros).
    pub real_rooted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Scans remainder truncations for all shifts `0..=l_max` and the given
/// truncation degrees.
pub fn conjecture_scan(
    a: &CoeffSeq,
    l_max: usize,
    trunc_degrees: &[usize],
) -> Result<PreserverVerdict, PreserverError> {
    if let Some(index) = a.first_negative_index() {
        return Err(PreserverError::NegativeCoefficient { index });
    }

    let mut verdict = PreserverVerdict::new(Decision::EvidenceOnly, Basis::ConjectureScan);
    for l in 0..=l_max {
        for &degree in trunc_degrees {
            let cell = scan_cell(a, l, degree)?;
            verdict.details.push(SubCheck {
                name: format!("l={l} D={degree}"),
                report: SubReport::Cell(cell),
            });
        }
    }
    Ok(verdict)
}

fn scan_cell(a: &CoeffSeq, l: usize, degree: usize) -> Result<ConjectureCell, PreserverError> {
    let mut cell = ConjectureCell {
        l,
        degree,
        hutchinson_passes: None,
        real_rooted: None,
        note: None,
    };

    let window: Option<Vec<Rat>> = (l..=l + degree).map(|k| a.known_coeff(k)).collect();
    let Some(window) = window else {
        cell.note = Some(format!(
            "insufficient data: needs coefficients up to index {} of {} known",
            l + degree,
            a.truncation_order()
        ));
        return Ok(cell);
    };

    if window.iter().all(Rat::is_positive) {
        cell.hutchinson_passes =
            Some(hutchinson_check_window(&window)?.passes_hutchinson);
    }

    // truncated remainder: z^l * (window polynomial); the shift factor
    // contributes only origin zeros
    let body = Poly::new(window);
    match body.degree() {
        None => {
            cell.note = Some("window is identically zero".into());
        }
        Some(_) => {
            let low = body.coeffs().iter().position(|c| !c.is_zero()).unwrap();
            let stripped = body.shift_down(low);
            cell.real_rooted = Some(is_real_rooted_nonpositive(&stripped)?.all_real);
        }
    }
    Ok(cell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use genfun::{expand_e1, partial_theta};

    fn cells(v: &PreserverVerdict) -> Vec<&ConjectureCell> {
        v.details
            .iter()
            .filter_map(|d| match &d.report {
                SubReport::Cell(c) => Some(c),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn ratio_four_family_passes_everywhere() {
        let a = expand_e1(&vec![Rat::from_int(4); 5], 7).unwrap();
        let v = conjecture_scan(&a, 2, &[2, 3, 4]).unwrap();
        assert_eq!(v.decision, Decision::EvidenceOnly);
        for c in cells(&v) {
            assert_eq!(c.hutchinson_passes, Some(true), "cell {c:?}");
            assert_eq!(c.real_rooted, Some(true), "cell {c:?}");
        }
    }

    #[test]
    fn geometric_remainders_fail() {
        let a = CoeffSeq::from_ints(&[1; 10], false);
        let v = conjecture_scan(&a, 2, &[2, 3]).unwrap();
        for c in cells(&v) {
            assert_eq!(c.hutchinson_passes, Some(false));
            assert_eq!(c.real_rooted, Some(false), "cell {c:?}");
        }
    }

    #[test]
    fn partial_theta_at_base_two_passes() {
        let a = partial_theta(&Rat::from_int(2), 8).unwrap();
        let v = conjecture_scan(&a, 3, &[2, 3]).unwrap();
        for c in cells(&v) {
            assert_eq!(c.hutchinson_passes, Some(true), "cell {c:?}");
        }
    }

    #[test]
    fn out_of_data_cells_are_marked() {
        let a = CoeffSeq::from_ints(&[1, 1, 1], false);
        let v = conjecture_scan(&a, 1, &[4]).unwrap();
        for c in cells(&v) {
            assert!(c.note.as_deref().unwrap().contains("insufficient data"));
            assert_eq!(c.real_rooted, None);
        }
        // with an exact tail the same window is known (zero-filled)
        let a = CoeffSeq::from_ints(&[1, 2, 1], true);
        let v = conjecture_scan(&a, 0, &[4]).unwrap();
        assert_eq!(cells(&v)[0].real_rooted, Some(true));
    }
}
