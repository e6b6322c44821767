//! Preserver decision for finitely supported sequences.

use exact_core::Poly;
use genfun::CoeffSeq;
use realroots::is_real_rooted_nonpositive;
use tpcheck::tp_infty_finite_decide;

use crate::verdict::{Basis, Decision, PreserverVerdict, SubCheck, SubReport};
use crate::PreserverError;

/// Decides whether a finitely supported nonnegative sequence preserves
/// total positivity.
///
/// A leading zero run is stripped first (it acts as a plain power-of-`z`
/// factor on every image and does not affect the answer). With a
/// contiguous positive support of length `L`:
///
/// - `L <= 2`: always a preserver;
/// - `L = 3`: preserver iff the quadratic has only real zeros;
/// - `L = 4`: preserver iff the cubic and its once-shifted tail are both
///   real-rooted;
/// - `L = 5`: preserver iff all three shifted tails are real-rooted;
/// - `L > 5`: no finite criterion is known; the verdict stays
///   evidence-only and points at the scanners.
///
/// A support with interior zeros falls outside every criterion: the
/// verdict is `not_preserver` only when the sequence itself already
/// fails total positivity (the all-ones image), and evidence-only
/// otherwise.
pub fn decide_finite_preserver(s: &CoeffSeq) -> Result<PreserverVerdict, PreserverError> {
    if !s.exact_tail() {
        return Err(PreserverError::NotFinitelySupported);
    }
    if let Some(index) = s.first_negative_index() {
        return Err(PreserverError::NegativeCoefficient { index });
    }

    let poly = s.to_poly().expect("exact tail checked");
    let Some(shift) = poly.coeffs().iter().position(|c| !c.is_zero()) else {
        return Ok(PreserverVerdict::new(Decision::Preserver, Basis::TrivialShort)
            .with_detail(
                "support",
                SubReport::Note("zero sequence: every image is the zero sequence".into()),
            ));
    };
    let core = poly.shift_down(shift);
    let len = core.degree().expect("nonzero") + 1;

    if core.coeffs().iter().any(|c| c.is_zero()) {
        // interior zero: outside the hypotheses of every criterion
        let tp = tp_infty_finite_decide(s)?;
        if tp.is_violated() {
            return Ok(
                PreserverVerdict::new(Decision::NotPreserver, Basis::L1Battery).with_detail(
                    "image under the all-ones sequence (the sequence itself)",
                    SubReport::Tp(tp),
                ),
            );
        }
        return Ok(
            PreserverVerdict::new(Decision::EvidenceOnly, Basis::ConjectureScan).with_detail(
                "support",
                SubReport::Note(
                    "interior zero in the support: no finite criterion applies; \
                     the sequence itself is totally positive, run the battery or \
                     the remainder scanner for evidence"
                        .into(),
                ),
            ),
        );
    }

    let shift_note = || {
        SubCheck {
            name: "shift".into(),
            report: SubReport::Note(format!("leading zero run of length {shift} stripped")),
        }
    };

    match len {
        0 | 1 | 2 => {
            let mut v = PreserverVerdict::new(Decision::Preserver, Basis::TrivialShort);
            if shift > 0 {
                v.details.push(shift_note());
            }
            v.details.push(SubCheck {
                name: "support".into(),
                report: SubReport::Note(format!("support length {len} needs no criterion")),
            });
            Ok(v)
        }
        3 => {
            let report = is_real_rooted_nonpositive(&core)?;
            let decision = if report.all_real {
                Decision::Preserver
            } else {
                Decision::NotPreserver
            };
            let mut v = PreserverVerdict::new(decision, Basis::Statement1);
            if shift > 0 {
                v.details.push(shift_note());
            }
            Ok(v.with_detail(format!("{core}"), SubReport::Root(report)))
        }
        4 | 5 => {
            let basis = if len == 4 {
                Basis::Theorem2
            } else {
                Basis::Theorem3
            };
            let mut v = PreserverVerdict::new(Decision::Preserver, basis);
            if shift > 0 {
                v.details.push(shift_note());
            }
            let mut all_pass = true;
            for drop in 0..len - 2 {
                let tail = section_from(&core, drop);
                let report = is_real_rooted_nonpositive(&tail)?;
                all_pass &= report.all_real;
                v.details.push(SubCheck {
                    name: format!("tail from index {drop}: {tail}"),
                    report: SubReport::Root(report),
                });
            }
            if !all_pass {
                v.decision = Decision::NotPreserver;
            }
            Ok(v)
        }
        _ => Ok(
            PreserverVerdict::new(Decision::EvidenceOnly, Basis::ConjectureScan).with_detail(
                "support",
                SubReport::Note(format!(
                    "support length {len} exceeds every finite criterion (max 5); \
                     run the battery or the remainder scanner for evidence"
                )),
            ),
        ),
    }
}

/// `sum_{k=drop}^{deg} c_k x^k`: the polynomial with its lowest `drop`
/// coefficients zeroed.
fn section_from(p: &Poly, drop: usize) -> Poly {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k < drop {
                exact_core::Rat::zero()
            } else {
                c.clone()
            }
        })
        .collect();
    Poly::new(coeffs)
}
