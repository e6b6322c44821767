//! Ratio inequalities forced on a normalized totally positive series.
//!
//! For `g(y) = 1 + y + y^2/q_2 + y^3/(q_2^2 q_3) + ...` (the
//! normalization `c_0 = c_1 = 1` with `p_k = c_{k-1}/c_k` and
//! `q_{k+1} = p_{k+1}/p_k`), total positivity of the coefficient
//! sequence forces
//!
//! `q_2 >= 1`, `q_3 >= 1`, `q_2^2 q_3 - 2 q_2 q_3 + 1 >= 0`,
//!
//! each coming from an explicit small minor of the Toeplitz matrix.

use exact_core::Rat;
use genfun::CoeffSeq;
use serde::Serialize;

use crate::PreserverError;

/// The two ratio parameters and the three inequality outcomes.
#[derive(Debug, Clone, Serialize)]
pub struct S7Report {
    pub q2: Rat,
    pub q3: Rat,
    pub q2_ge_1: bool,
    pub q3_ge_1: bool,
    /// `q2^2 q3 - 2 q2 q3 + 1 >= 0`
    pub cubic_minor_ge_0: bool,
}

impl S7Report {
    pub fn all(&self) -> bool {
        self.q2_ge_1 && self.q3_ge_1 && self.cubic_minor_ge_0
    }
}

/// Rescales `c_k -> C lambda^k c_k` so that `c_0 = c_1 = 1` (total
/// positivity is invariant under such rescalings). Requires
/// `c_0, c_1 > 0`.
pub fn normalize_c0_c1(s: &CoeffSeq) -> Result<CoeffSeq, PreserverError> {
    let c = s.coeffs();
    if c.len() < 2 {
        return Err(PreserverError::MissingCoefficients {
            needed: 2,
            have: c.len(),
        });
    }
    for v in c.iter().take(2) {
        if !v.is_positive() {
            return Err(PreserverError::InvalidParameter {
                name: "c0, c1",
                value: v.to_string(),
                constraint: "normalization needs c0 > 0 and c1 > 0",
            });
        }
    }
    let scale = c[0].recip();
    let lambda = &c[0] / &c[1];
    let coeffs = c
        .iter()
        .enumerate()
        .map(|(k, v)| &(&scale * &lambda.pow(k as i32)) * v)
        .collect();
    Ok(CoeffSeq::from_rats(coeffs, s.exact_tail()))
}

/// Computes `q2, q3` from a sequence normalized to `c0 = c1 = 1` and
/// evaluates the three inequalities. Errors if the input is not
/// normalized or an early coefficient vanishes.
pub fn s7_inequalities(g: &CoeffSeq) -> Result<S7Report, PreserverError> {
    let c = g.coeffs();
    if c.len() < 4 {
        return Err(PreserverError::MissingCoefficients {
            needed: 4,
            have: c.len(),
        });
    }
    if c[0] != Rat::one() || c[1] != Rat::one() {
        return Err(PreserverError::NotNormalized);
    }
    for (index, v) in c.iter().take(4).enumerate() {
        if !v.is_positive() {
            return Err(PreserverError::InvalidParameter {
                name: "c_k",
                value: format!("c{index} = {v}"),
                constraint: "needs c0..c3 > 0 (normalization unavailable otherwise)",
            });
        }
    }

    // p_k = c_{k-1}/c_k; q_{k+1} = p_{k+1}/p_k, with p_1 = 1 here
    let p2 = &c[1] / &c[2];
    let p3 = &c[2] / &c[3];
    let q2 = p2.clone();
    let q3 = &p3 / &p2;

    let one = Rat::one();
    let combo = &(&(&q2 * &q2) * &q3) - &(&(&Rat::from_int(2) * &q2) * &q3) + Rat::one();
    Ok(S7Report {
        q2_ge_1: q2 >= one,
        q3_ge_1: q3 >= one,
        cubic_minor_ge_0: !combo.is_negative(),
        q2,
        q3,
    })
}
