//! Real-rootedness predicates, ratio-based sufficient conditions and the
//! finite multiplier-sequence decision.

use exact_core::{rat::factorial, Poly, Rat};
use genfun::CoeffSeq;

use crate::report::{Endpoint, RatioReport, RootMethod, RootReport};
use crate::sturm::{real_roots_with_multiplicity, sturm_count};
use crate::RealRootsError;

/// Decides whether a nonnegative-coefficient polynomial has only real
/// (hence nonpositive) zeros, counting multiplicity.
///
/// Degree 0/1 and quadratic inputs are decided directly; higher degrees
/// go through the Sturm kernel. With nonnegative coefficients a nonzero
/// polynomial has no positive root, so `all_real` already forces every
/// root into the closed left half-line.
pub fn is_real_rooted_nonpositive(p: &Poly) -> Result<RootReport, RealRootsError> {
    if let Some(index) = p.coeffs().iter().position(Rat::is_negative) {
        return Err(RealRootsError::NegativeCoefficient { index });
    }
    let degree = p.degree().ok_or(RealRootsError::ZeroPolynomial)?;

    let (real_root_count, method) = match degree {
        0 | 1 => (degree, RootMethod::Degree01),
        2 => {
            let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
            let disc = &b * &b - Rat::from_int(4) * &a * &c;
            let count = if disc.is_negative() { 0 } else { 2 };
            (count, RootMethod::Quadratic)
        }
        _ => (real_roots_with_multiplicity(p)?, RootMethod::Sturm),
    };

    let all_real = real_root_count == degree;
    Ok(RootReport {
        real_root_count,
        degree,
        all_real,
        all_nonpositive: all_real,
        method,
    })
}

/// Ratio test over the full prefix of a positive-coefficient sequence:
/// every `a_{n-1}^2 / (a_{n-2} a_n)` must reach 4.
pub fn hutchinson_check(s: &CoeffSeq) -> Result<RatioReport, RealRootsError> {
    hutchinson_check_window(s.coeffs())
}

/// Ratio test on an explicit coefficient window.
pub fn hutchinson_check_window(window: &[Rat]) -> Result<RatioReport, RealRootsError> {
    if let Some(index) = window.iter().position(|c| !c.is_positive()) {
        return Err(RealRootsError::NonPositiveCoefficient { index });
    }
    let ratios: Vec<Rat> = (2..window.len())
        .map(|n| &window[n - 1] * &window[n - 1] / (&window[n - 2] * &window[n]))
        .collect();
    let min_ratio = ratios.iter().min().cloned();
    let passes_hutchinson = min_ratio
        .as_ref()
        .map_or(true, |m| *m >= Rat::from_int(4));
    Ok(RatioReport {
        ratios,
        min_ratio,
        passes_hutchinson,
    })
}

/// Decides whether `(gamma_0, ..., gamma_l, 0, 0, ...)` rescales every
/// real-rooted polynomial to a real-rooted polynomial: true exactly when
/// `sum gamma_k z^k / k!` has only real zeros of one sign (roots at the
/// origin permitted).
pub fn ms_finite_decide(gammas: &[Rat]) -> Result<bool, RealRootsError> {
    if gammas.iter().all(Rat::is_zero) {
        return Err(RealRootsError::AllZeroInput);
    }
    let phi = Poly::new(
        gammas
            .iter()
            .enumerate()
            .map(|(k, g)| g / &Rat::from_big_int(factorial(k)))
            .collect(),
    );
    let low = phi
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let core = phi.shift_down(low);
    let degree = core.degree().expect("nonzero polynomial");
    if degree == 0 {
        return Ok(true);
    }
    if real_roots_with_multiplicity(&core)? != degree {
        return Ok(false);
    }
    let pos = sturm_count(&core, Endpoint::Finite(Rat::zero()), Endpoint::PosInf)?;
    let neg = sturm_count(&core, Endpoint::NegInf, Endpoint::Finite(Rat::zero()))?;
    Ok(pos == 0 || neg == 0)
}

/// Conservative rational stand-in for the limiting ratio threshold:
/// `3.2336367`, strictly above the printed approximation
/// `3.23363666...`, so the sufficient condition is never claimed below
/// the true value.
pub fn q_lo() -> Rat {
    Rat::new(32_336_367, 10_000_000)
}

/// Finite-depth transcription of the nonincreasing-ratio sufficient
/// condition: the listed `q_k` are nonincreasing and the last one is at
/// least [`q_lo`]. At finite depth this is only evidence that the
/// infinite family satisfies the hypothesis; it decides nothing beyond
/// the listed parameters.
pub fn lp1_sufficient_ngthv(qlist: &[Rat]) -> bool {
    assert!(!qlist.is_empty(), "need at least one parameter");
    let nonincreasing = qlist.windows(2).all(|w| w[0] >= w[1]);
    nonincreasing && *qlist.last().unwrap() >= q_lo()
}
