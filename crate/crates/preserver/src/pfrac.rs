//! Alternating partial-fraction decomposition over a single pole.
//!
//! For `A(z) = P(z) / (1 - beta z)^n` with `deg P < n`, the coefficients
//! `B_j = P^{(j)}(1/beta) / (j! beta^j)` satisfy
//!
//! `A(z) = B_0/(1-beta z)^n - B_1/(1-beta z)^{n-1} + ...
//!         + (-1)^{n-1} B_{n-1}/(1-beta z)`.
//!
//! The reconstruction identity is re-verified on series prefixes every
//! time; a mismatch is a transcription bug and is reported, never
//! swallowed.

use exact_core::{
    pole_power_series, rat::factorial, series_product, Poly, Rat, SeriesPrefix,
};

use crate::PreserverError;

/// Series order used for the built-in reconstruction check.
pub const PFRAC_CHECK_ORDER: usize = 30;

/// Computes `B_0, ..., B_{n-1}` and verifies the reconstruction
/// identity exactly to order [`PFRAC_CHECK_ORDER`].
pub fn partial_fractions_single_pole(
    p: &Poly,
    beta: &Rat,
    n: usize,
) -> Result<Vec<Rat>, PreserverError> {
    assert!(beta.is_positive(), "pole parameter beta must be positive");
    assert!(n >= 1, "pole order must be >= 1");
    if let Some(degree) = p.degree() {
        if degree >= n {
            return Err(PreserverError::DegreeTooHigh { degree, n });
        }
    }

    let inv_beta = beta.recip();
    let coeffs: Vec<Rat> = (0..n)
        .map(|j| {
            let deriv = p.derivative_n(j).eval(&inv_beta);
            deriv / (&Rat::from_big_int(factorial(j)) * &beta.pow(j as i32))
        })
        .collect();

    // reconstruction check: P(z)/(1-beta z)^n == sum (-1)^j B_j /(1-beta z)^{n-j}
    let order = PFRAC_CHECK_ORDER;
    let lhs = series_product(
        &SeriesPrefix::from_poly(p, order),
        &pole_power_series(beta, n, order),
    );
    let mut rhs = SeriesPrefix::zeros(order);
    for (j, b) in coeffs.iter().enumerate() {
        let sign = if j % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
        let term = pole_power_series(beta, n - j, order).scale(&(&sign * b));
        rhs = rhs.add(&term);
    }
    if lhs.coeffs() != rhs.coeffs() {
        return Err(PreserverError::IdentityMismatch {
            what: "partial fraction reconstruction",
        });
    }

    Ok(coeffs)
}
