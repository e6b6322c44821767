//! The closed form for a pole power convolved with `e^{gamma z}/(1-delta z)`.
//!
//! For `k >= 1`,
//!
//! `(1/(1-beta z)^k) * (e^{gamma z}/(1-delta z))
//!   = (k-1)! e^{gamma beta z} / (1 - delta beta z)^k * Q_{2k-2}(z)`
//!
//! (`*` the coefficientwise product), where `Q_{2k-2}` is the explicit
//! double sum built in [`q_polynomial`]. Every call re-verifies the
//! identity entrywise on series prefixes; a mismatch is reported as an
//! internal error, never swallowed.

use exact_core::{
    exp_series, pole_power_series, rat::factorial, series_product, Poly, Rat, SeriesPrefix,
};
use serde::Serialize;

use crate::hadamard::hadamard_prefix;
use crate::PreserverError;

/// Outcome of the closed-form construction and its verification.
#[derive(Debug, Clone, Serialize)]
pub struct Lemma2Result {
    #[serde(rename = "Q")]
    pub q: Poly,
    pub k: usize,
    pub beta: Rat,
    pub gamma: Rat,
    pub delta: Rat,
    pub identity_checked_to: usize,
}

/// Builds `Q_{2k-2}` by its double sum:
///
/// `Q(z) = sum_{s=0}^{k-1} sum_{t=k-s-1}^{k-1}
///     (gb)^{k-1-s} (db)^{t-k+s+1} / ((k-1-s)! (k-1-t)! t!)
///     * z^t * (1 - db z)^{2k-t-s-2}`
///
/// with `gb = gamma * beta`, `db = delta * beta`. Valid for `k >= 1`
/// (`k = 1` gives the constant 1).
pub fn q_polynomial(k: usize, beta: &Rat, gamma: &Rat, delta: &Rat) -> Poly {
    assert!(k >= 1);
    let gb = gamma * beta;
    let db = delta * beta;

    // powers of (1 - db z) up to 2k-2
    let base = Poly::new(vec![Rat::one(), -&db]);
    let mut pole_pows = Vec::with_capacity(2 * k - 1);
    pole_pows.push(Poly::one());
    for i in 1..=2 * k - 2 {
        pole_pows.push(&pole_pows[i - 1] * &base);
    }

    let mut q = Poly::zero();
    for s in 0..k {
        for t in (k - s - 1)..k {
            let num = &gb.pow((k - 1 - s) as i32) * &db.pow((t + s + 1 - k) as i32);
            let den = Rat::from_big_int(
                factorial(k - 1 - s) * factorial(k - 1 - t) * factorial(t),
            );
            let coeff = num / den;
            let term = pole_pows[2 * k - t - s - 2].scale(&coeff).shift_up(t);
            q = &q + &term;
        }
    }
    q
}

/// Builds `Q_{2k-2}` and verifies the convolution identity entrywise to
/// `check_order`. Requires `k >= 2` and positive parameters.
pub fn lemma2_q(
    k: usize,
    beta: &Rat,
    gamma: &Rat,
    delta: &Rat,
    check_order: usize,
) -> Result<Lemma2Result, PreserverError> {
    assert!(k >= 2, "closed form is stated for k >= 2");
    assert!(
        beta.is_positive() && gamma.is_positive() && delta.is_positive(),
        "parameters must be positive"
    );
    assert!(check_order >= 1);

    let q = q_polynomial(k, beta, gamma, delta);
    if q.degree().is_some_and(|d| d > 2 * k - 2) {
        return Err(PreserverError::IdentityMismatch {
            what: "Q degree bound",
        });
    }

    let n = check_order;
    let lhs = hadamard_prefix(
        &pole_power_series(beta, k, n),
        &series_product(&exp_series(gamma, n), &pole_power_series(delta, 1, n)),
    );

    let gb = gamma * beta;
    let db = delta * beta;
    let rhs = series_product(
        &series_product(&exp_series(&gb, n), &pole_power_series(&db, k, n)),
        &SeriesPrefix::from_poly(&q, n),
    )
    .scale(&Rat::from_big_int(factorial(k - 1)));

    if lhs.coeffs() != rhs.coeffs() {
        return Err(PreserverError::IdentityMismatch {
            what: "pole-exponential convolution closed form",
        });
    }

    Ok(Lemma2Result {
        q,
        k,
        beta: beta.clone(),
        gamma: gamma.clone(),
        delta: delta.clone(),
        identity_checked_to: check_order,
    })
}
