//! The sign-witness coefficient in the single-pole necessity argument.
//!
//! Convolving `A(z) = sum_j (-1)^j B_j / (1 - beta z)^{n-j}` with
//! `e^{gamma z}/(1 - delta z)` produces
//! `e^{gamma beta z} (1 - delta beta z)^{-n} H_{2n-2}(z)` with
//!
//! `H_{2n-2}(z) = sum_{j=0}^{n-1} (-1)^j B_j (n-1-j)! Q_{2(n-j)-2}(z)
//!                 (1 - delta beta z)^j`.
//!
//! Only the `j = 0` and `j = 1` terms reach degree `2n - 3`, which
//! yields the closed form for `h_{2n-3}` computed here. For odd `n`
//! that coefficient goes negative for large `gamma` and small `delta`,
//! which is what rules out higher-order poles.

use exact_core::{rat::factorial, Poly, Rat};

use crate::lemma2::q_polynomial;
use crate::PreserverError;

/// Assembles `H_{2n-2}` from an explicit `B_0..B_{n-1}` vector.
pub fn assemble_h(n: usize, bs: &[Rat], beta: &Rat, gamma: &Rat, delta: &Rat) -> Poly {
    assert!(n >= 1 && bs.len() == n);
    let db = delta * beta;
    let pole = Poly::new(vec![Rat::one(), -&db]);
    let mut pole_pow = Poly::one();
    let mut h = Poly::zero();
    for (j, b) in bs.iter().enumerate() {
        let k = n - j;
        let q = q_polynomial(k, beta, gamma, delta);
        let sign = if j % 2 == 0 { Rat::one() } else { Rat::from_int(-1) };
        let scale = &sign * &(b * &Rat::from_big_int(factorial(k - 1)));
        h = &h + &(&q * &pole_pow).scale(&scale);
        pole_pow = &pole_pow * &pole;
    }
    h
}

/// Closed form for the coefficient of `z^{2n-3}` in `H_{2n-2}`:
///
/// `(-1)^{n-2} (gamma beta)^{n-2} (delta beta)^{n-2} / (n-2)!
///   * (B_0 gamma beta - B_0 (n-2) delta beta + B_1 delta beta)`.
///
/// Requires odd `n >= 3` (the only pole orders surviving the earlier
/// steps) and positive parameters. The value is re-derived internally by
/// assembling `H_{2n-2}` outright and extracting the coefficient; any
/// disagreement is an internal error.
pub fn h2n3_coefficient(
    n: usize,
    b0: &Rat,
    b1: &Rat,
    beta: &Rat,
    gamma: &Rat,
    delta: &Rat,
) -> Result<Rat, PreserverError> {
    if n < 3 || n % 2 == 0 {
        return Err(PreserverError::InvalidParameter {
            name: "n",
            value: n.to_string(),
            constraint: "odd n >= 3",
        });
    }
    assert!(
        b0.is_positive() && b1.is_positive(),
        "partial-fraction coefficients must be positive"
    );
    assert!(
        beta.is_positive() && gamma.is_positive() && delta.is_positive(),
        "parameters must be positive"
    );

    let gb = gamma * beta;
    let db = delta * beta;
    let sign = if n % 2 == 1 { Rat::from_int(-1) } else { Rat::one() };
    let closed = &(&(&sign * &gb.pow((n - 2) as i32)) * &db.pow((n - 2) as i32))
        / &Rat::from_big_int(factorial(n - 2))
        * (&(b0 * &gb) - &(&(b0 * &Rat::from_int((n - 2) as i64)) * &db) + (b1 * &db));

    // companion verification: the closed form must match a full
    // assembly; B_2.. cannot reach degree 2n-3, any values work
    let mut bs = vec![Rat::one(); n];
    bs[0] = b0.clone();
    bs[1] = b1.clone();
    let h = assemble_h(n, &bs, beta, gamma, delta);
    if h.coeff(2 * n - 3) != closed {
        return Err(PreserverError::IdentityMismatch {
            what: "h_{2n-3} closed form vs assembled polynomial",
        });
    }

    Ok(closed)
}
