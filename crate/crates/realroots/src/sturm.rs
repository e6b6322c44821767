//! Sturm chains over exact rationals.
//!
//! Chains are built on the square-free part and every element is scaled
//! to a primitive integer-coefficient polynomial (a positive rescaling,
//! so all signs are preserved) to keep coefficient growth in check.

use exact_core::{Poly, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::report::Endpoint;
use crate::RealRootsError;

/// Rescales by a positive rational so that coefficients become integers
/// with gcd 1. The zero polynomial is returned unchanged.
fn primitive(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    Poly::new(ints.into_iter().map(|v| Rat::from_big_int(v / &gcd)).collect())
}

/// Signed remainder chain of the square-free part of `p`.
pub(crate) fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let sf = primitive(&p.square_free_part());
    if sf.degree() == Some(0) {
        return vec![sf];
    }
    let mut chain = vec![sf.clone(), primitive(&sf.derivative())];
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(primitive(&-&r));
    }
    chain
}

/// Sign of a chain element at an (extended) endpoint.
fn sign_at(p: &Poly, at: &Endpoint) -> i8 {
    match at {
        Endpoint::Finite(x) => p.eval(x).signum(),
        Endpoint::PosInf => p.leading_coeff().map_or(0, Rat::signum),
        Endpoint::NegInf => match (p.degree(), p.leading_coeff()) {
            (Some(d), Some(lc)) => {
                let s = lc.signum();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        },
    }
}

fn sign_variations(chain: &[Poly], at: &Endpoint) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| sign_at(p, at))
        .filter(|s| *s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval
/// `(lo, hi]`, endpoints possibly infinite.
pub fn sturm_count(p: &Poly, lo: Endpoint, hi: Endpoint) -> Result<usize, RealRootsError> {
    if p.is_zero() {
        return Err(RealRootsError::ZeroPolynomial);
    }
    if !lo.strictly_below(&hi) {
        return Err(RealRootsError::InvalidInterval);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(p);
    let v_lo = sign_variations(&chain, &lo);
    let v_hi = sign_variations(&chain, &hi);
    Ok(v_lo.saturating_sub(v_hi))
}

/// Number of distinct real roots on the whole line.
pub fn distinct_real_roots(p: &Poly) -> Result<usize, RealRootsError> {
    sturm_count(p, Endpoint::NegInf, Endpoint::PosInf)
}

/// Total number of real roots counted with multiplicity.
///
/// A root of multiplicity `m` of `p` is a root of multiplicity `m - 1`
/// of `gcd(p, p')`, so summing distinct counts down the gcd chain counts
/// every root as many times as its multiplicity.
pub fn real_roots_with_multiplicity(p: &Poly) -> Result<usize, RealRootsError> {
    if p.is_zero() {
        return Err(RealRootsError::ZeroPolynomial);
    }
    let mut total = 0;
    let mut cur = p.clone();
    while cur.degree().is_some_and(|d| d >= 1) {
        total += distinct_real_roots(&cur)?;
        cur = cur.gcd_monic(&cur.derivative());
    }
    Ok(total)
}
