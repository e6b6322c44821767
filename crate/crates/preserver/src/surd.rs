//! Exact arithmetic in `Q(sqrt(d))`.
//!
//! Values are kept as `rational + coeff * sqrt(radicand)` with a
//! nonnegative rational radicand. Signs are decided exactly by squaring
//! with case analysis, so boundary values (where a surd collapses to a
//! rational) compare correctly — no floating point is involved anywhere.

use std::cmp::Ordering;
use std::fmt;

use exact_core::{Poly, Rat};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

/// `rational + coeff * sqrt(radicand)`, normalized: a zero coefficient
/// or a perfect-square radicand collapses to the purely rational form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadExt {
    rational: Rat,
    coeff: Rat,
    radicand: Rat,
}

/// Exact square root of a nonnegative rational, when it is rational.
fn exact_sqrt(r: &Rat) -> Option<Rat> {
    fn int_sqrt(n: &BigInt) -> Option<BigInt> {
        if n.is_negative() {
            return None;
        }
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    }
    Some(Rat::from_big(int_sqrt(r.numer())?, int_sqrt(r.denom())?))
}

impl QuadExt {
    pub fn new(rational: Rat, coeff: Rat, radicand: Rat) -> Self {
        assert!(
            !radicand.is_negative(),
            "radicand must be nonnegative (got {radicand})"
        );
        let mut v = QuadExt {
            rational,
            coeff,
            radicand,
        };
        v.normalize();
        v
    }

    pub fn from_rat(r: Rat) -> Self {
        QuadExt {
            rational: r,
            coeff: Rat::zero(),
            radicand: Rat::zero(),
        }
    }

    fn normalize(&mut self) {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            self.coeff = Rat::zero();
            self.radicand = Rat::zero();
            return;
        }
        if let Some(root) = exact_sqrt(&self.radicand) {
            self.rational = &self.rational + &(&self.coeff * &root);
            self.coeff = Rat::zero();
            self.radicand = Rat::zero();
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational
    }

    pub fn surd_coeff(&self) -> &Rat {
        &self.coeff
    }

    pub fn radicand(&self) -> &Rat {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.rational)
    }

    fn common_radicand(&self, other: &QuadExt) -> Rat {
        match (self.coeff.is_zero(), other.coeff.is_zero()) {
            (true, _) => other.radicand.clone(),
            (_, true) => self.radicand.clone(),
            _ => {
                assert_eq!(
                    self.radicand, other.radicand,
                    "mixed radicands are not supported"
                );
                self.radicand.clone()
            }
        }
    }

    pub fn add(&self, other: &QuadExt) -> QuadExt {
        let d = self.common_radicand(other);
        QuadExt::new(
            &self.rational + &other.rational,
            &self.coeff + &other.coeff,
            d,
        )
    }

    pub fn mul(&self, other: &QuadExt) -> QuadExt {
        let d = self.common_radicand(other);
        let rational =
            &(&self.rational * &other.rational) + &(&(&self.coeff * &other.coeff) * &d);
        let coeff = &(&self.rational * &other.coeff) + &(&self.coeff * &other.rational);
        QuadExt::new(rational, coeff, d)
    }

    pub fn add_rat(&self, r: &Rat) -> QuadExt {
        QuadExt::new(&self.rational + r, self.coeff.clone(), self.radicand.clone())
    }

    pub fn mul_rat(&self, r: &Rat) -> QuadExt {
        QuadExt::new(&self.rational * r, &self.coeff * r, self.radicand.clone())
    }

    pub fn neg(&self) -> QuadExt {
        self.mul_rat(&Rat::from_int(-1))
    }

    /// Exact sign: compares `rational` against `-coeff * sqrt(radicand)`
    /// by squaring with sign bookkeeping.
    pub fn signum(&self) -> i8 {
        let (r, s) = (self.rational.signum(), self.coeff.signum());
        if s == 0 {
            return r;
        }
        if r == 0 {
            return s;
        }
        if r == s {
            return r;
        }
        // opposite signs: |rational|^2 vs coeff^2 * radicand decides
        let r2 = &self.rational * &self.rational;
        let s2d = &(&self.coeff * &self.coeff) * &self.radicand;
        match r2.cmp(&s2d) {
            Ordering::Greater => r,
            Ordering::Less => s,
            Ordering::Equal => 0,
        }
    }

    pub fn is_nonpositive(&self) -> bool {
        self.signum() <= 0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() >= 0
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        match self.add_rat(&-r).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn eq_rat(&self, r: &Rat) -> bool {
        self.cmp_rat(r) == Ordering::Equal
    }

    /// Horner evaluation of a rational polynomial at this point.
    pub fn eval_poly(p: &Poly, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::from_rat(Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x).add_rat(c);
        }
        acc
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            write!(f, "{}", self.rational)
        } else {
            write!(
                f,
                "{} + ({})*sqrt({})",
                self.rational, self.coeff, self.radicand
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square_radicand_collapses() {
        // -4/3 + (4/3) sqrt(1/4) = -2/3
        let v = QuadExt::new(Rat::new(-4, 3), Rat::new(4, 3), Rat::new(1, 4));
        assert!(v.is_rational());
        assert_eq!(v.as_rat(), Some(&Rat::new(-2, 3)));
    }

    #[test]
    fn sign_decisions() {
        // 1 - sqrt(2) < 0
        let v = QuadExt::new(Rat::one(), Rat::from_int(-1), Rat::from_int(2));
        assert_eq!(v.signum(), -1);
        // 2 - sqrt(2) > 0
        let v = QuadExt::new(Rat::from_int(2), Rat::from_int(-1), Rat::from_int(2));
        assert_eq!(v.signum(), 1);
        // 3 - sqrt(9) = 0 collapses
        let v = QuadExt::new(Rat::from_int(3), Rat::from_int(-1), Rat::from_int(9));
        assert_eq!(v.signum(), 0);
        // -1 + sqrt(1/2): positive since 1/2 > ... no: sqrt(1/2) ~ 0.707 < 1
        let v = QuadExt::new(Rat::from_int(-1), Rat::one(), Rat::new(1, 2));
        assert_eq!(v.signum(), -1);
    }

    #[test]
    fn arithmetic_against_squared_identity() {
        // x = 1 + sqrt(3): x^2 - 2x - 2 = 0
        let x = QuadExt::new(Rat::one(), Rat::one(), Rat::from_int(3));
        let p = Poly::from_pairs(&[(-2, 1), (-2, 1), (1, 1)]);
        let v = QuadExt::eval_poly(&p, &x);
        assert_eq!(v.signum(), 0);
        assert!(v.eq_rat(&Rat::zero()));
    }

    #[test]
    fn cmp_rat_works_across_forms() {
        let v = QuadExt::new(Rat::zero(), Rat::one(), Rat::from_int(2)); // sqrt(2)
        assert_eq!(v.cmp_rat(&Rat::new(3, 2)), Ordering::Less);
        assert_eq!(v.cmp_rat(&Rat::new(7, 5)), Ordering::Greater);
        assert_eq!(v.cmp_rat(&Rat::new(141, 100)), Ordering::Greater);
    }
}
