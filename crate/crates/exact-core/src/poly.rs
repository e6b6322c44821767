//! Dense exact-coefficient polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize};

use crate::rat::Rat;

/// Polynomial over [`Rat`], coefficients indexed from degree 0.
///
/// The zero polynomial is represented by an empty coefficient vector and
/// has degree `None`; otherwise the trailing coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Poly { coeffs: v }
    }

    /// Convenience constructor from machine-integer pairs `p/q`.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        Poly::new(pairs.iter().map(|&(p, q)| Rat::new(p, q)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Rat::from_int(k as i64) * c)
            .collect();
        Poly::new(coeffs)
    }

    /// `j`-th derivative.
    pub fn derivative_n(&self, j: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..j {
            p = p.derivative();
        }
        p
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by `z^q`.
    pub fn shift_up(&self, q: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Rat::zero(); q];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Quotient of an exact division by `z^q`; panics if some lower
    /// coefficient is nonzero.
    pub fn shift_down(&self, q: usize) -> Poly {
        assert!(
            self.coeffs.iter().take(q).all(Rat::is_zero),
            "shift_down would truncate nonzero coefficients"
        );
        Poly::new(self.coeffs.iter().skip(q).cloned().collect())
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    /// Panics if the divisor is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d_deg = divisor.degree().expect("division by zero polynomial");
        let d_lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg && !rem.is_empty() {
            let r_deg = rem.len() - 1;
            let factor = rem.last().unwrap() / &d_lead;
            if !factor.is_zero() {
                quot[r_deg - d_deg] = factor.clone();
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let idx = r_deg - d_deg + i;
                    rem[idx] = &rem[idx] - &(&factor * dc);
                }
            }
            rem.pop();
            while rem.last().is_some_and(Rat::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic polynomial gcd.
    pub fn gcd_monic(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                a.scale(&inv)
            }
        }
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn square_free_part(&self) -> Poly {
        let g = self.gcd_monic(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_rem(&g).0
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(coeffs)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Rat>::deserialize(deserializer)?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::new(vec![Rat::zero(), Rat::zero()]).degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::new(vec![Rat::one(), Rat::zero(), Rat::zero()]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.coeffs().len(), 1);
    }

    #[test]
    fn eval_exact() {
        // 1 + x + x^2/4 at x = -2 is 0 (double root).
        let p = Poly::from_pairs(&[(1, 1), (1, 1), (1, 4)]);
        assert!(p.eval(&Rat::from_int(-2)).is_zero());
        assert_eq!(p.eval(&Rat::new(1, 2)), Rat::new(25, 16));
    }

    #[test]
    fn mul_matches_binomial_square() {
        let p = Poly::from_pairs(&[(1, 1), (1, 1)]);
        let sq = &p * &p;
        assert_eq!(sq, Poly::from_pairs(&[(1, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Poly::from_pairs(&[(3, 1), (5, 2), (0, 1), (7, 1)]);
        let b = Poly::from_pairs(&[(1, 1), (2, 1)]);
        let (q, r) = a.div_rem(&b);
        let back = &(&q * &b) + &r;
        assert_eq!(back, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_square() {
        // p = (1 + z)^2 (2 + z): gcd(p, p') = (1 + z) up to normalization.
        let lin = Poly::from_pairs(&[(1, 1), (1, 1)]);
        let other = Poly::from_pairs(&[(2, 1), (1, 1)]);
        let p = &(&lin * &lin) * &other;
        let g = p.gcd_monic(&p.derivative());
        assert_eq!(g, lin);
        let sf = p.square_free_part();
        assert_eq!(sf.degree(), Some(2));
        assert!(sf.eval(&Rat::from_int(-1)).is_zero());
        assert!(sf.eval(&Rat::from_int(-2)).is_zero());
    }

    #[test]
    fn shifts() {
        let p = Poly::from_pairs(&[(1, 1), (2, 1)]);
        let up = p.shift_up(2);
        assert_eq!(up.coeff(2), Rat::one());
        assert_eq!(up.coeff(3), Rat::from_int(2));
        assert_eq!(up.shift_down(2), p);
    }
}
