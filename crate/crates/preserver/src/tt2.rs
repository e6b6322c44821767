//! Exact evaluation of the four-term sufficiency inequalities.
//!
//! With `F(y) = 1 + a y (1 + y + y^2/b)` and
//! `F_q(y) = 1 + q2 a y (1 + y + y^2/(q3 b))`, the critical points of
//! `F` are
//!
//! `alpha_1 = (b/3)(-1 + sqrt(1 - 3/b))`,
//! `alpha_2 = (b/3)(-1 - sqrt(1 - 3/b))`,
//!
//! and the sufficiency argument rests on the sign pattern of `F` and
//! `F_q` at those points. All evaluations run in `Q(sqrt(1 - 3/b))`, so
//! the boundary `b = 4` (where the surd collapses and
//! `alpha_1/b = -1/6` exactly) is decided exactly.

use exact_core::{Poly, Rat};
use realroots::is_real_rooted_nonpositive;
use serde::Serialize;

use crate::surd::QuadExt;
use crate::PreserverError;

/// The five inequality outcomes, named after their roles:
/// values of `F` at the critical points and of `F_q` at the rescaled
/// critical points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TT2Flags {
    /// `F(alpha_1) <= 0`
    pub g6: bool,
    /// `F(alpha_2) >= 0`
    pub g7: bool,
    /// `F(alpha_2) >= 1`
    pub g8: bool,
    /// `F_q(alpha_1 / q2) <= 0`
    pub ef47: bool,
    /// `F_q(alpha_2) >= 0`
    pub ef48: bool,
}

impl TT2Flags {
    pub fn all(&self) -> bool {
        self.g6 && self.g7 && self.g8 && self.ef47 && self.ef48
    }
}

/// Witness data for one `(a, b, q2, q3)` quadruple.
#[derive(Debug, Clone, Serialize)]
pub struct TT2Witness {
    pub a: Rat,
    pub b: Rat,
    pub q2: Rat,
    pub q3: Rat,
    pub alpha1: QuadExt,
    pub alpha2: QuadExt,
    pub flags: TT2Flags,
}

/// Evaluates the sufficiency inequalities exactly.
///
/// Preconditions (violations are errors naming the failed hypothesis):
/// `a > 0`; `b >= 4` (otherwise the shifted cubic is not real-rooted);
/// `q2 >= 1`, `q3 >= 1` and `q2^2 q3 - 2 q2 q3 + 1 >= 0` (the minor
/// inequalities of a normalized totally positive series); and `F`
/// itself real-rooted.
pub fn tt2_witness(
    a: &Rat,
    b: &Rat,
    q2: &Rat,
    q3: &Rat,
) -> Result<TT2Witness, PreserverError> {
    if !a.is_positive() {
        return Err(PreserverError::InvalidParameter {
            name: "a",
            value: a.to_string(),
            constraint: "a > 0",
        });
    }
    if *b < Rat::from_int(4) {
        return Err(PreserverError::InvalidParameter {
            name: "b",
            value: b.to_string(),
            constraint: "b >= 4 (below it the shifted cubic is not real-rooted)",
        });
    }
    let one = Rat::one();
    if *q2 < one || *q3 < one {
        return Err(PreserverError::InvalidParameter {
            name: "q2, q3",
            value: format!("({q2}, {q3})"),
            constraint: "q2 >= 1 and q3 >= 1",
        });
    }
    let combo = &(&(q2 * q2) * q3) - &(&(&Rat::from_int(2) * q2) * q3) + Rat::one();
    if combo.is_negative() {
        return Err(PreserverError::InvalidParameter {
            name: "q2^2 q3 - 2 q2 q3 + 1",
            value: combo.to_string(),
            constraint: ">= 0",
        });
    }

    // F(y) = 1 + a y + a y^2 + (a/b) y^3
    let f = Poly::new(vec![one.clone(), a.clone(), a.clone(), a / b]);
    if !is_real_rooted_nonpositive(&f)?.all_real {
        return Err(PreserverError::InvalidParameter {
            name: "F",
            value: format!("{f}"),
            constraint: "F(., a, b) must have only real zeros",
        });
    }
    // F_q(y) = 1 + q2 a y + q2 a y^2 + (q2 a / (q3 b)) y^3
    let q2a = q2 * a;
    let fq = Poly::new(vec![
        one.clone(),
        q2a.clone(),
        q2a.clone(),
        &q2a / &(q3 * b),
    ]);

    let third_b = b / &Rat::from_int(3);
    let radicand = &one - &(&Rat::from_int(3) / b);
    let alpha1 = QuadExt::new(-&third_b, third_b.clone(), radicand.clone());
    let alpha2 = QuadExt::new(-&third_b, -&third_b, radicand);

    let f_a1 = QuadExt::eval_poly(&f, &alpha1);
    let f_a2 = QuadExt::eval_poly(&f, &alpha2);
    let fq_a1_scaled = QuadExt::eval_poly(&fq, &alpha1.mul_rat(&q2.recip()));
    let fq_a2 = QuadExt::eval_poly(&fq, &alpha2);

    let flags = TT2Flags {
        g6: f_a1.is_nonpositive(),
        g7: f_a2.is_nonnegative(),
        g8: f_a2.cmp_rat(&one) != std::cmp::Ordering::Less,
        ef47: fq_a1_scaled.is_nonpositive(),
        ef48: fq_a2.is_nonnegative(),
    };

    Ok(TT2Witness {
        a: a.clone(),
        b: b.clone(),
        q2: q2.clone(),
        q3: q3.clone(),
        alpha1,
        alpha2,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_b4_collapses_to_rationals() {
        // at b = 4 the radicand is 1/4: alpha1 = -2/3, alpha2 = -2
        let w = tt2_witness(
            &Rat::from_int(4),
            &Rat::from_int(4),
            &Rat::one(),
            &Rat::one(),
        )
        .unwrap();
        assert_eq!(w.alpha1.as_rat(), Some(&Rat::new(-2, 3)));
        assert_eq!(w.alpha2.as_rat(), Some(&Rat::from_int(-2)));
        // alpha1 / b = -1/6 exactly
        assert_eq!(
            w.alpha1.mul_rat(&w.b.recip()).as_rat(),
            Some(&Rat::new(-1, 6))
        );
        assert!(w.flags.all(), "{:?}", w.flags);
    }

    #[test]
    fn q_degenerate_case_reduces() {
        // q2 = q3 = 1 makes F_q = F, so ef47 at alpha1/1 is exactly g6
        let a = Rat::from_int(5);
        let b = Rat::new(9, 2);
        let w = tt2_witness(&a, &b, &Rat::one(), &Rat::one()).unwrap();
        assert_eq!(w.flags.g6, w.flags.ef47);
        assert!(w.flags.all());
    }

    #[test]
    fn preconditions_are_enforced() {
        let four = Rat::from_int(4);
        let one = Rat::one();
        assert!(tt2_witness(&Rat::zero(), &four, &one, &one).is_err());
        assert!(tt2_witness(&four, &Rat::new(7, 2), &one, &one).is_err());
        assert!(tt2_witness(&four, &four, &Rat::new(1, 2), &one).is_err());
        // q2 slightly above 1 with big q3 breaks the cubic combination
        assert!(tt2_witness(&four, &four, &Rat::new(11, 10), &Rat::from_int(100)).is_err());
        // a too small: F not real-rooted (needs a >= 27/8 at b = 4)
        assert!(matches!(
            tt2_witness(&Rat::from_int(3), &four, &one, &one),
            Err(PreserverError::InvalidParameter { name: "F", .. })
        ));
    }

    #[test]
    fn surd_cases_hold_exactly() {
        // b = 5: radicand 2/5 is irrational
        let a = Rat::from_int(4);
        let b = Rat::from_int(5);
        let w = tt2_witness(&a, &b, &Rat::from_int(3), &Rat::from_int(2)).unwrap();
        assert!(!w.alpha1.is_rational());
        assert!(w.flags.all(), "{:?}", w.flags);
    }
}
