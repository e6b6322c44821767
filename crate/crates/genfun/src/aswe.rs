//! Expansion of functions in the form
//! `C z^q e^{gamma z} prod_k (1 + alpha_k z) / prod_k (1 - beta_k z)`.

use exact_core::{exp_series, pole_power_series, series_product, Rat, SeriesPrefix};
use serde::{Deserialize, Serialize};

use crate::seq::{CoeffSeq, FamilyTag, ParamsEcho};
use crate::GenfunError;

/// Parameters of the product form above.
///
/// The factor lists are finite: a prefix computation only ever sees
/// finitely many factors. A pole of order `m` is encoded by repeating
/// its `beta` value `m` times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ASWEParams {
    #[serde(rename = "C")]
    pub c: Rat,
    /// Power-of-`z` shift; must be nonnegative.
    pub q: i64,
    pub gamma: Rat,
    pub alphas: Vec<Rat>,
    pub betas: Vec<Rat>,
}

impl Default for ASWEParams {
    fn default() -> Self {
        ASWEParams {
            c: Rat::one(),
            q: 0,
            gamma: Rat::zero(),
            alphas: Vec::new(),
            betas: Vec::new(),
        }
    }
}

impl ASWEParams {
    pub fn new(c: Rat, q: i64, gamma: Rat, alphas: Vec<Rat>, betas: Vec<Rat>) -> Self {
        ASWEParams {
            c,
            q,
            gamma,
            alphas,
            betas,
        }
    }

    /// `C / (1 - beta z)`.
    pub fn geometric(c: Rat, beta: Rat) -> Self {
        ASWEParams {
            c,
            betas: vec![beta],
            ..Default::default()
        }
    }

    /// `C * prod (1 + alpha_k z)`.
    pub fn polynomial(c: Rat, alphas: Vec<Rat>) -> Self {
        ASWEParams {
            c,
            alphas,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), GenfunError> {
        if self.q < 0 {
            return Err(GenfunError::NegativeShift { q: self.q });
        }
        if self.c.is_negative() {
            return Err(GenfunError::InvalidParameter {
                name: "C",
                value: self.c.to_string(),
                constraint: "C >= 0",
            });
        }
        if self.gamma.is_negative() {
            return Err(GenfunError::InvalidParameter {
                name: "gamma",
                value: self.gamma.to_string(),
                constraint: "gamma >= 0",
            });
        }
        for a in &self.alphas {
            if !a.is_positive() {
                return Err(GenfunError::InvalidParameter {
                    name: "alpha",
                    value: a.to_string(),
                    constraint: "alpha_k > 0",
                });
            }
        }
        for b in &self.betas {
            if !b.is_positive() {
                return Err(GenfunError::InvalidParameter {
                    name: "beta",
                    value: b.to_string(),
                    constraint: "beta_k > 0",
                });
            }
        }
        Ok(())
    }

    /// True when the function is a polynomial (no exponential factor,
    /// no poles).
    pub fn is_polynomial(&self) -> bool {
        self.gamma.is_zero() && self.betas.is_empty()
    }
}

/// Expands the product form to `n` coefficients.
///
/// The tail is exact precisely when the function is a polynomial whose
/// support fits inside the prefix.
pub fn expand_aswe(params: &ASWEParams, n: usize) -> Result<CoeffSeq, GenfunError> {
    assert!(n >= 1, "truncation order must be >= 1");
    params.validate()?;

    let prefix = if params.c.is_zero() {
        SeriesPrefix::zeros(n)
    } else {
        let mut acc = exp_series(&params.gamma, n);
        for alpha in &params.alphas {
            let factor = SeriesPrefix::new(
                {
                    let mut v = vec![Rat::one(), alpha.clone()];
                    v.resize(n.max(2), Rat::zero());
                    v.truncate(n);
                    // n = 1 keeps only the constant term of (1 + alpha z)
                    if v.len() == 1 {
                        v = vec![Rat::one()];
                    }
                    v
                },
                n >= 2,
            );
            acc = series_product(&acc, &factor);
        }
        for beta in &params.betas {
            acc = series_product(&acc, &pole_power_series(beta, 1, n));
        }
        acc.scale(&params.c).shift_up(params.q as usize)
    };

    Ok(CoeffSeq::new(
        prefix,
        FamilyTag::Aswe,
        ParamsEcho::Aswe(params.clone()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(vals: &[(i64, i64)]) -> Vec<Rat> {
        vals.iter().map(|&(p, q)| Rat::new(p, q)).collect()
    }

    #[test]
    fn plain_geometric() {
        let s = expand_aswe(&ASWEParams::geometric(Rat::one(), Rat::one()), 5).unwrap();
        assert_eq!(s.coeffs(), rats(&[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1)]));
        assert!(!s.exact_tail());
    }

    #[test]
    fn two_pole_product_gives_one_minus_half_powers() {
        let params = ASWEParams::new(
            Rat::new(1, 2),
            0,
            Rat::zero(),
            vec![],
            vec![Rat::one(), Rat::new(1, 2)],
        );
        let s = expand_aswe(&params, 5).unwrap();
        assert_eq!(
            s.coeffs(),
            rats(&[(1, 2), (3, 4), (7, 8), (15, 16), (31, 32)])
        );
    }

    #[test]
    fn binomial_square_is_exact() {
        let params = ASWEParams::polynomial(Rat::one(), vec![Rat::one(), Rat::one()]);
        let s = expand_aswe(&params, 5).unwrap();
        assert_eq!(
            s.coeffs(),
            rats(&[(1, 1), (2, 1), (1, 1), (0, 1), (0, 1)])
        );
        assert!(s.exact_tail());
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        let mut p = ASWEParams::geometric(Rat::one(), Rat::one());
        p.q = -1;
        assert!(matches!(
            expand_aswe(&p, 4),
            Err(GenfunError::NegativeShift { q: -1 })
        ));

        let p = ASWEParams::geometric(Rat::from_int(-1), Rat::one());
        assert!(expand_aswe(&p, 4).is_err());

        let p = ASWEParams::geometric(Rat::one(), Rat::from_int(-2));
        assert!(expand_aswe(&p, 4).is_err());

        let mut p = ASWEParams::default();
        p.gamma = Rat::from_int(-1);
        assert!(expand_aswe(&p, 4).is_err());

        let p = ASWEParams::polynomial(Rat::one(), vec![Rat::zero()]);
        assert!(expand_aswe(&p, 4).is_err());
    }

    #[test]
    fn shift_and_exponential() {
        let params = ASWEParams::new(Rat::from_int(2), 1, Rat::one(), vec![], vec![]);
        let s = expand_aswe(&params, 4).unwrap();
        // 2 z e^z = 2z + 2z^2 + z^3 + ...
        assert_eq!(s.coeffs(), rats(&[(0, 1), (2, 1), (2, 1), (1, 1)]));
        assert!(!s.exact_tail());
    }

    #[test]
    fn polynomial_oracle_by_repeated_products() {
        // gamma = 0, no poles: expansion equals the coefficient list of
        // C z^q prod (1 + alpha_k z) computed by plain polynomial products.
        use exact_core::Poly;
        let cases: Vec<(Rat, i64, Vec<Rat>)> = vec![
            (Rat::new(3, 2), 0, vec![Rat::new(1, 2)]),
            (Rat::one(), 2, vec![Rat::one(), Rat::new(2, 3), Rat::from_int(4)]),
            (Rat::new(5, 7), 1, vec![Rat::new(7, 5), Rat::new(7, 5)]),
        ];
        for (c, q, alphas) in cases {
            let n = 10;
            let mut poly = Poly::constant(c.clone());
            for a in &alphas {
                poly = &poly * &Poly::new(vec![Rat::one(), a.clone()]);
            }
            poly = poly.shift_up(q as usize);
            let expect: Vec<Rat> = (0..n).map(|k| poly.coeff(k)).collect();

            let s = expand_aswe(&ASWEParams::new(c, q, Rat::zero(), alphas, vec![]), n).unwrap();
            assert_eq!(s.coeffs(), expect.as_slice());
            assert!(s.exact_tail());
        }
    }
}
