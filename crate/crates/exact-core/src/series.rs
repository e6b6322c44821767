//! Truncated power series with explicit truncation metadata.
//!
//! A [`SeriesPrefix`] holds coefficients `0..N-1` of some power series.
//! `exact_tail = true` asserts that every omitted coefficient is zero,
//! i.e. the series is a polynomial fully contained in the prefix.
//! Mixing two prefixes never claims more than both inputs justify: the
//! result is truncated to the minimum order.

use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::Poly;
use crate::rat::Rat;

/// Finite prefix of a power series over [`Rat`].
#[derive(Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    coeffs: Vec<Rat>,
    exact_tail: bool,
}

impl SeriesPrefix {
    /// Builds a prefix from explicit coefficients. Panics on empty input
    /// (the truncation order must be at least 1).
    pub fn new(coeffs: Vec<Rat>, exact_tail: bool) -> Self {
        assert!(!coeffs.is_empty(), "truncation order must be >= 1");
        SeriesPrefix { coeffs, exact_tail }
    }

    pub fn from_ints(vals: &[i64], exact_tail: bool) -> Self {
        SeriesPrefix::new(vals.iter().map(|&v| Rat::from_int(v)).collect(), exact_tail)
    }

    /// All-zero prefix with `exact_tail` set (the zero series).
    pub fn zeros(n: usize) -> Self {
        SeriesPrefix::new(vec![Rat::zero(); n.max(1)], true)
    }

    /// Prefix of a polynomial: exact when the whole support fits.
    pub fn from_poly(p: &Poly, n: usize) -> Self {
        let n = n.max(1);
        let coeffs = (0..n).map(|k| p.coeff(k)).collect();
        let exact_tail = match p.degree() {
            None => true,
            Some(d) => d < n,
        };
        SeriesPrefix::new(coeffs, exact_tail)
    }

    /// Truncation order `N` (number of known coefficients).
    pub fn truncation_order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn exact_tail(&self) -> bool {
        self.exact_tail
    }

    /// Coefficient `k` when it is known: inside the prefix, or anywhere
    /// when the tail is exactly zero.
    pub fn known_coeff(&self, k: usize) -> Option<Rat> {
        match self.coeffs.get(k) {
            Some(c) => Some(c.clone()),
            None if self.exact_tail => Some(Rat::zero()),
            None => None,
        }
    }

    /// Largest index with a nonzero coefficient inside the prefix.
    pub fn support_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// True when every stored coefficient is zero and the tail is exact.
    pub fn is_exactly_zero(&self) -> bool {
        self.exact_tail && self.coeffs.iter().all(Rat::is_zero)
    }

    /// Polynomial part; `None` unless the tail is exactly zero.
    pub fn to_poly(&self) -> Option<Poly> {
        self.exact_tail.then(|| Poly::new(self.coeffs.clone()))
    }

    /// Re-truncates to a shorter order.
    pub fn truncated(&self, n: usize) -> SeriesPrefix {
        assert!(n >= 1 && n <= self.coeffs.len());
        let exact_tail = self.exact_tail && self.support_degree().map_or(true, |d| d < n);
        SeriesPrefix::new(self.coeffs[..n].to_vec(), exact_tail)
    }

    /// Coefficientwise sum on the common truncation.
    pub fn add(&self, other: &SeriesPrefix) -> SeriesPrefix {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        let exact_tail = self.truncated(n).exact_tail && other.truncated(n).exact_tail;
        SeriesPrefix::new(coeffs, exact_tail)
    }

    pub fn scale(&self, c: &Rat) -> SeriesPrefix {
        SeriesPrefix::new(self.coeffs.iter().map(|a| a * c).collect(), self.exact_tail)
    }

    /// Prepends `q` zero coefficients (multiplication by `z^q`),
    /// truncating back to the same order.
    pub fn shift_up(&self, q: usize) -> SeriesPrefix {
        let n = self.coeffs.len();
        let mut coeffs = vec![Rat::zero(); q.min(n)];
        coeffs.extend(self.coeffs.iter().take(n - coeffs.len()).cloned());
        let exact_tail = self.exact_tail && self.support_degree().map_or(true, |d| d + q < n);
        SeriesPrefix::new(coeffs, exact_tail)
    }
}

/// Cauchy product truncated to the shorter input.
///
/// The tail is exact only when both factors are exact and the product's
/// support provably fits inside the truncation (or one factor is the
/// zero series).
pub fn series_product(u: &SeriesPrefix, v: &SeriesPrefix) -> SeriesPrefix {
    let n = u.truncation_order().min(v.truncation_order());
    let mut coeffs = vec![Rat::zero(); n];
    for (i, a) in u.coeffs.iter().take(n).enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.coeffs.iter().take(n - i).enumerate() {
            coeffs[i + j] += &(a * b);
        }
    }
    let exact_tail = if u.is_exactly_zero() || v.is_exactly_zero() {
        true
    } else {
        u.exact_tail
            && v.exact_tail
            && match (u.support_degree(), v.support_degree()) {
                (Some(du), Some(dv)) => du + dv < n,
                _ => true,
            }
    };
    SeriesPrefix::new(coeffs, exact_tail)
}

/// The coefficient map `u_k -> k * u_k`, i.e. the prefix of `z u'(z)`.
pub fn series_derivative_shifted(u: &SeriesPrefix) -> SeriesPrefix {
    let coeffs = u
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| Rat::from_int(k as i64) * c)
        .collect();
    SeriesPrefix::new(coeffs, u.exact_tail)
}

/// Prefix of `e^{gamma z}`: coefficient `k` is `gamma^k / k!`.
pub fn exp_series(gamma: &Rat, n: usize) -> SeriesPrefix {
    assert!(n >= 1, "truncation order must be >= 1");
    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(Rat::one());
    for k in 1..n {
        let prev = coeffs[k - 1].clone();
        coeffs.push(prev * gamma / &Rat::from_int(k as i64));
    }
    SeriesPrefix::new(coeffs, gamma.is_zero())
}

/// Prefix of `1 / (1 - beta z)^m`: coefficient `s` is
/// `C(s + m - 1, m - 1) * beta^s`. Requires `beta > 0`, `m >= 1`.
pub fn pole_power_series(beta: &Rat, m: usize, n: usize) -> SeriesPrefix {
    assert!(beta.is_positive(), "pole parameter beta must be positive");
    assert!(m >= 1, "pole order must be >= 1");
    assert!(n >= 1, "truncation order must be >= 1");
    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(Rat::one());
    for s in 1..n {
        let prev = coeffs[s - 1].clone();
        let ratio = Rat::from_int((s + m - 1) as i64) / Rat::from_int(s as i64);
        coeffs.push(prev * beta * ratio);
    }
    SeriesPrefix::new(coeffs, false)
}

impl Serialize for SeriesPrefix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SeriesPrefix", 3)?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.serialize_field("N", &self.coeffs.len())?;
        st.serialize_field("exact_tail", &self.exact_tail)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SeriesPrefix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Rat>,
            #[serde(rename = "N")]
            n: usize,
            exact_tail: bool,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.n {
            return Err(de::Error::custom(format!(
                "series prefix length {} does not match N = {}",
                raw.coeffs.len(),
                raw.n
            )));
        }
        if raw.coeffs.is_empty() {
            return Err(de::Error::custom("truncation order must be >= 1"));
        }
        Ok(SeriesPrefix::new(raw.coeffs, raw.exact_tail))
    }
}

impl std::fmt::Debug for SeriesPrefix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SeriesPrefix[{}{}]",
            self.coeffs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            if self.exact_tail { "; exact" } else { ", ..." }
        )
    }
}
