//! Coefficient sequences with provenance.

use exact_core::{Poly, Rat, SeriesPrefix};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::aswe::ASWEParams;

/// Which generator produced a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Aswe,
    E1,
    PartialTheta,
    L1Family,
    User,
}

/// Echo of the generating parameters, carried alongside the prefix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ParamsEcho {
    Aswe(ASWEParams),
    E1 { qs: Vec<Rat> },
    PartialTheta { a: Rat },
    L1 { which: u8, c: Rat, d: Rat, n: usize },
    User,
}

/// Finite prefix of a coefficient sequence plus provenance metadata.
///
/// Generated families always have nonnegative coefficients; sequences
/// built from raw user input may not, and consumers that require
/// nonnegativity check it explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSeq {
    prefix: SeriesPrefix,
    family_tag: FamilyTag,
    params_echo: ParamsEcho,
}

impl CoeffSeq {
    pub fn new(prefix: SeriesPrefix, family_tag: FamilyTag, params_echo: ParamsEcho) -> Self {
        CoeffSeq {
            prefix,
            family_tag,
            params_echo,
        }
    }

    /// Wraps a raw prefix as a user-supplied sequence.
    pub fn user(prefix: SeriesPrefix) -> Self {
        CoeffSeq::new(prefix, FamilyTag::User, ParamsEcho::User)
    }

    pub fn from_rats(coeffs: Vec<Rat>, exact_tail: bool) -> Self {
        CoeffSeq::user(SeriesPrefix::new(coeffs, exact_tail))
    }

    pub fn from_ints(vals: &[i64], exact_tail: bool) -> Self {
        CoeffSeq::user(SeriesPrefix::from_ints(vals, exact_tail))
    }

    pub fn prefix(&self) -> &SeriesPrefix {
        &self.prefix
    }

    pub fn coeffs(&self) -> &[Rat] {
        self.prefix.coeffs()
    }

    pub fn truncation_order(&self) -> usize {
        self.prefix.truncation_order()
    }

    pub fn exact_tail(&self) -> bool {
        self.prefix.exact_tail()
    }

    pub fn known_coeff(&self, k: usize) -> Option<Rat> {
        self.prefix.known_coeff(k)
    }

    pub fn support_degree(&self) -> Option<usize> {
        self.prefix.support_degree()
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.prefix.is_exactly_zero()
    }

    pub fn to_poly(&self) -> Option<Poly> {
        self.prefix.to_poly()
    }

    pub fn family_tag(&self) -> FamilyTag {
        self.family_tag
    }

    pub fn params_echo(&self) -> &ParamsEcho {
        &self.params_echo
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs().iter().all(|c| !c.is_negative())
    }

    /// First index with a negative coefficient, if any.
    pub fn first_negative_index(&self) -> Option<usize> {
        self.coeffs().iter().position(Rat::is_negative)
    }
}

impl Serialize for CoeffSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CoeffSeq", 5)?;
        st.serialize_field("coeffs", self.prefix.coeffs())?;
        st.serialize_field("N", &self.prefix.truncation_order())?;
        st.serialize_field("exact_tail", &self.prefix.exact_tail())?;
        st.serialize_field("family_tag", &self.family_tag)?;
        st.serialize_field("params", &self.params_echo)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CoeffSeq {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Rat>,
            #[serde(rename = "N")]
            n: usize,
            exact_tail: bool,
            #[serde(default)]
            family_tag: Option<FamilyTag>,
            #[serde(default)]
            params: Option<ParamsEcho>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.n {
            return Err(serde::de::Error::custom(format!(
                "coefficient list length {} does not match N = {}",
                raw.coeffs.len(),
                raw.n
            )));
        }
        if raw.coeffs.is_empty() {
            return Err(serde::de::Error::custom("truncation order must be >= 1"));
        }
        Ok(CoeffSeq::new(
            SeriesPrefix::new(raw.coeffs, raw.exact_tail),
            raw.family_tag.unwrap_or(FamilyTag::User),
            raw.params.unwrap_or(ParamsEcho::User),
        ))
    }
}
