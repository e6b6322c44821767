//! Preserver decision for generating functions with a pole.

use genfun::ASWEParams;

use crate::verdict::{Basis, Decision, PreserverVerdict, SubReport};
use crate::PreserverError;

/// Decides the preserver property for a product-form function with at
/// least one pole: it holds exactly for `C / (1 - beta z)` with
/// `C > 0`, `beta > 0`. Any extra structure (a power-of-`z` shift, an
/// exponential factor, zero factors, a second pole or a higher-order
/// pole) breaks the property, and the verdict names every violated
/// clause.
pub fn decide_meromorphic_preserver(
    params: &ASWEParams,
) -> Result<PreserverVerdict, PreserverError> {
    params.validate()?;
    if params.betas.is_empty() {
        return Err(PreserverError::NoPole);
    }
    if params.c.is_zero() {
        return Err(PreserverError::ZeroScale);
    }

    let mut violated: Vec<&str> = Vec::new();
    if params.q != 0 {
        violated.push("q = 0: a power-of-z shift is excluded");
    }
    if !params.gamma.is_zero() {
        violated.push("gamma = 0: an exponential factor is excluded");
    }
    if !params.alphas.is_empty() {
        violated.push("alphas empty: zero factors are excluded");
    }
    if params.betas.len() > 1 {
        violated.push("single simple pole: a second or higher-order pole is excluded");
    }

    if violated.is_empty() {
        Ok(
            PreserverVerdict::new(Decision::Preserver, Basis::Theorem1).with_detail(
                "form",
                SubReport::Note(format!(
                    "C / (1 - beta z) with C = {} > 0, beta = {} > 0",
                    params.c, params.betas[0]
                )),
            ),
        )
    } else {
        let mut verdict = PreserverVerdict::new(Decision::NotPreserver, Basis::Theorem1);
        for clause in violated {
            verdict = verdict.with_detail("violated clause", SubReport::Note(clause.to_owned()));
        }
        Ok(verdict)
    }
}
