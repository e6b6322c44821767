//! The coefficientwise (convolution) product.

use exact_core::SeriesPrefix;
use genfun::CoeffSeq;

/// Entrywise product of two prefixes on the common truncation.
pub fn hadamard_prefix(u: &SeriesPrefix, v: &SeriesPrefix) -> SeriesPrefix {
    let n = u.truncation_order().min(v.truncation_order());
    let coeffs = (0..n)
        .map(|k| &u.coeffs()[k] * &v.coeffs()[k])
        .collect();
    // the tail is exactly zero as soon as either factor is exactly zero
    // beyond the common truncation
    let exact_tail = u.truncated(n).exact_tail() || v.truncated(n).exact_tail();
    SeriesPrefix::new(coeffs, exact_tail)
}

/// `(a_k), (b_k) -> (a_k b_k)`, truncated to the shorter prefix.
pub fn hadamard(a: &CoeffSeq, b: &CoeffSeq) -> CoeffSeq {
    CoeffSeq::user(hadamard_prefix(a.prefix(), b.prefix()))
}
