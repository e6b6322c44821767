//! Exact rational scalars, dense polynomials, and truncated power series.
//!
//! Everything downstream (Toeplitz minors, Sturm chains, preserver
//! decisions) reduces to sign decisions, so this crate never rounds:
//! every value is an arbitrary-precision rational in canonical form.
//!
//! The three building blocks:
//!
//! - [`Rat`]: arbitrary-precision rational scalar (canonical `p/q`).
//! - [`Poly`]: dense polynomial over [`Rat`] with an explicit `None`
//!   degree for the zero polynomial.
//! - [`SeriesPrefix`]: the first `N` coefficients of a power series,
//!   together with an `exact_tail` flag meaning "all omitted
//!   coefficients are zero".

pub mod poly;
pub mod rat;
pub mod series;

pub use poly::Poly;
pub use rat::Rat;
pub use series::{
    exp_series, pole_power_series, series_derivative_shifted, series_product, SeriesPrefix,
};
