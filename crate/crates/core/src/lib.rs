//! Exact coefficient generators and arbitrary-precision accuracy benchmarks
//! for the classical asymptotic expansions of the Gamma function.
//!
//! The crate is layered:
//!
//! - [`exact`] — arbitrary-precision rationals plus the combinatorial
//!   scalars (generalized binomials, Bernoulli numbers) the generators use.
//! - [`series`] — truncated formal series in inverse powers of the
//!   variable, with exact rational coefficients and the transformations
//!   between them (product, quotient, powers, exponential, argument
//!   scaling, shifted re-expansion).
//! - [`families`] — the expansion families themselves: the logarithmic and
//!   product-form series, the root radicands, the central-binomial series,
//!   the shifted coefficients `G_k` and the even-power pairs `(g_m, v_m)`.
//! - [`eval`] — high-precision log-space evaluation of each approximation,
//!   a rigorously bounded reference `log Gamma(x+1)`, and the
//!   exact-decimal-digits metric.
//! - [`tables`] — the benchmark grids assembled from [`eval`].
//! - [`decimal`] — exact decimal rendering/parsing used by the above.

pub mod decimal;
pub mod exact;
pub mod eval;
pub mod families;
pub mod series;
pub mod tables;

pub use astro_float::BigFloat;
pub use exact::Rational;
