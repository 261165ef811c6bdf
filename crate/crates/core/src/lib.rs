//! Numerical toolkit for Hilbert-type operators induced by moment Hankel
//! matrices of positive Borel measures on `[0, 1)`.
//!
//! A measure `mu` on `[0, 1)` with moments `mu_m = ∫ t^m dmu(t)` induces the
//! matrix with entries `c_alpha(n) * mu_{n+k}`, where
//! `c_alpha(n) = Gamma(n + alpha) / (n! Gamma(alpha))`. Acting on the Taylor
//! coefficients of an analytic function on the unit disk, this matrix defines
//! an operator which (for suitable measures) coincides with integration of
//! `f(t) / (1 - t z)^alpha` against `mu`. Whether that operator is bounded or
//! compact from a Hardy space into a weighted Bergman space or the Bloch
//! space is governed by logarithmic Carleson-type conditions on `mu`; this
//! crate makes all of those quantities computable at desk scale.
//!
//! The crate is organised in four layers:
//!
//! - [`measures`]: atom + power-log density measures, moments, tail masses,
//!   Carleson quotient profiles, and the log/power weighted transforms.
//! - [`spaces`]: truncated power series, Hardy / weighted Bergman / Bloch
//!   norms, and the extremal test-function families.
//! - [`operator`]: the moment Hankel matrix, its series and integral
//!   application, the equivalence residual between the two, and the weighted
//!   area duality pairing.
//! - [`analyzer`]: embedding checks, boundedness and compactness verdicts,
//!   divergence-rate fits, and parameter sweeps.
//!
//! All operations are pure and deterministic; values are safe to compute
//! from multiple threads.

pub mod analyzer;
pub mod measures;
pub mod numfmt;
pub mod operator;
pub mod spaces;

mod error;
mod numeric;

pub use error::{Error, Result};
