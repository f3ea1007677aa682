//! Airy-type oscillatory integrals and fractional-order modified Bessel
//! functions, evaluated along independent routes and cross-checked.
//!
//! The crate is split into four layers:
//!
//! * [`special`]: Gamma, `J_ν`, `I_ν`, `K_ν` for real argument, plus an
//!   integral-representation oracle for `K_ν`.
//! * [`airy_quad`]: phase-zero panel quadrature of `∫₀^∞ cos(ω³+ρω) dω`,
//!   its sine partner, the ξ-form kernels `∫₀^∞ cos[(3/2)ξ(x+x³/3)] dx` and
//!   `∫₀^∞ x sin[(3/2)ξ(x+x³/3)] dx`, and the ascending Maclaurin series.
//! * [`ode_transforms`]: the substitution chain from the Airy equation to
//!   the normal form `F'' + (5/(36y²) − 4/27)F = 0`, and the generalized
//!   Bessel equation `x²y'' + (1−2c)xy' + (b²a²x^{2a} + c² − ν²a²)y = 0`
//!   with real or purely imaginary `b`.
//! * [`verifier`]: grid-based checks that the kernels equal `K_{1/3}/√3`
//!   and `K_{2/3}/√3`, with a mixed absolute/relative pass rule.
//!
//! Everything is a pure function of its inputs.

pub mod airy_quad;
pub mod cli;
mod error;
pub mod eval;
pub mod ode_transforms;
pub mod special;
pub mod verifier;

pub use airy_quad::{PhaseParams, QuadSpec};
pub use error::{Error, Result};
pub use eval::{Evaluation, Work};
pub use ode_transforms::{BowmanParams, Branch, ResidualReport};
pub use special::Order;
pub use verifier::{GridSpec, IdentityId, IdentityReport, Spacing, SuiteConfig, SuiteVerdict, Tolerance};

