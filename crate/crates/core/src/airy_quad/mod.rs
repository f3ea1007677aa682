//! Direct evaluation of the cubic-phase oscillatory integrals
//!
//! ```text
//! f(ρ) = ∫₀^∞ cos(ω³ + ρω) dω        g(ρ) = ∫₀^∞ sin(ω³ + ρω) dω
//! ∫₀^∞ cos[(3/2)ξ(x + x³/3)] dx = (2/ξ)^{1/3} f(ρ),   ρ = 3(ξ/2)^{2/3}
//! ∫₀^∞ x sin[(3/2)ξ(x + x³/3)] dx
//! ```
//!
//! by phase-zero panel quadrature, plus the ascending Maclaurin series of
//! f from its ODE f'' = ρf/3.

mod panels;
mod series;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::eval::Evaluation;

use panels::{oscillatory_integral, CubicPhase, Trig};

pub use series::{airy_series, AIRY_SERIES_MAX_RHO, F_PRIME_ZERO, F_ZERO};

/// Oscillatory quadrature configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadSpec {
    /// Absolute target for the acceleration error estimate.
    pub atol: f64,
    /// Relative target for the acceleration error estimate.
    pub rtol: f64,
    /// Maximum number of phase-zero panels.
    pub max_half_periods: usize,
    /// Rounds of pairwise averaging applied to the panel partial sums.
    pub accel_depth: usize,
    /// Gauss–Legendre nodes per panel.
    pub panel_rule: usize,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec { atol: 1e-14, rtol: 1e-12, max_half_periods: 4096, accel_depth: 8, panel_rule: 15 }
    }
}

impl QuadSpec {
    pub fn new(atol: f64, rtol: f64, max_half_periods: usize, accel_depth: usize, panel_rule: usize) -> Result<Self> {
        let spec = QuadSpec { atol, rtol, max_half_periods, accel_depth, panel_rule };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if !(self.atol > 0.0) || !(self.rtol > 0.0) {
            return bad(format!("atol and rtol must be positive, got {} and {}", self.atol, self.rtol));
        }
        if self.max_half_periods < 8 {
            return bad(format!("max_half_periods must be at least 8, got {}", self.max_half_periods));
        }
        if self.accel_depth < 2 {
            return bad(format!("accel_depth must be at least 2, got {}", self.accel_depth));
        }
        if !(2..=64).contains(&self.panel_rule) {
            return bad(format!("panel_rule must be between 2 and 64 nodes, got {}", self.panel_rule));
        }
        Ok(())
    }

    pub fn with_max_half_periods(mut self, n: usize) -> Self {
        self.max_half_periods = n;
        self
    }
}

/// The ρ of `f(ρ)` paired with the ξ of the kernel integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseParams {
    pub rho: f64,
    pub xi: f64,
}

impl PhaseParams {
    pub fn from_xi(xi: f64) -> Result<Self> {
        Ok(PhaseParams { rho: map_xi_to_rho(xi)?, xi })
    }

    pub fn from_rho(rho: f64) -> Result<Self> {
        Ok(PhaseParams { rho, xi: map_rho_to_xi(rho)? })
    }

    /// (2/ξ)^{1/3}, the Jacobian of x = (2/ξ)^{1/3} ω.
    pub fn prefactor(&self) -> f64 {
        (2.0 / self.xi).cbrt()
    }
}

/// ρ = 3(ξ/2)^{2/3}.
pub fn map_xi_to_rho(xi: f64) -> Result<f64> {
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(domain(format!("xi must be positive and finite, got {xi}")));
    }
    Ok(3.0 * (0.5 * xi).cbrt().powi(2))
}

/// ξ = 2(ρ/3)^{3/2}.
pub fn map_rho_to_xi(rho: f64) -> Result<f64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(domain(format!("rho must be positive and finite, got {rho}")));
    }
    Ok(2.0 * (rho / 3.0).powf(1.5))
}

fn check_rho(rho: f64) -> Result<()> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(domain(format!("rho must be nonnegative and finite, got {rho}")));
    }
    Ok(())
}

fn check_spec(spec: &QuadSpec) -> Result<()> {
    spec.validate()
}

/// f(ρ) = ∫₀^∞ cos(ω³ + ρω) dω, ρ ≥ 0.
pub fn airy_cos_integral(rho: f64, spec: &QuadSpec) -> Result<Evaluation> {
    check_rho(rho)?;
    check_spec(spec)?;
    oscillatory_integral(CubicPhase { cubic: 1.0, linear: rho }, Trig::Cos, |_| 1.0, spec)
}

/// g(ρ) = ∫₀^∞ sin(ω³ + ρω) dω, ρ ≥ 0.
///
/// Together with f this is u = f − ig = ∫₀^∞ e^{−i(ω³+ρω)} dω, which
/// satisfies u'' − ρu/3 = i/3; hence g'' − ρg/3 = −1/3.
pub fn airy_sin_integral(rho: f64, spec: &QuadSpec) -> Result<Evaluation> {
    check_rho(rho)?;
    check_spec(spec)?;
    oscillatory_integral(CubicPhase { cubic: 1.0, linear: rho }, Trig::Sin, |_| 1.0, spec)
}

/// f'(ρ) = −∫₀^∞ ω sin(ω³ + ρω) dω.
pub fn airy_cos_derivative(rho: f64, spec: &QuadSpec) -> Result<Evaluation> {
    check_rho(rho)?;
    check_spec(spec)?;
    let e = oscillatory_integral(CubicPhase { cubic: 1.0, linear: rho }, Trig::Sin, |w| w, spec)?;
    Ok(Evaluation { value: -e.value, ..e })
}

/// ∫₀^∞ cos[(3/2)ξ(x + x³/3)] dx through the substitution to f(ρ).
pub fn xi_form_cos(xi: f64, spec: &QuadSpec) -> Result<Evaluation> {
    let p = PhaseParams::from_xi(xi)?;
    Ok(airy_cos_integral(p.rho, spec)?.scale(p.prefactor()))
}

/// Same quantity as [`xi_form_cos`], integrated directly in x.
pub fn xi_form_cos_direct(xi: f64, spec: &QuadSpec) -> Result<Evaluation> {
    map_xi_to_rho(xi)?;
    check_spec(spec)?;
    oscillatory_integral(CubicPhase { cubic: 0.5 * xi, linear: 1.5 * xi }, Trig::Cos, |_| 1.0, spec)
}

/// ∫₀^∞ x sin[(3/2)ξ(x + x³/3)] dx, integrated directly in x.
pub fn xi_form_xsin(xi: f64, spec: &QuadSpec) -> Result<Evaluation> {
    map_xi_to_rho(xi)?;
    check_spec(spec)?;
    oscillatory_integral(CubicPhase { cubic: 0.5 * xi, linear: 1.5 * xi }, Trig::Sin, |x| x, spec)
}
