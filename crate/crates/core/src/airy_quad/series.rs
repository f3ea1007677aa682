use crate::error::{domain, Error, Result};
use crate::eval::{Evaluation, Work};

/// f(0) = (1/3)∫₀^∞ u^{−2/3} cos u du = Γ(1/3)√3/6.
pub const F_ZERO: f64 = 0.773_342_942_077_989_850_2;
/// f'(0) = −(1/3)∫₀^∞ u^{−1/3} sin u du = −Γ(2/3)√3/6.
pub const F_PRIME_ZERO: f64 = -0.390_900_178_421_166_817_96;

/// Past this the two exponential components of the series cancel too much.
pub const AIRY_SERIES_MAX_RHO: f64 = 8.0;

/// f(ρ) from the Maclaurin solution of f'' = ρf/3:
/// c₀ = f(0), c₁ = f'(0), c₂ = 0, c_{k+3} = c_k / (3(k+3)(k+2)).
pub fn airy_series(rho: f64, terms: usize) -> Result<Evaluation> {
    if !rho.is_finite() || rho.abs() > AIRY_SERIES_MAX_RHO {
        return Err(domain(format!("airy_series needs |rho| <= {AIRY_SERIES_MAX_RHO}, got {rho}")));
    }
    if rho == 0.0 {
        return Ok(Evaluation::new(F_ZERO, 0.0, Work::terms(1)));
    }
    // coefficients three apart; track the last three terms c_k ρ^k
    let mut coef = [F_ZERO, F_PRIME_ZERO, 0.0];
    let mut power = [1.0, rho, rho * rho];
    let rho3 = rho * rho * rho;
    let mut sum = 0.0;
    let mut sum_abs = 0.0;
    let mut peak = 0.0_f64;
    let mut k = 0usize;
    let mut quiet = 0usize;
    while k < terms {
        let slot = k % 3;
        let term = coef[slot] * power[slot];
        sum += term;
        sum_abs += term.abs();
        peak = peak.max(term.abs());
        // advance this residue class: c_{k+3} = c_k / (3 (k+3)(k+2))
        coef[slot] /= 3.0 * (k as f64 + 3.0) * (k as f64 + 2.0);
        power[slot] *= rho3;
        k += 1;
        let floor = 0.5 * f64::EPSILON * sum.abs().max(f64::EPSILON * peak);
        if term.abs() <= floor && k > 3 {
            quiet += 1;
            if quiet >= 3 {
                let next: f64 = (0..3).map(|s| (coef[s] * power[s]).abs()).sum();
                let err = 2.0 * next + (4.0 + k as f64) * f64::EPSILON * sum_abs;
                return Ok(Evaluation::new(sum, err, Work::terms(k)));
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NoConvergence { what: "airy_series", iterations: terms })
}
