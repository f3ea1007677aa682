use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::eval::{Evaluation, Work};

/// Γ(x) overflows f64 just above this.
pub const GAMMA_MAX_ARG: f64 = 171.6;

// Lanczos approximation, g = 7, nine terms. Relative accuracy ~1e-15 for x ≥ 1/2.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

// Lanczos truncation plus pow/exp rounding, which grows with the exponent.
fn rel_error_bound(x: f64) -> f64 {
    (8.0 + 2.0 * x.abs()) * f64::EPSILON
}

/// sin(πx) with the argument reduced exactly first, so the result keeps
/// full relative accuracy near the integers.
pub fn sin_pi(x: f64) -> f64 {
    if x.fract() == 0.0 {
        return 0.0;
    }
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn lanczos(x: f64) -> f64 {
    // Γ(x) for x ≥ 1/2
    let z = x - 1.0;
    let mut series = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * series
}

/// Γ(x) for real x away from the poles at 0, −1, −2, …
pub fn gamma(x: f64) -> Result<Evaluation> {
    if x.is_nan() {
        return Err(Error::InvalidArgument("gamma of NaN".into()));
    }
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow { arg: x, max: GAMMA_MAX_ARG });
    }
    if x.fract() == 0.0 {
        let n = x as u32;
        let value: f64 = (2..n).map(f64::from).product();
        return Ok(Evaluation::new(value, value * f64::EPSILON * 0.5 * n as f64, Work::terms(n as usize)));
    }
    let value = if x < 0.5 {
        PI / (sin_pi(x) * lanczos(1.0 - x))
    } else {
        lanczos(x)
    };
    if !value.is_finite() {
        return Err(Error::Overflow { arg: x, max: GAMMA_MAX_ARG });
    }
    Ok(Evaluation::new(value, value.abs() * rel_error_bound(x), Work::terms(LANCZOS_COEF.len())))
}

/// 1/Γ(x), equal to zero at the poles.
pub fn reciprocal_gamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return 0.0;
    }
    if x > GAMMA_MAX_ARG {
        return 0.0;
    }
    if x < 0.5 {
        sin_pi(x) * lanczos(1.0 - x) / PI
    } else {
        1.0 / lanczos(x)
    }
}
