//! Test-only oracles. Nothing here calls into the crate's quadrature or
//! series code.

#![allow(dead_code)]

/// Romberg integration of a smooth integrand on [a, b], refined until two
/// successive extrapolated values agree to `tol` (relative to the larger of
/// the value and `scale`).
pub fn romberg<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, scale: f64) -> f64 {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut h = b - a;
    let mut trap = 0.5 * h * (f(a) + f(b));
    rows.push(vec![trap]);
    let mut n = 1usize;
    for level in 1..=24 {
        let mid: f64 = (0..n).map(|i| f(a + (i as f64 + 0.5) * h)).sum();
        trap = 0.5 * (trap + h * mid);
        h *= 0.5;
        n *= 2;
        let mut row = vec![trap];
        let mut factor = 1.0;
        for j in 1..=level.min(12) {
            factor *= 4.0;
            let prev = rows[level - 1][j - 1];
            let cur = row[j - 1];
            row.push(cur + (cur - prev) / (factor - 1.0));
        }
        let best = *row.last().unwrap();
        let prev_best = *rows[level - 1].last().unwrap();
        rows.push(row);
        if level > 4 && (best - prev_best).abs() <= tol * best.abs().max(scale) {
            return best;
        }
    }
    *rows.last().unwrap().last().unwrap()
}

/// Γ(x) for x > 0 from its defining integral, with t = s^{1/x} removing the
/// endpoint singularity: Γ(x) = (1/x) ∫₀^∞ exp(−s^{1/x}) ds.
pub fn gamma_by_integral(x: f64) -> f64 {
    let p = 1.0 / x;
    let upper = 60f64.powf(x);
    romberg(|s| (-s.powf(p)).exp(), 0.0, upper, 1e-15, 0.0) / x
}

/// J_ν(x) from its Schläfli integral representation.
pub fn bessel_j_by_integral(nu: f64, x: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let first = romberg(|t| (nu * t - x * t.sin()).cos(), 0.0, pi, 1e-15, 1.0) / pi;
    let second = romberg(|t| (-x * t.sinh() - nu * t).exp(), 0.0, 8.0, 1e-15, 1.0);
    first - (nu * pi).sin() / pi * second
}

/// I_ν(x) from the companion integral representation.
pub fn bessel_i_by_integral(nu: f64, x: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let first = romberg(|t| (x * t.cos()).exp() * (nu * t).cos(), 0.0, pi, 1e-15, 1.0) / pi;
    let second = romberg(|t| (-x * t.cosh() - nu * t).exp(), 0.0, 8.0, 1e-15, 1.0);
    first - (nu * pi).sin() / pi * second
}

pub fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

pub fn mixed_ok(lhs: f64, rhs: f64, atol: f64, rtol: f64) -> bool {
    (lhs - rhs).abs() <= atol + rtol * rhs.abs()
}
