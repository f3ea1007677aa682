//! Phase-zero panel quadrature for ∫₀^∞ w(t) trig(αt³ + βt) dt with α > 0, β ≥ 0.
//!
//! The phase is strictly increasing, so the integrand's zeros are simple and
//! each panel between consecutive zeros is one-signed. Panels are integrated
//! with a fixed Gauss–Legendre rule and the alternating panel series is
//! summed by iterated averaging of its partial sums.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::eval::{Evaluation, Work};

use super::QuadSpec;

const EPS: f64 = f64::EPSILON;
const ROOT_MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct CubicPhase {
    pub cubic: f64,
    pub linear: f64,
}

impl CubicPhase {
    fn value(&self, t: f64) -> f64 {
        t * (self.cubic * t * t + self.linear)
    }

    fn slope(&self, t: f64) -> f64 {
        3.0 * self.cubic * t * t + self.linear
    }

    /// φ(t) − φ(a) without cancellation.
    fn increment(&self, a: f64, t: f64) -> f64 {
        let d = t - a;
        d * (self.cubic * (t * t + t * a + a * a) + self.linear)
    }

    /// Solves φ(t) = target on [lo, ∞) by Newton steps kept inside a bracket.
    fn solve(&self, target: f64, lo: f64) -> Result<f64> {
        // φ(t) ≥ αt³ and φ(t) ≥ βt give two upper bounds for the root
        let mut hi = (target / self.cubic).cbrt();
        if self.linear > 0.0 {
            hi = hi.min(target / self.linear);
        }
        let mut lo = lo;
        // the bounds are exact in real arithmetic; rounding can leave φ(hi) an ulp short
        hi *= 1.0 + 8.0 * EPS;
        if !(self.value(lo) <= target && self.value(hi) >= target) {
            return Err(Error::RootBracket(target));
        }
        let mut t = 0.5 * (lo + hi);
        for _ in 0..ROOT_MAX_ITER {
            let f = self.value(t) - target;
            if f == 0.0 {
                return Ok(t);
            }
            if f < 0.0 {
                lo = t;
            } else {
                hi = t;
            }
            let newton = t - f / self.slope(t);
            let next = if newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
            if (next - t).abs() <= 2.0 * EPS * next.abs() || hi - lo <= 2.0 * EPS * hi {
                return Ok(next);
            }
            t = next;
        }
        Err(Error::RootBracket(target))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Trig {
    Cos,
    Sin,
}

/// Gauss–Legendre nodes and weights on [−1, 1].
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
            }
            dp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / dp;
            z -= dz;
            if dz.abs() <= 1e-16 {
                break;
            }
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Binomial-weighted mean of `window.len()` consecutive partial sums, i.e.
/// `depth = window.len() − 1` rounds of pairwise averaging.
fn averaged(window: &[f64]) -> f64 {
    let depth = window.len() - 1;
    let mut coef = 1.0;
    let mut acc = 0.0;
    for (j, s) in window.iter().enumerate() {
        acc += coef * s;
        coef = coef * (depth - j) as f64 / (j + 1) as f64;
    }
    acc / 2f64.powi(depth as i32)
}

/// Iterated-averaging (Euler) limit of an alternating sequence of partial sums.
///
/// Returns the averaged value at the last position and the change from the
/// previous position, or `None` if the window is too short.
pub(crate) fn euler_average(partial_sums: &[f64], depth: usize) -> Option<(f64, f64)> {
    let n = partial_sums.len();
    if n < depth + 2 {
        return None;
    }
    let last = averaged(&partial_sums[n - depth - 1..]);
    let prev = averaged(&partial_sums[n - depth - 2..n - 1]);
    Some((last, (last - prev).abs()))
}

/// ∫₀^∞ weight(t)·trig(φ(t)) dt.
///
/// Acceleration starts once the panel magnitudes begin to decrease; panels
/// before that point are summed plainly.
pub(crate) fn oscillatory_integral<W: Fn(f64) -> f64>(
    phase: CubicPhase,
    trig: Trig,
    weight: W,
    spec: &QuadSpec,
) -> Result<Evaluation> {
    let (nodes, weights) = gauss_legendre(spec.panel_rule);
    let depth = spec.accel_depth;
    let min_window = 2 * depth + 4;

    // Panel k spans phase [start_k, start_k + width_k]. For sine every panel
    // starts at mπ. For cosine the first panel is [0, π/2], later ones start
    // at π/2 + mπ.
    let mut a = 0.0;
    let mut partial = Vec::with_capacity(256);
    let mut sum = 0.0;
    let mut sum_abs = 0.0;
    let mut prev_mag = f64::INFINITY;
    let mut window_start: Option<usize> = None;

    for k in 0..spec.max_half_periods {
        let (target, base_cos, sign) = match trig {
            Trig::Cos if k == 0 => (FRAC_PI_2, true, 1.0),
            Trig::Cos => (FRAC_PI_2 + k as f64 * PI, false, if k % 2 == 1 { -1.0 } else { 1.0 }),
            Trig::Sin => ((k + 1) as f64 * PI, false, if k % 2 == 1 { -1.0 } else { 1.0 }),
        };
        let b = phase.solve(target, a)?;
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut panel = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            let t = mid + half * x;
            let delta = phase.increment(a, t);
            let trig_val = if base_cos { delta.cos() } else { delta.sin() };
            panel += w * weight(t) * trig_val;
        }
        panel *= sign * half;

        sum += panel;
        sum_abs += panel.abs();
        partial.push(sum);

        let mag = panel.abs();
        match window_start {
            None if mag < prev_mag && k > 0 => window_start = Some(k),
            Some(_) if mag > prev_mag => window_start = None,
            _ => {}
        }
        prev_mag = mag;
        a = b;

        if let Some(start) = window_start {
            let window = &partial[start..];
            if window.len() >= min_window {
                if let Some((value, change)) = euler_average(window, depth) {
                    let rounding = 4.0 * EPS * sum_abs;
                    let estimate = change + rounding;
                    if estimate <= spec.atol + spec.rtol * value.abs() {
                        return Ok(Evaluation::new(value, estimate, Work::panels(k + 1)));
                    }
                }
            }
        }
    }

    let estimate = window_start
        .and_then(|s| euler_average(&partial[s..], depth))
        .map(|(_, change)| change)
        .unwrap_or(f64::INFINITY);
    let value_scale = partial.last().copied().unwrap_or(0.0).abs();
    Err(Error::ToleranceNotMet {
        estimate,
        target: spec.atol + spec.rtol * value_scale,
        panels: spec.max_half_periods,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(15);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        // ∫ x^28 over [-1,1] = 2/29, degree 2n-2
        let m: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(28)).sum();
        assert!((m - 2.0 / 29.0).abs() < 1e-14);
        let odd: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(7)).sum();
        assert!(odd.abs() < 1e-15);
    }

    #[test]
    fn phase_roots_are_accurate() {
        let phase = CubicPhase { cubic: 1.0, linear: 3.0 };
        let mut lo = 0.0;
        for k in 0..50 {
            let target = FRAC_PI_2 + k as f64 * PI;
            let t = phase.solve(target, lo).unwrap();
            assert!((phase.value(t) - target).abs() <= 16.0 * EPS * target);
            assert!(t > lo);
            lo = t;
        }
    }

    #[test]
    fn bad_bracket_is_reported() {
        let phase = CubicPhase { cubic: 1.0, linear: 0.0 };
        assert!(matches!(phase.solve(1.0, 5.0), Err(Error::RootBracket(_))));
    }

    #[test]
    fn averaging_accelerates_alternating_series() {
        // 1 − 1/2 + 1/3 − … = ln 2
        let mut s = 0.0;
        let partial: Vec<f64> = (1..=40)
            .map(|k| {
                s += if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
                s
            })
            .collect();
        let (value, change) = euler_average(&partial, 8).unwrap();
        assert!((value - std::f64::consts::LN_2).abs() < 1e-9);
        assert!(change < 1e-8);
        assert!(euler_average(&partial[..5], 8).is_none());
    }
}
