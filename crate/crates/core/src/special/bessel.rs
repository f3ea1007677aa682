use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::eval::{Evaluation, Work};

use super::gamma::{gamma, sin_pi};
use super::Order;

const EPS: f64 = f64::EPSILON;

/// Upper edge of the K-from-I bridge branch of [`bessel_k`].
pub const K_SERIES_SWITCH: f64 = 2.0;
/// Lower edge of the asymptotic branch of [`bessel_k`].
pub const K_ASYMPTOTIC_SWITCH: f64 = 25.0;
/// The J series loses roughly x/ln10 digits to cancellation; past this it is refused.
pub const J_SERIES_MAX_ARG: f64 = 30.0;
/// Beyond this J also tries Hankel's expansion and keeps the better estimate.
pub const J_HANKEL_SWITCH: f64 = 8.0;

const CF_MAX_ITER: usize = 20_000;

// pow and Γ in the leading term; every later term inherits it through the ratios.
const LEAD_TERM_REL_ERROR: f64 = 8e-15;

/// Truncation control for the ascending series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub max_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions { max_terms: 200 }
    }
}

/// Which algorithm [`bessel_k`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KBranch {
    Bridge,
    ContinuedFraction,
    Asymptotic,
}

/// Σ_k sign^k (x/2)^{ν+2k} / (k! Γ(ν+k+1)).
///
/// `sign = -1` gives J_ν, `sign = +1` gives I_ν. Terms whose Γ lies on a pole
/// are zero, so negative integer orders start at k = −ν.
fn ascending_series(nu: f64, x: f64, sign: f64, opts: SeriesOptions, what: &'static str) -> Result<Evaluation> {
    if x < 0.0 || x.is_nan() {
        return Err(domain(format!("{what} requires x >= 0, got {x}")));
    }
    let negative_integer = nu < 0.0 && nu.fract() == 0.0;
    if x == 0.0 {
        return if nu == 0.0 {
            Ok(Evaluation::exact(1.0))
        } else if nu > 0.0 || negative_integer {
            Ok(Evaluation::exact(0.0))
        } else {
            Err(domain(format!("{what} of negative order {nu} is singular at x = 0")))
        };
    }

    let k0 = if negative_integer { (-nu) as usize } else { 0 };
    let half = 0.5 * x;
    let quarter_sq = half * half;

    // leading nonzero term
    let lead_gamma = gamma(nu + k0 as f64 + 1.0)?.value;
    let lead_fact = gamma(k0 as f64 + 1.0)?.value;
    let mut term = half.powf(nu + 2.0 * k0 as f64) / (lead_fact * lead_gamma);
    if k0 % 2 == 1 {
        term *= sign;
    }
    if !term.is_finite() {
        return Err(Error::Overflow { arg: x, max: J_SERIES_MAX_ARG });
    }

    let mut sum = 0.0;
    let mut sum_abs = 0.0;
    let mut peak = 0.0_f64;
    let mut k = k0;
    let mut used = 0usize;
    loop {
        sum += term;
        sum_abs += term.abs();
        peak = peak.max(term.abs());
        used += 1;

        let denom = (k as f64 + 1.0) * (nu + k as f64 + 1.0);
        let ratio = sign * quarter_sq / denom;
        let next = term * ratio;
        let r = ratio.abs();

        // Past the peak the ratios keep shrinking, so the tail is bounded by a
        // geometric series (I) or by the first omitted term (J, alternating).
        if r < 1.0 && nu + k as f64 + 1.0 > 0.0 {
            let tail = if sign > 0.0 { next.abs() / (1.0 - r) } else { next.abs() };
            if tail <= 0.5 * EPS * sum.abs().max(EPS * peak) || next == 0.0 {
                let rounding = (LEAD_TERM_REL_ERROR + (4.0 + used as f64) * EPS) * sum_abs;
                return Ok(Evaluation::new(sum, tail + rounding, Work::terms(used)));
            }
        }
        if used >= opts.max_terms {
            return Err(Error::NoConvergence { what, iterations: used });
        }
        term = next;
        k += 1;
    }
}

/// Hankel's expansion J_ν(x) = √(2/πx)(P cos χ − Q sin χ), χ = x − νπ/2 − π/4,
/// truncated before the terms start to grow.
///
/// Also returns the first omitted term, relative to the amplitude √(2/πx).
fn j_hankel(nu: f64, x: f64) -> (Evaluation, f64) {
    let mu4 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut k = 1usize;
    let omitted = loop {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu4 - odd * odd) / (8.0 * k as f64 * x);
        if next == 0.0 {
            break 0.0;
        }
        if next.abs() >= term.abs() || k > 120 {
            break next.abs();
        }
        // signs: + t0, + t1, − t2, − t3, + t4, …
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * next;
        } else {
            q += sign * next;
        }
        term = next;
        k += 1;
        if term.abs() < 0.25 * EPS * p.abs().max(q.abs()) {
            break 0.0;
        }
    };
    let chi = x - (0.5 * nu + 0.25) * PI;
    let amp = (2.0 / (PI * x)).sqrt();
    let value = amp * (p * chi.cos() - q * chi.sin());
    // cos χ and sin χ carry an absolute error of about ε·x from the reduction
    let err = amp * (omitted + (4.0 + x) * EPS * (p.abs() + q.abs()));
    (Evaluation::new(value, err, Work::terms(k)), omitted)
}

/// J_ν(x): ascending series up to x = 8. Beyond that Hankel's expansion is
/// used when its smallest term is negligible, otherwise whichever of the two
/// carries the smaller error estimate (the series only up to x = 30).
pub fn bessel_j(order: Order, x: f64, opts: SeriesOptions) -> Result<Evaluation> {
    if x > J_HANKEL_SWITCH {
        let (h, omitted) = j_hankel(order.nu(), x);
        if omitted <= 1e-15 {
            return Ok(h);
        }
        if x > J_SERIES_MAX_ARG {
            return Err(domain(format!(
                "bessel_J of order {order} at x = {x}: series limited to x <= {J_SERIES_MAX_ARG} and the large-x expansion has not converged"
            )));
        }
        let s = ascending_series(order.nu(), x, -1.0, opts, "bessel_J series")?;
        return Ok(if h.abs_error < s.abs_error { h } else { s });
    }
    ascending_series(order.nu(), x, -1.0, opts, "bessel_J series")
}

/// I_ν(x) by its ascending series. All terms past the peak are one-signed.
pub fn bessel_i(order: Order, x: f64, opts: SeriesOptions) -> Result<Evaluation> {
    ascending_series(order.nu(), x, 1.0, opts, "bessel_I series")
}

/// K_ν(x) = π/(2 sin πν) · [I_{−ν}(x) − I_ν(x)].
///
/// Exact in exact arithmetic for every non-integer ν; in floating point the
/// subtraction cancels about 2x/ln10 digits, which the error estimate carries.
pub fn k_from_i_bridge(order: Order, x: f64) -> Result<Evaluation> {
    check_k_args(order, x)?;
    let nu = order.nu().abs();
    let opts = SeriesOptions::default();
    let i_minus = bessel_i(Order(-nu), x, opts)?;
    let i_plus = bessel_i(Order(nu), x, opts)?;
    let factor = PI / (2.0 * sin_pi(nu));
    let value = factor * (i_minus.value - i_plus.value);
    let err = factor.abs() * (i_minus.abs_error + i_plus.abs_error + EPS * (i_minus.value.abs() + i_plus.value.abs()))
        + 2.0 * EPS * value.abs();
    Ok(Evaluation::new(value, err, i_minus.work.combine(i_plus.work)))
}

fn check_k_args(order: Order, x: f64) -> Result<()> {
    if order.is_integer() {
        return Err(Error::IntegerOrder(order.nu()));
    }
    if !(x > 0.0) {
        return Err(domain(format!("bessel_K requires x > 0, got {x}")));
    }
    Ok(())
}

/// Steed's continued fraction for K_μ, K_{μ+1} with |μ| ≤ 1/2, then upward
/// recurrence K_{μ+k+1} = K_{μ+k−1} + (2(μ+k)/x) K_{μ+k}, which is stable for K.
fn k_continued_fraction(nu: f64, x: f64) -> Result<Evaluation> {
    let steps = (nu + 0.5).floor();
    let mu = nu - steps;
    let mu2 = mu * mu;
    let inv_x = 1.0 / x;

    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    let mut iterations = 1usize;
    let mut converged = false;
    for i in 2..=CF_MAX_ITER {
        iterations = i;
        a -= 2.0 * (i - 1) as f64;
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { what: "bessel_K continued fraction", iterations });
    }
    h *= a1;
    let mut k_mu = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let mut k_mu1 = k_mu * (mu + x + 0.5 - h) * inv_x;
    let two_over_x = 2.0 * inv_x;
    let n = steps as usize;
    for i in 1..=n {
        let next = (mu + i as f64) * two_over_x * k_mu1 + k_mu;
        k_mu = k_mu1;
        k_mu1 = next;
    }
    let err = (16.0 + 2.0 * n as f64) * EPS * k_mu.abs();
    Ok(Evaluation::new(k_mu, err, Work::terms(iterations + n)))
}

/// e^{−x}√(π/2x) Σ_k a_k(ν)/x^k, truncated at the smallest term.
fn k_asymptotic(nu: f64, x: f64) -> Evaluation {
    let mu4 = 4.0 * nu * nu;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut k = 1usize;
    let omitted = loop {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu4 - odd * odd) / (8.0 * k as f64 * x);
        if next == 0.0 {
            break 0.0;
        }
        if next.abs() >= term.abs() || k > 200 {
            break next.abs();
        }
        sum += next;
        term = next;
        k += 1;
        if term.abs() < 0.25 * EPS * sum.abs() {
            let odd = (2 * k - 1) as f64;
            break (term * (mu4 - odd * odd) / (8.0 * k as f64 * x)).abs();
        }
    };
    let prefactor = (PI / (2.0 * x)).sqrt() * (-x).exp();
    let value = prefactor * sum;
    Evaluation::new(value, prefactor * omitted + 4.0 * EPS * value.abs(), Work::terms(k))
}

/// The branch [`bessel_k`] takes at `x`.
pub fn k_branch(x: f64) -> KBranch {
    if x <= K_SERIES_SWITCH {
        KBranch::Bridge
    } else if x < K_ASYMPTOTIC_SWITCH {
        KBranch::ContinuedFraction
    } else {
        KBranch::Asymptotic
    }
}

/// K_ν(x) for non-integer ν and x > 0.
///
/// Branches: K-from-I bridge for x ≤ 2, Steed's continued fraction for
/// 2 < x < 25, the large-x asymptotic expansion beyond (falling back to the
/// continued fraction if the smallest asymptotic term is not negligible).
/// The order enters only through |ν|, so K_ν and K_{−ν} are bit-identical.
pub fn bessel_k(order: Order, x: f64) -> Result<Evaluation> {
    check_k_args(order, x)?;
    let nu = order.nu().abs();
    match k_branch(x) {
        KBranch::Bridge => k_from_i_bridge(Order(nu), x),
        KBranch::ContinuedFraction => k_continued_fraction(nu, x),
        KBranch::Asymptotic => {
            let asym = k_asymptotic(nu, x);
            if asym.abs_error <= 1e-14 * asym.value.abs() {
                Ok(asym)
            } else {
                k_continued_fraction(nu, x)
            }
        }
    }
}
