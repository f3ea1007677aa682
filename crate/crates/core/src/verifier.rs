//! Both sides of every identity, compared on grids under a mixed tolerance.
//!
//! Left sides come from the oscillatory quadrature, right sides from the
//! Bessel routines, except where an identity is internal to the Bessel
//! family (recurrences, I-pair vs K form). A failed evaluation is recorded
//! as a failed report rather than aborting the suite.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::airy_quad::{airy_cos_integral, xi_form_cos, xi_form_xsin, QuadSpec};
use crate::error::{Error, Result};
use crate::ode_transforms::{airy_from_i_pair, airy_from_k, IPairOrdering};
use crate::special::{bessel_k, Order};

/// Floor for the denominator of `rel_err`.
pub const REL_ERR_FLOOR: f64 = 1e-300;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Pass rule `|lhs − rhs| ≤ atol + rtol·|rhs|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub atol: f64,
    pub rtol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { atol: 1e-10, rtol: 1e-6 }
    }
}

impl Tolerance {
    pub fn new(atol: f64, rtol: f64) -> Result<Self> {
        if !(atol >= 0.0 && rtol >= 0.0 && atol.is_finite() && rtol.is_finite()) {
            return Err(Error::InvalidArgument(format!("tolerances must be finite and nonnegative, got atol {atol}, rtol {rtol}")));
        }
        Ok(Tolerance { atol, rtol })
    }

    /// `rtol` with the absolute floor kept at the default ratio atol = 1e-4·rtol.
    pub fn from_rtol(rtol: f64) -> Result<Self> {
        Tolerance::new(1e-4 * rtol, rtol)
    }

    pub fn accepts(&self, lhs: f64, rhs: f64) -> bool {
        (lhs - rhs).abs() <= self.atol + self.rtol * rhs.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Logarithmic,
}

/// `count` points from `start` to `stop`, both included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(start: f64, stop: f64, count: usize, spacing: Spacing) -> Result<Self> {
        let g = GridSpec { start, stop, count, spacing };
        g.validate()?;
        Ok(g)
    }

    pub fn linear(start: f64, stop: f64, count: usize) -> Result<Self> {
        GridSpec::new(start, stop, count, Spacing::Linear)
    }

    pub fn logarithmic(start: f64, stop: f64, count: usize) -> Result<Self> {
        GridSpec::new(start, stop, count, Spacing::Logarithmic)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if self.count < 2 {
            return bad(format!("a grid needs at least 2 points, got {}", self.count));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) || !(self.start < self.stop) {
            return bad(format!("grid needs finite start < stop, got [{}, {}]", self.start, self.stop));
        }
        if self.spacing == Spacing::Logarithmic && !(self.start > 0.0) {
            return bad(format!("logarithmic grid needs start > 0, got {}", self.start));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.count;
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.start;
                }
                if i == n - 1 {
                    return self.stop;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.start + t * (self.stop - self.start),
                    Spacing::Logarithmic => (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp(),
                }
            })
            .collect()
    }

    fn check_window(&self, lo: f64, hi: f64, what: &str) -> Result<()> {
        self.validate()?;
        if self.start < lo || self.stop > hi {
            return Err(Error::InvalidArgument(format!(
                "{what} grid [{}, {}] leaves the supported window [{lo}, {hi}]",
                self.start, self.stop
            )));
        }
        Ok(())
    }
}

/// The identities the suite knows about. Declaration order is report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    /// ∫₀^∞ cos[(3/2)ξ(x + x³/3)] dx = K_{1/3}(ξ)/√3
    K13Kernel,
    /// ∫₀^∞ x sin[(3/2)ξ(x + x³/3)] dx = K_{2/3}(ξ)/√3
    K23Kernel,
    /// f(ρ) = √(ρ/3)(π/3)[I_{−1/3}(z) − I_{1/3}(z)]
    AiryIPair,
    /// The same with the I pair reversed; expected to fail by sign.
    AiryIPairReversed,
    /// f(ρ) = (√ρ/3)K_{1/3}(z)
    AiryKForm,
    /// I-pair form against K form, at rounding level.
    IPairKForm,
    /// d/dξ of the cosine kernel = −K_{1/3}(ξ)/(3√3ξ) − the x·sin kernel
    KernelDerivative,
    /// K_{ν−1} − K_{ν+1} = −(2ν/ξ)K_ν
    #[serde(rename = "k-recurrence-difference")]
    RecurrenceDifference,
    /// K_{ν−1} + K_{ν+1} = −2K'_ν
    #[serde(rename = "k-recurrence-derivative")]
    RecurrenceDerivative,
}

impl IdentityId {
    /// Identities run by the default suite.
    pub const SUITE: [IdentityId; 8] = [
        IdentityId::K13Kernel,
        IdentityId::K23Kernel,
        IdentityId::AiryIPair,
        IdentityId::AiryKForm,
        IdentityId::IPairKForm,
        IdentityId::KernelDerivative,
        IdentityId::RecurrenceDifference,
        IdentityId::RecurrenceDerivative,
    ];

    pub const ALL: [IdentityId; 9] = [
        IdentityId::K13Kernel,
        IdentityId::K23Kernel,
        IdentityId::AiryIPair,
        IdentityId::AiryIPairReversed,
        IdentityId::AiryKForm,
        IdentityId::IPairKForm,
        IdentityId::KernelDerivative,
        IdentityId::RecurrenceDifference,
        IdentityId::RecurrenceDerivative,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::K13Kernel => "k13-kernel",
            IdentityId::K23Kernel => "k23-kernel",
            IdentityId::AiryIPair => "airy-i-pair",
            IdentityId::AiryIPairReversed => "airy-i-pair-reversed",
            IdentityId::AiryKForm => "airy-k-form",
            IdentityId::IPairKForm => "i-pair-k-form",
            IdentityId::KernelDerivative => "kernel-derivative",
            IdentityId::RecurrenceDifference => "k-recurrence-difference",
            IdentityId::RecurrenceDerivative => "k-recurrence-derivative",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown identity '{s}'")))
    }
}

// NaN marks a side that could not be evaluated; JSON has no NaN, so it travels as null.
mod nan_as_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_nan() {
            s.serialize_none()
        } else {
            s.serialize_some(v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

/// One comparison of the two sides of an identity at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    /// Bessel order, for the identities that are parameterized by one.
    pub order: Option<f64>,
    /// ξ or ρ.
    pub point: f64,
    #[serde(with = "nan_as_null")]
    pub lhs: f64,
    #[serde(with = "nan_as_null")]
    pub rhs: f64,
    #[serde(with = "nan_as_null")]
    pub abs_err: f64,
    #[serde(with = "nan_as_null")]
    pub rel_err: f64,
    pub pass: bool,
    pub atol: f64,
    pub rtol: f64,
    /// Why a side could not be evaluated.
    pub note: Option<String>,
}

impl IdentityReport {
    pub fn compare(identity_id: IdentityId, order: Option<f64>, point: f64, lhs: f64, rhs: f64, tol: Tolerance) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = abs_err / rhs.abs().max(REL_ERR_FLOOR);
        IdentityReport {
            identity_id,
            order,
            point,
            lhs,
            rhs,
            abs_err,
            rel_err,
            pass: abs_err <= tol.atol + tol.rtol * rhs.abs(),
            atol: tol.atol,
            rtol: tol.rtol,
            note: None,
        }
    }

    fn failed(identity_id: IdentityId, order: Option<f64>, point: f64, tol: Tolerance, err: &Error) -> Self {
        IdentityReport {
            identity_id,
            order,
            point,
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_err: f64::NAN,
            rel_err: f64::NAN,
            pass: false,
            atol: tol.atol,
            rtol: tol.rtol,
            note: Some(err.to_string()),
        }
    }

    fn from_result(
        identity_id: IdentityId,
        order: Option<f64>,
        point: f64,
        tol: Tolerance,
        sides: Result<(f64, f64)>,
    ) -> Self {
        match sides {
            Ok((lhs, rhs)) => IdentityReport::compare(identity_id, order, point, lhs, rhs, tol),
            Err(e) => IdentityReport::failed(identity_id, order, point, tol, &e),
        }
    }

    fn sort_key(&self, other: &Self) -> Ordering {
        self.identity_id
            .cmp(&other.identity_id)
            .then_with(|| self.order.unwrap_or(0.0).total_cmp(&other.order.unwrap_or(0.0)))
            .then_with(|| self.point.total_cmp(&other.point))
    }
}

/// Per-identity tolerances derived from the suite-wide one.
impl Tolerance {
    /// Finite-difference derivative of a quadrature: rtol relaxed a hundredfold.
    pub fn for_kernel_derivative(self) -> Self {
        Tolerance { atol: self.atol, rtol: 100.0 * self.rtol }
    }

    /// Closed arithmetic between Bessel values: relative only, a thousandth of rtol.
    pub fn for_recurrence_difference(self) -> Self {
        Tolerance { atol: 0.0, rtol: 1e-3 * self.rtol }
    }

    /// Finite-difference derivative of K: relative only.
    pub fn for_recurrence_derivative(self) -> Self {
        Tolerance { atol: 0.0, rtol: self.rtol }
    }

    /// Two algebraically equal forms: rounding level, with an absolute floor
    /// proportional to the magnitude of the I pair whose difference is taken.
    pub fn for_i_pair_k_form(self, pair_magnitude: f64) -> Self {
        Tolerance { atol: 1e-7 * self.rtol * pair_magnitude, rtol: 1e-7 * self.rtol }
    }
}

fn k(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_k(Order::new(nu)?, x)?.value)
}

/// Cosine kernel quadrature against K_{1/3}(ξ)/√3.
pub fn verify_k13_kernel(grid: &GridSpec, spec: &QuadSpec, tol: Tolerance) -> Result<Vec<IdentityReport>> {
    grid.check_window(0.1, 10.0, "kernel")?;
    Ok(grid
        .points()
        .into_iter()
        .map(|xi| {
            let sides = (|| Ok((xi_form_cos(xi, spec)?.value, k(1.0 / 3.0, xi)? / SQRT_3)))();
            IdentityReport::from_result(IdentityId::K13Kernel, None, xi, tol, sides)
        })
        .collect())
}

/// x·sine kernel quadrature against K_{2/3}(ξ)/√3.
pub fn verify_k23_kernel(grid: &GridSpec, spec: &QuadSpec, tol: Tolerance) -> Result<Vec<IdentityReport>> {
    grid.check_window(0.1, 10.0, "kernel")?;
    Ok(grid
        .points()
        .into_iter()
        .map(|xi| {
            let sides = (|| Ok((xi_form_xsin(xi, spec)?.value, k(2.0 / 3.0, xi)? / SQRT_3)))();
            IdentityReport::from_result(IdentityId::K23Kernel, None, xi, tol, sides)
        })
        .collect())
}

/// f(ρ) by quadrature against the I-pair form, the K form, and the two forms
/// against each other.
pub fn verify_airy_forms(grid: &GridSpec, spec: &QuadSpec, tol: Tolerance) -> Result<Vec<IdentityReport>> {
    grid.check_window(0.2, 8.0, "rho")?;
    let mut out = Vec::with_capacity(3 * grid.count);
    for rho in grid.points() {
        let quad = airy_cos_integral(rho, spec).map(|e| e.value);
        let pair = airy_from_i_pair(rho, IPairOrdering::MinusFirst);
        let kform = airy_from_k(rho).map(|e| e.value);

        let sides = match (&quad, &pair) {
            (Ok(q), Ok((g, _))) => Ok((*q, g.value)),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        };
        out.push(IdentityReport::from_result(IdentityId::AiryIPair, None, rho, tol, sides));

        let sides = match (&quad, &kform) {
            (Ok(q), Ok(kf)) => Ok((*q, *kf)),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        };
        out.push(IdentityReport::from_result(IdentityId::AiryKForm, None, rho, tol, sides));

        let report = match (&pair, &kform) {
            (Ok((g, mag)), Ok(kf)) => {
                IdentityReport::compare(IdentityId::IPairKForm, None, rho, g.value, *kf, tol.for_i_pair_k_form(*mag))
            }
            (Err(e), _) | (_, Err(e)) => IdentityReport::failed(IdentityId::IPairKForm, None, rho, tol, e),
        };
        out.push(report);
    }
    Ok(out)
}

/// The I-pair form in both orderings against quadrature at one ρ:
/// `(I_{−1/3} − I_{1/3}, I_{1/3} − I_{−1/3})`.
pub fn verify_i_pair_ordering(rho: f64, spec: &QuadSpec, tol: Tolerance) -> Result<(IdentityReport, IdentityReport)> {
    let quad = airy_cos_integral(rho, spec)?.value;
    let (minus_first, _) = airy_from_i_pair(rho, IPairOrdering::MinusFirst)?;
    let (plus_first, _) = airy_from_i_pair(rho, IPairOrdering::PlusFirst)?;
    Ok((
        IdentityReport::compare(IdentityId::AiryIPair, None, rho, quad, minus_first.value, tol),
        IdentityReport::compare(IdentityId::AiryIPairReversed, None, rho, quad, plus_first.value, tol),
    ))
}

/// Central difference of the cosine kernel at step 1e-4·ξ against
/// −K_{1/3}(ξ)/(3√3ξ) − (x·sine kernel).
pub fn verify_kernel_derivative(xi: f64, spec: &QuadSpec, tol: Tolerance) -> IdentityReport {
    let tol = tol.for_kernel_derivative();
    if !(0.3..=8.0).contains(&xi) {
        let e = Error::InvalidArgument(format!("derivative check needs 0.3 <= xi <= 8, got {xi}"));
        return IdentityReport::failed(IdentityId::KernelDerivative, None, xi, tol, &e);
    }
    let sides = (|| {
        let h = 1e-4 * xi;
        let lhs = (xi_form_cos(xi + h, spec)?.value - xi_form_cos(xi - h, spec)?.value) / (2.0 * h);
        let rhs = -k(1.0 / 3.0, xi)? / (3.0 * SQRT_3 * xi) - xi_form_xsin(xi, spec)?.value;
        Ok((lhs, rhs))
    })();
    IdentityReport::from_result(IdentityId::KernelDerivative, None, xi, tol, sides)
}

/// Both K recurrences for one order over a ξ grid; the derivative by a
/// five-point centered difference at step 1e-3·ξ.
pub fn verify_recurrences(nu: Order, grid: &GridSpec, tol: Tolerance) -> Result<Vec<IdentityReport>> {
    grid.check_window(0.2, 8.0, "recurrence")?;
    if nu.is_integer() {
        return Err(Error::IntegerOrder(nu.nu()));
    }
    nu.shifted(1.0)?;
    nu.shifted(-1.0)?;
    let n = nu.nu();
    let mut out = Vec::with_capacity(2 * grid.count);
    for xi in grid.points() {
        let diff = (|| Ok((k(n - 1.0, xi)? - k(n + 1.0, xi)?, -2.0 * n / xi * k(n, xi)?)))();
        out.push(IdentityReport::from_result(
            IdentityId::RecurrenceDifference,
            Some(n),
            xi,
            tol.for_recurrence_difference(),
            diff,
        ));

        let deriv = (|| {
            let h = 1e-3 * xi;
            let kk = |x: f64| k(n, x);
            let d = (kk(xi - 2.0 * h)? - 8.0 * kk(xi - h)? + 8.0 * kk(xi + h)? - kk(xi + 2.0 * h)?) / (12.0 * h);
            Ok((k(n - 1.0, xi)? + k(n + 1.0, xi)?, -2.0 * d))
        })();
        out.push(IdentityReport::from_result(
            IdentityId::RecurrenceDerivative,
            Some(n),
            xi,
            tol.for_recurrence_derivative(),
            deriv,
        ));
    }
    Ok(out)
}

/// Grids, tolerances and identity selection for [`run_suite`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub tolerance: Tolerance,
    pub quad: QuadSpec,
    pub xi_grid: GridSpec,
    pub rho_grid: GridSpec,
    pub recurrence_grid: GridSpec,
    pub recurrence_orders: Vec<f64>,
    pub derivative_points: Vec<f64>,
    /// Restrict the run to these identities; empty means all of [`IdentityId::SUITE`].
    pub only: Vec<IdentityId>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            tolerance: Tolerance::default(),
            quad: QuadSpec::default(),
            xi_grid: GridSpec { start: 0.1, stop: 10.0, count: 12, spacing: Spacing::Logarithmic },
            rho_grid: GridSpec { start: 0.2, stop: 8.0, count: 10, spacing: Spacing::Logarithmic },
            recurrence_grid: GridSpec { start: 0.2, stop: 8.0, count: 10, spacing: Spacing::Logarithmic },
            recurrence_orders: vec![1.0 / 3.0, 2.0 / 3.0],
            derivative_points: vec![0.5, 1.0, 2.0, 4.0],
            only: Vec::new(),
        }
    }
}

impl SuiteConfig {
    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn with_only(mut self, ids: &[IdentityId]) -> Self {
        self.only = ids.to_vec();
        self
    }

    pub fn validate(&self) -> Result<()> {
        Tolerance::new(self.tolerance.atol, self.tolerance.rtol)?;
        self.quad.validate()?;
        self.xi_grid.validate()?;
        self.rho_grid.validate()?;
        self.recurrence_grid.validate()?;
        for &nu in &self.recurrence_orders {
            Order::new(nu)?;
        }
        Ok(())
    }

    fn selected(&self, id: IdentityId) -> bool {
        self.only.is_empty() || self.only.contains(&id)
    }
}

/// Count and worst errors for one identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub identity_id: IdentityId,
    pub total: usize,
    pub failed: usize,
    #[serde(with = "nan_as_null")]
    pub worst_abs_err: f64,
    #[serde(with = "nan_as_null")]
    pub worst_rel_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteVerdict {
    pub pass: bool,
    pub total: usize,
    pub failed: usize,
    pub summaries: Vec<IdentitySummary>,
    /// Sorted by (identity, order, point).
    pub reports: Vec<IdentityReport>,
}

impl SuiteVerdict {
    pub fn from_reports(mut reports: Vec<IdentityReport>) -> Self {
        reports.sort_by(|a, b| a.sort_key(b));
        let mut summaries: Vec<IdentitySummary> = Vec::new();
        for r in &reports {
            if summaries.last().map(|s| s.identity_id) != Some(r.identity_id) {
                summaries.push(IdentitySummary {
                    identity_id: r.identity_id,
                    total: 0,
                    failed: 0,
                    worst_abs_err: 0.0,
                    worst_rel_err: 0.0,
                });
            }
            let s = summaries.last_mut().unwrap();
            s.total += 1;
            if !r.pass {
                s.failed += 1;
            }
            // NaN (an unevaluated side) is the worst possible outcome
            s.worst_abs_err = if r.abs_err.is_nan() || s.worst_abs_err.is_nan() { f64::NAN } else { s.worst_abs_err.max(r.abs_err) };
            s.worst_rel_err = if r.rel_err.is_nan() || s.worst_rel_err.is_nan() { f64::NAN } else { s.worst_rel_err.max(r.rel_err) };
        }
        let failed = reports.iter().filter(|r| !r.pass).count();
        SuiteVerdict { pass: failed == 0, total: reports.len(), failed, summaries, reports }
    }
}

/// Runs every selected identity over the configured grids.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteVerdict> {
    config.validate()?;
    let tol = config.tolerance;
    let spec = &config.quad;
    let mut reports = Vec::new();
    if config.selected(IdentityId::K13Kernel) {
        reports.extend(verify_k13_kernel(&config.xi_grid, spec, tol)?);
    }
    if config.selected(IdentityId::K23Kernel) {
        reports.extend(verify_k23_kernel(&config.xi_grid, spec, tol)?);
    }
    let forms = [IdentityId::AiryIPair, IdentityId::AiryKForm, IdentityId::IPairKForm];
    if forms.iter().any(|&id| config.selected(id)) {
        reports.extend(verify_airy_forms(&config.rho_grid, spec, tol)?.into_iter().filter(|r| config.selected(r.identity_id)));
    }
    if config.selected(IdentityId::AiryIPairReversed) && !config.only.is_empty() {
        for rho in config.rho_grid.points() {
            reports.push(verify_i_pair_ordering(rho, spec, tol)?.1);
        }
    }
    if config.selected(IdentityId::KernelDerivative) {
        reports.extend(config.derivative_points.iter().map(|&xi| verify_kernel_derivative(xi, spec, tol)));
    }
    let recurrences = [IdentityId::RecurrenceDifference, IdentityId::RecurrenceDerivative];
    if recurrences.iter().any(|&id| config.selected(id)) {
        for &nu in &config.recurrence_orders {
            reports.extend(
                verify_recurrences(Order::new(nu)?, &config.recurrence_grid, tol)?
                    .into_iter()
                    .filter(|r| config.selected(r.identity_id)),
            );
        }
    }
    Ok(SuiteVerdict::from_reports(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_points() {
        let g = GridSpec::linear(0.0, 4.0, 9).unwrap();
        assert_eq!(g.points(), vec![0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0]);
        let g = GridSpec::logarithmic(0.1, 10.0, 3).unwrap();
        let p = g.points();
        assert_eq!(p[0], 0.1);
        assert!((p[1] - 1.0).abs() < 1e-15);
        assert_eq!(p[2], 10.0);
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::linear(0.0, 1.0, 1).is_err());
        assert!(GridSpec::linear(1.0, 1.0, 3).is_err());
        assert!(GridSpec::logarithmic(0.0, 1.0, 3).is_err());
        assert!(GridSpec::linear(0.0, f64::INFINITY, 3).is_err());
    }

    #[test]
    fn report_arithmetic() {
        let tol = Tolerance::default();
        let r = IdentityReport::compare(IdentityId::K13Kernel, None, 1.0, 1.0 + 1e-7, 1.0, tol);
        assert!(r.pass);
        assert!((r.abs_err - 1e-7).abs() < 1e-15);
        let r = IdentityReport::compare(IdentityId::K13Kernel, None, 1.0, 1e-20, 0.0, tol);
        assert_eq!(r.rel_err, 1e-20 / REL_ERR_FLOOR);
        assert!(r.pass);
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{}\"", id.as_str()));
        }
        assert!("nope".parse::<IdentityId>().is_err());
    }

    #[test]
    fn window_is_enforced() {
        let g = GridSpec::logarithmic(0.05, 10.0, 4).unwrap();
        assert!(verify_k13_kernel(&g, &QuadSpec::default(), Tolerance::default()).is_err());
        assert!(!verify_kernel_derivative(10.0, &QuadSpec::default(), Tolerance::default()).pass);
    }
}
