//! C ABI for `airy-bessel`.
//!
//! Every function returns an [`AbStatus`] (or a null handle) and never
//! unwinds across the boundary. On failure a message is kept per thread and
//! can be read with [`ab_last_error_message`]. Handles are opaque: create
//! with `*_new`/`*_run`, release with the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use airy_bessel::airy_quad::{airy_cos_integral, airy_series, airy_sin_integral, xi_form_cos, xi_form_xsin};
use airy_bessel::ode_transforms::{bowman_residual, bowman_solution};
use airy_bessel::special::{bessel_i, bessel_j, bessel_k, bessel_k_oracle, gamma, SeriesOptions};
use airy_bessel::verifier::run_suite;
use airy_bessel::{
    BowmanParams, Branch, Error, Evaluation, IdentityId, IdentityReport, Order, QuadSpec, SuiteConfig, SuiteVerdict,
    Tolerance,
};

/// Result codes. `AB_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbStatus {
    Ok = 0,
    Domain = 1,
    Pole = 2,
    Overflow = 3,
    IntegerOrder = 4,
    NoConvergence = 5,
    ToleranceNotMet = 6,
    RootBracket = 7,
    StepTooLarge = 8,
    InvalidArgument = 9,
    NullPointer = 10,
    OutOfRange = 11,
    Panic = 12,
}

impl From<&Error> for AbStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain(_) => AbStatus::Domain,
            Error::Pole(_) => AbStatus::Pole,
            Error::Overflow { .. } => AbStatus::Overflow,
            Error::IntegerOrder(_) => AbStatus::IntegerOrder,
            Error::NoConvergence { .. } => AbStatus::NoConvergence,
            Error::ToleranceNotMet { .. } => AbStatus::ToleranceNotMet,
            Error::RootBracket(_) => AbStatus::RootBracket,
            Error::StepTooLarge(_) => AbStatus::StepTooLarge,
            Error::InvalidArgument(_) => AbStatus::InvalidArgument,
        }
    }
}

/// A value with its absolute error estimate and the work spent on it.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbEvaluation {
    pub value: f64,
    pub abs_error: f64,
    pub terms: u32,
    pub panels: u32,
}

impl From<Evaluation> for AbEvaluation {
    fn from(e: Evaluation) -> Self {
        AbEvaluation { value: e.value, abs_error: e.abs_error, terms: e.work.terms, panels: e.work.panels }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbBranch {
    Plus = 0,
    Minus = 1,
}

/// Identity checked by a report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbIdentity {
    K13Kernel = 0,
    K23Kernel = 1,
    AiryIPair = 2,
    AiryIPairReversed = 3,
    AiryKForm = 4,
    IPairKForm = 5,
    KernelDerivative = 6,
    RecurrenceDifference = 7,
    RecurrenceDerivative = 8,
}

impl From<IdentityId> for AbIdentity {
    fn from(id: IdentityId) -> Self {
        match id {
            IdentityId::K13Kernel => AbIdentity::K13Kernel,
            IdentityId::K23Kernel => AbIdentity::K23Kernel,
            IdentityId::AiryIPair => AbIdentity::AiryIPair,
            IdentityId::AiryIPairReversed => AbIdentity::AiryIPairReversed,
            IdentityId::AiryKForm => AbIdentity::AiryKForm,
            IdentityId::IPairKForm => AbIdentity::IPairKForm,
            IdentityId::KernelDerivative => AbIdentity::KernelDerivative,
            IdentityId::RecurrenceDifference => AbIdentity::RecurrenceDifference,
            IdentityId::RecurrenceDerivative => AbIdentity::RecurrenceDerivative,
        }
    }
}

impl From<AbIdentity> for IdentityId {
    fn from(id: AbIdentity) -> Self {
        match id {
            AbIdentity::K13Kernel => IdentityId::K13Kernel,
            AbIdentity::K23Kernel => IdentityId::K23Kernel,
            AbIdentity::AiryIPair => IdentityId::AiryIPair,
            AbIdentity::AiryIPairReversed => IdentityId::AiryIPairReversed,
            AbIdentity::AiryKForm => IdentityId::AiryKForm,
            AbIdentity::IPairKForm => IdentityId::IPairKForm,
            AbIdentity::KernelDerivative => IdentityId::KernelDerivative,
            AbIdentity::RecurrenceDifference => IdentityId::RecurrenceDifference,
            AbIdentity::RecurrenceDerivative => IdentityId::RecurrenceDerivative,
        }
    }
}

/// One identity comparison. `order` is NaN for identities without one; a
/// side that failed to evaluate is NaN as well.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbIdentityReport {
    pub identity: AbIdentity,
    pub order: f64,
    pub point: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub atol: f64,
    pub rtol: f64,
    pub pass: bool,
}

impl From<&IdentityReport> for AbIdentityReport {
    fn from(r: &IdentityReport) -> Self {
        AbIdentityReport {
            identity: r.identity_id.into(),
            order: r.order.unwrap_or(f64::NAN),
            point: r.point,
            lhs: r.lhs,
            rhs: r.rhs,
            abs_err: r.abs_err,
            rel_err: r.rel_err,
            atol: r.atol,
            rtol: r.rtol,
            pass: r.pass,
        }
    }
}

/// Finite-difference residual of the generalized Bessel equation.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbResidualReport {
    pub location: f64,
    pub residual: f64,
    pub scale: f64,
    pub relative: f64,
}

/// Opaque quadrature configuration.
pub struct AbQuadSpec(QuadSpec);

/// Opaque verification-suite result.
pub struct AbSuite(SuiteVerdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: AbStatus, msg: impl Into<String>) -> AbStatus {
    set_last_error(msg.into());
    status
}

fn from_error(e: Error) -> AbStatus {
    fail(AbStatus::from(&e), e.to_string())
}

/// Runs `f`, converting panics into `AB_STATUS_PANIC`.
fn guarded(f: impl FnOnce() -> AbStatus) -> AbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(AbStatus::Panic, "internal panic"),
    }
}

fn write_eval(out: *mut AbEvaluation, r: airy_bessel::Result<Evaluation>) -> AbStatus {
    if out.is_null() {
        return fail(AbStatus::NullPointer, "output pointer is null");
    }
    match r {
        Ok(e) => {
            // SAFETY: checked non-null; the caller promises it points to writable storage.
            unsafe { out.write(e.into()) };
            AbStatus::Ok
        }
        Err(e) => from_error(e),
    }
}

fn order(nu: f64) -> airy_bessel::Result<Order> {
    Order::new(nu)
}

/// # Safety
/// `spec` is null or a live handle from this library.
unsafe fn spec_or_default(spec: *const AbQuadSpec) -> QuadSpec {
    if spec.is_null() {
        QuadSpec::default()
    } else {
        (*spec).0
    }
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn ab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn ab_status_name(status: AbStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        AbStatus::Ok => b"ok\0",
        AbStatus::Domain => b"domain\0",
        AbStatus::Pole => b"pole\0",
        AbStatus::Overflow => b"overflow\0",
        AbStatus::IntegerOrder => b"integer-order\0",
        AbStatus::NoConvergence => b"no-convergence\0",
        AbStatus::ToleranceNotMet => b"tolerance-not-met\0",
        AbStatus::RootBracket => b"root-bracket\0",
        AbStatus::StepTooLarge => b"step-too-large\0",
        AbStatus::InvalidArgument => b"invalid-argument\0",
        AbStatus::NullPointer => b"null-pointer\0",
        AbStatus::OutOfRange => b"out-of-range\0",
        AbStatus::Panic => b"panic\0",
    };
    s.as_ptr().cast()
}

/// Static kebab-case name of an identity, as used by the CLI.
#[no_mangle]
pub extern "C" fn ab_identity_name(id: AbIdentity) -> *const c_char {
    let s: &'static [u8] = match IdentityId::from(id) {
        IdentityId::K13Kernel => b"k13-kernel\0",
        IdentityId::K23Kernel => b"k23-kernel\0",
        IdentityId::AiryIPair => b"airy-i-pair\0",
        IdentityId::AiryIPairReversed => b"airy-i-pair-reversed\0",
        IdentityId::AiryKForm => b"airy-k-form\0",
        IdentityId::IPairKForm => b"i-pair-k-form\0",
        IdentityId::KernelDerivative => b"kernel-derivative\0",
        IdentityId::RecurrenceDifference => b"k-recurrence-difference\0",
        IdentityId::RecurrenceDerivative => b"k-recurrence-derivative\0",
    };
    s.as_ptr().cast()
}

/// Γ(x).
///
/// # Safety
/// `out` must be null or point to writable storage for one `AbEvaluation`.
#[no_mangle]
pub unsafe extern "C" fn ab_gamma(x: f64, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, gamma(x)))
}

/// J_ν(x).
///
/// # Safety
/// As [`ab_gamma`].
#[no_mangle]
pub unsafe extern "C" fn ab_bessel_j(nu: f64, x: f64, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, order(nu).and_then(|o| bessel_j(o, x, SeriesOptions::default()))))
}

/// I_ν(x).
///
/// # Safety
/// As [`ab_gamma`].
#[no_mangle]
pub unsafe extern "C" fn ab_bessel_i(nu: f64, x: f64, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, order(nu).and_then(|o| bessel_i(o, x, SeriesOptions::default()))))
}

/// K_ν(x), non-integer ν.
///
/// # Safety
/// As [`ab_gamma`].
#[no_mangle]
pub unsafe extern "C" fn ab_bessel_k(nu: f64, x: f64, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, order(nu).and_then(|o| bessel_k(o, x))))
}

/// K_ν(x) by the slow integral-representation oracle.
///
/// # Safety
/// As [`ab_gamma`].
#[no_mangle]
pub unsafe extern "C" fn ab_bessel_k_oracle(nu: f64, x: f64, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, order(nu).and_then(|o| bessel_k_oracle(o, x))))
}

/// New quadrature configuration, or null on invalid parameters.
#[no_mangle]
pub extern "C" fn ab_quad_spec_new(
    atol: f64,
    rtol: f64,
    max_half_periods: usize,
    accel_depth: usize,
    panel_rule: usize,
) -> *mut AbQuadSpec {
    match QuadSpec::new(atol, rtol, max_half_periods, accel_depth, panel_rule) {
        Ok(s) => Box::into_raw(Box::new(AbQuadSpec(s))),
        Err(e) => {
            from_error(e);
            ptr::null_mut()
        }
    }
}

/// The default quadrature configuration.
#[no_mangle]
pub extern "C" fn ab_quad_spec_default() -> *mut AbQuadSpec {
    Box::into_raw(Box::new(AbQuadSpec(QuadSpec::default())))
}

/// # Safety
/// `spec` is null or a handle from `ab_quad_spec_new`/`ab_quad_spec_default`
/// that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ab_quad_spec_free(spec: *mut AbQuadSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// ∫₀^∞ cos(ω³ + ρω) dω. A null `spec` means the default configuration.
///
/// # Safety
/// `spec` is null or a live handle; `out` as in [`ab_gamma`].
#[no_mangle]
pub unsafe extern "C" fn ab_airy_cos(rho: f64, spec: *const AbQuadSpec, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, airy_cos_integral(rho, &spec_or_default(spec))))
}

/// ∫₀^∞ sin(ω³ + ρω) dω.
///
/// # Safety
/// As [`ab_airy_cos`].
#[no_mangle]
pub unsafe extern "C" fn ab_airy_sin(rho: f64, spec: *const AbQuadSpec, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, airy_sin_integral(rho, &spec_or_default(spec))))
}

/// ∫₀^∞ cos[(3/2)ξ(x + x³/3)] dx.
///
/// # Safety
/// As [`ab_airy_cos`].
#[no_mangle]
pub unsafe extern "C" fn ab_xi_form_cos(xi: f64, spec: *const AbQuadSpec, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, xi_form_cos(xi, &spec_or_default(spec))))
}

/// ∫₀^∞ x sin[(3/2)ξ(x + x³/3)] dx.
///
/// # Safety
/// As [`ab_airy_cos`].
#[no_mangle]
pub unsafe extern "C" fn ab_xi_form_xsin(xi: f64, spec: *const AbQuadSpec, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, xi_form_xsin(xi, &spec_or_default(spec))))
}

/// Maclaurin series of ∫₀^∞ cos(ω³ + ρω) dω, |ρ| ≤ 8.
///
/// # Safety
/// As [`ab_gamma`].
#[no_mangle]
pub unsafe extern "C" fn ab_airy_series(rho: f64, terms: usize, out: *mut AbEvaluation) -> AbStatus {
    guarded(|| write_eval(out, airy_series(rho, terms)))
}

fn branch(b: AbBranch) -> Branch {
    match b {
        AbBranch::Plus => Branch::Plus,
        AbBranch::Minus => Branch::Minus,
    }
}

/// y = x^c Z_{±ν}(b x^a) with b² of either sign.
///
/// # Safety
/// As [`ab_gamma`].
#[no_mangle]
pub unsafe extern "C" fn ab_bowman_solution(
    a: f64,
    b_squared: f64,
    c: f64,
    nu: f64,
    which: AbBranch,
    x: f64,
    out: *mut AbEvaluation,
) -> AbStatus {
    guarded(|| {
        let r = order(nu).and_then(|o| BowmanParams::new(a, b_squared, c, o)).and_then(|p| bowman_solution(&p, branch(which), x));
        write_eval(out, r)
    })
}

/// Five-point residual of x²y'' + (1−2c)xy' + (b²a²x^{2a} + c² − ν²a²)y = 0.
///
/// # Safety
/// `out` must be null or point to writable storage for one `AbResidualReport`.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn ab_bowman_residual(
    a: f64,
    b_squared: f64,
    c: f64,
    nu: f64,
    which: AbBranch,
    x: f64,
    h: f64,
    out: *mut AbResidualReport,
) -> AbStatus {
    guarded(|| {
        if out.is_null() {
            return fail(AbStatus::NullPointer, "output pointer is null");
        }
        let r = order(nu)
            .and_then(|o| BowmanParams::new(a, b_squared, c, o))
            .and_then(|p| bowman_residual(&p, branch(which), x, h));
        match r {
            Ok(r) => {
                out.write(AbResidualReport {
                    location: r.location,
                    residual: r.residual,
                    scale: r.scale,
                    relative: r.relative(),
                });
                AbStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Runs the default verification suite under (atol, rtol). Returns null on
/// invalid tolerances.
#[no_mangle]
pub extern "C" fn ab_suite_run(atol: f64, rtol: f64) -> *mut AbSuite {
    let r = catch_unwind(|| {
        let tol = Tolerance::new(atol, rtol)?;
        run_suite(&SuiteConfig::default().with_tolerance(tol))
    });
    match r {
        Ok(Ok(v)) => Box::into_raw(Box::new(AbSuite(v))),
        Ok(Err(e)) => {
            from_error(e);
            ptr::null_mut()
        }
        Err(_) => {
            fail(AbStatus::Panic, "internal panic");
            ptr::null_mut()
        }
    }
}

/// 1 if every report passed, 0 otherwise (including a null handle).
///
/// # Safety
/// `suite` is null or a live handle from [`ab_suite_run`].
#[no_mangle]
pub unsafe extern "C" fn ab_suite_passed(suite: *const AbSuite) -> i32 {
    suite.as_ref().map_or(0, |s| s.0.pass as i32)
}

/// # Safety
/// As [`ab_suite_passed`].
#[no_mangle]
pub unsafe extern "C" fn ab_suite_report_count(suite: *const AbSuite) -> usize {
    suite.as_ref().map_or(0, |s| s.0.reports.len())
}

/// Copies report `index` into `out`.
///
/// # Safety
/// `suite` as in [`ab_suite_passed`]; `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn ab_suite_report_get(suite: *const AbSuite, index: usize, out: *mut AbIdentityReport) -> AbStatus {
    let Some(s) = suite.as_ref() else {
        return fail(AbStatus::NullPointer, "suite handle is null");
    };
    if out.is_null() {
        return fail(AbStatus::NullPointer, "output pointer is null");
    }
    match s.0.reports.get(index) {
        Some(r) => {
            out.write(r.into());
            AbStatus::Ok
        }
        None => fail(AbStatus::OutOfRange, format!("report index {index} out of range ({} reports)", s.0.reports.len())),
    }
}

/// The suite verdict as JSON (same schema as `verify --format json`).
/// Release with [`ab_string_free`]. Null on failure.
///
/// # Safety
/// As [`ab_suite_passed`].
#[no_mangle]
pub unsafe extern "C" fn ab_suite_to_json(suite: *const AbSuite) -> *mut c_char {
    let Some(s) = suite.as_ref() else {
        fail(AbStatus::NullPointer, "suite handle is null");
        return ptr::null_mut();
    };
    match serde_json::to_string(&s.0).map(CString::new) {
        Ok(Ok(c)) => c.into_raw(),
        _ => {
            fail(AbStatus::InvalidArgument, "could not serialize the suite");
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `suite` is null or a live handle from [`ab_suite_run`].
#[no_mangle]
pub unsafe extern "C" fn ab_suite_free(suite: *mut AbSuite) {
    if !suite.is_null() {
        drop(Box::from_raw(suite));
    }
}

/// # Safety
/// `s` is null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
