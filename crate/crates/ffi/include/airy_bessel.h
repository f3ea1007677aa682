#ifndef AIRY_BESSEL_H
#define AIRY_BESSEL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AbBranch {
  AB_BRANCH_PLUS = 0,
  AB_BRANCH_MINUS = 1,
} AbBranch;

/**
 * Identity checked by a report.
 */
typedef enum AbIdentity {
  AB_IDENTITY_K13_KERNEL = 0,
  AB_IDENTITY_K23_KERNEL = 1,
  AB_IDENTITY_AIRY_I_PAIR = 2,
  AB_IDENTITY_AIRY_I_PAIR_REVERSED = 3,
  AB_IDENTITY_AIRY_K_FORM = 4,
  AB_IDENTITY_I_PAIR_K_FORM = 5,
  AB_IDENTITY_KERNEL_DERIVATIVE = 6,
  AB_IDENTITY_RECURRENCE_DIFFERENCE = 7,
  AB_IDENTITY_RECURRENCE_DERIVATIVE = 8,
} AbIdentity;

/**
 * Result codes. `AB_STATUS_OK` is zero; everything else is a failure.
 */
typedef enum AbStatus {
  AB_STATUS_OK = 0,
  AB_STATUS_DOMAIN = 1,
  AB_STATUS_POLE = 2,
  AB_STATUS_OVERFLOW = 3,
  AB_STATUS_INTEGER_ORDER = 4,
  AB_STATUS_NO_CONVERGENCE = 5,
  AB_STATUS_TOLERANCE_NOT_MET = 6,
  AB_STATUS_ROOT_BRACKET = 7,
  AB_STATUS_STEP_TOO_LARGE = 8,
  AB_STATUS_INVALID_ARGUMENT = 9,
  AB_STATUS_NULL_POINTER = 10,
  AB_STATUS_OUT_OF_RANGE = 11,
  AB_STATUS_PANIC = 12,
} AbStatus;

/**
 * Opaque quadrature configuration.
 */
typedef struct AbQuadSpec AbQuadSpec;

/**
 * Opaque verification-suite result.
 */
typedef struct AbSuite AbSuite;

/**
 * A value with its absolute error estimate and the work spent on it.
 */
typedef struct AbEvaluation {
  double value;
  double abs_error;
  uint32_t terms;
  uint32_t panels;
} AbEvaluation;

/**
 * Finite-difference residual of the generalized Bessel equation.
 */
typedef struct AbResidualReport {
  double location;
  double residual;
  double scale;
  double relative;
} AbResidualReport;

/**
 * One identity comparison. `order` is NaN for identities without one; a
 * side that failed to evaluate is NaN as well.
 */
typedef struct AbIdentityReport {
  enum AbIdentity identity;
  double order;
  double point;
  double lhs;
  double rhs;
  double abs_err;
  double rel_err;
  double atol;
  double rtol;
  bool pass;
} AbIdentityReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread.
 */
const char *ab_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *ab_status_name(enum AbStatus status);

/**
 * Static kebab-case name of an identity, as used by the CLI.
 */
const char *ab_identity_name(enum AbIdentity id);

/**
 * Γ(x).
 *
 * # Safety
 * `out` must be null or point to writable storage for one `AbEvaluation`.
 */
enum AbStatus ab_gamma(double x, struct AbEvaluation *out);

/**
 * J_ν(x).
 *
 * # Safety
 * As [`ab_gamma`].
 */
enum AbStatus ab_bessel_j(double nu, double x, struct AbEvaluation *out);

/**
 * I_ν(x).
 *
 * # Safety
 * As [`ab_gamma`].
 */
enum AbStatus ab_bessel_i(double nu, double x, struct AbEvaluation *out);

/**
 * K_ν(x), non-integer ν.
 *
 * # Safety
 * As [`ab_gamma`].
 */
enum AbStatus ab_bessel_k(double nu, double x, struct AbEvaluation *out);

/**
 * K_ν(x) by the slow integral-representation oracle.
 *
 * # Safety
 * As [`ab_gamma`].
 */
enum AbStatus ab_bessel_k_oracle(double nu, double x, struct AbEvaluation *out);

/**
 * New quadrature configuration, or null on invalid parameters.
 */
struct AbQuadSpec *ab_quad_spec_new(double atol,
                                    double rtol,
                                    size_t max_half_periods,
                                    size_t accel_depth,
                                    size_t panel_rule);

/**
 * The default quadrature configuration.
 */
struct AbQuadSpec *ab_quad_spec_default(void);

/**
 * # Safety
 * `spec` is null or a handle from `ab_quad_spec_new`/`ab_quad_spec_default`
 * that has not been freed.
 */
void ab_quad_spec_free(struct AbQuadSpec *spec);

/**
 * ∫₀^∞ cos(ω³ + ρω) dω. A null `spec` means the default configuration.
 *
 * # Safety
 * `spec` is null or a live handle; `out` as in [`ab_gamma`].
 */
enum AbStatus ab_airy_cos(double rho, const struct AbQuadSpec *spec, struct AbEvaluation *out);

/**
 * ∫₀^∞ sin(ω³ + ρω) dω.
 *
 * # Safety
 * As [`ab_airy_cos`].
 */
enum AbStatus ab_airy_sin(double rho, const struct AbQuadSpec *spec, struct AbEvaluation *out);

/**
 * ∫₀^∞ cos[(3/2)ξ(x + x³/3)] dx.
 *
 * # Safety
 * As [`ab_airy_cos`].
 */
enum AbStatus ab_xi_form_cos(double xi, const struct AbQuadSpec *spec, struct AbEvaluation *out);

/**
 * ∫₀^∞ x sin[(3/2)ξ(x + x³/3)] dx.
 *
 * # Safety
 * As [`ab_airy_cos`].
 */
enum AbStatus ab_xi_form_xsin(double xi, const struct AbQuadSpec *spec, struct AbEvaluation *out);

/**
 * Maclaurin series of ∫₀^∞ cos(ω³ + ρω) dω, |ρ| ≤ 8.
 *
 * # Safety
 * As [`ab_gamma`].
 */
enum AbStatus ab_airy_series(double rho, size_t terms, struct AbEvaluation *out);

/**
 * y = x^c Z_{±ν}(b x^a) with b² of either sign.
 *
 * # Safety
 * As [`ab_gamma`].
 */
enum AbStatus ab_bowman_solution(double a,
                                 double b_squared,
                                 double c,
                                 double nu,
                                 enum AbBranch which,
                                 double x,
                                 struct AbEvaluation *out);

/**
 * Five-point residual of x²y'' + (1−2c)xy' + (b²a²x^{2a} + c² − ν²a²)y = 0.
 *
 * # Safety
 * `out` must be null or point to writable storage for one `AbResidualReport`.
 */
enum AbStatus ab_bowman_residual(double a,
                                 double b_squared,
                                 double c,
                                 double nu,
                                 enum AbBranch which,
                                 double x,
                                 double h,
                                 struct AbResidualReport *out);

/**
 * Runs the default verification suite under (atol, rtol). Returns null on
 * invalid tolerances.
 */
struct AbSuite *ab_suite_run(double atol, double rtol);

/**
 * 1 if every report passed, 0 otherwise (including a null handle).
 *
 * # Safety
 * `suite` is null or a live handle from [`ab_suite_run`].
 */
int32_t ab_suite_passed(const struct AbSuite *suite);

/**
 * # Safety
 * As [`ab_suite_passed`].
 */
size_t ab_suite_report_count(const struct AbSuite *suite);

/**
 * Copies report `index` into `out`.
 *
 * # Safety
 * `suite` as in [`ab_suite_passed`]; `out` null or writable.
 */
enum AbStatus ab_suite_report_get(const struct AbSuite *suite,
                                  size_t index,
                                  struct AbIdentityReport *out);

/**
 * The suite verdict as JSON (same schema as `verify --format json`).
 * Release with [`ab_string_free`]. Null on failure.
 *
 * # Safety
 * As [`ab_suite_passed`].
 */
char *ab_suite_to_json(const struct AbSuite *suite);

/**
 * # Safety
 * `suite` is null or a live handle from [`ab_suite_run`].
 */
void ab_suite_free(struct AbSuite *suite);

/**
 * # Safety
 * `s` is null or a string returned by this library that has not been freed.
 */
void ab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AIRY_BESSEL_H */
