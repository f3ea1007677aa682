//! The substitution chain between the Airy equation and Bessel's equation.
//!
//! ```text
//! f'' − ρf/3 = 0                                    (Airy)
//! f = ρ^{−1/4} F,  ρ³ = y²   ⇒   F'' + (5/(36y²) − 4/27) F = 0
//! x²y'' + (1−2c)xy' + (b²a²x^{2a} + c² − ν²a²) y = 0,   y = x^c Z_ν(b x^a)
//! ```
//!
//! The last equation with a = 1, b² = −4/27, c = 1/2, ν = 1/3 is the normal
//! form above. b enters only as b², so a purely imaginary b is carried as a
//! negative `b_squared` and Z_ν(i|b|x^a) is replaced by the real I_ν(|b|x^a):
//! the phase i^{−ν} of J_ν(iu) = i^ν I_ν(u) is a constant and drops out of
//! the real solution basis.
//!
//! Residuals are measured with five-point centered differences and reported
//! relative to the largest term of the equation.

use std::f64::consts::PI;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::eval::Evaluation;
use crate::special::{bessel_i, bessel_j, bessel_k, Order, SeriesOptions};

/// Default finite-difference step, relative to the local length scale.
pub const DEFAULT_RELATIVE_STEP: f64 = 5e-3;

/// Constants of the generalized Bessel equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BowmanParams {
    pub a: f64,
    /// b², negative when b is purely imaginary.
    pub b_squared: f64,
    pub c: f64,
    pub nu: Order,
}

impl BowmanParams {
    pub fn new(a: f64, b_squared: f64, c: f64, nu: Order) -> Result<Self> {
        if a == 0.0 || !a.is_finite() {
            return Err(Error::InvalidArgument(format!("a must be nonzero and finite, got {a}")));
        }
        if b_squared == 0.0 || !b_squared.is_finite() {
            return Err(Error::InvalidArgument(format!("b^2 must be nonzero and finite, got {b_squared}")));
        }
        if !c.is_finite() {
            return Err(Error::InvalidArgument(format!("c must be finite, got {c}")));
        }
        Ok(BowmanParams { a, b_squared, c, nu })
    }

    /// a = 1, b = 2i/(3√3), c = 1/2, ν = 1/3: the case that reproduces the
    /// normal form of the Airy equation.
    pub fn imaginary_b_case() -> Self {
        BowmanParams { a: 1.0, b_squared: -4.0 / 27.0, c: 0.5, nu: Order::one_third() }
    }

    pub fn is_imaginary_b(&self) -> bool {
        self.b_squared < 0.0
    }

    /// (1 − 2c, b²a², 2a, c² − ν²a²): coefficients of xy', of x^{2a}y, the
    /// exponent 2a, and of y.
    pub fn coefficients(&self) -> BowmanCoefficients<f64> {
        let nu = self.nu.nu();
        BowmanCoefficients {
            first_derivative: 1.0 - 2.0 * self.c,
            power_term: self.b_squared * self.a * self.a,
            power: 2.0 * self.a,
            constant: self.c * self.c - nu * nu * self.a * self.a,
        }
    }
}

/// Coefficients of x²y'' + P xy' + (Q x^p + R) y = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BowmanCoefficients<T> {
    pub first_derivative: T,
    pub power_term: T,
    pub power: T,
    pub constant: T,
}

/// Rational-valued constants, for reductions that must hold exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalBowman {
    pub a: Ratio<i64>,
    pub b_squared: Ratio<i64>,
    pub c: Ratio<i64>,
    pub nu: Ratio<i64>,
}

impl RationalBowman {
    pub fn imaginary_b_case() -> Self {
        RationalBowman {
            a: Ratio::from_integer(1),
            b_squared: Ratio::new(-4, 27),
            c: Ratio::new(1, 2),
            nu: Ratio::new(1, 3),
        }
    }

    pub fn coefficients(&self) -> BowmanCoefficients<Ratio<i64>> {
        let one = Ratio::from_integer(1);
        let two = Ratio::from_integer(2);
        BowmanCoefficients {
            first_derivative: one - two * self.c,
            power_term: self.b_squared * self.a * self.a,
            power: two * self.a,
            constant: self.c * self.c - self.nu * self.nu * self.a * self.a,
        }
    }
}

/// Coefficients of the normal form y²F'' + (5/36 − (4/27)y²)F = 0 written in
/// the generalized-Bessel layout.
pub fn normal_form_coefficients() -> BowmanCoefficients<Ratio<i64>> {
    BowmanCoefficients {
        first_derivative: Ratio::from_integer(0),
        power_term: Ratio::new(-4, 27),
        power: Ratio::from_integer(2),
        constant: Ratio::new(5, 36),
    }
}

/// Sign of the order in Z_{±ν}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn apply(self, nu: Order) -> Order {
        match self {
            Branch::Plus => nu,
            Branch::Minus => nu.neg(),
        }
    }
}

/// A finite-difference residual and the magnitude it is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub location: f64,
    pub residual: f64,
    /// Largest magnitude among the equation's terms.
    pub scale: f64,
}

impl ResidualReport {
    pub fn relative(&self) -> f64 {
        self.residual.abs() / self.scale
    }
}

/// y = x^c J_{±ν}(b x^a) for b² > 0, y = x^c I_{±ν}(|b| x^a) for b² < 0.
pub fn bowman_solution(params: &BowmanParams, branch: Branch, x: f64) -> Result<Evaluation> {
    if !(x > 0.0) {
        return Err(domain(format!("bowman_solution requires x > 0, got {x}")));
    }
    if params.nu.is_integer() {
        return Err(Error::IntegerOrder(params.nu.nu()));
    }
    let order = branch.apply(params.nu);
    let arg = params.b_squared.abs().sqrt() * x.powf(params.a);
    let z = if params.is_imaginary_b() {
        bessel_i(order, arg, SeriesOptions::default())?
    } else {
        bessel_j(order, arg, SeriesOptions::default())?
    };
    Ok(z.scale(x.powf(params.c)))
}

/// Values at x−2h, x−h, x, x+h, x+2h → (y, y', y'') by five-point centered differences.
fn five_point<F: Fn(f64) -> Result<f64>>(f: F, x: f64, h: f64) -> Result<(f64, f64, f64)> {
    if !(h > 0.0) || !(x > 2.0 * h) {
        return Err(Error::StepTooLarge(format!("need x > 2h > 0, got x = {x}, h = {h}")));
    }
    let m2 = f(x - 2.0 * h)?;
    let m1 = f(x - h)?;
    let y = f(x)?;
    let p1 = f(x + h)?;
    let p2 = f(x + 2.0 * h)?;
    let d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    let d2 = (-m2 + 16.0 * m1 - 30.0 * y + 16.0 * p1 - p2) / (12.0 * h * h);
    Ok((y, d1, d2))
}

fn report(location: f64, terms: &[f64]) -> ResidualReport {
    let residual: f64 = terms.iter().sum();
    let scale = terms.iter().fold(0.0_f64, |m, t| m.max(t.abs()));
    ResidualReport { location, residual, scale: if scale > 0.0 { scale } else { f64::MIN_POSITIVE } }
}

/// Step for [`bowman_residual`]: a fixed fraction of x, shrunk where the
/// Bessel argument z = |b|x^a varies on a shorter scale x/(|a|z).
pub fn bowman_default_step(params: &BowmanParams, x: f64) -> f64 {
    let z = params.b_squared.abs().sqrt() * x.powf(params.a);
    DEFAULT_RELATIVE_STEP * x / (params.a.abs() * z).max(1.0)
}

/// Residual of the generalized Bessel equation for an arbitrary solution candidate.
pub fn bowman_residual_of<F: Fn(f64) -> Result<f64>>(params: &BowmanParams, x: f64, h: f64, y: F) -> Result<ResidualReport> {
    let (y0, d1, d2) = five_point(y, x, h)?;
    let k = params.coefficients();
    let terms = [
        x * x * d2,
        k.first_derivative * x * d1,
        (k.power_term * x.powf(k.power) + k.constant) * y0,
    ];
    Ok(report(x, &terms))
}

/// Residual of the generalized Bessel equation for [`bowman_solution`].
pub fn bowman_residual(params: &BowmanParams, branch: Branch, x: f64, h: f64) -> Result<ResidualReport> {
    bowman_residual_of(params, x, h, |t| Ok(bowman_solution(params, branch, t)?.value))
}

/// ρ ↔ y and f ↔ F for f = ρ^{−1/4} F, ρ³ = y².
#[derive(Debug, Clone, Copy, Default)]
pub struct NicholsonMap;

impl NicholsonMap {
    pub fn rho_to_y(rho: f64) -> f64 {
        rho.powf(1.5)
    }

    pub fn y_to_rho(y: f64) -> f64 {
        y.cbrt().powi(2)
    }

    /// F = ρ^{1/4} f
    pub fn lift(rho: f64, f: f64) -> f64 {
        rho.powf(0.25) * f
    }

    /// f = ρ^{−1/4} F
    pub fn lower(rho: f64, big_f: f64) -> f64 {
        big_f / rho.powf(0.25)
    }
}

/// Which ordering of the I pair to use in the Bessel composition of f.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IPairOrdering {
    /// I_{−1/3} − I_{1/3}
    MinusFirst,
    /// I_{1/3} − I_{−1/3}
    PlusFirst,
}

/// z = (2ρ/3)√(ρ/3), the Bessel argument for f(ρ).
pub fn bessel_argument(rho: f64) -> f64 {
    2.0 * rho / 3.0 * (rho / 3.0).sqrt()
}

/// G(ρ) = √(ρ/3)(π/3)[I_{−1/3}(z) − I_{1/3}(z)] (or the reversed ordering).
///
/// Also returns the magnitude of the subtracted pair, √(ρ/3)(π/3)(I_{−1/3} + I_{1/3}),
/// which bounds the rounding the subtraction can leave behind.
pub fn airy_from_i_pair(rho: f64, ordering: IPairOrdering) -> Result<(Evaluation, f64)> {
    if !(rho > 0.0) {
        return Err(domain(format!("the I-pair composition requires rho > 0, got {rho}")));
    }
    let z = bessel_argument(rho);
    let opts = SeriesOptions::default();
    let im = bessel_i(Order::one_third().neg(), z, opts)?;
    let ip = bessel_i(Order::one_third(), z, opts)?;
    let pre = (rho / 3.0).sqrt() * PI / 3.0;
    let diff = match ordering {
        IPairOrdering::MinusFirst => im.value - ip.value,
        IPairOrdering::PlusFirst => ip.value - im.value,
    };
    let value = pre * diff;
    let pair = pre * (im.value + ip.value);
    let err = pre * (im.abs_error + ip.abs_error) + 2.0 * f64::EPSILON * pair;
    Ok((Evaluation::new(value, err, im.work.combine(ip.work)), pair))
}

/// (√ρ/3) K_{1/3}(z), z = (2ρ/3)√(ρ/3).
pub fn airy_from_k(rho: f64) -> Result<Evaluation> {
    if !(rho > 0.0) {
        return Err(domain(format!("the K composition requires rho > 0, got {rho}")));
    }
    Ok(bessel_k(Order::one_third(), bessel_argument(rho))?.scale(rho.sqrt() / 3.0))
}

/// Source of f(ρ) inside the normal-form check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormSource {
    /// The I-pair composition G.
    BesselPair,
    /// The ascending Maclaurin series.
    Series,
}

fn airy_value(rho: f64, source: NormalFormSource) -> Result<f64> {
    match source {
        NormalFormSource::BesselPair => Ok(airy_from_i_pair(rho, IPairOrdering::MinusFirst)?.0.value),
        NormalFormSource::Series => Ok(crate::airy_quad::airy_series(rho, 400)?.value),
    }
}

/// Residual of F'' + (5/(36y²) − 4/27) F = 0 with F(y) = ρ^{1/4} f(ρ), ρ = y^{2/3}.
pub fn nicholson_normal_form_residual(y: f64, h: f64) -> Result<ResidualReport> {
    nicholson_normal_form_residual_from(y, h, NormalFormSource::BesselPair)
}

pub fn nicholson_normal_form_residual_from(y: f64, h: f64, source: NormalFormSource) -> Result<ResidualReport> {
    let big_f = |t: f64| {
        let rho = NicholsonMap::y_to_rho(t);
        Ok(NicholsonMap::lift(rho, airy_value(rho, source)?))
    };
    let (f0, _, d2) = five_point(big_f, y, h)?;
    let terms = [d2, 5.0 / (36.0 * y * y) * f0, -4.0 / 27.0 * f0];
    Ok(report(y, &terms))
}

/// Residual of u'' + [1 + (1 − 4ν²)/(4x²)] u = 0 with u = √x J_ν(x).
pub fn bessel_normal_form_residual(nu: Order, x: f64, h: f64) -> Result<ResidualReport> {
    let u = |t: f64| Ok(t.sqrt() * bessel_j(nu, t, SeriesOptions::default())?.value);
    let (u0, _, d2) = five_point(u, x, h)?;
    let n = nu.nu();
    let terms = [d2, u0, (1.0 - 4.0 * n * n) / (4.0 * x * x) * u0];
    Ok(report(x, &terms))
}

/// Relative discrepancy of f → F → f through the substitution pair, with f
/// taken from the I-pair composition.
pub fn airy_to_normal_roundtrip(rho: f64) -> Result<f64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(domain(format!("roundtrip requires rho > 0, got {rho}")));
    }
    let f = airy_from_i_pair(rho, IPairOrdering::MinusFirst)?.0.value;
    let y = NicholsonMap::rho_to_y(rho);
    let big_f = NicholsonMap::lift(rho, f);
    let rho_back = NicholsonMap::y_to_rho(y);
    let f_back = NicholsonMap::lower(rho_back, big_f);
    Ok(((f_back - f) / f).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imaginary_b_case_reduces_exactly() {
        let k = RationalBowman::imaginary_b_case().coefficients();
        assert_eq!(k, normal_form_coefficients());
        assert_eq!(k.first_derivative, Ratio::from_integer(0));
        assert_eq!(k.constant, Ratio::new(5, 36));
        assert_eq!(k.power_term, Ratio::new(-4, 27));
        // 5/36 = 1/4 − ν² picks ν = ±1/3
        assert_eq!(Ratio::new(1, 4) - Ratio::new(1, 3) * Ratio::new(1, 3), Ratio::new(5, 36));
        assert_eq!(Ratio::new(1, 4) - Ratio::new(-1, 3) * Ratio::new(-1, 3), Ratio::new(5, 36));
    }

    #[test]
    fn float_coefficients_within_rounding() {
        let k = BowmanParams::imaginary_b_case().coefficients();
        assert_eq!(k.first_derivative, 0.0);
        assert_eq!(k.power_term, -4.0 / 27.0);
        assert!((k.constant - 5.0 / 36.0).abs() <= f64::EPSILON);
    }

    #[test]
    fn params_validation() {
        assert!(BowmanParams::new(0.0, 1.0, 0.0, Order::one_third()).is_err());
        assert!(BowmanParams::new(1.0, 0.0, 0.0, Order::one_third()).is_err());
        assert!(BowmanParams::new(1.0, -4.0 / 27.0, 0.5, Order::one_third()).unwrap().is_imaginary_b());
    }

    #[test]
    fn half_order_solution_vanishes_at_pi() {
        let p = BowmanParams::new(1.0, 1.0, 0.5, Order::new(0.5).unwrap()).unwrap();
        let y = bowman_solution(&p, Branch::Plus, PI).unwrap();
        assert!(y.value.abs() < 1e-12);
    }

    #[test]
    fn paper_constants_at_unit_point() {
        let p = BowmanParams::imaginary_b_case();
        let y = bowman_solution(&p, Branch::Plus, 1.0).unwrap().value;
        let direct = bessel_i(Order::one_third(), 2.0 / (3.0 * 3f64.sqrt()), SeriesOptions::default()).unwrap().value;
        assert_eq!(y, direct);
    }

    #[test]
    fn small_x_goes_to_zero_when_leading_power_positive() {
        let p = BowmanParams::new(1.0, 1.0, 0.5, Order::one_third()).unwrap();
        let y = bowman_solution(&p, Branch::Plus, 1e-12).unwrap().value;
        assert!(y.abs() < 1e-9);
    }

    #[test]
    fn integer_order_rejected() {
        let p = BowmanParams::new(1.0, 1.0, 0.0, Order::new(0.0).unwrap()).unwrap();
        assert!(matches!(bowman_solution(&p, Branch::Plus, 1.0), Err(Error::IntegerOrder(_))));
        assert!(matches!(bowman_residual(&p, Branch::Plus, 1.0, 1e-3), Err(Error::IntegerOrder(_))));
    }

    #[test]
    fn step_precondition() {
        let p = BowmanParams::imaginary_b_case();
        assert!(matches!(bowman_residual(&p, Branch::Plus, 1.0, 0.6), Err(Error::StepTooLarge(_))));
        assert!(matches!(nicholson_normal_form_residual(0.1, 0.05), Err(Error::StepTooLarge(_))));
    }

    #[test]
    fn half_order_normal_form_is_harmonic() {
        // u = √(2/π) sin x solves u'' + u = 0
        let r = bessel_normal_form_residual(Order::new(0.5).unwrap(), PI / 2.0, 1e-3).unwrap();
        assert!(r.relative() < 1e-9);
    }

    #[test]
    fn roundtrip_is_pure_algebra() {
        assert!(airy_to_normal_roundtrip(1.0).unwrap() <= 1e-15);
        assert!(airy_to_normal_roundtrip(2.7).unwrap() <= 1e-13);
        assert!(airy_to_normal_roundtrip(1e-6).unwrap() <= 1e-12);
        assert!(airy_to_normal_roundtrip(0.0).is_err());
    }
}
