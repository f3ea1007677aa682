use crate::error::{domain, Error, Result};
use crate::eval::{Evaluation, Work};

use super::Order;

const MAX_REFINEMENTS: usize = 20;
// integrand (scaled by e^x) below e^-46 is dropped
const TRUNCATION_EXPONENT: f64 = 46.0;
const STABILITY: f64 = 1e-13;

/// K_ν(x) = ∫₀^∞ e^{−x cosh t} cosh(νt) dt by the trapezoid rule, halving the
/// step until successive sums agree to 1e-13.
///
/// The integrand is analytic and decays doubly exponentially, so the
/// trapezoid error falls geometrically with each halving. This path shares no
/// code with [`super::bessel_k`]; it exists to certify it and is far slower.
pub fn bessel_k_oracle(order: Order, x: f64) -> Result<Evaluation> {
    if !(x > 0.0) {
        return Err(domain(format!("bessel_K_oracle requires x > 0, got {x}")));
    }
    let nu = order.nu().abs();
    let integrand = |t: f64| (-x * (t.cosh() - 1.0)).exp() * (nu * t).cosh();

    let mut upper = 1.0_f64;
    while x * (upper.cosh() - 1.0) - nu * upper < TRUNCATION_EXPONENT {
        upper += 0.25;
    }

    let mut nodes = 16usize;
    let mut step = upper / nodes as f64;
    let mut sum = 0.5 * integrand(0.0) + (1..=nodes).map(|i| integrand(i as f64 * step)).sum::<f64>();
    let mut estimate = step * sum;
    for refinement in 1..=MAX_REFINEMENTS {
        let fresh: f64 = (0..nodes).map(|i| integrand((2 * i + 1) as f64 * 0.5 * step)).sum();
        sum += fresh;
        nodes *= 2;
        step *= 0.5;
        let refined = step * sum;
        let change = (refined - estimate).abs();
        estimate = refined;
        if change <= STABILITY * refined.abs() {
            let scale = (-x).exp();
            let value = estimate * scale;
            let err = (change + 8.0 * f64::EPSILON * estimate.abs()) * scale;
            return Ok(Evaluation::new(value, err, Work { terms: nodes as u32 + 1, panels: refinement as u32 }));
        }
    }
    Err(Error::NoConvergence { what: "bessel_K_oracle trapezoid refinement", iterations: MAX_REFINEMENTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn half_order_closed_form() {
        let k = bessel_k_oracle(Order::new(0.5).unwrap(), 2.0).unwrap();
        let expected = (PI / 4.0).sqrt() * (-2.0_f64).exp();
        assert!((k.value - expected).abs() <= 1e-13 * expected);
        assert!((k.value - 0.119_937_771_968_06).abs() < 1e-13);
    }

    #[test]
    fn even_in_order() {
        for &x in &[0.1, 1.0, 7.5] {
            let a = bessel_k_oracle(Order::one_third(), x).unwrap().value;
            let b = bessel_k_oracle(Order::one_third().neg(), x).unwrap().value;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn rejects_nonpositive_argument() {
        assert!(bessel_k_oracle(Order::one_third(), 0.0).is_err());
    }

    #[test]
    fn integer_orders_are_fine_here() {
        // K_0(1) = 0.42102443824070833...
        let k = bessel_k_oracle(Order::new(0.0).unwrap(), 1.0).unwrap().value;
        assert!((k - 0.421_024_438_240_708_3).abs() < 1e-14);
    }
}
