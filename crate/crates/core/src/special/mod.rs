//! Gamma and Bessel functions of real argument and fractional order.

mod bessel;
mod gamma;
mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use bessel::{bessel_i, bessel_j, bessel_k, k_from_i_bridge, KBranch, SeriesOptions, J_HANKEL_SWITCH, J_SERIES_MAX_ARG, K_ASYMPTOTIC_SWITCH, K_SERIES_SWITCH};
pub use gamma::{gamma, reciprocal_gamma, sin_pi, GAMMA_MAX_ARG};
pub use oracle::bessel_k_oracle;

/// Largest supported |ν|.
pub const MAX_ORDER: f64 = 10.0;

/// A real Bessel order ν with |ν| ≤ [`MAX_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() {
            return Err(Error::InvalidArgument(format!("order {nu} is not finite")));
        }
        if nu.abs() > MAX_ORDER {
            return Err(Error::InvalidArgument(format!("|order| = {} exceeds {MAX_ORDER}", nu.abs())));
        }
        Ok(Order(nu))
    }

    pub fn one_third() -> Self {
        Order(1.0 / 3.0)
    }

    pub fn two_thirds() -> Self {
        Order(2.0 / 3.0)
    }

    pub fn nu(self) -> f64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0.fract() == 0.0
    }

    pub fn neg(self) -> Self {
        Order(-self.0)
    }

    /// `ν + k`, still checked against the support window.
    pub fn shifted(self, k: f64) -> Result<Self> {
        Order::new(self.0 + k)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Accepts decimals (`0.5`, `-1e-1`) and exact rationals (`1/3`, `-2/3`).
impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Order::new(parse_real(s)?)
    }
}

/// Parses a real number written either as a decimal or as `p/q`.
pub fn parse_real(s: &str) -> Result<f64> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("cannot parse '{s}' as a number"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| bad())?;
            let den: f64 = den.trim().parse().map_err(|_| bad())?;
            if den == 0.0 {
                return Err(bad());
            }
            Ok(num / den)
        }
        None => s.parse().map_err(|_| bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_orders_parse_to_nearest_double() {
        assert_eq!("1/3".parse::<Order>().unwrap().nu(), 1.0 / 3.0);
        assert_eq!("-2/3".parse::<Order>().unwrap().nu(), -2.0 / 3.0);
        assert_eq!(" 0.5 ".parse::<Order>().unwrap().nu(), 0.5);
        assert!("1/0".parse::<Order>().is_err());
        assert!("abc".parse::<Order>().is_err());
    }

    #[test]
    fn order_window_is_enforced() {
        assert!(Order::new(10.0).is_ok());
        assert!(Order::new(-10.5).is_err());
        assert!(Order::new(f64::NAN).is_err());
        assert!(Order::new(2.0).unwrap().is_integer());
        assert!(!Order::one_third().is_integer());
    }
}
