use serde::{Deserialize, Serialize};

/// Work consumed by one evaluation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Work {
    /// Series terms summed (or trapezoid nodes, for the oracle).
    pub terms: u32,
    /// Quadrature panels integrated (or grid refinements, for the oracle).
    pub panels: u32,
}

impl Work {
    pub fn terms(n: usize) -> Self {
        Work { terms: n as u32, panels: 0 }
    }

    pub fn panels(n: usize) -> Self {
        Work { terms: 0, panels: n as u32 }
    }

    pub fn combine(self, other: Work) -> Work {
        Work {
            terms: self.terms.saturating_add(other.terms),
            panels: self.panels.saturating_add(other.panels),
        }
    }
}

/// A computed value together with a nonnegative absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: f64,
    pub abs_error: f64,
    pub work: Work,
}

impl Evaluation {
    pub fn new(value: f64, abs_error: f64, work: Work) -> Self {
        debug_assert!(abs_error >= 0.0 || abs_error.is_nan());
        Evaluation { value, abs_error: abs_error.abs(), work }
    }

    pub fn exact(value: f64) -> Self {
        Evaluation::new(value, 0.0, Work::default())
    }

    /// Multiplies by a constant whose own rounding is negligible.
    pub fn scale(self, factor: f64) -> Self {
        Evaluation {
            value: self.value * factor,
            abs_error: (self.abs_error * factor).abs() + (self.value * factor).abs() * f64::EPSILON,
            work: self.work,
        }
    }
}
