//! Numerical evaluation results and evaluation budgets.

use num_complex::Complex64;

/// Result of a series (or series-like) evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    /// The computed value.
    pub value: Complex64,
    /// Estimated absolute error.
    pub abs_error_estimate: f64,
    /// Number of terms (or function evaluations) consumed.
    pub terms_used: usize,
    /// True when the stop rule was met within the budget.
    pub converged: bool,
    /// True when a nonpositive-integer upper parameter truncated the sum,
    /// in which case the result is exact up to rounding.
    pub terminated: bool,
}

impl SeriesValue {
    pub fn real(&self) -> f64 {
        self.value.re
    }

    pub(crate) fn exact(value: Complex64, terms_used: usize) -> Self {
        SeriesValue {
            value,
            abs_error_estimate: 0.0,
            terms_used,
            converged: true,
            terminated: true,
        }
    }
}

/// Tolerance and term budget for series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Relative tolerance for the stop rule.
    pub tol: f64,
    /// Hard cap on the number of terms; exceeding it yields `NotConverged`.
    pub max_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            tol: 1e-14,
            max_terms: 10_000,
        }
    }
}

impl EvalOptions {
    pub fn with_tol(tol: f64) -> Self {
        EvalOptions {
            tol,
            ..Default::default()
        }
    }
}
