//! Series representations of the symmetric Tornheim functions S1-S4:
//! coefficient generators, the adaptive shell-summation engine, and the
//! evaluators (eta-based plus the older Z/beta forms of S1 and S2).

mod coeff;
mod engine;
mod eval_legacy;
mod eval_new;

pub use coeff::{coeff_eta, coeff_z};
pub use engine::sum_shells;
pub use eval_legacy::{eval_s1_legacy, eval_s2_legacy};
pub use eval_new::{eval_s1, eval_s2, eval_s3, eval_s4};

use num_complex::Complex64;

use crate::error::{EvalError, Result};

/// An (s, t, u) argument triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriplePoint {
    pub s: Complex64,
    pub t: Complex64,
    pub u: Complex64,
}

impl TriplePoint {
    pub fn new(s: Complex64, t: Complex64, u: Complex64) -> Self {
        TriplePoint { s, t, u }
    }

    pub fn from_re(s: f64, t: f64, u: f64) -> Self {
        TriplePoint {
            s: Complex64::new(s, 0.0),
            t: Complex64::new(t, 0.0),
            u: Complex64::new(u, 0.0),
        }
    }

    pub fn check_finite(&self) -> Result<()> {
        if self.s.is_finite() && self.t.is_finite() && self.u.is_finite() {
            Ok(())
        } else {
            Err(EvalError::NonFinite("argument triple"))
        }
    }
}

/// Result of a truncated series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: Complex64,
    /// Absolute error estimate.
    pub err_estimate: f64,
    /// Total number of terms summed.
    pub terms_used: usize,
    /// Largest index shell reached.
    pub max_order: usize,
    pub converged: bool,
}

/// Evaluation parameters.
#[derive(Debug, Clone, Copy)]
pub struct EvalConfig {
    /// Absolute target error.
    pub tol: f64,
    /// Cap on index shells per series family.
    pub max_order: usize,
    /// Distance below which a point counts as lying on a singular
    /// hyperplane.
    pub singular_proximity: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            tol: 1e-10,
            max_order: 120,
            singular_proximity: 1e-6,
        }
    }
}

impl EvalConfig {
    pub fn with_tol(tol: f64) -> Self {
        EvalConfig {
            tol,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(EvalError::Domain(format!("tol = {} must be > 0", self.tol)));
        }
        if self.max_order < 8 {
            return Err(EvalError::Domain(format!(
                "max_order = {} must be >= 8",
                self.max_order
            )));
        }
        if !(self.singular_proximity > 0.0) {
            return Err(EvalError::Domain(format!(
                "singular_proximity = {} must be > 0",
                self.singular_proximity
            )));
        }
        Ok(())
    }
}

/// Which coefficient family a series uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffTag {
    Z,
    EtaPlus,
    EtaMinus,
}

/// Index-parity restriction on a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityRestriction {
    None,
    EvenOnly,
    OddOnly,
}

/// Descriptor for a coefficient sequence as used by a series family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoeffKind {
    pub tag: CoeffTag,
    pub parity_restriction: ParityRestriction,
}
