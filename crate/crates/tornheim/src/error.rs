//! Error surface shared by all evaluation layers.

use thiserror::Error;

use crate::singular::SingularityReport;

#[derive(Debug, Clone, Error)]
pub enum EvalError {
    /// The argument sits on (or within tolerance of) a genuine pole of the
    /// requested kernel function.
    #[error("argument within {distance:.3e} of a pole of {what}")]
    Pole { what: &'static str, distance: f64 },

    /// Argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The point lies on or too close to a true-singular hyperplane.
    #[error("singular point: {}", describe_reports(.0))]
    SingularPoint(Vec<SingularityReport>),

    /// Adaptive summation hit the order cap before the shells fell below
    /// tolerance.
    #[error("series did not converge within {max_order} shells (last shell {last_shell:.3e}, tol {tol:.3e})")]
    Convergence {
        max_order: usize,
        last_shell: f64,
        tol: f64,
    },

    /// A recombination identity's left-hand prefactor is numerically zero,
    /// so T cannot be extracted from it at this point.
    #[error("recombination prefactor magnitude {magnitude:.3e} below threshold")]
    PrefactorZero { magnitude: f64 },

    /// No recombination identity is usable at the point. Off the true
    /// singular set of T this indicates a dispatcher bug.
    #[error("no recombination method available at this point")]
    MethodUnavailable,

    /// residue_diag was asked for a residue at a point that does not behave
    /// like a simple pole.
    #[error("not a simple pole: residue spread {spread:.3e} vs mean {mean:.3e}")]
    NotAPole { spread: f64, mean: f64 },

    /// Non-finite value (NaN/Inf) encountered where a finite one is required.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

fn describe_reports(reports: &[SingularityReport]) -> String {
    reports
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, EvalError>;
