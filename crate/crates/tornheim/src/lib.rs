//! Numerical evaluation of the Tornheim double series
//! T(s,t,u) = sum_{m,n>=1} m^{-s} n^{-t} (m+n)^{-u} for complex
//! arguments, through rapidly convergent series for the symmetric
//! combinations S1-S4 and linear recombination identities, with an
//! independent direct-sum oracle, singularity classification, and
//! diagonal residue extraction.

pub mod bench;
pub mod complexfn;
pub mod error;
pub mod oracle;
pub mod selftest;
pub mod series;
pub mod singular;
pub mod tornheim;

#[cfg(test)]
mod testutil;

pub use error::{EvalError, Result};
pub use oracle::{oracle_t, OracleResult};
pub use series::{
    eval_s1, eval_s1_legacy, eval_s2, eval_s2_legacy, eval_s3, eval_s4, EvalConfig, SeriesValue,
    TriplePoint,
};
pub use singular::{classify, min_singular_distance, FunctionId, SingularityReport};
pub use bench::{run_bench, BenchReport, BenchRow};
pub use tornheim::{
    eval_t, eval_t_diag, residue_diag, residue_diag_with_radius, scan_diag_poles, DiagPole,
    DiagResidue, Evaluation, Identity, Method,
};
