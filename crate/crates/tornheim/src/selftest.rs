//! Self-check suites shared by the CLI `selftest` command and the test
//! harness: functional equations, Taylor expansions, an oracle-vs-series
//! grid, recombination identity agreement, and the coefficient tail
//! bound.

use num_complex::Complex64;

use crate::complexfn::zeta_minus_one;
use crate::error::Result;
use crate::oracle::{check_cos_sin_fe, check_hurwitz_taylor, check_periodic_fe, oracle_t};
use crate::series::{EvalConfig, TriplePoint};
use crate::tornheim::{eval_t, Identity, Method};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn suite(name: &'static str, outcome: std::result::Result<String, String>) -> SuiteResult {
    match outcome {
        Ok(detail) => SuiteResult {
            name,
            passed: true,
            detail,
        },
        Err(detail) => SuiteResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// Fixed-seed pseudo-random points with all real parts in [lo, hi].
pub fn seeded_points(count: usize, lo: f64, hi: f64, seed: u64) -> Vec<TriplePoint> {
    let mut state = seed;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        lo + ((state >> 11) as f64 / (1u64 << 53) as f64) * (hi - lo)
    };
    (0..count)
        .map(|_| TriplePoint::from_re(next(), next(), next()))
        .collect()
}

/// Functional-equation grid (periodic and cos/sin split), threshold 1e-8.
pub fn functional_equation_suite() -> SuiteResult {
    let run = || -> std::result::Result<String, String> {
        let mut worst = 0.0f64;
        for &sv in &[1.5, 2.4, 3.3, 4.0] {
            for &a in &[0.1, 0.25, 0.5, 0.75, 0.9] {
                let s = Complex64::new(sv, 0.0);
                let d = check_periodic_fe(s, a).map_err(|e| e.to_string())?;
                worst = worst.max(d);
                let (dc, ds) = check_cos_sin_fe(s, a).map_err(|e| e.to_string())?;
                worst = worst.max(dc).max(ds);
                if worst > 1e-8 {
                    return Err(format!("deviation {worst:.3e} at s={sv}, a={a}"));
                }
            }
        }
        Ok(format!("worst deviation {worst:.3e}"))
    };
    suite("functional-equations", run())
}

/// Hurwitz Taylor-expansion identities, threshold 1e-8.
pub fn taylor_suite() -> SuiteResult {
    let run = || -> std::result::Result<String, String> {
        let mut worst = 0.0f64;
        for &s in &[
            Complex64::new(2.3, 0.0),
            Complex64::new(-1.7, 0.0),
            Complex64::new(3.6, 1.1),
        ] {
            for &a in &[0.1, 0.25, 0.4, 0.45] {
                let (d1, d2) = check_hurwitz_taylor(s, a).map_err(|e| e.to_string())?;
                worst = worst.max(d1).max(d2);
                if worst > 1e-8 {
                    return Err(format!("deviation {worst:.3e} at s={s}, a={a}"));
                }
            }
        }
        Ok(format!("worst deviation {worst:.3e}"))
    };
    suite("hurwitz-taylor", run())
}

/// Series evaluation against the direct-sum oracle on a fixed-seed grid
/// with real parts in [1.5, 3].
pub fn oracle_grid_suite<F>(eval: F) -> SuiteResult
where
    F: Fn(&TriplePoint) -> Result<Complex64>,
{
    let run = || -> std::result::Result<String, String> {
        let mut worst = 0.0f64;
        for q in seeded_points(6, 1.5, 3.0, 0x9e3779b97f4a7c15) {
            let want = oracle_t(&q, 3000).map_err(|e| e.to_string())?;
            let got = eval(&q).map_err(|e| e.to_string())?;
            let diff = (got - want.value).norm();
            let allow = want.tail_bound + 1e-8;
            worst = worst.max(diff);
            if diff > allow {
                return Err(format!("diff {diff:.3e} > {allow:.3e} at {q:?}"));
            }
        }
        Ok(format!("worst diff {worst:.3e}"))
    };
    suite("oracle-grid", run())
}

/// The two prefactor-free recombinations agree, and the phase-weighted
/// ones agree with them where well-conditioned.
pub fn identity_suite() -> SuiteResult {
    let cfg = EvalConfig::default();
    let run = || -> std::result::Result<String, String> {
        let mut worst = 0.0f64;
        for q in seeded_points(3, 1.6, 2.9, 0x243f6a8885a308d3) {
            let base = eval_t(&q, &cfg, Method::Fixed(Identity::III))
                .map_err(|e| e.to_string())?
                .result
                .value;
            for id in Identity::ALL {
                match eval_t(&q, &cfg, Method::Fixed(id)) {
                    Ok(v) => {
                        let d = (v.result.value - base).norm() / base.norm().max(1.0);
                        worst = worst.max(d);
                        if d > 1e-8 {
                            return Err(format!("{} off by {d:.3e} at {q:?}", id.label()));
                        }
                    }
                    Err(crate::error::EvalError::PrefactorZero { .. }) => {}
                    Err(e) => return Err(format!("{} failed: {e}", id.label())),
                }
            }
        }
        Ok(format!("worst relative spread {worst:.3e}"))
    };
    suite("recombination-identities", run())
}

/// |zeta(k+1-sigma) - 1| <= 2^{sigma-k} for integer sigma in [-3,3],
/// sigma+2 <= k <= 60.
pub fn coefficient_bound_suite() -> SuiteResult {
    let run = || -> std::result::Result<String, String> {
        for sigma in -3i32..=3 {
            for k in (sigma + 2).max(1)..=60 {
                let arg = Complex64::new((k + 1 - sigma) as f64, 0.0);
                if arg.re <= 1.0 {
                    continue;
                }
                let v = zeta_minus_one(arg).map_err(|e| e.to_string())?.norm();
                let bound = 2f64.powi(sigma - k);
                if v > bound {
                    return Err(format!("sigma={sigma}, k={k}: {v:.3e} > {bound:.3e}"));
                }
            }
        }
        Ok("all coefficient tails within 2^{sigma-k}".into())
    };
    suite("coefficient-bound", run())
}

/// Every suite, with the standard evaluator.
pub fn run_all() -> Vec<SuiteResult> {
    let cfg = EvalConfig::default();
    vec![
        functional_equation_suite(),
        taylor_suite(),
        oracle_grid_suite(|q| eval_t(q, &cfg, Method::Auto).map(|e| e.result.value)),
        identity_suite(),
        coefficient_bound_suite(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for s in run_all() {
            assert!(s.passed, "{}: {}", s.name, s.detail);
        }
    }

    #[test]
    fn mutation_is_detected() {
        // a small injected bias must trip the oracle comparison
        let cfg = EvalConfig::default();
        let s = oracle_grid_suite(|q| {
            eval_t(q, &cfg, Method::Auto).map(|e| e.result.value + 1e-4)
        });
        assert!(!s.passed);
    }
}
