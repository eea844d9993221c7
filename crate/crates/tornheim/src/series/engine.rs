//! Shared adaptive truncation engine: shell-wise summation over index
//! tuples with sum l+m+n = 0, 1, 2, ... and a geometric-tail error
//! majorant.

use num_complex::Complex64;

use super::{EvalConfig, SeriesValue};
use crate::error::{EvalError, Result};

/// Compensated complex accumulator (Kahan).
#[derive(Default, Clone, Copy)]
pub(crate) struct Kahan {
    sum: Complex64,
    c: Complex64,
}

impl Kahan {
    pub fn add(&mut self, x: Complex64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> Complex64 {
        self.sum
    }
}

/// Sum `term` over index tuples of the given dimension (1, 2 or 3),
/// grouped into shells of constant index sum. Within a shell the order is
/// lexicographic. Stops once three consecutive shells each contribute less
/// than tol/8 in magnitude; the error estimate is eight times the last
/// shell magnitude (geometric majorant with ratio <= 1/2, justified by the
/// 2^{-k} coefficient decay).
pub fn sum_shells<F>(dim: usize, mut term: F, cfg: &EvalConfig, tol: f64) -> Result<SeriesValue>
where
    F: FnMut(u32, u32, u32) -> Complex64,
{
    assert!((1..=3).contains(&dim));
    let mut acc = Kahan::default();
    let mut terms = 0usize;
    let mut small_streak = 0u32;
    let mut last_shell = 0.0f64;
    for h in 0..=cfg.max_order {
        let h = h as u32;
        let mut shell_mag = 0.0f64;
        match dim {
            1 => {
                let v = term(h, 0, 0);
                shell_mag += v.norm();
                acc.add(v);
                terms += 1;
            }
            2 => {
                for i in 0..=h {
                    let v = term(i, h - i, 0);
                    shell_mag += v.norm();
                    acc.add(v);
                    terms += 1;
                }
            }
            _ => {
                for i in 0..=h {
                    for j in 0..=(h - i) {
                        let v = term(i, j, h - i - j);
                        shell_mag += v.norm();
                        acc.add(v);
                        terms += 1;
                    }
                }
            }
        }
        last_shell = shell_mag;
        if shell_mag < tol / 8.0 {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(SeriesValue {
                    value: acc.value(),
                    err_estimate: shell_mag * 8.0,
                    terms_used: terms,
                    max_order: h as usize,
                    converged: true,
                });
            }
        } else {
            small_streak = 0;
        }
    }
    Err(EvalError::Convergence {
        max_order: cfg.max_order,
        last_shell,
        tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::assert_close;

    #[test]
    fn zero_term_function() {
        let cfg = EvalConfig::default();
        let r = sum_shells(3, |_, _, _| Complex64::new(0.0, 0.0), &cfg, 1e-10).unwrap();
        assert_eq!(r.value, Complex64::new(0.0, 0.0));
        assert!(r.converged);
        assert_eq!(r.max_order, 2);
    }

    #[test]
    fn triple_geometric_closed_form() {
        // sum over l,m,n >= 0 of 2^{-(l+m+n)} = (sum 2^{-k})^3 = 8
        let cfg = EvalConfig::default();
        let r = sum_shells(
            3,
            |l, m, n| Complex64::new(2f64.powi(-((l + m + n) as i32)), 0.0),
            &cfg,
            1e-12,
        )
        .unwrap();
        assert_close(r.value, Complex64::new(8.0, 0.0), 1e-12);
        assert!(r.converged && r.err_estimate <= 1e-12);
    }

    #[test]
    fn one_and_two_dim_geometric() {
        let cfg = EvalConfig::default();
        let r1 = sum_shells(1, |l, _, _| Complex64::new(3f64.powi(-(l as i32)), 0.0), &cfg, 1e-12)
            .unwrap();
        assert_close(r1.value, Complex64::new(1.5, 0.0), 1e-12);
        let r2 = sum_shells(
            2,
            |l, m, _| Complex64::new(2f64.powi(-((l + m) as i32)), 0.0),
            &cfg,
            1e-12,
        )
        .unwrap();
        assert_close(r2.value, Complex64::new(4.0, 0.0), 1e-12);
        assert!(r2.terms_used >= 1);
    }

    #[test]
    fn convergence_error_at_cap() {
        let mut cfg = EvalConfig::default();
        cfg.max_order = 8;
        let r = sum_shells(1, |_, _, _| Complex64::new(1.0, 0.0), &cfg, 1e-10);
        assert!(matches!(r, Err(EvalError::Convergence { .. })));
    }

    #[test]
    fn err_estimate_covers_true_tail() {
        // geometric ratio exactly 1/2: true tail after stopping is
        // bounded by the majorant
        let cfg = EvalConfig::default();
        let r = sum_shells(1, |l, _, _| Complex64::new(2f64.powi(-(l as i32)), 0.0), &cfg, 1e-9)
            .unwrap();
        let true_err = (2.0 - r.value.re).abs();
        assert!(true_err <= r.err_estimate);
    }
}
