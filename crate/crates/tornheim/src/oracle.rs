//! Independent slow-but-sure reference computations: a direct double sum
//! for T with a rigorous tail bound, and self-checks of the Hurwitz/
//! periodic zeta machinery through classical functional equations and
//! Taylor expansions.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::complexfn::{binom_poly, gamma, gamma_cos, gamma_sin, hurwitz_zeta, riemann_zeta};
use crate::error::{EvalError, Result};
use crate::series::TriplePoint;

/// Result of the direct-sum reference evaluation.
#[derive(Debug, Clone, Copy)]
pub struct OracleResult {
    pub value: Complex64,
    /// Rigorous bound on the truncation tail (absolute).
    pub tail_bound: f64,
    pub terms: usize,
}

fn ipow(n: usize, e: Complex64) -> Complex64 {
    (-e * (n as f64).ln()).exp()
}

/// sum_{m>N} m^{-p} bounded by the integral, valid for p > 1.
fn tail_int(p: f64, n: usize) -> f64 {
    (n as f64).powf(1.0 - p) / (p - 1.0)
}

/// Direct summation of T(s,t,u) over the N x N index box, with a
/// three-region integral majorant for the tail. Requires Re u >= 0,
/// Re(s+u) > 1, Re(t+u) > 1 and Re(s+t+u) > 2 so that the majorant
/// applies; outside that region this oracle is not usable and errors.
pub fn oracle_t(p: &TriplePoint, n_box: usize) -> Result<OracleResult> {
    p.check_finite()?;
    if n_box < 2 {
        return Err(EvalError::Domain("oracle needs N >= 2".into()));
    }
    let (s, t, u) = (p.s, p.t, p.u);
    let (ss, st, su) = (s.re, t.re, u.re);
    if su < 0.0 || ss + su <= 1.0 + 1e-9 || st + su <= 1.0 + 1e-9 {
        return Err(EvalError::Domain(format!(
            "oracle tail bound needs Re u >= 0, Re(s+u) > 1, Re(t+u) > 1 (got {ss}, {st}, {su})"
        )));
    }
    // exponent split (m+n)^{-u} <= m^{-a} n^{-b} for the corner region
    let lo = (1.0 - ss).max(0.0);
    let hi = su - (1.0 - st).max(0.0);
    if hi - lo <= 1e-9 {
        return Err(EvalError::Domain(format!(
            "oracle tail bound needs Re(s+t+u) > 2 (got {})",
            ss + st + su
        )));
    }
    let a = ((st - ss + su) / 2.0).clamp(lo + 0.1 * (hi - lo), hi - 0.1 * (hi - lo));
    let b = su - a;

    let pa: Vec<Complex64> = (0..=n_box).map(|m| ipow(m.max(1), s)).collect();
    let pb: Vec<Complex64> = (0..=n_box).map(|n| ipow(n.max(1), t)).collect();
    let pc: Vec<Complex64> = (0..=2 * n_box).map(|k| ipow(k.max(1), u)).collect();

    // deterministic: per-row compensated sums, combined in index order
    let rows: Vec<Complex64> = (1..=n_box)
        .into_par_iter()
        .map(|m| {
            let mut sum = Complex64::new(0.0, 0.0);
            let mut c = Complex64::new(0.0, 0.0);
            for n in 1..=n_box {
                let x = pa[m] * pb[n] * pc[m + n] - c;
                let tacc = sum + x;
                c = (tacc - sum) - x;
                sum = tacc;
            }
            sum
        })
        .collect();
    let mut value = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for r in rows {
        let x = r - comp;
        let tacc = value + x;
        comp = (tacc - value) - x;
        value = tacc;
    }

    let s_abs_s: f64 = (1..=n_box).map(|m| (m as f64).powf(-ss)).sum();
    let s_abs_t: f64 = (1..=n_box).map(|n| (n as f64).powf(-st)).sum();
    // m > N, n <= N: (m+n)^{-Re u} <= m^{-Re u}
    let region_a = s_abs_t * tail_int(ss + su, n_box);
    let region_b = s_abs_s * tail_int(st + su, n_box);
    let region_c = tail_int(ss + a, n_box) * tail_int(st + b, n_box);
    Ok(OracleResult {
        value,
        tail_bound: 4.0 * (region_a + region_b + region_c),
        terms: n_box * n_box,
    })
}

/// Periodic zeta F(s,a) = sum_{n>=1} e^{2 pi i n a} / n^s by direct
/// summation with an Abel-summation remainder bound. Needs Re s > 0 and
/// a not an integer.
pub fn periodic_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    let sigma = s.re;
    if sigma <= 0.0 {
        return Err(EvalError::Domain(format!(
            "periodic zeta sum needs Re s > 0 (got {sigma})"
        )));
    }
    let z = Complex64::new(0.0, 2.0 * PI * a).exp();
    let denom = (Complex64::new(1.0, 0.0) - z).norm();
    if denom < 1e-9 {
        return Err(EvalError::Domain(format!(
            "periodic zeta needs a away from integers (got a = {a})"
        )));
    }
    // |tail after M| <= (2/|1-z|)(1 + |s|/Re s) M^{-Re s}
    let cbound = (2.0 / denom) * (1.0 + s.norm() / sigma);
    let m_needed = (cbound / 1e-13).powf(1.0 / sigma).ceil() as usize;
    let m = m_needed.clamp(64, 20_000_000);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut zn = Complex64::new(1.0, 0.0);
    for n in 1..=m {
        zn *= z;
        let x = zn * ipow(n, s) - comp;
        let t = sum + x;
        comp = (t - sum) - x;
        sum = t;
    }
    Ok(sum)
}

/// Relative deviation in the Hurwitz functional equation
/// zeta(1-s, a) = Gamma(s) (2 pi)^{-s} (e^{-pi i s/2} F(s,a)
///                + e^{pi i s/2} F(s,1-a)),   0 < a < 1.
pub fn check_periodic_fe(s: Complex64, a: f64) -> Result<f64> {
    if !(0.0 < a && a < 1.0) {
        return Err(EvalError::Domain(format!("need 0 < a < 1 (got {a})")));
    }
    let lhs = hurwitz_zeta(Complex64::new(1.0, 0.0) - s, a)?;
    let f1 = periodic_zeta(s, a)?;
    let f2 = periodic_zeta(s, 1.0 - a)?;
    let half_turn = Complex64::new(0.0, -PI / 2.0) * s;
    let rhs = gamma(s)?
        * (-s * (2.0 * PI).ln()).exp()
        * (half_turn.exp() * f1 + (-half_turn).exp() * f2);
    Ok((lhs - rhs).norm() / lhs.norm().max(1.0))
}

/// Relative deviations in the cosine and sine halves of the functional
/// equation:
///   sum cos(2 pi n a)/n^s = (zeta(1-s,a)+zeta(1-s,1-a)) / (2 Gamma_cos(s))
///   sum sin(2 pi n a)/n^s = (zeta(1-s,a)-zeta(1-s,1-a)) / (2 Gamma_sin(s))
pub fn check_cos_sin_fe(s: Complex64, a: f64) -> Result<(f64, f64)> {
    if !(0.0 < a && a < 1.0) {
        return Err(EvalError::Domain(format!("need 0 < a < 1 (got {a})")));
    }
    let f1 = periodic_zeta(s, a)?;
    let f2 = periodic_zeta(s, 1.0 - a)?;
    let cos_sum = (f1 + f2) / 2.0;
    let sin_sum = (f1 - f2) / Complex64::new(0.0, 2.0);
    let z1 = hurwitz_zeta(Complex64::new(1.0, 0.0) - s, a)?;
    let z2 = hurwitz_zeta(Complex64::new(1.0, 0.0) - s, 1.0 - a)?;
    let rhs_cos = (z1 + z2) / (2.0 * gamma_cos(s)?);
    let rhs_sin = (z1 - z2) / (2.0 * gamma_sin(s)?);
    Ok((
        (cos_sum - rhs_cos).norm() / rhs_cos.norm().max(1.0),
        (sin_sum - rhs_sin).norm() / rhs_sin.norm().max(1.0),
    ))
}

/// G(s, a) = sum_k C(k-s, k) zeta(1-s+k) a^k, the Taylor expansion of
/// zeta(1-s, 1-a) around a = 0, valid for |a| < 1.
fn hurwitz_taylor(s: Complex64, a: f64) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut ak = 1.0f64;
    for k in 0..400 {
        let term = binom_poly(k, s) * riemann_zeta(Complex64::new(1.0, 0.0) - s + k as f64)? * ak;
        sum += term;
        if k > 4 && term.norm() < 1e-14 * sum.norm().max(1.0) {
            return Ok(sum);
        }
        ak *= a;
    }
    Err(EvalError::Convergence {
        max_order: 400,
        last_shell: ak.abs(),
        tol: 1e-14,
    })
}

/// Relative deviations of the two Taylor identities
///   G(s, a)  = zeta(1-s, 1-a)            for |a| < 1
///   a^{s-1} + G(s, -a) = zeta(1-s, a)    for 0 < a < 1.
pub fn check_hurwitz_taylor(s: Complex64, a: f64) -> Result<(f64, f64)> {
    if !(0.0 < a && a < 1.0) {
        return Err(EvalError::Domain(format!("need 0 < a < 1 (got {a})")));
    }
    let one_minus_s = Complex64::new(1.0, 0.0) - s;
    let g1 = hurwitz_taylor(s, a)?;
    let w1 = hurwitz_zeta(one_minus_s, 1.0 - a)?;
    let g2 = ((s - 1.0) * a.ln()).exp() + hurwitz_taylor(s, -a)?;
    let w2 = hurwitz_zeta(one_minus_s, a)?;
    Ok((
        (g1 - w1).norm() / w1.norm().max(1.0),
        (g2 - w2).norm() / w2.norm().max(1.0),
    ))
}
