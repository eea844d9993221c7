//! Evaluators for S1, S2 (eta-based triple/double/single series) and
//! S3, S4 (parity-restricted index sets with trig-Gamma prefactors).
//!
//! Every reciprocal-Gamma factor of the prefactor is folded into the
//! coefficient arrays or the linear denominators, so removable poles are
//! computed exactly and no intermediate value diverges off the declared
//! true singularities.

use num_complex::Complex64;
use std::f64::consts::LN_2;

use super::coeff::{eta_cos_coeffs, eta_gamma_coeffs, eta_sin_coeffs};
use super::engine::sum_shells;
use super::{EvalConfig, SeriesValue, TriplePoint};
use crate::complexfn::{
    g_small, recip_gamma, recip_gamma_cos, recip_gamma_cos_over_linear, recip_gamma_sin,
    recip_gamma_sin_over_linear,
};
use crate::error::Result;
use crate::singular::{guard, FunctionId};

/// 2^z for complex z.
pub(crate) fn pow2(z: Complex64) -> Complex64 {
    (z * LN_2).exp()
}

/// Array of 1/(Gamma(x)(x+N)) for N = 0..=len-1, sharing the running
/// product of linear factors across entries.
pub(crate) fn rgol_array(x: Complex64, len: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    let mut num = Complex64::new(1.0, 0.0);
    for n in 0..len {
        out.push(num * recip_gamma(x + (n as f64 + 1.0)));
        num *= x + n as f64;
    }
    out
}

/// eta^- from eta^+: eta_k^-(s) = (-1)^k eta_k^+(s).
fn alt(coeffs: &[Complex64], k: u32) -> Complex64 {
    let v = coeffs[k as usize];
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Merge family results; value is the plain sum, error estimates add.
pub(crate) fn merge(parts: &[SeriesValue]) -> SeriesValue {
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut terms = 0;
    let mut order = 0;
    let mut converged = true;
    for p in parts {
        value += p.value;
        err += p.err_estimate;
        terms += p.terms_used;
        order = order.max(p.max_order);
        converged &= p.converged;
    }
    SeriesValue {
        value,
        err_estimate: err,
        terms_used: terms,
        max_order: order,
        converged,
    }
}

/// Final assembly: scale by a constant prefactor and account for rounding.
fn finish(prefactor: Complex64, bracket: SeriesValue) -> SeriesValue {
    let value = prefactor * bracket.value;
    SeriesValue {
        value,
        err_estimate: prefactor.norm() * bracket.err_estimate + value.norm() * f64::EPSILON,
        ..bracket
    }
}

/// S1(s,t,u) off the true singularities s+t in Z<=1.
pub fn eval_s1(p: &TriplePoint, cfg: &EvalConfig) -> Result<SeriesValue> {
    p.check_finite()?;
    cfg.validate()?;
    guard(p, FunctionId::S1, cfg.singular_proximity)?;
    let (s, t, u) = (p.s, p.t, p.u);
    let nc = cfg.max_order + 1;
    let ep_s = eta_gamma_coeffs(s, nc);
    let ep_t = eta_gamma_coeffs(t, nc);
    let ep_u = eta_gamma_coeffs(u, nc);
    let rgol_s = rgol_array(s, nc);
    let rgol_t = rgol_array(t, nc);
    let rgol_u = rgol_array(u, nc);
    let rg_s = recip_gamma(s);
    let rg_t = recip_gamma(t);
    let g = g_small(s, t, u);
    let tol = cfg.tol / (6.0 * g.norm().max(1.0));

    // triple series with the parity filter kappa_{l,m,n}
    let fam_a = sum_shells(
        3,
        |l, m, n| {
            if (l + m + n) % 2 == 1 {
                return Complex64::new(0.0, 0.0);
            }
            ep_s[l as usize] * ep_t[m as usize] * alt(&ep_u, n) / (l + m + n + 1) as f64
        },
        cfg,
        tol,
    )?;
    // single series on the s+t boundary (the true-singular denominators)
    let w_st = pow2(Complex64::new(1.0, 0.0) - s - t) * rg_s * rg_t;
    let fam_b = sum_shells(
        1,
        |n, _, _| w_st * ep_u[n as usize] / (s + t + n as f64 - 1.0),
        cfg,
        tol,
    )?;
    // three double series, each paired through recip_gamma_over_linear
    let w_s = pow2(-s);
    let fam_c = sum_shells(
        2,
        |m, n, _| w_s * alt(&ep_t, m) * ep_u[n as usize] * rgol_s[(m + n) as usize],
        cfg,
        tol,
    )?;
    let w_t = pow2(-t);
    let fam_d = sum_shells(
        2,
        |l, n, _| w_t * alt(&ep_s, l) * ep_u[n as usize] * rgol_t[(l + n) as usize],
        cfg,
        tol,
    )?;
    let w_u = pow2(-u);
    let fam_e = sum_shells(
        2,
        |l, m, _| w_u * ep_s[l as usize] * ep_t[m as usize] * rgol_u[(l + m) as usize],
        cfg,
        tol,
    )?;

    Ok(finish(g, merge(&[fam_a, fam_b, fam_c, fam_d, fam_e])))
}

/// S2(s,t,u) off the true singularities s+t, t+u, u+s in Z<=1 and
/// s+t+u = 2.
pub fn eval_s2(p: &TriplePoint, cfg: &EvalConfig) -> Result<SeriesValue> {
    p.check_finite()?;
    cfg.validate()?;
    guard(p, FunctionId::S2, cfg.singular_proximity)?;
    let (s, t, u) = (p.s, p.t, p.u);
    let nc = cfg.max_order + 1;
    let ep_s = eta_gamma_coeffs(s, nc);
    let ep_t = eta_gamma_coeffs(t, nc);
    let ep_u = eta_gamma_coeffs(u, nc);
    let rgol_s = rgol_array(s, nc);
    let rgol_t = rgol_array(t, nc);
    let rgol_u = rgol_array(u, nc);
    let rg_s = recip_gamma(s);
    let rg_t = recip_gamma(t);
    let rg_u = recip_gamma(u);
    let g = g_small(s, t, u);
    let tol = cfg.tol / (7.0 * g.norm().max(1.0));

    let boundary = pow2(Complex64::new(2.0, 0.0) - s - t - u) * rg_s * rg_t * rg_u
        / (s + t + u - 2.0);

    let fam_a = sum_shells(
        3,
        |l, m, n| {
            if (l + m + n) % 2 == 1 {
                return Complex64::new(0.0, 0.0);
            }
            ep_s[l as usize] * ep_t[m as usize] * ep_u[n as usize] / (l + m + n + 1) as f64
        },
        cfg,
        tol,
    )?;
    let w_u = pow2(-u);
    let fam_b1 = sum_shells(
        2,
        |l, m, _| w_u * alt(&ep_s, l) * alt(&ep_t, m) * rgol_u[(l + m) as usize],
        cfg,
        tol,
    )?;
    let w_s = pow2(-s);
    let fam_b2 = sum_shells(
        2,
        |m, n, _| w_s * alt(&ep_t, m) * alt(&ep_u, n) * rgol_s[(m + n) as usize],
        cfg,
        tol,
    )?;
    let w_t = pow2(-t);
    let fam_b3 = sum_shells(
        2,
        |n, l, _| w_t * alt(&ep_u, n) * alt(&ep_s, l) * rgol_t[(n + l) as usize],
        cfg,
        tol,
    )?;
    let w_tu = pow2(Complex64::new(1.0, 0.0) - t - u) * rg_t * rg_u;
    let fam_c1 = sum_shells(
        1,
        |l, _, _| w_tu * alt(&ep_s, l) / (t + u + l as f64 - 1.0),
        cfg,
        tol,
    )?;
    let w_us = pow2(Complex64::new(1.0, 0.0) - u - s) * rg_u * rg_s;
    let fam_c2 = sum_shells(
        1,
        |m, _, _| w_us * alt(&ep_t, m) / (u + s + m as f64 - 1.0),
        cfg,
        tol,
    )?;
    let w_st = pow2(Complex64::new(1.0, 0.0) - s - t) * rg_s * rg_t;
    let fam_c3 = sum_shells(
        1,
        |n, _, _| w_st * alt(&ep_u, n) / (s + t + n as f64 - 1.0),
        cfg,
        tol,
    )?;

    let mut bracket = merge(&[fam_a, fam_b1, fam_b2, fam_b3, fam_c1, fam_c2, fam_c3]);
    bracket.value += boundary;
    bracket.terms_used += 1;
    Ok(finish(g, bracket))
}

/// S3(s,t,u) off the true singularities s+t, t+u, u+s in odd Z<=1 and
/// s+t+u = 2. Errors when a component sits on a positive odd integer,
/// where the cosine-Gamma prefactor diverges.
pub fn eval_s3(p: &TriplePoint, cfg: &EvalConfig) -> Result<SeriesValue> {
    p.check_finite()?;
    cfg.validate()?;
    guard(p, FunctionId::S3, cfg.singular_proximity)?;
    let (s, t, u) = (p.s, p.t, p.u);
    let nc = cfg.max_order + 1;
    let ic_s = recip_gamma_cos(s)?;
    let ic_t = recip_gamma_cos(t)?;
    let ic_u = recip_gamma_cos(u)?;
    let cc_s = eta_cos_coeffs(s, nc)?;
    let cc_t = eta_cos_coeffs(t, nc)?;
    let cc_u = eta_cos_coeffs(u, nc)?;
    let rgc = |x: Complex64, off: u32| recip_gamma_cos_over_linear(x, off).expect("checked above");
    let rgc_s: Vec<Complex64> = (0..nc as u32).map(|j| rgc(s, 2 * j)).collect();
    let rgc_t: Vec<Complex64> = (0..nc as u32).map(|j| rgc(t, 2 * j)).collect();
    let rgc_u: Vec<Complex64> = (0..nc as u32).map(|j| rgc(u, 2 * j)).collect();
    let tol = cfg.tol / 8.0;

    let boundary = 4.0 * ic_s * ic_t * ic_u * pow2(-s - t - u) / (s + t + u - 2.0);

    let fam_a = sum_shells(
        3,
        |l, m, n| {
            4.0 * cc_s[l as usize] * cc_t[m as usize] * cc_u[n as usize]
                / (2 * (l + m + n) + 1) as f64
        },
        cfg,
        tol,
    )?;
    let w_u = 4.0 * pow2(-u);
    let fam_b1 = sum_shells(
        2,
        |l, m, _| w_u * cc_s[l as usize] * cc_t[m as usize] * rgc_u[(l + m) as usize],
        cfg,
        tol,
    )?;
    let w_s = 4.0 * pow2(-s);
    let fam_b2 = sum_shells(
        2,
        |m, n, _| w_s * cc_t[m as usize] * cc_u[n as usize] * rgc_s[(m + n) as usize],
        cfg,
        tol,
    )?;
    let w_t = 4.0 * pow2(-t);
    let fam_b3 = sum_shells(
        2,
        |n, l, _| w_t * cc_u[n as usize] * cc_s[l as usize] * rgc_t[(n + l) as usize],
        cfg,
        tol,
    )?;
    let w_tu = 4.0 * pow2(-t - u) * ic_t * ic_u;
    let fam_c1 = sum_shells(
        1,
        |l, _, _| w_tu * cc_s[l as usize] / (t + u + (2 * l) as f64 - 1.0),
        cfg,
        tol,
    )?;
    let w_us = 4.0 * pow2(-u - s) * ic_u * ic_s;
    let fam_c2 = sum_shells(
        1,
        |m, _, _| w_us * cc_t[m as usize] / (u + s + (2 * m) as f64 - 1.0),
        cfg,
        tol,
    )?;
    let w_st = 4.0 * pow2(-s - t) * ic_s * ic_t;
    let fam_c3 = sum_shells(
        1,
        |n, _, _| w_st * cc_u[n as usize] / (s + t + (2 * n) as f64 - 1.0),
        cfg,
        tol,
    )?;

    let mut out = merge(&[fam_a, fam_b1, fam_b2, fam_b3, fam_c1, fam_c2, fam_c3]);
    out.value += boundary;
    out.terms_used += 1;
    out.err_estimate += out.value.norm() * f64::EPSILON;
    Ok(out)
}

/// S4(s,t,u) off the true singularities s+t in odd Z<=1, t+u and u+s in
/// even Z<=0, and s+t+u = 2. Errors when s or t sits on a positive even
/// integer or u on a positive odd integer (sine/cosine-Gamma prefactor
/// poles).
pub fn eval_s4(p: &TriplePoint, cfg: &EvalConfig) -> Result<SeriesValue> {
    p.check_finite()?;
    cfg.validate()?;
    guard(p, FunctionId::S4, cfg.singular_proximity)?;
    let (s, t, u) = (p.s, p.t, p.u);
    let nc = cfg.max_order + 1;
    let is_s = recip_gamma_sin(s)?;
    let is_t = recip_gamma_sin(t)?;
    let ic_u = recip_gamma_cos(u)?;
    let ss_s = eta_sin_coeffs(s, nc)?;
    let ss_t = eta_sin_coeffs(t, nc)?;
    let cc_u = eta_cos_coeffs(u, nc)?;
    let rgc_u2: Vec<Complex64> = (0..nc as u32)
        .map(|j| recip_gamma_cos_over_linear(u, 2 * j + 2).expect("checked above"))
        .collect();
    let rgs_s: Vec<Complex64> = (0..nc as u32)
        .map(|j| recip_gamma_sin_over_linear(s, 2 * j + 1).expect("checked above"))
        .collect();
    let rgs_t: Vec<Complex64> = (0..nc as u32)
        .map(|j| recip_gamma_sin_over_linear(t, 2 * j + 1).expect("checked above"))
        .collect();
    let tol = cfg.tol / 8.0;

    let boundary = 4.0 * is_s * is_t * ic_u * pow2(-s - t - u) / (s + t + u - 2.0);

    let fam_a = sum_shells(
        3,
        |l, m, n| {
            4.0 * ss_s[l as usize] * ss_t[m as usize] * cc_u[n as usize]
                / (2 * (l + m + n) + 3) as f64
        },
        cfg,
        tol,
    )?;
    let w_u = 4.0 * pow2(-u);
    let fam_b1 = sum_shells(
        2,
        |l, m, _| w_u * ss_s[l as usize] * ss_t[m as usize] * rgc_u2[(l + m) as usize],
        cfg,
        tol,
    )?;
    let w_s = -4.0 * pow2(-s);
    let fam_b2 = sum_shells(
        2,
        |m, n, _| w_s * ss_t[m as usize] * cc_u[n as usize] * rgs_s[(m + n) as usize],
        cfg,
        tol,
    )?;
    let w_t = -4.0 * pow2(-t);
    let fam_b3 = sum_shells(
        2,
        |n, l, _| w_t * cc_u[n as usize] * ss_s[l as usize] * rgs_t[(n + l) as usize],
        cfg,
        tol,
    )?;
    let w_tu = -4.0 * pow2(-t - u) * is_t * ic_u;
    let fam_c1 = sum_shells(
        1,
        |l, _, _| w_tu * ss_s[l as usize] / (t + u + (2 * l) as f64),
        cfg,
        tol,
    )?;
    let w_us = -4.0 * pow2(-u - s) * is_s * ic_u;
    let fam_c2 = sum_shells(
        1,
        |m, _, _| w_us * ss_t[m as usize] / (u + s + (2 * m) as f64),
        cfg,
        tol,
    )?;
    let w_st = 4.0 * pow2(-s - t) * is_s * is_t;
    let fam_c3 = sum_shells(
        1,
        |n, _, _| w_st * cc_u[n as usize] / (s + t + (2 * n) as f64 - 1.0),
        cfg,
        tol,
    )?;

    let mut out = merge(&[fam_a, fam_b1, fam_b2, fam_b3, fam_c1, fam_c2, fam_c3]);
    out.value += boundary;
    out.terms_used += 1;
    out.err_estimate += out.value.norm() * f64::EPSILON;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::EvalError;

    fn p(s: f64, t: f64, u: f64) -> TriplePoint {
        TriplePoint::from_re(s, t, u)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn s3_fully_symmetric() {
        let cfg = EvalConfig::default();
        let pts = [
            p(2.2, 2.4, 2.6),
            p(0.4, -0.7, 2.9),
            TriplePoint::new(
                Complex64::new(1.6, 0.5),
                Complex64::new(2.1, -0.3),
                Complex64::new(0.2, 0.8),
            ),
        ];
        for q in pts {
            let base = eval_s3(&q, &cfg).unwrap().value;
            let perms = [
                TriplePoint::new(q.s, q.u, q.t),
                TriplePoint::new(q.t, q.s, q.u),
                TriplePoint::new(q.t, q.u, q.s),
                TriplePoint::new(q.u, q.s, q.t),
                TriplePoint::new(q.u, q.t, q.s),
            ];
            for perm in perms {
                let v = eval_s3(&perm, &cfg).unwrap().value;
                assert!(close(v, base, 1e-10), "S3 symmetry at {q:?} vs {perm:?}");
            }
        }
    }

    #[test]
    fn s4_swap_symmetry() {
        let cfg = EvalConfig::default();
        for q in [p(2.2, 2.4, 2.6), p(-0.3, 1.45, 2.8)] {
            let a = eval_s4(&q, &cfg).unwrap().value;
            let b = eval_s4(&TriplePoint::new(q.t, q.s, q.u), &cfg).unwrap().value;
            assert!(close(a, b, 1e-10), "S4 swap at {q:?}");
        }
    }

    #[test]
    fn s1_removable_point_is_finite() {
        // s = -2 exactly: the 1/(s+m+n) denominators are paired away
        let cfg = EvalConfig::default();
        let q = p(-2.0, 2.7, 2.9);
        let v = eval_s1(&q, &cfg).unwrap();
        assert!(v.value.is_finite() && v.converged);
        // continuity across the removable point
        let v2 = eval_s1(&p(-2.0 + 1e-7, 2.7, 2.9), &cfg).unwrap();
        assert!(
            (v.value - v2.value).norm() < 1e-4 * (1.0 + v.value.norm()),
            "continuity: {} vs {}",
            v.value,
            v2.value
        );
    }

    #[test]
    fn s1_singular_point_rejected() {
        let cfg = EvalConfig::default();
        let q = p(0.5 + 1e-9, 0.5, 3.0);
        assert!(matches!(
            eval_s1(&q, &cfg),
            Err(EvalError::SingularPoint(_))
        ));
    }

    #[test]
    fn s2_singular_plane_rejected() {
        let cfg = EvalConfig::default();
        assert!(matches!(
            eval_s2(&p(0.4, 0.4, 1.2), &cfg),
            Err(EvalError::SingularPoint(_))
        ));
    }

    #[test]
    fn s3_kernel_pole_rejected() {
        let cfg = EvalConfig::default();
        assert!(eval_s3(&p(3.0, 2.2, 2.6), &cfg).is_err());
        assert!(eval_s4(&p(2.0, 2.2, 2.6), &cfg).is_err());
        assert!(eval_s4(&p(2.2, 2.4, 3.0), &cfg).is_err());
    }

    #[test]
    fn err_estimate_self_consistency() {
        // halving the tolerance moves the value by less than the looser
        // error estimate
        let q = p(1.3, 0.6, 2.1);
        let loose = eval_s1(&q, &EvalConfig::with_tol(1e-8)).unwrap();
        let tight = eval_s1(&q, &EvalConfig::with_tol(1e-12)).unwrap();
        assert!((loose.value - tight.value).norm() <= loose.err_estimate.max(1e-12));
    }
}
