//! Older series representations of S1 and S2 built from the Z_k
//! coefficients and beta-function terms. Kept for cross-validation and
//! benchmarking against the eta-based forms.
//!
//! All beta factors are reduced against the reciprocal-Gamma prefactor
//! before evaluation:  1/Gamma(x) * B(l+1, x+n)  becomes
//! l! * poch(x, n) / Gamma(x+n+l+1)  and  1/Gamma(x) * B(x, y)  collapses
//! via Gamma(x)/Gamma(x) = 1, so no term ever divides by a vanishing
//! Gamma value.

use num_complex::Complex64;

use super::coeff::z_gamma_coeffs;
use super::engine::sum_shells;
use super::eval_new::{merge, rgol_array};
use super::{EvalConfig, SeriesValue, TriplePoint};
use crate::complexfn::{g_small, gamma, recip_gamma};
use crate::error::{EvalError, Result};
use crate::singular::{guard, FunctionId};

/// Factorials 0!..=len-1 as f64 (len kept below the overflow point).
fn factorials(len: usize) -> Vec<f64> {
    let mut f = Vec::with_capacity(len);
    let mut acc = 1.0f64;
    f.push(1.0);
    for i in 1..len {
        acc *= i as f64;
        f.push(acc);
    }
    f
}

/// ln(k!) for k = 0..len-1.
fn ln_factorials(len: usize) -> Vec<f64> {
    let mut f = Vec::with_capacity(len);
    let mut acc = 0.0f64;
    f.push(0.0);
    for i in 1..len {
        acc += (i as f64).ln();
        f.push(acc);
    }
    f
}

/// Rising factorial x(x+1)...(x+n-1) for n = 0..len-1.
fn pochhammers(x: Complex64, len: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    let mut acc = Complex64::new(1.0, 0.0);
    for n in 0..len {
        out.push(acc);
        acc *= x + n as f64;
    }
    out
}

/// 1/Gamma(x + q + 1) for q = 0..len-1.
fn recip_gamma_shifted(x: Complex64, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|q| recip_gamma(x + (q as f64 + 1.0)))
        .collect()
}

fn check_order(cfg: &EvalConfig) -> Result<()> {
    if cfg.max_order > 160 {
        return Err(EvalError::Domain(format!(
            "legacy representation caps max_order at 160 (got {}): factorial terms overflow",
            cfg.max_order
        )));
    }
    Ok(())
}

/// S1(s,t,u) via the Z_k/beta representation (seven infinite series plus
/// the 1/beta(u, s+t-1) boundary term).
pub fn eval_s1_legacy(p: &TriplePoint, cfg: &EvalConfig) -> Result<SeriesValue> {
    p.check_finite()?;
    cfg.validate()?;
    check_order(cfg)?;
    guard(p, FunctionId::S1, cfg.singular_proximity)?;
    let (s, t, u) = (p.s, p.t, p.u);
    let nc = cfg.max_order + 1;
    let zs = z_gamma_coeffs(s, nc);
    let zt = z_gamma_coeffs(t, nc);
    let zu = z_gamma_coeffs(u, nc);
    let rg_s = recip_gamma(s);
    let rg_t = recip_gamma(t);
    let rgol_u = rgol_array(u, nc);
    let fact = factorials(nc);
    let lnf = ln_factorials(2 * nc + 2);
    let poch_s = pochhammers(s, nc);
    let poch_t = pochhammers(t, nc);
    let poch_u = pochhammers(u, nc);
    let rg1_s = recip_gamma_shifted(s, 2 * nc);
    let rg1_t = recip_gamma_shifted(t, 2 * nc);
    let g = g_small(s, t, u);
    let tol = cfg.tol / (8.0 * g.norm().max(1.0));

    // B(u, s+t-1)/Gamma(u) folded: Gamma(s+t-1)/Gamma(s+t+u-1)
    let boundary = rg_s * rg_t * gamma(s + t - 1.0)? * recip_gamma(s + t + u - 2.0 + 1.0);

    // triple series with B(n+1, l+m+1) = n!(l+m)!/(n+l+m+1)!
    let fam_a = sum_shells(
        3,
        |l, m, n| {
            let b = (lnf[n as usize] + lnf[(l + m) as usize] - lnf[(n + l + m + 1) as usize]).exp();
            zs[l as usize] * zt[m as usize] * zu[n as usize] * b
        },
        cfg,
        tol,
    )?;
    // Z_l(s) Z_m(t) / (u + l + m), paired through 1/Gamma(u)
    let fam_b = sum_shells(
        2,
        |l, m, _| zs[l as usize] * zt[m as usize] * rgol_u[(l + m) as usize],
        cfg,
        tol,
    )?;
    // Z_l(s) Z_n(u) B(l+1, t+n): folded to l! poch(t,n) / Gamma(t+n+l+1)
    let fam_c = sum_shells(
        2,
        |l, n, _| {
            zs[l as usize]
                * zu[n as usize]
                * fact[l as usize]
                * poch_t[n as usize]
                * rg1_t[(n + l) as usize]
        },
        cfg,
        tol,
    )?;
    // Z_m(t) Z_n(u) B(m+1, s+n)
    let fam_d = sum_shells(
        2,
        |m, n, _| {
            zt[m as usize]
                * zu[n as usize]
                * fact[m as usize]
                * poch_s[n as usize]
                * rg1_s[(n + m) as usize]
        },
        cfg,
        tol,
    )?;
    // Z_n(u) / (s+t+n-1): the true-singular denominators
    let w_st = rg_s * rg_t;
    let fam_e = sum_shells(
        1,
        |n, _, _| w_st * zu[n as usize] / (s + t + n as f64 - 1.0),
        cfg,
        tol,
    )?;
    // Z_l(s) B(t, u+l): folded to poch(u,l) / Gamma(t+u+l)
    let fam_f = sum_shells(
        1,
        |l, _, _| zs[l as usize] * poch_u[l as usize] * recip_gamma(t + u + l as f64),
        cfg,
        tol,
    )?;
    // Z_m(t) B(s, u+m)
    let fam_g = sum_shells(
        1,
        |m, _, _| zt[m as usize] * poch_u[m as usize] * recip_gamma(s + u + m as f64),
        cfg,
        tol,
    )?;

    let mut bracket = merge(&[fam_a, fam_b, fam_c, fam_d, fam_e, fam_f, fam_g]);
    bracket.value += boundary;
    bracket.terms_used += 1;
    let value = g * bracket.value;
    Ok(SeriesValue {
        value,
        err_estimate: g.norm() * bracket.err_estimate + value.norm() * f64::EPSILON,
        ..bracket
    })
}

/// S2(s,t,u) via the Z_k/beta representation.
pub fn eval_s2_legacy(p: &TriplePoint, cfg: &EvalConfig) -> Result<SeriesValue> {
    p.check_finite()?;
    cfg.validate()?;
    check_order(cfg)?;
    guard(p, FunctionId::S2, cfg.singular_proximity)?;
    let (s, t, u) = (p.s, p.t, p.u);
    let nc = cfg.max_order + 1;
    let zs = z_gamma_coeffs(s, nc);
    let zt = z_gamma_coeffs(t, nc);
    let zu = z_gamma_coeffs(u, nc);
    let rg_s = recip_gamma(s);
    let rg_t = recip_gamma(t);
    let rg_u = recip_gamma(u);
    let fact = factorials(2 * nc);
    let rg1_s = recip_gamma_shifted(s, 2 * nc);
    let rg1_t = recip_gamma_shifted(t, 2 * nc);
    let rg1_u = recip_gamma_shifted(u, 2 * nc);
    let g = g_small(s, t, u);
    let tol = cfg.tol / (8.0 * g.norm().max(1.0));

    let boundary = rg_s * rg_t * rg_u / (s + t + u - 2.0);

    let fam_a = sum_shells(
        3,
        |l, m, n| {
            zs[l as usize] * zt[m as usize] * zu[n as usize] / (l + m + n + 1) as f64
        },
        cfg,
        tol,
    )?;
    // Z_l(s) Z_m(t) B(u, l+m+1): folded to (l+m)! / Gamma(u+l+m+1)
    let fam_b1 = sum_shells(
        2,
        |l, m, _| zs[l as usize] * zt[m as usize] * fact[(l + m) as usize] * rg1_u[(l + m) as usize],
        cfg,
        tol,
    )?;
    let fam_b2 = sum_shells(
        2,
        |m, n, _| zt[m as usize] * zu[n as usize] * fact[(m + n) as usize] * rg1_s[(m + n) as usize],
        cfg,
        tol,
    )?;
    let fam_b3 = sum_shells(
        2,
        |n, l, _| zu[n as usize] * zs[l as usize] * fact[(n + l) as usize] * rg1_t[(n + l) as usize],
        cfg,
        tol,
    )?;
    // Z_l(s) B(l+1, t+u-1): folded to l! Gamma(t+u-1) / Gamma(t+u+l)
    let g_tu = gamma(t + u - 1.0)?;
    let w1 = rg_t * rg_u * g_tu;
    let fam_c1 = sum_shells(
        1,
        |l, _, _| w1 * zs[l as usize] * fact[l as usize] * recip_gamma(t + u + l as f64),
        cfg,
        tol,
    )?;
    let g_us = gamma(u + s - 1.0)?;
    let w2 = rg_u * rg_s * g_us;
    let fam_c2 = sum_shells(
        1,
        |m, _, _| w2 * zt[m as usize] * fact[m as usize] * recip_gamma(u + s + m as f64),
        cfg,
        tol,
    )?;
    let g_st = gamma(s + t - 1.0)?;
    let w3 = rg_s * rg_t * g_st;
    let fam_c3 = sum_shells(
        1,
        |n, _, _| w3 * zu[n as usize] * fact[n as usize] * recip_gamma(s + t + n as f64),
        cfg,
        tol,
    )?;

    let mut bracket = merge(&[fam_a, fam_b1, fam_b2, fam_b3, fam_c1, fam_c2, fam_c3]);
    bracket.value += boundary;
    bracket.terms_used += 1;
    let value = g * bracket.value;
    Ok(SeriesValue {
        value,
        err_estimate: g.norm() * bracket.err_estimate + value.norm() * f64::EPSILON,
        ..bracket
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{eval_s1, eval_s2};

    fn p(s: f64, t: f64, u: f64) -> TriplePoint {
        TriplePoint::from_re(s, t, u)
    }

    /// Fixed-seed pseudo-random grid with components in [-2.5, 3],
    /// rejecting points within 0.1 of any singular hyperplane of S1/S2
    /// or of a non-positive integer gamma argument combination.
    fn grid(count: usize) -> Vec<TriplePoint> {
        let mut state = 0x243f_6a88_85a3_08d3u64; // fixed seed
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 5.5 - 2.5
        };
        let mut out = Vec::new();
        while out.len() < count {
            let q = p(next(), next(), next());
            let ok = [q.s + q.t, q.t + q.u, q.u + q.s]
                .iter()
                .all(|z| (z.re - z.re.round()).abs() > 0.1 || z.re.round() > 1.0)
                && (q.s.re + q.t.re + q.u.re - 2.0).abs() > 0.1;
            if ok {
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn representation_agreement_s1() {
        let cfg = EvalConfig::with_tol(1e-11);
        for q in grid(20) {
            let a = eval_s1(&q, &cfg).unwrap();
            let b = eval_s1_legacy(&q, &cfg).unwrap();
            let tol = 1e-9f64.max(10.0 * cfg.tol) * (1.0 + a.value.norm());
            assert!(
                (a.value - b.value).norm() <= tol,
                "S1 mismatch at {q:?}: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn representation_agreement_s2() {
        let cfg = EvalConfig::with_tol(1e-11);
        for q in grid(20) {
            let a = eval_s2(&q, &cfg).unwrap();
            let b = eval_s2_legacy(&q, &cfg).unwrap();
            let tol = 1e-9f64.max(10.0 * cfg.tol) * (1.0 + a.value.norm());
            assert!(
                (a.value - b.value).norm() <= tol,
                "S2 mismatch at {q:?}: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn legacy_singular_rejection() {
        let cfg = EvalConfig::default();
        assert!(matches!(
            eval_s1_legacy(&p(-1.0, 1.0, 2.5), &cfg),
            Err(EvalError::SingularPoint(_))
        ));
    }

    #[test]
    fn legacy_order_cap() {
        let mut cfg = EvalConfig::default();
        cfg.max_order = 200;
        assert!(matches!(
            eval_s1_legacy(&p(2.0, 2.0, 2.0), &cfg),
            Err(EvalError::Domain(_))
        ));
    }
}
