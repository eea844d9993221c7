//! Series coefficients: Z_k(s) = C(k-s,k)(zeta(k+1-s)-1) and
//! eta_k^±(s) = (±2)^{-k} C(k-s,k) zeta(k+1-s), together with the entire
//! variants that fold in 1/Gamma(s) or the trig-Gamma reciprocals so that
//! every removable pole is evaluated through its exact limit.

use num_complex::Complex64;

use crate::complexfn::{
    binom_poly, recip_gamma, recip_gamma_cos, recip_gamma_sin, riemann_zeta, sin_half_pi,
    zeta_minus_one,
};
use crate::error::Result;
use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Window around s = k inside which the zeta pole is resolved by the
/// explicit limit of binom * zeta instead of the raw product.
const LIMIT_WINDOW: f64 = 1e-8;

/// Z_k(s) = C(k-s, k) * (zeta(k+1-s) - 1). PoleError at s = k.
pub fn coeff_z(k: u32, s: Complex64) -> Result<Complex64> {
    Ok(binom_poly(k, s) * zeta_minus_one(Complex64::new(k as f64 + 1.0, 0.0) - s)?)
}

/// eta_k^±(s) = (sign*2)^{-k} C(k-s, k) zeta(k+1-s). PoleError at s = k.
pub fn coeff_eta(k: u32, s: Complex64, sign: i32) -> Result<Complex64> {
    debug_assert!(sign == 1 || sign == -1);
    let z = riemann_zeta(Complex64::new(k as f64 + 1.0, 0.0) - s)?;
    let scale = (sign as f64 * 2.0).powi(-(k as i32));
    Ok(scale * binom_poly(k, s) * z)
}

/// C(k-s,k) with the factor (k-s)/k removed: prod_{j=1}^{k-1} (j-s)/j.
fn binom_poly_minus_top(k: u32, s: Complex64) -> Complex64 {
    let mut p = Complex64::new(1.0, 0.0);
    for j in 1..k {
        p *= (j as f64 - s) / j as f64;
    }
    p
}

/// The entire function C(k-s,k) * zeta(k+1-s) for k >= 1, with the
/// removable point at s = k evaluated via
/// (w/k) P(s) (1/w + gamma + O(w)) -> P(s)/k * (1 + gamma*w),  w = k-s.
fn binom_times_zeta(k: u32, s: Complex64) -> Complex64 {
    debug_assert!(k >= 1);
    let w = Complex64::new(k as f64, 0.0) - s;
    if w.norm() < LIMIT_WINDOW {
        binom_poly_minus_top(k, s) / k as f64 * (1.0 + EULER_GAMMA * w)
    } else {
        binom_poly(k, s) * riemann_zeta(w + 1.0).expect("pole excluded by window")
    }
}

/// Same with zeta - 1; the limit at s = k only shifts the O(w) term.
fn binom_times_zeta_minus_one(k: u32, s: Complex64) -> Complex64 {
    debug_assert!(k >= 1);
    let w = Complex64::new(k as f64, 0.0) - s;
    if w.norm() < LIMIT_WINDOW {
        binom_poly_minus_top(k, s) / k as f64 * (1.0 + (EULER_GAMMA - 1.0) * w)
    } else {
        binom_poly(k, s) * zeta_minus_one(w + 1.0).expect("pole excluded by window")
    }
}

/// eta_k^+(s)/Gamma(s), entire in s. The k = 0 case zeta(1-s)/Gamma(s)
/// takes the value -1 at s = 0.
pub(crate) fn eta_gamma(k: u32, s: Complex64) -> Complex64 {
    if k == 0 {
        if s.norm() < LIMIT_WINDOW {
            // (-1/s + gamma)(s + gamma s^2 + ...) = -1 + O(s^2)
            return Complex64::new(-1.0, 0.0);
        }
        return riemann_zeta(Complex64::new(1.0, 0.0) - s).expect("pole excluded by window")
            * recip_gamma(s);
    }
    2f64.powi(-(k as i32)) * binom_times_zeta(k, s) * recip_gamma(s)
}

/// Z_k(s)/Gamma(s), entire in s.
pub(crate) fn z_gamma(k: u32, s: Complex64) -> Complex64 {
    if k == 0 {
        if s.norm() < LIMIT_WINDOW {
            return Complex64::new(-1.0, 0.0);
        }
        return zeta_minus_one(Complex64::new(1.0, 0.0) - s).expect("pole excluded by window")
            * recip_gamma(s);
    }
    binom_times_zeta_minus_one(k, s) * recip_gamma(s)
}

/// Array of eta_k^+(s)/Gamma(s) for k = 0..count-1.
pub(crate) fn eta_gamma_coeffs(s: Complex64, count: usize) -> Vec<Complex64> {
    (0..count as u32).map(|k| eta_gamma(k, s)).collect()
}

/// Array of Z_k(s)/Gamma(s) for k = 0..count-1.
pub(crate) fn z_gamma_coeffs(s: Complex64, count: usize) -> Vec<Complex64> {
    (0..count as u32).map(|k| z_gamma(k, s)).collect()
}

/// zeta(1-s) * sin(pi s/2), entire, with the 0/0 point at s = 0 resolved
/// to -pi/2.
fn zeta_times_sin_half(s: Complex64) -> Complex64 {
    if s.norm() < 1e-12 {
        Complex64::new(-PI / 2.0, 0.0)
    } else {
        riemann_zeta(Complex64::new(1.0, 0.0) - s).expect("pole excluded by window")
            * sin_half_pi(s)
    }
}

/// zeta(1-s)/Gamma_cos(s), entire off the positive odd integers; the pole
/// of zeta(1-s) at s = 0 is canceled by the zero of 1/Gamma_cos.
fn zeta_over_gamma_cos(s: Complex64) -> Result<Complex64> {
    if s.re <= 0.5 {
        // 1/Gamma_cos = (2 pi)^s sin(pi s/2) / (pi Gamma(1-s)); pair the
        // sin factor with the zeta pole
        Ok((s * (2.0 * PI).ln()).exp() * zeta_times_sin_half(s)
            * crate::complexfn::gamma(Complex64::new(1.0, 0.0) - s)?
            / PI)
    } else {
        Ok(riemann_zeta(Complex64::new(1.0, 0.0) - s)? * recip_gamma_cos(s)?)
    }
}

/// Array of eta_{2j}^+(s)/Gamma_cos(s) for j = 0..count-1 (the cosine-type
/// even-index coefficients). Errors at the positive odd integers where
/// 1/Gamma_cos diverges.
pub(crate) fn eta_cos_coeffs(s: Complex64, count: usize) -> Result<Vec<Complex64>> {
    let mut out = Vec::with_capacity(count);
    out.push(zeta_over_gamma_cos(s)?);
    if count > 1 {
        let ic = recip_gamma_cos(s)?;
        for j in 1..count as u32 {
            let k = 2 * j;
            out.push(2f64.powi(-(k as i32)) * binom_times_zeta(k, s) * ic);
        }
    }
    Ok(out)
}

/// Array of eta_{2j+1}^+(s)/Gamma_sin(s) for j = 0..count-1 (the sine-type
/// odd-index coefficients). Errors at the positive even integers.
pub(crate) fn eta_sin_coeffs(s: Complex64, count: usize) -> Result<Vec<Complex64>> {
    let is = recip_gamma_sin(s)?;
    Ok((0..count as u32)
        .map(|j| {
            let k = 2 * j + 1;
            2f64.powi(-(k as i32)) * binom_times_zeta(k, s) * is
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexfn::gamma;
    use crate::testutil::assert_close;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coeff_z_values() {
        // Z_0(-1) = zeta(2) - 1
        assert_close(
            coeff_z(0, c(-1.0, 0.0)).unwrap(),
            c(PI * PI / 6.0 - 1.0, 0.0),
            1e-13,
        );
        // pole: Z_0(0) hits zeta(1)
        assert!(coeff_z(0, c(0.0, 0.0)).is_err());
        // bound: |Z_30(0)| <= 2^{-30} * 1.01
        let v = coeff_z(30, c(0.0, 0.0)).unwrap().norm();
        assert!(v <= 2f64.powi(-30) * 1.01);
    }

    #[test]
    fn coeff_eta_values() {
        // eta_0^+(-1) = zeta(2)
        assert_close(
            coeff_eta(0, c(-1.0, 0.0), 1).unwrap(),
            c(PI * PI / 6.0, 0.0),
            1e-13,
        );
        // eta_1^-(0) = (-2)^{-1} C(1,1) zeta(2) = -pi^2/12
        assert_close(
            coeff_eta(1, c(0.0, 0.0), -1).unwrap(),
            c(-PI * PI / 12.0, 0.0),
            1e-13,
        );
        assert!(coeff_eta(2, c(2.0, 0.0), 1).is_err());
    }

    #[test]
    fn eta_vs_z_magnitude() {
        // 0 < |2^{sigma-1} eta_k^±(sigma)| < |Z_k(sigma)| for k+1-sigma > 1
        for &sigma in &[-2.0f64, 0.0, 1.5, 2.5] {
            for k in 0..=40u32 {
                if (k as f64 + 1.0 - sigma) <= 1.0 + 1e-9 {
                    continue;
                }
                let s = c(sigma, 0.0);
                let eta = coeff_eta(k, s, 1).unwrap().norm() * 2f64.powf(sigma - 1.0);
                let z = coeff_z(k, s).unwrap().norm();
                if z == 0.0 {
                    // binom factor vanished identically (integer sigma)
                    assert_eq!(eta, 0.0);
                    continue;
                }
                assert!(eta > 0.0 && eta < z, "sigma={sigma} k={k}: {eta:e} vs {z:e}");
            }
        }
    }

    #[test]
    fn entire_variants_match_quotients() {
        // away from special points the folded coefficients equal the plain
        // product with 1/Gamma
        let s = c(1.3, 0.8);
        let want = coeff_eta(4, s, 1).unwrap() * recip_gamma(s);
        assert_close(eta_gamma(4, s), want, 1e-12);
        let want = coeff_z(4, s).unwrap() * recip_gamma(s);
        assert_close(z_gamma(4, s), want, 1e-12);
    }

    #[test]
    fn removable_points_are_finite_and_continuous() {
        // s = k: coefficient-level zeta pole canceled by the binomial zero
        for &k in &[1u32, 2, 5] {
            let at = eta_gamma(k, c(k as f64, 0.0));
            let near = eta_gamma(k, c(k as f64 + 1e-6, 0.0));
            assert!(at.is_finite());
            assert!((at - near).norm() < 1e-5 * (1.0 + at.norm()), "k={k}");
            // closed-form limit: 2^{-k} (-1)^{k-1}/k * 1/(k-1)!
            let fact: f64 = (1..k).map(|j| j as f64).product();
            let want = 2f64.powi(-(k as i32)) * if k % 2 == 1 { 1.0 } else { -1.0 }
                / (k as f64 * fact);
            assert_close(at, c(want, 0.0), 1e-9);
        }
        // k = 0 at s = 0: zeta(1-s)/Gamma(s) -> -1
        assert_close(eta_gamma(0, c(0.0, 0.0)), c(-1.0, 0.0), 1e-12);
        assert_close(eta_gamma(0, c(1e-7, 0.0)), c(-1.0, 0.0), 1e-6);
        assert_close(z_gamma(0, c(0.0, 0.0)), c(-1.0, 0.0), 1e-12);
    }

    #[test]
    fn cos_sin_folded_coefficients() {
        // generic point: compare against the unfolded quotient
        let s = c(-0.7, 0.4);
        let cos_arr = eta_cos_coeffs(s, 4).unwrap();
        let sin_arr = eta_sin_coeffs(s, 4).unwrap();
        let gc = crate::complexfn::gamma_cos(s).unwrap();
        let gs = crate::complexfn::gamma_sin(s).unwrap();
        for j in 1..4u32 {
            let want = coeff_eta(2 * j, s, 1).unwrap() / gc;
            assert_close(cos_arr[j as usize], want, 1e-11);
            let want = coeff_eta(2 * j - 1, s, 1).unwrap() / gs;
            assert_close(sin_arr[(j - 1) as usize], want, 1e-11);
        }
        // zeta(1-s)/Gamma_cos(s) at s = 0: limit -1/2 * Gamma_cos'(0)
        // cancellation; direct continuity check instead of closed form
        let at = eta_cos_coeffs(c(0.0, 0.0), 1).unwrap()[0];
        let near = eta_cos_coeffs(c(1e-7, 0.0), 1).unwrap()[0];
        assert!(at.is_finite() && (at - near).norm() < 1e-5);
        // value: lim zeta(1-s)/Gamma_cos(s) = -1/2 at s=0
        assert_close(at, c(-0.5, 0.0), 1e-9);
        // pole of 1/Gamma_cos at positive odd s
        assert!(eta_cos_coeffs(c(3.0, 0.0), 4).is_err());
        // pole of 1/Gamma_sin at positive even s
        assert!(eta_sin_coeffs(c(2.0, 0.0), 4).is_err());
    }

    #[test]
    fn gamma_ratio_cross_check() {
        // eta_gamma(k,s) * Gamma(s) = coeff_eta away from poles
        let s = c(2.6, -1.1);
        let g = gamma(s).unwrap();
        assert_close(eta_gamma(3, s) * g, coeff_eta(3, s, 1).unwrap(), 1e-12);
    }
}
