//! Shared helpers for unit tests: closeness assertions and an independent
//! Stirling-series Gamma oracle.

#![cfg(test)]

use num_complex::Complex64;
use std::f64::consts::PI;

/// Assert |got - want| <= tol * max(1, |want|).
pub fn assert_close(got: Complex64, want: Complex64, tol: f64) {
    let scale = want.norm().max(1.0);
    let err = (got - want).norm();
    assert!(
        err <= tol * scale,
        "got {got}, want {want}, err {err:e} > tol {tol:e} * {scale:e}"
    );
}

/// Gamma(z) via the classical Stirling asymptotic series after shifting the
/// argument right by 20, plus reflection for the left half-plane. Entirely
/// independent of the Lanczos implementation; good to ~1e-13 relative.
pub fn stirling_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (PI * z).sin();
        return PI / (s * stirling_gamma(Complex64::new(1.0, 0.0) - z));
    }
    const SHIFT: u32 = 20;
    let w = z + SHIFT as f64;
    // ln Gamma(w) ~ (w-1/2) ln w - w + ln(2 pi)/2 + sum B_2k/(2k(2k-1) w^{2k-1})
    let coeffs = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
        -3617.0 / 122_400.0,
    ];
    let mut ln_g = (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln();
    let winv2 = 1.0 / (w * w);
    let mut wpow = 1.0 / w;
    for &c in &coeffs {
        ln_g += c * wpow;
        wpow *= winv2;
    }
    let mut g = ln_g.exp();
    // divide back the shift: Gamma(z) = Gamma(z + SHIFT) / prod_{j=0}^{SHIFT-1} (z+j)
    for j in 0..SHIFT {
        g /= z + j as f64;
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_oracle_sanity() {
        let g5 = stirling_gamma(Complex64::new(5.0, 0.0));
        assert!((g5 - Complex64::new(24.0, 0.0)).norm() < 1e-10);
        let gh = stirling_gamma(Complex64::new(0.5, 0.0));
        assert!((gh.re - PI.sqrt()).abs() < 1e-12 && gh.im.abs() < 1e-12);
    }
}
