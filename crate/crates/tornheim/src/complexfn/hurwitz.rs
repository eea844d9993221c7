//! Hurwitz zeta via Euler-Maclaurin summation.

use num_complex::Complex64;

use super::zeta::BERNOULLI_EVEN;
use crate::error::{EvalError, Result};

/// zeta(z, a) = sum_{n>=0} (n+a)^{-z} for a > 0, continued in z with the
/// single pole at z = 1.
pub fn hurwitz_zeta(z: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(EvalError::Domain(format!("hurwitz parameter a = {a} must be > 0")));
    }
    let d1 = (z - 1.0).norm();
    if d1 < 1e-12 {
        return Err(EvalError::Pole {
            what: "hurwitz_zeta",
            distance: d1,
        });
    }
    let m = (12.0 + 0.55 * z.im.abs()).ceil() as u32;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..m {
        sum += (-z * (n as f64 + a).ln()).exp();
    }
    let base = m as f64 + a;
    let b_pow = (-z * base.ln()).exp(); // (m+a)^{-z}
    sum += b_pow * base / (z - 1.0);
    sum += b_pow * 0.5;
    let mut poch = z;
    let mut fact = 1.0f64;
    let mut dec = b_pow / base; // (m+a)^{-z-1}
    let mut prev_mag = f64::INFINITY;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2 * (k + 1);
        fact *= ((two_k - 1) * two_k) as f64;
        let term = poch * dec * (b / fact);
        let mag = term.norm();
        sum += term;
        if mag < 1e-17 * sum.norm().max(1e-300) || mag > prev_mag {
            break;
        }
        prev_mag = mag;
        poch *= (z + (two_k - 1) as f64) * (z + two_k as f64);
        dec /= base * base;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexfn::riemann_zeta;
    use crate::testutil::assert_close;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Bernoulli polynomial B_n(x) from the binomial expansion; oracle for
    /// zeta(-n, a) = -B_{n+1}(a)/(n+1).
    fn bernoulli_poly(n: usize, x: f64) -> f64 {
        // B_0..B_17 (odd > 1 are zero)
        let b: [f64; 18] = [
            1.0,
            -0.5,
            1.0 / 6.0,
            0.0,
            -1.0 / 30.0,
            0.0,
            1.0 / 42.0,
            0.0,
            -1.0 / 30.0,
            0.0,
            5.0 / 66.0,
            0.0,
            -691.0 / 2730.0,
            0.0,
            7.0 / 6.0,
            0.0,
            -3617.0 / 510.0,
            0.0,
        ];
        let mut binom = 1.0f64;
        let mut acc = 0.0f64;
        for k in 0..=n {
            acc += binom * b[k] * x.powi((n - k) as i32);
            binom *= (n - k) as f64 / (k + 1) as f64;
        }
        acc
    }

    #[test]
    fn reduces_to_riemann_at_a_one() {
        let z = c(3.0, 0.0);
        assert_close(
            hurwitz_zeta(z, 1.0).unwrap(),
            riemann_zeta(z).unwrap(),
            1e-13,
        );
    }

    #[test]
    fn half_parameter_closed_form() {
        // zeta(2, 1/2) = sum (n+1/2)^{-2} = pi^2/2
        assert_close(hurwitz_zeta(c(2.0, 0.0), 0.5).unwrap(), c(PI * PI / 2.0, 0.0), 1e-12);
    }

    #[test]
    fn negative_integer_bernoulli_oracle() {
        for &(n, a) in &[(1u32, 0.25), (2, 0.7), (4, 0.25), (5, 1.3)] {
            let got = hurwitz_zeta(c(-(n as f64), 0.0), a).unwrap();
            // tolerance limited by cancellation against ~1e4-magnitude
            // partial sums at negative integer z
            let want = -bernoulli_poly(n as usize + 1, a) / (n as f64 + 1.0);
            assert_close(got, c(want, 0.0), 5e-9);
        }
    }

    #[test]
    fn shift_recurrence() {
        // zeta(z,a) = a^{-z} + zeta(z, a+1)
        for &(re, im, a) in &[
            (2.5, 0.0, 0.3),
            (-1.7, 1.1, 0.8),
            (0.4, -2.0, 0.5),
            (3.0, 20.0, 1.4),
        ] {
            let z = c(re, im);
            let lhs = hurwitz_zeta(z, a).unwrap();
            let rhs = (-z * a.ln()).exp() + hurwitz_zeta(z, a + 1.0).unwrap();
            let scale = lhs.norm().max(1.0);
            assert!((lhs - rhs).norm() / scale < 1e-11, "shift at z={z}, a={a}");
        }
    }

    #[test]
    fn rejects_bad_parameter() {
        assert!(matches!(
            hurwitz_zeta(c(2.0, 0.0), 0.0),
            Err(EvalError::Domain(_))
        ));
        assert!(hurwitz_zeta(c(1.0, 0.0), 0.5).is_err());
    }
}
