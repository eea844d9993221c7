//! Trig-weighted Gamma kernels, generalized binomials, and the prefactors
//! shared by the series representations.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::{cos_half_pi, gamma, recip_gamma, sin_half_pi};
use crate::error::{EvalError, Result};

/// Generalized binomial C(k-s, k) as the polynomial product
/// prod_{j=1}^{k} (j-s)/j. Exact 1 for k = 0; no spurious poles at
/// positive integer s.
pub fn binom_poly(k: u32, s: Complex64) -> Complex64 {
    let mut p = Complex64::new(1.0, 0.0);
    for j in 1..=k {
        p *= (j as f64 - s) / j as f64;
    }
    p
}

fn two_pi_pow(s: Complex64) -> Complex64 {
    (s * (2.0 * PI).ln()).exp()
}

/// Distance from z to the nearest odd integer >= 1 (the zeros of
/// Gamma_cos on the positive axis).
pub fn dist_to_pos_odd(z: Complex64) -> f64 {
    let mut n = 2.0 * (z.re / 2.0 - 0.5).round() + 1.0;
    if n < 1.0 {
        n = 1.0;
    }
    (z - n).norm()
}

/// Distance from z to the nearest even integer >= 2 (the zeros of
/// Gamma_sin on the positive axis).
pub fn dist_to_pos_even(z: Complex64) -> f64 {
    let mut n = 2.0 * (z.re / 2.0).round();
    if n < 2.0 {
        n = 2.0;
    }
    (z - n).norm()
}

/// Gamma_cos(s) = 2 Gamma(s) (2 pi)^{-s} cos(pi s / 2).
///
/// For Re s < 0.5 this is computed through the reflection form
/// pi (2 pi)^{-s} / (sin(pi s / 2) Gamma(1-s)), which evaluates the
/// pole-against-zero cancellation at negative odd integers exactly and
/// exposes the genuine poles (non-positive even integers).
pub fn gamma_cos(s: Complex64) -> Result<Complex64> {
    if s.re >= 0.5 {
        Ok(2.0 * gamma(s)? * two_pi_pow(-s) * cos_half_pi(s))
    } else {
        let den = sin_half_pi(s);
        if den.norm() < 1e-12 {
            return Err(EvalError::Pole {
                what: "Gamma_cos",
                distance: den.norm(),
            });
        }
        Ok(PI * two_pi_pow(-s) * recip_gamma(Complex64::new(1.0, 0.0) - s) / den)
    }
}

/// Gamma_sin(s) = 2 Gamma(s) (2 pi)^{-s} sin(pi s / 2); reflection form
/// pi (2 pi)^{-s} / (cos(pi s / 2) Gamma(1-s)) for Re s < 0.5. Genuine
/// poles sit at the negative odd integers.
pub fn gamma_sin(s: Complex64) -> Result<Complex64> {
    if s.re >= 0.5 {
        Ok(2.0 * gamma(s)? * two_pi_pow(-s) * sin_half_pi(s))
    } else {
        let den = cos_half_pi(s);
        if den.norm() < 1e-12 {
            return Err(EvalError::Pole {
                what: "Gamma_sin",
                distance: den.norm(),
            });
        }
        Ok(PI * two_pi_pow(-s) * recip_gamma(Complex64::new(1.0, 0.0) - s) / den)
    }
}

/// 1/Gamma_cos(s). Exact zeros at non-positive even integers; poles only
/// at positive odd integers (flagged).
pub fn recip_gamma_cos(s: Complex64) -> Result<Complex64> {
    if s.re >= 0.5 {
        let d = dist_to_pos_odd(s);
        if d < 1e-12 {
            return Err(EvalError::Pole {
                what: "1/Gamma_cos",
                distance: d,
            });
        }
        Ok(two_pi_pow(s) / (2.0 * gamma(s)? * cos_half_pi(s)))
    } else {
        Ok(two_pi_pow(s) * sin_half_pi(s) * gamma(Complex64::new(1.0, 0.0) - s)? / PI)
    }
}

/// 1/Gamma_sin(s). Exact zeros at negative odd integers; poles only at
/// positive even integers (flagged).
pub fn recip_gamma_sin(s: Complex64) -> Result<Complex64> {
    if s.re >= 0.5 {
        let d = dist_to_pos_even(s);
        if d < 1e-12 {
            return Err(EvalError::Pole {
                what: "1/Gamma_sin",
                distance: d,
            });
        }
        Ok(two_pi_pow(s) / (2.0 * gamma(s)? * sin_half_pi(s)))
    } else {
        Ok(two_pi_pow(s) * cos_half_pi(s) * gamma(Complex64::new(1.0, 0.0) - s)? / PI)
    }
}

/// sin(pi w / 2) / w, stable through w = 0.
fn sin_half_ratio(w: Complex64) -> Complex64 {
    if w.norm() < 1e-7 {
        let x = w * PI / 2.0;
        (PI / 2.0) * (1.0 - x * x / 6.0)
    } else {
        (w * PI / 2.0).sin() / w
    }
}

/// The analytic function 1/(Gamma_cos(u) (u + n)) for even n >= 0: the
/// simple pole at u = -n is canceled exactly by the zero of 1/Gamma_cos.
pub fn recip_gamma_cos_over_linear(u: Complex64, n: u32) -> Result<Complex64> {
    debug_assert!(n % 2 == 0);
    let w = u + n as f64;
    if w.norm() > 0.5 {
        Ok(recip_gamma_cos(u)? / w)
    } else {
        // sin_half_pi(u) reduces to +/- sin(pi w / 2) around the even
        // integer -n
        let sign = if (n as i64 / 2) % 2 == 0 { 1.0 } else { -1.0 };
        Ok(two_pi_pow(u) * sign * sin_half_ratio(w) * gamma(Complex64::new(1.0, 0.0) - u)? / PI)
    }
}

/// The analytic function 1/(Gamma_sin(s) (s + m)) for odd m >= 1.
pub fn recip_gamma_sin_over_linear(s: Complex64, m: u32) -> Result<Complex64> {
    debug_assert!(m % 2 == 1);
    let w = s + m as f64;
    if w.norm() > 0.5 {
        Ok(recip_gamma_sin(s)? / w)
    } else {
        // cos_half_pi(s) reduces to +/- sin(pi w / 2) around the odd
        // integer -m; the sign follows the quadrant of -m
        let sign = if (-(m as i64)).rem_euclid(4) == 3 { 1.0 } else { -1.0 };
        Ok(two_pi_pow(s) * sign * sin_half_ratio(w) * gamma(Complex64::new(1.0, 0.0) - s)? / PI)
    }
}

/// beta_recip(x, y) = 1/B(x, y) = Gamma(x+y) / (Gamma(x) Gamma(y)).
pub fn beta_recip(x: Complex64, y: Complex64) -> Result<Complex64> {
    // polynomial form when one argument is a positive integer:
    // 1/B(x, p) = prod_{j=0}^{p-1} (x + j) / (p-1)!
    for (a, b) in [(x, y), (y, x)] {
        let p = b.re.round();
        if p >= 1.0 && (b - p).norm() < 1e-12 {
            let p = p as u32;
            let mut num = Complex64::new(1.0, 0.0);
            let mut fact = 1.0f64;
            for j in 0..p {
                num *= a + j as f64;
                if j > 0 {
                    fact *= j as f64;
                }
            }
            return Ok(num / fact);
        }
    }
    let rx = recip_gamma(x);
    let ry = recip_gamma(y);
    match gamma(x + y) {
        Ok(g) => Ok(g * rx * ry),
        Err(e) => {
            if rx.norm() == 0.0 || ry.norm() == 0.0 {
                // 0 * infinity with no integer structure to exploit
                Err(e)
            } else {
                Err(e)
            }
        }
    }
}

/// g(s,t,u) = e^{-pi i (s+t+u)/2} (2 pi)^{s+t+u}, the scalar part of the
/// S1/S2 prefactor.
pub fn g_small(s: Complex64, t: Complex64, u: Complex64) -> Complex64 {
    let w = s + t + u;
    (Complex64::new(0.0, -PI / 2.0) * w).exp() * two_pi_pow(w)
}

/// G(s,t,u) = g(s,t,u) / (Gamma(s) Gamma(t) Gamma(u)), entire.
pub fn g_prefactor(s: Complex64, t: Complex64, u: Complex64) -> Complex64 {
    g_small(s, t, u) * recip_gamma(s) * recip_gamma(t) * recip_gamma(u)
}

/// G_ccc(s,t,u) = 4 / (Gamma_cos(s) Gamma_cos(t) Gamma_cos(u)).
pub fn g_ccc(s: Complex64, t: Complex64, u: Complex64) -> Result<Complex64> {
    Ok(4.0 * recip_gamma_cos(s)? * recip_gamma_cos(t)? * recip_gamma_cos(u)?)
}

/// G_ssc(s,t,u) = 4 / (Gamma_sin(s) Gamma_sin(t) Gamma_cos(u)).
pub fn g_ssc(s: Complex64, t: Complex64, u: Complex64) -> Result<Complex64> {
    Ok(4.0 * recip_gamma_sin(s)? * recip_gamma_sin(t)? * recip_gamma_cos(u)?)
}
