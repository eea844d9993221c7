//! Riemann zeta for complex arguments: alternating-series (eta function)
//! acceleration on the critical strip, Euler-Maclaurin for large real part,
//! and the symmetric functional equation for the left half-plane.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::{gamma, sin_half_pi};
use crate::error::{EvalError, Result};

/// B_2, B_4, ..., B_32.
pub const BERNOULLI_EVEN: [f64; 16] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
];

/// Euler-Maclaurin evaluation of sum_{n=start}^infty n^{-z}.
/// Requires Re z > 1 for the literal sum, but the formula continues
/// analytically and is used here for Re z >= 0.5 as a fallback.
fn em_tail_from(z: Complex64, start: u32) -> Complex64 {
    let shift = (12.0 + 0.55 * z.im.abs()).ceil() as u32;
    let m = (start + shift).max(start + 4);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in start..m {
        sum += (-z * (n as f64).ln()).exp();
    }
    let mf = m as f64;
    let m_pow = (-z * mf.ln()).exp(); // m^{-z}
    sum += m_pow * mf / (z - 1.0); // m^{1-z}/(z-1)
    sum += m_pow * 0.5;
    // Bernoulli corrections: B_{2k}/(2k)! * z(z+1)...(z+2k-2) * m^{-z-2k+1}
    let mut poch = z; // rising factorial z(z+1)...
    let mut fact = 1.0f64;
    let mut m_dec = m_pow / mf; // m^{-z-1}
    let mut prev_mag = f64::INFINITY;
    for (k, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2 * (k + 1);
        fact *= ((two_k - 1) * two_k) as f64;
        let term = poch * m_dec * (b / fact); // m^{-z-2k+1}
        let mag = term.norm();
        sum += term;
        if mag < 1e-18 * sum.norm().max(1e-300) || mag > prev_mag {
            break;
        }
        prev_mag = mag;
        poch *= (z + (two_k - 1) as f64) * (z + two_k as f64);
        m_dec /= mf * mf;
    }
    sum
}

/// Borwein's algorithm 2 for eta(z)/(1 - 2^{1-z}), valid (and used) for
/// 0.5 <= Re z < 2 away from the zeros of 1 - 2^{1-z}.
fn borwein_zeta(z: Complex64) -> Complex64 {
    let n = ((14.0 + 0.69 * z.im.abs()) * 1.32).ceil() as usize + 6;
    // d_k = n * sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = vec![0.0f64; n + 1];
    let mut term = 1.0f64; // i = 0: (n-1)!/(n)! * n = 1 -> track t_i with d contributions
    // t_i = (n+i-1)! 4^i / ((n-i)! (2i)!); t_0 = (n-1)!/n! = 1/n, times n -> 1
    let mut acc = 1.0f64;
    d[0] = 1.0;
    for i in 1..=n {
        // t_i / t_{i-1} = (n+i-1)(n-i+1) * 4 / ((2i-1)(2i))
        term *= 4.0 * ((n + i - 1) as f64) * ((n - i + 1) as f64)
            / (((2 * i - 1) * (2 * i)) as f64);
        acc += term;
        d[i] = acc;
    }
    let dn = d[n];
    let mut s = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for (k, &dk) in d.iter().enumerate().take(n) {
        s += sign * (dk - dn) * (-z * ((k + 1) as f64).ln()).exp();
        sign = -sign;
    }
    let denom = Complex64::new(1.0, 0.0) - (Complex64::new(2.0, 0.0)).powc(1.0 - z);
    -s / (dn * denom)
}

/// Riemann zeta(z).
pub fn riemann_zeta(z: Complex64) -> Result<Complex64> {
    let d1 = (z - 1.0).norm();
    if d1 < 1e-12 {
        return Err(EvalError::Pole {
            what: "zeta",
            distance: d1,
        });
    }
    if z.re >= 2.0 {
        return Ok(Complex64::new(1.0, 0.0) + em_tail_from(z, 2));
    }
    if z.re >= 0.5 {
        let denom = Complex64::new(1.0, 0.0) - Complex64::new(2.0, 0.0).powc(1.0 - z);
        if denom.norm() < 1e-3 {
            return Ok(em_tail_from(z, 1));
        }
        return Ok(borwein_zeta(z));
    }
    // near z = 0 the reflection runs through the pole of zeta(1-z);
    // Euler-Maclaurin continues analytically there
    if z.norm() < 0.5 {
        return Ok(em_tail_from(z, 1));
    }
    // functional equation: zeta(z) = 2^z pi^{z-1} sin(pi z/2) Gamma(1-z) zeta(1-z)
    let w = Complex64::new(1.0, 0.0) - z;
    let zeta_w = riemann_zeta(w)?;
    let g = gamma(w)?;
    Ok(Complex64::new(2.0, 0.0).powc(z) * Complex64::new(PI, 0.0).powc(z - 1.0)
        * sin_half_pi(z)
        * g
        * zeta_w)
}

/// zeta(z) - 1, computed without cancellation for Re z >= 2 by summing the
/// tail from n = 2 directly (Euler-Maclaurin corrected).
pub fn zeta_minus_one(z: Complex64) -> Result<Complex64> {
    let d1 = (z - 1.0).norm();
    if d1 < 1e-12 {
        return Err(EvalError::Pole {
            what: "zeta",
            distance: d1,
        });
    }
    if z.re >= 2.0 {
        Ok(em_tail_from(z, 2))
    } else {
        Ok(riemann_zeta(z)? - 1.0)
    }
}
