//! The Tornheim double series T(s,t,u), recovered by recombining the
//! symmetric functions S1-S4 through eight linear identities with
//! exponential-phase coefficients, plus an automatic identity dispatcher,
//! diagonal helpers, and residue extraction on the diagonal.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::complexfn::{dist_to_pos_even, dist_to_pos_odd};
use crate::error::{EvalError, Result};
use crate::series::{eval_s1, eval_s2, eval_s3, eval_s4, EvalConfig, SeriesValue, TriplePoint};
use crate::singular::{guard, min_singular_distance, FunctionId};

pub use crate::singular::SingularityReport;

/// Minimum magnitude of a recombination prefactor for the identity to be
/// numerically invertible.
pub const PREFACTOR_FLOOR: f64 = 1e-8;

/// Residue magnitudes below this are treated as zero (no pole).
pub const RESIDUE_FLOOR: f64 = 1e-7;

/// The eight recombination identities expressing T in terms of S1-S4 at
/// permuted arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::I,
        Identity::II,
        Identity::III,
        Identity::IV,
        Identity::V,
        Identity::VI,
        Identity::VII,
        Identity::VIII,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Identity::I => "recombination-i",
            Identity::II => "recombination-ii",
            Identity::III => "recombination-iii",
            Identity::IV => "recombination-iv",
            Identity::V => "recombination-v",
            Identity::VI => "recombination-vi",
            Identity::VII => "recombination-vii",
            Identity::VIII => "recombination-viii",
        }
    }
}

/// How to evaluate T: a fixed identity, or automatic selection with a
/// circle-average fallback at exceptional points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Auto,
    Fixed(Identity),
}

/// An evaluation result together with the method that produced it.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub result: SeriesValue,
    pub method: &'static str,
}

fn phase(z: Complex64) -> Complex64 {
    (Complex64::new(0.0, -PI) * z).exp()
}

/// One weighted component on the right-hand side of an identity.
type Part = (Complex64, FunctionId, TriplePoint);

/// Prefactor c and parts such that c * T(p) = sum of coef * F(q).
fn plan(p: &TriplePoint, id: Identity) -> (Complex64, Vec<Part>) {
    let one = Complex64::new(1.0, 0.0);
    let (s, t, u) = (p.s, p.t, p.u);
    let (a, b, g) = (phase(s), phase(t), phase(u));
    let p0 = *p;
    let p_ust = TriplePoint::new(u, s, t);
    let p_tus = TriplePoint::new(t, u, s);
    match id {
        Identity::I => (
            (one - a * a) * (one - b * b) * (a * b * g - one),
            vec![
                (a * a * b * b - one, FunctionId::S1, p0),
                (a * (one - b * b), FunctionId::S1, p_ust),
                (b * (one - a * a), FunctionId::S1, p_tus),
            ],
        ),
        Identity::II => (
            (one - a * a) * (one - b * b) * (a * b - g),
            vec![
                (a * a * b * b - one, FunctionId::S2, p0),
                (b * (one - a * a), FunctionId::S1, p_ust),
                (a * (one - b * b), FunctionId::S1, p_tus),
            ],
        ),
        Identity::III => (
            Complex64::new(2.0, 0.0),
            vec![(one, FunctionId::S3, p0), (-one, FunctionId::S4, p0)],
        ),
        Identity::IV => (
            (one - a) * (one - b) * (one + g),
            vec![
                ((one + g) * (one + a * b), FunctionId::S3, p0),
                (-one, FunctionId::S1, p_ust),
                (-one, FunctionId::S1, p_tus),
            ],
        ),
        Identity::V => (
            (one + a) * (one + b) * (one + g),
            vec![
                (-(one + g) * (one + a * b), FunctionId::S4, p0),
                (one, FunctionId::S1, p_ust),
                (one, FunctionId::S1, p_tus),
            ],
        ),
        Identity::VI => (
            (one - a) * (one - b) * (one + g),
            vec![
                (one, FunctionId::S1, p0),
                (one, FunctionId::S2, p0),
                (-(a + b) * (one + g), FunctionId::S3, p0),
            ],
        ),
        Identity::VII => (
            (one + a) * (one + b) * (one + g),
            vec![
                (one, FunctionId::S1, p0),
                (one, FunctionId::S2, p0),
                (-(a + b) * (one + g), FunctionId::S4, p0),
            ],
        ),
        Identity::VIII => (
            Complex64::new(2.0, 0.0),
            vec![
                (one, FunctionId::S4, p_ust),
                (one, FunctionId::S4, p_tus),
            ],
        ),
    }
}

fn eval_component(f: FunctionId, q: &TriplePoint, cfg: &EvalConfig) -> Result<SeriesValue> {
    match f {
        FunctionId::S1 => eval_s1(q, cfg),
        FunctionId::S2 => eval_s2(q, cfg),
        FunctionId::S3 => eval_s3(q, cfg),
        FunctionId::S4 => eval_s4(q, cfg),
        FunctionId::T => unreachable!("identities recombine S-functions only"),
    }
}

/// Distance from `q` to the nearest point where `f` is singular or its
/// trig-Gamma prefactor has a pole.
fn component_distance(f: FunctionId, q: &TriplePoint) -> f64 {
    let d = min_singular_distance(q, f);
    match f {
        FunctionId::S3 => d
            .min(dist_to_pos_odd(q.s))
            .min(dist_to_pos_odd(q.t))
            .min(dist_to_pos_odd(q.u)),
        FunctionId::S4 => d
            .min(dist_to_pos_even(q.s))
            .min(dist_to_pos_even(q.t))
            .min(dist_to_pos_odd(q.u)),
        _ => d,
    }
}

/// Evaluate T(p) through one fixed identity.
fn recombine(p: &TriplePoint, id: Identity, cfg: &EvalConfig) -> Result<SeriesValue> {
    let (c, parts) = plan(p, id);
    if c.norm() < PREFACTOR_FLOOR {
        return Err(EvalError::PrefactorZero { magnitude: c.norm() });
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut terms = 0;
    let mut order = 0;
    let mut converged = true;
    for (coef, f, q) in &parts {
        let v = eval_component(*f, q, cfg)?;
        let contrib = coef * v.value;
        value += contrib;
        err += coef.norm() * v.err_estimate + contrib.norm() * f64::EPSILON;
        terms += v.terms_used;
        order = order.max(v.max_order);
        converged &= v.converged;
    }
    let t_val = value / c;
    Ok(SeriesValue {
        value: t_val,
        err_estimate: err / c.norm() + t_val.norm() * f64::EPSILON,
        terms_used: terms,
        max_order: order,
        converged,
    })
}

/// Identity selection: score each usable identity by prefactor magnitude
/// and the distance of its components from their singular sets, then try
/// them best-first. Identities (iii) and (viii) win ties since they need
/// no prefactor division.
fn dispatch(p: &TriplePoint, cfg: &EvalConfig, allow_fallback: bool) -> Result<Evaluation> {
    const PREFERRED: [Identity; 8] = [
        Identity::III,
        Identity::VIII,
        Identity::I,
        Identity::II,
        Identity::IV,
        Identity::V,
        Identity::VI,
        Identity::VII,
    ];
    let mut scored: Vec<(f64, Identity)> = PREFERRED
        .iter()
        .filter_map(|&id| {
            let (c, parts) = plan(p, id);
            if c.norm() < PREFACTOR_FLOOR {
                return None;
            }
            let d = parts
                .iter()
                .map(|(_, f, q)| component_distance(*f, q))
                .fold(f64::INFINITY, f64::min);
            if d <= cfg.singular_proximity {
                return None;
            }
            Some(((d.min(0.05) / 0.05) * c.norm().min(1.0), id))
        })
        .collect();
    scored.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
    let mut last_err = EvalError::MethodUnavailable;
    for (_, id) in scored {
        match recombine(p, id, cfg) {
            Ok(result) => {
                return Ok(Evaluation {
                    result,
                    method: id.label(),
                })
            }
            Err(e) => last_err = e,
        }
    }
    if allow_fallback {
        return circle_average(p, cfg);
    }
    Err(last_err)
}

/// Fallback for exceptional points where every identity degenerates
/// (phase prefactors vanish or components are singular): average T over a
/// small circle of simultaneous argument shifts. By the mean-value
/// property the K-point average equals T(p) up to the K-th Taylor tail,
/// which is negligible for the radius chosen here.
fn circle_average(p: &TriplePoint, cfg: &EvalConfig) -> Result<Evaluation> {
    let d = min_singular_distance(p, FunctionId::T);
    if d < 0.1 {
        return Err(EvalError::MethodUnavailable);
    }
    let r = 0.02f64.min(d / 30.0);
    const K: usize = 16;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut terms = 0;
    let mut order = 0;
    let mut converged = true;
    let mut max_norm = 0.0f64;
    for j in 0..K {
        let theta = (j as f64 + 0.5) * 2.0 * PI / K as f64;
        let w = Complex64::from_polar(r, theta);
        let q = TriplePoint::new(p.s + w, p.t + w, p.u + w);
        let ev = dispatch(&q, cfg, false)?;
        sum += ev.result.value;
        err += ev.result.err_estimate;
        terms += ev.result.terms_used;
        order = order.max(ev.result.max_order);
        converged &= ev.result.converged;
        max_norm = max_norm.max(ev.result.value.norm());
    }
    let mean = sum / K as f64;
    // simultaneous shifts move each singular linear form by at most 3|w|
    let taylor_tail = max_norm * (3.0 * r / d).powi(K as i32);
    Ok(Evaluation {
        result: SeriesValue {
            value: mean,
            err_estimate: err / K as f64 + taylor_tail + mean.norm() * f64::EPSILON,
            terms_used: terms,
            max_order: order,
            converged,
        },
        method: "circle-average",
    })
}

/// T(s,t,u) off its true singularities t+u in Z<=1, u+s in Z<=1 and
/// s+t+u = 2.
pub fn eval_t(p: &TriplePoint, cfg: &EvalConfig, method: Method) -> Result<Evaluation> {
    p.check_finite()?;
    cfg.validate()?;
    guard(p, FunctionId::T, cfg.singular_proximity)?;
    match method {
        Method::Fixed(id) => recombine(p, id, cfg).map(|result| Evaluation {
            result,
            method: id.label(),
        }),
        Method::Auto => dispatch(p, cfg, true),
    }
}

/// T on the diagonal s = t = u.
pub fn eval_t_diag(s: Complex64, cfg: &EvalConfig) -> Result<Evaluation> {
    eval_t(&TriplePoint::new(s, s, s), cfg, Method::Auto)
}

/// A confirmed simple-pole residue of z -> T(z,z,z).
#[derive(Debug, Clone, Copy)]
pub struct DiagResidue {
    pub value: Complex64,
    /// Disagreement between the two extraction radii.
    pub spread: f64,
}

/// Residue of z -> T(z,z,z) at z = s0 by discrete contour integration:
/// an 8-point circle average of T(z)(z - s0) at two radii. The two
/// estimates must agree to three digits and clear RESIDUE_FLOOR,
/// otherwise the point is not treated as a pole.
pub fn residue_diag(s0: Complex64, cfg: &EvalConfig) -> Result<DiagResidue> {
    residue_diag_with_radius(s0, cfg, 1e-3)
}

/// residue_diag with an explicit coarse radius; the fine radius is a
/// tenth of it.
pub fn residue_diag_with_radius(s0: Complex64, cfg: &EvalConfig, radius: f64) -> Result<DiagResidue> {
    if !(radius > 1e-5 && radius < 0.05) {
        return Err(EvalError::Domain(format!(
            "residue radius {radius} outside (1e-5, 0.05)"
        )));
    }
    let estimate = |r: f64| -> Result<Complex64> {
        const K: usize = 8;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..K {
            let theta = (j as f64 + 0.5) * 2.0 * PI / K as f64;
            let w = Complex64::from_polar(r, theta);
            acc += eval_t_diag(s0 + w, cfg)?.result.value * w;
        }
        Ok(acc / K as f64)
    };
    let coarse = estimate(radius)?;
    let fine = estimate(radius / 10.0)?;
    let mean = (coarse + fine) / 2.0;
    let spread = (coarse - fine).norm();
    if mean.norm() < RESIDUE_FLOOR || spread > 1e-2 * mean.norm() {
        return Err(EvalError::NotAPole {
            spread,
            mean: mean.norm(),
        });
    }
    Ok(DiagResidue {
        value: fine,
        spread,
    })
}

/// A confirmed simple pole of s -> T(s,s,s) on the real axis.
#[derive(Debug, Clone)]
pub struct DiagPole {
    pub location: f64,
    pub residue: Complex64,
    /// Two-radius disagreement of the residue estimate.
    pub spread: f64,
}

/// Scan the real diagonal on [min, max] with the given grid step, flag
/// candidate pole locations (evaluation refusals and large interior local
/// maxima of |T|), snap them to the admissible diagonal pole set
/// (half-integers <= 1/2 and the plane crossing 2/3), and keep only the
/// candidates whose residue survives a two-radius consistency check.
pub fn scan_diag_poles(
    min: f64,
    max: f64,
    step: f64,
    radius: f64,
    cfg: &EvalConfig,
) -> Result<Vec<DiagPole>> {
    use rayon::prelude::*;
    if !(step > 0.0 && max > min) {
        return Err(EvalError::Domain("need max > min and step > 0".into()));
    }
    let n = ((max - min) / step).round() as usize;
    let xs: Vec<f64> = (0..=n).map(|j| min + j as f64 * step).collect();
    let mags: Vec<Option<f64>> = xs
        .par_iter()
        .map(|&x| {
            eval_t(&TriplePoint::from_re(x, x, x), cfg, Method::Auto)
                .ok()
                .map(|v| v.result.value.norm())
        })
        .collect();
    let mut anchors: Vec<f64> = Vec::new();
    let mut h = (2.0 * (max + 1.0)).floor() / 2.0;
    while h >= min - 1.0 {
        if h <= 0.5 {
            anchors.push(h);
        }
        h -= 0.5;
    }
    anchors.push(2.0 / 3.0);
    let mut flagged: Vec<f64> = Vec::new();
    let mut flag = |x: f64| {
        if let Some(&a) = anchors
            .iter()
            .find(|&&a| (a - x).abs() <= 2.0 * step && a > min && a < max)
        {
            if !flagged.iter().any(|&f| (f - a).abs() < 1e-9) {
                flagged.push(a);
            }
        }
    };
    for (j, m) in mags.iter().enumerate() {
        match m {
            // evaluation refused the point: it sits on a singular set
            None => flag(xs[j]),
            Some(v) => {
                if j > 0 && j + 1 < mags.len() {
                    let left = mags[j - 1].unwrap_or(f64::INFINITY);
                    let right = mags[j + 1].unwrap_or(f64::INFINITY);
                    if *v > 100.0 && *v >= left && *v >= right {
                        flag(xs[j]);
                    }
                }
            }
        }
    }
    flagged.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut hits = Vec::new();
    for s0 in flagged {
        match residue_diag_with_radius(Complex64::new(s0, 0.0), cfg, radius) {
            Ok(r) => hits.push(DiagPole {
                location: s0,
                residue: r.value,
                spread: r.spread,
            }),
            Err(EvalError::NotAPole { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexfn::riemann_zeta;
    use crate::testutil::assert_close;

    fn p(s: f64, t: f64, u: f64) -> TriplePoint {
        TriplePoint::from_re(s, t, u)
    }

    fn zeta_re(x: f64) -> Complex64 {
        riemann_zeta(Complex64::new(x, 0.0)).unwrap()
    }

    #[test]
    fn all_identities_agree() {
        let cfg = EvalConfig::default();
        let pts = [
            p(2.2, 2.4, 2.6),
            TriplePoint::new(
                Complex64::new(1.7, 0.4),
                Complex64::new(2.3, -0.2),
                Complex64::new(0.6, 0.9),
            ),
        ];
        for q in pts {
            let base = eval_t(&q, &cfg, Method::Fixed(Identity::III))
                .unwrap()
                .result
                .value;
            for id in Identity::ALL {
                let (c, _) = plan(&q, id);
                if c.norm() < 0.1 {
                    continue;
                }
                let v = eval_t(&q, &cfg, Method::Fixed(id)).unwrap().result.value;
                assert!(
                    (v - base).norm() <= 1e-8 * base.norm().max(1.0),
                    "{} at {q:?}: {v} vs {base}",
                    id.label()
                );
            }
        }
    }

    #[test]
    fn double_zeta_reduction_00s() {
        // T(0,0,s) = zeta(s-1) - zeta(s)
        let cfg = EvalConfig::default();
        for x in [3.0, 4.0] {
            let want = zeta_re(x - 1.0) - zeta_re(x);
            let got = eval_t(&p(0.0, 0.0, x), &cfg, Method::Auto).unwrap();
            assert!(
                (got.result.value - want).norm() <= 1e-9,
                "T(0,0,{x}) = {} want {want} via {}",
                got.result.value,
                got.method
            );
        }
        let z = Complex64::new(2.5, 1.3);
        let want = riemann_zeta(z - 1.0).unwrap() - riemann_zeta(z).unwrap();
        let got = eval_t(
            &TriplePoint::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), z),
            &cfg,
            Method::Auto,
        )
        .unwrap();
        assert_close(got.result.value, want, 1e-9);
    }

    #[test]
    fn witten_reduction_0ss() {
        // 2 T(0,s,s) = zeta(s)^2 - zeta(2s)
        let cfg = EvalConfig::default();
        for x in [2.5, 3.0] {
            let want = (zeta_re(x) * zeta_re(x) - zeta_re(2.0 * x)) / 2.0;
            let got = eval_t(&p(0.0, x, x), &cfg, Method::Auto).unwrap();
            assert!(
                (got.result.value - want).norm() <= 1e-9,
                "T(0,{x},{x}) = {} want {want} via {}",
                got.result.value,
                got.method
            );
        }
    }

    #[test]
    fn diagonal_limit_at_origin() {
        let cfg = EvalConfig::default();
        let v = eval_t_diag(Complex64::new(1e-6, 0.0), &cfg).unwrap();
        assert!(
            (v.result.value - Complex64::new(1.0 / 3.0, 0.0)).norm() < 1e-4,
            "T(d,d,d) near 0 = {} via {}",
            v.result.value,
            v.method
        );
    }

    #[test]
    fn diagonal_limit_zero_at_negative_integers() {
        let cfg = EvalConfig::default();
        for k in [-1.0f64, -2.0, -3.0, -4.0] {
            let a = eval_t_diag(Complex64::new(k + 1e-6, 0.0), &cfg).unwrap();
            assert!(
                a.result.value.norm() < 1e-3,
                "diagonal near {k}: {} via {}",
                a.result.value,
                a.method
            );
        }
    }

    #[test]
    fn residue_found_at_half() {
        let cfg = EvalConfig::default();
        let r = residue_diag(Complex64::new(0.5, 0.0), &cfg).unwrap();
        assert!(r.value.norm() > RESIDUE_FLOOR);
        assert!(r.spread <= 1e-2 * r.value.norm());
    }

    #[test]
    fn no_residue_at_regular_point() {
        let cfg = EvalConfig::default();
        assert!(matches!(
            residue_diag(Complex64::new(0.9, 0.0), &cfg),
            Err(EvalError::NotAPole { .. })
        ));
    }

    #[test]
    fn singular_point_rejected() {
        let cfg = EvalConfig::default();
        assert!(matches!(
            eval_t(&p(1.0, 1.0, 0.0), &cfg, Method::Auto),
            Err(EvalError::SingularPoint(_))
        ));
        assert!(matches!(
            eval_t(&p(0.5, 0.5, 1.0), &cfg, Method::Auto),
            Err(EvalError::SingularPoint(_))
        ));
    }

    #[test]
    fn prefactor_zero_reported_for_fixed_identity() {
        // at integer arguments the phase factors collapse identity (i)
        let cfg = EvalConfig::default();
        assert!(matches!(
            eval_t(&p(0.0, 0.0, 3.0), &cfg, Method::Fixed(Identity::I)),
            Err(EvalError::PrefactorZero { .. })
        ));
    }
}
