//! C ABI for the Tornheim evaluator. Configuration travels through an
//! opaque handle; every call returns a status code and writes results
//! through out-pointers. All functions are panic-safe.

use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use tornheim::series::{eval_s1, eval_s2, eval_s3, eval_s4, EvalConfig, TriplePoint};
use tornheim::tornheim::{eval_t, residue_diag_with_radius, Method};
use tornheim::EvalError;

/// Call status. Zero is success; everything else names the failure class.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TornheimStatus {
    Ok = 0,
    NullPointer = 1,
    Singular = 2,
    Convergence = 3,
    Domain = 4,
    NotAPole = 5,
    Internal = 6,
}

/// Result of one evaluation.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TornheimResult {
    pub value_re: f64,
    pub value_im: f64,
    /// Estimated absolute error of the value.
    pub err: f64,
    /// Series terms consumed.
    pub terms: usize,
}

/// Opaque evaluation configuration.
pub struct TornheimConfig {
    inner: EvalConfig,
}

fn status_of(e: &EvalError) -> TornheimStatus {
    match e {
        EvalError::SingularPoint(_) | EvalError::Pole { .. } => TornheimStatus::Singular,
        EvalError::Convergence { .. } => TornheimStatus::Convergence,
        EvalError::Domain(_) | EvalError::PrefactorZero { .. } => TornheimStatus::Domain,
        EvalError::NotAPole { .. } => TornheimStatus::NotAPole,
        _ => TornheimStatus::Internal,
    }
}

/// Short static name for a status code.
#[no_mangle]
pub extern "C" fn tornheim_status_name(status: TornheimStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        TornheimStatus::Ok => b"ok\0",
        TornheimStatus::NullPointer => b"null pointer\0",
        TornheimStatus::Singular => b"singular point\0",
        TornheimStatus::Convergence => b"convergence failure\0",
        TornheimStatus::Domain => b"domain error\0",
        TornheimStatus::NotAPole => b"not a pole\0",
        TornheimStatus::Internal => b"internal error\0",
    };
    name.as_ptr() as *const c_char
}

/// New configuration with default tolerance 1e-10. Free with
/// tornheim_config_free.
#[no_mangle]
pub extern "C" fn tornheim_config_new() -> *mut TornheimConfig {
    Box::into_raw(Box::new(TornheimConfig {
        inner: EvalConfig::default(),
    }))
}

/// Release a configuration handle. A null handle is ignored.
#[no_mangle]
pub extern "C" fn tornheim_config_free(cfg: *mut TornheimConfig) {
    if !cfg.is_null() {
        drop(unsafe { Box::from_raw(cfg) });
    }
}

/// Set the target absolute tolerance. Must be positive.
#[no_mangle]
pub extern "C" fn tornheim_config_set_tol(cfg: *mut TornheimConfig, tol: f64) -> TornheimStatus {
    let Some(cfg) = (unsafe { cfg.as_mut() }) else {
        return TornheimStatus::NullPointer;
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return TornheimStatus::Domain;
    }
    cfg.inner.tol = tol;
    TornheimStatus::Ok
}

/// Cap the series order (number of coefficient shells).
#[no_mangle]
pub extern "C" fn tornheim_config_set_max_order(
    cfg: *mut TornheimConfig,
    max_order: usize,
) -> TornheimStatus {
    let Some(cfg) = (unsafe { cfg.as_mut() }) else {
        return TornheimStatus::NullPointer;
    };
    if max_order == 0 {
        return TornheimStatus::Domain;
    }
    cfg.inner.max_order = max_order;
    TornheimStatus::Ok
}

fn run_eval<F>(cfg: *const TornheimConfig, out: *mut TornheimResult, f: F) -> TornheimStatus
where
    F: FnOnce(&EvalConfig) -> tornheim::Result<(Complex64, f64, usize)>,
{
    let Some(cfg) = (unsafe { cfg.as_ref() }) else {
        return TornheimStatus::NullPointer;
    };
    let Some(out) = (unsafe { out.as_mut() }) else {
        return TornheimStatus::NullPointer;
    };
    match catch_unwind(AssertUnwindSafe(|| f(&cfg.inner))) {
        Ok(Ok((value, err, terms))) => {
            *out = TornheimResult {
                value_re: value.re,
                value_im: value.im,
                err,
                terms,
            };
            TornheimStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => TornheimStatus::Internal,
    }
}

fn point(s_re: f64, s_im: f64, t_re: f64, t_im: f64, u_re: f64, u_im: f64) -> TriplePoint {
    TriplePoint::new(
        Complex64::new(s_re, s_im),
        Complex64::new(t_re, t_im),
        Complex64::new(u_re, u_im),
    )
}

/// Evaluate T(s,t,u) with automatic identity selection.
#[no_mangle]
pub extern "C" fn tornheim_eval_t(
    cfg: *const TornheimConfig,
    s_re: f64,
    s_im: f64,
    t_re: f64,
    t_im: f64,
    u_re: f64,
    u_im: f64,
    out: *mut TornheimResult,
) -> TornheimStatus {
    let p = point(s_re, s_im, t_re, t_im, u_re, u_im);
    run_eval(cfg, out, |c| {
        eval_t(&p, c, Method::Auto)
            .map(|e| (e.result.value, e.result.err_estimate, e.result.terms_used))
    })
}

/// Evaluate the symmetric series S1(s,t,u).
#[no_mangle]
pub extern "C" fn tornheim_eval_s1(
    cfg: *const TornheimConfig,
    s_re: f64,
    s_im: f64,
    t_re: f64,
    t_im: f64,
    u_re: f64,
    u_im: f64,
    out: *mut TornheimResult,
) -> TornheimStatus {
    let p = point(s_re, s_im, t_re, t_im, u_re, u_im);
    run_eval(cfg, out, |c| {
        eval_s1(&p, c).map(|v| (v.value, v.err_estimate, v.terms_used))
    })
}

/// Evaluate the symmetric series S2(s,t,u).
#[no_mangle]
pub extern "C" fn tornheim_eval_s2(
    cfg: *const TornheimConfig,
    s_re: f64,
    s_im: f64,
    t_re: f64,
    t_im: f64,
    u_re: f64,
    u_im: f64,
    out: *mut TornheimResult,
) -> TornheimStatus {
    let p = point(s_re, s_im, t_re, t_im, u_re, u_im);
    run_eval(cfg, out, |c| {
        eval_s2(&p, c).map(|v| (v.value, v.err_estimate, v.terms_used))
    })
}

/// Evaluate the symmetric series S3(s,t,u).
#[no_mangle]
pub extern "C" fn tornheim_eval_s3(
    cfg: *const TornheimConfig,
    s_re: f64,
    s_im: f64,
    t_re: f64,
    t_im: f64,
    u_re: f64,
    u_im: f64,
    out: *mut TornheimResult,
) -> TornheimStatus {
    let p = point(s_re, s_im, t_re, t_im, u_re, u_im);
    run_eval(cfg, out, |c| {
        eval_s3(&p, c).map(|v| (v.value, v.err_estimate, v.terms_used))
    })
}

/// Evaluate the symmetric series S4(s,t,u).
#[no_mangle]
pub extern "C" fn tornheim_eval_s4(
    cfg: *const TornheimConfig,
    s_re: f64,
    s_im: f64,
    t_re: f64,
    t_im: f64,
    u_re: f64,
    u_im: f64,
    out: *mut TornheimResult,
) -> TornheimStatus {
    let p = point(s_re, s_im, t_re, t_im, u_re, u_im);
    run_eval(cfg, out, |c| {
        eval_s4(&p, c).map(|v| (v.value, v.err_estimate, v.terms_used))
    })
}

/// Residue of s -> T(s,s,s) at s0 by a two-radius circle average with the
/// given coarse radius (0 selects the default 1e-3). Returns NotAPole when
/// the point is regular.
#[no_mangle]
pub extern "C" fn tornheim_residue_diag(
    cfg: *const TornheimConfig,
    s0_re: f64,
    s0_im: f64,
    radius: f64,
    residue_re: *mut f64,
    residue_im: *mut f64,
    spread: *mut f64,
) -> TornheimStatus {
    let Some(cfg) = (unsafe { cfg.as_ref() }) else {
        return TornheimStatus::NullPointer;
    };
    if residue_re.is_null() || residue_im.is_null() || spread.is_null() {
        return TornheimStatus::NullPointer;
    }
    let r = if radius == 0.0 { 1e-3 } else { radius };
    let s0 = Complex64::new(s0_re, s0_im);
    match catch_unwind(AssertUnwindSafe(|| {
        residue_diag_with_radius(s0, &cfg.inner, r)
    })) {
        Ok(Ok(res)) => {
            unsafe {
                *residue_re = res.value.re;
                *residue_im = res.value.im;
                *spread = res.spread;
            }
            TornheimStatus::Ok
        }
        Ok(Err(e)) => status_of(&e),
        Err(_) => TornheimStatus::Internal,
    }
}
