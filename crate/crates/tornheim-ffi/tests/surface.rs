//! Exercises the exported C surface from Rust: handle lifecycle, status
//! codes, and out-parameter results.

use std::ffi::CStr;
use std::f64::consts::PI;

use tornheim_ffi::*;

#[test]
fn eval_t_through_handle() {
    let cfg = tornheim_config_new();
    assert!(!cfg.is_null());
    assert_eq!(tornheim_config_set_tol(cfg, 1e-11), TornheimStatus::Ok);
    let mut out = TornheimResult {
        value_re: 0.0,
        value_im: 0.0,
        err: 0.0,
        terms: 0,
    };
    let st = tornheim_eval_t(cfg, 2.0, 0.0, 2.0, 0.0, 2.0, 0.0, &mut out);
    assert_eq!(st, TornheimStatus::Ok);
    assert!((out.value_re - PI.powi(6) / 2835.0).abs() < 1e-9);
    assert!(out.value_im.abs() < 1e-9);
    assert!(out.terms > 0);
    tornheim_config_free(cfg);
}

#[test]
fn status_codes() {
    let cfg = tornheim_config_new();
    let mut out = TornheimResult {
        value_re: 0.0,
        value_im: 0.0,
        err: 0.0,
        terms: 0,
    };
    // singular point
    let st = tornheim_eval_t(cfg, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0, &mut out);
    assert_eq!(st, TornheimStatus::Singular);
    // null pointers
    assert_eq!(
        tornheim_eval_t(std::ptr::null(), 2.0, 0.0, 2.0, 0.0, 2.0, 0.0, &mut out),
        TornheimStatus::NullPointer
    );
    assert_eq!(
        tornheim_eval_t(cfg, 2.0, 0.0, 2.0, 0.0, 2.0, 0.0, std::ptr::null_mut()),
        TornheimStatus::NullPointer
    );
    // bad config values
    assert_eq!(tornheim_config_set_tol(cfg, -1.0), TornheimStatus::Domain);
    assert_eq!(
        tornheim_config_set_max_order(cfg, 0),
        TornheimStatus::Domain
    );
    let name = unsafe { CStr::from_ptr(tornheim_status_name(TornheimStatus::Singular)) };
    assert_eq!(name.to_str().unwrap(), "singular point");
    tornheim_config_free(cfg);
    tornheim_config_free(std::ptr::null_mut()); // must be a no-op
}

#[test]
fn symmetric_series_and_residue() {
    let cfg = tornheim_config_new();
    let mut a = TornheimResult {
        value_re: 0.0,
        value_im: 0.0,
        err: 0.0,
        terms: 0,
    };
    let mut b = a;
    // S1 is symmetric in its first two arguments
    assert_eq!(
        tornheim_eval_s1(cfg, 2.2, 0.3, 1.7, 0.0, 2.4, 0.0, &mut a),
        TornheimStatus::Ok
    );
    assert_eq!(
        tornheim_eval_s1(cfg, 1.7, 0.0, 2.2, 0.3, 2.4, 0.0, &mut b),
        TornheimStatus::Ok
    );
    assert!((a.value_re - b.value_re).abs() < 1e-10);
    assert!((a.value_im - b.value_im).abs() < 1e-10);
    for f in [tornheim_eval_s2, tornheim_eval_s3, tornheim_eval_s4] {
        assert_eq!(f(cfg, 2.2, 0.3, 1.7, 0.0, 2.4, 0.0, &mut a), TornheimStatus::Ok);
        assert!(a.err < 1e-8);
    }
    // residue at the diagonal pole s = 1/2, regular point gives NotAPole
    let (mut re, mut im, mut sp) = (0.0, 0.0, 0.0);
    assert_eq!(
        tornheim_residue_diag(cfg, 0.5, 0.0, 0.0, &mut re, &mut im, &mut sp),
        TornheimStatus::Ok
    );
    assert!(re < 0.0 && sp < 1e-3 * re.abs());
    assert_eq!(
        tornheim_residue_diag(cfg, 0.9, 0.0, 0.0, &mut re, &mut im, &mut sp),
        TornheimStatus::NotAPole
    );
    tornheim_config_free(cfg);
}
