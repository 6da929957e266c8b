use std::ffi::{CStr, CString};
use std::ptr;

use tlj_ffi::*;

unsafe fn approx(s: *const TljScalar) -> (f64, f64) {
    let (mut re, mut im) = (0.0, 0.0);
    assert_eq!(tlj_scalar_approx(s, &mut re, &mut im), TljStatus::Ok);
    (re, im)
}

#[test]
fn unknot_bracket_is_loop_value() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(tlj_context_root(16, 1, &mut ctx), TljStatus::Ok);
        let mut b = ptr::null_mut();
        assert_eq!(tlj_braid_new(1, ptr::null(), 0, &mut b), TljStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(tlj_bracket(ctx, b, &mut s), TljStatus::Ok);
        let (re, im) = approx(s);
        assert!((re + 2f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12, "{re} {im}");
        tlj_scalar_free(s);
        tlj_braid_free(b);
        tlj_context_free(ctx);
    }
}

#[test]
fn trefoil_jones_json() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(tlj_context_generic(&mut ctx), TljStatus::Ok);
        let word = [1, 1, 1];
        let mut b = ptr::null_mut();
        assert_eq!(tlj_braid_new(2, word.as_ptr(), 3, &mut b), TljStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(tlj_jones(ctx, b, &mut s), TljStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(tlj_scalar_to_json(s, &mut out), TljStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(out).to_str().unwrap()).unwrap();
        assert_eq!(v["kind"], "rational_function");
        let mut num: Vec<(i64, i64)> = v["numerator"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| (t[0].as_i64().unwrap(), t[1].as_i64().unwrap()))
            .collect();
        num.sort();
        assert_eq!(num, vec![(-16, -1), (-12, 1), (-4, 1)]);
        tlj_string_free(out);
        tlj_scalar_free(s);
        tlj_braid_free(b);
        tlj_context_free(ctx);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let word = [5];
        let mut b = ptr::null_mut();
        assert_eq!(tlj_braid_new(2, word.as_ptr(), 1, &mut b), TljStatus::IndexOutOfRange);
        assert!(b.is_null());
        assert!(!tlj_last_error_message().is_null());

        assert_eq!(tlj_context_generic(ptr::null_mut()), TljStatus::NullPointer);
        assert!(!tlj_last_error_message().is_null());

        let mut ctx = ptr::null_mut();
        assert_eq!(tlj_context_root(16, 1, &mut ctx), TljStatus::Ok);
        assert!(tlj_last_error_message().is_null());
        let mut s = ptr::null_mut();
        assert_eq!(tlj_jw_trace(ctx, 4, &mut s), TljStatus::ChebyshevRoot);
        tlj_context_free(ctx);

        let mut m = ptr::null_mut();
        let bad = CString::new("7r").unwrap();
        assert_eq!(tlj_modular_data_new(4, bad.as_ptr(), 1, &mut m), TljStatus::Parse);
        let invalid = [0xffu8, 0];
        assert_eq!(tlj_modular_data_new(4, invalid.as_ptr().cast(), 1, &mut m), TljStatus::InvalidUtf8);
        assert_eq!(tlj_annular_irrep_total(4, true, &mut 0), TljStatus::Unsupported);
    }
}

#[test]
fn modular_data_and_surgery() {
    unsafe {
        let class = CString::new("4r").unwrap();
        let mut m = ptr::null_mut();
        assert_eq!(tlj_modular_data_new(5, class.as_ptr(), 1, &mut m), TljStatus::Ok);
        let mut rank = 0;
        assert_eq!(tlj_modular_rank(m, &mut rank), TljStatus::Ok);
        assert_eq!(rank, 4);
        let mut s = ptr::null_mut();
        assert_eq!(tlj_modular_s_tilde(m, 0, 0, &mut s), TljStatus::Ok);
        assert_eq!(approx(s), (1.0, 0.0));
        tlj_scalar_free(s);
        assert_eq!(tlj_modular_s_tilde(m, 4, 0, &mut s), TljStatus::IndexOutOfRange);

        // genus 2, no punctures: a sum over labels of (S_00/S_0i)^2
        let mut dim = 0;
        assert_eq!(tlj_verlinde_dim(m, 2, ptr::null(), 0, &mut dim), TljStatus::Ok);
        assert_eq!(dim, 20);

        let rt = |framing: i64| {
            let link =
                CString::new(format!(r#"{{"strands":1,"word":[],"components":[{{"framing":{framing}}}]}}"#)).unwrap();
            let mut z = ptr::null_mut();
            assert_eq!(tlj_rt_invariant(m, link.as_ptr(), &mut z), TljStatus::Ok);
            let v = approx(z);
            tlj_scalar_free(z);
            v
        };
        // S^1 x S^2 gives 1, S^3 gives 1/D
        let (re, im) = rt(0);
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
        let total: f64 = (1..=4).map(|k| ((k as f64) * std::f64::consts::PI / 5.0).sin().powi(2)).sum::<f64>()
            / (std::f64::consts::PI / 5.0).sin().powi(2);
        for f in [1, -1] {
            let (re, im) = rt(f);
            assert!((re - 1.0 / total.sqrt()).abs() < 1e-12 && im.abs() < 1e-12, "{f}: {re} {im}");
        }
        let bad = CString::new("{").unwrap();
        let mut z = ptr::null_mut();
        assert_eq!(tlj_rt_invariant(m, bad.as_ptr(), &mut z), TljStatus::Parse);
        tlj_modular_data_free(m);
    }
}

#[test]
fn annular_totals() {
    for (level, total) in [(1, 4), (2, 9), (3, 16)] {
        for plus in [true, false] {
            let mut n = 0;
            let st = unsafe { tlj_annular_irrep_total(level, plus, &mut n) };
            assert_eq!(st, TljStatus::Ok);
            assert_eq!(n, total, "level {level} plus {plus}");
        }
    }
}
