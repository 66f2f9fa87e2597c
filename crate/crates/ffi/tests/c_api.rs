use std::ffi::{c_char, CStr, CString};
use std::ptr;

use screenq_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn take(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { screenq_string_free(p) };
    s
}

fn last_error() -> Option<String> {
    let p = screenq_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string())
}

fn new_ctx(algebra: &str, depth: u32, weight: &str, json: i32) -> Result<*mut ScreenqContext, ScreenqStatus> {
    let mut ctx = ptr::null_mut();
    let (a, w) = (cstr(algebra), cstr(weight));
    let status = unsafe { screenq_context_new(a.as_ptr(), depth, w.as_ptr(), json, &mut ctx) };
    if status == ScreenqStatus::Ok {
        Ok(ctx)
    } else {
        assert!(ctx.is_null());
        Err(status)
    }
}

#[test]
fn act_round_trip() {
    let ctx = new_ctx("sl2", 4, "generic", 0).unwrap();
    let mut out = ptr::null_mut();
    let (w, s) = (cstr("E1 F1"), cstr(""));
    let status = unsafe { screenq_act(ctx, w.as_ptr(), s.as_ptr(), &mut out) };
    assert_eq!(status, ScreenqStatus::Ok);
    assert_eq!(take(out), "(z1^-1 - z1)/(q - q^-1) · U[]\n");
    assert!(last_error().is_none());
    unsafe { screenq_context_free(ctx) };
}

#[test]
fn bad_algebra_sets_message() {
    assert_eq!(new_ctx("bogus", 4, "generic", 0).unwrap_err(), ScreenqStatus::Config);
    assert!(last_error().unwrap().contains("bogus"));
    assert_eq!(new_ctx("sl2", 0, "generic", 0).unwrap_err(), ScreenqStatus::Config);
    assert_eq!(new_ctx("sl2", 3, "1,x", 0).unwrap_err(), ScreenqStatus::Parse);
}

#[test]
fn json_config_context() {
    let datum = r#"{"name": "a1", "rank": 1, "gram": [[2]], "odd": []}"#;
    let ctx = new_ctx(datum, 3, "generic", 1).unwrap();
    let mut out = ptr::null_mut();
    let suite = cstr("relations");
    let status = unsafe { screenq_verify(ctx, suite.as_ptr(), &mut out) };
    assert_eq!(status, ScreenqStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["algebra"], "a1");
    unsafe { screenq_context_free(ctx) };
}

#[test]
fn scan_and_braid() {
    let ctx = new_ctx("sl2_1", 4, "generic", 1).unwrap();
    let mut out = ptr::null_mut();
    let d = cstr("0,2");
    assert_eq!(unsafe { screenq_serre_scan(ctx, d.as_ptr(), &mut out) }, ScreenqStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["dimension"], 1);

    let bad = cstr("0;2");
    assert_eq!(unsafe { screenq_serre_scan(ctx, bad.as_ptr(), &mut out) }, ScreenqStatus::Parse);

    let (l, s, e) = (cstr("0,0"), cstr("2"), cstr(""));
    let status = unsafe { screenq_braid(ctx, l.as_ptr(), s.as_ptr(), l.as_ptr(), s.as_ptr(), &mut out) };
    assert_eq!(status, ScreenqStatus::Ok);
    assert!(take(out).contains("\"-1\""));

    let g = cstr("generic");
    let status = unsafe { screenq_braid(ctx, g.as_ptr(), e.as_ptr(), l.as_ptr(), e.as_ptr(), &mut out) };
    assert_eq!(status, ScreenqStatus::Config);
    assert!(last_error().is_some());
    unsafe { screenq_context_free(ctx) };
}

#[test]
fn null_arguments() {
    let mut out = ptr::null_mut();
    let suite = cstr("all");
    assert_eq!(unsafe { screenq_verify(ptr::null(), suite.as_ptr(), &mut out) }, ScreenqStatus::NullArgument);
    let ctx = new_ctx("osp1_2", 2, "generic", 0).unwrap();
    assert_eq!(unsafe { screenq_verify(ctx, ptr::null(), &mut out) }, ScreenqStatus::NullArgument);
    let unknown = cstr("everything");
    assert_eq!(unsafe { screenq_verify(ctx, unknown.as_ptr(), &mut out) }, ScreenqStatus::Config);
    unsafe {
        screenq_context_free(ctx);
        screenq_context_free(ptr::null_mut());
        screenq_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_symbol() {
    let header = include_str!("../include/screenq.h");
    for symbol in [
        "screenq_context_new",
        "screenq_context_free",
        "screenq_verify",
        "screenq_act",
        "screenq_serre_scan",
        "screenq_braid",
        "screenq_string_free",
        "screenq_last_error_message",
        "SCREENQ_STATUS_IDENTITY_FAILURE",
    ] {
        assert!(header.contains(symbol), "{symbol}");
    }
}
