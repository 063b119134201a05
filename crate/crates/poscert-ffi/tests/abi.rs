use std::ffi::{CStr, CString};
use std::ptr;

use poscert_ffi::*;

fn parse(text: &str) -> *mut PoscertPoly {
    let c = CString::new(text).unwrap();
    let mut handle: *mut PoscertPoly = ptr::null_mut();
    let status = unsafe { poscert_poly_parse(c.as_ptr(), &mut handle) };
    assert!(matches!(status, PoscertStatus::Ok));
    assert!(!handle.is_null());
    handle
}

#[test]
fn parse_check_free_cycle() {
    let p = parse("[1, 0, 1]");
    unsafe {
        assert_eq!(poscert_poly_degree(p), 2);
        let mut verdict = PoscertVerdict::RootExists;
        let status = poscert_check_positive_root(p, 0, true, &mut verdict);
        assert!(matches!(status, PoscertStatus::Ok));
        assert!(matches!(verdict, PoscertVerdict::NoRoot));

        let mut real = PoscertVerdict::RootExists;
        assert!(matches!(
            poscert_check_real_root(p, 0, true, &mut real),
            PoscertStatus::Ok
        ));
        assert!(matches!(real, PoscertVerdict::NoRoot));
        poscert_poly_free(p);
    }
}

#[test]
fn positive_root_side() {
    let p = parse("x - 1");
    unsafe {
        let mut verdict = PoscertVerdict::NoRoot;
        assert!(matches!(
            poscert_check_positive_root(p, 0, true, &mut verdict),
            PoscertStatus::Ok
        ));
        assert!(matches!(verdict, PoscertVerdict::RootExists));
        poscert_poly_free(p);
    }
}

#[test]
fn parse_errors_set_the_message() {
    let bad = CString::new("x^^2").unwrap();
    let mut handle: *mut PoscertPoly = ptr::null_mut();
    unsafe {
        let status = poscert_poly_parse(bad.as_ptr(), &mut handle);
        assert!(matches!(status, PoscertStatus::InvalidInput));
        assert!(handle.is_null());
        let msg = CStr::from_ptr(poscert_last_error()).to_str().unwrap();
        assert!(!msg.is_empty());
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut handle: *mut PoscertPoly = ptr::null_mut();
        assert!(matches!(
            poscert_poly_parse(ptr::null(), &mut handle),
            PoscertStatus::NullArgument
        ));
        let mut verdict = PoscertVerdict::NoRoot;
        assert!(matches!(
            poscert_check_positive_root(ptr::null(), 0, true, &mut verdict),
            PoscertStatus::NullArgument
        ));
        poscert_poly_free(ptr::null_mut());
        poscert_string_free(ptr::null_mut());
    }
}

#[test]
fn string_round_trip() {
    let p = parse("[1, -2, 1]");
    unsafe {
        let mut s: *mut std::ffi::c_char = ptr::null_mut();
        assert!(matches!(poscert_poly_to_string(p, &mut s), PoscertStatus::Ok));
        let text = CStr::from_ptr(s).to_str().unwrap().to_string();
        assert_eq!(text, "x^2 - 2x + 1");
        poscert_string_free(s);
        poscert_poly_free(p);
    }
}

#[test]
fn negative_index_through_the_abi() {
    let mut out = 0u64;
    unsafe {
        assert!(matches!(poscert_negative_index(1.0, &mut out), PoscertStatus::Ok));
        assert_eq!(out, 3);
        assert!(matches!(
            poscert_negative_index(-1.0, &mut out),
            PoscertStatus::InvalidInput
        ));
    }
}

#[test]
fn header_is_generated() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/poscert.h");
    let text = std::fs::read_to_string(header).expect("generated header");
    assert!(text.contains("poscert_poly_parse"));
    assert!(text.contains("poscert_check_positive_root"));
    assert!(text.contains("POSCERT_H"));
}
