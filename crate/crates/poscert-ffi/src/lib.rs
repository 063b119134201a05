//! C ABI for the positivity-certificate decisions.
//!
//! Polynomials travel as opaque handles; every fallible call returns a
//! `PoscertStatus` and writes results through out-pointers. The last error
//! message is kept per thread and is valid until the next failing call on
//! the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use poscert::certificate::{decide_positive_root, decide_real_root, DecisionConfig, Verdict};
use poscert::cofactor;
use poscert::{Error, UniPoly};

/// Call outcome. Anything other than `Ok` leaves the out-parameters
/// untouched; the message is available via `poscert_last_error`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum PoscertStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    ResourceLimit = 3,
    InternalError = 4,
}

/// Decision outcome for the root queries.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum PoscertVerdict {
    NoRoot = 0,
    RootExists = 1,
}

/// Opaque univariate polynomial with exact rational coefficients.
pub struct PoscertPoly {
    inner: UniPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(sanitized).unwrap());
}

fn status_of(e: &Error) -> PoscertStatus {
    match e {
        Error::Parse(_) | Error::Domain(_) | Error::ZeroPolynomial | Error::DimensionMismatch(_) => {
            PoscertStatus::InvalidInput
        }
        Error::Resource(_) | Error::NonConvergence { .. } => PoscertStatus::ResourceLimit,
        Error::Internal(_) => PoscertStatus::InternalError,
    }
}

fn fail(e: &Error) -> PoscertStatus {
    set_error(&e.to_string());
    status_of(e)
}

fn null_fail(what: &str) -> PoscertStatus {
    set_error(&format!("null pointer: {what}"));
    PoscertStatus::NullArgument
}

/// Message of the most recent failure on this thread. Never null; empty
/// before the first failure. The pointer is invalidated by the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn poscert_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a polynomial from text: `"x^2 - 2x + 1"` or ascending-list
/// `"[1, -2, 1]"`, coefficients as integers, fractions `p/q`, or decimals.
///
/// # Safety
/// `text` must be a valid NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn poscert_poly_parse(
    text: *const c_char,
    out: *mut *mut PoscertPoly,
) -> PoscertStatus {
    if text.is_null() {
        return null_fail("text");
    }
    if out.is_null() {
        return null_fail("out");
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("input is not valid UTF-8");
            return PoscertStatus::InvalidInput;
        }
    };
    match UniPoly::parse(text) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(PoscertPoly { inner: p }));
            PoscertStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Releases a polynomial handle. Null is a no-op.
///
/// # Safety
/// `poly` must have come from `poscert_poly_parse` and not been freed.
#[no_mangle]
pub unsafe extern "C" fn poscert_poly_free(poly: *mut PoscertPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Degree of the polynomial, or -1 for the zero polynomial.
///
/// # Safety
/// `poly` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn poscert_poly_degree(poly: *const PoscertPoly) -> i64 {
    if poly.is_null() {
        return -1;
    }
    (*poly).inner.degree().map_or(-1, |d| d as i64)
}

fn config(degree_cap: usize, use_oracle: bool) -> DecisionConfig {
    DecisionConfig {
        beta_override: None,
        degree_cap,
        use_oracle_crosscheck: use_oracle,
    }
}

/// Decides whether the polynomial has a root in `]0, inf[`. A `NoRoot`
/// verdict is certificate-backed or oracle-confirmed; pass `degree_cap = 0`
/// for the default cap.
///
/// # Safety
/// `poly` must be a live handle, `verdict` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn poscert_check_positive_root(
    poly: *const PoscertPoly,
    degree_cap: usize,
    use_oracle: bool,
    verdict: *mut PoscertVerdict,
) -> PoscertStatus {
    if poly.is_null() {
        return null_fail("poly");
    }
    if verdict.is_null() {
        return null_fail("verdict");
    }
    let cap = if degree_cap == 0 { poscert::certificate::DEFAULT_DEGREE_CAP } else { degree_cap };
    match decide_positive_root(&(*poly).inner, &config(cap, use_oracle)) {
        Ok(d) => {
            *verdict = match d.verdict {
                Verdict::NoPositiveRoot => PoscertVerdict::NoRoot,
                Verdict::PositiveRootExists => PoscertVerdict::RootExists,
            };
            PoscertStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Decides whether the polynomial has any real root.
///
/// # Safety
/// `poly` must be a live handle, `verdict` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn poscert_check_real_root(
    poly: *const PoscertPoly,
    degree_cap: usize,
    use_oracle: bool,
    verdict: *mut PoscertVerdict,
) -> PoscertStatus {
    if poly.is_null() {
        return null_fail("poly");
    }
    if verdict.is_null() {
        return null_fail("verdict");
    }
    let cap = if degree_cap == 0 { poscert::certificate::DEFAULT_DEGREE_CAP } else { degree_cap };
    match decide_real_root(&(*poly).inner, &config(cap, use_oracle)) {
        Ok(r) => {
            *verdict = if r.has_real_root {
                PoscertVerdict::RootExists
            } else {
                PoscertVerdict::NoRoot
            };
            PoscertStatus::Ok
        }
        Err(e) => fail(&e),
    }
}

/// Human-readable form of the polynomial. Free with
/// `poscert_string_free`.
///
/// # Safety
/// `poly` must be a live handle, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn poscert_poly_to_string(
    poly: *const PoscertPoly,
    out: *mut *mut c_char,
) -> PoscertStatus {
    if poly.is_null() {
        return null_fail("poly");
    }
    if out.is_null() {
        return null_fail("out");
    }
    let s = (*poly).inner.to_string();
    *out = CString::new(s).unwrap().into_raw();
    PoscertStatus::Ok
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must have come from this library and not been freed.
#[no_mangle]
pub unsafe extern "C" fn poscert_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Smallest index at which the cofactor sequence for ratio `h` turns
/// nonpositive; the index divided by `h` tends to pi.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn poscert_negative_index(h: f64, out: *mut u64) -> PoscertStatus {
    if out.is_null() {
        return null_fail("out");
    }
    match cofactor::negative_index(h) {
        Ok(i) => {
            *out = i;
            PoscertStatus::Ok
        }
        Err(e) => fail(&e),
    }
}
