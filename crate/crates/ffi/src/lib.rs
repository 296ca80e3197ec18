//! C ABI over `jacobi-turan`.
//!
//! Exact values cross the boundary as NUL-terminated `"p/q"` strings. Objects
//! are opaque handles owned by the caller and released with the matching
//! `*_free` function; strings returned through `out` pointers are released
//! with [`jt_string_free`]. Every fallible call returns a [`JtStatus`]; on
//! failure [`jt_last_error`] describes the problem for the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jacobi_turan::identities::{check_all_identities, check_wronskian_positive};
use jacobi_turan::jacobi::{jacobi_on_ray, FamilyParams};
use jacobi_turan::numeric::eval_jacobi_float;
use jacobi_turan::rational::{format_rational, parse_rational, to_f64};
use jacobi_turan::turan::{build_delta, certify_theorem, delta_at_one, leading_coeff_closed_form};
use jacobi_turan::{Error, Poly, SignCertificate, Verdict};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    OutOfRange = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JtVerdict {
    CertifiedNegative = 0,
    CertifiedPositive = 1,
    NotCertified = 2,
}

/// Exact polynomial with rational coefficients.
pub struct JtPoly(Poly);

/// Sign certificate for `Δ_n` on `(1, +inf)`.
pub struct JtCertificate(SignCertificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: JtStatus, msg: impl Into<String>) -> JtStatus {
    set_error(msg);
    status
}

fn status_of(err: &Error) -> JtStatus {
    match err {
        Error::Parse { .. } => JtStatus::Parse,
        Error::ParameterOutOfRange { .. } | Error::NegativeSlope { .. } | Error::DegreeTooSmall { .. } => {
            JtStatus::OutOfRange
        }
        _ => JtStatus::InvalidArgument,
    }
}

fn from_error(err: Error) -> JtStatus {
    fail(status_of(&err), err.to_string())
}

fn guard(f: impl FnOnce() -> JtStatus) -> JtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(JtStatus::Internal, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, JtStatus> {
    if p.is_null() {
        return Err(fail(JtStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(JtStatus::Parse, "argument is not UTF-8"))
}

unsafe fn read_family(a: *const c_char, b: *const c_char) -> Result<FamilyParams, JtStatus> {
    let a = parse_rational(read_str(a)?).map_err(from_error)?;
    let b = parse_rational(read_str(b)?).map_err(from_error)?;
    FamilyParams::new(a, b).map_err(from_error)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> JtStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            JtStatus::Ok
        }
        Err(_) => fail(JtStatus::Internal, "string contains NUL"),
    }
}

macro_rules! check_out {
    ($($p:expr),*) => {
        $(if $p.is_null() {
            return fail(JtStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })*
    };
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn jt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn jt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub unsafe extern "C" fn jt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact `P_n^(an,bn)`; `a` and `b` are rational strings.
#[no_mangle]
pub unsafe extern "C" fn jt_poly_on_ray(
    n: u32,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut JtPoly,
) -> JtStatus {
    check_out!(out);
    guard(|| {
        let fam = match read_family(a, b) {
            Ok(f) => f,
            Err(s) => return s,
        };
        *out = Box::into_raw(Box::new(JtPoly(jacobi_on_ray(n, &fam))));
        JtStatus::Ok
    })
}

/// Exact `Δ_n` for `n >= 1`.
#[no_mangle]
pub unsafe extern "C" fn jt_delta(
    n: u32,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut JtPoly,
) -> JtStatus {
    check_out!(out);
    guard(|| {
        let fam = match read_family(a, b) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match build_delta(n, &fam) {
            Ok(det) => {
                *out = Box::into_raw(Box::new(JtPoly(det.delta)));
                JtStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn jt_poly_free(p: *mut JtPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Degree, or -1 for the zero polynomial.
#[no_mangle]
pub unsafe extern "C" fn jt_poly_degree(p: *const JtPoly, out: *mut i64) -> JtStatus {
    check_out!(p, out);
    *out = (*p).0.degree().map_or(-1, |d| d as i64);
    JtStatus::Ok
}

/// Coefficient of `x^i` as a newly allocated `"p/q"` string.
#[no_mangle]
pub unsafe extern "C" fn jt_poly_coeff(p: *const JtPoly, i: usize, out: *mut *mut c_char) -> JtStatus {
    check_out!(p, out);
    write_string(out, format_rational(&(*p).0.coeff(i)))
}

/// Comma-separated coefficients, ascending degree.
#[no_mangle]
pub unsafe extern "C" fn jt_poly_to_string(p: *const JtPoly, out: *mut *mut c_char) -> JtStatus {
    check_out!(p, out);
    write_string(out, (*p).0.to_string())
}

/// Exact value at the rational `x`, as a `"p/q"` string.
#[no_mangle]
pub unsafe extern "C" fn jt_poly_eval(
    p: *const JtPoly,
    x: *const c_char,
    out: *mut *mut c_char,
) -> JtStatus {
    check_out!(p, out);
    guard(|| {
        let x = match read_str(x).and_then(|s| parse_rational(s).map_err(from_error)) {
            Ok(x) => x,
            Err(s) => return s,
        };
        write_string(out, format_rational(&(*p).0.eval(&x)))
    })
}

/// Nearest binary64 to the exact value at `x`.
#[no_mangle]
pub unsafe extern "C" fn jt_poly_eval_f64(p: *const JtPoly, x: f64, out: *mut f64) -> JtStatus {
    check_out!(p, out);
    if !x.is_finite() {
        return fail(JtStatus::InvalidArgument, "x is not finite");
    }
    guard(|| {
        let Some(xr) = jacobi_turan::Rational::from_float(x) else {
            return fail(JtStatus::InvalidArgument, "x is not representable");
        };
        *out = to_f64(&(*p).0.eval(&xr));
        JtStatus::Ok
    })
}

/// Binary64 `P_n^(α,β)(x)` by the direct binomial sum.
#[no_mangle]
pub unsafe extern "C" fn jt_eval_jacobi_f64(
    n: u32,
    alpha: f64,
    beta: f64,
    x: f64,
    out: *mut f64,
) -> JtStatus {
    check_out!(out);
    guard(|| match eval_jacobi_float(n, alpha, beta, x) {
        Ok(v) => {
            *out = v;
            JtStatus::Ok
        }
        Err(e) => from_error(e),
    })
}

/// Writes 1 to `out` when all four recurrence identities hold exactly and the
/// Wronskian is certified positive, 0 otherwise.
#[no_mangle]
pub unsafe extern "C" fn jt_verify_identities(
    n: u32,
    a: *const c_char,
    b: *const c_char,
    out: *mut i32,
) -> JtStatus {
    check_out!(out);
    guard(|| {
        let fam = match read_family(a, b) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let reports = match check_all_identities(n, &fam) {
            Ok(r) => r,
            Err(e) => return from_error(e),
        };
        let wronskian = match check_wronskian_positive(n, &fam) {
            Ok(c) => c,
            Err(e) => return from_error(e),
        };
        let ok = reports.iter().all(|r| r.holds) && wronskian.verdict == Verdict::CertifiedPositive;
        *out = ok as i32;
        JtStatus::Ok
    })
}

/// Writes 1 to `out` when `Δ_n(1) = 0` by both evaluation routes and the
/// closed-form leading coefficient matches the polynomial and is negative.
#[no_mangle]
pub unsafe extern "C" fn jt_check_anchors(
    n: u32,
    a: *const c_char,
    b: *const c_char,
    out: *mut i32,
) -> JtStatus {
    check_out!(out);
    guard(|| {
        let fam = match read_family(a, b) {
            Ok(f) => f,
            Err(s) => return s,
        };
        let (at_one, lead, det) = match (
            delta_at_one(n, &fam),
            leading_coeff_closed_form(n, &fam),
            build_delta(n, &fam),
        ) {
            (Ok(v), Ok(l), Ok(d)) => (v, l, d),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return from_error(e),
        };
        let zero = jacobi_turan::Rational::from_integer(0.into());
        let ok = at_one == zero && lead < zero && det.delta.leading_coeff() == Some(&lead);
        *out = ok as i32;
        JtStatus::Ok
    })
}

/// Certificate that `Δ_n(x) < 0` on `(1, +inf)`.
#[no_mangle]
pub unsafe extern "C" fn jt_certify(
    n: u32,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut JtCertificate,
) -> JtStatus {
    check_out!(out);
    guard(|| {
        let fam = match read_family(a, b) {
            Ok(f) => f,
            Err(s) => return s,
        };
        match certify_theorem(n, &fam) {
            Ok(c) => {
                *out = Box::into_raw(Box::new(JtCertificate(c)));
                JtStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn jt_certificate_free(c: *mut JtCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

#[no_mangle]
pub unsafe extern "C" fn jt_certificate_verdict(c: *const JtCertificate, out: *mut JtVerdict) -> JtStatus {
    check_out!(c, out);
    *out = match (*c).0.verdict {
        Verdict::CertifiedNegative => JtVerdict::CertifiedNegative,
        Verdict::CertifiedPositive => JtVerdict::CertifiedPositive,
        Verdict::NotCertified => JtVerdict::NotCertified,
    };
    JtStatus::Ok
}

/// Multiplicity of the root at the base point and number of roots inside.
#[no_mangle]
pub unsafe extern "C" fn jt_certificate_counts(
    c: *const JtCertificate,
    multiplicity_at_base: *mut u32,
    root_count_inside: *mut usize,
) -> JtStatus {
    check_out!(c, multiplicity_at_base, root_count_inside);
    *multiplicity_at_base = (*c).0.multiplicity_at_base;
    *root_count_inside = (*c).0.root_count_inside;
    JtStatus::Ok
}

/// Canonical JSON record of the certificate.
#[no_mangle]
pub unsafe extern "C" fn jt_certificate_to_json(c: *const JtCertificate, out: *mut *mut c_char) -> JtStatus {
    check_out!(c, out);
    match serde_json::to_string(&(*c).0) {
        Ok(s) => write_string(out, s),
        Err(e) => fail(JtStatus::Internal, e.to_string()),
    }
}
