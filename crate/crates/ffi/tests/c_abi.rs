use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use jacobi_turan_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    jt_string_free(p);
    s
}

#[test]
fn polynomial_handle_lifecycle() {
    unsafe {
        let mut p: *mut JtPoly = ptr::null_mut();
        assert_eq!(jt_poly_on_ray(1, cstr("1").as_ptr(), cstr("0").as_ptr(), &mut p), JtStatus::Ok);
        let mut deg = 0i64;
        assert_eq!(jt_poly_degree(p, &mut deg), JtStatus::Ok);
        assert_eq!(deg, 1);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(jt_poly_to_string(p, &mut s), JtStatus::Ok);
        assert_eq!(take_string(s), "1/2, 3/2");
        assert_eq!(jt_poly_coeff(p, 7, &mut s), JtStatus::Ok);
        assert_eq!(take_string(s), "0");
        let mut v = 0.0;
        assert_eq!(jt_poly_eval_f64(p, 2.0, &mut v), JtStatus::Ok);
        assert_eq!(v, 3.5);
        assert_eq!(jt_poly_eval(p, cstr("1/3").as_ptr(), &mut s), JtStatus::Ok);
        assert_eq!(take_string(s), "1");
        jt_poly_free(p);
        jt_poly_free(ptr::null_mut());
    }
}

#[test]
fn delta_and_certificate() {
    unsafe {
        let (a, b) = (cstr("0"), cstr("0"));
        let mut p: *mut JtPoly = ptr::null_mut();
        assert_eq!(jt_delta(1, a.as_ptr(), b.as_ptr(), &mut p), JtStatus::Ok);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(jt_poly_to_string(p, &mut s), JtStatus::Ok);
        assert_eq!(take_string(s), "1/2, 0, -1/2");
        jt_poly_free(p);

        let mut c: *mut JtCertificate = ptr::null_mut();
        assert_eq!(jt_certify(1, a.as_ptr(), b.as_ptr(), &mut c), JtStatus::Ok);
        let mut verdict = JtVerdict::NotCertified;
        assert_eq!(jt_certificate_verdict(c, &mut verdict), JtStatus::Ok);
        assert_eq!(verdict, JtVerdict::CertifiedNegative);
        let (mut m, mut roots) = (0u32, 99usize);
        assert_eq!(jt_certificate_counts(c, &mut m, &mut roots), JtStatus::Ok);
        assert_eq!((m, roots), (1, 0));
        assert_eq!(jt_certificate_to_json(c, &mut s), JtStatus::Ok);
        let json = take_string(s);
        let cert: jacobi_turan::SignCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(cert.root_count_inside, 0);
        jt_certificate_free(c);

        let mut ok = 0;
        assert_eq!(jt_verify_identities(3, cstr("1/2").as_ptr(), cstr("2").as_ptr(), &mut ok), JtStatus::Ok);
        assert_eq!(ok, 1);
        assert_eq!(jt_check_anchors(4, cstr("5/2").as_ptr(), cstr("1").as_ptr(), &mut ok), JtStatus::Ok);
        assert_eq!(ok, 1);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut p: *mut JtPoly = ptr::null_mut();
        assert_eq!(jt_poly_on_ray(2, cstr("abc").as_ptr(), cstr("0").as_ptr(), &mut p), JtStatus::Parse);
        assert!(p.is_null());
        let msg = CStr::from_ptr(jt_last_error()).to_str().unwrap();
        assert!(msg.contains("abc"), "{msg}");
        assert_eq!(jt_poly_on_ray(2, cstr("-1").as_ptr(), cstr("0").as_ptr(), &mut p), JtStatus::OutOfRange);
        assert_eq!(jt_poly_on_ray(2, ptr::null(), cstr("0").as_ptr(), &mut p), JtStatus::NullPointer);
        assert_eq!(jt_poly_on_ray(2, cstr("0").as_ptr(), cstr("0").as_ptr(), ptr::null_mut()), JtStatus::NullPointer);
        let mut c: *mut JtCertificate = ptr::null_mut();
        assert_eq!(jt_certify(0, cstr("0").as_ptr(), cstr("0").as_ptr(), &mut c), JtStatus::OutOfRange);
        let mut v = 0.0;
        assert_eq!(jt_eval_jacobi_f64(2, -1.5, 0.0, 1.0, &mut v), JtStatus::OutOfRange);
        assert_eq!(jt_eval_jacobi_f64(2, 0.0, 0.0, 2.0, &mut v), JtStatus::Ok);
        assert_eq!(v, 5.5);
        let version = CStr::from_ptr(jt_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn header_declares_exports() {
    let header = std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/jacobi_turan.h"),
    )
    .unwrap();
    for sym in [
        "jt_poly_on_ray",
        "jt_delta",
        "jt_poly_free",
        "jt_certify",
        "jt_certificate_to_json",
        "jt_last_error",
        "JT_STATUS_OUT_OF_RANGE",
        "typedef struct JtPoly JtPoly;",
    ] {
        assert!(header.contains(sym), "header is missing {sym}");
    }
}

/// Compiles and runs a C program against the header and the static library
/// when a C compiler is available.
#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libjacobi_turan_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let out = tempfile_path("jt_smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
    let _ = std::fs::remove_file(out);
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}
