use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use umbral_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { umbral_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(umbral_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

fn psi(name: &str) -> *mut UmbralPsi {
    let name = CString::new(name).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { umbral_psi_builtin(name.as_ptr(), 12, &mut out) },
        UmbralStatus::Ok
    );
    out
}

#[test]
fn psi_numbers_and_binomials() {
    let p = psi("qgauss");
    unsafe {
        assert_eq!(umbral_psi_n_max(p), 12);
        let mut s = ptr::null_mut();
        assert_eq!(umbral_psi_number(p, 3, &mut s), UmbralStatus::Ok);
        assert_eq!(take(s), "1+q+q^2");
        assert_eq!(umbral_psi_binomial(p, 2, 1, &mut s), UmbralStatus::Ok);
        assert_eq!(take(s), "1+q");
        assert_eq!(
            umbral_psi_number(p, 40, &mut s),
            UmbralStatus::BeyondTruncation
        );
        umbral_psi_free(p);
    }
}

#[test]
fn unknown_psi_lists_builtins() {
    let name = CString::new("nope").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { umbral_psi_builtin(name.as_ptr(), 8, &mut out) };
    assert_eq!(st, UmbralStatus::InvalidPsi);
    assert!(out.is_null());
    assert!(last_error().contains("fibonacci"));
}

#[test]
fn null_arguments_are_reported() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { umbral_psi_builtin(ptr::null(), 8, &mut out) },
        UmbralStatus::NullPointer
    );
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { umbral_psi_number(ptr::null(), 1, &mut s) },
        UmbralStatus::NullPointer
    );
    // freeing null is a no-op
    unsafe {
        umbral_psi_free(ptr::null_mut());
        umbral_string_free(ptr::null_mut());
    }
}

#[test]
fn custom_psi_from_json() {
    let name = CString::new("halves").unwrap();
    let json = CString::new(r#"["1", "1/2", "1/8"]"#).unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            umbral_psi_from_json(name.as_ptr(), json.as_ptr(), &mut p),
            UmbralStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(umbral_psi_number(p, 2, &mut s), UmbralStatus::Ok);
        assert_eq!(take(s), "4");
        umbral_psi_free(p);
        let bad = CString::new(r#"["2", "1"]"#).unwrap();
        assert_eq!(
            umbral_psi_from_json(name.as_ptr(), bad.as_ptr(), &mut p),
            UmbralStatus::InvalidPsi
        );
    }
}

#[test]
fn laguerre_basic_sequence() {
    let p = psi("qgauss");
    let mut polys = ptr::null_mut();
    unsafe {
        let st = umbral_basic_sequence(
            p,
            UmbralDelta::Laguerre,
            3,
            UmbralMethod::Lagrange1,
            &mut polys,
        );
        assert_eq!(st, UmbralStatus::Ok);
        assert_eq!(umbral_polys_len(polys), 4);
        let mut s = ptr::null_mut();
        assert_eq!(umbral_polys_coeff(polys, 2, 1, &mut s), UmbralStatus::Ok);
        assert_eq!(take(s), "-1-q");
        assert_eq!(umbral_polys_json(polys, &mut s), UmbralStatus::Ok);
        assert_eq!(
            take(s),
            r#"[["1"],["0","-1"],["0","-1-q","1"],["0","-1-2*q-2*q^2-q^3","2+2*q+2*q^2","-1"]]"#
        );
        umbral_polys_free(polys);
        umbral_psi_free(p);
    }
}

#[test]
fn nogo_witness() {
    let mut w = 0i64;
    unsafe {
        let f = psi("fibonacci");
        assert_eq!(umbral_nogo_witness(f, 4, &mut w), UmbralStatus::Ok);
        assert_eq!(w, 3);
        umbral_psi_free(f);
        let q = psi("qgauss");
        assert_eq!(umbral_nogo_witness(q, 6, &mut w), UmbralStatus::Ok);
        assert_eq!(w, -1);
        umbral_psi_free(q);
    }
}

#[test]
fn q_bracket_and_degenerate_q() {
    let (mut re, mut im) = (0.0, 0.0);
    unsafe {
        assert_eq!(
            umbral_q_bracket(2.0, 2.0, 0.0, &mut re, &mut im),
            UmbralStatus::Ok
        );
        assert!((re - 2.5).abs() < 1e-14 && im == 0.0);
        assert_eq!(
            umbral_q_bracket(2.0, 1.0, 0.0, &mut re, &mut im),
            UmbralStatus::DegenerateDeformation
        );
    }
}

#[test]
fn spin_matrices_and_reports() {
    let mut rep = ptr::null_mut();
    unsafe {
        assert_eq!(
            umbral_spin_build(2, false, 0.0, 0.0, &mut rep),
            UmbralStatus::Ok
        );
        assert_eq!(umbral_spin_dim(rep), 3);
        let mut buf = [0.0f64; 18];
        assert_eq!(
            umbral_spin_matrix(rep, UmbralSpinMatrix::Jplus, buf.as_mut_ptr(), 18),
            UmbralStatus::Ok
        );
        // row 0, column 1
        assert!((buf[2] - 2f64.sqrt()).abs() < 1e-14);
        assert_eq!(
            umbral_spin_matrix(rep, UmbralSpinMatrix::Jplus, buf.as_mut_ptr(), 4),
            UmbralStatus::InvalidArgument
        );
        let mut pass = false;
        let mut s = ptr::null_mut();
        assert_eq!(
            umbral_spin_commutators(rep, 1e-10, &mut pass, &mut s),
            UmbralStatus::Ok
        );
        assert!(pass);
        assert!(take(s).contains("\"check\":\"su2_commutators\""));
        assert_eq!(
            umbral_spin_polar(rep, 1e-10, &mut pass, &mut s),
            UmbralStatus::Ok
        );
        assert!(pass);
        assert!(take(s).contains("sigma1"));
        umbral_spin_free(rep);

        assert_eq!(
            umbral_spin_build(12, true, 0.5, 3f64.sqrt() / 2.0, &mut rep),
            UmbralStatus::Ok
        );
        assert_eq!(
            umbral_spin_polar(rep, 1e-10, &mut pass, &mut s),
            UmbralStatus::NotPsd
        );
        umbral_spin_free(rep);
        assert_eq!(
            umbral_spin_build(0, false, 0.0, 0.0, &mut rep),
            UmbralStatus::InvalidSpin
        );
    }
}

#[test]
fn weyl_pair() {
    let mut w = ptr::null_mut();
    unsafe {
        assert_eq!(umbral_weyl_build(2, &mut w), UmbralStatus::Ok);
        let mut buf = [0.0f64; 8];
        assert_eq!(
            umbral_weyl_matrix(w, UmbralWeylMatrix::Sigma2, buf.as_mut_ptr(), 8),
            UmbralStatus::Ok
        );
        assert_eq!(buf[6], -1.0);
        let mut pass = false;
        let mut s = ptr::null_mut();
        assert_eq!(
            umbral_weyl_check(w, 1e-10, &mut pass, &mut s),
            UmbralStatus::Ok
        );
        assert!(pass);
        assert!(take(s).contains("p_printed_zero_diagonal"));
        umbral_weyl_free(w);
        assert_eq!(umbral_weyl_build(1, &mut w), UmbralStatus::InvalidArgument);
    }
}

#[test]
fn verify_suite() {
    let suite = CString::new("nogo").unwrap();
    let mut pass = false;
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(
            umbral_verify(suite.as_ptr(), 6, 1e-10, &mut pass, &mut s),
            UmbralStatus::Ok
        );
        assert!(pass);
        assert!(take(s).contains("witness at n = 3"));
        let bad = CString::new("everything").unwrap();
        assert_eq!(
            umbral_verify(bad.as_ptr(), 6, 1e-10, &mut pass, &mut s),
            UmbralStatus::InvalidArgument
        );
    }
}

#[test]
fn status_names() {
    let name = unsafe { CStr::from_ptr(umbral_status_name(UmbralStatus::NotPsd)) };
    assert_eq!(name.to_str().unwrap(), "modulus not PSD for this q");
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/umbral.h")).unwrap();
    for sym in [
        "typedef struct UmbralPsi UmbralPsi;",
        "UMBRAL_STATUS_NOT_PSD = 12",
        "UmbralStatus umbral_psi_builtin(",
        "UmbralStatus umbral_basic_sequence(",
        "void umbral_string_free(",
        "const char *umbral_last_error(void);",
    ] {
        assert!(header.contains(sym), "header lacks {sym}");
    }
}

/// Compile and run a C program against the header and the static library,
/// when a C compiler and the archive are available.
#[test]
fn c_program_links_and_runs() {
    let target = std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| crate_dir().join("../../target"));
    let profile = if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    };
    let lib = target.join(profile).join("libumbral_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library at {} or no cc", lib.display());
        return;
    }
    let exe = std::env::temp_dir().join(format!("umbral_c_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(crate_dir().join("tests/c_smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(Path::new(&exe));
    assert!(
        run.status.success(),
        "C program exited with {:?}",
        run.status.code()
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
