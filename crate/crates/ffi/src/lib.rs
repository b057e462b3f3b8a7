//! C ABI over `umbral`.
//!
//! Objects cross the boundary as opaque handles released with the matching
//! `*_free`. Every fallible call
//! returns an [`UmbralStatus`]; on failure `umbral_last_error` describes the
//! cause until the next call on the same thread. Strings returned through
//! out-pointers are owned by the caller and released with
//! `umbral_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use num_complex::Complex64;
use umbral::gca::{self, SpinRep, WeylPair};
use umbral::kernel::ComplexMatrix;
use umbral::ops::{basic_sequence, Method};
use umbral::plane;
use umbral::psi::PsiSequence;
use umbral::verify::{self, GridDelta, Suite, VerifyConfig};
use umbral::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UmbralStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidPsi = 3,
    Parse = 4,
    ZeroDivisor = 5,
    BeyondTruncation = 6,
    TruncationExceeded = 7,
    NonInvertible = 8,
    NotDelta = 9,
    InvalidArgument = 10,
    DegenerateDeformation = 11,
    NotPsd = 12,
    InvalidSpin = 13,
    DimensionMismatch = 14,
    NotDiagonal = 15,
    Internal = 16,
    Panic = 17,
}

impl From<&Error> for UmbralStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::ZeroDivisor => UmbralStatus::ZeroDivisor,
            Error::BeyondTruncation { .. } => UmbralStatus::BeyondTruncation,
            Error::TruncationExceeded(_) => UmbralStatus::TruncationExceeded,
            Error::NonInvertible => UmbralStatus::NonInvertible,
            Error::NotDelta(_) => UmbralStatus::NotDelta,
            Error::DimensionMismatch { .. } => UmbralStatus::DimensionMismatch,
            Error::NotDiagonal => UmbralStatus::NotDiagonal,
            Error::InvalidPsi(_) => UmbralStatus::InvalidPsi,
            Error::Parse(_) => UmbralStatus::Parse,
            Error::DegenerateDeformation => UmbralStatus::DegenerateDeformation,
            Error::NotPsd => UmbralStatus::NotPsd,
            Error::InvalidSpin(_) => UmbralStatus::InvalidSpin,
            Error::InvalidArgument(_) => UmbralStatus::InvalidArgument,
            Error::Internal(_) => UmbralStatus::Internal,
        }
    }
}

/// The four grid delta operators.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UmbralDelta {
    Partial = 0,
    Laguerre = 1,
    PartialOnePlus = 2,
    ShiftedPartial = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UmbralMethod {
    Lagrange1 = 0,
    Lagrange2 = 1,
    Rodrigues3 = 2,
    Rodrigues4 = 3,
    Solve = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UmbralSpinMatrix {
    J3 = 0,
    Jplus = 1,
    Jminus = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UmbralWeylMatrix {
    Sigma1 = 0,
    Sigma2 = 1,
    Q = 2,
    P = 3,
    S = 4,
    OmegaP = 5,
}

/// A ψ-sequence.
pub struct UmbralPsi {
    inner: Arc<PsiSequence>,
}

/// A finite list of polynomials with exact rational-function coefficients.
pub struct UmbralPolys {
    polys: Vec<Vec<String>>,
}

pub struct UmbralSpin {
    inner: SpinRep,
}

pub struct UmbralWeyl {
    inner: WeylPair,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Run `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), UmbralStatus>) -> UmbralStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => UmbralStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside umbral");
            UmbralStatus::Panic
        }
    }
}

fn fail(e: Error) -> UmbralStatus {
    set_error(&e.to_string());
    UmbralStatus::from(&e)
}

fn null(what: &str) -> UmbralStatus {
    set_error(&format!("{what} is null"));
    UmbralStatus::NullPointer
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, UmbralStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        UmbralStatus::InvalidUtf8
    })
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), UmbralStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), UmbralStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = CString::new(s)
        .map_err(|_| UmbralStatus::Internal)?
        .into_raw();
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, UmbralStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn umbral_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn umbral_status_name(status: UmbralStatus) -> *const c_char {
    let s: &'static CStr = match status {
        UmbralStatus::Ok => c"ok",
        UmbralStatus::NullPointer => c"null pointer",
        UmbralStatus::InvalidUtf8 => c"invalid utf-8",
        UmbralStatus::InvalidPsi => c"invalid psi-sequence",
        UmbralStatus::Parse => c"parse error",
        UmbralStatus::ZeroDivisor => c"zero divisor",
        UmbralStatus::BeyondTruncation => c"index beyond truncation",
        UmbralStatus::TruncationExceeded => c"truncation exceeded",
        UmbralStatus::NonInvertible => c"non-invertible series",
        UmbralStatus::NotDelta => c"not a delta operator",
        UmbralStatus::InvalidArgument => c"invalid argument",
        UmbralStatus::DegenerateDeformation => c"degenerate deformation",
        UmbralStatus::NotPsd => c"modulus not PSD for this q",
        UmbralStatus::InvalidSpin => c"invalid spin",
        UmbralStatus::DimensionMismatch => c"dimension mismatch",
        UmbralStatus::NotDiagonal => c"not diagonal",
        UmbralStatus::Internal => c"internal error",
        UmbralStatus::Panic => c"panic",
    };
    s.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn umbral_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Built-in sequence (`classic`, `qgauss`, `fibonacci`, `square`) truncated at `n_max`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_psi_builtin(
    name: *const c_char,
    n_max: usize,
    out: *mut *mut UmbralPsi,
) -> UmbralStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let psi = PsiSequence::by_name(name, n_max).map_err(fail)?;
        write_out(
            out,
            UmbralPsi {
                inner: Arc::new(psi),
            },
        )
    })
}

/// Custom sequence from a JSON array of rational-function strings `ψ_0, ψ_1, ...`.
///
/// # Safety
/// `name` and `json` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_psi_from_json(
    name: *const c_char,
    json: *const c_char,
    out: *mut *mut UmbralPsi,
) -> UmbralStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let json = read_str(json, "json")?;
        let psi = PsiSequence::from_json(name, json).map_err(fail)?;
        write_out(
            out,
            UmbralPsi {
                inner: Arc::new(psi),
            },
        )
    })
}

/// # Safety
/// `psi` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn umbral_psi_free(psi: *mut UmbralPsi) {
    if !psi.is_null() {
        drop(Box::from_raw(psi));
    }
}

/// # Safety
/// `psi` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn umbral_psi_n_max(psi: *const UmbralPsi) -> usize {
    psi.as_ref().map_or(0, |p| p.inner.n_max())
}

/// `n_ψ` as a canonical string.
///
/// # Safety
/// `psi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_psi_number(
    psi: *const UmbralPsi,
    n: usize,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let psi = handle(psi, "psi")?;
        let v = psi.inner.number(n).map_err(fail)?;
        write_string(out, v.to_string())
    })
}

/// `C(n, k)_ψ` as a canonical string.
///
/// # Safety
/// `psi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_psi_binomial(
    psi: *const UmbralPsi,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let psi = handle(psi, "psi")?;
        let v = psi.inner.binomial(n, k).map_err(fail)?;
        write_string(out, v.to_string())
    })
}

fn grid_delta(d: UmbralDelta) -> GridDelta {
    match d {
        UmbralDelta::Partial => GridDelta::Partial,
        UmbralDelta::Laguerre => GridDelta::Laguerre,
        UmbralDelta::PartialOnePlus => GridDelta::PartialOnePlus,
        UmbralDelta::ShiftedPartial => GridDelta::ShiftedPartial,
    }
}

fn method(m: UmbralMethod) -> Method {
    match m {
        UmbralMethod::Lagrange1 => Method::Lagrange1,
        UmbralMethod::Lagrange2 => Method::Lagrange2,
        UmbralMethod::Rodrigues3 => Method::Rodrigues3,
        UmbralMethod::Rodrigues4 => Method::Rodrigues4,
        UmbralMethod::Solve => Method::Solve,
    }
}

/// Basic sequence `p_0 ..= p_n` of a grid delta operator.
///
/// # Safety
/// `psi` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_basic_sequence(
    psi: *const UmbralPsi,
    delta: UmbralDelta,
    n: usize,
    m: UmbralMethod,
    out: *mut *mut UmbralPolys,
) -> UmbralStatus {
    guard(|| {
        let psi = handle(psi, "psi")?;
        let d = grid_delta(delta)
            .build(psi.inner.clone(), n + 1)
            .map_err(fail)?;
        let seq = basic_sequence(&d, n, method(m)).map_err(fail)?;
        let polys = seq.polys().iter().map(|p| p.coeff_strings()).collect();
        write_out(out, UmbralPolys { polys })
    })
}

/// # Safety
/// `polys` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn umbral_polys_free(polys: *mut UmbralPolys) {
    if !polys.is_null() {
        drop(Box::from_raw(polys));
    }
}

/// # Safety
/// `polys` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn umbral_polys_len(polys: *const UmbralPolys) -> usize {
    polys.as_ref().map_or(0, |p| p.polys.len())
}

/// Coefficient of `x^k` in polynomial `i`, as a canonical string.
///
/// # Safety
/// `polys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_polys_coeff(
    polys: *const UmbralPolys,
    i: usize,
    k: usize,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let polys = handle(polys, "polys")?;
        let p = polys
            .polys
            .get(i)
            .ok_or_else(|| fail(Error::InvalidArgument(format!("index {i} out of range"))))?;
        write_string(out, p.get(k).cloned().unwrap_or_else(|| "0".into()))
    })
}

/// All polynomials as a JSON array of coefficient-string arrays.
///
/// # Safety
/// `polys` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_polys_json(
    polys: *const UmbralPolys,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let polys = handle(polys, "polys")?;
        let s = serde_json::to_string(&polys.polys).map_err(|_| UmbralStatus::Internal)?;
        write_string(out, s)
    })
}

/// Smallest `k <= n` where the ψ-binomial expansion on the quantum plane fails.
/// `*witness` is set to that `k`, or to `-1` when the identity holds up to `n`.
///
/// # Safety
/// `psi` must be a live handle; `witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_nogo_witness(
    psi: *const UmbralPsi,
    n: usize,
    witness: *mut i64,
) -> UmbralStatus {
    guard(|| {
        let psi = handle(psi, "psi")?;
        if witness.is_null() {
            return Err(null("witness"));
        }
        let w = plane::smallest_witness(&psi.inner, n).map_err(fail)?;
        *witness = w.map_or(-1, |r| r.n as i64);
        Ok(())
    })
}

/// Symmetric q-number `[x]_q`.
///
/// # Safety
/// `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_q_bracket(
    x: f64,
    q_re: f64,
    q_im: f64,
    re: *mut f64,
    im: *mut f64,
) -> UmbralStatus {
    guard(|| {
        if re.is_null() || im.is_null() {
            return Err(null("out"));
        }
        let b = gca::q_bracket(x, Complex64::new(q_re, q_im)).map_err(fail)?;
        *re = b.re;
        *im = b.im;
        Ok(())
    })
}

/// Spin `two_j / 2` representation; `deformed = false` ignores `q`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_spin_build(
    two_j: u32,
    deformed: bool,
    q_re: f64,
    q_im: f64,
    out: *mut *mut UmbralSpin,
) -> UmbralStatus {
    guard(|| {
        let q = deformed.then(|| Complex64::new(q_re, q_im));
        let rep = gca::su2_build(two_j, q).map_err(fail)?;
        write_out(out, UmbralSpin { inner: rep })
    })
}

/// # Safety
/// `spin` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn umbral_spin_free(spin: *mut UmbralSpin) {
    if !spin.is_null() {
        drop(Box::from_raw(spin));
    }
}

/// # Safety
/// `spin` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn umbral_spin_dim(spin: *const UmbralSpin) -> usize {
    spin.as_ref().map_or(0, |s| s.inner.dim())
}

unsafe fn copy_matrix(m: &ComplexMatrix, buf: *mut f64, len: usize) -> Result<(), UmbralStatus> {
    let n = m.dim();
    if buf.is_null() {
        return Err(null("buf"));
    }
    if len < 2 * n * n {
        return Err(fail(Error::InvalidArgument(format!(
            "buffer holds {len} doubles, need {}",
            2 * n * n
        ))));
    }
    let out = std::slice::from_raw_parts_mut(buf, 2 * n * n);
    for i in 0..n {
        for k in 0..n {
            let z = m[(i, k)];
            out[2 * (i * n + k)] = z.re;
            out[2 * (i * n + k) + 1] = z.im;
        }
    }
    Ok(())
}

/// Copy a matrix row-major as interleaved `re, im` into `buf` (`2 dim²` doubles).
///
/// # Safety
/// `spin` must be a live handle; `buf` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn umbral_spin_matrix(
    spin: *const UmbralSpin,
    which: UmbralSpinMatrix,
    buf: *mut f64,
    len: usize,
) -> UmbralStatus {
    guard(|| {
        let s = &handle(spin, "spin")?.inner;
        let m = match which {
            UmbralSpinMatrix::J3 => s.j3(),
            UmbralSpinMatrix::Jplus => s.jplus(),
            UmbralSpinMatrix::Jminus => s.jminus(),
        };
        copy_matrix(m, buf, len)
    })
}

/// Commutator report as JSON; `*pass` receives the verdict.
///
/// # Safety
/// `spin` must be a live handle; `pass` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_spin_commutators(
    spin: *const UmbralSpin,
    tolerance: f64,
    pass: *mut bool,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let s = &handle(spin, "spin")?.inner;
        let r = gca::su2_commutator_check(s, tolerance).map_err(fail)?;
        report_out(&r, pass, out)
    })
}

/// Polar-decomposition report as JSON; fails with `NOT_PSD` for non-positive brackets.
///
/// # Safety
/// `spin` must be a live handle; `pass` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_spin_polar(
    spin: *const UmbralSpin,
    tolerance: f64,
    pass: *mut bool,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let s = &handle(spin, "spin")?.inner;
        let p = gca::polar_decompose(s, tolerance).map_err(fail)?;
        report_out(&p.report, pass, out)
    })
}

unsafe fn report_out(
    r: &gca::CheckReport,
    pass: *mut bool,
    out: *mut *mut c_char,
) -> Result<(), UmbralStatus> {
    if pass.is_null() {
        return Err(null("pass"));
    }
    *pass = r.pass;
    let s = serde_json::to_string(r).map_err(|_| UmbralStatus::Internal)?;
    write_string(out, s)
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_weyl_build(n: usize, out: *mut *mut UmbralWeyl) -> UmbralStatus {
    guard(|| {
        let pair = gca::weyl_build(n).map_err(fail)?;
        write_out(out, UmbralWeyl { inner: pair })
    })
}

/// # Safety
/// `weyl` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn umbral_weyl_free(weyl: *mut UmbralWeyl) {
    if !weyl.is_null() {
        drop(Box::from_raw(weyl));
    }
}

/// Copy one of the pair's matrices, as for `umbral_spin_matrix`.
///
/// # Safety
/// `weyl` must be a live handle; `buf` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn umbral_weyl_matrix(
    weyl: *const UmbralWeyl,
    which: UmbralWeylMatrix,
    buf: *mut f64,
    len: usize,
) -> UmbralStatus {
    guard(|| {
        let w = &handle(weyl, "weyl")?.inner;
        let m = match which {
            UmbralWeylMatrix::Sigma1 => &w.sigma1,
            UmbralWeylMatrix::Sigma2 => &w.sigma2,
            UmbralWeylMatrix::Q => &w.qmat,
            UmbralWeylMatrix::P => &w.pmat,
            UmbralWeylMatrix::S => &w.smat,
            UmbralWeylMatrix::OmegaP => &w.omega_p,
        };
        copy_matrix(m, buf, len)
    })
}

/// # Safety
/// `weyl` must be a live handle; `pass` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_weyl_check(
    weyl: *const UmbralWeyl,
    tolerance: f64,
    pass: *mut bool,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let w = &handle(weyl, "weyl")?.inner;
        let r = gca::weyl_check(w, tolerance).map_err(fail)?;
        report_out(&r, pass, out)
    })
}

/// Run a verification suite (`methods`, ..., `all`) at size `n`; the full
/// report is written as JSON.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `pass` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn umbral_verify(
    suite: *const c_char,
    n: usize,
    tolerance: f64,
    pass: *mut bool,
    out: *mut *mut c_char,
) -> UmbralStatus {
    guard(|| {
        let suite: Suite = read_str(suite, "suite")?.parse().map_err(fail)?;
        if pass.is_null() {
            return Err(null("pass"));
        }
        let cfg = VerifyConfig {
            n,
            tolerance,
            ..VerifyConfig::default()
        };
        let report = verify::run_suite(suite, &cfg);
        *pass = report.pass;
        let s = serde_json::to_string(&report).map_err(|_| UmbralStatus::Internal)?;
        write_string(out, s)
    })
}
