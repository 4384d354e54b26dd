//! C ABI over `stieltjes-cf`.
//!
//! Conventions:
//! * Rationals cross the boundary as NUL-terminated UTF-8 strings (`"p/q"` or `"p"`).
//! * Every fallible function returns a [`StcfStatus`]; results come back
//!   through out-pointers. On failure `stcf_last_error_message` describes the
//!   problem for the calling thread.
//! * Handles and strings returned by this library must be released with the
//!   matching `*_free` function. Passing NULL to a free function is a no-op.
//! * Panics never cross the boundary; they surface as `STCF_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stieltjes_cf::rat::parse_rat_list;
use stieltjes_cf::{
    binomial_transform, certify_wall, certify_xi_stieltjes, g0_max, parse_rat, s_extract, CertStatus, CertVerdict,
    Error, MomentSequence, Rat,
};

/// Result codes. `STCF_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StcfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    /// The input is well-formed but the computation is undefined for it
    /// (for example, no S-fraction exists).
    MathError = 5,
    /// The requested value does not exist (for example, the refutation
    /// index of a certified verdict).
    NotFound = 6,
    Panic = 7,
}

/// Verdict kinds, mirroring the library's `CertStatus`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StcfVerdictKind {
    CertifiedPrefix = 0,
    Refuted = 1,
    Degenerate = 2,
}

/// Opaque moment sequence.
pub struct StcfMoments(MomentSequence);

/// Opaque certification verdict.
pub struct StcfVerdict(CertVerdict);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(StcfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => StcfStatus::ParseError,
            Error::InvalidArgument(_) | Error::InvalidMeasure(_) | Error::EmptySeries | Error::EmptyMoments => {
                StcfStatus::InvalidArgument
            }
            _ => StcfStatus::MathError,
        };
        Fail(status, e.to_string())
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail(StcfStatus::ParseError, e.to_string())
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> StcfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StcfStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            StcfStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(StcfStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(StcfStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(StcfStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| Fail(StcfStatus::NullPointer, format!("{what} is NULL")))
}

unsafe fn xi_arg(p: *const c_char) -> Result<Rat, Fail> {
    Ok(parse_rat(str_arg(p, "xi")?)?)
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(StcfStatus::InvalidArgument, "output contains a NUL byte".into()))
}

/// Builds a moment sequence from a comma-separated list such as `"1,3/2,5/2"`.
///
/// # Safety
/// `text` must be NULL or a valid NUL-terminated string; `out` must be NULL
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn stcf_moments_from_list(text: *const c_char, out: *mut *mut StcfMoments) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let values = parse_rat_list(str_arg(text, "text")?)?;
        if values.is_empty() {
            return Err(Fail(StcfStatus::InvalidArgument, "no moments given".into()));
        }
        *out = Box::into_raw(Box::new(StcfMoments(MomentSequence::new(values))));
        Ok(())
    })
}

/// Builds a moment sequence from `{"moments": ["p/q", ...]}`.
///
/// # Safety
/// As for [`stcf_moments_from_list`].
#[no_mangle]
pub unsafe extern "C" fn stcf_moments_from_json(json: *const c_char, out: *mut *mut StcfMoments) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let m: MomentSequence = serde_json::from_str(str_arg(json, "json")?)?;
        *out = Box::into_raw(Box::new(StcfMoments(m)));
        Ok(())
    })
}

/// Number of moments held by `m`, or 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn stcf_moments_len(m: *const StcfMoments) -> usize {
    m.as_ref().map_or(0, |m| m.0.len())
}

/// Serializes `m` as JSON. Free the result with [`stcf_string_free`].
///
/// # Safety
/// `m` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn stcf_moments_to_json(m: *const StcfMoments, out: *mut *mut c_char) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        *out = c_string(serde_json::to_string(&ref_arg(m, "moments")?.0)?)?;
        Ok(())
    })
}

/// # Safety
/// `m` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stcf_moments_free(m: *mut StcfMoments) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Binomial transform `b_n = sum_k C(n,k) a_k xi^(n-k)` as a new handle.
///
/// # Safety
/// Pointers must be NULL or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn stcf_binomial_transform(
    m: *const StcfMoments,
    xi: *const c_char,
    out: *mut *mut StcfMoments,
) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let b = binomial_transform(&ref_arg(m, "moments")?.0, &xi_arg(xi)?);
        *out = Box::into_raw(Box::new(StcfMoments(b)));
        Ok(())
    })
}

/// Standard S-fraction of `m` as JSON `{"c", "alphas", "terminated"}`.
///
/// # Safety
/// Pointers must be NULL or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn stcf_s_extract_json(m: *const StcfMoments, out: *mut *mut c_char) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let s = s_extract(&ref_arg(m, "moments")?.0)?;
        *out = c_string(serde_json::to_string(&s)?)?;
        Ok(())
    })
}

unsafe fn certify_with(
    m: *const StcfMoments,
    xi: *const c_char,
    out: *mut *mut StcfVerdict,
    f: fn(&MomentSequence, &Rat) -> stieltjes_cf::Result<CertVerdict>,
) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let v = f(&ref_arg(m, "moments")?.0, &xi_arg(xi)?)?;
        *out = Box::into_raw(Box::new(StcfVerdict(v)));
        Ok(())
    })
}

/// Certifies or refutes support in `[xi, inf)`.
///
/// # Safety
/// Pointers must be NULL or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn stcf_certify_xi_stieltjes(
    m: *const StcfMoments,
    xi: *const c_char,
    out: *mut *mut StcfVerdict,
) -> StcfStatus {
    certify_with(m, xi, out, certify_xi_stieltjes)
}

/// Certifies or refutes support in `[0, xi]`.
///
/// # Safety
/// Pointers must be NULL or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn stcf_certify_wall(
    m: *const StcfMoments,
    xi: *const c_char,
    out: *mut *mut StcfVerdict,
) -> StcfStatus {
    certify_with(m, xi, out, certify_wall)
}

/// # Safety
/// `v` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn stcf_verdict_kind(v: *const StcfVerdict, out: *mut StcfVerdictKind) -> StcfStatus {
    guard(|| {
        let v = ref_arg(v, "verdict")?;
        *out_arg(out, "out")? = match v.0.status {
            CertStatus::CertifiedPrefix => StcfVerdictKind::CertifiedPrefix,
            CertStatus::Refuted => StcfVerdictKind::Refuted,
            CertStatus::Degenerate => StcfVerdictKind::Degenerate,
        };
        Ok(())
    })
}

/// Index of the first infeasible `g`; `STCF_STATUS_NOT_FOUND` unless refuted.
///
/// # Safety
/// `v` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn stcf_verdict_refutation_index(v: *const StcfVerdict, out: *mut usize) -> StcfStatus {
    guard(|| {
        let v = ref_arg(v, "verdict")?;
        let out = out_arg(out, "out")?;
        match v.0.refutation_index {
            Some(i) => {
                *out = i;
                Ok(())
            }
            None => Err(Fail(StcfStatus::NotFound, "verdict is not a refutation".into())),
        }
    })
}

/// Full verdict as JSON. Free the result with [`stcf_string_free`].
///
/// # Safety
/// `v` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn stcf_verdict_to_json(v: *const StcfVerdict, out: *mut *mut c_char) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        *out = c_string(serde_json::to_string(&ref_arg(v, "verdict")?.0)?)?;
        Ok(())
    })
}

/// # Safety
/// `v` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stcf_verdict_free(v: *mut StcfVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Brackets the largest admissible `g_0` to within `tol`; JSON result.
///
/// # Safety
/// Pointers must be NULL or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn stcf_g0_max_json(
    m: *const StcfMoments,
    xi: *const c_char,
    tol: *const c_char,
    out: *mut *mut c_char,
) -> StcfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let tol = parse_rat(str_arg(tol, "tol")?)?;
        let iv = g0_max(&ref_arg(m, "moments")?.0, &xi_arg(xi)?, &tol)?;
        *out = c_string(serde_json::to_string(&iv)?)?;
        Ok(())
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn stcf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn stcf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn stcf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
