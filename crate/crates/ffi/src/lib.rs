//! C interface to `spq-core`.
//!
//! Objects cross the boundary as opaque handles that the caller releases
//! with the matching `*_free` function. Every fallible call returns an
//! [`SpqStatus`]; after a failure, [`spq_last_error`] describes it.
//! Strings returned by the library are released with [`spq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use spq_core::hmap::{h_map, TableauPair};
use spq_core::involution::SignedInvolution;
use spq_core::io::parse_sigma;
use spq_core::verify::{run_suite, Suite};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    ComputationFailed = 5,
    VerificationFailed = 6,
}

/// Which exhaustive check [`spq_verify`] runs.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpqSuite {
    Tau = 0,
    WallCross = 1,
    Bijection = 2,
}

/// A signed involution.
pub struct SpqInvolution(SignedInvolution);

/// A domino tableau together with its class of signed tableaux.
pub struct SpqPair(TableauPair);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: SpqStatus, msg: impl ToString) -> SpqStatus {
    let text = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
    status
}

fn give_string(s: String, out: *mut *mut c_char) -> SpqStatus {
    if out.is_null() {
        return fail(SpqStatus::NullPointer, "output pointer is null");
    }
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: checked non-null above; the caller provides writable storage.
            unsafe { *out = c.into_raw() };
            SpqStatus::Ok
        }
        Err(e) => fail(SpqStatus::ComputationFailed, e),
    }
}

/// Message describing the last failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn spq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn spq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the text form, e.g. `"1+ 2- (3,4)+ 5+"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_involution_parse(text: *const c_char, out: *mut *mut SpqInvolution) -> SpqStatus {
    if text.is_null() || out.is_null() {
        return fail(SpqStatus::NullPointer, "null argument");
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return fail(SpqStatus::InvalidUtf8, "text is not UTF-8");
    };
    match parse_sigma(text) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(SpqInvolution(s)));
            SpqStatus::Ok
        }
        Err(e) => fail(SpqStatus::ParseError, e),
    }
}

/// # Safety
/// `inv` must come from [`spq_involution_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn spq_involution_free(inv: *mut SpqInvolution) {
    if !inv.is_null() {
        drop(Box::from_raw(inv));
    }
}

/// Rank and signature `(p, q)`.
///
/// # Safety
/// `inv` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_involution_signature(
    inv: *const SpqInvolution,
    n: *mut usize,
    p: *mut usize,
    q: *mut usize,
) -> SpqStatus {
    if inv.is_null() || n.is_null() || p.is_null() || q.is_null() {
        return fail(SpqStatus::NullPointer, "null argument");
    }
    let s = &(*inv).0;
    let (pp, qq) = s.signature();
    *n = s.n();
    *p = pp;
    *q = qq;
    SpqStatus::Ok
}

/// Canonical text form.
///
/// # Safety
/// `inv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_involution_to_string(inv: *const SpqInvolution, out: *mut *mut c_char) -> SpqStatus {
    if inv.is_null() {
        return fail(SpqStatus::NullPointer, "null handle");
    }
    give_string((*inv).0.to_string(), out)
}

/// Number of parameters of rank `n` and signature `p`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_count(n: usize, p: usize, out: *mut u64) -> SpqStatus {
    if out.is_null() {
        return fail(SpqStatus::NullPointer, "null argument");
    }
    if p > n {
        return fail(SpqStatus::InvalidArgument, format!("p = {p} exceeds n = {n}"));
    }
    *out = SignedInvolution::enumerate(n, p).count() as u64;
    SpqStatus::Ok
}

/// Computes `H(σ)`.
///
/// # Safety
/// `inv` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_hmap(inv: *const SpqInvolution, out: *mut *mut SpqPair) -> SpqStatus {
    if inv.is_null() || out.is_null() {
        return fail(SpqStatus::NullPointer, "null argument");
    }
    match h_map(&(*inv).0) {
        Ok(h) => {
            *out = Box::into_raw(Box::new(SpqPair(h)));
            SpqStatus::Ok
        }
        Err(e) => fail(SpqStatus::ComputationFailed, e),
    }
}

/// # Safety
/// `pair` must come from [`spq_hmap`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn spq_pair_free(pair: *mut SpqPair) {
    if !pair.is_null() {
        drop(Box::from_raw(pair));
    }
}

/// Number of signed tableaux in the class.
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_pair_class_size(pair: *const SpqPair, out: *mut usize) -> SpqStatus {
    if pair.is_null() || out.is_null() {
        return fail(SpqStatus::NullPointer, "null argument");
    }
    *out = (*pair).0.t2_class.len();
    SpqStatus::Ok
}

/// Normalized orbit descriptor, e.g. `"2+2+"`.
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_pair_orbit(pair: *const SpqPair, out: *mut *mut c_char) -> SpqStatus {
    if pair.is_null() {
        return fail(SpqStatus::NullPointer, "null handle");
    }
    give_string((*pair).0.descriptor().to_string(), out)
}

/// Bordered ASCII drawing of the domino tableau.
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_pair_render(pair: *const SpqPair, out: *mut *mut c_char) -> SpqStatus {
    if pair.is_null() {
        return fail(SpqStatus::NullPointer, "null handle");
    }
    give_string((*pair).0.t1.render_ascii(), out)
}

/// JSON form `{"t1": …, "class": […], "orbit": …}`.
///
/// # Safety
/// `pair` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spq_pair_to_json(pair: *const SpqPair, out: *mut *mut c_char) -> SpqStatus {
    if pair.is_null() {
        return fail(SpqStatus::NullPointer, "null handle");
    }
    give_string((*pair).0.to_json().to_string(), out)
}

/// Runs one suite for all ranks up to `n_max`. `failures` receives the
/// number of failing cases; the status is `VerificationFailed` if any.
///
/// # Safety
/// `failures` must be writable or null.
#[no_mangle]
pub unsafe extern "C" fn spq_verify(suite: SpqSuite, n_max: usize, failures: *mut usize) -> SpqStatus {
    let suite = match suite {
        SpqSuite::Tau => Suite::Tau,
        SpqSuite::WallCross => Suite::WallCross,
        SpqSuite::Bijection => Suite::Bijection,
    };
    let reports = run_suite(suite, n_max);
    let count: usize = reports.iter().map(|r| r.failures.len()).sum();
    if !failures.is_null() {
        *failures = count;
    }
    if count > 0 {
        let first = reports.iter().flat_map(|r| r.failures.iter()).next().expect("count > 0");
        return fail(SpqStatus::VerificationFailed, format!("{}: {}", first.sigma, first.detail));
    }
    SpqStatus::Ok
}
