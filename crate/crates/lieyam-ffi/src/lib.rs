//! C ABI over `lieyam`.
//!
//! Objects cross the boundary as opaque handles created by `ly_*_new`-style
//! constructors and released with the matching `ly_*_free`. Every fallible
//! call returns an [`LyStatus`]; the message of the most recent failure on
//! the calling thread is available from [`ly_last_error`]. Strings handed out
//! by the library must be released with [`ly_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use lieyam::algcore::StructureAlgebra;
use lieyam::lycore::{catalog_verify, EntryReport};
use lieyam::weights::{root_system, weyl_dim, RootType};
use lieyam::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LyStatus {
    Ok = 0,
    VerifyFailed = 1,
    UnknownEntry = 2,
    Malformed = 3,
    CapExceeded = 4,
    NullPointer = 5,
    InvalidArgument = 6,
    Internal = 7,
}

/// A structure-constant algebra.
pub struct LyAlgebra {
    inner: Arc<StructureAlgebra>,
}

/// The verification report of one catalog entry.
pub struct LyReport {
    inner: EntryReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let c = CString::new(message.into().replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LyStatus {
    match e {
        Error::UnknownEntry(_) => LyStatus::UnknownEntry,
        Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::InvalidInput(_) => LyStatus::Malformed,
        Error::CapExceeded { .. } => LyStatus::CapExceeded,
        Error::InvalidRootSystem(..) | Error::NonDominant => LyStatus::InvalidArgument,
        _ => LyStatus::VerifyFailed,
    }
}

fn fail(e: Error) -> LyStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

/// Runs `body`, turning panics into [`LyStatus::Internal`].
fn guard(body: impl FnOnce() -> LyStatus) -> LyStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            LyStatus::Internal
        }
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(concat!(stringify!($p), " is null"));
            return LyStatus::NullPointer;
        })+
    };
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, LyStatus> {
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string is not UTF-8");
        LyStatus::InvalidArgument
    })
}

fn hand_out(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior NULs removed").into_raw()
}

/// Copies the message of the last failure on this thread into `*out`, or
/// stores null when there was none. Release with [`ly_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_last_error(out: *mut *mut c_char) -> LyStatus {
    non_null!(out);
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    *out = msg.map_or(ptr::null_mut(), CString::into_raw);
    LyStatus::Ok
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ly_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `.sca` text into a new algebra handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_algebra_from_sca(text: *const c_char, out: *mut *mut LyAlgebra) -> LyStatus {
    non_null!(text, out);
    guard(|| {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match StructureAlgebra::from_sca(text) {
            Ok(a) => {
                *out = Box::into_raw(Box::new(LyAlgebra { inner: Arc::new(a) }));
                LyStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `a` must be null or a handle from [`ly_algebra_from_sca`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ly_algebra_free(a: *mut LyAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_algebra_dim(a: *const LyAlgebra, out: *mut usize) -> LyStatus {
    non_null!(a, out);
    *out = (*a).inner.dim();
    LyStatus::Ok
}

/// Whether the algebra is a simple Lie algebra; a non-Lie algebra reports
/// [`LyStatus::VerifyFailed`].
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_algebra_is_simple(a: *const LyAlgebra, out: *mut bool) -> LyStatus {
    non_null!(a, out);
    guard(|| match (*a).inner.is_simple_lie() {
        Ok(b) => {
            *out = b;
            LyStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Dimension of the derivation algebra.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_algebra_derivation_dim(a: *const LyAlgebra, out: *mut usize) -> LyStatus {
    non_null!(a, out);
    guard(|| {
        *out = (*a).inner.derivation_algebra().algebra().dim();
        LyStatus::Ok
    })
}

/// Rank of the Killing form.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_algebra_killing_rank(a: *const LyAlgebra, out: *mut usize) -> LyStatus {
    non_null!(a, out);
    guard(|| match (*a).inner.killing_form() {
        Ok(k) => {
            *out = k.rank();
            LyStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Dimension of the irreducible module with highest weight `weight`
/// (fundamental-weight coordinates, `len` must equal `rank`).
///
/// # Safety
/// `weight` must point to `len` readable values and `out` be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_weyl_dim(kind: c_char, rank: usize, weight: *const i64, len: usize, out: *mut u64) -> LyStatus {
    non_null!(weight, out);
    guard(|| {
        let letter = (kind as u8 as char).to_string();
        let weight = std::slice::from_raw_parts(weight, len);
        let result = RootType::parse(&letter).and_then(|k| root_system(k, rank)).and_then(|rs| weyl_dim(&rs, weight));
        match result {
            Ok(d) => {
                *out = d;
                LyStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Verifies a catalog entry. A report is produced whenever the entry exists,
/// and the status is [`LyStatus::VerifyFailed`] when some check failed.
///
/// # Safety
/// `id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_catalog_verify(id: *const c_char, out: *mut *mut LyReport) -> LyStatus {
    non_null!(id, out);
    *out = ptr::null_mut();
    guard(|| {
        let id = match read_str(id) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match catalog_verify(id) {
            Ok(r) => {
                let passed = r.passed();
                *out = Box::into_raw(Box::new(LyReport { inner: r }));
                if passed {
                    LyStatus::Ok
                } else {
                    set_error(format!("entry {id} failed verification"));
                    LyStatus::VerifyFailed
                }
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `r` must be null or a handle from [`ly_catalog_verify`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ly_report_free(r: *mut LyReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_report_passed(r: *const LyReport, out: *mut bool) -> LyStatus {
    non_null!(r, out);
    *out = (*r).inner.passed();
    LyStatus::Ok
}

/// Dimensions of `g`, `h` and `m` of the standard enveloping algebra.
///
/// # Safety
/// `r` must be a live handle and the outputs valid pointers.
#[no_mangle]
pub unsafe extern "C" fn ly_report_dims(r: *const LyReport, dim_g: *mut usize, dim_h: *mut usize, dim_m: *mut usize) -> LyStatus {
    non_null!(r, dim_g, dim_h, dim_m);
    match &(*r).inner.report {
        Some(e) => {
            *dim_g = e.dim_g;
            *dim_h = e.dim_h;
            *dim_m = e.dim_m;
            LyStatus::Ok
        }
        None => {
            set_error("no enveloping algebra report");
            LyStatus::VerifyFailed
        }
    }
}

/// One line per axiom and cross-check. Release with [`ly_string_free`].
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ly_report_summary(r: *const LyReport, out: *mut *mut c_char) -> LyStatus {
    non_null!(r, out);
    let r = &(*r).inner;
    let mut s = format!("{} {}\n", r.id, if r.passed() { "PASS" } else { "FAIL" });
    if let Some(e) = &r.report {
        let ty = e.ly_type.map_or("none", |t| t.name());
        s.push_str(&format!("dims {}/{}/{} type {ty}\n", e.dim_g, e.dim_h, e.dim_m));
    }
    for (name, c) in &r.axioms.axioms {
        match c {
            Ok(()) => s.push_str(&format!("{name} pass\n")),
            Err(cx) => s.push_str(&format!("{name} FAIL {cx}\n")),
        }
    }
    for c in &r.cross_checks {
        s.push_str(&format!("{} {}\n", c.name, if c.passed { "pass" } else { "FAIL" }));
    }
    *out = hand_out(s);
    LyStatus::Ok
}
