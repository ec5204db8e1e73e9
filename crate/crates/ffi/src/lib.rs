//! C ABI over `dickson-core`.
//!
//! Sequences cross the boundary as opaque `DicksonSeq*` handles created by
//! [`dickson_seq_parse`] and released with [`dickson_seq_free`]. Every other
//! call returns a [`DicksonStatus`] and writes its result through an out
//! pointer. On failure, [`dickson_last_error`] describes what went wrong on
//! the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use dickson_core::{DescentOutcome, Error, Seq};

pub const DICKSON_ABI_VERSION: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DicksonStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Overflow = 4,
    Contract = 5,
    Capacity = 6,
    GuardRail = 7,
    Invariant = 8,
    /// `dickson_holds_d` found no witness.
    NotFound = 9,
}

/// Opaque sequence handle.
pub struct DicksonSeq(Seq);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(error: &Error) -> DicksonStatus {
    match error {
        Error::Syntax { .. } | Error::ValueOverflow { .. } => DicksonStatus::Syntax,
        Error::Overflow { .. } => DicksonStatus::Overflow,
        Error::Contract(_) | Error::ClauseFailed { .. } => DicksonStatus::Contract,
        Error::Capacity(_) => DicksonStatus::Capacity,
        Error::GuardRail(_) => DicksonStatus::GuardRail,
        Error::Invariant(_) => DicksonStatus::Invariant,
    }
}

enum Failure {
    Status(DicksonStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(DicksonStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, records any error for `dickson_last_error`, and turns panics
/// into `Invariant`.
fn guard<F>(body: F) -> DicksonStatus
where
    F: FnOnce() -> Result<DicksonStatus, Failure> + UnwindSafe,
{
    match catch_unwind(body) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure::Core(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Status(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside dickson".into());
            DicksonStatus::Invariant
        }
    }
}

unsafe fn seq_ref<'a>(handle: *const DicksonSeq, what: &str) -> Result<&'a Seq, Failure> {
    handle.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<DicksonStatus, Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(DicksonStatus::Ok)
}

#[no_mangle]
pub extern "C" fn dickson_abi_version() -> u32 {
    DICKSON_ABI_VERSION
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// owned by the library and valid until the next failing call on the thread.
#[no_mangle]
pub extern "C" fn dickson_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a sequence literal such as `"1,0;0"` or `"0%1,2"`.
#[no_mangle]
pub unsafe extern "C" fn dickson_seq_parse(
    text: *const c_char,
    out: *mut *mut DicksonSeq,
) -> DicksonStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| {
            Failure::Status(
                DicksonStatus::InvalidUtf8,
                format!("literal is not UTF-8: {e}"),
            )
        })?;
        let seq = dickson_core::parse_seq(text)?;
        out.write(Box::into_raw(Box::new(DicksonSeq(seq))));
        Ok(DicksonStatus::Ok)
    })
}

/// Releases a handle from `dickson_seq_parse`. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn dickson_seq_free(seq: *mut DicksonSeq) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dickson_seq_eval(
    seq: *const DicksonSeq,
    n: u64,
    out: *mut u64,
) -> DicksonStatus {
    guard(|| write_out(out, seq_ref(seq, "seq")?.eval(n)))
}

/// Canonical literal of `seq`; free with `dickson_string_free`.
#[no_mangle]
pub unsafe extern "C" fn dickson_seq_render(seq: *const DicksonSeq) -> *mut c_char {
    match seq.as_ref() {
        Some(s) => CString::new(s.0.render()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

#[no_mangle]
pub unsafe extern "C" fn dickson_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn dickson_pair_code(n: u64, m: u64, out: *mut u64) -> DicksonStatus {
    guard(|| write_out(out, dickson_core::pair_code(n, m)?))
}

/// `I^{f_0 + g_0 + 1}(0)`.
#[no_mangle]
pub unsafe extern "C" fn dickson_guessed_bound(
    f: *const DicksonSeq,
    g: *const DicksonSeq,
    out: *mut u64,
) -> DicksonStatus {
    guard(|| {
        let (f, g) = (seq_ref(f, "f")?, seq_ref(g, "g")?);
        write_out(out, dickson_core::guessed_bound(f, g)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dickson_extracted_bound(
    f: *const DicksonSeq,
    g: *const DicksonSeq,
    n: u64,
    out: *mut u64,
) -> DicksonStatus {
    guard(|| {
        let (f, g) = (seq_ref(f, "f")?, seq_ref(g, "g")?);
        write_out(out, dickson_core::extracted_bound(f, g, n)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn dickson_oracle_min_bound(
    f: *const DicksonSeq,
    g: *const DicksonSeq,
    out: *mut u64,
) -> DicksonStatus {
    guard(|| {
        let (f, g) = (seq_ref(f, "f")?, seq_ref(g, "g")?);
        write_out(out, dickson_core::oracle_min_bound(f, g)?)
    })
}

/// Least witness `i < j ≤ n`, or `DICKSON_STATUS_NOT_FOUND`.
#[no_mangle]
pub unsafe extern "C" fn dickson_holds_d(
    f: *const DicksonSeq,
    g: *const DicksonSeq,
    n: u64,
    out_i: *mut u64,
    out_j: *mut u64,
) -> DicksonStatus {
    guard(|| {
        let (f, g) = (seq_ref(f, "f")?, seq_ref(g, "g")?);
        if out_i.is_null() || out_j.is_null() {
            return Err(null("output pointer"));
        }
        match dickson_core::holds_d(f, g, n) {
            Some(w) => {
                out_i.write(w.i());
                out_j.write(w.j());
                Ok(DicksonStatus::Ok)
            }
            None => Ok(DicksonStatus::NotFound),
        }
    })
}

/// Writes `true` if the descent step at `n` reports a bound at `I(n)`,
/// `false` if the measure decreases instead.
#[no_mangle]
pub unsafe extern "C" fn dickson_descent(
    f: *const DicksonSeq,
    g: *const DicksonSeq,
    n: u64,
    out_bound_reached: *mut bool,
) -> DicksonStatus {
    guard(|| {
        let (f, g) = (seq_ref(f, "f")?, seq_ref(g, "g")?);
        let reached = dickson_core::descent(f, g, n)? == DescentOutcome::BoundReached;
        write_out(out_bound_reached, reached)
    })
}
