//! C ABI over the `superinv` engine.
//!
//! Algebras are opaque handles. Results come back as NUL-terminated JSON strings that
//! the caller releases with [`superinv_string_free`]. Every call returns a
//! [`SuperinvStatus`]; on failure [`superinv_last_error`] describes the cause.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::str::FromStr;

use serde_json::{json, Value};
use superinv::cli;
use superinv::enveloping::is_central;
use superinv::liealg::AlgebraSpec;
use superinv::schurweyl::z_sigma;
use superinv::signs::Permutation;
use superinv::superlinalg::Family;
use superinv::Error;

/// Status codes returned by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperinvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Unsupported = 4,
    BoundExceeded = 5,
    NotInvariant = 6,
    PropertyFailed = 7,
    Internal = 8,
    Panic = 9,
}

/// Opaque handle to a built Lie superalgebra.
pub struct SuperinvAlgebra {
    inner: AlgebraSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(err: &Error) -> SuperinvStatus {
    match err {
        Error::InvalidParameters(_) | Error::Parse(_) | Error::InvalidIndex(_) | Error::PositionOutOfRange { .. } => {
            SuperinvStatus::InvalidArgument
        }
        Error::Unsupported { .. } => SuperinvStatus::Unsupported,
        Error::DegreeCapExceeded { .. } | Error::BoundExceeded(_) => SuperinvStatus::BoundExceeded,
        Error::NotInvariant => SuperinvStatus::NotInvariant,
        _ => SuperinvStatus::Internal,
    }
}

fn fail(status: SuperinvStatus, message: &str) -> SuperinvStatus {
    set_error(message);
    status
}

fn guard(body: impl FnOnce() -> SuperinvStatus) -> SuperinvStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => {
            if s == SuperinvStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(SuperinvStatus::Panic, "internal panic"),
    }
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SuperinvStatus> {
    if p.is_null() {
        return Err(fail(SuperinvStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(SuperinvStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

/// # Safety
/// `out` is a valid pointer to writable storage.
unsafe fn write_json(out: *mut *mut c_char, value: &Value) -> SuperinvStatus {
    let text = cli::render(value);
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            SuperinvStatus::Ok
        }
        Err(_) => fail(SuperinvStatus::Internal, "report contains a NUL byte"),
    }
}

/// Builds `gl(m|n)`, `osp(m|2n)`, `q(n)` or `p(n)` from the family name `"gl"`, `"osp"`,
/// `"q"` or `"p"`. For `q` and `p`, `m` must equal `n`.
///
/// # Safety
/// `family` is a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn superinv_algebra_new(
    family: *const c_char,
    m: usize,
    n: usize,
    out: *mut *mut SuperinvAlgebra,
) -> SuperinvStatus {
    guard(|| {
        if out.is_null() {
            return fail(SuperinvStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let name = match read_str(family) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let built = Family::from_str(name).and_then(|f| AlgebraSpec::build(f, m, n));
        match built {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(SuperinvAlgebra { inner }));
                SuperinvStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Releases a handle from [`superinv_algebra_new`]; null is ignored.
///
/// # Safety
/// `alg` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn superinv_algebra_free(alg: *mut SuperinvAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Writes the dimension of the algebra to `out`.
///
/// # Safety
/// `alg` is a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn superinv_algebra_dim(alg: *const SuperinvAlgebra, out: *mut usize) -> SuperinvStatus {
    guard(|| {
        if alg.is_null() || out.is_null() {
            return fail(SuperinvStatus::NullPointer, "null argument");
        }
        *out = (*alg).inner.dim();
        SuperinvStatus::Ok
    })
}

/// Writes `{"label","dim","generators":[..]}` for the algebra.
///
/// # Safety
/// `alg` is a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn superinv_algebra_json(alg: *const SuperinvAlgebra, out: *mut *mut c_char) -> SuperinvStatus {
    guard(|| {
        if alg.is_null() || out.is_null() {
            return fail(SuperinvStatus::NullPointer, "null argument");
        }
        let a = &(*alg).inner;
        let names: Vec<String> = (0..a.dim()).map(|g| a.generator(g).name.clone()).collect();
        write_json(out, &json!({"label": a.label(), "dim": a.dim(), "generators": names}))
    })
}

/// Computes `z_sigma` for `sigma` in `S_degree` (cycle or one-line notation) and writes
/// `{"z": .., "central": bool}`.
///
/// # Safety
/// `alg` is a live handle, `perm` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn superinv_z_sigma_json(
    alg: *const SuperinvAlgebra,
    perm: *const c_char,
    degree: usize,
    out: *mut *mut c_char,
) -> SuperinvStatus {
    guard(|| {
        if alg.is_null() || out.is_null() {
            return fail(SuperinvStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let text = match read_str(perm) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let a = &(*alg).inner;
        let result = Permutation::parse(text, degree).and_then(|sigma| z_sigma(a, &sigma));
        match result {
            Ok(z) => write_json(out, &json!({"z": z.to_json(a), "central": is_central(a, &z)})),
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// Runs a command-line invocation given as a JSON array of arguments without the program
/// name, e.g. `["brauer","--k","3"]`, and writes its report. A report whose checked
/// property failed is still written and yields `PropertyFailed`.
///
/// # Safety
/// `args_json` is a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn superinv_run_json(args_json: *const c_char, out: *mut *mut c_char) -> SuperinvStatus {
    guard(|| {
        if out.is_null() {
            return fail(SuperinvStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(args_json) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let args: Vec<String> = match serde_json::from_str(text) {
            Ok(v) => v,
            Err(e) => return fail(SuperinvStatus::InvalidArgument, &format!("arguments must be a JSON string array: {e}")),
        };
        let argv = std::iter::once("superinv".to_string()).chain(args);
        match cli::execute(argv) {
            Ok((_, outcome)) => {
                let s = write_json(out, &outcome.report);
                if s == SuperinvStatus::Ok && !outcome.ok {
                    return fail(SuperinvStatus::PropertyFailed, "a checked property failed");
                }
                s
            }
            Err(f) => {
                let status = if f.code == 2 { SuperinvStatus::InvalidArgument } else { SuperinvStatus::Internal };
                fail(status, f.message.trim_end())
            }
        }
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn superinv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread (empty after a success). The pointer
/// stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn superinv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
