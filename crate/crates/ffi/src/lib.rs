//! C interface to `lefschetz-core`.
//!
//! Objects are opaque handles created by `*_new` / `*_from_*` functions and
//! released with the matching `*_free`. Every fallible call returns an
//! [`LfStatus`]; on failure a message is available from
//! [`lf_last_error_message`] on the same thread. Strings handed out by the
//! library are NUL-terminated UTF-8 and must be released with
//! [`lf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lefschetz::algebra::{algebra_from_dual, AlgebraView};
use lefschetz::family::{dual_generator, FamilyParams};
use lefschetz::harness::report::algebra_info;
use lefschetz::poly::{LinearForm, Polynomial};
use lefschetz::semigroup::{apery_data, SemigroupSpec};
use lefschetz::wlp::{wlp_check, Method, WlpOptions};
use lefschetz::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    InvalidInput = 3,
    InvalidUtf8 = 4,
    ComputationFailed = 5,
    Panic = 6,
}

/// Oracle selection for [`lf_wlp_check`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LfMethod {
    Hessian = 0,
    Multmap = 1,
    Both = 2,
}

/// A validated parameter tuple `(a, b, c, alpha, beta, gamma)`.
pub struct LfParams(FamilyParams);

/// The Gorenstein algebra of a dual generator, with its per-degree bases.
pub struct LfAlgebra(AlgebraView);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> LfStatus {
    match e {
        Error::InvalidParams { .. } => LfStatus::InvalidParams,
        Error::InconsistentSystem(_) | Error::Spec(_) => LfStatus::ComputationFailed,
        _ => LfStatus::InvalidInput,
    }
}

fn fail(status: LfStatus, msg: impl ToString) -> LfStatus {
    set_error(msg.to_string());
    status
}

/// Runs `f`, clearing the last error first and turning panics into
/// [`LfStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), LfStatus>) -> LfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(LfStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: lefschetz::Result<T>) -> Result<T, LfStatus> {
    r.map_err(|e| fail(status_of(&e), e))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, LfStatus> {
    p.as_ref().ok_or_else(|| fail(LfStatus::NullPointer, "null pointer argument"))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), LfStatus> {
    if out.is_null() {
        return Err(fail(LfStatus::NullPointer, "null output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), LfStatus> {
    let c = CString::new(s).map_err(|_| fail(LfStatus::ComputationFailed, "output contains NUL"))?;
    put(out, c.into_raw())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, LfStatus> {
    if s.is_null() {
        return Err(fail(LfStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(LfStatus::InvalidUtf8, "string is not UTF-8"))
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn lf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn lf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Validates a parameter tuple. On `LF_STATUS_INVALID_PARAMS` the error
/// message names the violated constraint.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_params_new(
    a: u32,
    b: u32,
    c: u32,
    alpha: u32,
    beta: u32,
    gamma: u32,
    out: *mut *mut LfParams,
) -> LfStatus {
    guard(|| {
        let p = lift(FamilyParams::new(a, b, c, alpha, beta, gamma))?;
        put(out, Box::into_raw(Box::new(LfParams(p))))
    })
}

/// # Safety
/// `p` must come from [`lf_params_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lf_params_free(p: *mut LfParams) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_params_socle_degree(p: *const LfParams, out: *mut u32) -> LfStatus {
    guard(|| put(out, deref(p)?.0.socle_degree()))
}

/// Generators, dual generator, Hilbert function and resolution shifts as
/// JSON.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_params_info_json(p: *const LfParams, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        let info = algebra_info(&deref(p)?.0);
        put_string(out, serde_json::to_string_pretty(&info).expect("serializable"))
    })
}

/// The algebra whose dual generator is the family's `F`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_algebra_from_params(p: *const LfParams, out: *mut *mut LfAlgebra) -> LfStatus {
    guard(|| {
        let view = lift(algebra_from_dual(&dual_generator(&deref(p)?.0)))?;
        put(out, Box::into_raw(Box::new(LfAlgebra(view))))
    })
}

/// The algebra of a homogeneous dual generator written in `nvars`
/// variables, e.g. `"x^2*z + x*y^2"` or `"x0*x3^2 + x1*x3*x4"`.
///
/// # Safety
/// `poly` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lf_algebra_from_dual(poly: *const c_char, nvars: usize, out: *mut *mut LfAlgebra) -> LfStatus {
    guard(|| {
        let f = lift(Polynomial::parse(read_str(poly)?, nvars))?;
        let view = lift(algebra_from_dual(&f))?;
        put(out, Box::into_raw(Box::new(LfAlgebra(view))))
    })
}

/// # Safety
/// `a` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lf_algebra_free(a: *mut LfAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_algebra_socle_degree(a: *const LfAlgebra, out: *mut u32) -> LfStatus {
    guard(|| put(out, deref(a)?.0.socle_degree()))
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_algebra_nvars(a: *const LfAlgebra, out: *mut usize) -> LfStatus {
    guard(|| put(out, deref(a)?.0.nvars()))
}

/// Writes up to `len` Hilbert values `h_0, ..., h_D` into `buf` and the
/// full length `D + 1` into `needed`. Pass `len = 0` to query the length.
///
/// # Safety
/// `buf` must hold `len` values; `needed` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_algebra_hilbert(
    a: *const LfAlgebra,
    buf: *mut u64,
    len: usize,
    needed: *mut usize,
) -> LfStatus {
    guard(|| {
        let h = deref(a)?.0.hilbert_vector();
        put(needed, h.len())?;
        if len > 0 {
            if buf.is_null() {
                return Err(fail(LfStatus::NullPointer, "null buffer"));
            }
            for (i, v) in h.iter().take(len).enumerate() {
                buf.add(i).write(*v);
            }
        }
        Ok(())
    })
}

/// Decides the weak Lefschetz property and returns the report as JSON.
/// `linear_form` is NULL or one integer coefficient per variable, tested
/// in addition to the oracles' own choices.
///
/// # Safety
/// Pointers must be valid; `linear_form` must hold `nvars` values if not
/// NULL.
#[no_mangle]
pub unsafe extern "C" fn lf_wlp_check(
    a: *const LfAlgebra,
    method: LfMethod,
    linear_form: *const i64,
    seed: u64,
    out: *mut *mut c_char,
) -> LfStatus {
    guard(|| {
        let view = &deref(a)?.0;
        let linear_form = (!linear_form.is_null())
            .then(|| LinearForm::from_ints(std::slice::from_raw_parts(linear_form, view.nvars())));
        let method = match method {
            LfMethod::Hessian => Method::Hessian,
            LfMethod::Multmap => Method::Multmap,
            LfMethod::Both => Method::Both,
        };
        let report = lift(wlp_check(view, None, &WlpOptions { method, linear_form, seed }))?;
        put_string(out, report.to_json())
    })
}

/// Apery set, orders and M-pure symmetry of `<g[0], g[1], g[2], g[3]>` as
/// JSON.
///
/// # Safety
/// `generators` must hold four values; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lf_apery_json(generators: *const u64, out: *mut *mut c_char) -> LfStatus {
    guard(|| {
        if generators.is_null() {
            return Err(fail(LfStatus::NullPointer, "null generators"));
        }
        let mut g = [0u64; 4];
        g.copy_from_slice(std::slice::from_raw_parts(generators, 4));
        let s = lift(SemigroupSpec::new(g))?;
        put_string(out, serde_json::to_string_pretty(&apery_data(&s)).expect("serializable"))
    })
}
