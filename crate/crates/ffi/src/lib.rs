//! C interface to `evoalg`.
//!
//! Algebras are opaque heap handles created by `evo_algebra_from_json` or
//! `evo_catalog_build` and released with `evo_algebra_free`. Every fallible
//! call returns an `EvoStatus`; on failure `evo_last_error` describes the
//! problem. Strings returned to the caller must be released with
//! `evo_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use evoalg::catalog;
use evoalg::decomposition::support_components;
use evoalg::derivation::{derivation_basis, derived_subalgebra, inner_derivations};
use evoalg::io::{parse_algebra, AlgebraFile};
use evoalg::scalar::{format_scalar, parse_scalar};
use evoalg::{EvoError, EvolutionAlgebra};

/// Opaque algebra handle.
pub struct EvoAlgebra {
    inner: EvolutionAlgebra,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Parameter = 4,
    UnknownFamily = 5,
    NotPowerAssociative = 6,
    InvalidInput = 7,
    Panic = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &EvoError) -> EvoStatus {
    match err {
        EvoError::Parse { .. } => EvoStatus::Parse,
        EvoError::Parameter { .. } | EvoError::ParameterCount { .. } => EvoStatus::Parameter,
        EvoError::UnknownFamily(_) => EvoStatus::UnknownFamily,
        EvoError::NotPowerAssociative => EvoStatus::NotPowerAssociative,
        _ => EvoStatus::InvalidInput,
    }
}

fn fail(status: EvoStatus, msg: impl Into<String>) -> EvoStatus {
    set_error(msg.into());
    status
}

fn from_evo(err: EvoError) -> EvoStatus {
    fail(status_of(&err), err.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), EvoStatus>) -> EvoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EvoStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(EvoStatus::Panic, "internal panic"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, EvoStatus> {
    if p.is_null() {
        return Err(fail(EvoStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(EvoStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn algebra<'a>(h: *const EvoAlgebra) -> Result<&'a EvolutionAlgebra, EvoStatus> {
    h.as_ref()
        .map(|a| &a.inner)
        .ok_or_else(|| fail(EvoStatus::NullPointer, "null algebra handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), EvoStatus> {
    if out.is_null() {
        return Err(fail(EvoStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_handle(e: EvolutionAlgebra) -> *mut EvoAlgebra {
    Box::into_raw(Box::new(EvoAlgebra { inner: e }))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("json has no interior nul").into_raw()
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn evo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an algebra file (JSON text).
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn evo_algebra_from_json(json: *const c_char, out: *mut *mut EvoAlgebra) -> EvoStatus {
    guard(|| {
        let text = read_str(json)?;
        let loaded = parse_algebra(text).map_err(from_evo)?;
        write_out(out, into_handle(loaded.algebra))
    })
}

/// Builds a catalog family from `nparams` rational strings.
///
/// # Safety
/// `name` must be a valid string, `params` must point to `nparams` valid
/// strings (it may be NULL when `nparams` is 0), and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn evo_catalog_build(
    name: *const c_char,
    params: *const *const c_char,
    nparams: usize,
    out: *mut *mut EvoAlgebra,
) -> EvoStatus {
    guard(|| {
        let name = read_str(name)?;
        if nparams > 0 && params.is_null() {
            return Err(fail(EvoStatus::NullPointer, "null parameter array"));
        }
        let mut values = Vec::with_capacity(nparams);
        for i in 0..nparams {
            let text = read_str(*params.add(i))?;
            values.push(parse_scalar(text).map_err(from_evo)?);
        }
        let e = catalog::build(name, &values).map_err(from_evo)?;
        write_out(out, into_handle(e))
    })
}

/// # Safety
/// `h` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn evo_algebra_free(h: *mut EvoAlgebra) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn evo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn query<T>(
    h: *const EvoAlgebra,
    out: *mut T,
    f: impl FnOnce(&EvolutionAlgebra) -> Result<T, EvoStatus>,
) -> EvoStatus {
    guard(|| {
        let e = algebra(h)?;
        let value = f(e)?;
        write_out(out, value)
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_algebra_dim(h: *const EvoAlgebra, out: *mut usize) -> EvoStatus {
    query(h, out, |e| Ok(e.dim()))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_annihilator_dim(h: *const EvoAlgebra, out: *mut usize) -> EvoStatus {
    query(h, out, |e| Ok(e.annihilator().dim()))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_is_associative(h: *const EvoAlgebra, out: *mut bool) -> EvoStatus {
    query(h, out, |e| Ok(e.is_associative()))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_is_power_associative(h: *const EvoAlgebra, out: *mut bool) -> EvoStatus {
    query(h, out, |e| Ok(e.is_power_associative()))
}

/// Number of support components in the natural basis.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_component_count(h: *const EvoAlgebra, out: *mut usize) -> EvoStatus {
    query(h, out, |e| Ok(support_components(e).len()))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_derivation_dim(h: *const EvoAlgebra, out: *mut usize) -> EvoStatus {
    query(h, out, |e| Ok(derivation_basis(e).len()))
}

/// Dimension of the derived subalgebra `[D, D]`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_derived_dim(h: *const EvoAlgebra, out: *mut usize) -> EvoStatus {
    query(h, out, |e| {
        derived_subalgebra(e.dim(), &derivation_basis(e))
            .map(|s| s.dim())
            .map_err(from_evo)
    })
}

/// Fails with `EVO_STATUS_NOT_POWER_ASSOCIATIVE` outside the Jordan setting.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evo_inner_derivation_dim(h: *const EvoAlgebra, out: *mut usize) -> EvoStatus {
    query(h, out, |e| inner_derivations(e).map(|s| s.dim()).map_err(from_evo))
}

/// Canonical derivation basis as JSON: `{"dim_D": k, "basis": [[[...]]]}`,
/// entries as rational strings, matrices row-major with `d(e_i)` in column `i`.
///
/// # Safety
/// `h` must be a live handle and `out` writable; free the result with
/// `evo_string_free`.
#[no_mangle]
pub unsafe extern "C" fn evo_derivations_json(h: *const EvoAlgebra, out: *mut *mut c_char) -> EvoStatus {
    guard(|| {
        let e = algebra(h)?;
        let basis: Vec<Vec<Vec<String>>> = derivation_basis(e)
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|r| m.row(r).iter().map(format_scalar).collect())
                    .collect()
            })
            .collect();
        let doc = serde_json::json!({ "dim_D": basis.len(), "basis": basis });
        write_out(out, into_c_string(doc.to_string()))
    })
}

/// The algebra as an algebra file (JSON text).
///
/// # Safety
/// `h` must be a live handle and `out` writable; free the result with
/// `evo_string_free`.
#[no_mangle]
pub unsafe extern "C" fn evo_algebra_to_json(h: *const EvoAlgebra, out: *mut *mut c_char) -> EvoStatus {
    guard(|| {
        let e = algebra(h)?;
        write_out(out, into_c_string(AlgebraFile::from_algebra(e, None, None).to_json()))
    })
}
