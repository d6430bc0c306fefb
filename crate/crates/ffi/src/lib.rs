//! C ABI over `hopfcoh`. Objects live behind opaque handles; every call returns a
//! [`HopfcohStatus`] and leaves a message for [`hopfcoh_last_error`] when it fails.
//! Strings handed out by this library are freed with [`hopfcoh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopfcoh::cohomology::{cap_from_env, derived_coinvariants, ext_h};
use hopfcoh::commands::{self, ComputeArgs};
use hopfcoh::fixtures::fixture_workspace;
use hopfcoh::suite::SuiteOptions;
use hopfcoh::workspace::Workspace;
use hopfcoh::Error;

/// Result of every call. The numeric values match the command-line exit codes where they overlap.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfcohStatus {
    Ok = 0,
    /// An object failed its axioms or a hypothesis (for example cosemisimplicity) does not hold.
    Validation = 1,
    /// A suite check failed.
    CheckFailed = 2,
    /// Malformed input or an unknown name.
    Parse = 3,
    /// A required pointer argument was null.
    NullArgument = 4,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 5,
    /// An output buffer is too short; the required length was written where documented.
    BufferTooSmall = 6,
    /// A computation would exceed the resource cap.
    ResourceLimit = 7,
    /// An internal panic was caught at the boundary.
    Internal = 8,
}

/// A loaded, validated workspace.
pub struct HopfcohWorkspace {
    inner: Workspace,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let clean = message.replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).expect("no interior nul"));
}

fn status_of(e: &Error) -> HopfcohStatus {
    match e {
        Error::ResourceLimit { .. } => HopfcohStatus::ResourceLimit,
        _ if e.exit_code() == 3 => HopfcohStatus::Parse,
        _ => HopfcohStatus::Validation,
    }
}

fn fail(status: HopfcohStatus, message: &str) -> HopfcohStatus {
    set_error(message);
    status
}

/// Runs `f`, turning errors and panics into status codes.
fn guarded(f: impl FnOnce() -> Result<HopfcohStatus, HopfcohStatus>) -> HopfcohStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(s)) => s,
        Err(_) => fail(HopfcohStatus::Internal, "internal panic"),
    }
}

fn lift<T>(r: hopfcoh::Result<T>) -> Result<T, HopfcohStatus> {
    r.map_err(|e| fail(status_of(&e), &e.to_string()))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, HopfcohStatus> {
    if p.is_null() {
        return Err(fail(HopfcohStatus::NullArgument, &format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(HopfcohStatus::InvalidUtf8, &format!("{what} is not UTF-8")))
}

unsafe fn read_opt(p: *const c_char, what: &str) -> Result<Option<String>, HopfcohStatus> {
    if p.is_null() {
        Ok(None)
    } else {
        read_str(p, what).map(|s| Some(s.to_string()))
    }
}

unsafe fn workspace<'a>(ws: *const HopfcohWorkspace) -> Result<&'a Workspace, HopfcohStatus> {
    ws.as_ref().map(|w| &w.inner).ok_or_else(|| fail(HopfcohStatus::NullArgument, "workspace is null"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), HopfcohStatus> {
    if out.is_null() {
        return Err(fail(HopfcohStatus::NullArgument, "output pointer is null"));
    }
    *out = CString::new(s).map_err(|_| fail(HopfcohStatus::Internal, "output has an interior nul"))?.into_raw();
    Ok(())
}

unsafe fn write_handle(out: *mut *mut HopfcohWorkspace, ws: Workspace) -> Result<HopfcohStatus, HopfcohStatus> {
    if out.is_null() {
        return Err(fail(HopfcohStatus::NullArgument, "output pointer is null"));
    }
    *out = Box::into_raw(Box::new(HopfcohWorkspace { inner: ws }));
    Ok(HopfcohStatus::Ok)
}

unsafe fn write_dims(dims: &[usize], out: *mut usize, capacity: usize, written: *mut usize) -> Result<HopfcohStatus, HopfcohStatus> {
    if written.is_null() {
        return Err(fail(HopfcohStatus::NullArgument, "length pointer is null"));
    }
    *written = dims.len();
    if capacity < dims.len() {
        return Err(fail(HopfcohStatus::BufferTooSmall, &format!("need room for {} dimensions", dims.len())));
    }
    if out.is_null() {
        return Err(fail(HopfcohStatus::NullArgument, "dimension buffer is null"));
    }
    ptr::copy_nonoverlapping(dims.as_ptr(), out, dims.len());
    Ok(HopfcohStatus::Ok)
}

/// The message of the last failed call on this thread. Valid until the next call on the thread.
#[no_mangle]
pub extern "C" fn hopfcoh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a workspace from its JSON text.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_workspace_parse(json: *const c_char, out: *mut *mut HopfcohWorkspace) -> HopfcohStatus {
    guarded(|| {
        let text = read_str(json, "json")?;
        write_handle(out, lift(Workspace::parse(text))?)
    })
}

/// Loads one of the shipped fixture workspaces by name.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_workspace_fixture(name: *const c_char, out: *mut *mut HopfcohWorkspace) -> HopfcohStatus {
    guarded(|| {
        let name = read_str(name, "name")?;
        write_handle(out, lift(fixture_workspace(name))?)
    })
}

/// Frees a workspace. Null is ignored.
///
/// # Safety
/// `ws` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_workspace_free(ws: *mut HopfcohWorkspace) {
    if !ws.is_null() {
        drop(Box::from_raw(ws));
    }
}

/// The canonical JSON text of a workspace.
///
/// # Safety
/// `ws` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_workspace_to_json(ws: *const HopfcohWorkspace, out: *mut *mut c_char) -> HopfcohStatus {
    guarded(|| {
        let ws = workspace(ws)?;
        write_string(out, ws.to_json())?;
        Ok(HopfcohStatus::Ok)
    })
}

/// `dim R^p(M)` for `p = 0..=qmax` of the comodule named `comodule`. `dims` must hold
/// `qmax + 1` entries; `written` receives the number of degrees.
///
/// # Safety
/// Pointers must be valid; `dims` must have room for `capacity` entries.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_derived_coinvariants(
    ws: *const HopfcohWorkspace,
    comodule: *const c_char,
    qmax: usize,
    dims: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> HopfcohStatus {
    guarded(|| {
        let ws = workspace(ws)?;
        let m = lift(ws.comodule(read_str(comodule, "comodule")?))?;
        let d = lift(derived_coinvariants(m, qmax, cap_from_env()))?;
        write_dims(&d, dims, capacity, written)
    })
}

/// `dim Ext^p_H(M, N)` for `p = 0..=qmax`; buffer rules as in [`hopfcoh_derived_coinvariants`].
///
/// # Safety
/// Pointers must be valid; `dims` must have room for `capacity` entries.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_ext(
    ws: *const HopfcohWorkspace,
    source: *const c_char,
    target: *const c_char,
    qmax: usize,
    dims: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> HopfcohStatus {
    guarded(|| {
        let ws = workspace(ws)?;
        let m = lift(ws.comodule(read_str(source, "source")?))?;
        let n = lift(ws.comodule(read_str(target, "target")?))?;
        let d = lift(ext_h(m, n, qmax, cap_from_env()))?;
        write_dims(&d, dims, capacity, written)
    })
}

/// Runs a `compute` target and returns its JSON report. `object`, `source`, `target_object`
/// and `hopf` may be null.
///
/// # Safety
/// Non-null strings must be nul-terminated; `ws` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_compute(
    ws: *const HopfcohWorkspace,
    target: *const c_char,
    object: *const c_char,
    source: *const c_char,
    target_object: *const c_char,
    hopf: *const c_char,
    qmax: usize,
    out: *mut *mut c_char,
) -> HopfcohStatus {
    guarded(|| {
        let ws = workspace(ws)?;
        let what = read_str(target, "target")?;
        let args = ComputeArgs {
            object: read_opt(object, "object")?,
            source: read_opt(source, "source")?,
            target: read_opt(target_object, "target_object")?,
            hopf: read_opt(hopf, "hopf")?,
            qmax,
            cap: cap_from_env(),
        };
        let result = lift(commands::compute(ws, what, &args))?;
        write_string(out, result.json_string())?;
        Ok(HopfcohStatus::Ok)
    })
}

/// Runs the theorem suite (`selector` is `all`, a group or a check name) and returns the JSON
/// report. Returns `CheckFailed` when a check fails; the report is written either way.
///
/// # Safety
/// `selector` must be nul-terminated; `ws` must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hopfcoh_check(
    ws: *const HopfcohWorkspace,
    selector: *const c_char,
    pmax: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> HopfcohStatus {
    guarded(|| {
        let ws = workspace(ws)?;
        let selector = read_str(selector, "selector")?;
        let opts = SuiteOptions { pmax, cap: cap_from_env(), seed };
        let (report, output) = lift(commands::check(&[("workspace".to_string(), ws.clone())], selector, &opts))?;
        write_string(out, output.json_string())?;
        if report.all_passed() {
            Ok(HopfcohStatus::Ok)
        } else {
            Err(fail(HopfcohStatus::CheckFailed, &format!("{} checks failed", report.failures().len())))
        }
    })
}
