//! C interface: opaque session handles, integer status codes and a
//! thread-local last-error message.
//!
//! Strings returned through `out` parameters are owned by the caller and
//! must be released with `sizett_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use sizett::frontend::print::restore_el;
use sizett::frontend::{print_term, print_type};
use sizett::kernel::TypeError;
use sizett::model::vectors;
use sizett::nbe::quote::{readback_with, Unfold};
use sizett::nbe::{eval, Env};
use sizett::session::{LoadError, Options, Session};
use sizett::syntax::Term;

/// Status codes; the first four match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizettStatus {
    Ok = 0,
    TypeError = 1,
    ParseError = 2,
    IoError = 3,
    InvalidArgument = 4,
    Panic = 5,
}

/// A checking session: the prelude plus every file loaded into it.
pub struct SizettSession {
    inner: Session,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<(CString, CString)>> = const { RefCell::new(None) };
}

fn set_error(kind: &str, message: &str) {
    let clean = |s: &str| CString::new(s.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some((clean(kind), clean(message))));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn load_status(e: &LoadError) -> SizettStatus {
    set_error(e.kind(), &e.to_string());
    match e.exit_code() {
        2 => SizettStatus::ParseError,
        3 => SizettStatus::IoError,
        _ => SizettStatus::TypeError,
    }
}

fn type_status(e: &TypeError) -> SizettStatus {
    set_error(e.kind(), &e.to_string());
    SizettStatus::TypeError
}

fn invalid(what: &str) -> SizettStatus {
    set_error("InvalidArgument", what);
    SizettStatus::InvalidArgument
}

/// Run `f` with panics turned into `Panic`.
fn guard(f: impl FnOnce() -> SizettStatus) -> SizettStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("Panic", "internal error");
            SizettStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, SizettStatus> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(&format!("{what} is not UTF-8")))
}

unsafe fn session_arg<'a>(s: *mut SizettSession) -> Result<&'a mut SizettSession, SizettStatus> {
    s.as_mut().ok_or_else(|| invalid("session is null"))
}

unsafe fn write_out(out: *mut *mut c_char, s: String) -> SizettStatus {
    if out.is_null() {
        return invalid("out is null");
    }
    *out = CString::new(s.replace('\0', " ")).unwrap().into_raw();
    SizettStatus::Ok
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Create a session with the prelude loaded. Returns null on failure; the
/// reason is available from `sizett_last_error`.
#[no_mangle]
pub extern "C" fn sizett_session_new(allow_axioms: bool) -> *mut SizettSession {
    let mut handle = ptr::null_mut();
    guard(|| match Session::new(Options { allow_axioms }) {
        Ok(inner) => {
            handle = Box::into_raw(Box::new(SizettSession { inner }));
            SizettStatus::Ok
        }
        Err(e) => load_status(&e),
    });
    handle
}

/// Release a session. Null is ignored.
///
/// # Safety
/// `s` must come from `sizett_session_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sizett_session_free(s: *mut SizettSession) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Check a `.smltt` file, or every file of a directory in manifest order.
///
/// # Safety
/// `s` must be a live session and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sizett_load_path(s: *mut SizettSession, path: *const c_char) -> SizettStatus {
    guard(|| {
        let s = tri!(session_arg(s));
        let path = tri!(str_arg(path, "path"));
        match s.inner.load_path(Path::new(path)) {
            Ok(()) => SizettStatus::Ok,
            Err(e) => load_status(&e),
        }
    })
}

/// Number of declarations checked so far, prelude included.
///
/// # Safety
/// `s` must be a live session or null.
#[no_mangle]
pub unsafe extern "C" fn sizett_declaration_count(s: *const SizettSession) -> usize {
    s.as_ref().map_or(0, |s| s.inner.kernel.globals.len())
}

fn global_or_expression(s: &Session, src: &str) -> Result<(Option<Term>, Option<Term>), SizettStatus> {
    if let Some(g) = s.resolve_global(src.trim()).and_then(|n| s.kernel.lookup(&n)) {
        return Ok((g.ty_term.clone(), g.body.clone()));
    }
    let t = s.expression(src).map_err(|e| load_status(&e))?;
    let ty = s.kernel.infer_closed(&t).map_err(|e| type_status(&e))?;
    Ok((Some(readback_with(Unfold::Never, 0, &ty)), Some(t)))
}

/// The normalised type of a global name or closed expression.
///
/// # Safety
/// `s` must be a live session, `expr` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sizett_type_of(
    s: *mut SizettSession,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> SizettStatus {
    guard(|| {
        let s = tri!(session_arg(s));
        let src = tri!(str_arg(expr, "expr"));
        let (ty, _) = tri!(global_or_expression(&s.inner, src));
        let Some(ty) = ty else {
            return invalid("schematic declarations have no closed type");
        };
        let nf = readback_with(Unfold::Never, 0, &eval(&Env::new(), &ty));
        write_out(out, print_type(&restore_el(&nf)))
    })
}

/// Normal form of a global's body or of a closed expression; `unfold`
/// also unfolds definitions.
///
/// # Safety
/// As for `sizett_type_of`.
#[no_mangle]
pub unsafe extern "C" fn sizett_normalize(
    s: *mut SizettSession,
    expr: *const c_char,
    unfold: bool,
    out: *mut *mut c_char,
) -> SizettStatus {
    guard(|| {
        let s = tri!(session_arg(s));
        let src = tri!(str_arg(expr, "expr"));
        let (_, body) = tri!(global_or_expression(&s.inner, src));
        let Some(body) = body else {
            return invalid("axioms have no normal form");
        };
        let k = &s.inner.kernel;
        let mode = if unfold { Unfold::Always(&k.globals) } else { Unfold::Never };
        let v = eval(&Env::new(), &body);
        write_out(out, print_term(&readback_with(mode, 0, &v)))
    })
}

/// Axioms a global depends on, as `{a, b}`.
///
/// # Safety
/// As for `sizett_type_of`.
#[no_mangle]
pub unsafe extern "C" fn sizett_used_axioms(
    s: *mut SizettSession,
    name: *const c_char,
    out: *mut *mut c_char,
) -> SizettStatus {
    guard(|| {
        let s = tri!(session_arg(s));
        let name = tri!(str_arg(name, "name"));
        let Some(full) = s.inner.resolve_global(name.trim()) else {
            return type_status(&TypeError::UnknownName(name.trim().into()));
        };
        match s.inner.used_axioms(&full) {
            Ok(set) => {
                let names: Vec<String> = set.iter().map(|a| a.to_string()).collect();
                write_out(out, format!("{{{}}}", names.join(", ")))
            }
            Err(e) => type_status(&e),
        }
    })
}

/// Run model-oracle vectors (the shipped set when `text` is null). Writes
/// one `pass`/`FAIL` line per vector; `TypeError` means some vector failed.
///
/// # Safety
/// `text` must be null or NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sizett_model_test(
    text: *const c_char,
    fuel: u64,
    out: *mut *mut c_char,
) -> SizettStatus {
    guard(|| {
        let text = if text.is_null() { vectors::DEFAULT_VECTORS } else { tri!(str_arg(text, "text")) };
        let vs = match vectors::parse(text) {
            Ok(v) => v,
            Err(e) => {
                set_error("SyntaxError", &e);
                return SizettStatus::ParseError;
            }
        };
        let mut report = String::new();
        let mut failed = 0;
        for v in &vs {
            let r = vectors::run(v, fuel);
            failed += usize::from(!r.pass);
            let tag = if r.pass { "pass" } else { "FAIL" };
            report += &format!("{tag} {} {}\n", v.kind(), r.detail);
        }
        let status = write_out(out, report);
        if status == SizettStatus::Ok && failed > 0 {
            set_error("ModelFailure", &format!("{failed} vectors failed"));
            return SizettStatus::TypeError;
        }
        status
    })
}

/// Free a string returned by this library. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sizett_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sizett_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |(_, m)| m.as_ptr()))
}

/// Diagnostic kind of the last failure (`TypeMismatch`, `SyntaxError`, ...).
#[no_mangle]
pub extern "C" fn sizett_last_error_kind() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |(k, _)| k.as_ptr()))
}

/// Library version, static.
#[no_mangle]
pub extern "C" fn sizett_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
