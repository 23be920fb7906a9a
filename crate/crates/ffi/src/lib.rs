//! C bindings for `orientcomp`.
//!
//! Pogs live behind the opaque [`OcPog`] handle. Every call returns an
//! [`OcStatus`]; on an error status the message is available from
//! [`oc_last_error_message`] until the next failing call on the same thread.
//! Strings handed out by the library are NUL-terminated UTF-8 and must be
//! released with [`oc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orientcomp::hardness::{build_reduction, CnfFormula};
use orientcomp::pog::RenderFormat;
use orientcomp::report::Report;
use orientcomp::{classify, complete, verify_certificate, Certificate, CompletionClass, Error, Pog};

/// Result codes. `OC_STATUS_NO` is a definite negative answer, not an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OcStatus {
    Ok = 0,
    No = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    InvalidInput = 5,
    SizeGuard = 6,
    Unsupported = 7,
    Panic = 8,
}

/// Output formats for [`oc_pog_render`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OcFormat {
    Native = 0,
    Dot = 1,
}

/// A partially oriented graph.
pub struct OcPog(Pog);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(OcStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::Parse { .. } | Error::MalformedFormula(_) => OcStatus::Parse,
            Error::SizeGuard(_) => OcStatus::SizeGuard,
            Error::UnsupportedInstance(_) | Error::NotFriendly(_) => OcStatus::Unsupported,
            _ => OcStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, recording the message of any failure or panic.
fn guard(f: impl FnOnce() -> Result<OcStatus, Failure>) -> OcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {message}"));
            OcStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure(OcStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Failure(OcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn pog<'a>(p: *const OcPog) -> Result<&'a Pog, Failure> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| Failure(OcStatus::NullArgument, "pog is null".into()))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior NUL").into_raw();
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(OcStatus::NullArgument, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

/// Parses the native line format (`v`, `edge`, `arc` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_pog_parse(text: *const c_char, out: *mut *mut OcPog) -> OcStatus {
    guard(|| {
        check_out(out)?;
        let p = Pog::parse(self::text(text, "text")?)?;
        *out = Box::into_raw(Box::new(OcPog(p)));
        Ok(OcStatus::Ok)
    })
}

/// Releases a pog. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn oc_pog_free(p: *mut OcPog) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn oc_pog_vertex_count(p: *const OcPog) -> usize {
    p.as_ref().map_or(0, |h| h.0.n())
}

/// Renders the pog as text.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_pog_render(p: *const OcPog, format: OcFormat, out: *mut *mut c_char) -> OcStatus {
    guard(|| {
        check_out(out)?;
        let format = match format {
            OcFormat::Native => RenderFormat::Native,
            OcFormat::Dot => RenderFormat::Dot,
        };
        put_string(out, pog(p)?.render(format));
        Ok(OcStatus::Ok)
    })
}

/// Completes `p` to the named class (`lt`, `acyclic-lt`, `ltlt-friendly`,
/// `ltt-exact`, `transitive`, `in-tournament`, `quasi-transitive`, `strong`,
/// `cycle-factor`).
///
/// On `OC_STATUS_OK` or `OC_STATUS_NO`, `report_json` receives the JSON
/// report: the arcs of the completion or a certificate.
///
/// # Safety
/// `p` must be a live handle, `class` a NUL-terminated string and
/// `report_json` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_complete(p: *const OcPog, class: *const c_char, report_json: *mut *mut c_char) -> OcStatus {
    guard(|| {
        check_out(report_json)?;
        let p = pog(p)?;
        let class: CompletionClass = text(class, "class")?.parse()?;
        let (status, report) = match complete(p, class)? {
            Ok(d) => (OcStatus::Ok, Report::yes(class.name()).with_arcs(&d)),
            Err(c) => (OcStatus::No, Report::no(class.name()).with_certificate(&c, p)),
        };
        put_string(report_json, report.to_json_string());
        Ok(status)
    })
}

/// Writes the structural predicates of the arc digraph as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_classify(p: *const OcPog, out: *mut *mut c_char) -> OcStatus {
    guard(|| {
        check_out(out)?;
        let report = classify(pog(p)?);
        put_string(out, serde_json::to_string(&report).expect("report serializes"));
        Ok(OcStatus::Ok)
    })
}

/// Checks a certificate given as JSON. Returns `OC_STATUS_OK` when it
/// refutes `p` and `OC_STATUS_NO` when it does not.
///
/// # Safety
/// `p` must be a live handle and `certificate_json` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn oc_verify_certificate(p: *const OcPog, certificate_json: *const c_char) -> OcStatus {
    guard(|| {
        let p = pog(p)?;
        let c = Certificate::from_json(text(certificate_json, "certificate")?, p)?;
        Ok(if verify_certificate(p, &c) { OcStatus::Ok } else { OcStatus::No })
    })
}

/// Builds the reduction instance of a DIMACS 3-CNF formula.
///
/// # Safety
/// `dimacs` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn oc_reduce_3sat(dimacs: *const c_char, out: *mut *mut OcPog) -> OcStatus {
    guard(|| {
        check_out(out)?;
        let f = CnfFormula::parse_dimacs(text(dimacs, "dimacs")?)?;
        let r = build_reduction(&f)?;
        *out = Box::into_raw(Box::new(OcPog(r.pog)));
        Ok(OcStatus::Ok)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn oc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failure on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn oc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
