use std::ffi::{c_char, CStr, CString};
use std::ptr;

use orientcomp_ffi::*;
use serde_json::Value;

fn parse(text: &str) -> *mut OcPog {
    let c = CString::new(text).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { oc_pog_parse(c.as_ptr(), &mut p) }, OcStatus::Ok);
    p
}

/// Takes ownership of a library string.
fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { oc_string_free(s) };
    out
}

fn last_error() -> String {
    let m = oc_last_error_message();
    assert!(!m.is_null());
    unsafe { CStr::from_ptr(m) }.to_str().unwrap().to_string()
}

fn complete(p: *const OcPog, class: &str) -> (OcStatus, Value) {
    let class = CString::new(class).unwrap();
    let mut out = ptr::null_mut();
    let status = unsafe { oc_complete(p, class.as_ptr(), &mut out) };
    (status, serde_json::from_str(&take(out)).unwrap())
}

#[test]
fn parse_render_and_free() {
    let p = parse("edge a b\narc b c\n");
    assert_eq!(unsafe { oc_pog_vertex_count(p) }, 3);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { oc_pog_render(p, OcFormat::Native, &mut out) }, OcStatus::Ok);
    assert_eq!(take(out), "v a\nv b\nv c\nedge a b\narc b c\n");
    assert_eq!(unsafe { oc_pog_render(p, OcFormat::Dot, &mut out) }, OcStatus::Ok);
    assert!(take(out).contains("\"b\" -> \"c\""));
    unsafe { oc_pog_free(p) };
    unsafe { oc_pog_free(ptr::null_mut()) };
    assert_eq!(unsafe { oc_pog_vertex_count(ptr::null()) }, 0);
}

#[test]
fn completion_and_refusal() {
    let p3 = parse("edge a b\nedge b c\n");
    let (status, report) = complete(p3, "lt");
    assert_eq!(status, OcStatus::Ok);
    assert_eq!(report["status"], "yes");
    assert_eq!(report["arcs"].as_array().unwrap().len(), 2);

    let claw = parse("edge c x\nedge c y\nedge c z\n");
    let (status, report) = complete(claw, "lt");
    assert_eq!(status, OcStatus::No);
    let cert = CString::new(report["certificate"].to_string()).unwrap();
    assert_eq!(unsafe { oc_verify_certificate(claw, cert.as_ptr()) }, OcStatus::Ok);
    assert_eq!(unsafe { oc_verify_certificate(p3, cert.as_ptr()) }, OcStatus::InvalidInput);
    let fork = parse("edge c x\nedge c y\nv z\n");
    assert_eq!(unsafe { oc_verify_certificate(fork, cert.as_ptr()) }, OcStatus::No);
    unsafe {
        oc_pog_free(p3);
        oc_pog_free(claw);
        oc_pog_free(fork);
    }
}

#[test]
fn classification_json() {
    let c3 = parse("arc a b\narc b c\narc c a\n");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { oc_classify(c3, &mut out) }, OcStatus::Ok);
    let v: Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["is_tournament"], true);
    assert_eq!(v["is_acyclic"], false);
    unsafe { oc_pog_free(c3) };
}

#[test]
fn reduction_instance() {
    let f = CString::new("p cnf 3 3\n1 2 -3 0\n-1 -2 3 0\n1 -2 -3 0\n").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { oc_reduce_3sat(f.as_ptr(), &mut p) }, OcStatus::Ok);
    assert_eq!(unsafe { oc_pog_vertex_count(p) }, 27);
    unsafe { oc_pog_free(p) };
}

#[test]
fn error_codes_and_messages() {
    let mut p = ptr::null_mut();
    let bad = CString::new("v a\nedge a a\n").unwrap();
    assert_eq!(unsafe { oc_pog_parse(bad.as_ptr(), &mut p) }, OcStatus::Parse);
    assert!(p.is_null());
    assert!(last_error().starts_with("line 2"));

    assert_eq!(unsafe { oc_pog_parse(ptr::null(), &mut p) }, OcStatus::NullArgument);
    let valid = CString::new("v a\n").unwrap();
    assert_eq!(unsafe { oc_pog_parse(valid.as_ptr(), ptr::null_mut()) }, OcStatus::NullArgument);

    let latin1 = [0xe9u8, 0];
    assert_eq!(unsafe { oc_pog_parse(latin1.as_ptr() as *const c_char, &mut p) }, OcStatus::InvalidUtf8);

    let g = parse("edge a b\n");
    let class = CString::new("nope").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { oc_complete(g, class.as_ptr(), &mut out) }, OcStatus::Unsupported);
    assert!(out.is_null());
    assert!(last_error().contains("nope"));

    let cert = CString::new("{\"tag\": \"Bogus\"}").unwrap();
    assert_eq!(unsafe { oc_verify_certificate(g, cert.as_ptr()) }, OcStatus::InvalidInput);

    let formula = CString::new("p cnf 2 1\n1 2 0\n").unwrap();
    assert_eq!(unsafe { oc_reduce_3sat(formula.as_ptr(), &mut p) }, OcStatus::Parse);
    unsafe { oc_pog_free(g) };
}

#[test]
fn size_guard_is_reported() {
    let mut text = String::new();
    for u in 0..12 {
        for v in u + 1..12 {
            text.push_str(&format!("edge v{u} v{v}\n"));
        }
    }
    let k12 = parse(&text);
    let class = CString::new("cycle-factor").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { oc_complete(k12, class.as_ptr(), &mut out) }, OcStatus::SizeGuard);
    unsafe { oc_pog_free(k12) };
}
