use std::ffi::{CStr, CString};
use std::ptr;

use superinv_ffi::*;

fn take(s: *mut std::ffi::c_char) -> serde_json::Value {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { superinv_string_free(s) };
    serde_json::from_str(&text).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(superinv_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn algebra_handle_lifecycle() {
    let fam = CString::new("gl").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { superinv_algebra_new(fam.as_ptr(), 1, 1, &mut alg) }, SuperinvStatus::Ok);
    let mut dim = 0usize;
    assert_eq!(unsafe { superinv_algebra_dim(alg, &mut dim) }, SuperinvStatus::Ok);
    assert_eq!(dim, 4);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { superinv_algebra_json(alg, &mut out) }, SuperinvStatus::Ok);
    let v = take(out);
    assert_eq!(v["label"], "gl(1|1)");
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    unsafe { superinv_algebra_free(alg) };
}

#[test]
fn z_sigma_round_trip() {
    let fam = CString::new("gl").unwrap();
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { superinv_algebra_new(fam.as_ptr(), 1, 1, &mut alg) }, SuperinvStatus::Ok);
    let perm = CString::new("(1 2)").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { superinv_z_sigma_json(alg, perm.as_ptr(), 2, &mut out) }, SuperinvStatus::Ok);
    let v = take(out);
    assert_eq!(v["central"], true);
    let bad = CString::new("(1 5)").unwrap();
    let status = unsafe { superinv_z_sigma_json(alg, bad.as_ptr(), 2, &mut out) };
    assert_eq!(status, SuperinvStatus::InvalidArgument);
    assert!(out.is_null());
    assert!(!last_error().is_empty());
    unsafe { superinv_algebra_free(alg) };
}

#[test]
fn error_codes() {
    let mut alg = ptr::null_mut();
    let fam = CString::new("so").unwrap();
    assert_eq!(unsafe { superinv_algebra_new(fam.as_ptr(), 1, 1, &mut alg) }, SuperinvStatus::InvalidArgument);
    assert!(alg.is_null());
    assert!(last_error().contains("unknown family"));
    assert_eq!(unsafe { superinv_algebra_new(ptr::null(), 1, 1, &mut alg) }, SuperinvStatus::NullPointer);
    assert_eq!(unsafe { superinv_algebra_dim(ptr::null(), ptr::null_mut()) }, SuperinvStatus::NullPointer);
    unsafe { superinv_algebra_free(ptr::null_mut()) };
    unsafe { superinv_string_free(ptr::null_mut()) };
}

#[test]
fn run_commands() {
    let args = CString::new(r#"["brauer","--k","3"]"#).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { superinv_run_json(args.as_ptr(), &mut out) }, SuperinvStatus::Ok);
    let v = take(out);
    assert_eq!(v["total"], 15);
    assert_eq!(v["counts"]["3^1"], 8);
    assert_eq!(last_error(), "");

    let args = CString::new(r#"["hc","--family","q","--n","2"]"#).unwrap();
    assert_eq!(unsafe { superinv_run_json(args.as_ptr(), &mut out) }, SuperinvStatus::InvalidArgument);
    assert!(out.is_null());

    let args = CString::new("not json").unwrap();
    assert_eq!(unsafe { superinv_run_json(args.as_ptr(), &mut out) }, SuperinvStatus::InvalidArgument);
}

#[test]
fn header_declares_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/superinv.h")).unwrap();
    for name in [
        "superinv_algebra_new",
        "superinv_algebra_free",
        "superinv_algebra_dim",
        "superinv_algebra_json",
        "superinv_z_sigma_json",
        "superinv_run_json",
        "superinv_string_free",
        "superinv_last_error",
        "SUPERINV_STATUS_OK",
        "typedef struct SuperinvAlgebra SuperinvAlgebra",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
