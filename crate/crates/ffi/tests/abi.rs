use std::ffi::{CStr, CString};
use std::ptr;

use lefschetz_ffi::*;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    lf_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = lf_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn params_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(lf_params_new(4, 3, 2, 2, 1, 1, &mut p), LfStatus::Ok);
        let mut d = 0;
        assert_eq!(lf_params_socle_degree(p, &mut d), LfStatus::Ok);
        assert_eq!(d, 5);
        let mut json = ptr::null_mut();
        assert_eq!(lf_params_info_json(p, &mut json), LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["D"], 5);
        lf_params_free(p);
    }
}

#[test]
fn invalid_params_name_the_constraint() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(lf_params_new(4, 3, 2, 1, 1, 1, &mut p), LfStatus::InvalidParams);
        assert!(p.is_null());
        assert!(last_error().contains("alpha+gamma != b"));
        assert_eq!(lf_params_new(3, 2, 2, 1, 1, 1, &mut p), LfStatus::Ok);
        assert!(lf_last_error_message().is_null());
        lf_params_free(p);
    }
}

#[test]
fn null_pointers_are_reported() {
    unsafe {
        let mut d = 0;
        assert_eq!(lf_params_socle_degree(ptr::null(), &mut d), LfStatus::NullPointer);
        assert_eq!(lf_params_new(3, 2, 2, 1, 1, 1, ptr::null_mut()), LfStatus::NullPointer);
        assert_eq!(lf_algebra_from_dual(ptr::null(), 3, &mut ptr::null_mut()), LfStatus::NullPointer);
        lf_params_free(ptr::null_mut());
        lf_algebra_free(ptr::null_mut());
        lf_string_free(ptr::null_mut());
    }
}

#[test]
fn hilbert_and_wlp_for_a_family_member() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(lf_params_new(3, 2, 2, 1, 1, 1, &mut p), LfStatus::Ok);
        let mut a = ptr::null_mut();
        assert_eq!(lf_algebra_from_params(p, &mut a), LfStatus::Ok);
        lf_params_free(p);

        let mut needed = 0;
        assert_eq!(lf_algebra_hilbert(a, ptr::null_mut(), 0, &mut needed), LfStatus::Ok);
        assert_eq!(needed, 4);
        let mut buf = vec![0u64; needed];
        assert_eq!(lf_algebra_hilbert(a, buf.as_mut_ptr(), buf.len(), &mut needed), LfStatus::Ok);
        assert_eq!(buf, [1, 3, 3, 1]);

        let form = [1i64, -1, 1];
        let mut json = ptr::null_mut();
        assert_eq!(lf_wlp_check(a, LfMethod::Both, form.as_ptr(), 7, &mut json), LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["verdict"], "has-wlp");
        assert_eq!(v["oracles_agree"], true);
        assert_eq!(v["given_form"]["lefschetz"], true);
        lf_algebra_free(a);
    }
}

#[test]
fn vanishing_hessian_cubic_has_no_wlp() {
    unsafe {
        let f = CString::new("x0*x3^2 + x1*x3*x4 + x2*x4^2").unwrap();
        let mut a = ptr::null_mut();
        assert_eq!(lf_algebra_from_dual(f.as_ptr(), 5, &mut a), LfStatus::Ok);
        let mut n = 0;
        assert_eq!(lf_algebra_nvars(a, &mut n), LfStatus::Ok);
        assert_eq!(n, 5);
        let mut json = ptr::null_mut();
        assert_eq!(lf_wlp_check(a, LfMethod::Multmap, ptr::null(), 1, &mut json), LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["verdict"], "no-wlp");
        assert_eq!(v["witness"]["certificate"], "symbolic");
        lf_algebra_free(a);
    }
}

#[test]
fn bad_dual_generators() {
    unsafe {
        let mut a = ptr::null_mut();
        let f = CString::new("x^2 + y").unwrap();
        assert_eq!(lf_algebra_from_dual(f.as_ptr(), 3, &mut a), LfStatus::InvalidInput);
        assert!(last_error().contains("homogeneous"));
        let f = CString::new("x^^2").unwrap();
        assert_eq!(lf_algebra_from_dual(f.as_ptr(), 3, &mut a), LfStatus::InvalidInput);
        let bytes = [0xffu8, 0];
        assert_eq!(lf_algebra_from_dual(bytes.as_ptr().cast(), 3, &mut a), LfStatus::InvalidUtf8);
        assert!(a.is_null());
    }
}

#[test]
fn apery_json() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(lf_apery_json([4u64, 5, 6, 7].as_ptr(), &mut json), LfStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["m_pure_symmetric"], false);
        assert_eq!(v["witness"]["index"], 2);
        assert_eq!(lf_apery_json([2u64, 4, 6, 8].as_ptr(), &mut json), LfStatus::InvalidInput);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(lf_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/lefschetz.h")).unwrap();
    for name in [
        "lf_last_error_message",
        "lf_version",
        "lf_string_free",
        "lf_params_new",
        "lf_params_free",
        "lf_params_socle_degree",
        "lf_params_info_json",
        "lf_algebra_from_params",
        "lf_algebra_from_dual",
        "lf_algebra_free",
        "lf_algebra_socle_degree",
        "lf_algebra_nvars",
        "lf_algebra_hilbert",
        "lf_wlp_check",
        "lf_apery_json",
        "typedef struct LfAlgebra LfAlgebra",
        "LF_STATUS_INVALID_PARAMS = 2",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
