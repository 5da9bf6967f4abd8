use std::ffi::{c_char, CStr, CString};
use std::ptr;

use hwcone_ffi::*;

fn owned(p: *mut c_char) -> String {
    assert!(!p.is_null(), "{:?}", last_error());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { hwc_string_free(p) };
    s
}

fn last_error() -> Option<String> {
    let p = hwc_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn classify(t: &str, labels: &str) -> (HwcStatus, *mut HwcReport) {
    let t = CString::new(t).unwrap();
    let l = CString::new(labels).unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { hwc_classify(t.as_ptr(), l.as_ptr(), &mut out) };
    (st, out)
}

#[test]
fn classify_round_trip() {
    let (st, r) = classify("D3", "1,0,0");
    assert_eq!(st, HwcStatus::Ok);
    unsafe {
        assert_eq!(hwc_report_n(r), 5);
        assert_eq!(hwc_report_u_minus_dim(r), 4);
        assert!(hwc_report_singular(r) && hwc_report_ufd(r) && hwc_report_condition_d(r));
        assert!(hwc_report_negative_answer(r));
        assert_eq!(owned(hwc_report_dim_e(r)), "6");
        assert_eq!(owned(hwc_report_quadric_count(r)), "1");
        let v: serde_json::Value = serde_json::from_str(&owned(hwc_report_to_json(r))).unwrap();
        assert_eq!(v["n"], 5);
        hwc_report_free(r);
    }
    assert!(last_error().is_none());
}

#[test]
fn bad_arguments_set_status_and_message() {
    let (st, r) = classify("D3", "1,0");
    assert_eq!(st, HwcStatus::InvalidArgument);
    assert!(r.is_null());
    assert!(last_error().unwrap().contains("expects 3"));

    let (st, _) = classify("A1", "0");
    assert_eq!(st, HwcStatus::InvalidArgument);

    let l = CString::new("1,0,0").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { hwc_classify(ptr::null(), l.as_ptr(), &mut out) };
    assert_eq!(st, HwcStatus::NullPointer);

    let bad = [0xffu8, 0];
    let st = unsafe { hwc_classify(bad.as_ptr().cast(), l.as_ptr(), &mut out) };
    assert_eq!(st, HwcStatus::InvalidUtf8);

    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { hwc_presentation_build(b'E' as c_char, 6, &mut p) },
        HwcStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { hwc_presentation_build(b'D' as c_char, 2, &mut p) },
        HwcStatus::InvalidArgument
    );
    assert!(p.is_null());
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        assert_eq!(hwc_report_n(ptr::null()), 0);
        assert!(hwc_report_dim_e(ptr::null()).is_null());
        assert!(!hwc_verification_all_passed(ptr::null()));
        hwc_report_free(ptr::null_mut());
        hwc_presentation_free(ptr::null_mut());
        hwc_verification_free(ptr::null_mut());
        hwc_string_free(ptr::null_mut());
        let mut v = ptr::null_mut();
        assert_eq!(hwc_verify(ptr::null(), &mut v), HwcStatus::NullPointer);
    }
}

#[test]
fn irrep_dimension_strings() {
    let dim = |t: &str, l: &str| {
        let t = CString::new(t).unwrap();
        let l = CString::new(l).unwrap();
        unsafe { hwc_irrep_dimension(t.as_ptr(), l.as_ptr()) }
    };
    assert_eq!(owned(dim("E8", "0,0,0,0,0,0,0,1")), "248");
    assert_eq!(owned(dim("B4", "1,0,0,0")), "9");
    assert!(dim("B4", "1").is_null());
    assert!(last_error().is_some());
}

#[test]
fn presentation_build_verify_and_json() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(hwc_presentation_build(b'B' as c_char, 3, &mut p), HwcStatus::Ok);
        assert_eq!(hwc_presentation_variables(p), 7);
        assert_eq!(hwc_presentation_derivation_count(p), 5);

        let mut v = ptr::null_mut();
        assert_eq!(hwc_verify(p, &mut v), HwcStatus::Ok);
        assert!(hwc_verification_all_passed(v));
        hwc_verification_free(v);

        let json = owned(hwc_presentation_to_json(p));
        hwc_presentation_free(p);

        // flip D2(x_{-1}) and reload
        let mut rec: serde_json::Value = serde_json::from_str(&json).unwrap();
        let xm1 = rec["variables"]
            .as_array()
            .unwrap()
            .iter()
            .position(|x| x == "xm1")
            .unwrap();
        rec["derivations"][0]["images"][xm1][0]["num"] = "1".into();
        let c = CString::new(rec.to_string()).unwrap();
        let mut q = ptr::null_mut();
        assert_eq!(hwc_presentation_from_json(c.as_ptr(), &mut q), HwcStatus::Ok);
        let mut v = ptr::null_mut();
        assert_eq!(hwc_verify(q, &mut v), HwcStatus::VerificationFailed);
        assert!(!v.is_null() && !hwc_verification_all_passed(v));
        assert!(last_error().unwrap().contains("annihilates_relation"));
        let report: serde_json::Value = serde_json::from_str(&owned(hwc_verification_to_json(v))).unwrap();
        assert_eq!(report["all_passed"], false);
        hwc_verification_free(v);
        hwc_presentation_free(q);

        let junk = CString::new("{\"format\": 3}").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(
            hwc_presentation_from_json(junk.as_ptr(), &mut r),
            HwcStatus::InvalidArgument
        );
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(hwc_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
