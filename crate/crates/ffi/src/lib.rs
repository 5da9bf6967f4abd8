//! C ABI over `hwcone`.
//!
//! Objects are opaque handles created by `hwc_*` constructors and released
//! by the matching `*_free`. Fallible calls return an [`HwcStatus`]; the
//! message for the most recent failure on the calling thread is available
//! from [`hwc_last_error_message`]. Strings returned as `char *` are owned
//! by the caller and must be released with [`hwc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hwcone::{CartanType, ClassificationReport, ConePresentation, Error, Family, RootSystem, VerificationReport};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HwcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    VerificationFailed = 4,
    ConditionMismatch = 5,
    Internal = 6,
}

pub struct HwcReport(ClassificationReport);

pub struct HwcPresentation(ConePresentation);

pub struct HwcVerification(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> HwcStatus {
    match e {
        Error::ConditionMismatch { .. } => HwcStatus::ConditionMismatch,
        Error::Io(_) => HwcStatus::Internal,
        _ => HwcStatus::InvalidArgument,
    }
}

fn fail(status: HwcStatus, msg: impl Into<String>) -> HwcStatus {
    set_error(msg);
    status
}

/// Run `f`, converting panics into `Internal`.
fn guarded(f: impl FnOnce() -> HwcStatus) -> HwcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(HwcStatus::Internal, "panic inside hwcone"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, HwcStatus> {
    if p.is_null() {
        return Err(fail(HwcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(HwcStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => {
            set_error("string contains a nul byte");
            ptr::null_mut()
        }
    }
}

unsafe fn store<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

/// Version string of the library; static, do not free.
#[no_mangle]
pub extern "C" fn hwc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next `hwc_*` call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn hwc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hwc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Classify the weight with labels `labels` (comma separated, `:` between
/// components of a product) for the Cartan type `cartan_type` (`"D3"`,
/// `"A2xA1"`).
///
/// # Safety
/// `cartan_type` and `labels` must be NUL-terminated strings; `out` must be
/// a valid pointer. On success `*out` holds a handle for `hwc_report_free`.
#[no_mangle]
pub unsafe extern "C" fn hwc_classify(
    cartan_type: *const c_char,
    labels: *const c_char,
    out: *mut *mut HwcReport,
) -> HwcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(HwcStatus::NullPointer, "null out pointer");
        }
        let (t, l) = match (read_str(cartan_type), read_str(labels)) {
            (Ok(t), Ok(l)) => (t, l),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let result = t
            .parse::<CartanType>()
            .and_then(|ct| hwcone::cli::parse_labels(&ct, l).and_then(|w| hwcone::classify(&ct, &w)));
        match result {
            Ok(rep) => {
                store(out, HwcReport(rep));
                HwcStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `report` must be NULL or a handle from `hwc_classify`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_free(report: *mut HwcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_n(report: *const HwcReport) -> usize {
    report.as_ref().map_or(0, |HwcReport(r)| r.n)
}

/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_u_minus_dim(report: *const HwcReport) -> usize {
    report.as_ref().map_or(0, |HwcReport(r)| r.u_minus_dim)
}

/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_condition_d(report: *const HwcReport) -> bool {
    report.as_ref().is_some_and(|HwcReport(r)| r.condition_d)
}

/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_singular(report: *const HwcReport) -> bool {
    report.as_ref().is_some_and(|HwcReport(r)| r.singular)
}

/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_ufd(report: *const HwcReport) -> bool {
    report.as_ref().is_some_and(|HwcReport(r)| r.ufd)
}

/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_negative_answer(report: *const HwcReport) -> bool {
    report.as_ref().is_some_and(|HwcReport(r)| r.negative_answer)
}

/// `dim E(w)` as a decimal string.
///
/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_dim_e(report: *const HwcReport) -> *mut c_char {
    report
        .as_ref()
        .map_or(ptr::null_mut(), |HwcReport(r)| into_c_string(r.dim_e.to_string()))
}

/// Number of independent quadrics through the cone, as a decimal string.
///
/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_quadric_count(report: *const HwcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |HwcReport(r)| {
        into_c_string(r.quadric_count.to_string())
    })
}

/// # Safety
/// `report` must be NULL or a live handle from `hwc_classify`.
#[no_mangle]
pub unsafe extern "C" fn hwc_report_to_json(report: *const HwcReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |HwcReport(r)| {
        serde_json::to_string_pretty(r).map_or(ptr::null_mut(), into_c_string)
    })
}

/// Dimension of the irreducible representation as a decimal string, or NULL
/// on error.
///
/// # Safety
/// Both arguments must be NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn hwc_irrep_dimension(cartan_type: *const c_char, labels: *const c_char) -> *mut c_char {
    let mut result = ptr::null_mut();
    guarded(|| {
        let (t, l) = match (read_str(cartan_type), read_str(labels)) {
            (Ok(t), Ok(l)) => (t, l),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let dim = t.parse::<CartanType>().and_then(|ct| {
            let w = hwcone::cli::parse_labels(&ct, l)?;
            RootSystem::new(&ct).irrep_dimension(&w)
        });
        match dim {
            Ok(d) => {
                result = into_c_string(d.to_string());
                HwcStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    });
    result
}

/// Build the explicit presentation of family `family` (`'B'` or `'D'`) and
/// rank `ell`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hwc_presentation_build(
    family: c_char,
    ell: usize,
    out: *mut *mut HwcPresentation,
) -> HwcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(HwcStatus::NullPointer, "null out pointer");
        }
        let letter = family as u8 as char;
        let Some(f) = Family::from_letter(letter) else {
            return fail(HwcStatus::InvalidArgument, format!("unknown family `{letter}`"));
        };
        match hwcone::build_example(f, ell) {
            Ok(cp) => {
                store(out, HwcPresentation(cp));
                HwcStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Parse a presentation record.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hwc_presentation_from_json(json: *const c_char, out: *mut *mut HwcPresentation) -> HwcStatus {
    guarded(|| {
        if out.is_null() {
            return fail(HwcStatus::NullPointer, "null out pointer");
        }
        let s = match read_str(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match ConePresentation::from_json(s) {
            Ok(cp) => {
                store(out, HwcPresentation(cp));
                HwcStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `p` must be NULL or a live presentation handle.
#[no_mangle]
pub unsafe extern "C" fn hwc_presentation_to_json(p: *const HwcPresentation) -> *mut c_char {
    match p.as_ref() {
        Some(HwcPresentation(cp)) => match cp.to_json() {
            Ok(s) => into_c_string(s),
            Err(e) => {
                set_error(e.to_string());
                ptr::null_mut()
            }
        },
        None => ptr::null_mut(),
    }
}

/// Number of polynomial variables (`n + 1`).
///
/// # Safety
/// `p` must be NULL or a live presentation handle.
#[no_mangle]
pub unsafe extern "C" fn hwc_presentation_variables(p: *const HwcPresentation) -> usize {
    p.as_ref().map_or(0, |HwcPresentation(cp)| cp.ring.arity())
}

/// # Safety
/// `p` must be NULL or a live presentation handle.
#[no_mangle]
pub unsafe extern "C" fn hwc_presentation_derivation_count(p: *const HwcPresentation) -> usize {
    p.as_ref().map_or(0, |HwcPresentation(cp)| cp.derivations.len())
}

/// # Safety
/// `p` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hwc_presentation_free(p: *mut HwcPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Run the verification checks. `*out` is set whenever the checks ran, so a
/// `VerificationFailed` result can still be inspected.
///
/// # Safety
/// `p` must be a live presentation handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hwc_verify(p: *const HwcPresentation, out: *mut *mut HwcVerification) -> HwcStatus {
    guarded(|| {
        let Some(HwcPresentation(cp)) = p.as_ref() else {
            return fail(HwcStatus::NullPointer, "null presentation");
        };
        if out.is_null() {
            return fail(HwcStatus::NullPointer, "null out pointer");
        }
        let rep = hwcone::verify_presentation(cp);
        let failed: Vec<String> = rep
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| {
                let at = c.failing.as_deref().unwrap_or("?");
                let w = c.witness.as_deref().unwrap_or("?");
                format!("{} failed at {at}: {w}", c.name)
            })
            .collect();
        store(out, HwcVerification(rep));
        if failed.is_empty() {
            HwcStatus::Ok
        } else {
            fail(HwcStatus::VerificationFailed, failed.join("\n"))
        }
    })
}

/// # Safety
/// `v` must be NULL or a live verification handle.
#[no_mangle]
pub unsafe extern "C" fn hwc_verification_all_passed(v: *const HwcVerification) -> bool {
    v.as_ref().is_some_and(|HwcVerification(r)| r.all_passed)
}

/// # Safety
/// `v` must be NULL or a live verification handle.
#[no_mangle]
pub unsafe extern "C" fn hwc_verification_to_json(v: *const HwcVerification) -> *mut c_char {
    v.as_ref().map_or(ptr::null_mut(), |HwcVerification(r)| {
        serde_json::to_string_pretty(r).map_or(ptr::null_mut(), into_c_string)
    })
}

/// # Safety
/// `v` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hwc_verification_free(v: *mut HwcVerification) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}
