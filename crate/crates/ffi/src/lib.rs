//! C interface to `hdx-core`. Objects are opaque handles created by `*_new`
//! or `hdx_certify` and released by the matching `*_free`. Fallible calls
//! return an [`HdxStatus`]; the message of the last failure on the calling
//! thread is available from [`hdx_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hdx_core::algebra::BaseField;
use hdx_core::cli::{
    certify_explicit, certify_local, Certificate, Instance, InstanceText, Options,
};
use hdx_core::rootdata::{gamma_bound, Rank2Type};
use hdx_core::spectra::rank2_link;
use hdx_core::HdxError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdxStatus {
    Ok = 0,
    Internal = 1,
    HypothesisFailed = 2,
    Budget = 3,
    Invalid = 4,
    NullPointer = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdxMode {
    Explicit = 0,
    Certificate = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HdxRank2Type {
    A1TimesA1 = 0,
    A2 = 1,
    B2 = 2,
    G2 = 3,
}

/// A resolved instance: diagram, field `F_{p^m}` and modulus `f`.
pub struct HdxInstance(Instance);

/// The result of `hdx_certify`.
pub struct HdxCertificate {
    cert: Certificate,
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &HdxError) -> HdxStatus {
    match e.exit_code() {
        3 => HdxStatus::Budget,
        4 => HdxStatus::Invalid,
        _ => HdxStatus::Internal,
    }
}

fn guard<F: FnOnce() -> Result<HdxStatus, HdxError>>(f: F) -> HdxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside hdx");
            HdxStatus::Panic
        }
    }
}

unsafe fn text_arg(s: *const c_char, name: &str) -> Result<Option<String>, HdxError> {
    if s.is_null() {
        return Ok(None);
    }
    CStr::from_ptr(s)
        .to_str()
        .map(|s| Some(s.to_string()))
        .map_err(|_| HdxError::Spec(format!("{name} is not UTF-8")))
}

unsafe fn new_instance(
    preset: Option<String>,
    gcm: Option<Vec<Vec<i64>>>,
    p: u64,
    m: usize,
    f: *const c_char,
    out: *mut *mut HdxInstance,
) -> HdxStatus {
    if out.is_null() {
        set_error("out is null");
        return HdxStatus::NullPointer;
    }
    *out = ptr::null_mut();
    guard(|| {
        let f = text_arg(f, "f")?.unwrap_or_else(|| "auto:2".into());
        let inst = Instance::resolve(InstanceText {
            preset,
            gcm,
            p,
            m,
            f,
        })?;
        *out = Box::into_raw(Box::new(HdxInstance(inst)));
        Ok(HdxStatus::Ok)
    })
}

/// Resolves a preset diagram ("A~n" or "G~2") over `F_{p^m}` with modulus
/// `f` ("t^2+t+1", "1,1,1" or "auto:<degree>"; null means "auto:2").
///
/// # Safety
/// `preset` and `f` are null or NUL-terminated strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hdx_instance_new(
    preset: *const c_char,
    p: u64,
    m: usize,
    f: *const c_char,
    out: *mut *mut HdxInstance,
) -> HdxStatus {
    let preset = match text_arg(preset, "preset") {
        Ok(Some(s)) => s,
        Ok(None) => {
            set_error("preset is null");
            return HdxStatus::NullPointer;
        }
        Err(e) => {
            set_error(e.to_string());
            return HdxStatus::Invalid;
        }
    };
    new_instance(Some(preset), None, p, m, f, out)
}

/// Like `hdx_instance_new` with a row-major `n x n` Cartan matrix.
///
/// # Safety
/// `entries` points to `n * n` integers; `f` and `out` as for `hdx_instance_new`.
#[no_mangle]
pub unsafe extern "C" fn hdx_instance_from_gcm(
    entries: *const i64,
    n: usize,
    p: u64,
    m: usize,
    f: *const c_char,
    out: *mut *mut HdxInstance,
) -> HdxStatus {
    if entries.is_null() {
        set_error("entries is null");
        return HdxStatus::NullPointer;
    }
    let Some(len) = n.checked_mul(n) else {
        set_error("matrix size overflows");
        return HdxStatus::Invalid;
    };
    let flat = std::slice::from_raw_parts(entries, len);
    let rows = flat.chunks(n.max(1)).map(<[i64]>::to_vec).collect();
    new_instance(None, Some(rows), p, m, f, out)
}

/// # Safety
/// `instance` is null or came from `hdx_instance_new`; it is not used again.
#[no_mangle]
pub unsafe extern "C" fn hdx_instance_free(instance: *mut HdxInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// Dimension `d` of the complex, one less than the number of nodes.
///
/// # Safety
/// `instance` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn hdx_instance_dimension(instance: *const HdxInstance) -> usize {
    instance.as_ref().map_or(0, |i| i.0.d())
}

/// Largest rank-2 link bound over all pairs of nodes.
///
/// # Safety
/// `instance` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hdx_gamma_bound(instance: *const HdxInstance, out: *mut f64) -> HdxStatus {
    let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
        set_error("null argument");
        return HdxStatus::NullPointer;
    };
    guard(|| {
        *out = gamma_bound(&inst.0.gcm, inst.0.text.p, inst.0.text.m)?;
        Ok(HdxStatus::Ok)
    })
}

/// `lambda_2` of the coset graph of `U(F_{p^m})` for a rank-2 type; `1` when
/// that graph is disconnected.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hdx_lambda2_rank2(
    ty: HdxRank2Type,
    p: u64,
    m: usize,
    out: *mut f64,
) -> HdxStatus {
    if out.is_null() {
        set_error("out is null");
        return HdxStatus::NullPointer;
    }
    guard(|| {
        let k = BaseField::with_default_modulus(p, m)?;
        let ty = match ty {
            HdxRank2Type::A1TimesA1 => Rank2Type::A1xA1,
            HdxRank2Type::A2 => Rank2Type::A2,
            HdxRank2Type::B2 => Rank2Type::B2,
            HdxRank2Type::G2 => Rank2Type::G2,
        };
        *out = rank2_link(ty, &k, None)?.lambda2;
        Ok(HdxStatus::Ok)
    })
}

/// Runs the checks of `mode`. A certificate is written to `out` whenever the
/// checks ran, including when a hypothesis failed
/// (`HDX_STATUS_HYPOTHESIS_FAILED`). `budget` caps group enumeration; 0
/// selects the default.
///
/// # Safety
/// `instance` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hdx_certify(
    instance: *const HdxInstance,
    mode: HdxMode,
    budget: u64,
    out: *mut *mut HdxCertificate,
) -> HdxStatus {
    let (Some(inst), false) = (instance.as_ref(), out.is_null()) else {
        set_error("null argument");
        return HdxStatus::NullPointer;
    };
    *out = ptr::null_mut();
    guard(|| {
        let mut opts = Options::default();
        if budget > 0 {
            opts.budget = usize::try_from(budget).unwrap_or(usize::MAX);
        }
        let cert = match mode {
            HdxMode::Explicit => certify_explicit(&inst.0, &opts)?.0,
            HdxMode::Certificate => certify_local(&inst.0, &opts)?.0,
        };
        let json = CString::new(serde_json::to_string_pretty(&cert)?).unwrap_or_default();
        let status = if cert.exit_code() == 0 {
            HdxStatus::Ok
        } else {
            set_error(cert.failed_clauses.join("; "));
            HdxStatus::HypothesisFailed
        };
        *out = Box::into_raw(Box::new(HdxCertificate { cert, json }));
        Ok(status)
    })
}

/// # Safety
/// `cert` is null or came from `hdx_certify`; it is not used again.
#[no_mangle]
pub unsafe extern "C" fn hdx_certificate_free(cert: *mut HdxCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// The certificate as JSON. The string is owned by the certificate.
///
/// # Safety
/// `cert` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn hdx_certificate_json(cert: *const HdxCertificate) -> *const c_char {
    cert.as_ref().map_or(ptr::null(), |c| c.json.as_ptr())
}

/// A copy of the certificate JSON, released with `hdx_string_free`.
///
/// # Safety
/// `cert` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn hdx_certificate_json_copy(cert: *const HdxCertificate) -> *mut c_char {
    cert.as_ref()
        .map_or(ptr::null_mut(), |c| c.json.clone().into_raw())
}

/// # Safety
/// `s` is null or came from an `hdx_*` function returning `char *`.
#[no_mangle]
pub unsafe extern "C" fn hdx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `cert` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn hdx_certificate_gamma(cert: *const HdxCertificate) -> f64 {
    cert.as_ref().map_or(f64::NAN, |c| c.cert.gamma)
}

/// Writes `gamma'` and returns true when the trickling-down step applies.
///
/// # Safety
/// `cert` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hdx_certificate_gamma_prime(
    cert: *const HdxCertificate,
    out: *mut f64,
) -> bool {
    match (
        cert.as_ref().and_then(|c| c.cert.gamma_prime),
        out.is_null(),
    ) {
        (Some(g), false) => {
            *out = g;
            true
        }
        _ => false,
    }
}

/// Number of failed clauses.
///
/// # Safety
/// `cert` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn hdx_certificate_failed_count(cert: *const HdxCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.cert.failed_clauses.len())
}

/// `|G|` when known and below 2^64.
///
/// # Safety
/// `cert` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn hdx_certificate_group_order(
    cert: *const HdxCertificate,
    out: *mut u64,
) -> bool {
    match (
        cert.as_ref().and_then(|c| c.cert.group_order),
        out.is_null(),
    ) {
        (Some(o), false) => match u64::try_from(o) {
            Ok(o) => {
                *out = o;
                true
            }
            Err(_) => false,
        },
        _ => false,
    }
}

/// Message of the last failure on this thread, or null. Valid until the next
/// `hdx_*` call on the same thread.
#[no_mangle]
pub extern "C" fn hdx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
