//! C ABI over `modcohom`.
//!
//! Reports are handed out as opaque `ModcohomReport` pointers owned by the
//! caller and released with `modcohom_report_free`. Every fallible call
//! returns a `ModcohomStatus`; on failure `modcohom_last_error` holds a
//! message for the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use modcohom::cohom::{compute_label, CohomError};
use modcohom::liealg::is_linked;
use modcohom::report::to_json;
use modcohom::repr::ReprError;
use modcohom::{AlgebraKind, CohomologyReport, ModuleLabel, Weight};

#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModcohomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InternalInconsistency = 3,
    OutOfRange = 4,
    ComputationFailed = 5,
    Panic = 6,
}

/// Computed cohomology of one module.
pub struct ModcohomReport {
    inner: CohomologyReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: ModcohomStatus, msg: impl Into<String>) -> ModcohomStatus {
    set_error(msg);
    status
}

fn guarded(f: impl FnOnce() -> ModcohomStatus) -> ModcohomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ModcohomStatus::Panic, "panic inside modcohom"),
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, ModcohomStatus> {
    if s.is_null() {
        return Err(fail(ModcohomStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(ModcohomStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn status_of(e: &CohomError) -> ModcohomStatus {
    match e {
        CohomError::InternalInconsistency { .. } => ModcohomStatus::InternalInconsistency,
        CohomError::Repr(
            ReprError::BadSelector(_)
            | ReprError::NotConstructible(_)
            | ReprError::WeightOutOfRange { .. }
            | ReprError::Field(_),
        ) => ModcohomStatus::InvalidArgument,
        _ => ModcohomStatus::ComputationFailed,
    }
}

unsafe fn report_ref<'a>(r: *const ModcohomReport) -> Result<&'a CohomologyReport, ModcohomStatus> {
    r.as_ref()
        .map(|r| &r.inner)
        .ok_or_else(|| fail(ModcohomStatus::NullPointer, "report is null"))
}

fn degree_of(r: &CohomologyReport, degree: usize) -> Result<&modcohom::DegreeReport, ModcohomStatus> {
    r.degrees.get(degree).ok_or_else(|| {
        fail(
            ModcohomStatus::OutOfRange,
            format!("degree {degree} exceeds top degree {}", r.top_degree()),
        )
    })
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Computes `H^*(algebra, module)` over `F_p` (`algebra` is "sl3" or "gl3",
/// `module` a selector such as "simple:3,1" or "trivial"). On success
/// `*out` owns a new report.
#[no_mangle]
pub unsafe extern "C" fn modcohom_compute(
    p: u32,
    algebra: *const c_char,
    module: *const c_char,
    out: *mut *mut ModcohomReport,
) -> ModcohomStatus {
    guarded(|| {
        if out.is_null() {
            return fail(ModcohomStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let algebra = try_status!(read_str(algebra, "algebra"));
        let module = try_status!(read_str(module, "module"));
        let kind: AlgebraKind = match algebra.parse() {
            Ok(k) => k,
            Err(e) => return fail(ModcohomStatus::InvalidArgument, e),
        };
        let label: ModuleLabel = match module.parse() {
            Ok(l) => l,
            Err(e) => return fail(ModcohomStatus::InvalidArgument, format!("{e}")),
        };
        match compute_label(p, kind, &label) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(ModcohomReport { inner }));
                ModcohomStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn modcohom_report_free(report: *mut ModcohomReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of degrees, `dim g + 1`.
#[no_mangle]
pub unsafe extern "C" fn modcohom_report_num_degrees(
    report: *const ModcohomReport,
    out: *mut usize,
) -> ModcohomStatus {
    guarded(|| {
        let r = try_status!(report_ref(report));
        if out.is_null() {
            return fail(ModcohomStatus::NullPointer, "out is null");
        }
        *out = r.degrees.len();
        ModcohomStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn modcohom_report_dim(
    report: *const ModcohomReport,
    degree: usize,
    out: *mut usize,
) -> ModcohomStatus {
    guarded(|| {
        let r = try_status!(report_ref(report));
        let d = try_status!(degree_of(r, degree));
        if out.is_null() {
            return fail(ModcohomStatus::NullPointer, "out is null");
        }
        *out = d.dim;
        ModcohomStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn modcohom_report_num_weights(
    report: *const ModcohomReport,
    degree: usize,
    out: *mut usize,
) -> ModcohomStatus {
    guarded(|| {
        let r = try_status!(report_ref(report));
        let d = try_status!(degree_of(r, degree));
        if out.is_null() {
            return fail(ModcohomStatus::NullPointer, "out is null");
        }
        *out = d.weights.len();
        ModcohomStatus::Ok
    })
}

/// The `index`-th weight of `H^degree` in ascending order, with its
/// multiplicity.
#[no_mangle]
pub unsafe extern "C" fn modcohom_report_weight_at(
    report: *const ModcohomReport,
    degree: usize,
    index: usize,
    a: *mut i64,
    b: *mut i64,
    mult: *mut usize,
) -> ModcohomStatus {
    guarded(|| {
        let r = try_status!(report_ref(report));
        let d = try_status!(degree_of(r, degree));
        if a.is_null() || b.is_null() || mult.is_null() {
            return fail(ModcohomStatus::NullPointer, "output pointer is null");
        }
        let Some((w, m)) = d.weights.iter().nth(index) else {
            return fail(ModcohomStatus::OutOfRange, format!("weight index {index}"));
        };
        *a = w.a;
        *b = w.b;
        *mult = *m;
        ModcohomStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn modcohom_report_num_factors(
    report: *const ModcohomReport,
    degree: usize,
    out: *mut usize,
) -> ModcohomStatus {
    guarded(|| {
        let r = try_status!(report_ref(report));
        let d = try_status!(degree_of(r, degree));
        if out.is_null() {
            return fail(ModcohomStatus::NullPointer, "out is null");
        }
        *out = d.factors.len();
        ModcohomStatus::Ok
    })
}

/// Composition factor `mult * L(a,b)^(twist)` of `H^degree`.
#[no_mangle]
pub unsafe extern "C" fn modcohom_report_factor_at(
    report: *const ModcohomReport,
    degree: usize,
    index: usize,
    a: *mut i64,
    b: *mut i64,
    twist: *mut u32,
    mult: *mut usize,
) -> ModcohomStatus {
    guarded(|| {
        let r = try_status!(report_ref(report));
        let d = try_status!(degree_of(r, degree));
        if a.is_null() || b.is_null() || twist.is_null() || mult.is_null() {
            return fail(ModcohomStatus::NullPointer, "output pointer is null");
        }
        let Some(f) = d.factors.get(index) else {
            return fail(ModcohomStatus::OutOfRange, format!("factor index {index}"));
        };
        *a = f.weight.a;
        *b = f.weight.b;
        *twist = f.twist;
        *mult = f.mult;
        ModcohomStatus::Ok
    })
}

/// The report as JSON; free with `modcohom_string_free`. Null on failure.
#[no_mangle]
pub unsafe extern "C" fn modcohom_report_to_json(report: *const ModcohomReport) -> *mut c_char {
    let mut out = ptr::null_mut();
    guarded(|| {
        let r = try_status!(report_ref(report));
        match CString::new(to_json(r, None, false)) {
            Ok(s) => {
                out = s.into_raw();
                ModcohomStatus::Ok
            }
            Err(_) => fail(ModcohomStatus::ComputationFailed, "report contains NUL"),
        }
    });
    out
}

#[no_mangle]
pub unsafe extern "C" fn modcohom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn modcohom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Whether `(r1,s1)` and `(r2,s2)` are linked for `p`: 1 if so, 0 if not.
#[no_mangle]
pub extern "C" fn modcohom_is_linked(r1: i64, s1: i64, r2: i64, s2: i64, p: u32) -> i32 {
    if p == 0 {
        return 0;
    }
    is_linked(Weight::new(r1, s1), Weight::new(r2, s2), p) as i32
}

#[no_mangle]
pub extern "C" fn modcohom_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}
