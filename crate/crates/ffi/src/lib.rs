//! C interface: opaque handles for scenarios, reports and gallery algebroids,
//! and status codes for every call. Strings returned to the caller are freed
//! with `hc_string_free`; handles with their own `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hopfcyc::cyclichom::{build_cocyclic_cu, build_cyclic_cu, cyclic_homology_char0, hochschild_homology};
use hopfcyc::exactlin::FieldSpec;
use hopfcyc::hopfalgebroid::{check_hopf_algebroid, gallery, HopfAlgebroidData};
use hopfcyc::scenario::{emit, parse_scenario_str, run, Format, ReportDocument, RunOptions, ScenarioDocument};
use hopfcyc::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Reference = 4,
    DimensionMismatch = 5,
    CharNotZero = 6,
    CertificateFailure = 7,
    BufferTooSmall = 8,
    Engine = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HcTheory {
    Hochschild = 0,
    Cyclic = 1,
}

/// A parsed scenario document.
pub struct HcScenario {
    doc: ScenarioDocument,
}

/// The report of one scenario run.
pub struct HcReport {
    report: ReportDocument,
}

/// A gallery Hopf algebroid.
pub struct HcAlgebroid {
    h: HopfAlgebroidData,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HcStatus {
    set_error(&e.to_string());
    match e {
        Error::Parse(_) => HcStatus::Parse,
        Error::Reference(_) => HcStatus::Reference,
        Error::DimensionMismatch(_) => HcStatus::DimensionMismatch,
        Error::CharNotZero => HcStatus::CharNotZero,
        Error::CertificateFailure(_) => HcStatus::CertificateFailure,
        _ => HcStatus::Engine,
    }
}

fn guard(f: impl FnOnce() -> HcStatus) -> HcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("panic inside hopfcyc");
        HcStatus::Panic
    })
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, HcStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(HcStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not UTF-8");
        HcStatus::InvalidUtf8
    })
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument");
            return HcStatus::NullArgument;
        }
    };
}

/// Message for the last failed call on this thread; valid until the next call.
#[no_mangle]
pub extern "C" fn hc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `json` is a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_scenario_parse(json: *const c_char, out: *mut *mut HcScenario) -> HcStatus {
    guard(|| {
        non_null!(out);
        let s = match text(json) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match parse_scenario_str(s) {
            Ok(doc) => {
                *out = Box::into_raw(Box::new(HcScenario { doc }));
                HcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `s` comes from `hc_scenario_parse`; `count` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_scenario_task_count(s: *const HcScenario, count: *mut usize) -> HcStatus {
    guard(|| {
        non_null!(s, count);
        *count = (*s).doc.tasks.len();
        HcStatus::Ok
    })
}

/// Runs every task. A negative `max_degree` keeps the tasks' own values.
///
/// # Safety
/// `s` comes from `hc_scenario_parse`; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_scenario_run(
    s: *const HcScenario,
    max_degree: i32,
    parallel: bool,
    out: *mut *mut HcReport,
) -> HcStatus {
    guard(|| {
        non_null!(s, out);
        let opts = RunOptions {
            max_degree: usize::try_from(max_degree).ok(),
            parallel,
            ..RunOptions::default()
        };
        match run(&(*s).doc, &opts) {
            Ok(report) => {
                *out = Box::into_raw(Box::new(HcReport { report }));
                HcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `s` is null or comes from `hc_scenario_parse`, and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hc_scenario_free(s: *mut HcScenario) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// The report as JSON; free the string with `hc_string_free`.
///
/// # Safety
/// `r` comes from `hc_scenario_run`; `out` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_report_json(r: *const HcReport, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        non_null!(r, out);
        let bytes = emit(&(*r).report, Format::Json);
        match CString::new(bytes) {
            Ok(c) => {
                *out = c.into_raw();
                HcStatus::Ok
            }
            Err(_) => {
                set_error("report contains a NUL byte");
                HcStatus::Engine
            }
        }
    })
}

/// 0 all pass, 1 a check or certificate failed, 2 an input error; -1 for a null handle.
///
/// # Safety
/// `r` is null or comes from `hc_scenario_run`.
#[no_mangle]
pub unsafe extern "C" fn hc_report_exit_code(r: *const HcReport) -> i32 {
    if r.is_null() {
        return -1;
    }
    (*r).report.exit_code()
}

/// # Safety
/// `r` is null or comes from `hc_scenario_run`, and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hc_report_free(r: *mut HcReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `s` is null or a string returned by this library, not freed before.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A gallery algebroid by name over ℚ (`characteristic` 0) or 𝔽ₚ.
///
/// # Safety
/// `name` is a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_algebroid_gallery(
    name: *const c_char,
    characteristic: u64,
    out: *mut *mut HcAlgebroid,
) -> HcStatus {
    guard(|| {
        non_null!(out);
        let name = match text(name) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let field = if characteristic == 0 {
            FieldSpec::Rationals
        } else {
            match FieldSpec::prime(characteristic) {
                Ok(f) => f,
                Err(e) => return status_of(&Error::from(e)),
            }
        };
        match gallery::by_name(name, field) {
            Ok(h) => {
                *out = Box::into_raw(Box::new(HcAlgebroid { h }));
                HcStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// `dim U` and `dim A`.
///
/// # Safety
/// `h` comes from `hc_algebroid_gallery`; the outputs are valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hc_algebroid_dims(h: *const HcAlgebroid, du: *mut usize, da: *mut usize) -> HcStatus {
    guard(|| {
        non_null!(h, du, da);
        *du = (*h).h.du();
        *da = (*h).h.da();
        HcStatus::Ok
    })
}

/// Runs the Hopf algebroid checker; `passed` receives the verdict.
///
/// # Safety
/// `h` comes from `hc_algebroid_gallery`; `passed` is a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hc_algebroid_validate(h: *const HcAlgebroid, passed: *mut bool) -> HcStatus {
    guard(|| {
        non_null!(h, passed);
        *passed = check_hopf_algebroid(&(*h).h).passed();
        HcStatus::Ok
    })
}

/// Homology dimensions in degrees `0..=max_degree` of `C_•` (or `C^•` when
/// `cocyclic`), written to `dims[0..cap]`; `len` receives the count needed.
///
/// # Safety
/// `h` comes from `hc_algebroid_gallery`; `dims` has room for `cap` entries; `len` is valid.
#[no_mangle]
pub unsafe extern "C" fn hc_algebroid_homology(
    h: *const HcAlgebroid,
    theory: HcTheory,
    cocyclic: bool,
    max_degree: usize,
    dims: *mut usize,
    cap: usize,
    len: *mut usize,
) -> HcStatus {
    guard(|| {
        non_null!(h, len);
        let h = &(*h).h;
        let top = max_degree + 1;
        let module = if cocyclic { build_cocyclic_cu(h, top) } else { build_cyclic_cu(h, top) };
        let report = module.and_then(|m| match theory {
            HcTheory::Hochschild => hochschild_homology(&m),
            HcTheory::Cyclic => cyclic_homology_char0(&m),
        });
        let report = match report {
            Ok(r) => r,
            Err(e) => return status_of(&e),
        };
        *len = report.dims.len();
        if cap < report.dims.len() || (dims.is_null() && !report.dims.is_empty()) {
            set_error("output buffer too small");
            return HcStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(report.dims.as_ptr(), dims, report.dims.len());
        HcStatus::Ok
    })
}

/// # Safety
/// `h` is null or comes from `hc_algebroid_gallery`, and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hc_algebroid_free(h: *mut HcAlgebroid) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}
