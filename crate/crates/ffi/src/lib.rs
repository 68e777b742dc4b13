//! C ABI over `fri_lab`.
//!
//! Every fallible function returns a [`FriStatus`]; on failure the message
//! is available from [`fri_last_error_message`] on the same thread. Sets are
//! passed as four consecutive doubles `a1 <= a2 <= a3 <= a4`. Documents are
//! opaque handles created by [`fri_document_load`] and released with
//! [`fri_document_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fri_lab::benchmark::run_all;
use fri_lab::cnf::{full_report, LengthPath, Verdict};
use fri_lab::document::{load_document, DocumentError, RuleBaseDocument};
use fri_lab::fuzzy::TrapezoidSet;
use fri_lab::kh::{kh_characteristic_points, khstab_points, select_flanking, Observation, Rule, RuleBase};
use fri_lab::FriError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FriStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Validation = 3,
    NotFlanked = 4,
    Ordering = 5,
    InvalidArgument = 6,
    Dimension = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FriMethod {
    Kh = 0,
    Khstab = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FriVerdict {
    Normal = 0,
    Problem = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FriLengthPath {
    General = 0,
    UniformNonzero = 1,
    UniformZero = 2,
}

/// Diagnostics of one segment. Undefined ratios are NaN.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FriSegmentDiagnostics {
    pub length1: f64,
    pub length2: f64,
    pub path: FriLengthPath,
    pub verdict: FriVerdict,
    pub ratio1: f64,
    pub ratio2: f64,
    pub direct: FriVerdict,
}

/// Segments in the order left boundary, core, right boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FriNormalityReport {
    pub points: [f64; 4],
    pub segments: [FriSegmentDiagnostics; 3],
    pub overall: FriVerdict,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FriBenchmarkSummary {
    pub cases: u32,
    pub passed: u32,
    pub failed: u32,
}

/// Opaque rule-base document.
pub struct FriDocument {
    doc: RuleBaseDocument,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(FriStatus, String);

impl From<FriError> for Failure {
    fn from(e: FriError) -> Self {
        let status = match e {
            FriError::NotFlanked { .. } => FriStatus::NotFlanked,
            FriError::OrderingViolation(_) | FriError::NotComparable { .. } => FriStatus::Ordering,
            FriError::Dimension(_) | FriError::DimensionMismatch { .. } => FriStatus::Dimension,
            _ => FriStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let status = match e {
            DocumentError::Parse { .. } => FriStatus::Parse,
            DocumentError::Validation(_) => FriStatus::Validation,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FriStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FriStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FriStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            FriStatus::Internal
        }
    }
}

unsafe fn read_set(p: *const f64, what: &str) -> Result<TrapezoidSet, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    let mut points = [0.0; 4];
    ptr::copy_nonoverlapping(p, points.as_mut_ptr(), 4);
    Ok(TrapezoidSet::from_points(points)?)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn verdict(v: Verdict) -> FriVerdict {
    match v {
        Verdict::Normal => FriVerdict::Normal,
        Verdict::Problem => FriVerdict::Problem,
    }
}

fn path(p: LengthPath) -> FriLengthPath {
    match p {
        LengthPath::General => FriLengthPath::General,
        LengthPath::UniformNonzero => FriLengthPath::UniformNonzero,
        LengthPath::UniformZero => FriLengthPath::UniformZero,
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fri_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn fri_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// KH conclusion for one-dimensional sets; writes four doubles to `out`.
///
/// # Safety
/// Every pointer must reference four readable (`out`: writable) doubles.
#[no_mangle]
pub unsafe extern "C" fn fri_kh_points(
    a1: *const f64,
    a2: *const f64,
    b1: *const f64,
    b2: *const f64,
    x: *const f64,
    out: *mut f64,
) -> FriStatus {
    guard(|| {
        let lower = Rule::single(read_set(a1, "a1")?, read_set(b1, "b1")?);
        let upper = Rule::single(read_set(a2, "a2")?, read_set(b2, "b2")?);
        let obs = Observation::single(read_set(x, "x")?);
        let y = kh_characteristic_points(&lower, &upper, &obs)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        ptr::copy_nonoverlapping(y.0.as_ptr(), out, 4);
        Ok(())
    })
}

/// KHstab conclusion over `n` one-dimensional rules. `antecedents` and
/// `consequents` hold `4 * n` doubles each.
///
/// # Safety
/// Array sizes must match `n`; `x` and `out` reference four doubles.
#[no_mangle]
pub unsafe extern "C" fn fri_khstab_points(
    antecedents: *const f64,
    consequents: *const f64,
    n: usize,
    x: *const f64,
    exponent: f64,
    out: *mut f64,
) -> FriStatus {
    guard(|| {
        if antecedents.is_null() || consequents.is_null() {
            return Err(null("rule arrays"));
        }
        let rules = (0..n)
            .map(|k| {
                Ok(Rule::single(
                    read_set(antecedents.add(4 * k), "antecedent")?,
                    read_set(consequents.add(4 * k), "consequent")?,
                ))
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        let rb = RuleBase::new(rules)?;
        let y = khstab_points(&rb, &Observation::single(read_set(x, "x")?), exponent)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        ptr::copy_nonoverlapping(y.0.as_ptr(), out, 4);
        Ok(())
    })
}

/// Full normality diagnostics for a one-dimensional configuration.
///
/// # Safety
/// Set pointers reference four doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fri_validate(
    a1: *const f64,
    a2: *const f64,
    b1: *const f64,
    b2: *const f64,
    x: *const f64,
    out: *mut FriNormalityReport,
) -> FriStatus {
    guard(|| {
        let lower = Rule::single(read_set(a1, "a1")?, read_set(b1, "b1")?);
        let upper = Rule::single(read_set(a2, "a2")?, read_set(b2, "b2")?);
        let obs = Observation::single(read_set(x, "x")?);
        let r = full_report(&lower, &upper, &obs)?;
        let seg = |k: usize| {
            let s = &r.segments[k];
            FriSegmentDiagnostics {
                length1: s.length.length1,
                length2: s.length.length2,
                path: path(s.length.path),
                verdict: verdict(s.length.verdict),
                ratio1: s.ratio.ratio1.unwrap_or(f64::NAN),
                ratio2: s.ratio.ratio2.unwrap_or(f64::NAN),
                direct: verdict(s.direct),
            }
        };
        write_out(
            out,
            FriNormalityReport {
                points: r.points.0,
                segments: [seg(0), seg(1), seg(2)],
                overall: verdict(r.overall),
            },
        )
    })
}

/// Runs the nine builtin benchmark cases.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fri_benchmark_summary(out: *mut FriBenchmarkSummary) -> FriStatus {
    guard(|| {
        let report = run_all();
        write_out(
            out,
            FriBenchmarkSummary {
                cases: report.cases.len() as u32,
                passed: report.passed() as u32,
                failed: report.failed() as u32,
            },
        )
    })
}

/// Parses a NUL-terminated TOML document. On success `*out` owns a handle
/// that must be released with [`fri_document_free`].
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fri_document_load(text: *const c_char, out: *mut *mut FriDocument) -> FriStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("output pointer"));
        }
        out.write(ptr::null_mut());
        let doc = load_document(CStr::from_ptr(text).to_bytes())?;
        out.write(Box::into_raw(Box::new(FriDocument { doc })));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `doc` must come from [`fri_document_load`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn fri_document_free(doc: *mut FriDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Number of rules in the document.
///
/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fri_document_rule_count(doc: *const FriDocument, out: *mut usize) -> FriStatus {
    guard(|| {
        let doc = doc.as_ref().ok_or_else(|| null("document"))?;
        write_out(out, doc.doc.rules.len())
    })
}

/// Input dimension of the document.
///
/// # Safety
/// `doc` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fri_document_dimension(doc: *const FriDocument, out: *mut usize) -> FriStatus {
    guard(|| {
        let doc = doc.as_ref().ok_or_else(|| null("document"))?;
        write_out(out, doc.doc.dimension)
    })
}

/// Interpolates the document's observation; writes four doubles to `out`.
/// `method` is a `FriMethod` value; `exponent` is used by
/// `FRI_METHOD_KHSTAB` only.
///
/// # Safety
/// `doc` must be a live handle; `out` must reference four writable doubles.
#[no_mangle]
pub unsafe extern "C" fn fri_document_interpolate(
    doc: *const FriDocument,
    method: u32,
    exponent: f64,
    out: *mut f64,
) -> FriStatus {
    guard(|| {
        let doc = &doc.as_ref().ok_or_else(|| null("document"))?.doc;
        let rb = doc.rule_base()?;
        let obs = doc
            .observation()
            .ok_or_else(|| Failure(FriStatus::Validation, "document has no observation".to_owned()))?;
        let y = match method {
            m if m == FriMethod::Kh as u32 => {
                let (lower, upper) = select_flanking(&rb, &obs)?;
                kh_characteristic_points(lower, upper, &obs)?
            }
            m if m == FriMethod::Khstab as u32 => khstab_points(&rb, &obs, exponent)?,
            m => return Err(Failure(FriStatus::InvalidArgument, format!("unknown method {m}"))),
        };
        if out.is_null() {
            return Err(null("output pointer"));
        }
        ptr::copy_nonoverlapping(y.0.as_ptr(), out, 4);
        Ok(())
    })
}
