//! C ABI over `cellrep`.
//!
//! Every function returns a [`CellrepStatus`] and writes results through out
//! pointers. On failure a message is available from [`cellrep_last_error`]
//! until the next call on the same thread. Handles and strings returned here
//! must be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cellrep::cell_rep::{left_cell_rep, right_cell_rep};
use cellrep::matrix_solver::{
    classify, count_set_partitions, ClassificationReport, ConstraintTier, Side,
};
use cellrep::quiver_algebra::{build_star_algebra, PathAlgebra};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellrepStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Internal = 3,
}

/// `side` argument values.
pub const CELLREP_SIDE_LEFT: i32 = 0;
pub const CELLREP_SIDE_RIGHT: i32 = 1;
/// `tier` argument values.
pub const CELLREP_TIER_COMBINATORIAL: i32 = 0;
pub const CELLREP_TIER_PROJECTIVE_FUNCTOR: i32 = 1;

/// Opaque star algebra handle.
pub struct CellrepAlgebra(PathAlgebra);

/// Opaque classification result handle.
pub struct CellrepReport(ClassificationReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

type Outcome = Result<(), (CellrepStatus, String)>;

fn invalid(msg: impl std::fmt::Display) -> (CellrepStatus, String) {
    (CellrepStatus::InvalidArgument, msg.to_string())
}

fn null(what: &str) -> (CellrepStatus, String) {
    (CellrepStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording its error and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Outcome) -> CellrepStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CellrepStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CellrepStatus::Internal
        }
    }
}

fn side_from(side: i32) -> Result<Side, (CellrepStatus, String)> {
    match side {
        CELLREP_SIDE_LEFT => Ok(Side::Left),
        CELLREP_SIDE_RIGHT => Ok(Side::Right),
        s => Err(invalid(format!("unknown side {s}"))),
    }
}

fn tier_from(tier: i32) -> Result<ConstraintTier, (CellrepStatus, String)> {
    match tier {
        CELLREP_TIER_COMBINATORIAL => Ok(ConstraintTier::Combinatorial),
        CELLREP_TIER_PROJECTIVE_FUNCTOR => Ok(ConstraintTier::ProjectiveFunctor),
        t => Err(invalid(format!("unknown tier {t}"))),
    }
}

fn n_from(n: i64) -> Result<usize, (CellrepStatus, String)> {
    usize::try_from(n)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| invalid(format!("n must be at least 1, got {n}")))
}

fn into_c_string(s: String) -> Result<*mut c_char, (CellrepStatus, String)> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| (CellrepStatus::Internal, e.to_string()))
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cellrep_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cellrep_algebra_new_star(
    n: i64,
    out: *mut *mut CellrepAlgebra,
) -> CellrepStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        n_from(n)?;
        let a = build_star_algebra(n).map_err(invalid)?;
        *out = Box::into_raw(Box::new(CellrepAlgebra(a)));
        Ok(())
    })
}

/// # Safety
/// `a` must be NULL or a live handle; `out` NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cellrep_algebra_dimension(
    a: *const CellrepAlgebra,
    out: *mut usize,
) -> CellrepStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = a.0.dim();
        Ok(())
    })
}

/// Number of basis paths from vertex `i` to vertex `j`.
///
/// # Safety
/// `a` must be NULL or a live handle; `out` NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cellrep_algebra_hom_dim(
    a: *const CellrepAlgebra,
    i: usize,
    j: usize,
    out: *mut usize,
) -> CellrepStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let k = a.0.vertex_count();
        if i >= k || j >= k {
            return Err(invalid(format!("vertex out of range 0..{k}")));
        }
        *out = a.0.hom_dim(i, j);
        Ok(())
    })
}

/// # Safety
/// `a` must be NULL or a handle from `cellrep_algebra_new_star` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cellrep_algebra_free(a: *mut CellrepAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cellrep_classify(
    n: i64,
    side: i32,
    tier: i32,
    out: *mut *mut CellrepReport,
) -> CellrepStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let report = classify(n_from(n)?, side_from(side)?, tier_from(tier)?).map_err(invalid)?;
        *out = Box::into_raw(Box::new(CellrepReport(report)));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a live handle; `out` NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cellrep_report_count(
    r: *const CellrepReport,
    out: *mut usize,
) -> CellrepStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = r.0.count;
        Ok(())
    })
}

/// Writes the set partition count, or -1 when the report carries none.
///
/// # Safety
/// `r` must be NULL or a live handle; `out` NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cellrep_report_oracle_count(
    r: *const CellrepReport,
    out: *mut i64,
) -> CellrepStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = r.0.oracle_count.map_or(-1, |c| c as i64);
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a live handle; `out` NULL or valid for writes. The
/// string must be released with `cellrep_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cellrep_report_to_json(
    r: *const CellrepReport,
    out: *mut *mut c_char,
) -> CellrepStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("report"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let text =
            serde_json::to_string(&r.0).map_err(|e| (CellrepStatus::Internal, e.to_string()))?;
        *out = into_c_string(text)?;
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a handle from `cellrep_classify` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cellrep_report_free(r: *mut CellrepReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// JSON of the cell 2-representation for the given side.
///
/// # Safety
/// `out` must be NULL or valid for writes. The string must be released with
/// `cellrep_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cellrep_cell_rep_json(
    n: i64,
    side: i32,
    out: *mut *mut c_char,
) -> CellrepStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        n_from(n)?;
        let rep = match side_from(side)? {
            Side::Left => left_cell_rep(n),
            Side::Right => right_cell_rep(n),
        }
        .map_err(invalid)?;
        let text =
            serde_json::to_string(&rep).map_err(|e| (CellrepStatus::Internal, e.to_string()))?;
        *out = into_c_string(text)?;
        Ok(())
    })
}

/// Bell number `B(n)`, computed by enumeration.
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cellrep_count_set_partitions(n: usize, out: *mut u64) -> CellrepStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        if n > 15 {
            return Err(invalid("n above 15 is not enumerated"));
        }
        *out = count_set_partitions(n);
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cellrep_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
