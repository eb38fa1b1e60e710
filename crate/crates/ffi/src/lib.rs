//! C interface to `gradedk`.
//!
//! Every fallible function returns a [`GkStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can
//! be read with [`gk_last_error`]. Strings returned by the library are
//! owned by the caller and released with [`gk_string_free`]; handles are
//! released with their matching `*_free` function. Panics never cross the
//! boundary; they surface as [`GkStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gradedk::clifford::{graded_k_lookup, parse_element};
use gradedk::format::parse_graph;
use gradedk::linalg::IntMatrix;
use gradedk::report::{analyze_document, kgroups_document, snf_report, to_json};
use gradedk::{experimental_graded_k_groups, graded_k_groups, ungraded_k_groups, Error, KGroups, SignedGraph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input: bad syntax, unknown generator, mismatched sizes.
    Invalid = 3,
    /// Well-formed input outside the operation's domain, e.g. a graph with
    /// sinks passed to the graded computation.
    Precondition = 4,
    Internal = 5,
}

/// Which K-theory to compute.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkMode {
    Graded = 0,
    Ungraded = 1,
    /// Graded formula on graphs with sinks. Not backed by a proof.
    GradedExperimental = 2,
}

/// Opaque parsed graph.
pub struct GkGraph(SignedGraph);

/// Opaque `(K0, K1)` result.
pub struct GkKGroups(KGroups);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(GkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = if e.is_precondition() { GkStatus::Precondition } else { GkStatus::Invalid };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GkStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error: panic inside gradedk");
            GkStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(GkStatus::NullPointer, format!("`{what}` is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(GkStatus::InvalidUtf8, format!("`{what}` is not valid UTF-8")))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(GkStatus::Internal, "result contains a NUL byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn null_out(what: &str) -> Fail {
    Fail(GkStatus::NullPointer, format!("output pointer `{what}` is null"))
}

/// Last error message on this thread, or null. The pointer stays valid
/// until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn gk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph in the `vertices:` / `edges:` text format.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_parse(source: *const c_char, out: *mut *mut GkGraph) -> GkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out("out"));
        }
        let g = parse_graph(text(source, "source")?)?;
        *out = Box::into_raw(Box::new(GkGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from [`gk_graph_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_free(g: *mut GkGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_vertex_count(g: *const GkGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertices().len())
}

/// Structural properties of the graph as a JSON document.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_graph_analyze_json(g: *const GkGraph, out: *mut *mut c_char) -> GkStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| Fail(GkStatus::NullPointer, "graph handle is null".into()))?;
        if out.is_null() {
            return Err(null_out("out"));
        }
        put_string(out, to_json(&analyze_document("<ffi>", &g.0)))
    })
}

/// Computes `(K0, K1)` of the graph algebra.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_kgroups_compute(g: *const GkGraph, mode: GkMode, out: *mut *mut GkKGroups) -> GkStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| Fail(GkStatus::NullPointer, "graph handle is null".into()))?;
        if out.is_null() {
            return Err(null_out("out"));
        }
        let k = match mode {
            GkMode::Graded => graded_k_groups(&g.0)?,
            GkMode::Ungraded => ungraded_k_groups(&g.0),
            GkMode::GradedExperimental => experimental_graded_k_groups(&g.0),
        };
        *out = Box::into_raw(Box::new(GkKGroups(k)));
        Ok(())
    })
}

/// Same computation as [`gk_kgroups_compute`], returned as a JSON document
/// that includes the matrix and any warnings.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_kgroups_json(g: *const GkGraph, mode: GkMode, out: *mut *mut c_char) -> GkStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| Fail(GkStatus::NullPointer, "graph handle is null".into()))?;
        if out.is_null() {
            return Err(null_out("out"));
        }
        let (m, allow) = match mode {
            GkMode::Graded => (gradedk::Mode::Graded, false),
            GkMode::GradedExperimental => (gradedk::Mode::Graded, true),
            GkMode::Ungraded => (gradedk::Mode::Ungraded, false),
        };
        put_string(out, to_json(&kgroups_document("<ffi>", &g.0, m, allow)?))
    })
}

/// Graded K-theory of the complex Clifford algebra on `n` generators.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_clifford_ktheory(n: usize, out: *mut *mut GkKGroups) -> GkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out("out"));
        }
        *out = Box::into_raw(Box::new(GkKGroups(graded_k_lookup(n))));
        Ok(())
    })
}

/// # Safety
/// `k` must be null or a live K-groups handle.
#[no_mangle]
pub unsafe extern "C" fn gk_kgroups_free(k: *mut GkKGroups) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}

unsafe fn group_text(k: *const GkKGroups, index: u8, out: *mut *mut c_char) -> GkStatus {
    guard(|| {
        let k = k.as_ref().ok_or_else(|| Fail(GkStatus::NullPointer, "K-groups handle is null".into()))?;
        if out.is_null() {
            return Err(null_out("out"));
        }
        let g = if index == 0 { &k.0.k0 } else { &k.0.k1 };
        put_string(out, g.to_string())
    })
}

/// Canonical text of `K0`, e.g. `Z (+) Z_2`.
///
/// # Safety
/// `k` must be a live K-groups handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_kgroups_k0(k: *const GkKGroups, out: *mut *mut c_char) -> GkStatus {
    group_text(k, 0, out)
}

/// Canonical text of `K1`.
///
/// # Safety
/// `k` must be a live K-groups handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_kgroups_k1(k: *const GkKGroups, out: *mut *mut c_char) -> GkStatus {
    group_text(k, 1, out)
}

/// Free ranks of `K0` and `K1`. Either output may be null.
///
/// # Safety
/// `k` must be a live K-groups handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_kgroups_free_ranks(k: *const GkKGroups, rank0: *mut usize, rank1: *mut usize) -> GkStatus {
    guard(|| {
        let k = k.as_ref().ok_or_else(|| Fail(GkStatus::NullPointer, "K-groups handle is null".into()))?;
        if !rank0.is_null() {
            *rank0 = k.0.k0.free_rank();
        }
        if !rank1.is_null() {
            *rank1 = k.0.k1.free_rank();
        }
        Ok(())
    })
}

/// True when the result came from the experimental sink-permitting path.
///
/// # Safety
/// `k` must be null or a live K-groups handle.
#[no_mangle]
pub unsafe extern "C" fn gk_kgroups_is_experimental(k: *const GkKGroups) -> bool {
    k.as_ref().is_some_and(|k| k.0.experimental)
}

/// Smith normal form of a matrix in the `rows cols` text format, as JSON.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_snf_json(source: *const c_char, out: *mut *mut c_char) -> GkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out("out"));
        }
        let m = IntMatrix::parse_text(text(source, "source")?)?;
        let (report, _) = snf_report(&m).map_err(|e| Fail(GkStatus::Internal, e))?;
        put_string(out, to_json(&report))
    })
}

fn generators(n: isize) -> Option<usize> {
    usize::try_from(n).ok()
}

/// Product `a * b` in the complex Clifford algebra. A negative `n` places
/// both operands in the smallest algebra containing them.
///
/// # Safety
/// `a`, `b` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_clifford_mul(
    a: *const c_char,
    b: *const c_char,
    n: isize,
    out: *mut *mut c_char,
) -> GkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out("out"));
        }
        let n = generators(n);
        let x = parse_element(text(a, "a")?, n)?;
        let y = parse_element(text(b, "b")?, n)?;
        let m = x.n().max(y.n());
        let r = x.widen(m)?.multiply(&y.widen(m)?)?;
        put_string(out, r.to_string())
    })
}

/// Adjoint `a*`. A negative `n` infers the generator count.
///
/// # Safety
/// `a` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gk_clifford_star(a: *const c_char, n: isize, out: *mut *mut c_char) -> GkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out("out"));
        }
        let x = parse_element(text(a, "a")?, generators(n))?;
        put_string(out, x.adjoint().to_string())
    })
}
