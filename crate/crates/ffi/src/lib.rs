//! C interface to `poset_polytopes`.
//!
//! Every function returns a [`PpStatus`]; results come back through out
//! pointers. Posets live behind the opaque [`PpPoset`] handle. Strings
//! returned to the caller are owned by them and released with
//! [`pp_string_free`]. After a failure, [`pp_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use poset_polytopes::grassmann::root_poset;
use poset_polytopes::polytope::{self, IntPoint, Method, Params};
use poset_polytopes::{dilworth, geometry, io, verify, Error, Poset};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input: bad JSON, unknown label, wrong vector length.
    InvalidInput = 3,
    /// A domain error such as a point outside the polytope.
    Domain = 4,
    /// The caller's buffer is too small; the required length was written.
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpMethod {
    Flow = 0,
    Brute = 1,
}

/// Opaque poset handle.
pub struct PpPoset {
    inner: Poset,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(e: Error) -> PpStatus {
    let status = if e.is_input_error() {
        PpStatus::InvalidInput
    } else {
        PpStatus::Domain
    };
    set_error(format!("{}: {e}", e.kind()));
    status
}

fn guard(f: impl FnOnce() -> PpStatus) -> PpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".into());
            PpStatus::Panic
        }
    }
}

macro_rules! try_pp {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            set_error(concat!("`", stringify!($p), "` is null").into());
            return PpStatus::NullPointer;
        })+
    };
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PpStatus> {
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string is not UTF-8".into());
        PpStatus::InvalidUtf8
    })
}

unsafe fn read_point(z: *const i64, len: usize) -> IntPoint {
    if len == 0 {
        return IntPoint(Vec::new());
    }
    IntPoint(std::slice::from_raw_parts(z, len).to_vec())
}

unsafe fn give_string(s: String, out: *mut *mut c_char) {
    *out = CString::new(s).expect("JSON has no nul bytes").into_raw();
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn pp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a poset from `{"elements": [...], "relations": [[a, b], ...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pp_poset_from_json(json: *const c_char, out: *mut *mut PpPoset) -> PpStatus {
    guard(|| {
        non_null!(json, out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let p = try_pp!(io::parse_poset(text));
        *out = Box::into_raw(Box::new(PpPoset { inner: p }));
        PpStatus::Ok
    })
}

/// The root poset of `Gr(d, n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pp_poset_grassmann(d: usize, n: usize, out: *mut *mut PpPoset) -> PpStatus {
    guard(|| {
        non_null!(out);
        let rp = try_pp!(root_poset(d, n));
        *out = Box::into_raw(Box::new(PpPoset { inner: rp.poset }));
        PpStatus::Ok
    })
}

/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pp_poset_free(p: *mut PpPoset) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pp_poset_size(p: *const PpPoset) -> usize {
    p.as_ref().map_or(0, |p| p.inner.size())
}

/// Poset as JSON in the input format, with cover relations only.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pp_poset_to_json(p: *const PpPoset, out: *mut *mut c_char) -> PpStatus {
    guard(|| {
        non_null!(p, out);
        let text = serde_json::to_string(&(*p).inner.to_file()).expect("poset files serialize");
        give_string(text, out);
        PpStatus::Ok
    })
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pp_width(p: *const PpPoset, out: *mut usize) -> PpStatus {
    guard(|| {
        non_null!(p, out);
        let p = &(*p).inner;
        *out = try_pp!(dilworth::width(p, &p.all()));
        PpStatus::Ok
    })
}

/// `M(z)` for `z` given in element order; `method` is a [`PpMethod`] value.
///
/// # Safety
/// `z` must point to `len` readable values (may be null when `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn pp_violation_excess(
    p: *const PpPoset,
    z: *const i64,
    len: usize,
    m: u32,
    method: u32,
    out: *mut i64,
) -> PpStatus {
    guard(|| {
        non_null!(p, out);
        if len > 0 {
            non_null!(z);
        }
        let method = match method {
            x if x == PpMethod::Flow as u32 => Method::Flow,
            x if x == PpMethod::Brute as u32 => Method::Brute,
            other => {
                set_error(format!("unknown method {other}"));
                return PpStatus::InvalidInput;
            }
        };
        *out = try_pp!(polytope::violation_excess(&(*p).inner, &read_point(z, len), m, method));
        PpStatus::Ok
    })
}

/// # Safety
/// As for [`pp_violation_excess`].
#[no_mangle]
pub unsafe extern "C" fn pp_membership(
    p: *const PpPoset,
    z: *const i64,
    len: usize,
    m: u32,
    big_m: u32,
    out: *mut bool,
) -> PpStatus {
    guard(|| {
        non_null!(p, out);
        if len > 0 {
            non_null!(z);
        }
        *out = try_pp!(polytope::membership(&(*p).inner, &read_point(z, len), Params::new(m, big_m)));
        PpStatus::Ok
    })
}

/// `|S(m, M)|`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pp_enumerate_count(p: *const PpPoset, m: u32, big_m: u32, out: *mut usize) -> PpStatus {
    guard(|| {
        non_null!(p, out);
        *out = polytope::enumerate_points(&(*p).inner, Params::new(m, big_m)).len();
        PpStatus::Ok
    })
}

/// Decomposition certificate of `z` as JSON.
///
/// # Safety
/// As for [`pp_violation_excess`]; `out` receives a string for [`pp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pp_decompose_json(
    p: *const PpPoset,
    z: *const i64,
    len: usize,
    m: u32,
    big_m: u32,
    out: *mut *mut c_char,
) -> PpStatus {
    guard(|| {
        non_null!(p, out);
        if len > 0 {
            non_null!(z);
        }
        let p = &(*p).inner;
        let cert = try_pp!(polytope::decompose(p, &read_point(z, len), Params::new(m, big_m)));
        give_string(io::cert_json(p, &cert).to_string(), out);
        PpStatus::Ok
    })
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pp_partition_json(p: *const PpPoset, m: u32, big_m: u32, out: *mut *mut c_char) -> PpStatus {
    guard(|| {
        non_null!(p, out);
        let p = &(*p).inner;
        let cert = try_pp!(polytope::partition_poset(p, Params::new(m, big_m)));
        give_string(io::cert_json(p, &cert).to_string(), out);
        PpStatus::Ok
    })
}

/// Coefficients of the graph-closure Poincaré polynomial of `Gr(d, n)`,
/// constant term first. `*len` receives the coefficient count; with a null or
/// short buffer the call returns `BufferTooSmall` and writes nothing else.
///
/// # Safety
/// `coeffs` must have room for `cap` values (may be null when `cap == 0`).
#[no_mangle]
pub unsafe extern "C" fn pp_graph_poincare(
    d: usize,
    n: usize,
    coeffs: *mut i64,
    cap: usize,
    len: *mut usize,
) -> PpStatus {
    guard(|| {
        non_null!(len);
        let poly = try_pp!(geometry::graph_poincare(d, n));
        let c = poly.coeffs();
        *len = c.len();
        if coeffs.is_null() || cap < c.len() {
            set_error(format!("need room for {} coefficients", c.len()));
            return PpStatus::BufferTooSmall;
        }
        std::slice::from_raw_parts_mut(coeffs, c.len()).copy_from_slice(c);
        PpStatus::Ok
    })
}

/// Stratum index of the row space of a `d x n` row-major integer matrix.
///
/// # Safety
/// `rows` must point to `d * n` readable values.
#[no_mangle]
pub unsafe extern "C" fn pp_stratum(rows: *const i64, d: usize, n: usize, out: *mut usize) -> PpStatus {
    guard(|| {
        non_null!(rows, out);
        let flat = std::slice::from_raw_parts(rows, d * n);
        let matrix: Vec<Vec<i64>> = flat.chunks(n.max(1)).map(<[i64]>::to_vec).collect();
        let u = try_pp!(geometry::Subspace::from_ints(&matrix));
        *out = geometry::stratum_of(&u);
        PpStatus::Ok
    })
}

/// Runs the property suite (checks whose name starts with `prefix`) and
/// returns its JSON report. `Domain` signals a failed check.
///
/// # Safety
/// `prefix` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pp_verify_json(seed: u64, prefix: *const c_char, out: *mut *mut c_char) -> PpStatus {
    guard(|| {
        non_null!(prefix, out);
        let prefix = match read_str(prefix) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let report = verify::run(seed, prefix);
        give_string(serde_json::to_string(&report).expect("reports serialize"), out);
        if report.passed {
            PpStatus::Ok
        } else {
            set_error("property suite reported failures".into());
            PpStatus::Domain
        }
    })
}
