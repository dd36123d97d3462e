//! C interface to the `mstp` solvers.
//!
//! Instances and solutions are opaque handles created and released through
//! this API. Every fallible call returns an [`MstpStatus`]; on failure
//! [`mstp_last_error`] describes the problem. Strings returned by the library
//! must be released with [`mstp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mstp::{Error, Measure, PathSequence, ProblemInstance, TemporalGraph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MstpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    ResourceLimit = 5,
    Panic = 6,
}

/// Values accepted for the `algo` argument of [`mstp_solve`].
#[repr(C)]
pub enum MstpAlgo {
    Auto = 0,
    Xp = 1,
    Fpt = 2,
    Naive = 3,
}

/// Values accepted for the `rule` argument of [`mstp_kernelize`].
#[repr(C)]
pub enum MstpRule {
    Dissimilar = 0,
    Similar = 1,
}

/// Values accepted for the `measure` argument of [`mstp_instance_new`].
#[repr(C)]
pub enum MstpMeasure {
    Vdv = 0,
    Ede = 1,
    Viv = 2,
    Eie = 3,
}

/// Opaque problem instance.
pub struct MstpInstance {
    inner: ProblemInstance,
}

/// Opaque sequence of paths, one per snapshot.
pub struct MstpSolution {
    inner: PathSequence,
    raw: Vec<Vec<u32>>,
}

impl MstpSolution {
    fn new(inner: PathSequence) -> Self {
        let raw = inner
            .paths
            .iter()
            .map(|p| p.vertices().iter().map(|v| v.0).collect())
            .collect();
        MstpSolution { inner, raw }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (MstpStatus, String);

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn from_error(e: Error) -> Failure {
    let status = match e {
        Error::Parse { .. } => MstpStatus::ParseError,
        Error::CatalogTooLarge { .. } => MstpStatus::ResourceLimit,
        _ => MstpStatus::InvalidArgument,
    };
    (status, e.to_string())
}

fn null(what: &str) -> Failure {
    (MstpStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MstpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MstpStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MstpStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| (MstpStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|e| (MstpStatus::InvalidArgument, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the most recent failed call on this thread, or null. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn mstp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mstp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an instance in the `mstp 1` text format.
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_instance_parse(text_ptr: *const c_char, out: *mut *mut MstpInstance) -> MstpStatus {
    guard(|| {
        let inner = mstp::parse_instance(text(text_ptr, "text")?).map_err(from_error)?;
        store(out, MstpInstance { inner })
    })
}

/// Builds an instance from `edge_count` triples `(snapshot, u, v)` stored
/// consecutively in `edges`; snapshots are numbered from 0. `measure` is one
/// of [`MstpMeasure`].
///
/// # Safety
/// `edges` must point to `3 * edge_count` readable values (it may be null
/// when `edge_count` is 0); `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_instance_new(
    n: u32,
    tau: u32,
    edges: *const u32,
    edge_count: usize,
    s: u32,
    t: u32,
    k: u32,
    ell: u32,
    measure: u32,
    out: *mut *mut MstpInstance,
) -> MstpStatus {
    guard(|| {
        let measure = match measure {
            0 => Measure::Vdv,
            1 => Measure::Ede,
            2 => Measure::Viv,
            3 => Measure::Eie,
            m => return Err((MstpStatus::InvalidArgument, format!("unknown measure code {m}"))),
        };
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 3 * edge_count)
        };
        let mut snapshots = vec![Vec::new(); tau as usize];
        for e in flat.chunks_exact(3) {
            let snap = snapshots.get_mut(e[0] as usize).ok_or_else(|| {
                (
                    MstpStatus::InvalidArgument,
                    format!("snapshot {} out of range (tau = {tau})", e[0]),
                )
            })?;
            snap.push((e[1] as usize, e[2] as usize));
        }
        let graph = TemporalGraph::new(n as usize, snapshots).map_err(from_error)?;
        let inner = ProblemInstance::new(graph, s as usize, t as usize, k as usize, ell as usize, measure)
            .map_err(from_error)?;
        store(out, MstpInstance { inner })
    })
}

/// Releases an instance. Null is ignored.
///
/// # Safety
/// `inst` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mstp_instance_free(inst: *mut MstpInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Canonical text of an instance; release with [`mstp_string_free`].
///
/// # Safety
/// `inst` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_instance_write(inst: *const MstpInstance, out: *mut *mut c_char) -> MstpStatus {
    guard(|| {
        let inst = handle(inst, "instance")?;
        store_string(out, mstp::write_instance(&inst.inner))
    })
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mstp_instance_n(inst: *const MstpInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.inner.n())
}

/// Number of snapshots, or 0 for null.
///
/// # Safety
/// `inst` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mstp_instance_tau(inst: *const MstpInstance) -> usize {
    inst.as_ref().map_or(0, |i| i.inner.tau())
}

/// Decides an instance with one of [`MstpAlgo`]. Sets `*yes`; on YES and
/// when `solution` is not null, stores a new solution handle there, otherwise
/// stores null.
///
/// # Safety
/// `inst` must be null or a live handle; `yes` and `solution` must be null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_solve(
    inst: *const MstpInstance,
    algo: u32,
    yes: *mut bool,
    solution: *mut *mut MstpSolution,
) -> MstpStatus {
    guard(|| {
        let inst = &handle(inst, "instance")?.inner;
        if yes.is_null() {
            return Err(null("yes"));
        }
        let found = match algo {
            0 if inst.measure.is_dissimilarity() => mstp::solve_fpt_dissimilar(inst),
            0 | 1 => mstp::solve_xp(inst),
            2 => mstp::solve_fpt_dissimilar(inst),
            3 => Ok(mstp::solve_naive(inst)),
            a => return Err((MstpStatus::InvalidArgument, format!("unknown algorithm code {a}"))),
        }
        .map_err(from_error)?;
        *yes = found.is_some();
        if !solution.is_null() {
            *solution = found.map_or(ptr::null_mut(), |seq| Box::into_raw(Box::new(MstpSolution::new(seq))));
        }
        Ok(())
    })
}

/// Checks a solution against an instance and sets `*accepted`. A rejection
/// is not an error; its reason is available from [`mstp_last_error`].
///
/// # Safety
/// `inst` and `sol` must be null or live handles; `accepted` must be null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_verify(
    inst: *const MstpInstance,
    sol: *const MstpSolution,
    accepted: *mut bool,
) -> MstpStatus {
    let mut reason = None;
    let status = guard(|| {
        let inst = handle(inst, "instance")?;
        let sol = handle(sol, "solution")?;
        if accepted.is_null() {
            return Err(null("accepted"));
        }
        let report = mstp::verify_solution(&inst.inner, &sol.inner);
        *accepted = report.accepted();
        reason = report.failure.map(|f| f.to_string());
        Ok(())
    });
    if let Some(r) = reason {
        set_error(r);
    }
    status
}

/// Kernelizes with one of [`MstpRule`] into a new instance handle.
///
/// # Safety
/// `inst` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_kernelize(inst: *const MstpInstance, rule: u32, out: *mut *mut MstpInstance) -> MstpStatus {
    guard(|| {
        let inst = &handle(inst, "instance")?.inner;
        let kr = match rule {
            0 => mstp::kernelize_dissimilarity(inst),
            1 => mstp::kernelize_similarity(inst),
            r => return Err((MstpStatus::InvalidArgument, format!("unknown rule code {r}"))),
        }
        .map_err(from_error)?;
        store(out, MstpInstance { inner: kr.instance })
    })
}

/// Turns an edge-measure instance into the equivalent vertex-measure one.
///
/// # Safety
/// `inst` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_reduce(inst: *const MstpInstance, out: *mut *mut MstpInstance) -> MstpStatus {
    guard(|| {
        let inst = &handle(inst, "instance")?.inner;
        let art = match inst.measure {
            Measure::Ede => mstp::reduce_ede_to_vdv(inst),
            Measure::Eie => mstp::reduce_eie_to_viv(inst),
            m => return Err((MstpStatus::InvalidArgument, format!("no reduction from measure {m}"))),
        }
        .map_err(from_error)?;
        store(out, MstpInstance { inner: art.instance })
    })
}

/// Parses a solution in the `mstp-solution 1` text format.
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_solution_parse(text_ptr: *const c_char, out: *mut *mut MstpSolution) -> MstpStatus {
    guard(|| {
        let seq = mstp::parse_solution(text(text_ptr, "text")?).map_err(from_error)?;
        store(out, MstpSolution::new(seq))
    })
}

/// Text of a solution; release with [`mstp_string_free`].
///
/// # Safety
/// `sol` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_solution_write(sol: *const MstpSolution, out: *mut *mut c_char) -> MstpStatus {
    guard(|| {
        let sol = handle(sol, "solution")?;
        store_string(out, mstp::write_solution(&sol.inner))
    })
}

/// Number of paths, or 0 for null.
///
/// # Safety
/// `sol` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mstp_solution_len(sol: *const MstpSolution) -> usize {
    sol.as_ref().map_or(0, |s| s.raw.len())
}

/// Borrows path `index` (0-based). The vertex array belongs to the solution
/// and lives as long as it does.
///
/// # Safety
/// `sol` must be null or a live handle; `vertices` and `len` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mstp_solution_path(
    sol: *const MstpSolution,
    index: usize,
    vertices: *mut *const u32,
    len: *mut usize,
) -> MstpStatus {
    guard(|| {
        let sol = handle(sol, "solution")?;
        if vertices.is_null() || len.is_null() {
            return Err(null("output pointer"));
        }
        let path = sol.raw.get(index).ok_or_else(|| {
            (
                MstpStatus::InvalidArgument,
                format!("path {index} out of range ({} paths)", sol.raw.len()),
            )
        })?;
        *vertices = path.as_ptr();
        *len = path.len();
        Ok(())
    })
}

/// Releases a solution. Null is ignored.
///
/// # Safety
/// `sol` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mstp_solution_free(sol: *mut MstpSolution) {
    if !sol.is_null() {
        drop(Box::from_raw(sol));
    }
}
