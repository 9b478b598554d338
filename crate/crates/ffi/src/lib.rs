//! C ABI over `lights_out`.
//!
//! Every fallible function returns a [`LoStatus`]. On failure a message is
//! available from [`lo_last_error_message`] on the same thread. Handles are
//! opaque and must be released with their matching `_free` function.
//! Vertices are 1-based.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use num_bigint::BigUint;

use lights_out::graph6::{parse_graph6, write_graph6};
use lights_out::montecarlo::{run_estimate, trial_graph, EstimateMode, EstimateRequest};
use lights_out::sampler::{default_gn_source, selector_for, PartitionSelector};
use lights_out::{exact_counts, Configuration, Error, Graph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LoStatus {
    Ok = 0,
    InvalidArgument = 1,
    UnsupportedSize = 2,
    Parse = 3,
    Io = 4,
    NullPointer = 5,
    /// A numeric result does not fit the output type.
    Overflow = 6,
    Internal = 7,
    Panic = 8,
}

pub struct LoGraph {
    inner: Graph,
}

/// Stream of uniformly random unlabeled graphs. Draw `k` is reproducible
/// from `(n, seed, connected, k)`.
pub struct LoSampler {
    selector: Arc<PartitionSelector>,
    mode: EstimateMode,
    seed: u64,
    next: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoExactCounts {
    pub n: u32,
    pub total: u64,
    pub solvable: u64,
    pub connected: u64,
    pub connected_solvable: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct LoEstimateRequest {
    pub n: u32,
    pub trials: u64,
    pub seed: u64,
    /// Nonzero to sample connected graphs only.
    pub connected: u8,
    /// 0 picks the available parallelism.
    pub workers: u32,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct LoEstimateResult {
    pub trials: u64,
    pub solvable_count: u64,
    /// `UINT64_MAX` in connected mode.
    pub connected_count: u64,
    pub p_solvable: f64,
    /// NaN in connected mode.
    pub p_connected: f64,
    pub moe95: f64,
    pub rejected_draws: u64,
    pub elapsed_seconds: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LoStatus {
    match e {
        Error::InvalidArgument(_) => LoStatus::InvalidArgument,
        Error::UnsupportedSize { .. } => LoStatus::UnsupportedSize,
        Error::Parse { .. } => LoStatus::Parse,
        Error::Io(_) => LoStatus::Io,
        Error::Internal(_) => LoStatus::Internal,
    }
}

struct Fail(LoStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(LoStatus::NullPointer, format!("{what} is null"))
}

fn invalid(msg: impl Into<String>) -> Fail {
    Fail(LoStatus::InvalidArgument, msg.into())
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LoStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            LoStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const LoGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_zero_based(v: usize, n: usize) -> Result<usize, Fail> {
    if v == 0 || v > n {
        return Err(invalid(format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

unsafe fn c_string(s: String, out: *mut *mut c_char) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(LoStatus::Internal, "interior nul".into()))?;
    write_out(out, c.into_raw())
}

/// Message for the last failing call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lo_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn lo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Edgeless graph on `n >= 1` vertices.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_new(n: usize, out: *mut *mut LoGraph) -> LoStatus {
    guard(|| {
        if n == 0 {
            return Err(invalid("graphs have at least one vertex"));
        }
        write_out(
            out,
            Box::into_raw(Box::new(LoGraph {
                inner: Graph::empty(n),
            })),
        )
    })
}

/// # Safety
/// `text` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut LoGraph,
) -> LoStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let bytes = CStr::from_ptr(text).to_bytes();
        let bytes = bytes.strip_suffix(b"\n").unwrap_or(bytes);
        let g = parse_graph6(bytes)?;
        write_out(out, Box::into_raw(Box::new(LoGraph { inner: g })))
    })
}

/// # Safety
/// `g` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_free(g: *mut LoGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Encodes `g` as graph6; release the string with [`lo_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_to_graph6(g: *const LoGraph, out: *mut *mut c_char) -> LoStatus {
    guard(|| c_string(write_graph6(graph_ref(g)?), out))
}

/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_vertex_count(g: *const LoGraph, out: *mut usize) -> LoStatus {
    guard(|| write_out(out, graph_ref(g)?.vertex_count()))
}

/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_edge_count(g: *const LoGraph, out: *mut usize) -> LoStatus {
    guard(|| write_out(out, graph_ref(g)?.edge_count()))
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_add_edge(g: *mut LoGraph, u: usize, v: usize) -> LoStatus {
    guard(|| {
        let g = &mut g.as_mut().ok_or_else(|| null("graph"))?.inner;
        let n = g.vertex_count();
        g.add_edge(to_zero_based(u, n)?, to_zero_based(v, n)?)?;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_has_edge(
    g: *const LoGraph,
    u: usize,
    v: usize,
    out: *mut bool,
) -> LoStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.vertex_count();
        write_out(out, g.has_edge(to_zero_based(u, n)?, to_zero_based(v, n)?))
    })
}

/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_is_universally_solvable(
    g: *const LoGraph,
    out: *mut bool,
) -> LoStatus {
    guard(|| write_out(out, graph_ref(g)?.is_universally_solvable()))
}

/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_is_connected(g: *const LoGraph, out: *mut bool) -> LoStatus {
    guard(|| write_out(out, graph_ref(g)?.is_connected()))
}

/// Finds presses switching off the lights `lit[0..lit_len]`.
///
/// On success `*solvable` says whether a solution exists; if so the press set
/// is written ascending to `presses` (capacity at least the vertex count) and
/// its size to `*presses_len`.
///
/// # Safety
/// `lit` must point to `lit_len` values (or be null when `lit_len` is 0),
/// `presses` to writable space for `n` values, and the out pointers must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_graph_solve(
    g: *const LoGraph,
    lit: *const usize,
    lit_len: usize,
    presses: *mut usize,
    presses_len: *mut usize,
    solvable: *mut bool,
) -> LoStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let n = g.vertex_count();
        let lit: &[usize] = match (lit.is_null(), lit_len) {
            (_, 0) => &[],
            (true, _) => return Err(null("lit")),
            (false, len) => std::slice::from_raw_parts(lit, len),
        };
        let on = lit
            .iter()
            .map(|&v| to_zero_based(v, n))
            .collect::<Result<Vec<_>, _>>()?;
        if presses.is_null() || presses_len.is_null() {
            return Err(null("presses"));
        }
        match g.solve_configuration(&Configuration::new(n, on)?)? {
            Some(x) => {
                for (k, v) in x.iter().enumerate() {
                    presses.add(k).write(v + 1);
                }
                presses_len.write(x.len());
                write_out(solvable, true)
            }
            None => {
                presses_len.write(0);
                write_out(solvable, false)
            }
        }
    })
}

/// Number of unlabeled graphs on `n` vertices as a decimal string; release
/// it with [`lo_string_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_gn(n: usize, out: *mut *mut c_char) -> LoStatus {
    guard(|| c_string(default_gn_source().get(n)?.to_string(), out))
}

/// Exact unlabeled counts for `n <= 8`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_exact_counts(n: usize, out: *mut LoExactCounts) -> LoStatus {
    guard(|| {
        let row = exact_counts(n)?;
        let narrow = |v: &BigUint| -> Result<u64, Fail> {
            u64::try_from(v).map_err(|_| Fail(LoStatus::Overflow, format!("{v} exceeds 64 bits")))
        };
        write_out(
            out,
            LoExactCounts {
                n: n as u32,
                total: narrow(&row.total)?,
                solvable: narrow(&row.solvable)?,
                connected: narrow(&row.connected)?,
                connected_solvable: narrow(&row.connected_solvable)?,
            },
        )
    })
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// # Safety
/// `req` must be readable and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_estimate(
    req: *const LoEstimateRequest,
    out: *mut LoEstimateResult,
) -> LoStatus {
    guard(|| {
        let req = req.as_ref().ok_or_else(|| null("request"))?;
        let r = run_estimate(&EstimateRequest {
            n: req.n as usize,
            trials: req.trials,
            mode: if req.connected != 0 {
                EstimateMode::Connected
            } else {
                EstimateMode::All
            },
            seed: req.seed,
            workers: if req.workers == 0 {
                default_workers()
            } else {
                req.workers as usize
            },
        })?;
        write_out(
            out,
            LoEstimateResult {
                trials: req.trials,
                solvable_count: r.solvable_count,
                connected_count: r.connected_count.unwrap_or(u64::MAX),
                p_solvable: r.p_solvable,
                p_connected: r.p_connected.unwrap_or(f64::NAN),
                moe95: r.moe95,
                rejected_draws: r.rejected_draws,
                elapsed_seconds: r.elapsed.as_secs_f64(),
            },
        )
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_sampler_new(
    n: usize,
    seed: u64,
    connected: bool,
    out: *mut *mut LoSampler,
) -> LoStatus {
    guard(|| {
        let sampler = LoSampler {
            selector: selector_for(n)?,
            mode: if connected {
                EstimateMode::Connected
            } else {
                EstimateMode::All
            },
            seed,
            next: 0,
        };
        write_out(out, Box::into_raw(Box::new(sampler)))
    })
}

/// Draws the next graph; release it with [`lo_graph_free`].
///
/// # Safety
/// `s` must be a live sampler and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn lo_sampler_next(s: *mut LoSampler, out: *mut *mut LoGraph) -> LoStatus {
    guard(|| {
        let s = s.as_mut().ok_or_else(|| null("sampler"))?;
        let (g, _) = trial_graph(&s.selector, s.mode, s.seed, s.next)?;
        s.next += 1;
        write_out(out, Box::into_raw(Box::new(LoGraph { inner: g })))
    })
}

/// # Safety
/// `s` must be null or a sampler from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lo_sampler_free(s: *mut LoSampler) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
