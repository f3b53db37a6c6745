//! C ABI over `infinite-euler`.
//!
//! Graphs and streams are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`IeStatus`]; on failure a
//! message is kept per thread and can be read with [`ie_last_error`].
//! Panics never cross the boundary: they are reported as
//! [`IeStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use infinite_euler::deciders::Budget;
use infinite_euler::{
    families, load_presentation, Decider, Degree, EdgeId, Error, EulerStream, FinitePath, GraphDescription, Side,
    StepBudgetOutcome, VertexId,
};

/// Pass as `budget` to use the default: unlimited when the graph declares
/// the matching condition, a fixed cap otherwise.
pub const IE_BUDGET_AUTO: u64 = u64::MAX;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IeStatus {
    Ok = 0,
    NullPointer = 1,
    Usage = 2,
    Domain = 3,
    Exhausted = 4,
    Parse = 5,
    Validation = 6,
    InvalidUtf8 = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IeSide {
    Right = 0,
    Left = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IeAnswer {
    False = 0,
    True = 1,
    Exhausted = 2,
}

/// Opaque graph handle.
pub struct IeGraph(GraphDescription);

/// Opaque stream handle.
pub struct IeStream(EulerStream);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> IeStatus {
    match e {
        Error::Usage(_) => IeStatus::Usage,
        Error::Exhausted(_) => IeStatus::Exhausted,
        Error::Parse { .. } => IeStatus::Parse,
        Error::Validation(_) => IeStatus::Validation,
        _ => IeStatus::Domain,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (IeStatus, String)>) -> IeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IeStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            IeStatus::Internal
        }
    }
}

fn lib(e: Error) -> (IeStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (IeStatus, String) {
    (IeStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, (IeStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (IeStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn graph_ref<'a>(g: *const IeGraph) -> Result<&'a GraphDescription, (IeStatus, String)> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn path_from(base: i64, tokens: *const u64, len: usize) -> Result<FinitePath, (IeStatus, String)> {
    if tokens.is_null() {
        return Err(null("tokens"));
    }
    let tokens = std::slice::from_raw_parts(tokens, len);
    FinitePath::from_tokens(base, tokens).map_err(|e| lib(e.into()))
}

/// Message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ie_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Looks up a built-in family (`ray`, `line`, `loop_star`, `fat_ray`).
///
/// # Safety
/// `name` must be NULL or a NUL-terminated string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ie_graph_builtin(name: *const c_char, out: *mut *mut IeGraph) -> IeStatus {
    guard(|| {
        let name = text(name, "name")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = families::builtin(name).ok_or_else(|| (IeStatus::Domain, format!("unknown family `{name}`")))?;
        *out = Box::into_raw(Box::new(IeGraph(g)));
        Ok(())
    })
}

/// Parses a graph presentation.
///
/// # Safety
/// As for [`ie_graph_builtin`].
#[no_mangle]
pub unsafe extern "C" fn ie_graph_load(presentation: *const c_char, out: *mut *mut IeGraph) -> IeStatus {
    guard(|| {
        let body = text(presentation, "presentation")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = load_presentation(body).map_err(lib)?;
        *out = Box::into_raw(Box::new(IeGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ie_graph_free(g: *mut IeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Degree of `v`. On success `*infinite` is true for infinite degree (and
/// `*degree` is then 0), otherwise false with the degree in `*degree`.
///
/// # Safety
/// `g` must be a live handle; `infinite` and `degree` writable.
#[no_mangle]
pub unsafe extern "C" fn ie_graph_degree(g: *const IeGraph, v: u64, infinite: *mut bool, degree: *mut u64) -> IeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if infinite.is_null() || degree.is_null() {
            return Err(null("output"));
        }
        match g.oracle().degree(VertexId(v)) {
            Some(Degree::Infinite) => (*infinite, *degree) = (true, 0),
            Some(Degree::Finite(d)) => (*infinite, *degree) = (false, d),
            None => return Err((IeStatus::Domain, format!("{v} is not a vertex"))),
        }
        Ok(())
    })
}

/// Endpoints of edge `e`, smaller first.
///
/// # Safety
/// `g` must be a live handle; `u` and `v` writable.
#[no_mangle]
pub unsafe extern "C" fn ie_graph_incidence(g: *const IeGraph, e: u64, u: *mut u64, v: *mut u64) -> IeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if u.is_null() || v.is_null() {
            return Err(null("output"));
        }
        let inc = g.oracle().incidence(EdgeId(e)).ok_or_else(|| (IeStatus::Domain, format!("{e} is not an edge")))?;
        let (a, b) = inc.endpoints();
        (*u, *v) = (a.0, b.0);
        Ok(())
    })
}

unsafe fn decide(
    g: *const IeGraph,
    base: i64,
    tokens: *const u64,
    len: usize,
    budget: u64,
    answer: *mut IeAnswer,
    two_way: bool,
) -> IeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if answer.is_null() {
            return Err(null("answer"));
        }
        let t = path_from(base, tokens, len)?;
        let budget = if budget == IE_BUDGET_AUTO { Budget::Auto } else { Budget::Steps(budget) };
        let decider = Decider::new(g).budget(budget);
        let verdict = if two_way { decider.bi_extensible(&t) } else { decider.right_extensible(&t) }.map_err(lib)?;
        *answer = match verdict.outcome {
            StepBudgetOutcome::Decided(true) => IeAnswer::True,
            StepBudgetOutcome::Decided(false) => IeAnswer::False,
            StepBudgetOutcome::Exhausted(_) => IeAnswer::Exhausted,
        };
        Ok(())
    })
}

/// Whether the path `tokens = v0 e0 v1 … vk` (domain starting at `base`)
/// extends to a one-way infinite Eulerian path.
///
/// # Safety
/// `g` must be a live handle, `tokens` must point to `len` values and
/// `answer` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ie_is_right_extensible(
    g: *const IeGraph,
    base: i64,
    tokens: *const u64,
    len: usize,
    budget: u64,
    answer: *mut IeAnswer,
) -> IeStatus {
    decide(g, base, tokens, len, budget, answer, false)
}

/// Two-way counterpart of [`ie_is_right_extensible`].
///
/// # Safety
/// As for [`ie_is_right_extensible`].
#[no_mangle]
pub unsafe extern "C" fn ie_is_bi_extensible(
    g: *const IeGraph,
    base: i64,
    tokens: *const u64,
    len: usize,
    budget: u64,
    answer: *mut IeAnswer,
) -> IeStatus {
    decide(g, base, tokens, len, budget, answer, true)
}

/// Opens a one-way stream. With `has_start` false the least distinguished
/// vertex is used. The stream keeps its own reference to the graph.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ie_stream_one_way(
    g: *const IeGraph,
    has_start: bool,
    start: u64,
    out: *mut *mut IeStream,
) -> IeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = infinite_euler::one_way_stream(g, has_start.then_some(VertexId(start))).map_err(lib)?;
        *out = Box::into_raw(Box::new(IeStream(s)));
        Ok(())
    })
}

/// Opens a two-way stream.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ie_stream_two_way(g: *const IeGraph, out: *mut *mut IeStream) -> IeStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = infinite_euler::two_way_stream(g).map_err(lib)?;
        *out = Box::into_raw(Box::new(IeStream(s)));
        Ok(())
    })
}

/// Pulls the next step on `side`: the edge crossed, the vertex reached and
/// its position. Pulling `Left` on a one-way stream is a usage error.
///
/// # Safety
/// `s` must be a live stream handle; the outputs writable.
#[no_mangle]
pub unsafe extern "C" fn ie_stream_next(
    s: *mut IeStream,
    side: IeSide,
    edge: *mut u64,
    vertex: *mut u64,
    pos: *mut i64,
) -> IeStatus {
    guard(|| {
        let s = s.as_mut().ok_or_else(|| null("stream"))?;
        if edge.is_null() || vertex.is_null() || pos.is_null() {
            return Err(null("output"));
        }
        let side = match side {
            IeSide::Right => Side::Right,
            IeSide::Left => Side::Left,
        };
        let step = s.0.next_edge(side).map_err(lib)?;
        (*edge, *vertex, *pos) = (step.edge.0, step.vertex.0, step.pos);
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a stream handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ie_stream_free(s: *mut IeStream) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}
