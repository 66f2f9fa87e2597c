//! C interface to `screenq`.
//!
//! A context is created once from an algebra (catalog name or JSON root
//! datum), a depth and a weight, and then queried. Results are returned as
//! heap strings owned by the caller and released with `screenq_string_free`.
//! On any status other than `SCREENQ_STATUS_OK` or
//! `SCREENQ_STATUS_IDENTITY_FAILURE`, `screenq_last_error_message` describes
//! the problem for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use screenq::commands::{
    cmd_act, cmd_braid, cmd_serre_scan, cmd_verify, AlgebraSource, Outcome, OutputFormat, RunConfig, Suite, EXIT_FAIL,
};
use screenq::{Error, Weight};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScreenqStatus {
    Ok = 0,
    IdentityFailure = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    Config = 4,
    Parse = 5,
    Computation = 6,
    Panic = 7,
}

/// Opaque handle.
pub struct ScreenqContext {
    config: RunConfig,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> ScreenqStatus {
    match err {
        Error::Parse(_) => ScreenqStatus::Parse,
        Error::Config(_)
        | Error::UnknownAlgebra(_)
        | Error::InvalidDatum(_)
        | Error::GenericWeight
        | Error::IndexOutOfRange { .. }
        | Error::DepthExceeded { .. } => ScreenqStatus::Config,
        Error::ArityMismatch { .. } | Error::DivisionByZero | Error::DenominatorVanishes(_) => {
            ScreenqStatus::Computation
        }
    }
}

struct Failure(ScreenqStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(ScreenqStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ScreenqStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn context<'a>(ctx: *const ScreenqContext) -> Result<&'a ScreenqContext, Failure> {
    ctx.as_ref().ok_or_else(|| Failure(ScreenqStatus::NullArgument, "context is null".into()))
}

/// Runs `body`, converting errors and panics into a status and the
/// thread-local message.
fn guard(body: impl FnOnce() -> Result<ScreenqStatus, Failure>) -> ScreenqStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            ScreenqStatus::Panic
        }
    }
}

unsafe fn emit(outcome: Outcome, out: *mut *mut c_char) -> Result<ScreenqStatus, Failure> {
    let s = CString::new(outcome.output).map_err(|_| Failure(ScreenqStatus::Panic, "output contains nul".into()))?;
    *out = s.into_raw();
    Ok(if outcome.code == EXIT_FAIL { ScreenqStatus::IdentityFailure } else { ScreenqStatus::Ok })
}

/// Creates a context. `algebra` is a catalog name (`sl2`, `sl3`, `sl2_1`,
/// `osp1_2`) or a JSON root datum beginning with `{`. `weight` is `generic`
/// or comma-separated coordinates. Set `json` nonzero for JSON output.
///
/// # Safety
/// String arguments must be null or valid nul-terminated strings; `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn screenq_context_new(
    algebra: *const c_char,
    depth: u32,
    weight: *const c_char,
    json: i32,
    out: *mut *mut ScreenqContext,
) -> ScreenqStatus {
    guard(|| {
        if out.is_null() {
            return Err(Failure(ScreenqStatus::NullArgument, "out is null".into()));
        }
        *out = ptr::null_mut();
        let algebra = read_str(algebra, "algebra")?;
        let source = if algebra.trim_start().starts_with('{') {
            AlgebraSource::ConfigJson(algebra.to_string())
        } else {
            AlgebraSource::Catalog(algebra.to_string())
        };
        let weight = if weight.is_null() { Weight::Generic } else { Weight::parse(read_str(weight, "weight")?)? };
        let mut config = RunConfig::new(source);
        config.depth = depth as usize;
        config.weight = weight;
        config.format = if json != 0 { OutputFormat::Json } else { OutputFormat::Text };
        config.module()?;
        *out = Box::into_raw(Box::new(ScreenqContext { config }));
        Ok(ScreenqStatus::Ok)
    })
}

/// # Safety
/// `ctx` must be null or a pointer returned by `screenq_context_new` that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn screenq_context_free(ctx: *mut ScreenqContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Runs `relations`, `coproduct`, `hopf` or `all`. Returns
/// `SCREENQ_STATUS_IDENTITY_FAILURE` with the report when any identity fails.
///
/// # Safety
/// See `screenq_context_new`; `out` receives a string for `screenq_string_free`.
#[no_mangle]
pub unsafe extern "C" fn screenq_verify(
    ctx: *const ScreenqContext,
    suite: *const c_char,
    out: *mut *mut c_char,
) -> ScreenqStatus {
    guard(|| {
        let ctx = context(ctx)?;
        let suite: Suite = read_str(suite, "suite")?.parse()?;
        let outcome = cmd_verify(&ctx.config, suite)?;
        emit(outcome, out)
    })
}

/// Applies a word such as `"E1 F1 K2-"` to the basis vector named by `start`
/// (e.g. `"2,1"`, empty for the highest-weight vector).
///
/// # Safety
/// See `screenq_verify`.
#[no_mangle]
pub unsafe extern "C" fn screenq_act(
    ctx: *const ScreenqContext,
    word: *const c_char,
    start: *const c_char,
    out: *mut *mut c_char,
) -> ScreenqStatus {
    guard(|| {
        let ctx = context(ctx)?;
        let word = read_str(word, "word")?;
        let start = if start.is_null() { "" } else { read_str(start, "start")? };
        emit(cmd_act(&ctx.config, word, start)?, out)
    })
}

/// Singular vectors of the comma-separated multidegree.
///
/// # Safety
/// See `screenq_verify`.
#[no_mangle]
pub unsafe extern "C" fn screenq_serre_scan(
    ctx: *const ScreenqContext,
    multidegree: *const c_char,
    out: *mut *mut c_char,
) -> ScreenqStatus {
    guard(|| {
        let ctx = context(ctx)?;
        let d = read_str(multidegree, "multidegree")?;
        emit(cmd_serre_scan(&ctx.config, d)?, out)
    })
}

/// Exchange phase of two screened vertex operators at concrete weights.
///
/// # Safety
/// See `screenq_verify`.
#[no_mangle]
pub unsafe extern "C" fn screenq_braid(
    ctx: *const ScreenqContext,
    lambda1: *const c_char,
    seq1: *const c_char,
    lambda2: *const c_char,
    seq2: *const c_char,
    out: *mut *mut c_char,
) -> ScreenqStatus {
    guard(|| {
        let ctx = context(ctx)?;
        let l1 = read_str(lambda1, "lambda1")?;
        let s1 = read_str(seq1, "seq1")?;
        let l2 = read_str(lambda2, "lambda2")?;
        let s2 = read_str(seq2, "seq2")?;
        emit(cmd_braid(&ctx.config, l1, s1, l2, s2)?, out)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn screenq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn screenq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
