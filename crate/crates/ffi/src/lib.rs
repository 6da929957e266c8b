//! C ABI over `tlj`. Objects are opaque heap handles released by their `_free` function;
//! every fallible call returns a `TljStatus` and leaves a message for `tlj_last_error_message`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tlj::annular::{irrep_count_check, LoopSign};
use tlj::braid::{bracket_closure, jones_polynomial, BraidWord};
use tlj::json::{parse_link, scalar_to_json};
use tlj::jw::jones_wenzl;
use tlj::manifold::{rt_invariant, SurgeryPresentation};
use tlj::modular::{build_modular_data, verlinde_dim, DExtension, ModularData, RootClass};
use tlj::scalars::qpoly::rat_frac;
use tlj::{Context, Scalar, TljError};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TljStatus {
    Ok = 0,
    Parse = 1,
    InvalidParameters = 2,
    IndexOutOfRange = 3,
    ShapeMismatch = 4,
    ResourceLimit = 5,
    ChebyshevRoot = 6,
    NonModular = 7,
    NonIntegral = 8,
    MissingExtension = 9,
    DegenerateParameter = 10,
    InvalidRoot = 11,
    OddCrossingParity = 12,
    NotIsotropic = 13,
    RepeatedRoot = 14,
    WrongD = 15,
    Unsupported = 16,
    NullPointer = 17,
    InvalidUtf8 = 18,
    Panic = 19,
}

impl From<&TljError> for TljStatus {
    fn from(e: &TljError) -> Self {
        match e {
            TljError::Parse(_) => TljStatus::Parse,
            TljError::InvalidParameters(_) => TljStatus::InvalidParameters,
            TljError::IndexOutOfRange(_) => TljStatus::IndexOutOfRange,
            TljError::ShapeMismatch(_) => TljStatus::ShapeMismatch,
            TljError::ResourceLimit(_) => TljStatus::ResourceLimit,
            TljError::ChebyshevRoot(_) => TljStatus::ChebyshevRoot,
            TljError::NonModular => TljStatus::NonModular,
            TljError::NonIntegral(_) => TljStatus::NonIntegral,
            TljError::MissingExtension => TljStatus::MissingExtension,
            TljError::DegenerateParameter(_) => TljStatus::DegenerateParameter,
            TljError::InvalidRoot { .. } => TljStatus::InvalidRoot,
            TljError::OddCrossingParity(..) => TljStatus::OddCrossingParity,
            TljError::NotIsotropic(_) => TljStatus::NotIsotropic,
            TljError::RepeatedRoot(..) => TljStatus::RepeatedRoot,
            TljError::WrongD(_) => TljStatus::WrongD,
            TljError::Unsupported(_) => TljStatus::Unsupported,
        }
    }
}

/// A parameter context.
pub struct TljContext(Context);
/// An exact scalar.
pub struct TljScalar(Scalar);
/// A braid word.
pub struct TljBraid(BraidWord);
/// Modular data at a `4r`-primitive root together with the `D` extension.
pub struct TljModularData {
    md: ModularData,
    ext: DExtension,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Failure {
    Lib(TljError),
    Null(&'static str),
    Utf8,
}

impl From<TljError> for Failure {
    fn from(e: TljError) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TljStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TljStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            TljStatus::from(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            TljStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_error("string is not valid UTF-8".into());
            TljStatus::InvalidUtf8
        }
        Err(_) => {
            set_error("internal panic".into());
            TljStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn write_out<T>(out: *mut T, v: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn as_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8)
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn tlj_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tlj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Generic context, `A` a formal variable.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_context_generic(out: *mut *mut TljContext) -> TljStatus {
    guard(|| write_out(out, boxed(TljContext(Context::generic())), "out"))
}

/// `A = exp(2πi t/m)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_context_root(m: u64, t: i64, out: *mut *mut TljContext) -> TljStatus {
    guard(|| write_out(out, boxed(TljContext(Context::root(m, t)?)), "out"))
}

/// Only the loop value `d = num/den` is fixed.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_context_loop_value(num: i64, den: i64, out: *mut *mut TljContext) -> TljStatus {
    guard(|| {
        if den == 0 {
            return Err(TljError::InvalidParameters("zero denominator".into()).into());
        }
        let d = Scalar::from_rational(rat_frac(num, den));
        write_out(out, boxed(TljContext(Context::with_loop_value(d))), "out")
    })
}

/// # Safety
/// `c` must come from a context constructor or be null.
#[no_mangle]
pub unsafe extern "C" fn tlj_context_free(c: *mut TljContext) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Braid on `strands` strands; letter `±i` is `σ_i^{±1}`.
///
/// # Safety
/// `word` must point to `len` integers (may be null when `len` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_braid_new(
    strands: usize,
    word: *const i32,
    len: usize,
    out: *mut *mut TljBraid,
) -> TljStatus {
    guard(|| {
        let w = if len == 0 {
            Vec::new()
        } else {
            if word.is_null() {
                return Err(Failure::Null("word"));
            }
            std::slice::from_raw_parts(word, len).to_vec()
        };
        write_out(out, boxed(TljBraid(BraidWord::new(strands, w)?)), "out")
    })
}

/// # Safety
/// `b` must come from `tlj_braid_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn tlj_braid_free(b: *mut TljBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Kauffman bracket of the braid closure.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_bracket(
    ctx: *const TljContext,
    b: *const TljBraid,
    out: *mut *mut TljScalar,
) -> TljStatus {
    guard(|| {
        let v = bracket_closure(&as_ref(ctx, "ctx")?.0, &as_ref(b, "braid")?.0)?;
        write_out(out, boxed(TljScalar(v)), "out")
    })
}

/// Jones polynomial of the braid closure, in the variable `A`.
///
/// # Safety
/// Handles must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_jones(ctx: *const TljContext, b: *const TljBraid, out: *mut *mut TljScalar) -> TljStatus {
    guard(|| {
        let v = jones_polynomial(&as_ref(ctx, "ctx")?.0, &as_ref(b, "braid")?.0)?;
        write_out(out, boxed(TljScalar(v)), "out")
    })
}

/// Markov trace of the Jones-Wenzl projector `p_n`.
///
/// # Safety
/// `ctx` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_jw_trace(ctx: *const TljContext, n: usize, out: *mut *mut TljScalar) -> TljStatus {
    guard(|| {
        let c = &as_ref(ctx, "ctx")?.0;
        let p = jones_wenzl(c, n)?;
        let t = p.element.markov_trace(c.d())?;
        write_out(out, boxed(TljScalar(t)), "out")
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn tlj_scalar_free(s: *mut TljScalar) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Complex value; fails with `UNSUPPORTED` for a non-constant function of `A`.
///
/// # Safety
/// `s` must be valid; `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_scalar_approx(s: *const TljScalar, re: *mut f64, im: *mut f64) -> TljStatus {
    guard(|| {
        let c = as_ref(s, "scalar")?.0.to_c64().ok_or_else(|| TljError::Unsupported("value depends on A".into()))?;
        write_out(re, c.re, "re")?;
        write_out(im, c.im, "im")
    })
}

/// # Safety
/// `s` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_scalar_is_zero(s: *const TljScalar, out: *mut bool) -> TljStatus {
    guard(|| write_out(out, as_ref(s, "scalar")?.0.is_zero(), "out"))
}

/// Exact JSON form; release with `tlj_string_free`.
///
/// # Safety
/// `s` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_scalar_to_json(s: *const TljScalar, out: *mut *mut c_char) -> TljStatus {
    guard(|| {
        let text = scalar_to_json(&as_ref(s, "scalar")?.0).to_string();
        write_out(out, CString::new(text).expect("json has no nul").into_raw(), "out")
    })
}

/// Modular data at level `r`, root class `"4r"`, `"2r"` or `"r"`, embedding exponent `t`.
/// The `D` extension exists only for class `"4r"`.
///
/// # Safety
/// `class` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_modular_data_new(
    r: usize,
    class: *const c_char,
    t: i64,
    out: *mut *mut TljModularData,
) -> TljStatus {
    guard(|| {
        let class: RootClass = as_str(class, "class")?.parse()?;
        let md = build_modular_data(r, class, t)?;
        let ext = DExtension::new(&md)?;
        write_out(out, boxed(TljModularData { md, ext }), "out")
    })
}

/// # Safety
/// `m` must come from `tlj_modular_data_new` or be null.
#[no_mangle]
pub unsafe extern "C" fn tlj_modular_data_free(m: *mut TljModularData) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of labels, `r − 1`.
///
/// # Safety
/// `m` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_modular_rank(m: *const TljModularData, out: *mut usize) -> TljStatus {
    guard(|| write_out(out, as_ref(m, "modular data")?.md.rank(), "out"))
}

/// Entry `s̃_ij`.
///
/// # Safety
/// `m` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_modular_s_tilde(
    m: *const TljModularData,
    i: usize,
    j: usize,
    out: *mut *mut TljScalar,
) -> TljStatus {
    guard(|| {
        let md = &as_ref(m, "modular data")?.md;
        let v = md
            .s_tilde
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .ok_or_else(|| TljError::IndexOutOfRange(format!("({i}, {j}) at rank {}", md.rank())))?;
        write_out(out, boxed(TljScalar(v)), "out")
    })
}

/// Twist `θ_i`.
///
/// # Safety
/// `m` must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_modular_twist(m: *const TljModularData, i: usize, out: *mut *mut TljScalar) -> TljStatus {
    guard(|| {
        let md = &as_ref(m, "modular data")?.md;
        let v = md
            .twists
            .get(i)
            .cloned()
            .ok_or_else(|| TljError::IndexOutOfRange(format!("label {i} at rank {}", md.rank())))?;
        write_out(out, boxed(TljScalar(v)), "out")
    })
}

/// Verlinde dimension for genus `genus` with `n` puncture labels.
///
/// # Safety
/// `m` must be valid; `labels` must point to `n` values (may be null when `n` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_verlinde_dim(
    m: *const TljModularData,
    genus: usize,
    labels: *const usize,
    n: usize,
    out: *mut u64,
) -> TljStatus {
    guard(|| {
        let md = &as_ref(m, "modular data")?.md;
        let ls = if n == 0 {
            Vec::new()
        } else {
            if labels.is_null() {
                return Err(Failure::Null("labels"));
            }
            std::slice::from_raw_parts(labels, n).to_vec()
        };
        write_out(out, verlinde_dim(md, genus, &ls)?, "out")
    })
}

/// Surgery invariant of the 3-manifold presented by a link JSON document.
///
/// # Safety
/// `m` must be valid; `link_json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_rt_invariant(
    m: *const TljModularData,
    link_json: *const c_char,
    out: *mut *mut TljScalar,
) -> TljStatus {
    guard(|| {
        let h = as_ref(m, "modular data")?;
        let link = parse_link(as_str(link_json, "link_json")?)?;
        let s = SurgeryPresentation::new(link)?;
        let v = rt_invariant(&s, &h.md, &h.ext)?;
        write_out(out, boxed(TljScalar(v.z)), "out")
    })
}

/// Total number of annular irreducibles found at `level` (1 to 3); `plus` selects the loop value.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlj_annular_irrep_total(level: usize, plus: bool, out: *mut usize) -> TljStatus {
    guard(|| {
        let sign = if plus { LoopSign::Plus } else { LoopSign::Minus };
        let total = irrep_count_check(level)?.into_iter().find(|(s, _)| *s == sign).map(|(_, c)| c.total).unwrap_or(0);
        write_out(out, total, "out")
    })
}
