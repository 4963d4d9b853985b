//! C ABI over the `epicyclic` crate.
//!
//! Values cross the boundary as opaque handles created by `epi_*_new` or
//! returned through out-parameters, and must be released with the matching
//! `epi_*_free`. Every fallible call returns an [`EpiStatus`]; on failure the
//! message is available from [`epi_last_error_message`] on the same thread.
//! Strings returned to the caller are freed with [`epi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use epicyclic::arc::{self, ArcMorphism};
use epicyclic::hyper::{self, SignedElem};
use epicyclic::permgeom::{self, SetMapFin};
use epicyclic::{dualtrans, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpiStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvariantViolation = 3,
    PeriodMismatch = 4,
    EqmodMismatch = 5,
    UnsupportedDegree = 6,
    BoundExceeded = 7,
    Parse = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// Canonical morphism of `Arc ⋉ N` or `Arc_a`.
pub struct EpiMorphism(ArcMorphism);

/// Map of finite sets `{0..p-1} -> {0..q-1}`.
pub struct EpiSetMap(SetMapFin);

struct LastError {
    message: CString,
    invariant: Option<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<LastError>> = const { RefCell::new(None) };
}

fn set_error(status: EpiStatus, message: String, invariant: Option<&str>) -> EpiStatus {
    let clean = |s: &str| CString::new(s.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = Some(LastError {
            message: clean(&message),
            invariant: invariant.map(clean),
        })
    });
    status
}

fn status_of(err: &Error) -> EpiStatus {
    match err {
        Error::InvalidArgument { .. } => EpiStatus::InvalidArgument,
        Error::Invariant { .. } => EpiStatus::InvariantViolation,
        Error::PeriodMismatch { .. } => EpiStatus::PeriodMismatch,
        Error::EqmodMismatch { .. } => EpiStatus::EqmodMismatch,
        Error::UnsupportedDegree { .. } => EpiStatus::UnsupportedDegree,
        Error::BoundExceeded { .. } => EpiStatus::BoundExceeded,
    }
}

enum Fail {
    Lib(Error),
    Other(EpiStatus, String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn null(what: &str) -> Fail {
    Fail::Other(EpiStatus::NullPointer, format!("`{what}` is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> EpiStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            EpiStatus::Ok
        }
        Ok(Err(Fail::Lib(e))) => set_error(status_of(&e), e.to_string(), e.invariant_name()),
        Ok(Err(Fail::Other(status, msg))) => set_error(status, msg, None),
        Err(_) => set_error(EpiStatus::Panic, "internal panic".into(), None),
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

/// Writes `vals` into `buf`; `*len` always receives the full length.
unsafe fn copy_out(vals: &[i64], buf: *mut i64, cap: usize, len: *mut usize) -> Result<(), Fail> {
    put(len, vals.len(), "len")?;
    if vals.len() > cap {
        return Err(Fail::Other(
            EpiStatus::BufferTooSmall,
            format!("need {} slots, buffer holds {cap}", vals.len()),
        ));
    }
    if !vals.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(vals.as_ptr(), buf, vals.len());
    }
    Ok(())
}

unsafe fn json_in<T: serde::de::DeserializeOwned>(json: *const c_char) -> Result<T, Fail> {
    if json.is_null() {
        return Err(null("json"));
    }
    let text = CStr::from_ptr(json)
        .to_str()
        .map_err(|e| Fail::Other(EpiStatus::Parse, e.to_string()))?;
    serde_json::from_str(text).map_err(|e| Fail::Other(EpiStatus::Parse, e.to_string()))
}

unsafe fn json_out<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> Result<(), Fail> {
    let s = serde_json::to_string(value).expect("plain data serializes");
    put(out, CString::new(s).expect("JSON has no nul bytes").into_raw(), "out")
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn epi_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |e| e.message.as_ptr()))
}

/// Name of the violated invariant for `EPI_STATUS_INVARIANT_VIOLATION`, or null.
#[no_mangle]
pub extern "C" fn epi_last_error_invariant() -> *const c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .and_then(|e| e.invariant.as_ref())
            .map_or(ptr::null(), |s| s.as_ptr())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn epi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonicalizes raw values `vals[0..len]` into a morphism `hat src -> hat dst`.
///
/// # Safety
/// `vals` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_new(
    src: i64,
    dst: i64,
    deg: i64,
    vals: *const i64,
    len: usize,
    eqmod: i64,
    out: *mut *mut EpiMorphism,
) -> EpiStatus {
    guard(|| {
        let vals = slice(vals, len, "vals")?;
        let f = arc::normalize(src, dst, deg, vals, eqmod)?;
        put(out, boxed(EpiMorphism(f)), "out")
    })
}

/// Parses `{"src","dst","deg","vals"[,"eqmod"]}` and canonicalizes it.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_from_json(json: *const c_char, out: *mut *mut EpiMorphism) -> EpiStatus {
    guard(|| {
        #[derive(serde::Deserialize)]
        struct Wire {
            src: i64,
            dst: i64,
            deg: i64,
            vals: Vec<i64>,
            #[serde(default = "one")]
            eqmod: i64,
        }
        fn one() -> i64 {
            1
        }
        let w: Wire = json_in(json)?;
        let f = arc::normalize(w.src, w.dst, w.deg, &w.vals, w.eqmod)?;
        put(out, boxed(EpiMorphism(f)), "out")
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable. Free the result with
/// [`epi_string_free`].
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_to_json(m: *const EpiMorphism, out: *mut *mut c_char) -> EpiStatus {
    guard(|| json_out(&deref(m, "m")?.0, out))
}

/// # Safety
/// `m` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_free(m: *mut EpiMorphism) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_clone(m: *const EpiMorphism, out: *mut *mut EpiMorphism) -> EpiStatus {
    guard(|| {
        let f = deref(m, "m")?.0.clone();
        put(out, boxed(EpiMorphism(f)), "out")
    })
}

/// Source period, degree etc. of a live handle; `-1` for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_src(m: *const EpiMorphism) -> i64 {
    m.as_ref().map_or(-1, |m| m.0.src())
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_dst(m: *const EpiMorphism) -> i64 {
    m.as_ref().map_or(-1, |m| m.0.dst())
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_deg(m: *const EpiMorphism) -> i64 {
    m.as_ref().map_or(-1, |m| m.0.deg())
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_eqmod(m: *const EpiMorphism) -> i64 {
    m.as_ref().map_or(-1, |m| m.0.eqmod())
}

/// Copies the canonical values into `buf`. `*len` receives the number of
/// values even when the buffer is too small.
///
/// # Safety
/// `m` must be a live handle, `buf` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_vals(m: *const EpiMorphism, buf: *mut i64, cap: usize, len: *mut usize) -> EpiStatus {
    guard(|| copy_out(deref(m, "m")?.0.vals(), buf, cap, len))
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_eval(m: *const EpiMorphism, x: i64, out: *mut i64) -> EpiStatus {
    guard(|| put(out, deref(m, "m")?.0.eval(x), "out"))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_morphism_equal(a: *const EpiMorphism, b: *const EpiMorphism, out: *mut bool) -> EpiStatus {
    guard(|| put(out, deref(a, "a")?.0 == deref(b, "b")?.0, "out"))
}

/// `g ∘ f`.
///
/// # Safety
/// `g`, `f` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_compose(g: *const EpiMorphism, f: *const EpiMorphism, out: *mut *mut EpiMorphism) -> EpiStatus {
    guard(|| {
        let h = arc::compose(&deref(g, "g")?.0, &deref(f, "f")?.0)?;
        put(out, boxed(EpiMorphism(h)), "out")
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_transpose(f: *const EpiMorphism, out: *mut *mut EpiMorphism) -> EpiStatus {
    guard(|| {
        let t = dualtrans::transpose(&deref(f, "f")?.0)?;
        put(out, boxed(EpiMorphism(t)), "out")
    })
}

/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_star_transpose(f: *const EpiMorphism, out: *mut *mut EpiMorphism) -> EpiStatus {
    guard(|| {
        let t = dualtrans::star_transpose(&deref(f, "f")?.0)?;
        put(out, boxed(EpiMorphism(t)), "out")
    })
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpiGenerator {
    /// `identity(n)`; `j` is ignored.
    Identity = 0,
    /// `x -> x - 1` on period `n`; `j` is ignored.
    Tau = 1,
    /// Face `hat n -> hat (n+1)` missing `j`.
    Delta = 2,
    /// Degeneracy `hat (n+1) -> hat n` repeating `j`.
    Sigma = 3,
    /// `pi^j : hat (j n) -> hat n`.
    Pi = 4,
}

/// Generator of `Arc_eqmod` (`Pi` only for `eqmod = 1`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_generator(
    kind: EpiGenerator,
    n: i64,
    j: i64,
    eqmod: i64,
    out: *mut *mut EpiMorphism,
) -> EpiStatus {
    guard(|| {
        let f = match kind {
            EpiGenerator::Identity => arc::identity(n, eqmod)?,
            EpiGenerator::Tau => arc::tau(n, eqmod)?,
            EpiGenerator::Delta => arc::delta(n, j, eqmod)?,
            EpiGenerator::Sigma => arc::sigma(n, j, eqmod)?,
            EpiGenerator::Pi if eqmod == 1 => arc::pi(n, j)?,
            EpiGenerator::Pi => {
                return Err(Fail::Other(
                    EpiStatus::InvalidArgument,
                    format!("pi^k is not a morphism of Arc_{eqmod}"),
                ))
            }
        };
        put(out, boxed(EpiMorphism(f)), "out")
    })
}

/// # Safety
/// `table` must point to `len == src` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_set_map_new(
    src: i64,
    dst: i64,
    table: *const i64,
    len: usize,
    out: *mut *mut EpiSetMap,
) -> EpiStatus {
    guard(|| {
        let t = slice(table, len, "table")?.to_vec();
        put(out, boxed(EpiSetMap(SetMapFin::new(src, dst, t)?)), "out")
    })
}

/// # Safety
/// `s` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn epi_set_map_free(s: *mut EpiSetMap) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle, `buf` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn epi_set_map_table(s: *const EpiSetMap, buf: *mut i64, cap: usize, len: *mut usize) -> EpiStatus {
    guard(|| copy_out(deref(s, "s")?.0.table(), buf, cap, len))
}

/// Minimal-degree lift of a set map.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_lift(s: *const EpiSetMap, out: *mut *mut EpiMorphism) -> EpiStatus {
    guard(|| {
        let f = permgeom::lift(&deref(s, "s")?.0);
        put(out, boxed(EpiMorphism(f)), "out")
    })
}

/// Cyclic descent number.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_cdesc(s: *const EpiSetMap, out: *mut i64) -> EpiStatus {
    guard(|| put(out, permgeom::cdesc(&deref(s, "s")?.0), "out"))
}

/// Induced map on residues.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_project(f: *const EpiMorphism, out: *mut *mut EpiSetMap) -> EpiStatus {
    guard(|| {
        let s = permgeom::project(&deref(f, "f")?.0)?;
        put(out, boxed(EpiSetMap(s)), "out")
    })
}

/// The hyper-sum `x ⌣ y` in the signed chain of rank `n`, as signed integers
/// in increasing order.
///
/// # Safety
/// `buf` must hold `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn epi_hyper_add(x: i64, y: i64, n: i64, buf: *mut i64, cap: usize, len: *mut usize) -> EpiStatus {
    guard(|| {
        let sum = hyper::hyper_add(SignedElem::from_signed(x), SignedElem::from_signed(y), n)?;
        let vals: Vec<i64> = sum.iter().map(|e| e.value()).collect();
        copy_out(&vals, buf, cap, len)
    })
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn epi_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
