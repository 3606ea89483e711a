//! C ABI for the demchar library: opaque measure handles, status codes and
//! string-valued results (exact integers as decimal strings, rationals as
//! `p/q`). The committed header lives at `include/demchar.h`; regenerate it
//! with cbindgen when this surface changes.
//!
//! Every returned `char*` is owned by the caller and must be released with
//! `demchar_string_free`; every measure handle with `demchar_measure_free`.

use std::ffi::{c_char, CStr, CString};

use demchar::demazure::{apply_word, SignedMeasure};
use demchar::formulas::{self, Family};
use demchar::stats::{self, Functional, StatsError};
use demchar::verify::{self, GridBounds};
use demchar::weyl::WeylWord;
use demchar::HighestWeight;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DemcharStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ZeroMass = 3,
    EmptyMeasure = 4,
    ParseError = 5,
    VerifyFailed = 6,
}

impl From<StatsError> for DemcharStatus {
    fn from(e: StatsError) -> Self {
        match e {
            StatsError::ZeroMass => DemcharStatus::ZeroMass,
            StatsError::EmptyMeasure => DemcharStatus::EmptyMeasure,
        }
    }
}

/// Opaque weight distribution handle: the measure plus the word that
/// produced it.
pub struct DemcharMeasure {
    mu: SignedMeasure,
    word: WeylWord,
}

fn family_from_code(code: u32) -> Option<Family> {
    match code {
        0 => Some(Family::Std0),
        1 => Some(Family::Std1),
        2 => Some(Family::Ext0),
        3 => Some(Family::Ext1),
        _ => None,
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> DemcharStatus {
    if out.is_null() {
        return DemcharStatus::NullPointer;
    }
    unsafe { *out = into_c_string(s) };
    DemcharStatus::Ok
}

unsafe fn measure_ref<'a>(mu: *const DemcharMeasure) -> Option<&'a DemcharMeasure> {
    unsafe { mu.as_ref() }
}

/// Computes the weight distribution of a family word.
///
/// `family` is 0 for std0, 1 for std1, 2 for ext0, 3 for ext1.
///
/// # Safety
/// `out` must be a valid pointer to a measure-handle slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_family(
    m: u32,
    n: u32,
    len: u32,
    family: u32,
    out: *mut *mut DemcharMeasure,
) -> DemcharStatus {
    if out.is_null() {
        return DemcharStatus::NullPointer;
    }
    let Some(family) = family_from_code(family) else {
        return DemcharStatus::InvalidArgument;
    };
    let word = family.key(m, n, len).word();
    let mu = apply_word(&word, HighestWeight::new(m, n));
    unsafe { *out = Box::into_raw(Box::new(DemcharMeasure { mu, word })) };
    DemcharStatus::Ok
}

/// Computes the weight distribution of an arbitrary word given as
/// whitespace-separated `s0`/`s1`/`sigma` tokens, leftmost first.
///
/// # Safety
/// `word` must be a valid NUL-terminated string and `out` a valid pointer
/// to a measure-handle slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_from_word(
    m: u32,
    n: u32,
    word: *const c_char,
    out: *mut *mut DemcharMeasure,
) -> DemcharStatus {
    if word.is_null() || out.is_null() {
        return DemcharStatus::NullPointer;
    }
    let Ok(text) = unsafe { CStr::from_ptr(word) }.to_str() else {
        return DemcharStatus::ParseError;
    };
    let Ok(word) = text.parse::<WeylWord>() else {
        return DemcharStatus::ParseError;
    };
    let mu = apply_word(&word, HighestWeight::new(m, n));
    unsafe { *out = Box::into_raw(Box::new(DemcharMeasure { mu, word })) };
    DemcharStatus::Ok
}

/// Releases a measure handle. A null handle is a no-op.
///
/// # Safety
/// `mu` must be null or a handle previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_free(mu: *mut DemcharMeasure) {
    if !mu.is_null() {
        drop(unsafe { Box::from_raw(mu) });
    }
}

/// Number of support points; 0 for a null handle.
///
/// # Safety
/// `mu` must be null or a live measure handle.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_entry_count(mu: *const DemcharMeasure) -> usize {
    unsafe { measure_ref(mu) }.map_or(0, |h| h.mu.len())
}

/// Reads the entry at `index` (lexicographic `(a, b)` order) into `a`, `b`
/// and `mult` (decimal string, caller-owned).
///
/// # Safety
/// `mu` must be a live measure handle; `a`, `b` and `mult` must be valid
/// pointers.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_entry(
    mu: *const DemcharMeasure,
    index: usize,
    a: *mut i64,
    b: *mut i64,
    mult: *mut *mut c_char,
) -> DemcharStatus {
    let Some(handle) = (unsafe { measure_ref(mu) }) else {
        return DemcharStatus::NullPointer;
    };
    if a.is_null() || b.is_null() || mult.is_null() {
        return DemcharStatus::NullPointer;
    }
    let Some((coord, p)) = handle.mu.iter().nth(index) else {
        return DemcharStatus::InvalidArgument;
    };
    unsafe {
        *a = coord.a;
        *b = coord.b;
        *mult = into_c_string(p.to_string());
    }
    DemcharStatus::Ok
}

/// Total mass as a decimal string.
///
/// # Safety
/// `mu` must be a live measure handle and `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_mass(
    mu: *const DemcharMeasure,
    out: *mut *mut c_char,
) -> DemcharStatus {
    let Some(handle) = (unsafe { measure_ref(mu) }) else {
        return DemcharStatus::NullPointer;
    };
    unsafe { write_string(out, stats::total_mass(&handle.mu).to_string()) }
}

/// Exact expected degree of the measure as a `p/q` string.
///
/// # Safety
/// `mu` must be a live measure handle and `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_expected_degree(
    mu: *const DemcharMeasure,
    out: *mut *mut c_char,
) -> DemcharStatus {
    let Some(handle) = (unsafe { measure_ref(mu) }) else {
        return DemcharStatus::NullPointer;
    };
    match stats::expectation(&handle.mu, Functional::Degree) {
        Ok(v) => unsafe { write_string(out, v.to_string()) },
        Err(e) => e.into(),
    }
}

/// Exact variance of the finite-weight deviation as a `p/q` string.
///
/// # Safety
/// `mu` must be a live measure handle and `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_variance_finite(
    mu: *const DemcharMeasure,
    out: *mut *mut c_char,
) -> DemcharStatus {
    let Some(handle) = (unsafe { measure_ref(mu) }) else {
        return DemcharStatus::NullPointer;
    };
    match stats::variance(&handle.mu, Functional::FiniteDev) {
        Ok(v) => unsafe { write_string(out, v.to_string()) },
        Err(e) => e.into(),
    }
}

/// Maximum degree over the support.
///
/// # Safety
/// `mu` must be a live measure handle and `out` a valid i64 slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_max_degree(
    mu: *const DemcharMeasure,
    out: *mut i64,
) -> DemcharStatus {
    let Some(handle) = (unsafe { measure_ref(mu) }) else {
        return DemcharStatus::NullPointer;
    };
    if out.is_null() {
        return DemcharStatus::NullPointer;
    }
    match stats::max_degree(&handle.mu) {
        Ok(v) => {
            unsafe { *out = v };
            DemcharStatus::Ok
        }
        Err(e) => e.into(),
    }
}

/// The measure in the JSON schema
/// `{"m", "n", "word", "entries": [{"a", "b", "mult"}]}`.
///
/// # Safety
/// `mu` must be a live measure handle and `out` a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_measure_to_json(
    mu: *const DemcharMeasure,
    out: *mut *mut c_char,
) -> DemcharStatus {
    let Some(handle) = (unsafe { measure_ref(mu) }) else {
        return DemcharStatus::NullPointer;
    };
    unsafe {
        write_string(
            out,
            demchar::serialize::measure_to_json(&handle.mu, &handle.word),
        )
    }
}

/// Closed-form dimension of a family module as a decimal string.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_dimension(
    m: u32,
    n: u32,
    len: u32,
    family: u32,
    out: *mut *mut c_char,
) -> DemcharStatus {
    let Some(family) = family_from_code(family) else {
        return DemcharStatus::InvalidArgument;
    };
    unsafe { write_string(out, formulas::dimension(&family.key(m, n, len)).to_string()) }
}

/// Closed-form expected degree of a family module as a `p/q` string.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_expected_degree(
    m: u32,
    n: u32,
    len: u32,
    family: u32,
    out: *mut *mut c_char,
) -> DemcharStatus {
    let Some(family) = family_from_code(family) else {
        return DemcharStatus::InvalidArgument;
    };
    unsafe {
        write_string(
            out,
            formulas::expected_degree(&family.key(m, n, len)).to_string(),
        )
    }
}

/// Closed-form finite-weight variance of a family module as a `p/q` string.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_variance_finite(
    m: u32,
    n: u32,
    len: u32,
    family: u32,
    out: *mut *mut c_char,
) -> DemcharStatus {
    let Some(family) = family_from_code(family) else {
        return DemcharStatus::InvalidArgument;
    };
    unsafe {
        write_string(
            out,
            formulas::variance_finite(&family.key(m, n, len)).to_string(),
        )
    }
}

/// Closed-form maximal degree of a family module.
///
/// # Safety
/// `out` must be a valid i64 slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_max_degree(
    m: u32,
    n: u32,
    len: u32,
    family: u32,
    out: *mut i64,
) -> DemcharStatus {
    let Some(family) = family_from_code(family) else {
        return DemcharStatus::InvalidArgument;
    };
    if out.is_null() {
        return DemcharStatus::NullPointer;
    }
    unsafe { *out = formulas::max_degree_closed(&family.key(m, n, len)) };
    DemcharStatus::Ok
}

/// Limit of expected over maximal degree for long words, as a `p/q` string.
///
/// # Safety
/// `out` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_limit_ratio_len(
    m: u32,
    n: u32,
    out: *mut *mut c_char,
) -> DemcharStatus {
    unsafe { write_string(out, formulas::limit_ratio_len(m, n).to_string()) }
}

/// Runs the verification suite over the grid `m<=m_max, n<=n_max, N<=len_max`
/// and stores the report text. Returns `Ok` when every check passes and
/// `VerifyFailed` otherwise; the report is written in both cases.
///
/// # Safety
/// `report` must be a valid string slot.
#[no_mangle]
pub unsafe extern "C" fn demchar_verify(
    m_max: u32,
    n_max: u32,
    len_max: u32,
    threads: u32,
    report: *mut *mut c_char,
) -> DemcharStatus {
    if report.is_null() {
        return DemcharStatus::NullPointer;
    }
    let opts = verify::Options {
        threads: threads.max(1) as usize,
        corrupt: None,
    };
    let outcome = verify::run(&GridBounds::new(m_max, n_max, len_max), &opts);
    let status = if outcome.passed() {
        DemcharStatus::Ok
    } else {
        DemcharStatus::VerifyFailed
    };
    unsafe { *report = into_c_string(outcome.render()) };
    status
}

/// Releases a string returned by this library. A null pointer is a no-op.
///
/// # Safety
/// `s` must be null or a string previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn demchar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
