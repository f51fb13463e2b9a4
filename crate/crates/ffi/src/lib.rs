//! C ABI over the `fga` library.
//!
//! Every object is an opaque heap handle released by its `_free` function.
//! Fallible calls return an [`FgaStatus`] and write results through out
//! pointers; on failure [`fga_last_error_message`] describes the error.
//! Strings returned to the caller are released with [`fga_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use fga::duality::{algebraic_closure, is_algebraic, is_free_factor, q_dual};
use fga::groups::{group_algebraic_closure, word_is_primitive, Subgroup};
use fga::intersection::module_intersection;
use fga::module::{
    module_basis, module_contains, module_equal, module_membership, module_rank, Submodule,
};
use fga::parse::{
    parse_element, parse_matrix, parse_module, parse_subgroup, parse_vector, parse_word,
};
use fga::wordmeasure::phi_exact;
use fga::{AlgebraElement, Error, Field};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidField = 4,
    Mismatch = 5,
    NotMember = 6,
    NotContained = 7,
    ZeroOperand = 8,
    BudgetExceeded = 9,
    Unsupported = 10,
    InvalidArgument = 11,
    Panic = 12,
}

/// An element of K[F].
pub struct FgaElement(AlgebraElement);

/// A finitely generated right submodule of K[F]^k.
pub struct FgaModule(Submodule);

/// A finitely generated subgroup of F.
pub struct FgaSubgroup(Subgroup);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FgaStatus {
    match e {
        Error::Parse { .. } | Error::InvalidWord(_) => FgaStatus::Parse,
        Error::InvalidField(_) | Error::NotFiniteField => FgaStatus::InvalidField,
        Error::FieldMismatch(..) | Error::RankMismatch(..) | Error::DimensionMismatch(_) => {
            FgaStatus::Mismatch
        }
        Error::NotMember(_) => FgaStatus::NotMember,
        Error::NotContained(_) => FgaStatus::NotContained,
        Error::ZeroElement | Error::ZeroModule | Error::DivisionByZero => FgaStatus::ZeroOperand,
        Error::BudgetExceeded { .. } | Error::CompletionCap(_) => FgaStatus::BudgetExceeded,
        Error::RankOneFreeGroup | Error::NonBinomial(_) | Error::NotUnit(_) => {
            FgaStatus::Unsupported
        }
        Error::InvalidArgument(_) => FgaStatus::InvalidArgument,
    }
}

struct Fail(FgaStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> FgaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FgaStatus::Ok
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            FgaStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(FgaStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(FgaStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    put(out, Box::into_raw(Box::new(v)))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(FgaStatus::InvalidArgument, "interior NUL".into()))?;
    put(out, c.into_raw())
}

unsafe fn field(spec: *const c_char) -> Result<Field, Fail> {
    Ok(Field::parse(text(spec)?)?)
}

/// Message of the last failed call on this thread, empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn fga_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fga_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an element of K[F] over `field` ("gf:<p>" or "q").
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fga_element_parse(
    src: *const c_char,
    field_spec: *const c_char,
    rank: usize,
    out: *mut *mut FgaElement,
) -> FgaStatus {
    guard(|| {
        let e = parse_element(text(src)?, field(field_spec)?, rank)?;
        put_box(out, FgaElement(e))
    })
}

/// Canonical text of an element.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fga_element_to_string(
    e: *const FgaElement,
    out: *mut *mut c_char,
) -> FgaStatus {
    guard(|| put_string(out, get(e)?.0.to_string()))
}

/// # Safety
/// `e` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fga_element_free(e: *mut FgaElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Parses a submodule of K[F]^k; generators are separated by `;`.
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_parse(
    src: *const c_char,
    field_spec: *const c_char,
    rank: usize,
    k: usize,
    out: *mut *mut FgaModule,
) -> FgaStatus {
    guard(|| {
        let m = parse_module(text(src)?, field(field_spec)?, rank, k)?;
        put_box(out, FgaModule(m))
    })
}

/// The right ideal generated by one element.
///
/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_from_element(
    e: *const FgaElement,
    out: *mut *mut FgaModule,
) -> FgaStatus {
    guard(|| {
        let e = &get(e)?.0;
        let m = Submodule::ideal(e.field(), e.rank(), vec![e.clone()])?;
        put_box(out, FgaModule(m))
    })
}

/// # Safety
/// `m` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fga_module_free(m: *mut FgaModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Canonical basis, one generator per line.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_basis_string(
    m: *const FgaModule,
    out: *mut *mut c_char,
) -> FgaStatus {
    guard(|| {
        let lines: Vec<String> = module_basis(&get(m)?.0)?
            .iter()
            .map(ToString::to_string)
            .collect();
        put_string(out, lines.join("\n"))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_rank(m: *const FgaModule, out: *mut usize) -> FgaStatus {
    guard(|| put(out, module_rank(&get(m)?.0)?))
}

/// Whether the vector `src` lies in `m`.
///
/// # Safety
/// `m` must be a live handle; `src` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_member(
    m: *const FgaModule,
    src: *const c_char,
    out: *mut bool,
) -> FgaStatus {
    guard(|| {
        let m = &get(m)?.0;
        let f = parse_vector(text(src)?, m.field(), m.free_rank(), m.ambient_k())?;
        put(out, module_membership(m, &f)?)
    })
}

/// Whether `sub` is contained in `sup`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_contains(
    sup: *const FgaModule,
    sub: *const FgaModule,
    out: *mut bool,
) -> FgaStatus {
    guard(|| put(out, module_contains(&get(sup)?.0, &get(sub)?.0)?))
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_equal(
    a: *const FgaModule,
    b: *const FgaModule,
    out: *mut bool,
) -> FgaStatus {
    guard(|| put(out, module_equal(&get(a)?.0, &get(b)?.0)?))
}

/// Algebraic closure of `m` in `n`.
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_closure(
    m: *const FgaModule,
    n: *const FgaModule,
    out: *mut *mut FgaModule,
) -> FgaStatus {
    guard(|| put_box(out, FgaModule(algebraic_closure(&get(m)?.0, &get(n)?.0)?)))
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_is_free_factor(
    m: *const FgaModule,
    n: *const FgaModule,
    out: *mut bool,
) -> FgaStatus {
    guard(|| put(out, is_free_factor(&get(m)?.0, &get(n)?.0)?))
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_is_algebraic(
    m: *const FgaModule,
    n: *const FgaModule,
    out: *mut bool,
) -> FgaStatus {
    guard(|| put(out, is_algebraic(&get(m)?.0, &get(n)?.0)?))
}

/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_intersection(
    m: *const FgaModule,
    n: *const FgaModule,
    out: *mut *mut FgaModule,
) -> FgaStatus {
    guard(|| put_box(out, FgaModule(module_intersection(&get(m)?.0, &get(n)?.0)?)))
}

/// ι-image of the dual of `m` with respect to the matrix `q_src`
/// (rows separated by `;`, entries by `,`).
///
/// # Safety
/// `m` must be a live handle; `q_src` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_module_q_dual(
    q_src: *const c_char,
    m: *const FgaModule,
    out: *mut *mut FgaModule,
) -> FgaStatus {
    guard(|| {
        let m = &get(m)?.0;
        let q = parse_matrix(text(q_src)?, m.field(), m.free_rank())?;
        put_box(out, FgaModule(q_dual(&q, m)?))
    })
}

/// Word measure φ_{I,J}(N) as the string "a/b".
///
/// # Safety
/// Handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_phi_exact(
    i: *const FgaModule,
    j: *const FgaModule,
    n: usize,
    budget: u64,
    out: *mut *mut c_char,
) -> FgaStatus {
    guard(|| {
        let v = phi_exact(&get(i)?.0, &get(j)?.0, n, budget as u128)?;
        put_string(out, format!("{}/{}", v.numer(), v.denom()))
    })
}

/// Parses a subgroup of F from words separated by `,` or `;`.
///
/// # Safety
/// `src` NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_subgroup_parse(
    src: *const c_char,
    rank: usize,
    out: *mut *mut FgaSubgroup,
) -> FgaStatus {
    guard(|| put_box(out, FgaSubgroup(parse_subgroup(text(src)?, rank)?)))
}

/// The whole free group of the given rank.
///
/// # Safety
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_subgroup_whole(rank: usize, out: *mut *mut FgaSubgroup) -> FgaStatus {
    guard(|| {
        if rank == 0 || rank > fga::algebra::MAX_RANK {
            return Err(Fail(
                FgaStatus::InvalidArgument,
                format!("unsupported rank {rank}"),
            ));
        }
        put_box(out, FgaSubgroup(Subgroup::whole(rank)))
    })
}

/// # Safety
/// `h` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn fga_subgroup_free(h: *mut FgaSubgroup) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Text of a subgroup as `<g1, g2>`.
///
/// # Safety
/// `h` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_subgroup_to_string(
    h: *const FgaSubgroup,
    out: *mut *mut c_char,
) -> FgaStatus {
    guard(|| put_string(out, get(h)?.0.to_string()))
}

/// Algebraic closure of `h` in `k`.
///
/// # Safety
/// Handles live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_group_closure(
    h: *const FgaSubgroup,
    k: *const FgaSubgroup,
    out: *mut *mut FgaSubgroup,
) -> FgaStatus {
    guard(|| {
        put_box(
            out,
            FgaSubgroup(group_algebraic_closure(&get(h)?.0, &get(k)?.0)?),
        )
    })
}

/// Whether the word `w` is primitive in `k`.
///
/// # Safety
/// `w` NUL-terminated; `k` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fga_word_is_primitive(
    w: *const c_char,
    k: *const FgaSubgroup,
    out: *mut bool,
) -> FgaStatus {
    guard(|| {
        let k = &get(k)?.0;
        put(
            out,
            word_is_primitive(&parse_word(text(w)?, k.free_rank())?, k)?,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn element_round_trip() {
        unsafe {
            let mut e = ptr::null_mut();
            let st = fga_element_parse(c("(x-1)*(x^2+x+1)").as_ptr(), c("q").as_ptr(), 2, &mut e);
            assert_eq!(st, FgaStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(fga_element_to_string(e, &mut s), FgaStatus::Ok);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "x^3 - 1");
            fga_string_free(s);
            fga_element_free(e);
        }
    }

    #[test]
    fn errors_set_message() {
        unsafe {
            let mut e = ptr::null_mut();
            let st = fga_element_parse(c("x +").as_ptr(), c("q").as_ptr(), 2, &mut e);
            assert_eq!(st, FgaStatus::Parse);
            assert!(e.is_null());
            let msg = CStr::from_ptr(fga_last_error_message()).to_str().unwrap();
            assert!(msg.contains("parse error"), "{msg}");
            assert_eq!(
                fga_element_parse(ptr::null(), c("q").as_ptr(), 2, &mut e),
                FgaStatus::NullPointer
            );
            assert_eq!(
                fga_element_parse(c("x").as_ptr(), c("gf:4").as_ptr(), 2, &mut e),
                FgaStatus::InvalidField
            );
        }
    }
}
