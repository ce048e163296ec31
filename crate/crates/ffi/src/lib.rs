//! C interface to braid words and braided Thompson group elements.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json`
//! or constructor functions and released with the matching `*_free`.
//! Every fallible call returns a [`BtStatus`]; on failure a message is
//! available from [`bt_last_error`] until the next failing call on the
//! same thread. Strings returned to the caller are freed with
//! [`bt_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use braided_thompson::braid::BraidWord;
use braided_thompson::charbnsr::{abelian_image, sigma_membership, Character};
use braided_thompson::diagram::{in_deferred_subgroup, GroupElement};
use braided_thompson::forest::Address;
use braided_thompson::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON or a value violating its schema.
    Parse = 3,
    /// Well-formed input outside an operation's domain.
    Domain = 4,
    Panic = 5,
}

/// A braid word on a fixed number of strands.
pub struct BtBraid(BraidWord);

/// An element of braided V, kept in reduced form.
pub struct BtElement(GroupElement);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: BtStatus, msg: impl Into<String>) -> BtStatus {
    set_error(msg);
    status
}

fn domain(e: Error) -> BtStatus {
    let status = match e {
        Error::Parse(_) | Error::InvalidAddress(_) | Error::InvalidTree(_) => BtStatus::Parse,
        _ => BtStatus::Domain,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into [`BtStatus::Panic`].
fn guard(f: impl FnOnce() -> BtStatus) -> BtStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(BtStatus::Panic, "internal panic"))
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, BtStatus> {
    if s.is_null() {
        return Err(fail(BtStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(BtStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, BtStatus> {
    p.as_ref()
        .ok_or_else(|| fail(BtStatus::NullPointer, "null handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> BtStatus {
    if out.is_null() {
        return fail(BtStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    BtStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> BtStatus {
    match CString::new(s) {
        Ok(c) => write_out(out, c.into_raw()),
        Err(_) => fail(BtStatus::Domain, "string contains NUL"),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// The message of the last failing call on this thread. The pointer stays
/// valid until the next failure on the same thread.
#[no_mangle]
pub extern "C" fn bt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `letters` must point to `len` readable values (or be null with `len = 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_braid_new(
    strands: usize,
    letters: *const i32,
    len: usize,
    out: *mut *mut BtBraid,
) -> BtStatus {
    guard(|| {
        let letters = if len == 0 {
            Vec::new()
        } else if letters.is_null() {
            return fail(BtStatus::NullPointer, "null letters");
        } else {
            std::slice::from_raw_parts(letters, len).to_vec()
        };
        let b = tri!(BraidWord::new(strands, letters).map_err(domain));
        write_out(out, Box::into_raw(Box::new(BtBraid(b))))
    })
}

/// Parses `{"strands": n, "letters": [...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_braid_from_json(
    json: *const c_char,
    out: *mut *mut BtBraid,
) -> BtStatus {
    guard(|| {
        let s = tri!(str_arg(json));
        let b: BraidWord =
            tri!(serde_json::from_str(s).map_err(|e| fail(BtStatus::Parse, e.to_string())));
        write_out(out, Box::into_raw(Box::new(BtBraid(b))))
    })
}

/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_braid_to_json(b: *const BtBraid, out: *mut *mut c_char) -> BtStatus {
    guard(|| {
        let b = tri!(handle(b));
        write_string(out, serde_json::to_string(&b.0).expect("braids serialize"))
    })
}

/// `a` followed by `b`, read bottom to top.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_braid_compose(
    a: *const BtBraid,
    b: *const BtBraid,
    out: *mut *mut BtBraid,
) -> BtStatus {
    guard(|| {
        let (a, b) = (tri!(handle(a)), tri!(handle(b)));
        let c = tri!(a.0.compose(&b.0).map_err(domain));
        write_out(out, Box::into_raw(Box::new(BtBraid(c))))
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_braid_equals(
    a: *const BtBraid,
    b: *const BtBraid,
    out: *mut bool,
) -> BtStatus {
    guard(|| {
        let (a, b) = (tri!(handle(a)), tri!(handle(b)));
        let eq = tri!(a.0.equals(&b.0).map_err(domain));
        write_out(out, eq)
    })
}

/// The winding number of strands `i < j` of a pure braid.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_braid_winding(
    b: *const BtBraid,
    i: usize,
    j: usize,
    out: *mut i64,
) -> BtStatus {
    guard(|| {
        let b = tri!(handle(b));
        let w = tri!(b.0.winding_number(i, j).map_err(domain));
        write_out(out, w)
    })
}

/// # Safety
/// `b` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bt_braid_free(b: *mut BtBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Parses `{"neg": Forest, "braid": Braid, "pos": Forest}` with single
/// trees and reduces it.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_element_from_json(
    json: *const c_char,
    out: *mut *mut BtElement,
) -> BtStatus {
    guard(|| {
        let s = tri!(str_arg(json));
        let d = tri!(serde_json::from_str(s).map_err(|e| fail(BtStatus::Parse, e.to_string())));
        let g = tri!(GroupElement::new(d).map_err(domain));
        write_out(out, Box::into_raw(Box::new(BtElement(g))))
    })
}

/// The generator `x_n` of F.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_element_x(n: usize, out: *mut *mut BtElement) -> BtStatus {
    guard(|| write_out(out, Box::into_raw(Box::new(BtElement(GroupElement::x(n))))))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_element_to_json(
    g: *const BtElement,
    out: *mut *mut c_char,
) -> BtStatus {
    guard(|| {
        let g = tri!(handle(g));
        write_string(
            out,
            serde_json::to_string(&g.0).expect("elements serialize"),
        )
    })
}

/// # Safety
/// `g` and `h` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_element_multiply(
    g: *const BtElement,
    h: *const BtElement,
    out: *mut *mut BtElement,
) -> BtStatus {
    guard(|| {
        let (g, h) = (tri!(handle(g)), tri!(handle(h)));
        write_out(out, Box::into_raw(Box::new(BtElement(g.0.multiply(&h.0)))))
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_element_invert(
    g: *const BtElement,
    out: *mut *mut BtElement,
) -> BtStatus {
    guard(|| {
        let g = tri!(handle(g));
        write_out(out, Box::into_raw(Box::new(BtElement(g.0.invert()))))
    })
}

/// # Safety
/// `g` and `h` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bt_element_equals(
    g: *const BtElement,
    h: *const BtElement,
    out: *mut bool,
) -> BtStatus {
    guard(|| {
        let (g, h) = (tri!(handle(g)), tri!(handle(h)));
        write_out(out, g.0.equals(&h.0))
    })
}

/// Membership in the subgroup of elements with `w`-deferred trees; `w` is
/// a string of `0`s and `1`s.
///
/// # Safety
/// `g` must be a live handle, `w` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bt_element_in_deferred(
    g: *const BtElement,
    w: *const c_char,
    out: *mut bool,
) -> BtStatus {
    guard(|| {
        let g = tri!(handle(g));
        let w: Address = tri!(tri!(str_arg(w)).parse().map_err(domain));
        let m = tri!(in_deferred_subgroup(&g.0, &w).map_err(domain));
        write_out(out, m)
    })
}

/// The abelian image `(φ₀, φ₁, ω₀, ω₁)` of a pure element.
///
/// # Safety
/// `g` must be a live handle; `out` must point to four writable values.
#[no_mangle]
pub unsafe extern "C" fn bt_element_abelian_image(g: *const BtElement, out: *mut i64) -> BtStatus {
    guard(|| {
        let g = tri!(handle(g));
        let img = tri!(abelian_image(&g.0).map_err(domain));
        if out.is_null() {
            return fail(BtStatus::NullPointer, "null output pointer");
        }
        ptr::copy_nonoverlapping(img.0.as_ptr(), out, 4);
        BtStatus::Ok
    })
}

/// # Safety
/// `g` must be null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bt_element_free(g: *mut BtElement) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Whether the class of `aφ₀ + bφ₁ + cω₀ + dω₁` lies in `Σ^m`; the
/// coefficients are rationals such as `"3/2"`.
///
/// # Safety
/// The coefficient pointers must be NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bt_sigma_membership(
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    d: *const c_char,
    m: u32,
    out: *mut bool,
) -> BtStatus {
    guard(|| {
        let chi = tri!(Character::parse(
            tri!(str_arg(a)),
            tri!(str_arg(b)),
            tri!(str_arg(c)),
            tri!(str_arg(d))
        )
        .map_err(domain));
        let member = tri!(sigma_membership(&chi, m).map_err(domain));
        write_out(out, member)
    })
}
