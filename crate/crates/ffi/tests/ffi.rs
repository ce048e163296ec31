use std::ffi::{c_char, CStr, CString};
use std::ptr;

use braided_thompson_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    bt_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(bt_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn braid_round_trip_and_winding() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(
            bt_braid_from_json(c(r#"{"strands":3,"letters":[1,1]}"#).as_ptr(), &mut b),
            BtStatus::Ok
        );
        let mut json = ptr::null_mut();
        assert_eq!(bt_braid_to_json(b, &mut json), BtStatus::Ok);
        assert_eq!(take_string(json), r#"{"strands":3,"letters":[1,1]}"#);
        let mut w = 0;
        assert_eq!(bt_braid_winding(b, 1, 2, &mut w), BtStatus::Ok);
        assert_eq!(w, 1);
        assert_eq!(bt_braid_winding(b, 1, 3, &mut w), BtStatus::Ok);
        assert_eq!(w, 0);
        bt_braid_free(b);
    }
}

#[test]
fn braid_relations() {
    unsafe {
        let (mut a, mut b, mut ab, mut ba) = (
            ptr::null_mut(),
            ptr::null_mut(),
            ptr::null_mut(),
            ptr::null_mut(),
        );
        assert_eq!(bt_braid_new(3, [1, 2, 1].as_ptr(), 3, &mut a), BtStatus::Ok);
        assert_eq!(bt_braid_new(3, [2, 1, 2].as_ptr(), 3, &mut b), BtStatus::Ok);
        let mut eq = false;
        assert_eq!(bt_braid_equals(a, b, &mut eq), BtStatus::Ok);
        assert!(eq);
        assert_eq!(bt_braid_compose(a, b, &mut ab), BtStatus::Ok);
        assert_eq!(bt_braid_compose(b, a, &mut ba), BtStatus::Ok);
        assert_eq!(bt_braid_equals(ab, ba, &mut eq), BtStatus::Ok);
        assert!(eq);
        for p in [a, b, ab, ba] {
            bt_braid_free(p);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(bt_braid_new(3, [3].as_ptr(), 1, &mut b), BtStatus::Domain);
        assert!(last_error().contains("out of range"));
        assert_eq!(bt_braid_from_json(c("{").as_ptr(), &mut b), BtStatus::Parse);
        assert_eq!(
            bt_braid_from_json(ptr::null(), &mut b),
            BtStatus::NullPointer
        );
        assert!(b.is_null());

        let mut g = ptr::null_mut();
        assert_eq!(bt_element_x(0, &mut g), BtStatus::Ok);
        let mut m = false;
        assert_eq!(
            bt_element_in_deferred(g, c("02").as_ptr(), &mut m),
            BtStatus::Parse
        );
        assert!(last_error().contains("02"));
        bt_element_free(g);

        let zero = c("0");
        assert_eq!(
            bt_sigma_membership(
                zero.as_ptr(),
                zero.as_ptr(),
                zero.as_ptr(),
                zero.as_ptr(),
                1,
                &mut m
            ),
            BtStatus::Domain
        );
    }
}

#[test]
fn f_relation_through_handles() {
    unsafe {
        let (mut x0, mut x1, mut x2) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        bt_element_x(0, &mut x0);
        bt_element_x(1, &mut x1);
        bt_element_x(2, &mut x2);
        let (mut lhs, mut rhs) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(bt_element_multiply(x1, x0, &mut lhs), BtStatus::Ok);
        assert_eq!(bt_element_multiply(x0, x2, &mut rhs), BtStatus::Ok);
        let mut eq = false;
        assert_eq!(bt_element_equals(lhs, rhs, &mut eq), BtStatus::Ok);
        assert!(eq);
        let mut inv = ptr::null_mut();
        assert_eq!(bt_element_invert(x0, &mut inv), BtStatus::Ok);
        assert_eq!(bt_element_equals(inv, x0, &mut eq), BtStatus::Ok);
        assert!(!eq);
        for p in [x0, x1, x2, lhs, rhs, inv] {
            bt_element_free(p);
        }
    }
}

#[test]
fn element_json_reduces_and_images() {
    unsafe {
        let json = r#"{"neg":[["0","1"]],"braid":{"strands":2,"letters":[1,1]},"pos":[["0","1"]]}"#;
        let mut g = ptr::null_mut();
        assert_eq!(bt_element_from_json(c(json).as_ptr(), &mut g), BtStatus::Ok);
        let mut img = [0i64; 4];
        assert_eq!(bt_element_abelian_image(g, img.as_mut_ptr()), BtStatus::Ok);
        assert_eq!(img, [0, 0, 1, 1]);
        let mut out = ptr::null_mut();
        assert_eq!(bt_element_to_json(g, &mut out), BtStatus::Ok);
        let s = take_string(out);
        let mut again = ptr::null_mut();
        assert_eq!(
            bt_element_from_json(c(&s).as_ptr(), &mut again),
            BtStatus::Ok
        );
        let mut eq = false;
        bt_element_equals(g, again, &mut eq);
        assert!(eq);
        bt_element_free(g);
        bt_element_free(again);

        let mut m = true;
        let (one, zero) = (c("1"), c("0"));
        assert_eq!(
            bt_sigma_membership(
                one.as_ptr(),
                one.as_ptr(),
                zero.as_ptr(),
                zero.as_ptr(),
                2,
                &mut m
            ),
            BtStatus::Ok
        );
        assert!(!m);
    }
}

#[test]
fn header_lists_the_exports() {
    let header = include_str!("../include/braided_thompson.h");
    for name in [
        "bt_last_error",
        "bt_string_free",
        "bt_braid_new",
        "bt_braid_from_json",
        "bt_braid_to_json",
        "bt_braid_compose",
        "bt_braid_equals",
        "bt_braid_winding",
        "bt_braid_free",
        "bt_element_from_json",
        "bt_element_x",
        "bt_element_to_json",
        "bt_element_multiply",
        "bt_element_invert",
        "bt_element_equals",
        "bt_element_in_deferred",
        "bt_element_abelian_image",
        "bt_element_free",
        "bt_sigma_membership",
        "BT_STATUS_DOMAIN",
    ] {
        assert!(header.contains(name), "{name} missing from the header");
    }
}
