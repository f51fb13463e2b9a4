use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use fga_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    fga_string_free(s);
    out
}

unsafe fn module(src: &str, field: &str, k: usize) -> *mut FgaModule {
    let mut m = ptr::null_mut();
    assert_eq!(
        fga_module_parse(c(src).as_ptr(), c(field).as_ptr(), 2, k, &mut m),
        FgaStatus::Ok
    );
    m
}

#[test]
fn module_operations() {
    unsafe {
        let rel = module("[x,y]-1", "gf:2", 1);
        let whole = module("1", "gf:2", 1);
        let aug = module("x-1; y-1", "gf:2", 1);

        let mut cl = ptr::null_mut();
        assert_eq!(fga_module_closure(rel, whole, &mut cl), FgaStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(fga_module_basis_string(cl, &mut s), FgaStatus::Ok);
        assert_eq!(take(s), "1");

        let mut b = false;
        assert_eq!(fga_module_contains(aug, rel, &mut b), FgaStatus::Ok);
        assert!(b);
        assert_eq!(fga_module_is_free_factor(rel, aug, &mut b), FgaStatus::Ok);
        assert!(!b);
        assert_eq!(
            fga_module_member(aug, c("x*y - 1").as_ptr(), &mut b),
            FgaStatus::Ok
        );
        assert!(b);
        let mut r = 0usize;
        assert_eq!(fga_module_rank(aug, &mut r), FgaStatus::Ok);
        assert_eq!(r, 2);

        let mut d = ptr::null_mut();
        assert_eq!(
            fga_module_q_dual(c("x-1, x-1, y-1").as_ptr(), aug, &mut d),
            FgaStatus::Ok
        );
        assert_eq!(fga_module_basis_string(d, &mut s), FgaStatus::Ok);
        assert_eq!(take(s), "{1, 1, 0}\n{0, 0, 1}");

        let mut meet = ptr::null_mut();
        let xm = module("x-1", "gf:2", 1);
        assert_eq!(fga_module_intersection(xm, aug, &mut meet), FgaStatus::Ok);
        assert_eq!(fga_module_equal(meet, xm, &mut b), FgaStatus::Ok);
        assert!(b);

        assert_eq!(fga_module_contains(rel, aug, &mut b), FgaStatus::Ok);
        assert!(!b);
        assert_eq!(
            fga_module_closure(aug, rel, &mut cl),
            FgaStatus::NotContained
        );

        for m in [rel, whole, aug, cl, d, meet, xm] {
            fga_module_free(m);
        }
    }
}

#[test]
fn word_measure() {
    unsafe {
        for (field, n, want) in [("gf:2", 1, "2/1"), ("gf:2", 2, "4/3"), ("gf:3", 1, "3/2")] {
            let i = module("[x,y]-1", field, 1);
            let j = module("x-1; y-1", field, 1);
            let mut s = ptr::null_mut();
            assert_eq!(fga_phi_exact(i, j, n, 10_000_000, &mut s), FgaStatus::Ok);
            assert_eq!(take(s), want);
            assert_eq!(
                fga_phi_exact(i, j, 4, 10, &mut s),
                FgaStatus::BudgetExceeded
            );
            fga_module_free(i);
            fga_module_free(j);
        }
        let i = module("x-1", "q", 1);
        let mut s = ptr::null_mut();
        assert_eq!(fga_phi_exact(i, i, 1, 10, &mut s), FgaStatus::InvalidField);
        fga_module_free(i);
    }
}

#[test]
fn subgroups() {
    unsafe {
        let mut h = ptr::null_mut();
        let mut f = ptr::null_mut();
        assert_eq!(
            fga_subgroup_parse(c("x^2").as_ptr(), 2, &mut h),
            FgaStatus::Ok
        );
        assert_eq!(fga_subgroup_whole(2, &mut f), FgaStatus::Ok);
        let mut cl = ptr::null_mut();
        assert_eq!(fga_group_closure(h, f, &mut cl), FgaStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(fga_subgroup_to_string(cl, &mut s), FgaStatus::Ok);
        assert_eq!(take(s), "<x>");
        let mut b = false;
        assert_eq!(
            fga_word_is_primitive(c("x*y^2").as_ptr(), f, &mut b),
            FgaStatus::Ok
        );
        assert!(b);
        assert_eq!(
            fga_word_is_primitive(c("x^2").as_ptr(), f, &mut b),
            FgaStatus::Ok
        );
        assert!(!b);
        assert_eq!(
            fga_word_is_primitive(c("x+1").as_ptr(), f, &mut b),
            FgaStatus::Parse
        );
        assert_eq!(fga_subgroup_whole(0, &mut f), FgaStatus::InvalidArgument);
        for g in [h, f, cl] {
            fga_subgroup_free(g);
        }
    }
}

#[test]
fn null_handles_are_rejected() {
    unsafe {
        let mut b = false;
        assert_eq!(
            fga_module_equal(ptr::null(), ptr::null(), &mut b),
            FgaStatus::NullPointer
        );
        let m = module("x-1", "q", 1);
        assert_eq!(fga_module_rank(m, ptr::null_mut()), FgaStatus::NullPointer);
        fga_module_free(m);
        fga_module_free(ptr::null_mut());
        fga_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = format!("{dir}/include/fga.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "fga_module_closure",
        "fga_phi_exact",
        "fga_last_error_message",
        "FGA_STATUS_NOT_CONTAINED",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let src = std::env::temp_dir().join(format!("fga_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"fga.h\"\nint main(void) {\n  FgaModule *m = 0;\n  FgaStatus s = fga_module_parse(\"x-1\", \"q\", 2, 1, &m);\n  fga_module_free(m);\n  return s == FGA_STATUS_OK ? 0 : 1;\n}\n",
    )
    .unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&src)
        .status()
        .expect("a C compiler is required for this test");
    std::fs::remove_file(&src).ok();
    assert!(status.success());
}
