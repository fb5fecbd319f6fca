use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lieyam_ffi::*;

const SL2: &str = "dim 3\n0 2 1 1\n2 0 1 -1\n1 0 0 2\n0 1 0 -2\n1 2 2 -2\n2 1 2 2\n";

fn last_error() -> String {
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(ly_last_error(&mut p), LyStatus::Ok);
        assert!(!p.is_null());
        let s = CStr::from_ptr(p).to_str().unwrap().to_string();
        ly_string_free(p);
        s
    }
}

#[test]
fn weyl_dim_through_the_abi() {
    let mut out = 0u64;
    let e7 = [0, 0, 0, 0, 0, 0, 1];
    unsafe {
        assert_eq!(ly_weyl_dim(b'E' as _, 7, e7.as_ptr(), 7, &mut out), LyStatus::Ok);
        assert_eq!(out, 56);
        assert_eq!(ly_weyl_dim(b'C' as _, 3, [0, 0, 1].as_ptr(), 3, &mut out), LyStatus::Ok);
        assert_eq!(out, 14);
        assert_eq!(ly_weyl_dim(b'D' as _, 2, [0, 0].as_ptr(), 2, &mut out), LyStatus::InvalidArgument);
        assert_eq!(ly_weyl_dim(b'A' as _, 2, [-1, 0].as_ptr(), 2, &mut out), LyStatus::InvalidArgument);
        assert_eq!(ly_weyl_dim(b'A' as _, 2, [1].as_ptr(), 1, &mut out), LyStatus::Malformed);
        assert_eq!(ly_weyl_dim(b'A' as _, 2, ptr::null(), 2, &mut out), LyStatus::NullPointer);
    }
}

#[test]
fn algebra_handle_lifecycle() {
    let text = CString::new(SL2).unwrap();
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(ly_algebra_from_sca(text.as_ptr(), &mut a), LyStatus::Ok);
        let (mut dim, mut der, mut rank, mut simple) = (0, 0, 0, false);
        assert_eq!(ly_algebra_dim(a, &mut dim), LyStatus::Ok);
        assert_eq!(ly_algebra_derivation_dim(a, &mut der), LyStatus::Ok);
        assert_eq!(ly_algebra_killing_rank(a, &mut rank), LyStatus::Ok);
        assert_eq!(ly_algebra_is_simple(a, &mut simple), LyStatus::Ok);
        assert_eq!((dim, der, rank, simple), (3, 3, 3, true));
        ly_algebra_free(a);
        ly_algebra_free(ptr::null_mut());
    }
}

#[test]
fn malformed_and_non_lie_inputs() {
    let mut a = ptr::null_mut();
    unsafe {
        let bad = CString::new("dim 2\n0 0 7 1\n").unwrap();
        assert_eq!(ly_algebra_from_sca(bad.as_ptr(), &mut a), LyStatus::Malformed);
        assert!(last_error().contains("line 2"));
        assert_eq!(ly_algebra_from_sca(ptr::null(), &mut a), LyStatus::NullPointer);

        // x·x = x is not anticommutative
        let idempotent = CString::new("dim 1\n0 0 0 1\n").unwrap();
        assert_eq!(ly_algebra_from_sca(idempotent.as_ptr(), &mut a), LyStatus::Ok);
        let mut simple = true;
        assert_eq!(ly_algebra_is_simple(a, &mut simple), LyStatus::VerifyFailed);
        assert!(last_error().starts_with("not a Lie algebra"));
        ly_algebra_free(a);
    }
}

#[test]
fn catalog_reports() {
    let mut r = ptr::null_mut();
    unsafe {
        let id = CString::new("g4").unwrap();
        assert_eq!(ly_catalog_verify(id.as_ptr(), &mut r), LyStatus::Ok);
        let (mut g, mut h, mut m, mut passed) = (0, 0, 0, false);
        assert_eq!(ly_report_dims(r, &mut g, &mut h, &mut m), LyStatus::Ok);
        assert_eq!(ly_report_passed(r, &mut passed), LyStatus::Ok);
        assert_eq!((g, h, m, passed), (21, 14, 7, true));
        let mut s = ptr::null_mut();
        assert_eq!(ly_report_summary(r, &mut s), LyStatus::Ok);
        let summary = CStr::from_ptr(s).to_str().unwrap().to_string();
        ly_string_free(s);
        assert!(summary.starts_with("G4 PASS\ndims 21/14/7 type generic\n"));
        assert_eq!(summary.lines().filter(|l| l.starts_with("LY") && l.ends_with(" pass")).count(), 6);
        ly_report_free(r);

        let unknown = CString::new("Q1").unwrap();
        assert_eq!(ly_catalog_verify(unknown.as_ptr(), &mut r), LyStatus::UnknownEntry);
        assert!(r.is_null());
    }
}

/// Directory holding this test's build artifacts, where cargo also places
/// the crate's static library.
fn artifact_dir() -> PathBuf {
    std::env::current_exe().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_header() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let dir = artifact_dir();
    let lib = [dir.join("liblieyam_ffi.a"), dir.parent().unwrap().join("liblieyam_ffi.a")]
        .into_iter()
        .find(|p| p.exists())
        .expect("static library built alongside the tests");
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("lieyam_smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("G6 PASS"));
}
