use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use chained_rooks_ffi::*;

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cr_string_free(s) };
    out
}

fn board(shape: CrShape, n: usize, k: usize) -> *mut CrBoard {
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { cr_board_new(shape, n, k, &mut b) }, CrStatus::Ok);
    b
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cr_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn counts() {
    let b = board(CrShape::Linear, 5, 3);
    let mut max = 0;
    unsafe {
        assert_eq!(cr_board_max_rooks(b, &mut max), CrStatus::Ok);
        assert_eq!(max, 10);
        let mut s = ptr::null_mut();
        assert_eq!(cr_count_placements(b, CR_MAX_ROOKS, CrCountMethod::Closed, &mut s), CrStatus::Ok);
        assert_eq!(take(s), "14400");
        assert_eq!(cr_count_placements(b, 3, CrCountMethod::Closed, &mut s), CrStatus::InvalidArgument);
        assert!(last_error().contains("maximum"));
        cr_board_free(b);
    }
    let b = board(CrShape::Linear, 3, 3);
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(cr_count_chained_asm(b, &mut s), CrStatus::Ok);
        assert_eq!(take(s), "49");
        cr_board_free(b);
    }
}

#[test]
fn null_arguments() {
    unsafe {
        assert_eq!(cr_board_new(CrShape::Linear, 2, 2, ptr::null_mut()), CrStatus::NullArgument);
        let mut s = ptr::null_mut();
        assert_eq!(cr_count_chained_asm(ptr::null(), &mut s), CrStatus::NullArgument);
        assert!(last_error().contains("NULL"));
        assert!(cr_document_family(ptr::null()).is_null());
        assert_eq!(cr_document_list_len(ptr::null()), 0);
        cr_board_free(ptr::null_mut());
        cr_document_free(ptr::null_mut());
        cr_string_free(ptr::null_mut());
    }
}

#[test]
fn documents() {
    let text = CString::new(
        "{\"family\": \"one-line\", \"shape\": \"linear\", \"n\": 5, \"k\": 4, \"one_line\": \"30502-04200-00045-31200\"}",
    )
    .unwrap();
    unsafe {
        let mut doc = ptr::null_mut();
        assert_eq!(cr_document_parse(text.as_ptr(), &mut doc), CrStatus::Ok);
        let mut diag = ptr::null_mut();
        assert_eq!(cr_document_validate(doc, &mut diag), CrStatus::Ok);
        assert_eq!(take(diag), "");
        let mut m = ptr::null_mut();
        assert_eq!(cr_document_convert(doc, CrForm::Matching, &mut m), CrStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(cr_document_convert(m, CrForm::OneLine, &mut back), CrStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(cr_document_serialize(back, &mut s), CrStatus::Ok);
        assert!(take(s).contains("\"one_line\": \"30502-04200-00045-31200\""));
        assert_eq!(cr_document_convert(doc, CrForm::Ice, &mut back), CrStatus::Unsupported);
        assert_eq!(cr_document_render(doc, CrFormat::Ascii, &mut s), CrStatus::Ok);
        assert_eq!(take(s).lines().count(), 5);
        cr_document_free(m);
        cr_document_free(doc);
    }
}

#[test]
fn invalid_documents_parse_but_fail_validation() {
    let text = CString::new(
        "{\"family\": \"composition\", \"shape\": \"circular\", \"n\": 5, \"k\": 3, \"parts\": [3, 3, 1]}",
    )
    .unwrap();
    unsafe {
        let mut doc = ptr::null_mut();
        assert_eq!(cr_document_parse(text.as_ptr(), &mut doc), CrStatus::Ok);
        let mut diag = ptr::null_mut();
        assert_eq!(cr_document_validate(doc, &mut diag), CrStatus::Invalid);
        assert!(take(diag).contains("not admissible"));
        cr_document_free(doc);
    }
    let cut = CString::new("{\"family\": \"composition\",\n \"shape\": ").unwrap();
    let mut doc = ptr::null_mut();
    assert_eq!(unsafe { cr_document_parse(cut.as_ptr(), &mut doc) }, CrStatus::Parse);
    assert!(last_error().contains("line 2"), "{}", last_error());
}

#[test]
fn enumeration_with_limit() {
    let b = board(CrShape::Circular, 2, 2);
    unsafe {
        let mut list = ptr::null_mut();
        assert_eq!(cr_enumerate(b, CrFamily::Permutations, CR_MAX_ROOKS, 0, &mut list), CrStatus::Ok);
        assert_eq!(cr_document_list_len(list), 8);
        cr_document_list_free(list);
        assert_eq!(cr_enumerate(b, CrFamily::Placements, 1, 3, &mut list), CrStatus::Ok);
        assert_eq!(cr_document_list_len(list), 3);
        let first = cr_document_list_get(list, 0);
        assert_eq!(CStr::from_ptr(cr_document_family(first)).to_str().unwrap(), "placement");
        cr_document_list_free(list);
        assert_eq!(cr_enumerate(b, CrFamily::Permutations, 1, 0, &mut list), CrStatus::InvalidArgument);
        cr_board_free(b);
    }
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_is_valid_c_and_cxx() {
    if !have_cc() {
        eprintln!("no C compiler on PATH, header check not run");
        return;
    }
    let header = crate_dir().join("include/chained_rooks.h");
    for (lang, std) in [("c", "-std=c99"), ("c++", "-std=c++11")] {
        let st = Command::new("cc")
            .args(["-fsyntax-only", "-Wall", "-Wextra", "-Werror", std, "-x", lang])
            .arg(&header)
            .status()
            .unwrap();
        assert!(st.success(), "header does not compile as {lang}");
    }
}

/// The directory holding the library artifacts, next to `deps/` where this
/// test binary lives.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    if !have_cc() {
        eprintln!("no C compiler on PATH, C smoke test not run");
        return;
    }
    let lib = artifact_dir().join("libchained_rooks_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let tmp = tempfile::tempdir().unwrap();
    let exe = tmp.path().join("smoke");
    let st = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(crate_dir().join("include"))
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(st.success(), "C smoke program failed to build");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
