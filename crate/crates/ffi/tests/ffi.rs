use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use epicyclic_ffi::*;

fn last_error() -> String {
    let p = epi_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn morphism(src: i64, dst: i64, deg: i64, vals: &[i64]) -> *mut EpiMorphism {
    let mut out = ptr::null_mut();
    let st = unsafe { epi_morphism_new(src, dst, deg, vals.as_ptr(), vals.len(), 1, &mut out) };
    assert_eq!(st, EpiStatus::Ok);
    out
}

fn vals(m: *const EpiMorphism) -> Vec<i64> {
    let mut len = 0;
    assert_eq!(unsafe { epi_morphism_vals(m, ptr::null_mut(), 0, &mut len) }, EpiStatus::BufferTooSmall);
    let mut buf = vec![0; len];
    assert_eq!(unsafe { epi_morphism_vals(m, buf.as_mut_ptr(), len, &mut len) }, EpiStatus::Ok);
    buf
}

#[test]
fn compose_transpose_and_free() {
    let f = morphism(2, 3, 1, &[3, 5]);
    assert_eq!(vals(f), vec![0, 2]);
    assert_eq!(unsafe { (epi_morphism_src(f), epi_morphism_dst(f), epi_morphism_eqmod(f)) }, (2, 3, 1));

    let mut t = ptr::null_mut();
    assert_eq!(unsafe { epi_transpose(f, &mut t) }, EpiStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { epi_star_transpose(f, &mut s) }, EpiStatus::Ok);
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { epi_transpose(s, &mut back) }, EpiStatus::Ok);
    let mut equal = false;
    assert_eq!(unsafe { epi_morphism_equal(back, f, &mut equal) }, EpiStatus::Ok);
    assert!(equal);

    let mut x = 0;
    assert_eq!(unsafe { epi_morphism_eval(f, 3, &mut x) }, EpiStatus::Ok);
    assert_eq!(x, 5);

    let mut bad = ptr::null_mut();
    assert_eq!(unsafe { epi_compose(f, f, &mut bad) }, EpiStatus::PeriodMismatch);
    assert!(bad.is_null());
    assert!(last_error().contains("period"));

    unsafe {
        for m in [f, t, s, back] {
            epi_morphism_free(m);
        }
        epi_morphism_free(ptr::null_mut());
    }
}

#[test]
fn json_round_trip() {
    let text = CString::new(r#"{"src":2,"dst":2,"deg":1,"vals":[3,3],"eqmod":2}"#).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { epi_morphism_from_json(text.as_ptr(), &mut m) }, EpiStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { epi_morphism_to_json(m, &mut out) }, EpiStatus::Ok);
    let json = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    assert_eq!(json, r#"{"src":2,"dst":2,"deg":1,"eqmod":2,"vals":[3,3]}"#);
    unsafe {
        epi_string_free(out);
        epi_morphism_free(m);
    }

    let junk = CString::new("{nope").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { epi_morphism_from_json(junk.as_ptr(), &mut m) }, EpiStatus::Parse);
    assert_eq!(unsafe { epi_morphism_from_json(ptr::null(), &mut m) }, EpiStatus::NullPointer);
}

#[test]
fn invariant_names_cross_the_boundary() {
    let mut m = ptr::null_mut();
    let st = unsafe { epi_morphism_new(2, 2, 1, [1, 0].as_ptr(), 2, 1, &mut m) };
    assert_eq!(st, EpiStatus::InvariantViolation);
    let inv = unsafe { CStr::from_ptr(epi_last_error_invariant()) };
    assert_eq!(inv.to_str().unwrap(), "monotone");

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { epi_set_map_new(2, 2, [0, 2].as_ptr(), 2, &mut s) }, EpiStatus::InvariantViolation);

    // a success clears the error
    let f = morphism(1, 1, 1, &[0]);
    assert!(epi_last_error_message().is_null());
    unsafe { epi_morphism_free(f) };
}

#[test]
fn descent_through_handles() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { epi_set_map_new(3, 3, [2, 1, 0].as_ptr(), 3, &mut s) }, EpiStatus::Ok);
    let mut d = 0;
    assert_eq!(unsafe { epi_cdesc(s, &mut d) }, EpiStatus::Ok);
    assert_eq!(d, 2);
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { epi_lift(s, &mut f) }, EpiStatus::Ok);
    assert_eq!(vals(f), vec![2, 4, 6]);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { epi_project(f, &mut p) }, EpiStatus::Ok);
    let mut table = [0i64; 3];
    let mut len = 0;
    assert_eq!(unsafe { epi_set_map_table(p, table.as_mut_ptr(), 3, &mut len) }, EpiStatus::Ok);
    assert_eq!(table, [2, 1, 0]);
    unsafe {
        epi_set_map_free(s);
        epi_set_map_free(p);
        epi_morphism_free(f);
    }
}

#[test]
fn generators_and_hyper_sum() {
    let mut pi = ptr::null_mut();
    assert_eq!(unsafe { epi_generator(EpiGenerator::Pi, 2, 3, 1, &mut pi) }, EpiStatus::Ok);
    assert_eq!(unsafe { (epi_morphism_src(pi), epi_morphism_deg(pi)) }, (6, 3));
    let mut bad = ptr::null_mut();
    assert_eq!(unsafe { epi_generator(EpiGenerator::Pi, 2, 3, 2, &mut bad) }, EpiStatus::InvalidArgument);
    assert_eq!(unsafe { epi_generator(EpiGenerator::Delta, 2, 5, 1, &mut bad) }, EpiStatus::InvalidArgument);
    unsafe { epi_morphism_free(pi) };

    let mut buf = [0i64; 8];
    let mut len = 0;
    assert_eq!(unsafe { epi_hyper_add(2, -2, 3, buf.as_mut_ptr(), 8, &mut len) }, EpiStatus::Ok);
    assert_eq!(&buf[..len], &[-2, -1, 0, 1, 2]);
    assert_eq!(unsafe { epi_hyper_add(4, 1, 3, buf.as_mut_ptr(), 8, &mut len) }, EpiStatus::InvalidArgument);
}

#[test]
fn header_is_current_and_c_smoke_test_runs() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(root.join("include/epicyclic.h")).unwrap();
    for sym in ["epi_compose", "epi_lift", "EPI_STATUS_INVARIANT_VIOLATION", "typedef struct EpiMorphism EpiMorphism"] {
        assert!(header.contains(sym), "{sym}");
    }

    // deps/<test exe> -> profile directory holding libepicyclic_ffi.a
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libepicyclic_ffi.a");
    if !lib.exists() {
        eprintln!("skipping C smoke test: {} not built", lib.display());
        return;
    }
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("epicyclic_smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    let Ok(status) = status else {
        eprintln!("skipping C smoke test: no C compiler");
        return;
    };
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
