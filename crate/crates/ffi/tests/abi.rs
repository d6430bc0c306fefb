use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hopfcoh_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hopfcoh_last_error()) }.to_str().unwrap().to_string()
}

fn fixture(name: &str) -> *mut HopfcohWorkspace {
    let mut ws = ptr::null_mut();
    let status = unsafe { hopfcoh_workspace_fixture(c(name).as_ptr(), &mut ws) };
    assert_eq!(status, HopfcohStatus::Ok, "{}", last_error());
    assert!(!ws.is_null());
    ws
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hopfcoh_string_free(s) };
    out
}

#[test]
fn cohomology_through_the_abi() {
    let ws = fixture("dual_kc2_gf2");
    let mut dims = [0usize; 5];
    let mut written = 0;
    let status = unsafe { hopfcoh_derived_coinvariants(ws, c("k").as_ptr(), 4, dims.as_mut_ptr(), 5, &mut written) };
    assert_eq!(status, HopfcohStatus::Ok);
    assert_eq!(&dims[..written], &[1, 1, 1, 1, 1]);

    let status = unsafe { hopfcoh_derived_coinvariants(ws, c("k").as_ptr(), 4, dims.as_mut_ptr(), 2, &mut written) };
    assert_eq!(status, HopfcohStatus::BufferTooSmall);
    assert_eq!(written, 5);

    let status = unsafe { hopfcoh_ext(ws, c("k").as_ptr(), c("H_regular").as_ptr(), 2, dims.as_mut_ptr(), 5, &mut written) };
    assert_eq!(status, HopfcohStatus::Ok);
    assert_eq!(&dims[..written], &[1, 0, 0]);
    unsafe { hopfcoh_workspace_free(ws) };
}

#[test]
fn error_codes() {
    let mut ws = ptr::null_mut();
    assert_eq!(unsafe { hopfcoh_workspace_fixture(c("missing").as_ptr(), &mut ws) }, HopfcohStatus::Parse);
    assert!(last_error().contains("missing"));
    assert!(ws.is_null());

    let bad = c(r#"{"field": {"kind": "GF", "p": 4}, "hopf": {}}"#);
    assert_eq!(unsafe { hopfcoh_workspace_parse(bad.as_ptr(), &mut ws) }, HopfcohStatus::Parse);
    assert_eq!(unsafe { hopfcoh_workspace_parse(ptr::null(), &mut ws) }, HopfcohStatus::NullArgument);

    let h4 = fixture("sweedler4_q");
    let mut out = ptr::null_mut();
    let status = unsafe {
        hopfcoh_compute(h4, c("decompose").as_ptr(), c("k").as_ptr(), ptr::null(), ptr::null(), ptr::null(), 3, &mut out)
    };
    assert_eq!(status, HopfcohStatus::Validation);
    assert!(last_error().contains("cosemisimple"));

    let mut dims = [0usize; 16];
    let mut written = 0;
    let status = unsafe { hopfcoh_derived_coinvariants(h4, c("k").as_ptr(), 12, dims.as_mut_ptr(), 16, &mut written) };
    assert_eq!(status, HopfcohStatus::ResourceLimit);
    unsafe { hopfcoh_workspace_free(h4) };
}

#[test]
fn json_round_trip_and_check() {
    let ws = fixture("kc2_q");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfcoh_workspace_to_json(ws, &mut out) }, HopfcohStatus::Ok);
    let text = take(out);
    let mut again = ptr::null_mut();
    assert_eq!(unsafe { hopfcoh_workspace_parse(c(&text).as_ptr(), &mut again) }, HopfcohStatus::Ok);
    let mut out2 = ptr::null_mut();
    assert_eq!(unsafe { hopfcoh_workspace_to_json(again, &mut out2) }, HopfcohStatus::Ok);
    assert_eq!(take(out2), text);

    let mut report = ptr::null_mut();
    let status = unsafe { hopfcoh_check(again, c("hom-coinvariants").as_ptr(), 2, 7, &mut report) };
    assert_eq!(status, HopfcohStatus::Ok, "{}", last_error());
    let report: serde_json::Value = serde_json::from_str(&take(report)).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert!(report["entries"].as_array().unwrap().iter().all(|e| e["check"] == "hom-coinvariants"));

    let mut report = ptr::null_mut();
    assert_eq!(unsafe { hopfcoh_check(again, c("nonsense").as_ptr(), 2, 7, &mut report) }, HopfcohStatus::Parse);
    unsafe {
        hopfcoh_workspace_free(ws);
        hopfcoh_workspace_free(again);
    }
}

#[test]
fn header_lists_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hopfcoh.h")).unwrap();
    for name in [
        "hopfcoh_last_error",
        "hopfcoh_string_free",
        "hopfcoh_workspace_parse",
        "hopfcoh_workspace_fixture",
        "hopfcoh_workspace_free",
        "hopfcoh_workspace_to_json",
        "hopfcoh_derived_coinvariants",
        "hopfcoh_ext",
        "hopfcoh_compute",
        "hopfcoh_check",
        "HOPFCOH_STATUS_RESOURCE_LIMIT",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles `tests/c/smoke.c` against the header and the static library and runs it.
#[test]
fn c_program_links_and_runs() {
    let compiler = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&compiler).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let profile_dir: PathBuf = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libhopfcoh_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = Path::new(env!("CARGO_TARGET_TMPDIR")).join("hopfcoh_smoke");
    let status = Command::new(&compiler)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}: {}", run.status.code(), String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "smoke ok");
}
