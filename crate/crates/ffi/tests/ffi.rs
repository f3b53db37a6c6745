use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use infinite_euler_ffi::*;

fn builtin(name: &str) -> *mut IeGraph {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ie_graph_builtin(name.as_ptr(), &mut g) }, IeStatus::Ok);
    g
}

fn last_error() -> String {
    let p = ie_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn degrees_and_incidences() {
    let star = builtin("loop_star");
    let (mut inf, mut deg) = (false, 7u64);
    assert_eq!(unsafe { ie_graph_degree(star, 0, &mut inf, &mut deg) }, IeStatus::Ok);
    assert!(inf);
    assert_eq!(deg, 0);
    assert_eq!(unsafe { ie_graph_degree(star, 1, &mut inf, &mut deg) }, IeStatus::Domain);
    let (mut u, mut v) = (9, 9);
    assert_eq!(unsafe { ie_graph_incidence(star, 5, &mut u, &mut v) }, IeStatus::Ok);
    assert_eq!((u, v), (0, 0));
    unsafe { ie_graph_free(star) };
}

#[test]
fn deciders_through_the_abi() {
    let fat = builtin("fat_ray");
    let circuit = [1u64, 2, 2, 3, 1];
    let mut answer = IeAnswer::True;
    let status = unsafe { ie_is_bi_extensible(fat, 0, circuit.as_ptr(), circuit.len(), IE_BUDGET_AUTO, &mut answer) };
    assert_eq!((status, answer), (IeStatus::Ok, IeAnswer::False));
    let status = unsafe { ie_is_bi_extensible(fat, 0, circuit.as_ptr(), circuit.len(), 3, &mut answer) };
    assert_eq!((status, answer), (IeStatus::Ok, IeAnswer::Exhausted));
    let broken = [0u64, 5, 1];
    let status = unsafe { ie_is_bi_extensible(fat, 0, broken.as_ptr(), broken.len(), IE_BUDGET_AUTO, &mut answer) };
    assert_eq!(status, IeStatus::Domain);
    assert!(last_error().contains("does not join"), "{}", last_error());
    unsafe { ie_graph_free(fat) };
}

#[test]
fn two_way_stream_pulls() {
    let line = builtin("line");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ie_stream_two_way(line, &mut s) }, IeStatus::Ok);
    // The stream owns its own reference to the graph.
    unsafe { ie_graph_free(line) };
    let mut positions = Vec::new();
    for side in [IeSide::Right, IeSide::Left, IeSide::Right, IeSide::Left] {
        let (mut e, mut v, mut p) = (0, 0, 0);
        assert_eq!(unsafe { ie_stream_next(s, side, &mut e, &mut v, &mut p) }, IeStatus::Ok);
        positions.push(p);
    }
    assert_eq!(positions, [1, -1, 2, -2]);
    unsafe { ie_stream_free(s) };
}

#[test]
fn errors_are_reported() {
    let mut g = ptr::null_mut();
    let bogus = CString::new("nope").unwrap();
    assert_eq!(unsafe { ie_graph_builtin(bogus.as_ptr(), &mut g) }, IeStatus::Domain);
    assert!(last_error().contains("nope"));
    assert_eq!(unsafe { ie_graph_builtin(ptr::null(), &mut g) }, IeStatus::NullPointer);
    let text = CString::new("family ray\nbogus 1\n").unwrap();
    assert_eq!(unsafe { ie_graph_load(text.as_ptr(), &mut g) }, IeStatus::Parse);
    let ray = builtin("ray");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ie_stream_two_way(ray, &mut s) }, IeStatus::Domain);
    assert_eq!(unsafe { ie_stream_one_way(ray, true, 1, &mut s) }, IeStatus::Domain);
    unsafe {
        ie_graph_free(ray);
        ie_graph_free(ptr::null_mut());
        ie_stream_free(ptr::null_mut());
    }
}

#[test]
fn presentation_alias_loads() {
    let text = CString::new("family ray\nodd_vertex true\nconditions E1\n").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ie_graph_load(text.as_ptr(), &mut g) }, IeStatus::Ok, "{}", last_error());
    unsafe { ie_graph_free(g) };
}

/// The directory holding this crate's library artifacts.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_declares_every_export() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/infinite_euler.h")).unwrap();
    let source = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 12, "{exports:?}");
    for name in exports {
        let declared = header.contains(&format!(" {name}(")) || header.contains(&format!("*{name}("));
        assert!(declared, "{name} missing from header");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let lib = artifact_dir().join("libinfinite_euler_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or no static library at {}", lib.display());
        return;
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi_smoke");
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(dir.join("tests/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to compile");
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(
        String::from_utf8_lossy(&run.stdout),
        "pos 1 edge 0 vertex 1\npos 2 edge 1 vertex 2\npos 3 edge 2 vertex 3\n"
    );
}
