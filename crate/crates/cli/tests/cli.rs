use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn wdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wdeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_k2_save_witness() {
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "k2.sg", "2 1\n0 1\n");
    let w = put(&dir, "k2.wit", "save 0 1\ndel 1\n");
    let out = wdeg(&["verify", s(&g), "charges:1,0", s(&w)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\t0\t1\t1\n2\t1\t0\n");
    let bad = put(&dir, "bad.wit", "del 0\ndel 1\n");
    let out = wdeg(&["verify", s(&g), "charges:1,0", s(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("step 0"));
}

#[test]
fn wd_of_c5_is_two() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("c5.sg");
    assert_eq!(code(&wdeg(&["gen", "cycle", "5", "-o", s(&g)])), 0);
    let w = dir.path().join("c5.wit");
    let out = wdeg(&["wd", s(&g), "-o", s(&w)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2\n");
    assert_eq!(code(&wdeg(&["verify", s(&g), "const:2", s(&w)])), 0);
    assert_eq!(code(&wdeg(&["wd", s(&g), "--max-d", "1"])), 1);
}

#[test]
fn icosahedron_round_trip() {
    let dir = TempDir::new().unwrap();
    let pg = dir.path().join("icosa.pg");
    let sg = dir.path().join("icosa.sg");
    assert_eq!(code(&wdeg(&["gen", "icosahedron", "-o", s(&pg)])), 0);
    assert_eq!(code(&wdeg(&["gen", "icosahedron", "-o", s(&sg)])), 0);
    assert!(fs::read_to_string(&pg).unwrap().starts_with("# family=icosahedron seed=0\n"));
    let w = dir.path().join("w.wit");
    let tr = dir.path().join("w.trace");
    let dot = dir.path().join("w.dot");
    let out = wdeg(&[
        "witness-planar",
        s(&pg),
        "-o",
        s(&w),
        "--trace",
        s(&tr),
        "--dot",
        s(&dot),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(code(&wdeg(&["verify", s(&sg), "const:4", s(&w)])), 0);
    assert_eq!(code(&wdeg(&["verify", s(&sg), "const:3", s(&w)])), 1);
    let trace = fs::read_to_string(&tr).unwrap();
    assert!(trace.lines().all(|l| l.starts_with('R') && l.split(' ').count() == 5));
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph G {"));
    let out = wdeg(&["degeneracy", s(&sg)]);
    assert_eq!(stdout(&out).lines().next(), Some("5"));
}

#[test]
fn witness_with_s_and_i() {
    let dir = TempDir::new().unwrap();
    let pg = dir.path().join("w.pg");
    assert_eq!(code(&wdeg(&["gen", "wheel", "6", "-o", s(&pg)])), 0);
    let w = dir.path().join("w.wit");
    let out = wdeg(&["witness-planar", s(&pg), "-S", "0,1", "-I", "3", "-o", s(&w)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = wdeg(&["verify", s(&pg), "instance:S=0,1;I=3", s(&w)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    // 0 and 2 are not consecutive on the rim
    let out = wdeg(&["witness-planar", s(&pg), "-S", "0,2", "-o", s(&w)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("consecutive"));
}

#[test]
fn color_from_witness() {
    let dir = TempDir::new().unwrap();
    let pg = dir.path().join("a.pg");
    assert_eq!(code(&wdeg(&["gen", "apollonian", "30", "--seed", "4", "-o", s(&pg)])), 0);
    let w = dir.path().join("a.wit");
    assert_eq!(code(&wdeg(&["witness-planar", s(&pg), "-o", s(&w)])), 0);
    for ch in ["min", "max", "random:9"] {
        let out = wdeg(&["color", s(&pg), s(&w), "--palette", "5", "--chooser", ch]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).lines().count(), 30);
    }
    let k2 = put(&dir, "k2.sg", "2 1\n0 1\n");
    let kw = put(&dir, "k2.wit", "save 0 1\ndel 1\n");
    let lst = put(&dir, "k2.lst", "0: 1 2\n1: 1\n");
    let out = wdeg(&["color", s(&k2), s(&kw), "--lists", s(&lst)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0 2\n1 1\n");
    let out = wdeg(&["color", s(&k2), s(&kw), "--chooser", "rand"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn generators_are_byte_stable() {
    let a = wdeg(&["gen", "triangulation", "11", "--seed", "42"]);
    let b = wdeg(&["gen", "triangulation", "11", "--seed", "42"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&wdeg(&["gen", "regular", "5", "3"])), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&wdeg(&[])), 2);
    assert_eq!(code(&wdeg(&["verify", "/nonexistent.sg", "const:1", "/nonexistent.wit"])), 2);
    let dir = TempDir::new().unwrap();
    let g = put(&dir, "bad.sg", "3 1\n2 1\n");
    let w = put(&dir, "w.wit", "del 0\n");
    let out = wdeg(&["verify", s(&g), "const:1", s(&w)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
