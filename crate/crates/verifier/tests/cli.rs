//! The `ringlab` binary: output formats and exit codes.

use std::io::Write;
use std::process::{Command, Output};

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .output()
        .expect("ringlab binary runs")
}

fn text(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("ringlab-cli-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn ideals_lists_the_lattice() {
    let o = ringlab(&["ideals", "Z2 x Z2"]);
    assert!(o.status.success());
    let t = text(&o);
    assert_eq!(t.lines().last(), Some("4 ideals"));
    assert_eq!(t.lines().filter(|l| l.contains("maximal")).count(), 2);
}

#[test]
fn classify_reports_mcs_witnesses() {
    let o = ringlab(&["classify", "Z6", "--ideal", "2", "--mcs", "3"]);
    assert!(o.status.success());
    let t = text(&o);
    assert!(t.lines().any(|l| l.starts_with("s_r=yes")), "{t}");
    let o = ringlab(&["classify", "Z6", "--ideal", "2", "--mcs", "2"]);
    assert!(text(&o).lines().any(|l| l.starts_with("s_r=n/a")), "{}", text(&o));
}

#[test]
fn theorems_lists_the_registry() {
    let t = text(&ringlab(&["theorems"]));
    for id in ["T2.3", "T2.12", "P-suzmax", "L3.1", "T4.2", "DM", "DEGEN"] {
        assert!(t.lines().any(|l| l.starts_with(id)), "{id} missing from\n{t}");
    }
}

#[test]
fn localize_prints_the_kernel() {
    let o = ringlab(&["localize", "Z12", "--mcs", "3"]);
    assert!(o.status.success());
    let t = text(&o);
    assert!(t.lines().any(|l| l.starts_with("kernel=")), "{t}");
    assert!(t.contains("size=4"), "{t}");
}

#[test]
fn poly_subcommands() {
    let t = text(&ringlab(&["poly", "Z3", "kernel", "1", "0", "--mcs", "units", "--degree", "2"]));
    assert!(t.starts_with("NO at degree 1"), "{t}");
    let t = text(&ringlab(&["poly", "Z6", "content", "2", "--mcs", "units"]));
    assert!(t.starts_with("YES by theorem"), "{t}");
    let t = text(&ringlab(&["poly", "Z6", "content", "2", "--mcs", "3"]));
    assert!(t.starts_with("no violation up to degree"), "{t}");
    let t = text(&ringlab(&["poly", "Z4", "unit", "2x+1", "--mcs", "units"]));
    assert!(t.starts_with("yes"), "{t}");
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(ringlab(&["verify", "--theorems", "T9.9"]).status.code(), Some(2));
    assert_eq!(ringlab(&["hunt", "T2.12", "--drop", "nonsense"]).status.code(), Some(2));
    assert_eq!(ringlab(&["classify", "Q5"]).status.code(), Some(2));
    assert_eq!(ringlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn violations_set_the_exit_code() {
    let corpus = corpus_file("zz.txt", "arith Z x Z ; ideal=0,2 ; mcs={1},{1}\nZ6\n");
    let c = corpus.to_str().unwrap();
    let o = ringlab(&["verify", "--theorems", "T2.12", "--corpus", c]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = ringlab(&["hunt", "T2.12", "--drop", "prime", "--corpus", c]);
    assert_eq!(o.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&o.stderr);
    assert!(stderr.contains("unexpected violations: 0"), "{stderr}");
    std::fs::remove_file(corpus).ok();
}

#[test]
fn replay_reproduces_hunt_records() {
    let corpus = corpus_file("replay.txt", "Z6\nZ8\narith Z x Z ; ideal=0,2 ; mcs={1},{1}\n");
    let report = std::env::temp_dir().join(format!("ringlab-cli-{}-replay.jsonl", std::process::id()));
    let o = ringlab(&[
        "hunt",
        "T2.12",
        "--drop",
        "prime",
        "--per-case",
        "--corpus",
        corpus.to_str().unwrap(),
        "--json",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = ringlab(&["replay", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let t = text(&o);
    assert!(t.lines().count() > 0);
    assert!(t.lines().all(|l| l.ends_with("reproduced")), "{t}");
    std::fs::remove_file(corpus).ok();
    std::fs::remove_file(report).ok();
}
