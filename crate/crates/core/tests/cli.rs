use std::path::Path;
use std::process::{Command, Output};

fn quandle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quandle")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_then_info() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r3.txt");
    let f = f.to_str().unwrap();
    assert!(quandle(&["gen", "dihedral", "3", "-o", f]).status.success());
    let o = quandle(&["info", f]);
    assert!(o.status.success());
    let s = stdout(&o);
    for line in ["type=2", "connected=true", "inn_order=6", "inn_exponent=6", "kei=true"] {
        assert!(s.contains(line), "{s}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad_axioms = write(dir.path(), "bad.txt", "2\n1 2\n1 2\n");
    let o = quandle(&["validate", &bad_axioms]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));

    let garbled = write(dir.path(), "garbled.txt", "2\n1 x\n2 2\n");
    let o = quandle(&["info", &garbled]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2, column 3"));

    assert_eq!(quandle(&["reproduce", "types"]).status.code(), Some(2));
    assert_eq!(quandle(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(quandle(&["--help"]).status.code(), Some(0));
}

#[test]
fn rack_that_is_not_a_quandle() {
    let dir = tempfile::tempdir().unwrap();
    // x*y = x + 1 on Z_2
    let f = write(dir.path(), "shift.txt", "2\n2 2\n1 1\n");
    assert!(quandle(&["validate", &f]).status.success());
    assert_eq!(quandle(&["validate", "--quandle", &f]).status.code(), Some(1));
    assert_eq!(quandle(&["homology", "--complex", "quandle", &f]).status.code(), Some(2));
}

#[test]
fn left_convention_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let right = dir.path().join("a.txt");
    let left = dir.path().join("a_left.txt");
    let (right, left) = (right.to_str().unwrap(), left.to_str().unwrap());
    assert!(quandle(&["gen", "alexander", "5", "2", "-o", right]).status.success());
    assert!(quandle(&["--convention", "left", "gen", "alexander", "5", "2", "-o", left]).status.success());
    assert_ne!(std::fs::read(right).unwrap(), std::fs::read(left).unwrap());
    let a = stdout(&quandle(&["info", right]));
    let b = stdout(&quandle(&["--convention", "left", "info", left]));
    assert_eq!(a, b);
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r3.txt");
    let f = f.to_str().unwrap();
    quandle(&["gen", "dihedral", "3", "-o", f]);
    let o = quandle(&["--json", "homology", "--complex", "quandle", "--max-degree", "3", f]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["tool"], "quandle");
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    let groups = &v["result"]["data"]["homology"];
    assert_eq!(groups[0]["group"]["text"], "Z");
    assert_eq!(groups[1]["group"]["text"], "0");
    assert_eq!(groups[2]["group"]["text"], "Z_3");
}

#[test]
fn cycle_and_subcomplex() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("gf4.txt");
    let f = f.to_str().unwrap();
    quandle(&["gen", "corpus", "gf4", "-o", f]);
    let o = quandle(&["cycle", "--word", "aaa", "--assign", "1,2", f]);
    assert!(o.status.success(), "{}", stdout(&o));
    // gf4 has type 3, so xaa = x fails and the strict cycle is refused
    assert_eq!(quandle(&["cycle", "--word", "aa", "--assign", "1,2", f]).status.code(), Some(2));
    let o = quandle(&["cycle", "--permissive", "--word", "aa", "--assign", "1,2", f]);
    assert_eq!(o.status.code(), Some(1));
    let o = quandle(&["subcomplex", "--word", "aaa", "--degree", "4", f]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("boundary closure"));
}

#[test]
fn cocycles_and_extension() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("r3.txt");
    let f = f.to_str().unwrap();
    quandle(&["gen", "dihedral", "3", "-o", f]);
    let o = quandle(&["cocycles", "--mod", "3", "--list", f]);
    assert!(stdout(&o).contains("9 elements"));
    let e = dir.path().join("e.txt");
    let e = e.to_str().unwrap();
    let o = quandle(&["extend", "--mod", "3", "--generator", "0", "--word", "aa", "-o", e, f]);
    assert!(o.status.success(), "{}", stdout(&o));
    let info = stdout(&quandle(&["info", e]));
    assert!(info.contains("order=9") && info.contains("quandle=true"));
    let bad = write(dir.path(), "phi.txt", "0 1 0\n0 0 0\n0 0 0\n");
    assert_eq!(quandle(&["extend", "--mod", "3", "--cocycle", &bad, f]).status.code(), Some(2));
}

#[test]
fn scan_reports_counts() {
    let o = quandle(&["scan", "--corpus", "--word", "abab", "--word", "aa"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("abab: 6 satisfy"), "{s}");
}

#[test]
fn reproduce_without_dataset() {
    let o = quandle(&["reproduce", "theorem"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = quandle(&["reproduce", "all"]);
    let s = stdout(&o);
    assert!(s.contains("SKIPPED type census"));
    assert!(s.contains("SKIPPED catalogue word scans"));
    // the labelled length-7 lists do not match their rings
    assert_eq!(o.status.code(), Some(1));
}
