use std::path::Path;
use std::process::{Command, Output};

fn kauffman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kauffman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kauffman(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 6] = [
        (&["invariant", "--braid", "B2: 1^3"], "trefoil.txt"),
        (&["invariant", "--braid", "B2: 1^3", "--format", "json"], "trefoil.json"),
        (&["invariant", "--braid", "B3: 1 -2 1 -2", "--spec", "osp:2"], "figure_eight_osp2.txt"),
        (&["bratteli", "--spec", "osp:1", "--depth", "4", "--format", "dot"], "bratteli_osp1_depth4.dot"),
        (&["bratteli", "--depth", "4", "--format", "json"], "bratteli_generic_depth4.json"),
        (&["torus", "--m", "2"], "torus_2.txt"),
    ];
    for (args, file) in cases {
        assert_eq!(stdout(args), golden(file), "{args:?}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["verify", "lemma2", "--max-size", "4", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["invariant", "--braid", "B4: 1 -2 3 -2 1", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn truncated_graphs_match_byte_for_byte() {
    for format in ["dot", "json", "text"] {
        let osp = stdout(&["bratteli", "--spec", "osp:1", "--depth", "6", "--format", format]);
        let so = stdout(&["bratteli", "--spec", "so:1", "--depth", "6", "--format", format]);
        if format == "json" {
            assert_eq!(osp.replace("osp:1", "so:1"), so);
        } else {
            assert_eq!(osp, so);
        }
    }
}

#[test]
fn specialized_invariants() {
    assert!(stdout(&["invariant", "--braid", "B2: 1", "--spec", "osp:1"]).ends_with("osp:1(q): 1\n"));
    assert!(stdout(&["invariant", "--braid", "B2:", "--spec", "so:1"]).ends_with("so:1(q): -q^-1 + 1 - q\n"));
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "oracle", "--m", "-6..8"]);
    assert!(out.ends_with("15 cases, 0 failed\n"), "{out}");
    let out = stdout(&["verify", "omega", "--max-f", "6"]);
    for value in ["(3)", "(15)", "(105)", "(945)", "(10395)"] {
        assert!(out.contains(value), "{out}");
    }
    let out = stdout(&["verify", "lemma2", "--max-size", "6", "--max-n", "3"]);
    assert!(out.ends_with(" 0 failed\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(kauffman(&["invariant", "--braid", "B2: 3"]).status.code(), Some(2));
    assert_eq!(kauffman(&["invariant", "--braid", "1 2"]).status.code(), Some(2));
    assert_eq!(kauffman(&["bratteli", "--depth", "9"]).status.code(), Some(2));
    assert_eq!(kauffman(&["invariant", "--braid", "B2: 1", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(kauffman(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(kauffman(&["verify", "parity", "--m", "1..3"]).status.code(), Some(0));
    assert_eq!(kauffman(&["--help"]).status.code(), Some(0));
}

#[test]
fn parse_errors_carry_positions() {
    let out = kauffman(&["invariant", "--braid", "B3: 1 0"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte 6"), "{err}");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.txt");
    let out = kauffman(&["torus", "--m", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("torus_2.txt"));
    let missing = dir.path().join("no/such/dir/x.txt");
    assert_eq!(kauffman(&["torus", "--m", "1", "--out", missing.to_str().unwrap()]).status.code(), Some(2));
}
