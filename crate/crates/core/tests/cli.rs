use std::fs;
use std::process::{Command, Output};

fn bt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bthompson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bthompson-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn sigma_in_the_convex_hull() {
    let o = bt(&[
        "char", "sigma", "--a", "1", "--b", "1", "--c", "0", "--d", "0", "--m", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("NOT-IN-SIGMA"), "{s}");
    assert!(s.contains("convex hull"), "{s}");
}

#[test]
fn full_twist_winding() {
    let o = bt(&[
        "braid", "winding", "--n", "4", "--word", "twist2", "--i", "2", "--j", "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn path_matching_homology() {
    let o = bt(&["complex", "homology", "--matching", "--path-edges", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H1 = Z"));
}

#[test]
fn verify_suites() {
    let o = bt(&["verify", "lemma-conj", "--samples", "50", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));

    let o = bt(&["verify", "f-relations"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x1 x0 = x0 x2"));

    let o = bt(&["verify", "engine-agreement", "--samples", "1000"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_is_deterministic() {
    let a = bt(&[
        "verify",
        "characters",
        "--seed",
        "3",
        "--samples",
        "10",
        "--json",
    ]);
    let b = bt(&[
        "verify",
        "characters",
        "--seed",
        "3",
        "--samples",
        "10",
        "--json",
    ]);
    let strip = |o: &Output| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("seconds");
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn unknown_suite_and_subcommand_are_usage_errors() {
    assert_eq!(bt(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(bt(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        bt(&["element", "equal", "--g", "{oops", "--h", "x0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn malformed_address_exits_2() {
    assert_eq!(
        bt(&["element", "member", "--g", "x0", "--w", "02"])
            .status
            .code(),
        Some(2)
    );
    let p = temp("bad_tree.json", r#"["0","02"]"#);
    assert_eq!(
        bt(&["roundtrip", p.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn roundtrip_braid_is_identical() {
    let text = r#"{"strands":3,"letters":[1,-2,2,1]}"#;
    let p = temp("braid.json", text);
    let o = bt(&["roundtrip", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), text);
}

#[test]
fn roundtrip_reduces_then_stabilises() {
    let p = temp(
        "diagram.json",
        r#"{"neg":[["0","1"]],"braid":{"strands":2,"letters":[]},"pos":[["0","1"]]}"#,
    );
    let first = stdout(&bt(&["roundtrip", p.to_str().unwrap()]));
    assert_eq!(
        first.trim(),
        r#"{"neg":[[""]],"braid":{"strands":1,"letters":[]},"pos":[[""]]}"#
    );
    let q = temp("diagram2.json", &first);
    assert_eq!(stdout(&bt(&["roundtrip", q.to_str().unwrap()])), first);
}

#[test]
fn emitted_json_is_readable() {
    let o = bt(&["element", "multiply", "--g", "x0", "--h", "x1", "--json"]);
    let p = temp("product.json", &stdout(&o));
    let o = bt(&[
        "element",
        "equal",
        "--g",
        &format!("@{}", p.display()),
        "--h",
        "x:0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    // x0 x1 has more carets than x0
    assert_eq!(stdout(&o).trim(), "false");

    let o = bt(&["complex", "matching", "--complete", "4", "--json"]);
    let p = temp("k4.json", &stdout(&o));
    let o = bt(&["complex", "connectivity", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("path-connected: false"));
}

#[test]
fn element_queries() {
    let o = bt(&["element", "rewrite", "--g", "x0", "--side", "left"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("x^1"));
    let o = bt(&["element", "psi", "--g", "x2", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "B2[]");
    let o = bt(&["char", "finiteness", "--gens", "1,1,0,0;0,0,1,0;0,0,0,1"]);
    assert_eq!(stdout(&o).trim(), "F_infinity");
    let o = bt(&["element", "rewrite", "--g", "x0", "--w", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stein_commands() {
    let o = bt(&["stein", "asc-link", "--tree", "0,10,11"]);
    assert!(stdout(&o).starts_with("2-simplex"));
    let o = bt(&[
        "stein",
        "cube-span",
        "--tree",
        "0,10,11",
        "--merges",
        "1",
        "--splits",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identity verified: true"));
    let o = bt(&[
        "stein",
        "cube-span",
        "--tree",
        "0,10,11",
        "--merges",
        "1",
        "--splits",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = bt(&["stein", "check", "--radius", "3", "--braid-bound", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn dot_export() {
    let dir = std::env::temp_dir().join(format!("bthompson-dot-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join("k4.dot");
    let o = bt(&[
        "complex",
        "matching",
        "--complete",
        "4",
        "--dot",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = fs::read_to_string(&p).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("--").count(), 3);
}
