use std::process::{Command, Output};

fn atomkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atomkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = atomkit(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn atoms_of_two_bar_one_bar() {
    assert_eq!(stdout(&["atoms", "-z", "-1,-2"]), "-2,-1\n1,-2\n");
    assert_eq!(
        stdout(&["atoms", "-z", "-1,-2", "--inverse"]),
        "-2,-1\n1,-2\n"
    );
}

#[test]
fn atoms_of_identity() {
    assert_eq!(stdout(&["atoms", "-z", "1,2"]), "1,2\n");
}

#[test]
fn atoms_of_w0_rank_four() {
    let fast = stdout(&["atoms", "-z", "-1,-2,-3,-4"]);
    assert_eq!(fast.lines().count(), 11);
    assert_eq!(fast, stdout(&["atoms", "-z", "-1,-2,-3,-4", "--brute"]));
}

#[test]
fn census_rank_five() {
    let out = stdout(&["census", "-n", "5", "--check"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("n\tclass\tr\tk\tenumerated\tformula\tmatch")
    );
    assert!(out.lines().any(|l| l == "5\ta\t-\t-\t64\t64\ttrue"));
    assert!(out.lines().skip(1).all(|l| l.ends_with("\ttrue")));
}

#[test]
fn census_without_check_leaves_match_blank() {
    let out = stdout(&["census", "-n", "7"]);
    assert!(out.lines().any(|l| l == "7\ta\t-\t-\t-\t320\t-"));
}

#[test]
fn hasse_dot_styles() {
    let dot = stdout(&[
        "hasse",
        "-z",
        "-1,-2,-3,-4",
        "--order",
        "ltB",
        "--format",
        "dot",
    ]);
    assert!(dot.starts_with("digraph \"ltB\" {"));
    assert_eq!(dot.matches(" -> ").count(), 10);
    assert!(dot.contains("style=solid"));
    assert!(dot.contains("style=dashed"));
}

#[test]
fn hasse_json_round_trips_windows() {
    let js = stdout(&[
        "hasse", "-z", "-1,-2,-3", "--order", "lllB", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    for e in v["elements"].as_array().unwrap() {
        let text: Vec<String> = e
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        let z = stdout(&["shape", "-w", &text.join(",")]);
        assert!(!z.is_empty());
    }
}

#[test]
fn ncsp_count() {
    assert_eq!(stdout(&["ncsp", "-z", "-1,-2,-3,-4"]).lines().count(), 6);
}

#[test]
fn nested_descent_example() {
    let out = stdout(&["nested", "-w", "-1,6,7,-2,3,4,8,-9,5"]);
    assert_eq!(
        out,
        "ndes\t(6,3) (7,-2) (8,-9)\nnfix\t4,5\nnneg\t1\nshape\t{-9,-8},{-1,1},{8,9}\nz\t-1,-7,6,4,5,3,-2,-8,-9\n"
    );
}

#[test]
fn word_counts() {
    assert_eq!(stdout(&["words", "--count", "-w", "3,2,1"]), "2\n");
    assert_eq!(stdout(&["words", "--count", "-w", "-1,-2"]), "2\n");
    assert_eq!(stdout(&["words", "-w", "-1,-2"]), "0,1,0,1\n1,0,1,0\n");
    assert_eq!(
        stdout(&["words", "--involution", "--count", "-w", "-1,-2,-3"]),
        "16\n"
    );
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "--suite", "identities", "-n", "3"]);
    assert!(!out.contains("FAIL"));
    for suite in ["oracle", "hecke", "shape", "census", "dyck"] {
        let out = stdout(&["verify", "--suite", suite, "-n", "3"]);
        assert!(out.lines().all(|l| l.ends_with(": pass")), "{suite}: {out}");
    }
}

#[test]
fn probe_reports() {
    let out = stdout(&["probe", "-z", "-1,-2,-3,-4", "--order", "llB", "--paranoid"]);
    assert_eq!(
        out.lines().nth(1),
        Some("-1,-2,-3,-4\t11\t12\t1\tyes/yes\tno\tno\tyes\tno")
    );
    let none = stdout(&["probe", "--lattice", "-n", "4"]);
    assert!(none.ends_with("# 0 of 76 posets are not lattices\n"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "hasse",
        "-z",
        "-1,-2,-3,4",
        "--order",
        "llB",
        "--format",
        "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(atomkit(&["atoms", "-z", "1,x"]).status.code(), Some(2));
    assert_eq!(atomkit(&["atoms", "-z", "1,1"]).status.code(), Some(2));
    assert_eq!(atomkit(&["atoms", "-z", "2,3,1"]).status.code(), Some(1));
    assert_eq!(
        atomkit(&["census", "-n", "12", "--check"]).status.code(),
        Some(1)
    );
    assert_eq!(atomkit(&["atoms", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        atomkit(&["ncsp", "-z", "-1", "--format", "dot"])
            .status
            .code(),
        Some(1)
    );
}
