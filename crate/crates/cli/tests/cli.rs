//! End-to-end checks of the command-line surface.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobi-stirling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8")
}

#[test]
fn table_json_has_expected_row() {
    let text = stdout(&["table", "--kind", "JS", "--nmax", "4", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["kind"], "JS");
    assert_eq!(
        parsed["rows"][4][2],
        serde_json::json!(["21", "24", "7"])
    );
    // zero cell in the k = 0 column
    assert_eq!(parsed["rows"][3][0], serde_json::json!([]));
}

#[test]
fn table_json_round_trips() {
    for kind in ["JS", "js", "S", "s", "U", "u", "V", "v", "LS", "ls"] {
        let text = stdout(&["table", "--kind", kind, "--nmax", "5", "--format", "json"]);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let mut reemitted = serde_json::to_string(&parsed).unwrap();
        reemitted.push('\n');
        assert_eq!(text, reemitted, "kind {kind}");
    }
}

#[test]
fn stirling_table_first_rows() {
    let text = stdout(&["table", "--kind", "S", "--nmax", "1", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["rows"], serde_json::json!([["1"], ["0", "1"]]));
}

#[test]
fn ls_table_values() {
    let text = stdout(&["table", "--kind", "LS", "--nmax", "3", "--format", "csv"]);
    assert!(text.contains("3,0,4,8,1"), "{text}");
    let text = stdout(&["table", "--kind", "ls", "--nmax", "3", "--format", "csv"]);
    assert!(text.contains("3,0,12,-8,1"), "{text}");
}

#[test]
fn table_z_evaluation() {
    // z = 1 turns the second-kind triangle into the Legendre-Stirling one
    let at_one = stdout(&["table", "--kind", "JS", "--nmax", "3", "--z", "1", "--format", "csv"]);
    let ls = stdout(&["table", "--kind", "LS", "--nmax", "3", "--format", "csv"]);
    assert_eq!(at_one, ls);
    // z = -1 zeroes the k = 1 column beyond n = 1
    let at_minus = stdout(&["table", "--kind", "JS", "--nmax", "3", "--z", "-1", "--format", "csv"]);
    assert!(at_minus.contains("3,0,0,2,1"), "{at_minus}");
    // exact rational points work too
    let half = stdout(&["table", "--kind", "js", "--nmax", "2", "--z", "1/2", "--format", "text"]);
    assert!(half.contains("-3/2"), "{half}");
    // integer kinds reject the flag
    assert_eq!(
        run(&["table", "--kind", "V", "--nmax", "3", "--z", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_riordan_count() {
    let text = stdout(&["enumerate", "--family", "riordan", "--n", "2", "--k", "1"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[10], "{\"count\":10}");
    // every object line parses as JSON
    for line in &lines[..10] {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn enumerate_trivial_and_graded_families() {
    let text = stdout(&["enumerate", "--family", "signed", "--n", "3", "--k", "3"]);
    assert_eq!(
        text,
        "[[],[-1,1],[-2,2],[-3,3]]\n{\"count\":1}\n"
    );
    let text = stdout(&[
        "enumerate", "--family", "quasipair", "--n", "3", "--k", "2", "--i", "1",
    ]);
    assert!(text.ends_with("{\"count\":3}\n"), "{text}");
}

#[test]
fn verify_passes_and_is_deterministic_across_jobs() {
    let once = stdout(&["verify", "--scope", "all", "--nmax", "4", "--jobs", "1"]);
    let eight = stdout(&["verify", "--scope", "all", "--nmax", "4", "--jobs", "8"]);
    assert_eq!(once, eight);
    assert!(once.contains("verify: 22/22 checks passed"));
}

#[test]
fn verify_vacuous_scope() {
    let text = stdout(&["verify", "--scope", "triangles", "--nmax", "0"]);
    assert!(text.contains("4/4 checks passed"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        run(&["table", "--kind", "QQ", "--nmax", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["table", "--kind", "JS", "--nmax", "900"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--family", "riordan", "--n", "9", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--scope", "bogus"]).status.code(),
        Some(2)
    );
    // missing required flag goes through clap, which also exits 2
    assert_eq!(run(&["table"]).status.code(), Some(2));
}
