use std::io::Write;
use std::process::{Command, Stdio};

use empire_cli::{run, SOLVER_CAP_VAR};
use serde_json::Value;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn empire(args: &[&str], stdin: &str) -> Out {
    empire_with_cap(args, stdin, None)
}

fn empire_with_cap(args: &[&str], stdin: &str, cap: Option<&str>) -> Out {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("empire").chain(args.iter().copied());
    let code = run(argv, cap, &mut stdin.as_bytes(), &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn bound_examples() {
    let out = empire(&["bound", "--genus", "3", "--empires", "2"], "");
    assert_eq!(out.code, 0);
    let v = json(&out.stdout);
    assert_eq!(v["upper"], 14);
    assert_eq!(v["lower"], 14);
    assert_eq!(v["status"], "exact");

    let out = empire(&["bound", "--genus", "1", "--empires", "2"], "");
    assert_eq!(json(&out.stdout)["upper"], 13);

    let out = empire(&["bound", "--table", "2", "2"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with('|'));
}

#[test]
fn slack_examples() {
    let v = json(&empire(&["slack", "--genus", "3", "--empires", "2"], "").stdout);
    assert_eq!(v["slack"], 5);
    assert_eq!(v["h"], 14);
    let v = json(&empire(&["slack", "--genus", "3", "--empires", "3"], "").stdout);
    assert_eq!(v["slack"], 2);
    assert_eq!(
        empire(&["slack", "--edges", "6", "--countries", "4"], "").stdout.trim(),
        "0"
    );
}

#[test]
fn word_examples() {
    assert_eq!(empire(&["word", "--genus", "A B A' B'"], "").stdout.trim(), "1");
    assert_eq!(
        empire(&["word", "--genus", "ABCDEFA'B'C'D'E'F'"], "").stdout.trim(),
        "3"
    );
    let out = empire(
        &[
            "word",
            "--rewrite",
            "2",
            "--label",
            "C",
            "--split",
            "3",
            "ABA'B'CDC'D'EFE'F'",
        ],
        "",
    );
    assert_eq!(out.stdout.trim(), "A B A' C D C' B' D' E F E' F'");
    let out = empire(&["word", "--genus", "A B A B'"], "");
    assert_eq!(out.code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(empire(&["frobnicate"], "").code, 2);
    assert_eq!(empire(&["bound", "--genus", "x", "--empires", "2"], "").code, 2);
    assert_eq!(empire(&["verify"], "").code, 2);
    let out = empire_with_cap(&["bound", "--genus", "1", "--empires", "1"], "", Some("lots"));
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains(SOLVER_CAP_VAR));
}

#[test]
fn domain_errors_exit_one() {
    let out = empire(&["wessel", "--empires", "3"], "");
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error:"));
    let out = empire(&["--error-json", "colour"], "not json");
    assert_eq!(out.code, 1);
    assert_eq!(json(&out.stdout)["kind"], "parse");
}

#[test]
fn builtin_pipes_into_verify_and_colour() {
    let out = empire(&["builtin", "j14-2", "--warnings"], "");
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("prime"), "{}", out.stderr);
    let table = out.stdout;

    let verified = empire(&["verify", "--jnm", "14", "2"], &table);
    assert_eq!(verified.code, 0);
    assert_eq!(json(&verified.stdout)["passed"], true);
    assert_eq!(empire(&["verify", "--jnm", "15", "2"], &table).code, 1);

    assert_eq!(empire(&["colour"], &table).stdout.trim(), "14");
    let out = empire(&["colour", "--six-m", "2"], &table);
    assert_eq!(out.code, 1);

    let collapsed = json(&empire(&["collapse"], &table).stdout);
    assert_eq!(collapsed["edges"].as_array().unwrap().len(), 91);
    assert_eq!(empire(&["genus", "--lower-bound"], &table).stdout.trim(), "3");
}

#[test]
fn wessel_round_trips_through_other_commands() {
    let out = empire(&["wessel", "--empires", "2"], "");
    assert_eq!(out.code, 0);
    let text = out.stdout;
    let v = json(&text);
    assert!(v.get("empire_graph").is_some() && v.get("rotation_system").is_some());

    assert_eq!(empire(&["verify", "--jnm", "12", "2", "--uniform"], &text).code, 0);
    assert_eq!(empire(&["verify", "--jnm", "12", "1"], &text).code, 1);
    assert_eq!(empire(&["verify", "--jnm", "12", "2"], &text).code, 0);
    assert_eq!(json(&empire(&["genus"], &text).stdout)["genus"], 0);
    assert_eq!(empire(&["colour", "--six-m", "2"], &text).stdout.trim(), "12");

    let w = json(&empire(&["colour", "--witness"], &text).stdout);
    assert_eq!(w["count"], 12);
    assert_eq!(w["colours"].as_object().unwrap().len(), 12);

    let dual = json(&empire(&["dual"], &text).stdout);
    assert_eq!(dual["vertices"].as_array().unwrap().len(), 44);

    let split = json(&empire(&["wessel", "--empires", "7", "--no-connectify"], "").stdout);
    let genus = json(&empire(&["genus"], &split.to_string()).stdout);
    assert_eq!(genus["connected"], false);
    assert!(genus["component_genera"].as_array().unwrap().iter().all(|g| g == 0));
}

#[test]
fn dot_output() {
    let out = empire(&["wessel", "--empires", "2", "--dot"], "");
    assert!(out.stdout.starts_with("graph"));
    let out = empire(
        &["colour", "--format", "dot"],
        &empire(&["builtin", "j14-2"], "").stdout,
    );
    assert!(out.stdout.contains("fillcolor"));
}

#[test]
fn solver_cap_is_enforced() {
    let table = empire(&["builtin", "j14-2"], "").stdout;
    let out = empire_with_cap(&["--error-json", "colour"], &table, Some("10"));
    assert_eq!(out.code, 1);
    assert_eq!(json(&out.stdout)["kind"], "too-large");
}

#[test]
fn decompose_prints_paths() {
    let out = empire(&["decompose", "--n", "3"], "");
    let paths: Vec<Vec<usize>> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(paths.len(), 3);
    assert!(paths.iter().all(|p| p.len() == 6));
}

#[test]
fn binary_reads_environment_and_stdin() {
    let exe = env!("CARGO_BIN_EXE_empire");
    let table = Command::new(exe).args(["builtin", "j14-2"]).output().unwrap();
    assert!(table.status.success());

    let mut child = Command::new(exe)
        .arg("colour")
        .env(SOLVER_CAP_VAR, "5")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&table.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = Command::new(exe).arg("--nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
