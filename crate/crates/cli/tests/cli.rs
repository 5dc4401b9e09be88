//! End-to-end behavior of the `defect` binary: flag handling, exit codes,
//! stream discipline (data on stdout, diagnostics on stderr), and the
//! stability of the emitted formats.

use std::io::Write;
use std::process::{Command, Stdio};

const K3: &str = "3 3\n0 1\n0 2\n1 2\n";

fn defect(args: &[&str], stdin: Option<&str>) -> (String, String, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_defect"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .expect("stdin piped")
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().expect("binary exits");
    (
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
        out.status.code().unwrap_or(-1),
    )
}

fn write_file(dir: &tempfile::TempDir, name: &str, content: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, content).expect("temp file writes");
    path.to_str().expect("utf-8 path").to_owned()
}

#[test]
fn params_emits_the_derived_pair() {
    let (out, err, code) = defect(&["params", "-t", "2"], None);
    assert_eq!(out, "{\"t\":2,\"r\":12.577764887618457,\"s\":317}\n");
    assert!(err.is_empty());
    assert_eq!(code, 0);
}

#[test]
fn params_text_format_is_line_oriented() {
    let (out, _, code) = defect(&["params", "-t", "2", "--format", "text"], None);
    assert_eq!(out, "t = 2\nr = 12.577764887618457\ns = 317\n");
    assert_eq!(code, 0);
}

#[test]
fn params_accepts_overrides_and_rejects_bad_coefficients() {
    let (out, _, code) = defect(&["params", "-t", "2", "--density-override", "1.5"], None);
    assert_eq!(out, "{\"t\":2,\"r\":1.5,\"s\":5}\n");
    assert_eq!(code, 0);
    let (out, err, code) = defect(&["params", "-t", "2", "-C", "0"], None);
    assert!(out.is_empty(), "errors must not reach stdout");
    assert!(err.contains("positive"));
    assert_eq!(code, 2);
}

#[test]
fn color_emits_partition_json_in_fixed_field_order() {
    let (out, err, code) = defect(&["color", "-t", "2", "-"], Some(K3));
    assert!(out.starts_with("{\"t\":2,\"s\":317,\"r\":12.577764887618457,\"parts\":"));
    assert!(out.trim_end().ends_with("\"trace_len\":4}"));
    assert!(err.is_empty());
    assert_eq!(code, 0);
}

#[test]
fn color_reports_stuck_with_hint_and_exit_one() {
    let (out, _, code) = defect(&["color", "-t", "2", "-", "--s-override", "1"], Some(K3));
    assert_eq!(
        out,
        "{\"stuck\":true,\"remaining_vertices\":[0,1,2],\"hint\":\"K_3 minor present if parameters valid\"}\n"
    );
    assert_eq!(code, 1);
}

#[test]
fn color_text_format_lists_parts() {
    let (out, _, code) = defect(&["color", "-t", "2", "-", "--format", "text"], Some(K3));
    assert_eq!(out, "colored: t = 2, s = 317, trace_len = 4\npart 0: 2\npart 1: 0 1\n");
    assert_eq!(code, 0);
}

#[test]
fn color_rejects_missing_and_malformed_files() {
    let (out, err, code) = defect(&["color", "-t", "2", "/nonexistent/graph.txt"], None);
    assert!(out.is_empty());
    assert!(err.contains("/nonexistent/graph.txt"));
    assert_eq!(code, 2);
    let (_, err, code) = defect(&["color", "-t", "2", "-"], Some("2 1\n0 0\n"));
    assert!(err.contains("line 2"), "diagnostic names the offending line: {err}");
    assert_eq!(code, 2);
}

#[test]
fn verify_round_trips_a_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(&dir, "k3.txt", K3);
    let (partition, _, code) = defect(&["color", "-t", "2", &graph], None);
    assert_eq!(code, 0);
    let partfile = write_file(&dir, "part.json", &partition);
    let (out, _, code) = defect(&["verify", "-s", "317", &graph, &partfile], None);
    assert_eq!(out, "{\"ok\":true,\"violations\":[]}\n");
    assert_eq!(code, 0);
}

#[test]
fn verify_reports_violations_and_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(&dir, "k3.txt", K3);
    let partfile = write_file(&dir, "bad.json", "{\"parts\":[[0,1,2],[]]}");
    let (out, _, code) = defect(&["verify", "-s", "1", &graph, &partfile], None);
    assert!(out.starts_with("{\"ok\":false,"));
    assert!(out.contains("within-part degree"));
    assert_eq!(code, 1);
    let (out, _, code) =
        defect(&["verify", "-s", "1", &graph, &partfile, "--format", "text"], None);
    assert!(out.starts_with("violations ("));
    assert_eq!(code, 1);
}

#[test]
fn verify_rejects_double_stdin_and_bad_json() {
    let (_, err, code) = defect(&["verify", "-s", "5", "-", "-"], Some(K3));
    assert!(err.contains("standard input"));
    assert_eq!(code, 2);
    let dir = tempfile::tempdir().unwrap();
    let graph = write_file(&dir, "k3.txt", K3);
    let partfile = write_file(&dir, "broken.json", "not json");
    let (_, err, code) = defect(&["verify", "-s", "5", &graph, &partfile], None);
    assert!(err.contains("broken.json"));
    assert_eq!(code, 2);
}

#[test]
fn sharp_emits_the_tight_example_edge_list() {
    let (out, _, code) = defect(&["sharp", "-s", "1", "-t", "2"], None);
    assert_eq!(out, "3 2\n0 2\n1 2\n");
    assert_eq!(code, 0);
}

#[test]
fn sharp_guards_against_exponential_blowup() {
    let (out, err, code) = defect(&["sharp", "-s", "1", "-t", "30"], None);
    assert!(out.is_empty());
    assert!(err.contains("cap"));
    assert_eq!(code, 3);
}

#[test]
fn minor_exit_codes_distinguish_found_absent_timeout() {
    let (out, _, code) = defect(&["minor", "-k", "3", "-"], Some(K3));
    assert_eq!(out, "{\"k\":3,\"outcome\":\"found\",\"branch_sets\":[[0],[1],[2]]}\n");
    assert_eq!(code, 1);
    let (out, _, code) = defect(&["minor", "-k", "4", "-"], Some(K3));
    assert_eq!(out, "{\"k\":4,\"outcome\":\"absent\"}\n");
    assert_eq!(code, 0);
    let (out, _, code) = defect(&["minor", "-k", "3", "--budget", "1", "-"], Some(K3));
    assert_eq!(out, "{\"k\":3,\"outcome\":\"timeout\"}\n");
    assert_eq!(code, 3);
}

#[test]
fn oracle_reports_the_exact_defect_and_guards_size() {
    let (out, _, code) = defect(&["oracle", "-p", "2", "-"], Some(K3));
    assert_eq!(out, "{\"parts\":2,\"min_defect\":1}\n");
    assert_eq!(code, 0);
    let (out, err, code) = defect(&["oracle", "-p", "2", "-"], Some("20 0\n"));
    assert!(out.is_empty());
    assert!(err.contains("caps at 14"));
    assert_eq!(code, 3);
}

#[test]
fn gen_subcommands_emit_parseable_edge_lists() {
    for args in [
        vec!["gen", "forest", "-n", "12", "--seed", "5"],
        vec!["gen", "ktree", "-n", "9", "-k", "2", "--seed", "5"],
        vec!["gen", "grid", "--width", "3", "--height", "4"],
        vec!["gen", "random", "-n", "8", "-p", "0.4", "--seed", "5"],
    ] {
        let (out, err, code) = defect(&args, None);
        assert_eq!(code, 0, "{args:?}: {err}");
        let g = defect_core::edgelist::parse_edge_list(&out).expect("gen output parses");
        let header = out.lines().next().unwrap().to_owned();
        assert_eq!(header, format!("{} {}", g.original_len(), g.size()));
    }
}

#[test]
fn gen_rejects_invalid_parameters() {
    let (_, err, code) = defect(&["gen", "random", "-n", "5", "-p", "1.5"], None);
    assert!(err.contains("probability"));
    assert_eq!(code, 2);
    let (_, err, code) = defect(&["gen", "ktree", "-n", "2", "-k", "3"], None);
    assert!(err.contains("at least"));
    assert_eq!(code, 2);
}

#[test]
fn density_check_exit_reflects_the_verdict() {
    let (out, _, code) = defect(&["density-check", "-t", "2", "-"], Some(K3));
    assert!(out.starts_with("{\"holds\":true,\"lhs\":3,"));
    assert_eq!(code, 0);
    let (out, _, code) = defect(&["density-check", "-t", "0", "-"], Some(K3));
    assert_eq!(out, "{\"holds\":false,\"lhs\":3,\"rhs\":0.0}\n");
    assert_eq!(code, 1);
    let (_, err, code) = defect(&["density-check", "-t", "2", "-C", "-1", "-"], Some(K3));
    assert!(err.contains("positive"));
    assert_eq!(code, 2);
}

#[test]
fn usage_errors_exit_two() {
    let (_, _, code) = defect(&["color"], None); // missing -t and FILE
    assert_eq!(code, 2);
    let (_, _, code) = defect(&["no-such-command"], None);
    assert_eq!(code, 2);
    let (_, _, code) = defect(&["minor", "-k", "0", "-"], Some(K3));
    assert_eq!(code, 2);
    let (_, _, code) = defect(&["oracle", "-p", "0", "-"], Some(K3));
    assert_eq!(code, 2);
}

#[test]
fn help_and_version_exit_zero() {
    let (out, _, code) = defect(&["--help"], None);
    assert!(out.contains("Usage"));
    assert_eq!(code, 0);
    let (out, _, code) = defect(&["--version"], None);
    assert!(out.contains("defect"));
    assert_eq!(code, 0);
}

#[test]
fn stdin_dash_reads_a_graph() {
    let (out, _, code) = defect(&["oracle", "-p", "1", "-"], Some("2 1\n0 1\n"));
    assert_eq!(out, "{\"parts\":1,\"min_defect\":1}\n");
    assert_eq!(code, 0);
}
