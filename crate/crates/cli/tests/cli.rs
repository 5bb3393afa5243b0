use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(rel)
}

fn bpmnlint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bpmnlint"))
        .args(args)
        .env_remove("BPMNLINT_CONFIG")
        .output()
        .expect("spawn bpmnlint")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn path_arg(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn clean_model_exits_zero() {
    let clean = fixture("clean.bpmn");
    let out = bpmnlint(&["check", path_arg(&clean)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out), "0 errors, 0 warnings in 1 model(s)\n");
}

#[test]
fn composite_faulty_model_reports_the_ten_rules() {
    let model = fixture("composite.bpmn");
    let out = bpmnlint(&["check", path_arg(&model), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    let counts = doc["counts"].as_object().expect("counts");
    for id in ["FC-04", "FC-14", "FC-17", "FC-15", "FC-27", "FC-78", "FC-55", "BP-06", "BP-16", "BP-26"] {
        assert!(counts.get(id).and_then(|v| v.as_u64()).unwrap_or(0) >= 1, "{id} missing");
    }
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["version", "models", "diagnostics", "counts"]);
    assert_eq!(doc["version"], 1);
    let first = doc["diagnostics"][0].as_object().expect("diagnostic");
    let keys: Vec<&str> = first.keys().map(String::as_str).collect();
    assert_eq!(keys, ["rule", "severity", "element", "name", "container", "file", "message"]);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let model = fixture("composite.bpmn");
    let text = stdout(&bpmnlint(&["check", path_arg(&model), "--format", "json"]));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut again = serde_json::to_string_pretty(&doc).unwrap();
    again.push('\n');
    assert_eq!(text, again);
}

#[test]
fn text_lines_follow_the_report_format() {
    let model = fixture("composite.bpmn");
    let text = stdout(&bpmnlint(&["check", path_arg(&model)]));
    let lines: Vec<&str> = text.lines().collect();
    let (summary, body) = lines.split_last().unwrap();
    assert!(summary.ends_with("in 1 model(s)"), "{summary}");
    for line in body {
        let mut words = line.splitn(3, ' ');
        let sev = words.next().unwrap();
        let rule = words.next().unwrap();
        assert!(["ERROR", "WARNING", "INFO"].contains(&sev), "{line}");
        assert!(rule.len() == 5 && rule.as_bytes()[2] == b'-' || rule.starts_with("M-"), "{line}");
        assert!(words.next().unwrap().matches(" : ").count() >= 2, "{line}");
    }
}

#[test]
fn rules_lists_every_descriptor() {
    let out = bpmnlint(&["rules"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 121);
    let ids: BTreeSet<&str> = text.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids.len(), 121);
    let standard = stdout(&bpmnlint(&["rules", "--profile", "standard"]));
    assert_eq!(standard.lines().count(), 89);
}

#[test]
fn explain_names_the_rule() {
    let out = bpmnlint(&["explain", "fc-27"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("FC-27"));
    assert_eq!(bpmnlint(&["explain", "XX-1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bpmnlint(&[]).status.code(), Some(2));
    assert_eq!(bpmnlint(&["check"]).status.code(), Some(2));
    assert_eq!(bpmnlint(&["check", "--format", "yaml", "x.bpmn"]).status.code(), Some(2));
    assert_eq!(bpmnlint(&["check", "/nonexistent/model.bpmn"]).status.code(), Some(2));
    let clean = fixture("clean.bpmn");
    assert_eq!(bpmnlint(&["check", "--disable", "ZZ-99", path_arg(&clean)]).status.code(), Some(2));
}

#[test]
fn config_file_and_overrides_shape_the_run() {
    let model = fixture("composite.bpmn");
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("lint.cfg");
    std::fs::write(&cfg, "profile = standard\nrule.FC-27 = off\n").unwrap();
    let out = bpmnlint(&["check", path_arg(&model), "--format", "json", "--config", path_arg(&cfg)]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let counts = doc["counts"].as_object().unwrap();
    assert!(!counts.contains_key("FC-27"));
    assert!(!counts.keys().any(|k| k.starts_with("BP-")));
    assert!(counts.contains_key("FC-04"));

    // The environment variable is the fallback for --config.
    let via_env = Command::new(env!("CARGO_BIN_EXE_bpmnlint"))
        .args(["check", path_arg(&model), "--format", "json"])
        .env("BPMNLINT_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(stdout(&via_env), stdout(&out));

    let back = bpmnlint(&[
        "check", path_arg(&model), "--format", "json", "--config", path_arg(&cfg), "--enable", "FC-27",
    ]);
    assert!(stdout(&back).contains("\"FC-27\""));
}

#[test]
fn fail_threshold_decides_the_exit_code() {
    // Best-practice findings only are warnings: fine by default, fatal
    // under --fail-on warning.
    let bp = fixture("rules/BP-01-bad.bpmn");
    let out = bpmnlint(&["check", path_arg(&bp)]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(bpmnlint(&["check", path_arg(&bp), "--fail-on", "warning"]).status.code(), Some(1));
}

#[test]
fn multiple_files_are_sorted_and_summarised() {
    let a = fixture("composite.bpmn");
    let b = fixture("clean.bpmn");
    let json = stdout(&bpmnlint(&["check", path_arg(&a), path_arg(&b), "--format", "json"]));
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let models: Vec<&str> = doc["models"].as_array().unwrap().iter().map(|m| m.as_str().unwrap()).collect();
    let mut sorted = models.clone();
    sorted.sort();
    assert_eq!(models, sorted);
    assert_eq!(models.len(), 2);

    let summary = stdout(&bpmnlint(&["check", path_arg(&a), path_arg(&b), "--summary"]));
    assert!(summary.ends_with("in 2 model(s)\n"));
    let counts: Vec<usize> = summary
        .lines()
        .filter(|l| l.ends_with('%'))
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(!counts.is_empty());
    assert!(counts.windows(2).all(|w| w[0] >= w[1]), "histogram is not sorted: {counts:?}");
}

#[test]
fn whole_directory_is_accepted() {
    let dir = fixture("structural");
    let out = bpmnlint(&["check", path_arg(&dir)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).ends_with("in 3 model(s)\n"));
}
