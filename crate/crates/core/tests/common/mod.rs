#![allow(dead_code)]

pub mod oracle;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use bpmnlint_core::{engine, xmlio, BpmnModel, LintConfig, LintReport};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn rule_fixture(rule: &str, variant: &str) -> PathBuf {
    fixtures().join("rules").join(format!("{rule}-{variant}.bpmn"))
}

pub fn load(path: &Path) -> BpmnModel {
    xmlio::parse_file(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Strict config, plus the sidecar `.cfg` next to the fixture when present.
pub fn config_for(path: &Path) -> LintConfig {
    let side = path.with_extension("cfg");
    if side.exists() {
        LintConfig::load(&side).expect("sidecar config")
    } else {
        LintConfig::strict()
    }
}

pub fn lint(path: &Path) -> LintReport {
    let model = load(path);
    engine::run(&model, &config_for(path)).expect("lint")
}

/// Parses the `<!-- counts: k=v ... -->` header.
pub fn header_counts(path: &Path) -> BTreeMap<String, usize> {
    let text = std::fs::read_to_string(path).expect("read fixture");
    let line = text
        .lines()
        .find_map(|l| l.trim().strip_prefix("<!-- counts:"))
        .unwrap_or_else(|| panic!("{} has no counts header", path.display()));
    line.trim_end_matches("-->")
        .split_whitespace()
        .map(|kv| {
            let (k, v) = kv.split_once('=').expect("k=v");
            (k.to_string(), v.parse().expect("count"))
        })
        .collect()
}

pub fn model_counts(m: &BpmnModel) -> BTreeMap<String, usize> {
    [
        ("processes", m.processes().len()),
        ("participants", m.participants().len()),
        ("nodes", m.nodes().len()),
        ("sequence_flows", m.sequence_flows().len()),
        ("message_flows", m.message_flows().len()),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

/// Checks one rule's pair; `Err` describes what went wrong.
pub fn check_pair(rule: &str) -> Result<(), String> {
    let mut problems = Vec::new();
    for (variant, want) in [("ok", false), ("bad", true)] {
        let path = rule_fixture(rule, variant);
        if !path.exists() {
            problems.push(format!("{variant}: missing {}", path.display()));
            continue;
        }
        let report = lint(&path);
        let structural: Vec<_> = report
            .diagnostics
            .iter()
            .filter(|d| d.rule_id.starts_with("M-"))
            .map(|d| format!("{} {}", d.rule_id, d.message))
            .collect();
        if !structural.is_empty() {
            problems.push(format!("{variant}: structural findings {structural:?}"));
        }
        let hits = report.diagnostics.iter().filter(|d| d.rule_id == rule).count();
        if (hits > 0) != want {
            problems.push(format!("{variant}: {hits} finding(s) of {rule}"));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}
