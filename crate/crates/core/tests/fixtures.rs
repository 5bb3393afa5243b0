//! Every rule has a conforming and a violating fixture: the first must not
//! trip the rule, the second must.

mod common;

use std::time::{Duration, Instant};

use bpmnlint_core::rules;
use common::*;

#[test]
fn every_rule_pair_behaves() {
    let started = Instant::now();
    let failures: Vec<String> = rules::catalog()
        .iter()
        .filter_map(|d| check_pair(d.id).err().map(|e| format!("{}: {e}", d.id)))
        .collect();
    let took = started.elapsed();
    assert!(failures.is_empty(), "{} pair(s) failed:\n{}", failures.len(), failures.join("\n"));
    assert!(took < Duration::from_secs(30), "fixture suite took {took:?}");
}

#[test]
fn count_headers_match_loaded_models() {
    let dir = fixtures().join("rules");
    let mut checked = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("bpmn") {
            continue;
        }
        let model = load(&path);
        assert_eq!(header_counts(&path), model_counts(&model), "{}", path.display());
        checked += 1;
    }
    assert_eq!(checked, 2 * rules::catalog().len());
}
