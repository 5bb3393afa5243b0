//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bpmnlint_core::{engine, rules, xmlio, Category, LintConfig};
use common::oracle::{families, compare, Tally};
use rayon::prelude::*;

/// Detection experiment: wall-clock budget for loading and linting the
/// composite faulty model.
const DETECTION_BUDGET: Duration = Duration::from_secs(1);
/// Whole per-rule fixture suite.
const SUITE_BUDGET: Duration = Duration::from_secs(30);
/// Largest graph size for the token oracle comparison.
const ORACLE_MAX_NODES: usize = 8;
/// Worker count compared against a single worker.
const MANY_WORKERS: usize = 4;

const DETECTION_RULES: [&str; 10] = ["FC-04", "FC-14", "FC-17", "FC-15", "FC-27", "FC-78", "FC-55", "BP-06", "BP-16", "BP-26"];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn detection() -> Verdict {
    let path = common::fixtures().join("composite.bpmn");
    let started = Instant::now();
    let model = xmlio::parse_file(&path).map_err(|e| e.to_string())?;
    let report = engine::run(&model, &LintConfig::strict()).map_err(|e| e.to_string())?;
    let took = started.elapsed();
    let ids = report.rule_ids();
    let missing: Vec<&str> = DETECTION_RULES.iter().copied().filter(|r| !ids.contains(r)).collect();
    let detail = format!("{}/10 detected in {took:.2?}", 10 - missing.len());
    if !missing.is_empty() {
        Err(format!("{detail}; missing {missing:?}"))
    } else if took >= DETECTION_BUDGET {
        Err(format!("{detail}; over {DETECTION_BUDGET:?}"))
    } else {
        Ok(detail)
    }
}

fn catalog() -> Verdict {
    let cat = rules::catalog();
    let listed = engine::list_rules(&LintConfig::strict());
    let mut problems = Vec::new();
    let mut counts = Vec::new();
    for (c, want) in [(Category::FlowControl, 85), (Category::DataFlow, 4), (Category::BestPractice, 32)] {
        let indices: BTreeSet<usize> = cat.iter().filter(|d| d.category == c).map(|d| d.index).collect();
        let n = cat.iter().filter(|d| d.category == c).count();
        counts.push(format!("{}={n}", c.prefix()));
        if n != want || indices != (1..=want).collect() {
            problems.push(format!("{} indices are not exactly 1..={want}", c.prefix()));
        }
        for d in cat.iter().filter(|d| d.category == c) {
            if d.id != format!("{}-{:02}", c.prefix(), d.index) || rules::descriptor(d.id) != Some(d) {
                problems.push(format!("{} does not round-trip", d.id));
            }
        }
    }
    if cat.len() != 121 || listed.len() != 121 {
        problems.push(format!("catalog {} / listed {}", cat.len(), listed.len()));
    }
    let detail = format!("{} rules ({})", cat.len(), counts.join(", "));
    if problems.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{detail}; {}", problems.join("; ")))
    }
}

fn fixture_suite() -> Verdict {
    let started = Instant::now();
    let failed: Vec<String> = rules::catalog()
        .iter()
        .filter_map(|d| common::check_pair(d.id).err().map(|e| format!("{}: {e}", d.id)))
        .collect();
    let took = started.elapsed();
    let passed = rules::catalog().len() - failed.len();
    let detail = format!("{passed}/{} pairs in {took:.2?}", rules::catalog().len());
    if !failed.is_empty() {
        Err(format!("{detail}; first failure {}", failed[0]))
    } else if took >= SUITE_BUDGET {
        Err(format!("{detail}; over {SUITE_BUDGET:?}"))
    } else {
        Ok(detail)
    }
}

fn token_oracle() -> Verdict {
    let started = Instant::now();
    let tally = families(ORACLE_MAX_NODES)
        .par_iter()
        .map(compare)
        .reduce(Tally::default, Tally::merge);
    let detail = format!(
        "{} graphs (<= {ORACLE_MAX_NODES} nodes), {} join pairs, {} disagreements in {:.1?}",
        tally.graphs,
        tally.pairs,
        tally.disagreements.len(),
        started.elapsed()
    );
    match tally.disagreements.first() {
        None if tally.pairs > 0 => Ok(detail),
        None => Err(format!("{detail}; nothing compared")),
        Some(first) => Err(format!("{detail}; first: {first}")),
    }
}

fn corpus() -> Vec<PathBuf> {
    let mut paths = Vec::new();
    let mut stack = vec![common::fixtures()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(dir).expect("fixture dir") {
            let p = entry.expect("dir entry").path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|e| e == "bpmn") {
                paths.push(p);
            }
        }
    }
    paths.sort();
    paths
}

fn determinism() -> Verdict {
    let models: Vec<_> = corpus().iter().map(|p| common::load(p)).collect();
    let refs: Vec<_> = models.iter().collect();
    let render = |workers: usize| {
        let mut cfg = LintConfig::strict();
        cfg.workers = Some(workers);
        engine::lint_many(&refs, &cfg).map(|r| engine::render_json(&r)).map_err(|e| e.to_string())
    };
    let first = render(1)?;
    let second = render(1)?;
    let many = render(MANY_WORKERS)?;
    let detail = format!("{} models, {} bytes of JSON", models.len(), first.len());
    if first != second {
        Err(format!("{detail}; repeated runs differ"))
    } else if first != many {
        Err(format!("{detail}; 1 vs {MANY_WORKERS} workers differ"))
    } else {
        Ok(format!("{detail}; identical across runs and 1 vs {MANY_WORKERS} workers"))
    }
}

fn structural() -> Verdict {
    let cases = [
        ("gateway-message-flow.bpmn", "M-MESSAGE-FLOW-ENDPOINT"),
        ("data-store-sequence-flow.bpmn", "M-WRONG-KIND"),
        ("message-flow-missing-endpoint.bpmn", "M-MISSING-ENDPOINT"),
    ];
    let mut problems = Vec::new();
    for (file, code) in cases {
        let path = common::fixtures().join("structural").join(file);
        let model = xmlio::parse_file(&path).map_err(|e| e.to_string())?;
        let found = engine::structural_check(&model);
        if !found.iter().any(|d| d.rule_id == code) {
            problems.push(format!("{file}: no {code} (got {:?})", found.iter().map(|d| &d.rule_id).collect::<Vec<_>>()));
        }
    }
    if problems.is_empty() {
        Ok("3/3 metamodel-derived violations reported at load".into())
    } else {
        Err(problems.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("detection", detection),
        ("catalog", catalog),
        ("fixture-suite", fixture_suite),
        ("token-oracle", token_oracle),
        ("determinism", determinism),
        ("structural", structural),
    ];
    let mut all_ok = true;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                all_ok = false;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
