//! Model and engine invariants, checked on the fixture corpus and on
//! randomly built models.

mod common;

use std::collections::BTreeMap;
use std::path::PathBuf;

use bpmnlint_core::engine::{self, RuleSetting};
use bpmnlint_core::graph::{Graph, TokenMode};
use bpmnlint_core::model::NodeKind;
use bpmnlint_core::rules::{self, Category, Ctx};
use bpmnlint_core::xmlio::{self, ModelBuilder, NodeSpec, TriggerSpec};
use bpmnlint_core::{BpmnModel, Diagnostic, LintConfig, Severity};
use proptest::prelude::*;

fn corpus() -> Vec<PathBuf> {
    let mut paths: Vec<PathBuf> = walk(&common::fixtures());
    paths.sort();
    paths
}

fn walk(dir: &std::path::Path) -> Vec<PathBuf> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).expect("fixture dir") {
        let p = entry.expect("dir entry").path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else if p.extension().is_some_and(|e| e == "bpmn") {
            out.push(p);
        }
    }
    out
}

fn assert_partition_and_indices(m: &BpmnModel) {
    for node in m.nodes() {
        let kinds = [node.is_activity(), node.event().is_some(), node.is_gateway()];
        assert_eq!(kinds.iter().filter(|&&k| k).count(), 1, "{} is not exactly one kind", node.id);
        assert!(matches!(node.kind, NodeKind::Activity(_) | NodeKind::Event(_) | NodeKind::Gateway(_)));
    }
    for f in m.flow_ids() {
        let flow = m.flow(f);
        assert!(m.node(flow.source).outgoing.contains(&f), "{} missing from source outgoing", flow.id);
        assert!(m.node(flow.target).incoming.contains(&f), "{} missing from target incoming", flow.id);
    }
    for n in m.node_ids() {
        for &f in &m.node(n).outgoing {
            assert_eq!(m.flow(f).source, n);
        }
        for &f in &m.node(n).incoming {
            assert_eq!(m.flow(f).target, n);
        }
    }
}

fn assert_count_law(diags: &[Diagnostic], counts: &BTreeMap<String, usize>) {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for d in diags {
        *seen.entry(d.rule_id.clone()).or_default() += 1;
    }
    assert_eq!(&seen, counts);
}

fn assert_severity_law(diags: &[Diagnostic]) {
    for d in diags {
        match Category::from_prefix(d.rule_id.split('-').next().unwrap_or("")) {
            Some(Category::BestPractice) => assert!(d.severity <= Severity::Warning, "{d:?}"),
            Some(_) => assert_eq!(d.severity, Severity::Error, "{d:?}"),
            None => {}
        }
    }
}

fn check_all_groups(m: &BpmnModel) -> Vec<Vec<rules::Finding>> {
    let graph = Graph::new(m);
    let cx = Ctx { model: m, graph: &graph, abstraction_pairs: &[] };
    rules::groups().iter().map(|g| (g.check)(&cx)).collect()
}

#[test]
fn corpus_partition_and_index_integrity() {
    for p in corpus() {
        assert_partition_and_indices(&common::load(&p));
    }
}

#[test]
fn corpus_loads_idempotently() {
    for p in corpus() {
        assert_eq!(common::load(&p), common::load(&p), "{}", p.display());
    }
}

#[test]
fn corpus_count_and_severity_laws() {
    for p in corpus() {
        let report = common::lint(&p);
        assert_count_law(&report.diagnostics, &report.counts);
        assert_severity_law(&report.diagnostics);
        let standard = engine::run(&common::load(&p), &LintConfig::standard()).expect("lint");
        assert_count_law(&standard.diagnostics, &standard.counts);
        assert_severity_law(&standard.diagnostics);
    }
}

#[test]
fn corpus_rules_are_pure() {
    for p in corpus() {
        let m = common::load(&p);
        assert_eq!(check_all_groups(&m), check_all_groups(&m), "{}", p.display());
    }
}

// ---------------------------------------------------------------------------
// Random models

const SPECS: &[fn() -> NodeSpec] = &[
    || NodeSpec::Start(TriggerSpec::None),
    || NodeSpec::Start(TriggerSpec::Message),
    || NodeSpec::Start(TriggerSpec::Timer),
    || NodeSpec::End(TriggerSpec::None),
    || NodeSpec::End(TriggerSpec::Terminate),
    || NodeSpec::End(TriggerSpec::Error(Some("Failure".into()))),
    || NodeSpec::End(TriggerSpec::Signal(Some("Go".into()))),
    || NodeSpec::Task,
    || NodeSpec::UserTask,
    || NodeSpec::SendTask,
    || NodeSpec::ReceiveTask,
    || NodeSpec::ScriptTask,
    || NodeSpec::CatchEvent(TriggerSpec::Timer),
    || NodeSpec::CatchEvent(TriggerSpec::Message),
    || NodeSpec::CatchEvent(TriggerSpec::Link(Some("L".into()))),
    || NodeSpec::CatchEvent(TriggerSpec::Signal(Some("Go".into()))),
    || NodeSpec::ThrowEvent(TriggerSpec::Link(Some("L".into()))),
    || NodeSpec::ThrowEvent(TriggerSpec::None),
    || NodeSpec::ExclusiveGateway,
    || NodeSpec::ParallelGateway,
    || NodeSpec::InclusiveGateway,
    || NodeSpec::EventBasedGateway,
    || NodeSpec::ComplexGateway,
];

const NAMES: &[Option<&str>] = &[None, Some("Check order"), Some("Ship"), Some("Ship "), Some("  "), Some("Order received")];

#[derive(Clone, Debug)]
struct Recipe {
    /// Spec index and name index per node.
    nodes: Vec<(usize, usize)>,
    /// Source, target, conditional.
    edges: Vec<(usize, usize, bool)>,
    /// Nodes whose first conditional outgoing flow becomes the default.
    defaults: Vec<usize>,
    /// Nodes to place inside an embedded sub-process.
    nested: Vec<usize>,
    /// Second pool with a message flow from node to a receiving task.
    message_from: Option<usize>,
}

fn recipe() -> impl Strategy<Value = Recipe> {
    (2usize..12)
        .prop_flat_map(|n| {
            (
                prop::collection::vec((0..SPECS.len(), 0..NAMES.len()), n),
                prop::collection::vec((0..n, 0..n, any::<bool>()), 0..2 * n),
                prop::collection::vec(0..n, 0..2),
                prop::collection::vec(0..n, 0..3),
                prop::option::of(0..n),
            )
        })
        .prop_map(|(nodes, edges, defaults, nested, message_from)| Recipe { nodes, edges, defaults, nested, message_from })
}

fn build(r: &Recipe, order: Option<&[usize]>) -> BpmnModel {
    let mut b = ModelBuilder::new("random.bpmn");
    b.new_process("p").unwrap();
    let nested = !r.nested.is_empty();
    if nested {
        b.add_node("p", "sub", NodeSpec::SubProcess).unwrap();
    }
    let home = |i: usize| if r.nested.contains(&i) { "sub" } else { "p" };
    let default_order: Vec<usize> = (0..r.nodes.len()).collect();
    for &i in order.unwrap_or(&default_order) {
        let (spec, name) = r.nodes[i];
        let id = format!("n{i}");
        b.add_node(home(i), &id, SPECS[spec]()).unwrap();
        if let Some(name) = NAMES[name] {
            b.set_name(&id, name).unwrap();
        }
    }
    let mut conditional: BTreeMap<usize, String> = BTreeMap::new();
    for &(s, t, cond) in &r.edges {
        let flow = if home(s) == home(t) {
            b.connect(&format!("n{s}"), &format!("n{t}"), cond.then_some("x > 0"))
        } else {
            b.connect_across(&format!("n{s}"), &format!("n{t}"), cond.then_some("x > 0"))
        }
        .unwrap();
        if cond {
            conditional.entry(s).or_insert(flow);
        }
    }
    for d in &r.defaults {
        if let Some(f) = conditional.get(d) {
            b.set_default(&format!("n{d}"), f).unwrap();
        }
    }
    if let Some(src) = r.message_from {
        b.new_process("q").unwrap();
        b.add_node("q", "inbox", NodeSpec::ReceiveTask).unwrap();
        b.add_participant("pool_p", Some("p")).unwrap();
        b.add_participant("pool_q", Some("q")).unwrap();
        b.add_message_flow("mf", &format!("n{src}"), "inbox").unwrap();
    }
    b.into_model()
}

fn with_workers(mut cfg: LintConfig, n: usize) -> LintConfig {
    cfg.workers = Some(n);
    cfg
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn built_models_keep_partition_and_indices(r in recipe()) {
        assert_partition_and_indices(&build(&r, None));
    }

    #[test]
    fn building_is_idempotent(r in recipe()) {
        prop_assert_eq!(build(&r, None), build(&r, None));
    }

    #[test]
    fn lint_is_deterministic_across_runs_and_workers(r in recipe()) {
        let m = build(&r, None);
        let one = engine::render_json(&engine::run(&m, &with_workers(LintConfig::strict(), 1)).unwrap());
        let again = engine::render_json(&engine::run(&m, &with_workers(LintConfig::strict(), 1)).unwrap());
        let many = engine::render_json(&engine::run(&m, &with_workers(LintConfig::strict(), 4)).unwrap());
        let pooled = engine::render_json(&engine::run(&m, &LintConfig::strict()).unwrap());
        prop_assert_eq!(&one, &again);
        prop_assert_eq!(&one, &many);
        prop_assert_eq!(&one, &pooled);
    }

    #[test]
    fn counts_and_severities_follow_the_laws(r in recipe(), strict in any::<bool>()) {
        let cfg = if strict { LintConfig::strict() } else { LintConfig::standard() };
        let report = engine::run(&build(&r, None), &cfg).unwrap();
        assert_count_law(&report.diagnostics, &report.counts);
        assert_severity_law(&report.diagnostics);
    }

    #[test]
    fn disabling_a_rule_leaves_the_others_alone(r in recipe(), pick in 0usize..121) {
        let m = build(&r, None);
        let full = engine::run(&m, &LintConfig::strict()).unwrap();
        // Prefer a rule that actually fired so the property has teeth.
        let fired: Vec<&str> = full.rule_ids().into_iter().filter(|id| !id.starts_with("M-")).collect();
        let victim = if fired.is_empty() {
            rules::catalog()[pick].id.to_string()
        } else {
            fired[pick % fired.len()].to_string()
        };
        let mut cfg = LintConfig::strict();
        cfg.set_rule(&victim, RuleSetting::Off).unwrap();
        let reduced = engine::run(&m, &cfg).unwrap();
        let rest: Vec<&Diagnostic> = full.diagnostics.iter().filter(|d| d.rule_id != victim).collect();
        let got: Vec<&Diagnostic> = reduced.diagnostics.iter().collect();
        prop_assert!(reduced.diagnostics.iter().all(|d| d.rule_id != victim));
        prop_assert_eq!(rest, got);
    }

    #[test]
    fn rule_checks_are_pure(r in recipe()) {
        let m = build(&r, None);
        prop_assert_eq!(check_all_groups(&m), check_all_groups(&m));
    }

    #[test]
    fn join_classification_ignores_declaration_order(
        (r, order) in recipe().prop_flat_map(|r| {
            let ids: Vec<usize> = (0..r.nodes.len()).collect();
            (Just(r), Just(ids).prop_shuffle())
        }),
        edge_order in Just((0usize..24).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let mut shuffled = r.clone();
        shuffled.edges = edge_order.iter().filter_map(|&i| r.edges.get(i).copied()).collect();
        let a = build(&r, None);
        let b = build(&shuffled, Some(&order));
        prop_assert_eq!(join_modes(&a), join_modes(&b));
    }

    #[test]
    fn unknown_attributes_are_not_fatal(key in "[a-z]{1,8}", value in "[ -~&&[^\"<&]]{0,12}") {
        let path = common::fixtures().join("clean.bpmn");
        let text = std::fs::read_to_string(&path).unwrap();
        let decorated = text
            .replace("<task ", &format!("<task {key}=\"{value}\" "))
            .replace("<process ", &format!("<process xmlns:ext=\"urn:x\" ext:{key}=\"{value}\" "));
        let m = xmlio::parse_bpmn(decorated.as_bytes(), "clean.bpmn").unwrap();
        let base = xmlio::parse_bpmn(text.as_bytes(), "clean.bpmn").unwrap();
        let cfg = LintConfig::strict();
        prop_assert_eq!(
            engine::render_json(&engine::run(&m, &cfg).unwrap()),
            engine::render_json(&engine::run(&base, &cfg).unwrap())
        );
    }
}

/// Join modes keyed by element ids: join id → sorted (source id, mode).
fn join_modes(m: &BpmnModel) -> BTreeMap<String, Vec<(String, TokenMode)>> {
    let graph = Graph::new(m);
    let mut out = BTreeMap::new();
    for n in m.node_ids() {
        if m.node(n).incoming.len() < 2 {
            continue;
        }
        let Ok(modes) = graph.classify_incoming(n) else { continue };
        let mut rows: Vec<(String, TokenMode)> =
            modes.into_iter().map(|(f, mode)| (m.node(m.flow(f).source).id.clone(), mode)).collect();
        rows.sort();
        out.insert(m.node(n).id.clone(), rows);
    }
    out
}
