//! Rule execution, configuration and report assembly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::model::*;
use crate::rules::{self, Category, Finding, RuleDescriptor};

const MAX_MESSAGE_LEN: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleSetting {
    Off,
    Level(Severity),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value `{value}` for `{key}`")]
    BadValue { line: usize, key: String, value: String },
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("unknown rule id `{0}`")]
    UnknownRule(String),
    #[error("abstraction names unknown process `{0}`")]
    UnknownProcess(String),
    #[error("cannot read config {path}: {reason}")]
    Io { path: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LintConfig {
    pub enabled_categories: BTreeSet<Category>,
    pub rule_overrides: BTreeMap<String, RuleSetting>,
    /// (abstract process, detailed process), by name or id.
    pub abstraction_pairs: Vec<(String, String)>,
    pub fail_threshold: Severity,
    /// Worker threads for [`lint_many`]; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for LintConfig {
    fn default() -> Self {
        LintConfig::strict()
    }
}

impl LintConfig {
    /// Flow-control and data-flow rules only.
    pub fn standard() -> Self {
        LintConfig {
            enabled_categories: [Category::FlowControl, Category::DataFlow].into(),
            rule_overrides: BTreeMap::new(),
            abstraction_pairs: Vec::new(),
            fail_threshold: Severity::Error,
            workers: None,
        }
    }

    /// Every rule, best practices included.
    pub fn strict() -> Self {
        let mut c = LintConfig::standard();
        c.enabled_categories.insert(Category::BestPractice);
        c
    }

    pub fn set_profile(&mut self, profile: &str) -> bool {
        match profile {
            "standard" => self.enabled_categories.remove(&Category::BestPractice),
            "strict" => self.enabled_categories.insert(Category::BestPractice),
            _ => return false,
        };
        true
    }

    pub fn set_rule(&mut self, id: &str, setting: RuleSetting) -> Result<(), ConfigError> {
        let id = id.trim().to_ascii_uppercase();
        if rules::descriptor(&id).is_none() {
            return Err(ConfigError::UnknownRule(id));
        }
        self.rule_overrides.insert(id, setting);
        Ok(())
    }

    /// Effective severity of a rule, `None` when it is switched off.
    pub fn severity_of(&self, d: &RuleDescriptor) -> Option<Severity> {
        match self.rule_overrides.get(d.id) {
            Some(RuleSetting::Off) => None,
            Some(RuleSetting::Level(s)) => Some(*s),
            None => self
                .enabled_categories
                .contains(&d.category)
                .then_some(d.default_severity),
        }
    }

    /// Parses the line-oriented config format:
    ///
    /// ```text
    /// # comment
    /// profile = strict
    /// rule.FC-07 = off
    /// abstraction = Public process : Private process
    /// fail_on = warning
    /// ```
    pub fn parse(text: &str) -> Result<LintConfig, ConfigError> {
        let mut cfg = LintConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let (key, value) = s.split_once('=').ok_or(ConfigError::Syntax { line })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = || ConfigError::BadValue {
                line,
                key: key.to_string(),
                value: value.to_string(),
            };
            match key {
                "profile" => {
                    if !cfg.set_profile(value) {
                        return Err(bad());
                    }
                }
                "fail_on" => cfg.fail_threshold = parse_threshold(value).ok_or_else(bad)?,
                "abstraction" => {
                    let (a, d) = value.split_once(':').ok_or_else(bad)?;
                    let (a, d) = (a.trim(), d.trim());
                    if a.is_empty() || d.is_empty() {
                        return Err(bad());
                    }
                    cfg.abstraction_pairs.push((a.to_string(), d.to_string()));
                }
                _ => match key.strip_prefix("rule.") {
                    Some(id) => {
                        let setting = parse_setting(value).ok_or_else(bad)?;
                        cfg.set_rule(id, setting)?;
                    }
                    None => {
                        return Err(ConfigError::UnknownKey {
                            line,
                            key: key.to_string(),
                        })
                    }
                },
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<LintConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        LintConfig::parse(&text)
    }
}

pub fn parse_threshold(s: &str) -> Option<Severity> {
    match s {
        "error" => Some(Severity::Error),
        "warning" => Some(Severity::Warning),
        _ => None,
    }
}

pub fn parse_setting(s: &str) -> Option<RuleSetting> {
    Some(match s {
        "off" => RuleSetting::Off,
        "error" => RuleSetting::Level(Severity::Error),
        "warning" => RuleSetting::Level(Severity::Warning),
        "info" => RuleSetting::Level(Severity::Info),
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagnostic {
    pub source_name: String,
    pub container_path: Vec<String>,
    pub element_id: String,
    pub rule_id: String,
    pub severity: Severity,
    pub element_name: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LintReport {
    pub models: Vec<String>,
    pub diagnostics: Vec<Diagnostic>,
    pub counts: BTreeMap<String, usize>,
    pub models_checked: usize,
}

impl LintReport {
    fn assemble(models: Vec<String>, mut diagnostics: Vec<Diagnostic>) -> Self {
        diagnostics.sort();
        diagnostics.dedup();
        let mut counts = BTreeMap::new();
        for d in &diagnostics {
            *counts.entry(d.rule_id.clone()).or_insert(0) += 1;
        }
        LintReport {
            models_checked: models.len(),
            models,
            diagnostics,
            counts,
        }
    }

    pub fn count_at_least(&self, s: Severity) -> usize {
        self.diagnostics.iter().filter(|d| d.severity >= s).count()
    }

    pub fn count_of(&self, s: Severity) -> usize {
        self.diagnostics.iter().filter(|d| d.severity == s).count()
    }

    pub fn fails(&self, threshold: Severity) -> bool {
        self.count_at_least(threshold) > 0
    }

    pub fn rule_ids(&self) -> BTreeSet<&str> {
        self.counts.keys().map(String::as_str).collect()
    }
}

fn one_line(message: &str) -> String {
    let flat: String = message.split_whitespace().collect::<Vec<_>>().join(" ");
    if flat.chars().count() <= MAX_MESSAGE_LEN {
        return flat;
    }
    let mut out: String = flat.chars().take(MAX_MESSAGE_LEN - 3).collect();
    out.push_str("...");
    out
}

fn segment(id: &str, name: Option<&str>) -> String {
    name.map(str::trim)
        .filter(|s| !s.is_empty())
        .unwrap_or(id)
        .to_string()
}

fn container_path(m: &BpmnModel, c: ContainerId) -> Vec<String> {
    m.container_chain(c)
        .into_iter()
        .rev()
        .map(|c| segment(m.container_id_str(c), m.container_name(c)))
        .collect()
}

/// Container path and display name for an element id.
pub fn locate(m: &BpmnModel, id: &str) -> (Vec<String>, Option<String>) {
    let home = |c: ContainerId| container_path(m, c);
    let collab = |c: CollabId| {
        let co = &m.collaborations()[c.index()];
        vec![segment(&co.id, co.name.as_deref())]
    };
    match m.resolve(id) {
        Ok(ElementRef::Node(n)) => {
            let node = m.node(n);
            (home(node.container), node.name.clone())
        }
        Ok(ElementRef::SequenceFlow(f)) => {
            let fl = m.flow(f);
            (home(fl.container), fl.name.clone())
        }
        Ok(ElementRef::Process(p)) => (Vec::new(), m.process(p).name.clone()),
        Ok(ElementRef::Participant(p)) => {
            let pa = m.participant(p);
            (collab(pa.collaboration), pa.name.clone())
        }
        Ok(ElementRef::MessageFlow(f)) => {
            let mf = m.message_flow(f);
            (collab(mf.collaboration), mf.name.clone())
        }
        Ok(ElementRef::Collaboration(c)) => (Vec::new(), m.collaborations()[c.index()].name.clone()),
        Ok(ElementRef::Data(d)) => {
            let de = m.data_element(d);
            (de.container.map(home).unwrap_or_default(), de.name.clone())
        }
        Ok(ElementRef::DataAssociation(i)) => {
            let owner = m.data_associations()[i].owner;
            (home(m.node(owner).container), None)
        }
        Ok(ElementRef::Artifact(a)) => {
            let art = m.artifact(a);
            let path = match art.container {
                ArtifactHome::Container(c) => home(c),
                ArtifactHome::Collaboration(c) => collab(c),
            };
            let name = match &art.kind {
                ArtifactKind::Group { name } => name.clone(),
                _ => None,
            };
            (path, name)
        }
        Ok(ElementRef::Definition(d)) => (Vec::new(), m.definition(d).name.clone()),
        _ => (m.located.get(id).map(|&c| home(c)).unwrap_or_default(), None),
    }
}

fn diagnostic(m: &BpmnModel, rule_id: &str, severity: Severity, element_id: &str, message: &str) -> Diagnostic {
    let (container_path, element_name) = locate(m, element_id);
    Diagnostic {
        source_name: m.source_name().to_string(),
        container_path,
        element_id: element_id.to_string(),
        rule_id: rule_id.to_string(),
        severity,
        element_name: element_name.map(|n| n.trim().to_string()).filter(|n| !n.is_empty()),
        message: one_line(message),
    }
}

/// Structural (`M-*`) findings: everything recorded while linking the
/// model. These cannot be disabled.
pub fn structural_check(m: &BpmnModel) -> Vec<Diagnostic> {
    let mut out: Vec<Diagnostic> = m
        .load_findings()
        .iter()
        .map(|f| diagnostic(m, f.code, f.severity, &f.element_id, &f.message))
        .collect();
    out.sort();
    out
}

fn check_abstractions(models: &[&BpmnModel], config: &LintConfig) -> Result<(), ConfigError> {
    for (a, d) in &config.abstraction_pairs {
        for name in [a, d] {
            let known = models.iter().any(|m| {
                m.processes()
                    .iter()
                    .any(|p| p.id == *name || label(&p.name) == Some(name.as_str()))
            });
            if !known {
                return Err(ConfigError::UnknownProcess(name.clone()));
            }
        }
    }
    Ok(())
}

fn lint_one(m: &BpmnModel, config: &LintConfig) -> Vec<Diagnostic> {
    let graph = Graph::new(m);
    let ctx = rules::Ctx {
        model: m,
        graph: &graph,
        abstraction_pairs: &config.abstraction_pairs,
    };
    let enabled: BTreeMap<&str, Severity> = rules::catalog()
        .iter()
        .filter_map(|d| config.severity_of(d).map(|s| (d.id, s)))
        .collect();
    let findings: Vec<Finding> = rules::groups()
        .par_iter()
        .filter(|g| g.rules.iter().any(|r| enabled.contains_key(r)))
        .flat_map_iter(|g| (g.check)(&ctx))
        .collect();
    let mut out = structural_check(m);
    out.extend(findings.into_iter().filter_map(|f| {
        let severity = *enabled.get(f.rule)?;
        let title = rules::descriptor(f.rule).map_or("", |d| d.title);
        let text = format!("{title}: {}", f.message);
        Some(diagnostic(m, f.rule, severity, &f.element, &text))
    }));
    out
}

/// Lints one model.
pub fn run(model: &BpmnModel, config: &LintConfig) -> Result<LintReport, ConfigError> {
    lint_many(&[model], config)
}

/// Lints each model independently and merges the results into one
/// deterministic report.
pub fn lint_many(models: &[&BpmnModel], config: &LintConfig) -> Result<LintReport, ConfigError> {
    check_abstractions(models, config)?;
    let work = || -> Vec<Diagnostic> {
        models
            .par_iter()
            .flat_map_iter(|m| lint_one(m, config))
            .collect()
    };
    let diagnostics = match config.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    };
    let names = models.iter().map(|m| m.source_name().to_string()).collect();
    Ok(LintReport::assemble(names, diagnostics))
}

pub fn list_rules(config: &LintConfig) -> Vec<RuleDescriptor> {
    rules::catalog()
        .iter()
        .filter(|d| config.enabled_categories.contains(&d.category) || config.rule_overrides.contains_key(d.id))
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Explanation {
    pub descriptor: RuleDescriptor,
    pub text: String,
}

pub fn explain(rule_id: &str) -> Result<Explanation, EngineError> {
    let id = rule_id.trim().to_ascii_uppercase();
    let d = rules::descriptor(&id).ok_or(EngineError::UnknownRule(rule_id.to_string()))?;
    let text = format!(
        "{id} — {title}\ncategory: {cat} (rule {idx} of {total}), default severity: {sev}\n\n{summary}\n\nconforming: {ok}\nviolating:  {bad}\n",
        title = d.title,
        cat = d.category,
        idx = d.index,
        total = d.category.size(),
        sev = d.default_severity,
        summary = d.summary,
        ok = d.conforming,
        bad = d.violating,
    );
    Ok(Explanation {
        descriptor: d.clone(),
        text,
    })
}

/// One line per diagnostic followed by the summary line.
pub fn render_text(report: &LintReport) -> String {
    let mut out = String::new();
    for d in &report.diagnostics {
        let mut location = d.container_path.join("/");
        if !location.is_empty() {
            location.push('/');
        }
        location.push_str(&d.element_id);
        if let Some(n) = &d.element_name {
            location.push_str(&format!("({n})"));
        }
        out.push_str(&format!(
            "{} {} {} : {} : {}\n",
            d.severity.as_str().to_ascii_uppercase(),
            d.rule_id,
            d.source_name,
            location,
            d.message
        ));
    }
    out.push_str(&summary_line(report));
    out.push('\n');
    out
}

pub fn summary_line(report: &LintReport) -> String {
    format!(
        "{} errors, {} warnings in {} model(s)",
        report.count_of(Severity::Error),
        report.count_of(Severity::Warning),
        report.models_checked
    )
}

/// Per-rule histogram, most frequent first.
pub fn render_summary(report: &LintReport) -> String {
    let mut rows: Vec<(&String, &usize)> = report.counts.iter().collect();
    rows.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
    let total: usize = report.counts.values().sum();
    let mut out = String::new();
    for (rule, n) in rows {
        let pct = if total == 0 { 0.0 } else { 100.0 * *n as f64 / total as f64 };
        out.push_str(&format!("{rule:<20} {n:>6} {pct:>6.1}%\n"));
    }
    out.push_str(&summary_line(report));
    out.push('\n');
    out
}

#[derive(Serialize)]
struct JsonDiagnostic<'a> {
    rule: &'a str,
    severity: Severity,
    element: &'a str,
    name: Option<&'a str>,
    container: String,
    file: &'a str,
    message: &'a str,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    version: u32,
    models: &'a [String],
    diagnostics: Vec<JsonDiagnostic<'a>>,
    counts: &'a BTreeMap<String, usize>,
}

pub fn render_json(report: &LintReport) -> String {
    let doc = JsonReport {
        version: 1,
        models: &report.models,
        diagnostics: report
            .diagnostics
            .iter()
            .map(|d| JsonDiagnostic {
                rule: &d.rule_id,
                severity: d.severity,
                element: &d.element_id,
                name: d.element_name.as_deref(),
                container: d.container_path.join("/"),
                file: &d.source_name,
                message: &d.message,
            })
            .collect(),
        counts: &report.counts,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_lines_parse() {
        let cfg = LintConfig::parse(
            "# team defaults\nprofile = standard\nrule.fc-07 = off\nrule.BP-01 = error\n\nabstraction = Public : Private\nfail_on = warning\n",
        )
        .unwrap();
        assert!(!cfg.enabled_categories.contains(&Category::BestPractice));
        assert_eq!(cfg.rule_overrides["FC-07"], RuleSetting::Off);
        assert_eq!(cfg.rule_overrides["BP-01"], RuleSetting::Level(Severity::Error));
        assert_eq!(cfg.abstraction_pairs, [("Public".to_string(), "Private".to_string())]);
        assert_eq!(cfg.fail_threshold, Severity::Warning);
        // An explicit override beats the disabled category.
        assert_eq!(cfg.severity_of(rules::descriptor("BP-01").unwrap()), Some(Severity::Error));
        assert_eq!(cfg.severity_of(rules::descriptor("BP-02").unwrap()), None);
        assert_eq!(cfg.severity_of(rules::descriptor("FC-07").unwrap()), None);
    }

    #[test]
    fn config_errors_carry_line_numbers() {
        assert_eq!(LintConfig::parse("profile = strict\nbogus"), Err(ConfigError::Syntax { line: 2 }));
        assert_eq!(
            LintConfig::parse("colour = red"),
            Err(ConfigError::UnknownKey { line: 1, key: "colour".into() })
        );
        assert!(matches!(LintConfig::parse("rule.FC-07 = loud"), Err(ConfigError::BadValue { line: 1, .. })));
        assert_eq!(LintConfig::parse("rule.FC-99 = off"), Err(ConfigError::UnknownRule("FC-99".into())));
        assert!(matches!(LintConfig::parse("abstraction = : x"), Err(ConfigError::BadValue { .. })));
    }

    #[test]
    fn messages_are_flattened_and_capped() {
        assert_eq!(one_line("a\n  b\tc"), "a b c");
        let long = "x".repeat(MAX_MESSAGE_LEN + 10);
        let cut = one_line(&long);
        assert_eq!(cut.chars().count(), MAX_MESSAGE_LEN);
        assert!(cut.ends_with("..."));
    }

    #[test]
    fn text_report_shape() {
        let report = LintReport::assemble(
            vec!["a.bpmn".into()],
            vec![Diagnostic {
                source_name: "a.bpmn".into(),
                container_path: vec!["Order".into(), "Ship".into()],
                element_id: "t1".into(),
                rule_id: "FC-27".into(),
                severity: Severity::Error,
                element_name: Some("Pack".into()),
                message: "no incoming flow".into(),
            }],
        );
        assert_eq!(
            render_text(&report),
            "ERROR FC-27 a.bpmn : Order/Ship/t1(Pack) : no incoming flow\n1 errors, 0 warnings in 1 model(s)\n"
        );
        assert_eq!(report.counts["FC-27"], 1);
        assert!(report.fails(Severity::Error));
    }
}
