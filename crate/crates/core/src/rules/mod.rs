//! The rule catalog and the checks behind it.
//!
//! Rules are evaluated in groups: one check function walks the model once
//! and reports findings for several closely related rule ids.

mod catalog;
mod connectivity;
mod data;
mod events;
mod exceptions;
mod flows;
mod gateways;
mod practices;
mod process;

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::engine::Severity;
use crate::graph::Graph;
use crate::model::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Category {
    FlowControl,
    DataFlow,
    BestPractice,
}

impl Category {
    pub fn prefix(self) -> &'static str {
        match self {
            Category::FlowControl => "FC",
            Category::DataFlow => "DF",
            Category::BestPractice => "BP",
        }
    }

    /// Number of rules in the category.
    pub fn size(self) -> usize {
        match self {
            Category::FlowControl => 85,
            Category::DataFlow => 4,
            Category::BestPractice => 32,
        }
    }

    pub fn default_severity(self) -> Severity {
        match self {
            Category::BestPractice => Severity::Warning,
            _ => Severity::Error,
        }
    }

    pub fn from_prefix(p: &str) -> Option<Category> {
        match p {
            "FC" => Some(Category::FlowControl),
            "DF" => Some(Category::DataFlow),
            "BP" => Some(Category::BestPractice),
            _ => None,
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::FlowControl => "flow control",
            Category::DataFlow => "data flow",
            Category::BestPractice => "best practice",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleDescriptor {
    pub id: &'static str,
    /// 1-based position within the category.
    pub index: usize,
    pub category: Category,
    pub title: &'static str,
    pub default_severity: Severity,
    pub summary: &'static str,
    pub conforming: &'static str,
    pub violating: &'static str,
}

/// Every rule, FC first, then DF, then BP, each in index order.
pub fn catalog() -> &'static [RuleDescriptor] {
    static CATALOG: OnceLock<Vec<RuleDescriptor>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        catalog::ENTRIES
            .iter()
            .map(|&(id, title, summary, conforming, violating)| {
                let (prefix, num) = id.split_once('-').expect("rule id has a dash");
                let category = Category::from_prefix(prefix).expect("known rule prefix");
                RuleDescriptor {
                    id,
                    index: num.parse().expect("numeric rule index"),
                    category,
                    title,
                    default_severity: category.default_severity(),
                    summary,
                    conforming,
                    violating,
                }
            })
            .collect()
    })
}

/// Looks a rule up by id (`FC-07`); case-insensitive, zero padding optional.
pub fn descriptor(id: &str) -> Option<&'static RuleDescriptor> {
    let id = id.trim().to_ascii_uppercase();
    let (prefix, num) = id.split_once('-')?;
    let num: usize = num.parse().ok()?;
    catalog()
        .iter()
        .find(|d| d.category.prefix() == prefix && d.index == num)
}

/// A raw finding before the engine attaches severity and location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub rule: &'static str,
    pub element: String,
    pub message: String,
}

pub struct Ctx<'a> {
    pub model: &'a BpmnModel,
    pub graph: &'a Graph<'a>,
    pub abstraction_pairs: &'a [(String, String)],
}

pub struct Group {
    pub rules: &'static [&'static str],
    pub check: fn(&Ctx<'_>) -> Vec<Finding>,
}

pub fn groups() -> &'static [Group] {
    static GROUPS: &[Group] = &[
        Group { rules: &["FC-01", "FC-02", "FC-03", "FC-04", "FC-05"], check: process::check_process },
        Group { rules: &["FC-06", "FC-07", "FC-08", "FC-09"], check: process::check_subprocess },
        Group {
            rules: &["FC-10", "FC-11", "FC-13", "FC-14", "FC-25", "FC-26", "FC-27", "FC-28", "FC-55", "FC-56", "FC-57"],
            check: connectivity::check,
        },
        Group { rules: &["FC-12", "FC-29", "FC-35"], check: events::check_typing },
        Group { rules: &["FC-15", "FC-16", "FC-17", "FC-18", "FC-19", "FC-20"], check: events::check_messages },
        Group { rules: &["FC-21", "FC-22", "FC-23", "FC-24"], check: events::check_links },
        Group {
            rules: &[
                "FC-30", "FC-31", "FC-32", "FC-33", "FC-34", "FC-36", "FC-37", "FC-38", "FC-39", "FC-40", "FC-41",
                "FC-42", "FC-43",
            ],
            check: exceptions::check_error_escalation,
        },
        Group { rules: &["FC-44", "FC-45"], check: events::check_signals },
        Group {
            rules: &["FC-46", "FC-47", "FC-48", "FC-49", "FC-50", "FC-51", "FC-73", "FC-74"],
            check: exceptions::check_transactions,
        },
        Group { rules: &["FC-52", "FC-53"], check: exceptions::check_merges },
        Group { rules: &["FC-54", "FC-65", "FC-66", "FC-71", "FC-78"], check: gateways::check_conditions },
        Group {
            rules: &[
                "FC-58", "FC-59", "FC-60", "FC-61", "FC-62", "FC-63", "FC-64", "FC-67", "FC-68", "FC-69", "FC-70",
            ],
            check: gateways::check_structure,
        },
        Group { rules: &["FC-72", "FC-75", "FC-76", "FC-77"], check: flows::check_activities },
        Group { rules: &["FC-79", "FC-80"], check: flows::check_sequence_flows },
        Group { rules: &["FC-81", "FC-82", "FC-83", "FC-84"], check: flows::check_message_flows },
        Group { rules: &["FC-85"], check: flows::check_artifacts },
        Group { rules: &["DF-01", "DF-02", "DF-03", "DF-04"], check: data::check },
        Group { rules: &["BP-01", "BP-02", "BP-03", "BP-04", "BP-05", "BP-06", "BP-07", "BP-08"], check: practices::check_structure },
        Group {
            rules: &["BP-09", "BP-10", "BP-11", "BP-12", "BP-13", "BP-25", "BP-26", "BP-27", "BP-28", "BP-30", "BP-31", "BP-32"],
            check: practices::check_naming,
        },
        Group {
            rules: &["BP-14", "BP-15", "BP-16", "BP-17", "BP-18", "BP-19", "BP-20", "BP-21", "BP-22", "BP-23", "BP-24", "BP-29"],
            check: practices::check_gateways,
        },
    ];
    GROUPS
}

/// Collects findings for one group.
struct Out(Vec<Finding>);

impl Out {
    fn new() -> Self {
        Out(Vec::new())
    }

    fn push(&mut self, rule: &'static str, element: &str, message: impl Into<String>) {
        self.0.push(Finding {
            rule,
            element: element.to_string(),
            message: message.into(),
        });
    }

    fn done(self) -> Vec<Finding> {
        self.0
    }
}

impl<'a> Ctx<'a> {
    fn nodes(&self) -> impl Iterator<Item = (NodeId, &'a FlowNode)> + '_ {
        let m = self.model;
        m.node_ids().map(move |n| (n, m.node(n)))
    }

    fn node(&self, n: NodeId) -> &'a FlowNode {
        self.model.node(n)
    }

    /// Direct flow nodes of `c`.
    fn members(&self, c: ContainerId) -> impl Iterator<Item = &'a FlowNode> + '_ {
        let m = self.model;
        m.contents(c).nodes.iter().map(move |&n| m.node(n))
    }

    fn member_ids(&self, c: ContainerId) -> impl Iterator<Item = (NodeId, &'a FlowNode)> + '_ {
        let m = self.model;
        m.contents(c).nodes.iter().map(move |&n| (n, m.node(n)))
    }

    fn count_in(&self, c: ContainerId, pred: impl Fn(&FlowNode) -> bool) -> usize {
        self.members(c).filter(|n| pred(n)).count()
    }

    fn target(&self, f: FlowId) -> &'a FlowNode {
        self.model.node(self.model.flow(f).target)
    }

    fn container_label(&self, c: ContainerId) -> String {
        describe(self.model.container_name(c), self.model.container_id_str(c))
    }
}

/// `"name"` when named, otherwise the id.
fn describe(name: Option<&str>, id: &str) -> String {
    match name.map(str::trim).filter(|s| !s.is_empty()) {
        Some(n) => format!("'{n}'"),
        None => format!("`{id}`"),
    }
}

fn node_desc(n: &FlowNode) -> String {
    describe(n.label(), &n.id)
}

fn is_multiple(t: TriggerKind) -> bool {
    matches!(t, TriggerKind::Multiple | TriggerKind::ParallelMultiple)
}

fn same_label(a: &str, b: &str) -> bool {
    a.trim() == b.trim()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_group_rule_is_in_the_catalog_once() {
        let mut seen = std::collections::BTreeSet::new();
        for g in groups() {
            for r in g.rules {
                assert!(descriptor(r).is_some(), "{r}");
                assert!(seen.insert(*r), "{r} in two groups");
            }
        }
        assert_eq!(seen.len(), catalog().len());
    }

    #[test]
    fn descriptor_lookup_is_lenient() {
        assert_eq!(descriptor("fc-7").unwrap().id, "FC-07");
        assert_eq!(descriptor(" BP-32 ").unwrap().index, 32);
        assert!(descriptor("FC-86").is_none());
        assert!(descriptor("XX-01").is_none());
    }
}
