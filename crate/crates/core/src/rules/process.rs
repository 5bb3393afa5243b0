use std::collections::BTreeSet;

use super::*;

const TOP_LEVEL_STARTS: &[TriggerKind] = &[
    TriggerKind::None,
    TriggerKind::Message,
    TriggerKind::Timer,
    TriggerKind::Conditional,
    TriggerKind::Signal,
    TriggerKind::Multiple,
    TriggerKind::ParallelMultiple,
];

/// Triggers allowed on event sub-process starts.
pub(super) fn event_subprocess_start_allowed(t: TriggerKind, interrupting: bool) -> bool {
    let banned: &[TriggerKind] = if interrupting {
        &[TriggerKind::Cancel, TriggerKind::None, TriggerKind::Link, TriggerKind::Terminate]
    } else {
        &[
            TriggerKind::Cancel,
            TriggerKind::None,
            TriggerKind::Link,
            TriggerKind::Terminate,
            TriggerKind::Error,
            TriggerKind::Compensation,
        ]
    };
    !banned.contains(&t)
}

pub(super) fn check_process(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();

    // FC-01
    let bound: BTreeSet<ProcessId> = m.participants().iter().filter_map(|p| p.process).collect();
    let implicit: Vec<&str> = m
        .process_ids()
        .filter(|p| !bound.contains(p) && cx.graph.callers(*p).is_empty())
        .map(|p| m.process(p).id.as_str())
        .collect();
    if implicit.len() > 1 {
        for c in m.collaborations() {
            out.push(
                "FC-01",
                &c.id,
                format!("{} processes have no pool: {}", implicit.len(), implicit.join(", ")),
            );
        }
    }

    // FC-02
    for (abs, det) in cx.abstraction_pairs {
        let find = |name: &str| {
            m.process_ids()
                .find(|&p| m.process(p).id == name || label(&m.process(p).name) == Some(name))
        };
        let (Some(a), Some(d)) = (find(abs), find(det)) else {
            continue;
        };
        let (ca, cd) = (process_counts(cx, a), process_counts(cx, d));
        let mut broken = Vec::new();
        for (what, x, y, le) in [
            ("flow nodes", ca.nodes, cd.nodes, true),
            ("sequence flows", ca.flows, cd.flows, true),
            ("outgoing message flows", ca.mf_out, cd.mf_out, true),
            ("incoming message flows", ca.mf_in, cd.mf_in, true),
            ("sub-processes", ca.subprocesses, cd.subprocesses, false),
        ] {
            let ok = if le { x <= y } else { x >= y };
            if !ok {
                broken.push(format!("{what} {x} vs {y}"));
            }
        }
        if !broken.is_empty() {
            out.push(
                "FC-02",
                &m.process(a).id,
                format!("does not abstract {}: {}", det, broken.join(", ")),
            );
        }
    }

    for p in m.processes() {
        // FC-03
        if p.process_type == ProcessType::Public && p.is_executable == Some(true) {
            out.push("FC-03", &p.id, "public process is marked executable");
        }
    }

    for (_, node) in cx.nodes() {
        // FC-04
        if node.is_event_at(PositionKind::Start) && m.is_top_level(node.container) {
            let t = node.trigger().unwrap_or(TriggerKind::None);
            if !TOP_LEVEL_STARTS.contains(&t) {
                out.push("FC-04", &node.id, format!("{t} start event in a top-level process"));
            }
        }
        // FC-05
        if let Some(Activity {
            kind: ActivityKind::CallActivity {
                called: Some(CalledElement::Process(p)),
            },
            ..
        }) = node.activity()
        {
            let has_none_start = cx.count_in(ContainerId::Process(*p), |n| {
                n.is_event_at(PositionKind::Start) && n.trigger() == Some(TriggerKind::None)
            }) > 0;
            if !has_none_start {
                out.push(
                    "FC-05",
                    &node.id,
                    format!("called process `{}` has no none start event", m.process(*p).id),
                );
            }
        }
    }
    out.done()
}

struct Counts {
    nodes: usize,
    flows: usize,
    mf_out: usize,
    mf_in: usize,
    subprocesses: usize,
}

fn process_counts(cx: &Ctx<'_>, p: ProcessId) -> Counts {
    let m = cx.model;
    let root = ContainerId::Process(p);
    let nodes = cx.graph.descendants(root, true);
    let flows = cx
        .graph
        .nested_containers(root)
        .iter()
        .map(|&c| m.contents(c).sequence_flows.len())
        .sum();
    let mut ends: Vec<InteractionRef> = nodes.iter().map(|&n| InteractionRef::Node(n)).collect();
    if let Some(pa) = cx.graph.participant_of(p) {
        ends.push(InteractionRef::Participant(pa));
    }
    Counts {
        nodes: nodes.len(),
        flows,
        mf_out: ends.iter().map(|&r| cx.graph.messages_out(r).len()).sum(),
        mf_in: ends.iter().map(|&r| cx.graph.messages_in(r).len()).sum(),
        subprocesses: nodes.iter().filter(|&&n| m.node(n).contents.is_some()).count(),
    }
}

pub(super) fn check_subprocess(cx: &Ctx<'_>) -> Vec<Finding> {
    let mut out = Out::new();
    for (n, node) in cx.nodes() {
        if node.contents.is_none() {
            continue;
        }
        let inner = ContainerId::SubProcess(n);
        let starts: Vec<&FlowNode> = cx.members(inner).filter(|x| x.is_event_at(PositionKind::Start)).collect();

        // FC-06
        let inner_nodes = cx.graph.descendants(inner, true);
        if !inner_nodes.is_empty() {
            let own = cx.graph.message_partners(n);
            let mut nested = crate::graph::MessagePartners::default();
            for &d in &inner_nodes {
                let p = cx.graph.message_partners(d);
                nested.in_partners.extend(p.in_partners);
                nested.out_partners.extend(p.out_partners);
            }
            let has_any = !(own.in_partners.is_empty()
                && own.out_partners.is_empty()
                && nested.in_partners.is_empty()
                && nested.out_partners.is_empty());
            if has_any && own != nested {
                out.push(
                    "FC-06",
                    &node.id,
                    "message flows on the sub-process differ from those of its contents",
                );
            }
        }

        if node.is_event_subprocess() {
            // FC-08
            if starts.len() != 1 {
                out.push(
                    "FC-08",
                    &node.id,
                    format!("event sub-process has {} start events", starts.len()),
                );
            }
            for s in &starts {
                let t = s.trigger().unwrap_or(TriggerKind::None);
                let interrupting = s.event().is_some_and(|e| e.interrupting);
                if t == TriggerKind::None {
                    out.push("FC-08", &s.id, "event sub-process start event is untyped");
                } else if !event_subprocess_start_allowed(t, interrupting) {
                    out.push("FC-08", &s.id, format!("{t} is not allowed to start an event sub-process"));
                }
            }
            // FC-09
            if !node.incoming.is_empty() || !node.outgoing.is_empty() {
                out.push("FC-09", &node.id, "event sub-process is connected by sequence flows");
            }
        } else if !matches!(node.activity().map(|a| &a.kind), Some(ActivityKind::CallActivity { .. })) {
            // FC-07
            if starts.len() > 1 {
                out.push("FC-07", &node.id, format!("sub-process has {} start events", starts.len()));
            }
            for s in &starts {
                let t = s.trigger().unwrap_or(TriggerKind::None);
                if t != TriggerKind::None {
                    out.push("FC-07", &s.id, format!("{t} start event inside a sub-process"));
                }
            }
        }
    }
    out.done()
}
