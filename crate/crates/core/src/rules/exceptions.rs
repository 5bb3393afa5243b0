use std::collections::{BTreeSet, VecDeque};

use crate::graph::FlowClass;

use super::*;

fn key(ev: &Event) -> Option<&str> {
    ev.trigger.label().map(str::trim).filter(|s| !s.is_empty())
}

fn catches(catch: &Event, thrown: Option<&str>) -> bool {
    match key(catch) {
        None => true,
        Some(k) => thrown == Some(k),
    }
}

/// Catching events (boundary events and event sub-process starts) of the
/// given trigger kind that can see a throw at `from`, innermost first.
/// The flag tells whether any enclosing activity exists at all.
fn catch_scope<'a>(cx: &Ctx<'a>, from: NodeId, kind: TriggerKind) -> (Vec<&'a FlowNode>, bool) {
    let m = cx.model;
    let mut found = Vec::new();
    let mut enclosed = false;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([m.node(from).container]);
    while let Some(start) = queue.pop_front() {
        let chain = m.container_chain(start);
        let on_chain: BTreeSet<ContainerId> = chain.iter().copied().collect();
        for c in chain {
            if !seen.insert(c) {
                break;
            }
            for (n, node) in cx.member_ids(c) {
                if node.is_event_subprocess() && !on_chain.contains(&ContainerId::SubProcess(n)) {
                    found.extend(cx.members(ContainerId::SubProcess(n)).filter(|s| {
                        s.is_event_at(PositionKind::Start) && s.trigger() == Some(kind)
                    }));
                }
            }
            match c {
                ContainerId::SubProcess(n) => {
                    enclosed = true;
                    found.extend(boundaries(cx, n, kind));
                }
                ContainerId::Process(p) => {
                    for &caller in cx.graph.callers(p) {
                        enclosed = true;
                        found.extend(boundaries(cx, caller, kind));
                        queue.push_back(m.node(caller).container);
                    }
                }
            }
        }
    }
    (found, enclosed)
}

fn boundaries<'a>(cx: &Ctx<'a>, activity: NodeId, kind: TriggerKind) -> Vec<&'a FlowNode> {
    cx.node(activity)
        .activity()
        .map(|a| {
            a.boundary_events
                .iter()
                .map(|&b| cx.node(b))
                .filter(|b| b.trigger() == Some(kind))
                .collect()
        })
        .unwrap_or_default()
}

/// Throw events of `kind` that a catch attached to (or starting inside)
/// `scope` can observe. `None` when the scope's contents are not visible.
fn throws_within<'a>(cx: &Ctx<'a>, catch: NodeId, kind: TriggerKind) -> Option<Vec<&'a FlowNode>> {
    let m = cx.model;
    let node = m.node(catch);
    let ev = node.event()?;
    let nodes: Vec<NodeId> = if let Some(a) = ev.attached_to() {
        let act = m.node(a);
        match act.activity().map(|x| &x.kind) {
            Some(ActivityKind::CallActivity {
                called: Some(CalledElement::Process(p)),
            }) => cx.graph.descendants(ContainerId::Process(*p), true),
            _ if act.contents.is_some() => cx.graph.descendants(ContainerId::SubProcess(a), true),
            _ => return None,
        }
    } else {
        // Start of an event sub-process: everything else in the parent.
        let ContainerId::SubProcess(esp) = node.container else {
            return None;
        };
        let parent = m.node(esp).container;
        let own: BTreeSet<NodeId> = cx.graph.descendants(ContainerId::SubProcess(esp), true).into_iter().collect();
        cx.graph
            .descendants(parent, true)
            .into_iter()
            .filter(|n| !own.contains(n))
            .collect()
    };
    Some(
        nodes
            .into_iter()
            .map(|n| m.node(n))
            .filter(|n| n.event().is_some_and(|e| e.is_throw()) && n.trigger() == Some(kind))
            .collect(),
    )
}

pub(super) fn check_error_escalation(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for (n, node) in cx.nodes() {
        let Some(ev) = node.event() else { continue };
        let t = ev.trigger.kind();
        let pos = ev.position_kind();
        let is_error = t == TriggerKind::Error;
        if !is_error && t != TriggerKind::Escalation {
            continue;
        }
        let word = if is_error { "error" } else { "escalation" };

        // FC-30 / FC-36
        if pos == PositionKind::IntermediateCatch {
            out.push(
                if is_error { "FC-30" } else { "FC-36" },
                &node.id,
                format!("{word} is caught by an intermediate event instead of a boundary event"),
            );
        }
        // FC-31 / FC-37
        if pos == PositionKind::Boundary && node.outgoing.is_empty() {
            out.push(
                if is_error { "FC-31" } else { "FC-37" },
                &node.id,
                format!("{word} boundary event has no exception flow"),
            );
        }

        if ev.is_throw() {
            let thrown = key(ev);
            let (scope, enclosed) = catch_scope(cx, n, t);
            let matching: Vec<&FlowNode> = scope
                .into_iter()
                .filter(|c| c.event().is_some_and(|ce| catches(ce, thrown)))
                .collect();
            let what = thrown.map_or(format!("unnamed {word}"), |k| format!("{word} '{k}'"));
            // FC-32 / FC-38
            if enclosed && matching.is_empty() {
                out.push(
                    if is_error { "FC-32" } else { "FC-38" },
                    &node.id,
                    format!("{what} has no matching catch event"),
                );
            }
            if !is_error && !matching.is_empty() {
                let interrupting = |c: &&FlowNode| c.event().is_some_and(|e| e.interrupting);
                // FC-41
                if pos == PositionKind::End && !matching.iter().any(interrupting) {
                    out.push("FC-41", &node.id, format!("{what} ends its scope but is only caught by non-interrupting events"));
                }
                // FC-42
                if pos == PositionKind::IntermediateThrow && matching.iter().all(interrupting) {
                    out.push("FC-42", &node.id, format!("{what} is thrown mid-flow but only caught by interrupting events"));
                }
            }
        } else if let Some(k) = key(ev) {
            // FC-33 / FC-43
            let is_catcher = pos == PositionKind::Boundary
                || (pos == PositionKind::Start
                    && matches!(node.container, ContainerId::SubProcess(s) if m.node(s).is_event_subprocess()));
            if is_catcher {
                if let Some(throws) = throws_within(cx, n, t) {
                    if !throws.iter().any(|x| x.event().and_then(key) == Some(k)) {
                        out.push(
                            if is_error { "FC-33" } else { "FC-43" },
                            &node.id,
                            format!("nothing in scope throws {word} '{k}'"),
                        );
                    }
                }
            }
        }
    }

    // FC-34 / FC-39 / FC-40
    for (_, node) in cx.nodes() {
        let Some(a) = node.activity() else { continue };
        let groups: [(&str, TriggerKind, Option<bool>); 3] = [
            ("FC-34", TriggerKind::Error, None),
            ("FC-39", TriggerKind::Escalation, Some(true)),
            ("FC-40", TriggerKind::Escalation, Some(false)),
        ];
        for (rule, kind, mode) in groups {
            let evs: Vec<&Event> = a
                .boundary_events
                .iter()
                .filter_map(|&b| m.node(b).event())
                .filter(|e| e.trigger.kind() == kind && mode.is_none_or(|i| e.interrupting == i))
                .collect();
            let named = evs.iter().filter(|e| key(e).is_some()).count();
            if named > 0 && named < evs.len() {
                out.push(rule, &node.id, "named and unnamed catch events are attached together");
            }
        }
    }
    out.done()
}

fn is_transaction(node: &FlowNode) -> bool {
    matches!(node.activity().map(|a| &a.kind), Some(ActivityKind::Transaction))
}

fn has_compensation_handler(cx: &Ctx<'_>, n: NodeId) -> bool {
    let node = cx.node(n);
    let boundary = node.activity().is_some_and(|a| {
        a.boundary_events
            .iter()
            .any(|&b| cx.node(b).trigger() == Some(TriggerKind::Compensation))
    });
    let inner = node.contents.is_some()
        && cx.member_ids(ContainerId::SubProcess(n)).any(|(esp, e)| {
            e.is_event_subprocess()
                && cx
                    .members(ContainerId::SubProcess(esp))
                    .any(|s| s.is_event_at(PositionKind::Start) && s.trigger() == Some(TriggerKind::Compensation))
        });
    boundary || inner
}

/// Compensation boundary events associated with `n`.
fn compensation_partners(cx: &Ctx<'_>, n: NodeId) -> Vec<NodeId> {
    cx.graph
        .associations_of(Endpoint::Node(n))
        .iter()
        .filter_map(|&a| match &cx.model.artifact(a).kind {
            ArtifactKind::Association { source, target, .. } => {
                [source, target].into_iter().flatten().find_map(|e| match *e {
                    Endpoint::Node(o)
                        if o != n
                            && cx.node(o).is_event_at(PositionKind::Boundary)
                            && cx.node(o).trigger() == Some(TriggerKind::Compensation) =>
                    {
                        Some(o)
                    }
                    _ => None,
                })
            }
            _ => None,
        })
        .collect()
}

pub(super) fn check_transactions(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    let in_transaction = |c: ContainerId| {
        m.container_chain(c)
            .into_iter()
            .any(|x| matches!(x, ContainerId::SubProcess(s) if is_transaction(m.node(s))))
    };
    for (n, node) in cx.nodes() {
        if let Some(ev) = node.event() {
            let t = ev.trigger.kind();
            if let Some(host) = ev.attached_to() {
                // FC-46
                let tx = is_transaction(m.node(host));
                if tx && t != TriggerKind::Cancel {
                    out.push("FC-46", &node.id, format!("{t} boundary event on a transaction"));
                }
                if !tx && t == TriggerKind::Cancel {
                    out.push("FC-46", &node.id, "cancel boundary event on an activity that is not a transaction");
                }
            }
            // FC-47
            if t == TriggerKind::Cancel && ev.position_kind() == PositionKind::End && !in_transaction(node.container) {
                out.push("FC-47", &node.id, "cancel end event outside a transaction");
            }
            // FC-49
            if t == TriggerKind::Compensation && ev.is_throw() && in_transaction(node.container) {
                out.push("FC-49", &node.id, "compensation is thrown inside a transaction");
            }
            // FC-51
            if t == TriggerKind::Compensation && ev.is_throw() {
                if let Some(k) = key(ev) {
                    let found = m.container_chain(node.container).into_iter().any(|c| {
                        m.contents(c).nodes.iter().any(|&a| {
                            let act = m.node(a);
                            act.is_activity() && act.label().is_some_and(|l| same_label(l, k)) && has_compensation_handler(cx, a)
                        })
                    });
                    if !found {
                        out.push("FC-51", &node.id, format!("no compensable activity named '{k}' in scope"));
                    }
                }
            }
            continue;
        }
        let Some(act) = node.activity() else { continue };
        if is_transaction(node) {
            let inner = cx.graph.descendants(ContainerId::SubProcess(n), true);
            let cancel_boundary = act
                .boundary_events
                .iter()
                .any(|&b| m.node(b).trigger() == Some(TriggerKind::Cancel));
            let cancel_end = inner
                .iter()
                .any(|&x| m.node(x).is_event_at(PositionKind::End) && m.node(x).trigger() == Some(TriggerKind::Cancel));
            // FC-47
            if cancel_boundary && !cancel_end {
                out.push("FC-47", &node.id, "transaction has a cancel boundary event but no cancel end event");
            }
            // FC-48
            let ends: Vec<&FlowNode> = cx.members(ContainerId::SubProcess(n)).filter(|x| x.is_event_at(PositionKind::End)).collect();
            if ends.len() > 1 && !ends.iter().any(|e| e.trigger() == Some(TriggerKind::Terminate)) {
                out.push("FC-48", &node.id, format!("transaction has {} end events and none terminates", ends.len()));
            }
        }
        if !act.is_for_compensation || node.is_event_subprocess() {
            continue;
        }
        let partners = compensation_partners(cx, n);
        let in_compensation_esp = matches!(node.container, ContainerId::SubProcess(e)
            if m.node(e).is_event_subprocess()
                && cx.members(node.container).any(|s| s.is_event_at(PositionKind::Start) && s.trigger() == Some(TriggerKind::Compensation)));
        // FC-50
        if partners.is_empty() && !in_compensation_esp {
            out.push("FC-50", &node.id, "compensation activity is not associated with a compensation event");
        }
        // FC-73
        if !node.incoming.is_empty() || !node.outgoing.is_empty() {
            out.push("FC-73", &node.id, "compensation activity has sequence flows");
        }
        if partners.len() > 1 {
            out.push("FC-73", &node.id, format!("compensation activity has {} associations", partners.len()));
        }
        // FC-74
        for b in partners {
            if m.root_process(m.node(b).container) != m.root_process(node.container) {
                out.push(
                    "FC-74",
                    &node.id,
                    format!("compensation activity lives outside the process of `{}`", m.node(b).id),
                );
            }
        }
    }
    out.done()
}

pub(super) fn check_merges(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for (b, node) in cx.nodes() {
        let Some(ev) = node.event() else { continue };
        if ev.position_kind() != PositionKind::Boundary || ev.trigger.kind() == TriggerKind::Compensation {
            continue;
        }
        let (rule, want, want_name) = if ev.interrupting {
            ("FC-52", GatewayKind::Exclusive, "exclusive")
        } else {
            ("FC-53", GatewayKind::Inclusive, "inclusive")
        };
        let mut seen = BTreeSet::from([b]);
        let mut queue: VecDeque<NodeId> = VecDeque::from([b]);
        while let Some(x) = queue.pop_front() {
            for &f in &m.node(x).outgoing {
                let t = m.flow(f).target;
                if !seen.insert(t) {
                    continue;
                }
                let target = m.node(t);
                let merges = target.incoming.iter().any(|&i| cx.graph.flow_class(i) == FlowClass::Normal);
                if !merges {
                    queue.push_back(t);
                    continue;
                }
                if let Some(g) = target.gateway() {
                    if g.kind != want {
                        out.push(
                            rule,
                            &node.id,
                            format!("exception flow rejoins normal flow at {} instead of an {want_name} gateway", node_desc(target)),
                        );
                    }
                }
            }
        }
    }
    out.done()
}
