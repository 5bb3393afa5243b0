use std::collections::BTreeSet;

use super::*;

pub(super) fn check_activities(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for (n, node) in cx.nodes() {
        let Some(a) = node.activity() else { continue };
        // FC-72
        let conditional = node.outgoing.iter().filter(|&&f| m.flow(f).condition.is_some()).count();
        if (conditional > 0 || a.default_flow.is_some()) && node.outgoing.len() < 2 {
            out.push("FC-72", &node.id, "conditional or default flow without an alternative");
        }
        if a.default_flow.is_some() {
            let plain = node
                .outgoing
                .iter()
                .filter(|&&f| Some(f) != a.default_flow && m.flow(f).condition.is_none())
                .count();
            if plain > 0 {
                out.push("FC-72", &node.id, "default flow sits next to an unconditional flow and is never selected");
            }
        }
        let ins = cx.graph.node_messages_in(n).len();
        let outs = cx.graph.node_messages_out(n).len();
        match a.kind {
            // FC-75
            ActivityKind::ReceiveTask { .. } if outs > 0 => {
                out.push("FC-75", &node.id, "receive task sends a message flow")
            }
            // FC-76
            ActivityKind::SendTask if ins > 0 => out.push("FC-76", &node.id, "send task receives a message flow"),
            // FC-77
            ActivityKind::ScriptTask | ActivityKind::ManualTask if ins + outs > 0 => {
                let kind = if a.kind == ActivityKind::ScriptTask { "script" } else { "manual" };
                out.push("FC-77", &node.id, format!("{kind} task exchanges message flows"))
            }
            _ => {}
        }
    }
    out.done()
}

/// The container a node effectively lives in; boundary events count as
/// part of their activity's container.
fn home(m: &BpmnModel, n: NodeId) -> ContainerId {
    let node = m.node(n);
    match node.event().and_then(Event::attached_to) {
        Some(a) => m.node(a).container,
        None => node.container,
    }
}

pub(super) fn check_sequence_flows(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for f in m.sequence_flows() {
        // FC-79
        let (a, b) = (home(m, f.source), home(m, f.target));
        if a != b {
            out.push(
                "FC-79",
                &f.id,
                format!("flow connects {} and {}", cx.container_label(a), cx.container_label(b)),
            );
        }
        // FC-80
        if f.source == f.target {
            out.push("FC-80", &f.id, "flow starts and ends at the same node");
        }
    }
    out.done()
}

fn sender_ok(node: &FlowNode) -> bool {
    match &node.kind {
        NodeKind::Event(e) => {
            e.is_throw() && (e.trigger.kind() == TriggerKind::Message || is_multiple(e.trigger.kind()))
        }
        NodeKind::Activity(a) => {
            matches!(a.kind, ActivityKind::SendTask | ActivityKind::UserTask | ActivityKind::ServiceTask)
                || node.is_subprocess_like()
        }
        NodeKind::Gateway(_) => false,
    }
}

fn receiver_ok(node: &FlowNode) -> bool {
    match &node.kind {
        NodeKind::Event(e) => {
            e.is_catch() && (e.trigger.kind() == TriggerKind::Message || is_multiple(e.trigger.kind()))
        }
        NodeKind::Activity(a) => {
            matches!(
                a.kind,
                ActivityKind::ReceiveTask { .. } | ActivityKind::UserTask | ActivityKind::ServiceTask
            ) || node.is_subprocess_like()
        }
        NodeKind::Gateway(_) => false,
    }
}

pub(super) fn check_message_flows(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for mf in m.message_flows() {
        // FC-81
        if let InteractionRef::Node(n) = mf.source {
            if !sender_ok(m.node(n)) {
                out.push("FC-81", &mf.id, format!("{} cannot send messages", node_desc(m.node(n))));
            }
        }
        // FC-82
        if let InteractionRef::Node(n) = mf.target {
            if !receiver_ok(m.node(n)) {
                out.push("FC-82", &mf.id, format!("{} cannot receive messages", node_desc(m.node(n))));
            }
        }
        // FC-83
        for end in [mf.source, mf.target] {
            if let InteractionRef::Participant(p) = end {
                let pa = m.participant(p);
                if !pa.is_black_box() {
                    out.push(
                        "FC-83",
                        &mf.id,
                        format!("message flow attaches to the border of {}, which shows its process", describe(pa.name.as_deref(), &pa.id)),
                    );
                }
            }
        }
    }

    // FC-84
    let mut used: BTreeSet<DefId> = m.message_flows().iter().filter_map(|f| f.message).collect();
    for node in m.nodes() {
        match &node.kind {
            NodeKind::Activity(a) => used.extend(a.message_ref),
            NodeKind::Event(e) => used.extend(e.message_refs.iter().copied()),
            NodeKind::Gateway(_) => {}
        }
    }
    for d in m.definition_ids() {
        let def = m.definition(d);
        if def.kind == DefKind::Message && !used.contains(&d) {
            out.push("FC-84", &def.id, "message is not used by any message flow, task or event");
        }
    }
    out.done()
}

pub(super) fn check_artifacts(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    let is_annotation = |e: &Option<Endpoint>| match e {
        Some(Endpoint::Artifact(a)) => matches!(m.artifact(*a).kind, ArtifactKind::TextAnnotation { .. }),
        _ => false,
    };
    for art in m.artifacts() {
        // FC-85
        if let ArtifactKind::Association { source, target, .. } = &art.kind {
            if is_annotation(source) && is_annotation(target) {
                out.push("FC-85", &art.id, "association connects two text annotations");
            }
        }
    }
    out.done()
}
