use std::collections::{BTreeMap, VecDeque};

use super::*;

/// Above this many flow nodes a container gets hard to read.
const MAX_NODES: usize = 9;

fn is_message_intermediate(node: &FlowNode) -> bool {
    (node.is_event_at(PositionKind::IntermediateCatch) || node.is_event_at(PositionKind::IntermediateThrow))
        && node.trigger() == Some(TriggerKind::Message)
}

fn is_task(node: &FlowNode, pred: fn(&ActivityKind) -> bool) -> bool {
    node.activity().is_some_and(|a| pred(&a.kind))
}

fn send_or_receive(k: &ActivityKind) -> bool {
    matches!(k, ActivityKind::SendTask | ActivityKind::ReceiveTask { .. })
}

pub(super) fn check_structure(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for &c in cx.graph.containers() {
        let cid = m.container_id_str(c);
        let name = cx.container_label(c);
        let count = m.contents(c).nodes.len();
        // BP-01
        if count > MAX_NODES {
            out.push("BP-01", cid, format!("{name} has {count} flow nodes"));
        }
        // BP-02
        if cx.count_in(c, |n| is_task(n, send_or_receive)) > 0 && cx.count_in(c, is_message_intermediate) > 0 {
            out.push("BP-02", cid, format!("{name} mixes send/receive tasks with message events"));
        }
        let starts = cx.count_in(c, |n| n.is_event_at(PositionKind::Start));
        let ends = cx.count_in(c, |n| n.is_event_at(PositionKind::End));
        // BP-03
        if count > 0 && (starts == 0 || ends == 0) {
            out.push("BP-03", cid, format!("{name} lacks an explicit start or end event"));
        }
        // BP-04
        if starts > 1 {
            out.push("BP-04", cid, format!("{name} has {starts} start events"));
        }
    }
    for (_, node) in cx.nodes() {
        // BP-05
        if !node.is_event_at(PositionKind::End) {
            let conditional = node.outgoing.iter().any(|&f| m.flow(f).condition.is_some());
            if conditional && node.default_flow().is_none() && node.event().is_none() {
                out.push("BP-05", &node.id, "conditional flows without a default flow");
            }
        }
        // BP-06
        if matches!(node.gateway().map(|g| g.kind), Some(GatewayKind::EventBased { .. })) {
            let timer = node.outgoing.iter().any(|&f| {
                let t = cx.target(f);
                t.is_event_at(PositionKind::IntermediateCatch) && t.trigger() == Some(TriggerKind::Timer)
            });
            if !timer {
                out.push("BP-06", &node.id, "no timer branch; the gateway may wait forever");
            }
        }
        if let Some(ev) = node.event() {
            // BP-07
            if ev.position_kind() != PositionKind::End && node.outgoing.len() > 1 {
                out.push("BP-07", &node.id, format!("event has {} outgoing flows", node.outgoing.len()));
            }
            // BP-08
            if ev.position_kind() == PositionKind::Start && node.label().is_none() {
                out.push("BP-08", &node.id, "start event is unnamed");
            }
        }
    }
    out.done()
}

pub(super) fn check_naming(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for (n, node) in cx.nodes() {
        let ins = cx.graph.node_messages_in(n).len();
        let outs = cx.graph.node_messages_out(n).len();
        if let Some(ev) = node.event() {
            let message = ev.trigger.kind() == TriggerKind::Message;
            match ev.position_kind() {
                // BP-09
                PositionKind::Start if message && ins == 0 => {
                    out.push("BP-09", &node.id, "message start event has no incoming message flow")
                }
                PositionKind::IntermediateCatch | PositionKind::IntermediateThrow => {
                    let catching = ev.position_kind() == PositionKind::IntermediateCatch;
                    // BP-10
                    if message && catching && ins == 0 {
                        out.push("BP-10", &node.id, "message catch event has no incoming message flow");
                    }
                    // BP-11
                    if message && !catching && outs == 0 {
                        out.push("BP-11", &node.id, "message throw event has no outgoing message flow");
                    }
                    // BP-12
                    if node.label().is_none() {
                        out.push("BP-12", &node.id, "intermediate event is unnamed");
                    }
                }
                // BP-13
                PositionKind::End if node.label().is_none() => out.push("BP-13", &node.id, "end event is unnamed"),
                _ => {}
            }
            continue;
        }
        let Some(a) = node.activity() else { continue };
        // BP-25
        if node.label().is_none() {
            out.push("BP-25", &node.id, "activity is unnamed");
        }
        match a.kind {
            // BP-27
            ActivityKind::SendTask if outs == 0 => out.push("BP-27", &node.id, "send task has no outgoing message flow"),
            // BP-28
            ActivityKind::ReceiveTask { .. } if ins == 0 => {
                out.push("BP-28", &node.id, "receive task has no incoming message flow")
            }
            _ => {}
        }
    }

    for &c in cx.graph.containers() {
        // BP-13
        for (name, ends) in cx.graph.name_index(c, |n| n.is_event_at(PositionKind::End)) {
            for e in ends.iter().skip(1) {
                out.push("BP-13", &m.node(*e).id, format!("another end event is also named '{name}'"));
            }
        }
        // BP-26
        if let ContainerId::Process(_) = c {
            let mut by_name: BTreeMap<String, Vec<NodeId>> = BTreeMap::new();
            for n in cx.graph.descendants(c, true) {
                let node = m.node(n);
                if let (true, Some(l)) = (node.is_activity(), node.label()) {
                    by_name.entry(l.to_string()).or_default().push(n);
                }
            }
            for nodes in by_name.values() {
                for &n in nodes.iter().skip(1) {
                    let node = m.node(n);
                    out.push(
                        "BP-26",
                        &node.id,
                        format!("activity name '{}' is already used in this process", node.label().unwrap_or("")),
                    );
                }
            }
        }
    }

    // BP-30
    for mf in m.message_flows() {
        let named = label(&mf.name);
        match mf.message.map(|d| m.definition(d)) {
            Some(msg) => {
                let want = label(&msg.name);
                if want.is_some() && !named.zip(want).is_some_and(|(a, b)| same_label(a, b)) {
                    out.push(
                        "BP-30",
                        &mf.id,
                        format!("message flow is not named after message '{}'", want.unwrap_or("")),
                    );
                } else if want.is_none() && named.is_none() {
                    out.push("BP-30", &mf.id, "message flow is unnamed");
                }
            }
            None if named.is_none() => out.push("BP-30", &mf.id, "message flow is unnamed"),
            None => {}
        }
    }

    let is_annotation = |a: ArtifactId| matches!(m.artifact(a).kind, ArtifactKind::TextAnnotation { .. });
    for a in m.artifact_ids() {
        let art = m.artifact(a);
        match &art.kind {
            // BP-31
            ArtifactKind::TextAnnotation { .. } if cx.graph.associations_of(Endpoint::Artifact(a)).is_empty() => {
                out.push("BP-31", &art.id, "text annotation is not associated with anything")
            }
            // BP-32
            ArtifactKind::Association { source, target, direction } => {
                let touches = [source, target]
                    .into_iter()
                    .any(|e| matches!(e, Some(Endpoint::Artifact(x)) if is_annotation(*x)));
                if touches && *direction != ArrowDirection::None {
                    out.push("BP-32", &art.id, format!("annotation association has direction {direction:?}"));
                }
            }
            _ => {}
        }
    }
    out.done()
}

/// The nearest join of `kind` that every branch of `split` reaches.
fn closing_join(cx: &Ctx<'_>, split: NodeId, kind: GatewayKind) -> Option<NodeId> {
    let m = cx.model;
    let mut reach: Option<BTreeMap<NodeId, usize>> = None;
    for &f in &m.node(split).outgoing {
        let mut dist: BTreeMap<NodeId, usize> = BTreeMap::new();
        let start = m.flow(f).target;
        let mut queue = VecDeque::from([(start, 1usize)]);
        let mut seen = std::collections::BTreeSet::from([split, start]);
        while let Some((n, d)) = queue.pop_front() {
            let node = m.node(n);
            if node.gateway().is_some_and(|g| g.kind == kind) && node.incoming.len() >= 2 {
                dist.insert(n, d);
            }
            for &o in &node.outgoing {
                let t = m.flow(o).target;
                if seen.insert(t) {
                    queue.push_back((t, d + 1));
                }
            }
        }
        reach = Some(match reach {
            None => dist,
            Some(prev) => prev
                .into_iter()
                .filter_map(|(n, d)| dist.get(&n).map(|&e| (n, d.max(e))))
                .collect(),
        });
    }
    reach?.into_iter().min_by_key(|&(n, d)| (d, n)).map(|(n, _)| n)
}

/// Sub-processes directly followed by a gateway whose name is a question.
fn decisions<'a>(cx: &Ctx<'a>) -> Vec<(NodeId, &'a FlowNode)> {
    let mut out = Vec::new();
    for (n, node) in cx.nodes() {
        if node.contents.is_none() || node.is_event_subprocess() {
            continue;
        }
        for &f in &node.outgoing {
            let g = cx.target(f);
            if g.is_gateway() && g.label().is_some_and(|l| l.ends_with('?')) {
                out.push((n, g));
            }
        }
    }
    out
}

pub(super) fn check_gateways(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for (n, node) in cx.nodes() {
        let (ins, outs) = (node.incoming.len(), node.outgoing.len());
        // BP-20
        if node.event().is_some() && ins > 1 {
            out.push("BP-20", &node.id, format!("{ins} flows merge directly into an event"));
        }
        let Some(g) = node.gateway() else { continue };
        // BP-15 / BP-16 / BP-17
        let default_rule = match g.kind {
            GatewayKind::Exclusive => Some("BP-15"),
            GatewayKind::Inclusive => Some("BP-16"),
            GatewayKind::Complex => Some("BP-17"),
            _ => None,
        };
        if let Some(rule) = default_rule {
            if outs >= 2 && g.default_flow.is_none() {
                out.push(rule, &node.id, "splitting gateway has no default flow");
            }
        }
        // BP-18 / BP-19
        let pair_rule = match g.kind {
            GatewayKind::Parallel => Some("BP-18"),
            GatewayKind::Inclusive => Some("BP-19"),
            _ => None,
        };
        if let (Some(rule), true) = (pair_rule, outs >= 2) {
            match closing_join(cx, n, g.kind) {
                None => out.push(rule, &node.id, "branches never meet again at one matching join"),
                Some(j) if m.node(j).incoming.len() != outs => out.push(
                    rule,
                    &node.id,
                    format!(
                        "splits into {outs} branches but {} joins {}",
                        node_desc(m.node(j)),
                        m.node(j).incoming.len()
                    ),
                ),
                Some(_) => {}
            }
        }
        // BP-21
        if ins >= 2 && outs >= 2 {
            out.push("BP-21", &node.id, "gateway both merges and splits");
        }
        let unnamed = node.outgoing.iter().filter(|&&f| label(&m.flow(f).name).is_none()).count();
        // BP-22
        if g.kind == GatewayKind::Exclusive && outs >= 2 && unnamed > 1 {
            out.push("BP-22", &node.id, format!("{unnamed} outgoing flows are unnamed"));
        }
        // BP-23
        if g.kind == GatewayKind::Inclusive && outs >= 2 && unnamed > 0 {
            out.push("BP-23", &node.id, format!("{unnamed} outgoing flows are unnamed"));
        }
    }

    for (s, gw) in decisions(cx) {
        let sub = m.node(s);
        let ends: Vec<&str> = cx
            .members(ContainerId::SubProcess(s))
            .filter(|x| x.is_event_at(PositionKind::End))
            .filter_map(FlowNode::label)
            .collect();
        let end_count = cx.count_in(ContainerId::SubProcess(s), |x| x.is_event_at(PositionKind::End));
        let question = gw.label().unwrap_or("").trim_end_matches('?').trim();
        let branches: Vec<&str> = gw.outgoing.iter().filter_map(|&f| label(&m.flow(f).name)).collect();
        // BP-14
        if !ends.iter().any(|e| branches.iter().any(|b| same_label(e, b))) {
            out.push(
                "BP-14",
                &sub.id,
                format!("no end event is named like a branch of {}", node_desc(gw)),
            );
        }
        // BP-24
        if !ends.iter().any(|e| same_label(e, question)) {
            out.push(
                "BP-24",
                &sub.id,
                format!("no end event answers the question of {}", node_desc(gw)),
            );
        }
        // BP-29
        if end_count < 2 {
            out.push(
                "BP-29",
                &sub.id,
                format!("{end_count} end event(s) before the decision {}", node_desc(gw)),
            );
        }
    }
    out.done()
}
