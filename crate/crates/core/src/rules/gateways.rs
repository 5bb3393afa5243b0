use crate::graph::TokenMode;

use super::*;

const EVENT_GATEWAY_TARGETS: &[TriggerKind] = &[
    TriggerKind::Message,
    TriggerKind::Timer,
    TriggerKind::Signal,
    TriggerKind::Conditional,
    TriggerKind::Multiple,
];

fn is_receive_task(node: &FlowNode) -> bool {
    matches!(node.activity().map(|a| &a.kind), Some(ActivityKind::ReceiveTask { .. }))
}

pub(super) fn check_conditions(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for f in m.sequence_flows() {
        if f.condition.is_none() {
            continue;
        }
        let src = m.node(f.source);
        match &src.kind {
            // FC-54
            NodeKind::Event(_) => out.push("FC-54", &f.id, "conditional flow leaves an event"),
            NodeKind::Gateway(g) => match g.kind {
                // FC-65
                GatewayKind::EventBased { .. } => {
                    out.push("FC-65", &f.id, "conditional flow leaves an event-based gateway")
                }
                // FC-71
                GatewayKind::Parallel | GatewayKind::Complex => {
                    out.push("FC-71", &f.id, format!("conditional flow leaves a {:?} gateway", g.kind).to_lowercase())
                }
                _ => {}
            },
            NodeKind::Activity(_) => {}
        }
        // FC-78
        if src.outgoing.len() == 1 {
            out.push("FC-78", &f.id, format!("sole outgoing flow of {} has a condition", node_desc(src)));
        }
    }
    // FC-66
    for (_, node) in cx.nodes() {
        let Some(g) = node.gateway() else { continue };
        if !matches!(g.kind, GatewayKind::Exclusive | GatewayKind::Inclusive) || node.outgoing.len() < 2 {
            continue;
        }
        for &f in &node.outgoing {
            let flow = m.flow(f);
            if Some(f) != g.default_flow && flow.condition.is_none() {
                out.push("FC-66", &flow.id, format!("branch of {} has no condition", node_desc(node)));
            }
        }
    }
    out.done()
}

pub(super) fn check_structure(cx: &Ctx<'_>) -> Vec<Finding> {
    let m = cx.model;
    let mut out = Out::new();
    for (n, node) in cx.nodes() {
        let Some(g) = node.gateway() else { continue };
        let (ins, outs) = (node.incoming.len(), node.outgoing.len());

        // FC-58
        if g.kind == GatewayKind::Parallel && ins >= 2 {
            'pairs: for (i, &a) in node.incoming.iter().enumerate() {
                for &b in &node.incoming[i + 1..] {
                    if let Ok(false) = cx.graph.co_markable(a, b) {
                        out.push(
                            "FC-58",
                            &node.id,
                            format!("flows `{}` and `{}` never carry tokens together; the join deadlocks", m.flow(a).id, m.flow(b).id),
                        );
                        break 'pairs;
                    }
                }
            }
        }
        // FC-59
        if g.kind == GatewayKind::Exclusive && ins >= 2 {
            if let Ok(modes) = cx.graph.classify_incoming(n) {
                let shared: Vec<&str> = modes
                    .iter()
                    .filter(|(_, &mode)| mode == TokenMode::NonExclusive)
                    .map(|(&f, _)| m.flow(f).id.as_str())
                    .collect();
                if !shared.is_empty() {
                    out.push(
                        "FC-59",
                        &node.id,
                        format!("incoming flows {} can carry tokens at the same time", shared.join(", ")),
                    );
                }
            }
        }
        // FC-60
        if g.kind == GatewayKind::Exclusive && outs >= 2 {
            let branches: Vec<FlowId> = node.outgoing.iter().copied().filter(|&f| Some(f) != g.default_flow).collect();
            let all_conditional = branches.iter().all(|&f| m.flow(f).condition.is_some());
            let all_events = node.outgoing.iter().all(|&f| cx.target(f).is_event_at(PositionKind::IntermediateCatch));
            let all_receives = node.outgoing.iter().all(|&f| is_receive_task(cx.target(f)));
            if !(all_conditional || all_events || all_receives) {
                out.push("FC-60", &node.id, "branches mix conditional and unconditional flows");
            }
        }
        // FC-61
        if ins <= 1 && outs <= 1 {
            out.push("FC-61", &node.id, format!("gateway has {ins} incoming and {outs} outgoing flows"));
        }
        // FC-62 / FC-63
        match g.direction {
            GatewayDirection::Converging if ins < 2 || outs > 1 => {
                out.push("FC-62", &node.id, format!("converging gateway has {ins} incoming and {outs} outgoing flows"))
            }
            GatewayDirection::Diverging if outs < 2 || ins > 1 => {
                out.push("FC-63", &node.id, format!("diverging gateway has {ins} incoming and {outs} outgoing flows"))
            }
            _ => {}
        }
        if !matches!(g.kind, GatewayKind::EventBased { .. }) {
            continue;
        }
        // FC-64
        if outs < 2 {
            out.push("FC-64", &node.id, format!("event-based gateway has {outs} outgoing flows"));
        }
        let targets: Vec<&FlowNode> = node.outgoing.iter().map(|&f| cx.target(f)).collect();
        for t in &targets {
            // FC-67
            let ok = is_receive_task(t)
                || (t.is_event_at(PositionKind::IntermediateCatch)
                    && t.trigger().is_some_and(|k| EVENT_GATEWAY_TARGETS.contains(&k)));
            if !ok {
                out.push("FC-67", &node.id, format!("{} cannot follow an event-based gateway", node_desc(t)));
            }
            // FC-68
            if is_receive_task(t) && t.activity().is_some_and(|a| !a.boundary_events.is_empty()) {
                out.push("FC-68", &t.id, "receive task after an event-based gateway has boundary events");
            }
            // FC-70
            if t.incoming.len() != 1 {
                out.push("FC-70", &t.id, format!("event-based gateway target has {} incoming flows", t.incoming.len()));
            }
        }
        // FC-69
        let messages = targets
            .iter()
            .any(|t| t.is_event_at(PositionKind::IntermediateCatch) && t.trigger() == Some(TriggerKind::Message));
        if messages && targets.iter().any(|t| is_receive_task(t)) {
            out.push("FC-69", &node.id, "targets mix message catch events and receive tasks");
        }
    }
    out.done()
}
