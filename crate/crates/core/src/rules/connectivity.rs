use super::*;

/// Intermediate triggers that sit in normal flow and need both sides.
const FLOWING: &[TriggerKind] = &[
    TriggerKind::None,
    TriggerKind::Message,
    TriggerKind::Timer,
    TriggerKind::Escalation,
    TriggerKind::Compensation,
    TriggerKind::Conditional,
    TriggerKind::Signal,
    TriggerKind::Multiple,
    TriggerKind::ParallelMultiple,
];

fn is_exempt(node: &FlowNode) -> bool {
    node.is_event_subprocess() || node.is_compensation_activity()
}

fn is_ad_hoc(cx: &Ctx<'_>, c: ContainerId) -> bool {
    match c {
        ContainerId::SubProcess(n) => {
            matches!(cx.node(n).activity().map(|a| &a.kind), Some(ActivityKind::AdHocSubProcess))
        }
        ContainerId::Process(_) => false,
    }
}

fn is_link(node: &FlowNode, pos: PositionKind) -> bool {
    node.is_event_at(pos) && node.trigger() == Some(TriggerKind::Link)
}

pub(super) fn check(cx: &Ctx<'_>) -> Vec<Finding> {
    let mut out = Out::new();
    for &c in cx.graph.containers() {
        let has_start = cx.count_in(c, |n| n.is_event_at(PositionKind::Start)) > 0;
        let has_end = cx.count_in(c, |n| n.is_event_at(PositionKind::End)) > 0;
        let name = cx.container_label(c);
        let cid = cx.model.container_id_str(c);

        // FC-28
        if has_start != has_end {
            let (have, lack) = if has_start { ("start", "end") } else { ("end", "start") };
            out.push("FC-28", cid, format!("{name} has an explicit {have} event but no {lack} event"));
        }

        let mut orphans = Vec::new();
        for node in cx.members(c) {
            let activity_or_gateway = (node.is_activity() || node.is_gateway()) && !is_exempt(node);
            if activity_or_gateway && node.incoming.is_empty() {
                orphans.push(node);
                // FC-27 (incoming side)
                if has_start {
                    out.push("FC-27", &node.id, format!("{} has no incoming sequence flow", node_desc(node)));
                }
            }
            // FC-27 (outgoing side)
            if activity_or_gateway && node.outgoing.is_empty() && has_end {
                out.push("FC-27", &node.id, format!("{} has no outgoing sequence flow", node_desc(node)));
            }
        }
        // FC-26
        if !orphans.is_empty() {
            for s in cx.members(c).filter(|n| n.is_event_at(PositionKind::Start)) {
                out.push(
                    "FC-26",
                    &s.id,
                    format!("explicit start event next to implicit start {}", node_desc(orphans[0])),
                );
            }
        }

        if !(has_start && has_end) || is_ad_hoc(cx, c) {
            continue;
        }
        for node in cx.members(c) {
            let compensation_boundary = node.is_event_at(PositionKind::Boundary)
                && node.trigger() == Some(TriggerKind::Compensation);
            if is_exempt(node) || compensation_boundary {
                continue;
            }
            // FC-10
            if node.incoming.is_empty() && node.outgoing.is_empty() {
                out.push("FC-10", &node.id, format!("{} has no sequence flows", node_desc(node)));
            }
            // FC-11
            let needs_in = !node.is_event_at(PositionKind::Start)
                && !node.is_event_at(PositionKind::Boundary)
                && !is_link(node, PositionKind::IntermediateCatch);
            let needs_out = !node.is_event_at(PositionKind::End) && !is_link(node, PositionKind::IntermediateThrow);
            if needs_in && node.incoming.is_empty() {
                out.push("FC-11", &node.id, format!("{} has no incoming sequence flow", node_desc(node)));
            }
            if needs_out && node.outgoing.is_empty() {
                out.push("FC-11", &node.id, format!("{} has no outgoing sequence flow", node_desc(node)));
            }
        }
    }

    for (_, node) in cx.nodes() {
        let Some(ev) = node.event() else { continue };
        let t = ev.trigger.kind();
        match ev.position_kind() {
            // FC-13
            PositionKind::Start if !node.incoming.is_empty() => {
                out.push("FC-13", &node.id, "start event has an incoming sequence flow");
            }
            // FC-14
            PositionKind::End if !node.outgoing.is_empty() => {
                out.push("FC-14", &node.id, "end event has an outgoing sequence flow");
            }
            PositionKind::Boundary => {
                // FC-55
                if t != TriggerKind::Compensation && node.outgoing.len() != 1 {
                    out.push(
                        "FC-55",
                        &node.id,
                        format!("boundary event has {} outgoing sequence flows", node.outgoing.len()),
                    );
                }
                // FC-56
                if !node.incoming.is_empty() {
                    out.push("FC-56", &node.id, "boundary event has an incoming sequence flow");
                }
            }
            pos @ (PositionKind::IntermediateCatch | PositionKind::IntermediateThrow) => {
                let (no_in, no_out) = (node.incoming.is_empty(), node.outgoing.is_empty());
                // FC-25
                let (need_in, need_out) = match (t, pos) {
                    (TriggerKind::Link, PositionKind::IntermediateCatch) => (false, true),
                    (TriggerKind::Link, _) => (true, false),
                    _ => (true, true),
                };
                if (need_in && no_in) || (need_out && no_out) {
                    out.push(
                        "FC-25",
                        &node.id,
                        format!("intermediate event lacks an {} sequence flow", if need_in && no_in { "incoming" } else { "outgoing" }),
                    );
                }
                // FC-57
                if FLOWING.contains(&t) && (no_in || no_out) {
                    out.push(
                        "FC-57",
                        &node.id,
                        format!("{t} intermediate event needs incoming and outgoing sequence flows"),
                    );
                }
                if matches!(t, TriggerKind::Cancel | TriggerKind::Error) && !no_in {
                    out.push("FC-57", &node.id, format!("{t} intermediate event has an incoming sequence flow"));
                }
            }
            _ => {}
        }
    }
    out.done()
}
