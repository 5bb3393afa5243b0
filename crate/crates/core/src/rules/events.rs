use std::collections::{BTreeMap, BTreeSet};

use super::process::event_subprocess_start_allowed;
use super::*;

fn in_event_subprocess(cx: &Ctx<'_>, node: &FlowNode) -> bool {
    matches!(node.container, ContainerId::SubProcess(p) if cx.node(p).is_event_subprocess())
}

/// Whether `t` may appear at the event's position; `None` when the position
/// is governed by another rule (top-level and embedded starts).
fn allowed(cx: &Ctx<'_>, node: &FlowNode, ev: &Event) -> Option<bool> {
    use TriggerKind::*;
    let t = ev.trigger.kind();
    let banned: &[TriggerKind] = match ev.position_kind() {
        PositionKind::Start => {
            return in_event_subprocess(cx, node).then(|| event_subprocess_start_allowed(t, ev.interrupting));
        }
        PositionKind::Boundary if ev.interrupting => &[None, Link, Terminate],
        PositionKind::Boundary => &[None, Link, Terminate, Cancel, Error, Compensation],
        PositionKind::IntermediateCatch => &[None, Error, Escalation, Cancel, Terminate, Compensation],
        PositionKind::IntermediateThrow => &[Cancel, Timer, Error, Terminate, ParallelMultiple, Conditional],
        PositionKind::End => &[Timer, Conditional, Link, ParallelMultiple],
    };
    Some(!banned.contains(&t))
}

fn position_name(p: PositionKind) -> &'static str {
    match p {
        PositionKind::Start => "start",
        PositionKind::End => "end",
        PositionKind::IntermediateCatch => "intermediate catch",
        PositionKind::IntermediateThrow => "intermediate throw",
        PositionKind::Boundary => "boundary",
    }
}

pub(super) fn check_typing(cx: &Ctx<'_>) -> Vec<Finding> {
    let mut out = Out::new();
    for (_, node) in cx.nodes() {
        let Some(ev) = node.event() else { continue };
        let t = ev.trigger.kind();
        // FC-12
        if allowed(cx, node, ev) == Some(false) {
            let mode = if ev.interrupting { "" } else { "non-interrupting " };
            out.push(
                "FC-12",
                &node.id,
                format!("{t} is not allowed as {mode}{} event here", position_name(ev.position_kind())),
            );
        }
        // FC-29
        if ev.position_kind() == PositionKind::Start && !ev.interrupting && !in_event_subprocess(cx, node) {
            out.push("FC-29", &node.id, "non-interrupting start event outside an event sub-process");
        }
        // FC-35
        if t == TriggerKind::Error && ev.position_kind() == PositionKind::IntermediateThrow {
            out.push("FC-35", &node.id, "error is thrown by an intermediate event");
        }
    }
    out.done()
}

pub(super) fn check_messages(cx: &Ctx<'_>) -> Vec<Finding> {
    let mut out = Out::new();
    for (n, node) in cx.nodes() {
        let Some(ev) = node.event() else { continue };
        let t = ev.trigger.kind();
        let ins = cx.graph.node_messages_in(n).len();
        let outs = cx.graph.node_messages_out(n).len();
        let message_like = t == TriggerKind::Message || is_multiple(t);
        if ev.is_catch() {
            // FC-15
            if ins > 0 && !message_like {
                out.push("FC-15", &node.id, format!("{t} catch event receives a message flow"));
            }
            // FC-16
            if ins > 1 && !is_multiple(t) {
                out.push("FC-16", &node.id, format!("{t} catch event receives {ins} message flows"));
            }
            // FC-17
            if outs > 0 {
                out.push("FC-17", &node.id, "catch event sends a message flow");
            }
        } else {
            // FC-18
            if outs > 0 && !message_like {
                out.push("FC-18", &node.id, format!("{t} throw event sends a message flow"));
            }
            // FC-19
            if outs > 1 && !is_multiple(t) {
                out.push("FC-19", &node.id, format!("{t} throw event sends {outs} message flows"));
            }
            // FC-20
            if ins > 0 {
                out.push("FC-20", &node.id, "throw event receives a message flow");
            }
        }
    }
    out.done()
}

pub(super) fn check_links(cx: &Ctx<'_>) -> Vec<Finding> {
    let mut out = Out::new();
    for &c in cx.graph.containers() {
        let mut catches: BTreeMap<&str, Vec<&FlowNode>> = BTreeMap::new();
        let mut throws: BTreeMap<&str, Vec<&FlowNode>> = BTreeMap::new();
        for node in cx.members(c) {
            let Some(ev) = node.event() else { continue };
            if ev.trigger.kind() != TriggerKind::Link {
                continue;
            }
            let catching = ev.position_kind() == PositionKind::IntermediateCatch;
            // FC-21
            if catching && !node.incoming.is_empty() {
                out.push("FC-21", &node.id, "catch link event has an incoming sequence flow");
            }
            if catching && node.outgoing.is_empty() {
                out.push("FC-21", &node.id, "catch link event has no outgoing sequence flow");
            }
            if !catching && !node.outgoing.is_empty() {
                out.push("FC-21", &node.id, "throw link event has an outgoing sequence flow");
            }
            if !catching && node.incoming.is_empty() {
                out.push("FC-21", &node.id, "throw link event has no incoming sequence flow");
            }
            // FC-23
            let Some(name) = ev.trigger.label().map(str::trim).filter(|s| !s.is_empty()) else {
                out.push("FC-23", &node.id, "link event has no name");
                continue;
            };
            let side = if catching { &mut catches } else { &mut throws };
            side.entry(name).or_default().push(node);
        }
        // FC-22
        for (name, nodes) in &catches {
            for dup in nodes.iter().skip(1) {
                out.push("FC-22", &dup.id, format!("another catch link event is named '{name}'"));
            }
        }
        // FC-24
        for (mine, other, what) in [(&throws, &catches, "catch"), (&catches, &throws, "throw")] {
            for (name, nodes) in mine {
                if !other.contains_key(name) {
                    for node in nodes {
                        out.push("FC-24", &node.id, format!("no {what} link event named '{name}' in this container"));
                    }
                }
            }
        }
    }
    out.done()
}

/// `(is_catch, name)` for signal events.
fn signal(node: &FlowNode) -> Option<(bool, Option<&str>)> {
    node.event()
        .filter(|e| e.trigger.kind() == TriggerKind::Signal)
        .map(|e| (e.is_catch(), e.trigger.label().map(str::trim).filter(|s| !s.is_empty())))
}

pub(super) fn check_signals(cx: &Ctx<'_>) -> Vec<Finding> {
    let mut out = Out::new();
    let mut catch_names: BTreeSet<&str> = BTreeSet::new();
    let mut unnamed_catch = false;
    let mut throw_names: BTreeSet<&str> = BTreeSet::new();
    let mut any_catch = false;
    for (_, node) in cx.nodes() {
        match signal(node) {
            Some((true, name)) => {
                any_catch = true;
                match name {
                    Some(n) => {
                        catch_names.insert(n);
                    }
                    None => unnamed_catch = true,
                }
            }
            Some((false, Some(n))) => {
                throw_names.insert(n);
            }
            _ => {}
        }
    }
    for (_, node) in cx.nodes() {
        match signal(node) {
            // FC-44
            Some((false, name)) => {
                let caught = match name {
                    Some(n) => unnamed_catch || catch_names.contains(n),
                    None => any_catch,
                };
                if !caught {
                    let what = name.map_or("unnamed signal".to_string(), |n| format!("signal '{n}'"));
                    out.push("FC-44", &node.id, format!("{what} is never caught"));
                }
            }
            // FC-45
            Some((true, Some(n))) if !throw_names.contains(n) => {
                out.push("FC-45", &node.id, format!("no event throws signal '{n}'"));
            }
            _ => {}
        }
    }
    out.done()
}
