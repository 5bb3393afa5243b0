#!/usr/bin/env python3
"""Regenerates the per-rule fixture pairs under crates/core/tests/fixtures/rules.

Each rule gets a conforming (`-ok`) and a violating (`-bad`) model. Every file
starts with a `counts:` comment holding element counts that the Rust test
suite re-derives from the loaded model.

    python3 tools/gen_fixtures.py
"""

import os
import sys
import xml.etree.ElementTree as ET

NS = "http://www.omg.org/spec/BPMN/20100524/MODEL"
XSI = "http://www.w3.org/2001/XMLSchema-instance"
HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "crates", "core", "tests", "fixtures", "rules")

DEF_TAGS = {
    "message": ("messageEventDefinition", "messageRef"),
    "timer": ("timerEventDefinition", None),
    "error": ("errorEventDefinition", "errorRef"),
    "escalation": ("escalationEventDefinition", "escalationRef"),
    "signal": ("signalEventDefinition", "signalRef"),
    "link": ("linkEventDefinition", "name"),
    "compensate": ("compensateEventDefinition", "activityRef"),
    "cancel": ("cancelEventDefinition", None),
    "terminate": ("terminateEventDefinition", None),
    "conditional": ("conditionalEventDefinition", None),
}


class Doc:
    def __init__(self):
        self.roots = []  # message, signal, ... definitions
        self.collab = None
        self.processes = []
        self.elements = {}
        self.counts = dict(processes=0, participants=0, nodes=0, sequence_flows=0, message_flows=0)
        self._flow = 0

    def _root_def(self, tag, id, name):
        el = ET.Element(tag, {"id": id})
        if name is not None:
            el.set("name", name)
        self.roots.append(el)
        return id

    def message(self, id, name=None):
        return self._root_def("message", id, name)

    def signal(self, id, name=None):
        return self._root_def("signal", id, name)

    def error(self, id, name=None):
        return self._root_def("error", id, name)

    def escalation(self, id, name=None):
        return self._root_def("escalation", id, name)

    def data_store(self, id, name=None):
        return self._root_def("dataStore", id, name)

    def process(self, id, name=None, **attrs):
        el = ET.Element("process", {"id": id})
        if name is not None:
            el.set("name", name)
        el.set("isExecutable", "false")
        for k, v in attrs.items():
            el.set(k, v)
        self.processes.append(el)
        self.counts["processes"] += 1
        return Container(self, el)

    def _collab(self):
        if self.collab is None:
            self.collab = ET.Element("collaboration", {"id": "collaboration"})
        return self.collab

    def pool(self, id, name, process=None):
        el = ET.SubElement(self._collab(), "participant", {"id": id, "name": name})
        if process is not None:
            el.set("processRef", process)
        self.counts["participants"] += 1
        return id

    def mf(self, s, t, name=None, message=None, id=None):
        self._flow += 1
        id = id or f"mf{self._flow}"
        el = ET.SubElement(self._collab(), "messageFlow", {"id": id, "sourceRef": s, "targetRef": t})
        if name is not None:
            el.set("name", name)
        if message is not None:
            el.set("messageRef", message)
        self.counts["message_flows"] += 1
        return id

    def render(self, header):
        root = ET.Element("definitions", {
            "xmlns": NS,
            "xmlns:xsi": XSI,
            "id": "definitions",
            "targetNamespace": "http://example.org/bpmnlint/fixtures",
        })
        root.extend(self.roots)
        if self.collab is not None:
            root.append(self.collab)
        root.extend(self.processes)
        ET.indent(root, space="  ")
        c = self.counts
        counts = " ".join(f"{k}={c[k]}" for k in ("processes", "participants", "nodes", "sequence_flows", "message_flows"))
        body = ET.tostring(root, encoding="unicode")
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f"<!-- {header} -->\n"
            f"<!-- counts: {counts} -->\n"
            f"{body}\n"
        )


class Container:
    def __init__(self, doc, el):
        self.doc = doc
        self.el = el

    @property
    def id(self):
        return self.el.get("id")

    def _node(self, tag, id, name=None, defs=(), **attrs):
        if id in self.doc.elements:
            raise ValueError(f"duplicate id {id}")
        el = ET.SubElement(self.el, tag, {"id": id})
        if name is not None:
            el.set("name", name)
        for k, v in attrs.items():
            el.set(k, v)
        for d in defs:
            kind, _, ref = d.partition(":")
            tag_name, attr = DEF_TAGS[kind]
            de = ET.SubElement(el, tag_name)
            if ref and attr:
                de.set(attr, ref)
            if kind == "timer":
                ET.SubElement(de, "timeDuration").text = "PT1H"
            if kind == "conditional":
                ET.SubElement(de, "condition").text = "ready"
        self.doc.elements[id] = el
        self.doc.counts["nodes"] += 1
        return id

    # events
    def start(self, id, name=None, *defs, **a):
        return self._node("startEvent", id, name, defs, **a)

    def end(self, id, name=None, *defs, **a):
        return self._node("endEvent", id, name, defs, **a)

    def catch(self, id, name=None, *defs, **a):
        return self._node("intermediateCatchEvent", id, name, defs, **a)

    def throw(self, id, name=None, *defs, **a):
        return self._node("intermediateThrowEvent", id, name, defs, **a)

    def boundary(self, id, name, on, *defs, interrupting=True):
        a = {"attachedToRef": on}
        if not interrupting:
            a["cancelActivity"] = "false"
        return self._node("boundaryEvent", id, name, defs, **a)

    # activities and gateways
    def task(self, id, name=None, kind="task", **a):
        return self._node(kind, id, name, **a)

    def gw(self, kind, id, name=None, **a):
        return self._node(kind + "Gateway", id, name, **a)

    def sub(self, id, name=None, kind="subProcess", **a):
        self._node(kind, id, name, **a)
        return Container(self.doc, self.doc.elements[id])

    # connections
    def flow(self, s, t, cond=None, name=None, default=False, id=None):
        self.doc._flow += 1
        id = id or f"f{self.doc._flow}"
        el = ET.SubElement(self.el, "sequenceFlow", {"id": id, "sourceRef": s, "targetRef": t})
        if name is not None:
            el.set("name", name)
        if cond is not None:
            ce = ET.SubElement(el, "conditionExpression", {"xsi:type": "tFormalExpression"})
            ce.text = cond
        if default:
            self.doc.elements[s].set("default", id)
        self.doc.counts["sequence_flows"] += 1
        return id

    def chain(self, *ids):
        for a, b in zip(ids, ids[1:]):
            self.flow(a, b)

    def line(self, prefix, *names):
        """start -> tasks named `names` -> end; returns (start, end)."""
        s = self.start(f"{prefix}start", "Started")
        ts = [self.task(f"{prefix}t{i}", n) for i, n in enumerate(names, 1)]
        e = self.end(f"{prefix}end", "Finished")
        self.chain(s, *ts, e)
        return s, e

    def artifact(self, tag, id, **a):
        el = ET.SubElement(self.el, tag, {"id": id, **a})
        return el

    def annotation(self, id, text):
        el = self.artifact("textAnnotation", id)
        ET.SubElement(el, "text").text = text
        return id

    def association(self, id, s, t, direction=None):
        a = {"sourceRef": s, "targetRef": t}
        if direction:
            a["associationDirection"] = direction
        self.artifact("association", id, **a)
        return id

    def data_object(self, id, name=None):
        a = {"name": name} if name else {}
        self.artifact("dataObject", id, **a)
        return id

    def data_ref(self, id, obj, name=None):
        a = {"dataObjectRef": obj}
        if name:
            a["name"] = name
        self.artifact("dataObjectReference", id, **a)
        return id

    def store_ref(self, id, store, name=None):
        a = {"dataStoreRef": store}
        if name:
            a["name"] = name
        self.artifact("dataStoreReference", id, **a)
        return id

    def writes(self, node, item, id):
        el = ET.SubElement(self.doc.elements[node], "dataOutputAssociation", {"id": id})
        ET.SubElement(el, "targetRef").text = item

    def reads(self, node, item, id):
        el = ET.SubElement(self.doc.elements[node], "dataInputAssociation", {"id": id})
        ET.SubElement(el, "sourceRef").text = item


FIXTURES = {}


def fixture(rule):
    def wrap(fn):
        FIXTURES[rule] = fn
        return fn
    return wrap


def pair(rule):
    """Runs a fixture builder for both variants."""
    out = {}
    for variant in ("ok", "bad"):
        d = Doc()
        note = FIXTURES[rule](d, variant == "bad")
        out[variant] = d.render(f"{rule} {'violating' if variant == 'bad' else 'conforming'}: {note[variant == 'bad']}")
    return out


# ---------------------------------------------------------------- processes

@fixture("FC-01")
def _(d, bad):
    d.pool("customer", "Customer")
    d.pool("shop", "Shop", "order")
    p = d.process("order", "Order handling")
    p.line("o_", "Ship goods")
    q = d.process("billing", "Billing")
    q.line("b_", "Send invoice")
    if bad:
        r = d.process("returns", "Returns")
        r.line("r_", "Refund")
    return ("one process outside the collaboration", "two processes outside the collaboration")


@fixture("FC-02")
def _(d, bad):
    d.pool("customer", "Customer")
    d.pool("shop_private", "Shop (internal)", "private")
    d.pool("shop_public", "Shop (public)", "public")
    d.message("order_msg", "Order")
    p = d.process("private", "Shop internal", processType="Private")
    s = p.start("pv_start", "Order expected")
    r = p.task("pv_receive", "Receive order", "receiveTask", messageRef="order_msg")
    c = p.task("pv_check", "Check stock")
    k = p.task("pv_pack", "Pack goods")
    e = p.end("pv_end", "Order shipped")
    p.chain(s, r, c, k, e)
    q = d.process("public", "Shop public", processType="Public")
    s = q.start("pb_start", "Order expected")
    r = q.task("pb_receive", "Receive order", "receiveTask", messageRef="order_msg")
    e = q.end("pb_end", "Order shipped")
    q.chain(s, r, e)
    d.mf("customer", "pv_receive", "Order", "order_msg")
    d.mf("customer", "pb_receive", "Order", "order_msg")
    if bad:
        # The public view promises a message the internal process never takes.
        n = q.task("pb_confirm", "Receive confirmation", "receiveTask", messageRef="order_msg")
        q.el.remove(q.el.findall("sequenceFlow")[-1])
        q.doc.counts["sequence_flows"] -= 1
        q.chain(r, n, e)
        d.mf("customer", "pb_confirm", "Order", "order_msg")
    return ("public view has no more elements than the internal process",
            "public view receives more message flows than the internal process")


@fixture("FC-03")
def _(d, bad):
    p = d.process("public", "Public view", processType="Public")
    p.el.set("isExecutable", "true" if bad else "false")
    p.line("", "Handle request")
    return ("public process is not executable", "public process marked executable")


@fixture("FC-04")
def _(d, bad):
    d.message("m", "Request")
    d.escalation("esc", "Late")
    p = d.process("p", "Process")
    s = p.start("start", "Triggered", "escalation:esc" if bad else "message:m")
    t = p.task("t", "Handle")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    return ("top-level message start", "top-level escalation start")


@fixture("FC-05")
def _(d, bad):
    if bad:
        d.message("m", "Go")
    p = d.process("main", "Main")
    s = p.start("start", "Begin")
    c = p.task("call", "Reuse", "callActivity", calledElement="reusable")
    e = p.end("end", "Done")
    p.chain(s, c, e)
    q = d.process("reusable", "Reusable")
    s = q.start("r_start", "Called", *(("message:m",) if bad else ()))
    t = q.task("r_task", "Work")
    e = q.end("r_end", "Returned")
    q.chain(s, t, e)
    return ("called process has a none start", "called process only has a message start")


@fixture("FC-06")
def _(d, bad):
    d.message("m", "Request")
    d.pool("customer", "Customer")
    d.pool("supplier", "Supplier")
    d.pool("company", "Company", "p")
    p = d.process("p", "Company")
    s = p.start("start", "Begin")
    sp = p.sub("sp", "Handle request")
    e = p.end("end", "Done")
    p.chain(s, "sp", e)
    i1 = sp.start("i_start", "Inner begin")
    i2 = sp.task("i_task", "Receive request", "userTask")
    i3 = sp.end("i_end", "Inner done")
    sp.chain(i1, i2, i3)
    d.mf("customer", "i_task", "Request", "m")
    d.mf("supplier" if bad else "customer", "sp", "Request", "m")
    return ("collapsed and expanded views exchange messages with the same pool",
            "sub-process talks to a pool its contents never talk to")


@fixture("FC-07")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    sp = p.sub("sp", "Embedded")
    e = p.end("end", "Done")
    p.chain(s, "sp", e)
    a = sp.start("i_a", "Inner begin")
    t = sp.task("i_t", "Work")
    x = sp.end("i_end", "Inner done")
    sp.chain(a, t, x)
    if bad:
        b = sp.start("i_b", "Second begin")
        sp.flow(b, t)
    return ("single none start inside the sub-process", "two start events inside the sub-process")


@fixture("FC-08")
def _(d, bad):
    d.message("m", "Cancel request")
    p = d.process("p", "Process")
    p.line("", "Work")
    ev = p.sub("esp", "On cancel request", triggeredByEvent="true")
    s = ev.start("e_start", "Cancel requested", *(() if bad else ("message:m",)))
    t = ev.task("e_task", "Undo")
    x = ev.end("e_end", "Undone")
    ev.chain(s, t, x)
    return ("event sub-process started by a message", "event sub-process with an untyped start")


@fixture("FC-09")
def _(d, bad):
    d.message("m", "Cancel request")
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    t = p.task("t", "Work")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    ev = p.sub("esp", "On cancel request", triggeredByEvent="true")
    a = ev.start("e_start", "Cancel requested", "message:m")
    b = ev.task("e_task", "Undo")
    c = ev.end("e_end", "Undone")
    ev.chain(a, b, c)
    if bad:
        p.el.remove(p.el.findall("sequenceFlow")[-1])
        d.counts["sequence_flows"] -= 1
        p.chain(t, "esp", e)
    return ("event sub-process stands apart from the flow", "event sub-process sits on the sequence flow")


@fixture("FC-10")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    t = p.task("t", "Book trip")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    b = p.boundary("comp", "Undo booking", t, "compensate")
    h = p.task("undo", "Cancel booking", isForCompensation="true")
    p.association("a1", b, h)
    if bad:
        p.task("lost", "Forgotten step")
    return ("only compensation activities stand without incoming flow",
            "an activity has no incoming flow although the process has a start")


@fixture("FC-11")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    t = p.task("t", "Work")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    if bad:
        x = p.task("dead", "Dead end")
        p.flow(t, x)
    return ("every node reaches an end", "an activity has no outgoing flow although the process has an end")


@fixture("FC-12")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    t = p.task("t", "Work")
    e = p.end("end", "Done", *(("timer",) if bad else ()))
    p.chain(s, t, e)
    b = p.boundary("late", "Too late", t, "timer")
    h = p.task("h", "Escalate")
    x = p.end("end2", "Escalated")
    p.chain(b, h, x)
    return ("timer used on a boundary", "timer used on an end event")


def straight(d, bad_flow):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    t = p.task("t", "Work")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    return p, s, t, e


@fixture("FC-13")
def _(d, bad):
    p, s, t, e = straight(d, bad)
    if bad:
        u = p.task("u", "Retry")
        p.chain(t, u, s)
    return ("start event only has outgoing flow", "flow leads back into the start event")


@fixture("FC-14")
def _(d, bad):
    p, s, t, e = straight(d, bad)
    if bad:
        u = p.task("u", "Archive")
        e2 = p.end("end2", "Archived")
        p.chain(e, u, e2)
    return ("end event only has incoming flow", "flow leaves an end event")


# ---------------------------------------------------------------- messages

def message_pools(d):
    d.message("m", "Order")
    d.pool("partner", "Partner")
    d.pool("company", "Company", "p")
    return d.process("p", "Company")


@fixture("FC-15")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Order received", "message:m")
    c = p.catch("wait", "Order confirmed", "timer" if bad else "message:m")
    e = p.end("end", "Done")
    p.chain(s, c, e)
    d.mf("partner", "start", "Order", "m")
    d.mf("partner", "wait", "Order", "m")
    return ("message catch events receive the messages", "timer event receives a message flow")


@fixture("FC-16")
def _(d, bad):
    p = message_pools(d)
    d.signal("sig", "Alarm")
    defs = ("message:m",) if bad else ("message:m", "signal:sig")
    s = p.start("start", "Order or alarm", *defs)
    t = p.task("t", "Handle")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    d.pool("other", "Other partner")
    d.mf("partner", "start", "Order", "m")
    d.mf("other", "start", "Order", "m")
    return ("multiple start receives two message flows", "message start receives two message flows")


@fixture("FC-17")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Begin")
    c = p.catch("wait", "Order received", "message:m")
    e = p.end("end", "Done")
    p.chain(s, c, e)
    if bad:
        d.mf("wait", "partner", "Order", "m")
    else:
        d.mf("partner", "wait", "Order", "m")
    return ("catch event receives", "catch event sends a message")


@fixture("FC-18")
def _(d, bad):
    p = message_pools(d)
    d.signal("sig", "Alarm")
    s = p.start("start", "Begin")
    t = p.task("t", "Work")
    e = p.end("end", "Reported", "signal:sig" if bad else "message:m")
    p.chain(s, t, e)
    d.mf("end", "partner", "Order", "m")
    return ("message end sends", "signal end sends a message flow")


@fixture("FC-19")
def _(d, bad):
    p = message_pools(d)
    d.signal("sig", "Alarm")
    d.pool("other", "Other partner")
    defs = ("message:m",) if bad else ("message:m", "signal:sig")
    s = p.start("start", "Begin")
    t = p.task("t", "Work")
    e = p.end("end", "Notified", *defs)
    p.chain(s, t, e)
    d.mf("end", "partner", "Order", "m")
    d.mf("end", "other", "Order", "m")
    return ("multiple end sends two messages", "message end sends two message flows")


@fixture("FC-20")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Begin")
    c = p.throw("send", "Order sent", "message:m")
    e = p.end("end", "Done")
    p.chain(s, c, e)
    if bad:
        d.mf("partner", "send", "Order", "m")
    else:
        d.mf("send", "partner", "Order", "m")
    return ("throw event sends", "throw event receives a message")


# ---------------------------------------------------------------- links

def link_pair(p, throw_name="Jump", catch_name="Jump"):
    s = p.start("start", "Begin")
    a = p.task("a", "First half")
    lt = p.throw("lt", throw_name, "link")
    lc = p.catch("lc", catch_name, "link")
    b = p.task("b", "Second half")
    e = p.end("end", "Done")
    p.chain(s, a, lt)
    p.chain(lc, b, e)
    return s, a, lt, lc, b, e


@fixture("FC-21")
def _(d, bad):
    p = d.process("p", "Process")
    if not bad:
        link_pair(p)
    else:
        s = p.start("start", "Begin")
        a = p.task("a", "First half")
        lt = p.throw("lt", "Jump", "link")
        lc = p.catch("lc", "Jump", "link")
        b = p.task("b", "Second half")
        e = p.end("end", "Done")
        p.chain(s, a, lc, b, e)
        p.chain(a, lt, b)
    return ("throw link only entered, catch link only left", "link events connected on the wrong side")


@fixture("FC-22")
def _(d, bad):
    p = d.process("p", "Process")
    link_pair(p)
    if bad:
        lc2 = p.catch("lc2", "Jump", "link")
        t = p.task("c", "Other half")
        e = p.end("end2", "Also done")
        p.chain(lc2, t, e)
    else:
        g = p.gw("exclusive", "g", "Skip?")
        p.el.remove([f for f in p.el.findall("sequenceFlow") if f.get("targetRef") == "a"][0])
        d.counts["sequence_flows"] -= 1
        lt2 = p.throw("lt2", "Jump", "link")
        p.flow("start", g)
        p.flow(g, "a", name="No", default=True)
        p.flow(g, lt2, cond="yes", name="Yes")
    return ("two throws share one catch", "two catch links carry the same name")


@fixture("FC-23")
def _(d, bad):
    p = d.process("p", "Process")
    link_pair(p, None if bad else "Jump", "Jump")
    return ("both link events named", "throw link has no name")


@fixture("FC-24")
def _(d, bad):
    p = d.process("p", "Process")
    link_pair(p, "Jump", "Leap" if bad else "Jump")
    return ("throw and catch names match", "throw and catch names differ")


# ---------------------------------------------------------------- connectivity

@fixture("FC-25")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Order")
    w = p.catch("wait", "One day passed", "timer")
    b = p.task("b", "Remind")
    e = p.end("end", "Done")
    if bad:
        p.chain(s, a, e)
        p.chain(w, b, p.end("end2", "Reminded"))
    else:
        p.chain(s, a, w, b, e)
    return ("intermediate event in the middle of the flow", "intermediate event without incoming flow")


@fixture("FC-26")
def _(d, bad):
    p = d.process("p", "Process")
    if bad:
        s = p.start("start", "Begin")
        a = p.task("a", "Prepare")
        b = p.task("b", "Ship")
        e = p.end("end", "Done")
        p.chain(s, b, e)
        p.flow(a, b)
    else:
        a = p.task("a", "Prepare")
        b = p.task("b", "Ship")
        p.chain(a, b)
    return ("implicit start only", "explicit start next to an implicitly started activity")


@fixture("FC-27")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Work")
    e = p.end("end", "Done")
    p.chain(s, a, e)
    if bad:
        b = p.task("b", "Side job")
        p.flow(b, e)
    return ("all activities reached from the start", "activity without incoming flow next to a start event")


@fixture("FC-28")
def _(d, bad):
    p = d.process("p", "Process")
    a = p.task("a", "Work")
    b = p.task("b", "Finish")
    p.chain(a, b)
    if bad:
        e = p.end("end", "Done")
        p.flow(b, e)
    return ("neither start nor end", "end event without a start event")


@fixture("FC-29")
def _(d, bad):
    d.message("m", "Status request")
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    sp = p.sub("sp", "Embedded")
    e = p.end("end", "Done")
    p.chain(s, "sp", e)
    if bad:
        a = sp.start("i_start", "Inner begin", isInterrupting="false")
    else:
        a = sp.start("i_start", "Inner begin")
        ev = p.sub("esp", "On status request", triggeredByEvent="true")
        x = ev.start("e_start", "Status requested", "message:m", isInterrupting="false")
        y = ev.task("e_t", "Report status")
        z = ev.end("e_end", "Reported")
        ev.chain(x, y, z)
    t = sp.task("i_t", "Work")
    x = sp.end("i_end", "Inner done")
    sp.chain(a, t, x)
    return ("non-interrupting start inside an event sub-process", "non-interrupting start in an embedded sub-process")


# ---------------------------------------------------------------- errors

def guarded_sub(d, throw_defs, catch_defs, interrupting=True, extra_catch=None):
    """Process with a sub-process whose end throws; boundary catches."""
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    sp = p.sub("sp", "Guarded work")
    e = p.end("end", "Done")
    p.chain(s, "sp", e)
    a = sp.start("i_start", "Inner begin")
    t = sp.task("i_t", "Risky step")
    g = sp.gw("exclusive", "i_g", "Failed?")
    ok = sp.end("i_ok", "Inner done")
    bad = sp.end("i_fail", "Inner failed", *throw_defs)
    sp.chain(a, t, g)
    sp.flow(g, ok, name="No", default=True)
    sp.flow(g, bad, cond="failed", name="Yes")
    catches = [catch_defs] + ([extra_catch] if extra_catch else [])
    for i, c in enumerate(catches, 1):
        b = p.boundary(f"b{i}", f"Caught {i}", "sp", *c, interrupting=interrupting)
        h = p.task(f"h{i}", f"Handle {i}")
        x = p.end(f"hx{i}", f"Handled {i}")
        p.chain(b, h, x)
    return p


@fixture("FC-30")
def _(d, bad):
    d.error("err", "Failure")
    p = guarded_sub(d, ("error:err",), ("error:err",))
    if bad:
        w = p.catch("wait_err", "Failure", "error:err")
        t = p.task("after", "Afterwards")
        x = p.end("after_end", "Afterwards done")
        p.chain(w, t, x)
    return ("error caught on a boundary", "error caught by an intermediate event in the flow")


@fixture("FC-31")
def _(d, bad):
    d.error("err", "Failure")
    p = guarded_sub(d, ("error:err",), ("error:err",))
    if bad:
        p.boundary("b_dead", "Failure ignored", "sp", "error:err")
    return ("error boundary leads to handling", "error boundary without outgoing flow")


@fixture("FC-32")
def _(d, bad):
    d.error("err", "Failure")
    d.error("err2", "Timeout")
    guarded_sub(d, ("error:err2",) if bad else ("error:err",), ("error:err",))
    return ("thrown error is caught by the boundary", "thrown error is never caught")


@fixture("FC-33")
def _(d, bad):
    d.error("err", "Failure")
    d.error("err3", "Unknown")
    guarded_sub(d, ("error:err",), ("error:err",), extra_catch=("error:err3",) if bad else None)
    return ("each named boundary has a matching throw", "boundary catches an error nothing throws")


@fixture("FC-34")
def _(d, bad):
    d.error("err", "Failure")
    guarded_sub(d, ("error:err",), ("error",), extra_catch=("error:err",) if bad else None)
    return ("one catch-all error boundary", "catch-all and named error boundaries on one activity")


@fixture("FC-35")
def _(d, bad):
    d.error("err", "Failure")
    p = guarded_sub(d, ("error:err",), ("error:err",))
    if bad:
        sp = Container(d, d.elements["sp"])
        sp.el.remove([f for f in sp.el.findall("sequenceFlow") if f.get("sourceRef") == "i_t"][0])
        d.counts["sequence_flows"] -= 1
        th = sp.throw("i_throw", "Raise failure", "error:err")
        sp.chain("i_t", th, "i_g")
    return ("error thrown by an end event", "error thrown by an intermediate event")


# ---------------------------------------------------------------- escalation

@fixture("FC-36")
def _(d, bad):
    d.escalation("esc", "Late")
    p = guarded_sub(d, ("escalation:esc",), ("escalation:esc",))
    if bad:
        w = p.catch("wait_esc", "Late", "escalation:esc")
        t = p.task("after", "Afterwards")
        x = p.end("after_end", "Afterwards done")
        p.chain(w, t, x)
    return ("escalation caught on a boundary", "escalation caught by an intermediate event in the flow")


@fixture("FC-37")
def _(d, bad):
    d.escalation("esc", "Late")
    guarded_sub(d, ("escalation:esc",), ("escalation:esc",))
    if bad:
        Container(d, d.processes[0]).boundary("b_dead", "Late ignored", "sp", "escalation:esc")
    return ("escalation boundary leads to handling", "escalation boundary without outgoing flow")


@fixture("FC-38")
def _(d, bad):
    d.escalation("esc", "Late")
    d.escalation("esc2", "Very late")
    guarded_sub(d, ("escalation:esc2",) if bad else ("escalation:esc",), ("escalation:esc",))
    return ("thrown escalation is caught by the boundary", "thrown escalation is never caught")


@fixture("FC-39")
def _(d, bad):
    d.escalation("esc", "Late")
    guarded_sub(d, ("escalation:esc",), ("escalation",), extra_catch=("escalation:esc",) if bad else None)
    return ("one catch-all interrupting escalation boundary",
            "catch-all and named interrupting escalation boundaries on one activity")


def escalating_throw_sub(d, interrupting, catches):
    """Sub-process with an intermediate escalation throw; boundaries catch."""
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    sp = p.sub("sp", "Long work")
    e = p.end("end", "Done")
    p.chain(s, "sp", e)
    a = sp.start("i_start", "Inner begin")
    th = sp.throw("i_throw", "Report delay", "escalation:esc")
    t = sp.task("i_t", "Keep working")
    x = sp.end("i_end", "Inner done")
    sp.chain(a, th, t, x)
    for i, c in enumerate(catches, 1):
        b = p.boundary(f"b{i}", f"Delay reported {i}", "sp", *c, interrupting=interrupting)
        h = p.task(f"h{i}", f"Inform customer {i}")
        y = p.end(f"hx{i}", f"Informed {i}")
        p.chain(b, h, y)


@fixture("FC-40")
def _(d, bad):
    d.escalation("esc", "Late")
    escalating_throw_sub(d, False, [("escalation",)] + ([("escalation:esc",)] if bad else []))
    return ("one catch-all non-interrupting escalation boundary",
            "catch-all and named non-interrupting escalation boundaries on one activity")


@fixture("FC-41")
def _(d, bad):
    d.escalation("esc", "Late")
    guarded_sub(d, ("escalation:esc",), ("escalation:esc",), interrupting=not bad)
    return ("end escalation caught by an interrupting boundary",
            "end escalation caught only by a non-interrupting boundary")


@fixture("FC-42")
def _(d, bad):
    d.escalation("esc", "Late")
    escalating_throw_sub(d, bad, [("escalation:esc",)])
    return ("intermediate escalation caught by a non-interrupting boundary",
            "intermediate escalation caught only by an interrupting boundary")


@fixture("FC-43")
def _(d, bad):
    d.escalation("esc", "Late")
    d.escalation("esc3", "Unknown")
    guarded_sub(d, ("escalation:esc",), ("escalation:esc",), extra_catch=("escalation:esc3",) if bad else None)
    return ("each named escalation boundary has a matching throw", "boundary catches an escalation nothing throws")


# ---------------------------------------------------------------- signals

@fixture("FC-44")
def _(d, bad):
    d.signal("sig", "Alarm")
    d.signal("sig2", "Fire")
    d.pool("a", "Sender", "pa")
    d.pool("b", "Receiver", "pb")
    p = d.process("pa", "Sender")
    s = p.start("a_start", "Begin")
    t = p.throw("a_throw", "Raise", "signal:sig2" if bad else "signal:sig")
    e = p.end("a_end", "Done")
    p.chain(s, t, e)
    q = d.process("pb", "Receiver")
    s = q.start("b_start", "Alarm heard", "signal:sig")
    t = q.task("b_t", "Evacuate")
    e = q.end("b_end", "Evacuated")
    q.chain(s, t, e)
    return ("thrown signal is caught in another pool", "thrown signal has no catching event")


@fixture("FC-45")
def _(d, bad):
    d.signal("sig", "Alarm")
    d.signal("sig2", "Fire")
    d.pool("a", "Sender", "pa")
    d.pool("b", "Receiver", "pb")
    p = d.process("pa", "Sender")
    s = p.start("a_start", "Begin")
    t = p.throw("a_throw", "Raise", "signal:sig")
    e = p.end("a_end", "Done")
    p.chain(s, t, e)
    q = d.process("pb", "Receiver")
    s = q.start("b_start", "Heard", "signal:sig2" if bad else "signal:sig")
    t = q.task("b_t", "Evacuate")
    e = q.end("b_end", "Evacuated")
    q.chain(s, t, e)
    return ("caught signal is thrown somewhere", "caught signal is never thrown")


# ---------------------------------------------------------------- transactions

def transaction(d, boundary_defs=("cancel",), cancel_end=True, ends=("none", "terminate"), comp_throw=False, extra=None):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    tx = p.sub("tx", "Booking", kind="transaction")
    e = p.end("end", "Done")
    p.chain(s, "tx", e)
    a = tx.start("i_start", "Inner begin")
    t = tx.task("i_t", "Book")
    g = tx.gw("exclusive", "i_g", "Booked?")
    tx.chain(a, t)
    last = t
    if comp_throw:
        c = tx.throw("i_comp", "Undo booking", "compensate")
        tx.chain(t, c)
        last = c
    tx.flow(last, g)
    outs = []
    for i, kind in enumerate(ends):
        defs = ("terminate",) if kind == "terminate" else ()
        outs.append(tx.end(f"i_end{i}", f"Inner end {i}", *defs))
    if cancel_end:
        outs.append(tx.end("i_cancel", "Cancelled", "cancel"))
    for i, o in enumerate(outs):
        last = i == len(outs) - 1
        tx.flow(g, o, cond=None if last else f"case {i}", name=f"Case {i}", default=last)
    b = p.boundary("b", "Booking cancelled", "tx", *boundary_defs)
    h = p.task("h", "Inform customer")
    x = p.end("hx", "Informed")
    p.chain(b, h, x)
    return p, tx


@fixture("FC-46")
def _(d, bad):
    if bad:
        d.message("m", "Abort")
    d.pool("customer", "Customer")
    d.pool("company", "Company", "p")
    transaction(d, ("message:m",) if bad else ("cancel",), cancel_end=not bad)
    if bad:
        d.mf("customer", "b", "Abort", "m")
    return ("transaction carries a cancel boundary", "transaction carries a message boundary")


@fixture("FC-47")
def _(d, bad):
    transaction(d, cancel_end=not bad)
    return ("cancel boundary backed by a cancel end inside", "cancel boundary without any cancel end inside")


@fixture("FC-48")
def _(d, bad):
    transaction(d, ends=("none", "none") if bad else ("none", "terminate"))
    return ("transaction ends with a none and a terminate end", "transaction has two ends and no terminate end")


@fixture("FC-49")
def _(d, bad):
    if bad:
        p, tx = transaction(d, comp_throw=True)
        tx.boundary("i_cb", None, "i_t", "compensate")
        u = tx.task("i_undo", "Undo booking", isForCompensation="true")
        tx.association("i_a", "i_cb", u)
    else:
        p = d.process("p", "Process")
        s = p.start("start", "Begin")
        t = p.task("t", "Book")
        c = p.throw("comp", "Undo booking", "compensate:t")
        e = p.end("end", "Done")
        p.chain(s, t, c, e)
        p.boundary("cb", None, t, "compensate")
        u = p.task("undo", "Undo booking", isForCompensation="true")
        p.association("a", "cb", u)
    return ("compensation thrown outside any transaction", "compensation thrown inside a transaction")


def compensable(d, named=True, associate=True):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    t = p.task("book", "Book hotel")
    c = p.throw("comp", "Book hotel" if named else None, "compensate" + (":book" if named else ""))
    e = p.end("end", "Done")
    p.chain(s, t, c, e)
    b = p.boundary("cb", None, t, "compensate")
    u = p.task("undo", "Cancel hotel", isForCompensation="true")
    if associate:
        p.association("a", b, u)
    return p


@fixture("FC-50")
def _(d, bad):
    compensable(d, associate=not bad)
    return ("compensation handler associated with a compensation boundary",
            "compensation activity associated with nothing")


@fixture("FC-51")
def _(d, bad):
    if bad:
        p = d.process("p", "Process")
        s = p.start("start", "Begin")
        t = p.task("book", "Book hotel")
        c = p.throw("comp", "Book flight", "compensate")
        e = p.end("end", "Done")
        p.chain(s, t, c, e)
        b = p.boundary("cb", None, t, "compensate")
        u = p.task("undo", "Cancel hotel", isForCompensation="true")
        p.association("a", b, u)
    else:
        compensable(d)
    return ("compensation targets a compensable activity", "compensation names an activity that does not exist")


# ---------------------------------------------------------------- exception merges

def exception_merge(d, interrupting, merge):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Wait for answer")
    g = p.gw(merge, "merge")
    t = p.task("t", "Continue")
    e = p.end("end", "Done")
    p.chain(s, a, g, t, e)
    b = p.boundary("b", "Two days passed", a, "timer", interrupting=interrupting)
    h = p.task("h", "Send reminder")
    p.chain(b, h, g)


@fixture("FC-52")
def _(d, bad):
    exception_merge(d, True, "inclusive" if bad else "exclusive")
    return ("interrupting exception flow merges at an exclusive gateway",
            "interrupting exception flow merges at an inclusive gateway")


@fixture("FC-53")
def _(d, bad):
    exception_merge(d, False, "exclusive" if bad else "inclusive")
    return ("non-interrupting exception flow merges at an inclusive gateway",
            "non-interrupting exception flow merges at an exclusive gateway")


@fixture("FC-54")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Work")
    e = p.end("end", "Done")
    p.chain(s, a, e)
    b = p.boundary("b", "Too late", a, "timer")
    h = p.task("h", "Escalate")
    x = p.end("hx", "Escalated")
    p.flow(b, h, cond="late" if bad else None)
    p.flow(h, x)
    return ("unconditional exception flow", "conditional flow leaves a boundary event")


@fixture("FC-55")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Work")
    e = p.end("end", "Done")
    p.chain(s, a, e)
    b = p.boundary("b", "Too late", a, "timer")
    h = p.task("h", "Escalate")
    x = p.end("hx", "Escalated")
    p.chain(b, h, x)
    if bad:
        h2 = p.task("h2", "Apologise")
        x2 = p.end("hx2", "Apologised")
        p.chain(b, h2, x2)
    return ("boundary with one outgoing flow", "boundary with two outgoing flows")


@fixture("FC-56")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Work")
    e = p.end("end", "Done")
    p.chain(s, a, e)
    b = p.boundary("b", "Too late", a, "timer")
    h = p.task("h", "Escalate")
    x = p.end("hx", "Escalated")
    p.chain(b, h, x)
    if bad:
        p.flow(s, b)
    return ("boundary only has outgoing flow", "sequence flow enters a boundary event")


@fixture("FC-57")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Begin")
    a = p.task("a", "Order")
    w = p.catch("w", "Goods received", "message:m")
    e = p.end("end", "Done")
    d.mf("partner", "w", "Order", "m")
    if bad:
        p.chain(s, a, e)
        b = p.task("b", "Store goods")
        p.chain(w, b, p.end("end2", "Stored"))
    else:
        p.chain(s, a, w, e)
    return ("message catch in the middle of the flow", "message catch without incoming flow")


# ---------------------------------------------------------------- gateways

def split_join(d, split, join, conds=False, default=False, branches=2, join_ins=None, split_dir=None, join_dir=None):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    sa = {"gatewayDirection": split_dir} if split_dir else {}
    ja = {"gatewayDirection": join_dir} if join_dir else {}
    g = p.gw(split, "split", "Which way?" if split in ("exclusive", "inclusive") else None, **sa)
    j = p.gw(join, "join", **ja)
    e = p.end("end", "Done")
    p.chain(s, g)
    for i in range(branches):
        t = p.task(f"t{i}", f"Branch {i}")
        is_default = default and i == branches - 1
        p.flow(g, t, cond=None if (not conds or is_default) else f"case {i}", name=f"Case {i}", default=is_default)
        if join_ins is None or i < join_ins:
            p.flow(t, j)
        else:
            p.flow(t, p.end(f"end{i}", f"Done {i}"))
    p.flow(j, e)
    return p


@fixture("FC-58")
def _(d, bad):
    if bad:
        split_join(d, "exclusive", "parallel", conds=True, default=True)
    else:
        split_join(d, "parallel", "parallel")
    return ("parallel split closed by a parallel join", "exclusive split closed by a parallel join")


@fixture("FC-59")
def _(d, bad):
    if bad:
        split_join(d, "parallel", "exclusive")
    else:
        split_join(d, "exclusive", "exclusive", conds=True, default=True)
    return ("exclusive split closed by an exclusive join", "parallel split closed by an exclusive join")


@fixture("FC-60")
def _(d, bad):
    split_join(d, "exclusive", "exclusive", conds=not bad, default=not bad, branches=3)
    return ("all branches conditional except the default", "branches without conditions")


@fixture("FC-61")
def _(d, bad):
    if bad:
        p = d.process("p", "Process")
        s = p.start("start", "Begin")
        g = p.gw("exclusive", "g")
        t = p.task("t", "Work")
        e = p.end("end", "Done")
        p.chain(s, g, t, e)
    else:
        split_join(d, "parallel", "parallel")
    return ("gateways split and join", "gateway with one incoming and one outgoing flow")


@fixture("FC-62")
def _(d, bad):
    if bad:
        p = d.process("p", "Process")
        s = p.start("start", "Begin")
        g = p.gw("parallel", "g", gatewayDirection="Converging")
        a = p.task("a", "Left")
        b = p.task("b", "Right")
        j = p.gw("parallel", "j")
        e = p.end("end", "Done")
        p.chain(s, g)
        p.chain(g, a, j)
        p.chain(g, b, j)
        p.flow(j, e)
    else:
        split_join(d, "parallel", "parallel", join_dir="Converging")
    return ("converging gateway only joins", "converging gateway splits")


@fixture("FC-63")
def _(d, bad):
    if bad:
        split_join(d, "parallel", "parallel", join_dir="Diverging")
    else:
        split_join(d, "parallel", "parallel", split_dir="Diverging")
    return ("diverging gateway only splits", "diverging gateway joins")


def event_gateway(d, targets, extra_in=None, cond=False):
    """Event-based gateway whose targets are given as (kind, tag-args)."""
    d.message("m", "Answer")
    d.pool("partner", "Partner")
    d.pool("company", "Company", "p")
    p = d.process("p", "Company")
    s = p.start("start", "Begin")
    g = p.gw("eventBased", "g", "First event?")
    j = p.gw("exclusive", "j")
    e = p.end("end", "Done")
    p.chain(s, g)
    ids = []
    for i, (kind, arg) in enumerate(targets):
        tid = f"x{i}"
        if kind == "catch":
            p.catch(tid, f"Event {i}", arg)
            if arg == "message:m":
                d.mf("partner", tid, "Answer", "m")
        elif kind == "receive":
            p.task(tid, f"Receive {i}", "receiveTask", messageRef="m")
            d.mf("partner", tid, "Answer", "m")
        else:
            p.task(tid, f"Do {i}", kind)
        p.flow(g, tid, cond=("ready" if cond and i == 0 else None))
        p.flow(tid, j)
        ids.append(tid)
    if len(ids) < 2:
        p.el.remove(d.elements["j"])
        d.counts["nodes"] -= 1
        for f in list(p.el.findall("sequenceFlow")):
            if f.get("targetRef") == "j":
                f.set("targetRef", "end")
        d.elements.pop("j")
    else:
        p.flow(j, e)
    return p, ids


@fixture("FC-64")
def _(d, bad):
    targets = [("catch", "message:m")] + ([] if bad else [("catch", "timer")])
    event_gateway(d, targets)
    return ("event-based gateway with two alternatives", "event-based gateway with a single alternative")


@fixture("FC-65")
def _(d, bad):
    event_gateway(d, [("catch", "message:m"), ("catch", "timer")], cond=bad)
    return ("plain flows after the event-based gateway", "conditional flow after the event-based gateway")


@fixture("FC-66")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    g = p.gw("inclusive", "g", "Which items?")
    a = p.task("a", "Pack books")
    b = p.task("b", "Pack music")
    j = p.gw("inclusive", "j")
    e = p.end("end", "Done")
    p.flow(s, g)
    p.flow(g, a, cond="books", name="Books")
    p.flow(g, b, cond=None if bad else "music", name="Music")
    p.chain(a, j)
    p.chain(b, j)
    p.flow(j, e)
    c = p.task("c", "Pack nothing")
    p.flow(g, c, name="Otherwise", default=True)
    p.flow(c, j)
    return ("every non-default branch has a condition", "non-default branch without a condition")


@fixture("FC-67")
def _(d, bad):
    event_gateway(d, [("catch", "message:m"), ("userTask", None) if bad else ("catch", "timer")])
    return ("event-based gateway followed by catch events", "event-based gateway followed by a user task")


@fixture("FC-68")
def _(d, bad):
    p, ids = event_gateway(d, [("receive", None), ("receive", None)])
    if bad:
        b = p.boundary("b", "Too late", ids[0], "timer")
        h = p.task("h", "Remind")
        x = p.end("hx", "Reminded")
        p.chain(b, h, x)
    return ("receive tasks after the gateway without boundaries", "receive task after the gateway has a boundary timer")


@fixture("FC-69")
def _(d, bad):
    event_gateway(d, [("catch", "message:m"), ("receive", None) if bad else ("catch", "message:m")])
    return ("only message catch events follow the gateway", "message catch and receive task follow the same gateway")


@fixture("FC-70")
def _(d, bad):
    p, ids = event_gateway(d, [("catch", "message:m"), ("catch", "timer")])
    if bad:
        # A second path reaches the timer event without passing the gateway.
        p.el.remove([f for f in p.el.findall("sequenceFlow") if f.get("sourceRef") == "start"][0])
        d.counts["sequence_flows"] -= 1
        f = p.gw("parallel", "fork")
        p.chain("start", f, "g")
        p.flow(f, ids[1])
    return ("each target only entered from the gateway", "gateway target also entered from elsewhere")


@fixture("FC-71")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    g = p.gw("parallel", "split")
    a = p.task("a", "Left")
    b = p.task("b", "Right")
    j = p.gw("parallel", "join")
    e = p.end("end", "Done")
    p.flow(s, g)
    p.flow(g, a, cond="x > 1" if bad else None)
    p.flow(g, b)
    p.chain(a, j)
    p.chain(b, j)
    p.flow(j, e)
    return ("parallel split with plain flows", "conditional flow leaves a parallel gateway")


@fixture("FC-72")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Check order")
    x = p.task("x", "Express shipping")
    y = p.task("y", "Normal shipping")
    j = p.gw("exclusive", "j")
    e = p.end("end", "Done")
    p.chain(s, a)
    p.flow(a, x, cond=None if bad else "urgent", name="Urgent")
    p.flow(a, y, name="Otherwise", default=True)
    p.chain(x, j)
    p.chain(y, j)
    p.flow(j, e)
    return ("activity with a conditional flow and a default", "default next to an unconditional flow is never taken")


@fixture("FC-73")
def _(d, bad):
    p = compensable(d)
    if bad:
        x = p.end("undo_end", "Undone")
        p.flow("undo", x)
    return ("compensation handler only associated", "compensation handler has an outgoing sequence flow")


@fixture("FC-74")
def _(d, bad):
    if not bad:
        compensable(d)
    else:
        d.pool("a", "Hotel", "p")
        d.pool("b", "Back office", "q")
        p = d.process("p", "Hotel")
        s = p.start("start", "Begin")
        t = p.task("book", "Book hotel")
        c = p.throw("comp", "Book hotel", "compensate:book")
        e = p.end("end", "Done")
        p.chain(s, t, c, e)
        b = p.boundary("cb", None, t, "compensate")
        q = d.process("q", "Back office")
        qs = q.start("q_start", "Begin")
        qt = q.task("q_t", "File")
        qe = q.end("q_end", "Filed")
        q.chain(qs, qt, qe)
        u = q.task("undo", "Cancel hotel", isForCompensation="true")
        p.association("a_cross", b, u)
    return ("handler in the same process as the compensated activity",
            "handler lives in another pool than the compensated activity")


# ---------------------------------------------------------------- task kinds and message flows

def task_pools(d, kind, incoming, outgoing, mf_name="Order"):
    p = message_pools(d)
    s = p.start("start", "Begin")
    extra = {"messageRef": "m"} if kind in ("sendTask", "receiveTask") else {}
    t = p.task("t", "Exchange", kind, **extra)
    e = p.end("end", "Done")
    p.chain(s, t, e)
    for _ in range(incoming):
        d.mf("partner", "t", mf_name, "m")
    for _ in range(outgoing):
        d.mf("t", "partner", mf_name, "m")
    return p


@fixture("FC-75")
def _(d, bad):
    task_pools(d, "receiveTask", 0 if bad else 1, 1 if bad else 0)
    return ("receive task receives", "receive task sends")


@fixture("FC-76")
def _(d, bad):
    task_pools(d, "sendTask", 1 if bad else 0, 0 if bad else 1)
    return ("send task sends", "send task receives")


@fixture("FC-77")
def _(d, bad):
    task_pools(d, "manualTask" if bad else "userTask", 1, 0)
    return ("user task receives a message", "manual task receives a message")


@fixture("FC-78")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Work")
    b = p.task("b", "More work")
    e = p.end("end", "Done")
    p.chain(s, a)
    p.flow(a, b, cond="ok" if bad else None)
    p.flow(b, e)
    return ("sole flows unconditional", "sole outgoing flow carries a condition")


@fixture("FC-79")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    sp = p.sub("sp", "Embedded")
    t = p.task("after", "After")
    e = p.end("end", "Done")
    p.chain(s, "sp", t, e)
    a = sp.start("i_start", "Inner begin")
    w = sp.task("i_t", "Inner work")
    x = sp.end("i_end", "Inner done")
    sp.chain(a, w, x)
    if bad:
        g = sp.gw("exclusive", "i_g", "Shortcut?")
        sp.el.remove([f for f in sp.el.findall("sequenceFlow") if f.get("sourceRef") == "i_t"][0])
        d.counts["sequence_flows"] -= 1
        sp.flow(w, g)
        sp.flow(g, x, cond="normal", name="No")
        sp.flow(g, t, cond="shortcut", name="Yes")
    return ("flows stay inside their sub-process", "flow leaves the sub-process border")


@fixture("FC-80")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Work")
    e = p.end("end", "Done")
    p.chain(s, a, e)
    if bad:
        p.flow(a, a)
    return ("no self loops", "flow loops back onto its own source")


@fixture("FC-81")
def _(d, bad):
    task_pools(d, "scriptTask" if bad else "sendTask", 0, 1)
    return ("send task is the sender", "script task is the sender")


@fixture("FC-82")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Begin")
    t = p.task("t", "Rate order", "businessRuleTask") if bad else p.task("t", "Receive", "receiveTask", messageRef="m")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    d.mf("partner", "t", "Order", "m")
    return ("receive task is the receiver", "business rule task is the receiver")


@fixture("FC-83")
def _(d, bad):
    d.message("m", "Order")
    d.pool("customer", "Customer", "cp" if bad else None)
    d.pool("company", "Company", "p")
    if bad:
        c = d.process("cp", "Customer")
        c.line("c_", "Buy")
    p = d.process("p", "Company")
    s = p.start("start", "Begin")
    t = p.task("t", "Receive order", "receiveTask", messageRef="m")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    d.mf("customer", "t", "Order", "m")
    return ("message flow from a black-box pool", "message flow from the border of a pool that shows its process")


@fixture("FC-84")
def _(d, bad):
    p = task_pools(d, "receiveTask", 1, 0)
    if bad:
        d.message("unused", "Complaint")
    return ("every message is exchanged", "message definition used by nothing")


@fixture("FC-85")
def _(d, bad):
    p = d.process("p", "Process")
    s, e = p.line("", "Work")
    n1 = p.annotation("note1", "Done by the clerk")
    p.association("a1", n1, "t1")
    if bad:
        n2 = p.annotation("note2", "See also")
        p.association("a2", n1, n2)
    return ("annotation associated with an activity", "association between two annotations")


# ---------------------------------------------------------------- data

@fixture("DF-01")
def _(d, bad):
    p = d.process("main", "Main")
    s = p.start("start", "Begin")
    c = p.task("call", "Reuse", "callActivity", calledElement="reusable")
    e = p.end("end", "Done")
    p.chain(s, c, e)
    p.data_object("main_doc", "Contract")
    p.data_ref("main_doc_ref", "main_doc", "Contract")
    q = d.process("reusable", "Reusable")
    qs = q.start("r_start", "Called")
    qt = q.task("r_t", "Work")
    qe = q.end("r_end", "Returned")
    q.chain(qs, qt, qe)
    q.data_object("r_doc", "Notes")
    q.data_ref("r_doc_ref", "r_doc", "Notes")
    q.writes(qt, "r_doc_ref", "r_w")
    p.reads(c, "main_doc_ref", "main_r")
    if bad:
        q.reads(qt, "main_doc_ref", "r_r")
    return ("called process only uses its own data", "called process reads a data object of its caller")


@fixture("DF-02")
def _(d, bad):
    p = d.process("p", "Process")
    s, e = p.line("", "Write report")
    p.data_object("doc", "Report")
    p.data_ref("doc_ref", "doc", "Report")
    if not bad:
        p.writes("t1", "doc_ref", "w")
    return ("data object written through a reference", "data object connected to nothing")


@fixture("DF-03")
def _(d, bad):
    d.data_store("store", "Customer database")
    p = d.process("p", "Process")
    p.line("", "Look up customer")
    if not bad:
        p.store_ref("store_ref", "store", "Customer database")
        p.reads("t1", "store_ref", "r")
    return ("data store referenced from the process", "data store referenced by nothing")


@fixture("DF-04")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.sub("a", "Prepare")
    b = p.sub("b", "Deliver")
    e = p.end("end", "Done")
    p.chain(s, "a", "b", e)
    for sp, pre in ((a, "a_"), (b, "b_")):
        x = sp.start(f"{pre}start", "Inner begin")
        t = sp.task(f"{pre}t", f"{sp.el.get('name')} step")
        y = sp.end(f"{pre}end", "Inner done")
        sp.chain(x, t, y)
    if bad:
        a.data_object("doc", "Draft")
        a.data_ref("doc_ref_a", "doc", "Draft")
        a.writes("a_t", "doc_ref_a", "w")
        b.data_ref("doc_ref_b", "doc", "Draft")
        b.reads("b_t", "doc_ref_b", "r")
    else:
        p.data_object("doc", "Draft")
        a.data_ref("doc_ref_a", "doc", "Draft")
        a.writes("a_t", "doc_ref_a", "w")
        b.data_ref("doc_ref_b", "doc", "Draft")
        b.reads("b_t", "doc_ref_b", "r")
    return ("both sub-processes reference a data object of their parent",
            "reference to a data object of a sibling sub-process")


# ---------------------------------------------------------------- practices

@fixture("BP-01")
def _(d, bad):
    p = d.process("p", "Process")
    n = 10 if bad else 5
    p.line("", *[f"Step {i}" for i in range(1, n + 1)])
    return ("seven nodes", "twelve nodes on one level")


@fixture("BP-02")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Begin")
    a = p.task("a", "Send order", "sendTask", messageRef="m")
    if bad:
        b = p.catch("b", "Confirmation received", "message:m")
    else:
        b = p.task("b", "Receive confirmation", "receiveTask", messageRef="m")
    e = p.end("end", "Done")
    p.chain(s, a, b, e)
    d.mf("a", "partner", "Order", "m")
    d.mf("partner", "b", "Order", "m")
    return ("messages handled by tasks only", "send task mixed with a message catch event")


@fixture("BP-03")
def _(d, bad):
    p = d.process("p", "Process")
    if bad:
        p.chain(p.task("a", "Work"), p.task("b", "Finish"))
    else:
        p.line("", "Work")
    return ("explicit start and end", "no start or end events")


@fixture("BP-04")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Order received")
    t = p.task("t", "Handle")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    if bad:
        s2 = p.start("start2", "Order phoned in")
        p.flow(s2, t)
    return ("single start", "two start events")


@fixture("BP-05")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Check")
    x = p.task("x", "Accept")
    y = p.task("y", "Reject")
    j = p.gw("exclusive", "j")
    e = p.end("end", "Done")
    p.chain(s, a)
    p.flow(a, x, cond="fine", name="Fine")
    if bad:
        p.flow(a, y, cond="broken", name="Broken")
    else:
        p.flow(a, y, name="Otherwise", default=True)
    p.chain(x, j)
    p.chain(y, j)
    p.flow(j, e)
    return ("conditional flows with a default", "conditional flows without a default")


@fixture("BP-06")
def _(d, bad):
    targets = [("catch", "message:m"), ("catch", "message:m") if bad else ("catch", "timer")]
    event_gateway(d, targets)
    return ("event-based gateway also waits for a timer", "event-based gateway without a timer")


@fixture("BP-07")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    a = p.task("a", "Left")
    b = p.task("b", "Right")
    j = p.gw("parallel", "join")
    e = p.end("end", "Done")
    if bad:
        p.chain(s, a)
        p.chain(s, b)
    else:
        f = p.gw("parallel", "fork")
        p.chain(s, f)
        p.chain(f, a)
        p.chain(f, b)
    p.chain(a, j)
    p.chain(b, j)
    p.flow(j, e)
    return ("event followed by a parallel gateway", "start event with two outgoing flows")


@fixture("BP-08")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", None if bad else "Begin")
    t = p.task("t", "Work")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    return ("named start", "unnamed start")


@fixture("BP-09")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Order received", "message:m")
    t = p.task("t", "Handle")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    if not bad:
        d.mf("partner", "start", "Order", "m")
    else:
        d.mf("partner", "t", "Order", "m")
    return ("message start with its message flow", "message start without a message flow")


@fixture("BP-10")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Begin")
    c = p.catch("c", "Order received", "message:m")
    e = p.end("end", "Done")
    p.chain(s, c, e)
    d.mf("partner", "start" if bad else "c", "Order", "m")
    return ("message catch with its message flow", "message catch without a message flow")


@fixture("BP-11")
def _(d, bad):
    p = message_pools(d)
    s = p.start("start", "Begin")
    c = p.throw("c", "Order sent", "message:m")
    e = p.end("end", "Done", "message:m")
    p.chain(s, c, e)
    d.mf("end", "partner", "Order", "m")
    if not bad:
        d.mf("c", "partner", "Order", "m")
    return ("message throw with its message flow", "message throw without a message flow")


@fixture("BP-12")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    w = p.catch("w", None if bad else "One day passed", "timer")
    e = p.end("end", "Done")
    p.chain(s, w, e)
    return ("named intermediate event", "unnamed intermediate event")


@fixture("BP-13")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    g = p.gw("exclusive", "g", "Approved?")
    a = p.end("end0", "Approved")
    b = p.end("end1", "Approved" if bad else "Rejected")
    p.flow(s, g)
    p.flow(g, a, cond="approved", name="Yes")
    p.flow(g, b, name="No", default=True)
    return ("end events named apart", "two end events share one name")


def decision(d, ends, question, branches):
    """Sub-process whose end events feed a question gateway."""
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    sp = p.sub("sp", "Review")
    g = p.gw("exclusive", "g", question)
    j = p.gw("exclusive", "j")
    e = p.end("end", "Done")
    p.chain(s, "sp")
    p.flow("sp", g)
    for i, b in enumerate(branches):
        t = p.task(f"b{i}", f"Follow up {i}")
        is_default = i == len(branches) - 1
        p.flow(g, t, cond=None if is_default else f"case {i}", name=b, default=is_default)
        p.flow(t, j)
    p.flow(j, e)
    a = sp.start("i_start", "Inner begin")
    t = sp.task("i_t", "Inner review")
    sp.flow(a, t)
    if len(ends) > 1:
        ig = sp.gw("exclusive", "i_g", "Outcome?")
        sp.flow(t, ig)
        for i, name in enumerate(ends):
            x = sp.end(f"i_end{i}", name)
            sp.flow(ig, x, cond=None if i == len(ends) - 1 else f"outcome {i}", name=name, default=i == len(ends) - 1)
    else:
        sp.flow(t, sp.end("i_end0", ends[0]))


@fixture("BP-14")
def _(d, bad):
    if bad:
        decision(d, ["Finished", "Aborted"], "Approved?", ["Yes", "No"])
    else:
        decision(d, ["Approved", "Rejected"], "Approved?", ["Approved", "Rejected"])
    return ("branch names repeat the end states", "branch names unrelated to the end states")


def plain_default(d, kind, default):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    g = p.gw(kind, "g", "Which way?")
    a = p.task("a", "Left")
    b = p.task("b", "Right")
    j = p.gw(kind, "j")
    e = p.end("end", "Done")
    p.flow(s, g)
    conds = kind != "complex"
    p.flow(g, a, cond="left" if conds else None, name="Left")
    p.flow(g, b, cond=None if default or not conds else "right", name="Right", default=default)
    p.chain(a, j)
    p.chain(b, j)
    p.flow(j, e)


@fixture("BP-15")
def _(d, bad):
    plain_default(d, "exclusive", not bad)
    return ("exclusive split with a default", "exclusive split without a default")


@fixture("BP-16")
def _(d, bad):
    plain_default(d, "inclusive", not bad)
    return ("inclusive split with a default", "inclusive split without a default")


@fixture("BP-17")
def _(d, bad):
    plain_default(d, "complex", not bad)
    return ("complex split with a default", "complex split without a default")


@fixture("BP-18")
def _(d, bad):
    split_join(d, "parallel", "parallel", branches=3, join_ins=2 if bad else None)
    return ("three-way parallel split closed by a three-way join", "three-way parallel split closed by a two-way join")


@fixture("BP-19")
def _(d, bad):
    split_join(d, "inclusive", "inclusive", conds=True, default=True, branches=3, join_ins=2 if bad else None)
    return ("three-way inclusive split closed by a three-way join", "three-way inclusive split closed by a two-way join")


@fixture("BP-20")
def _(d, bad):
    if bad:
        p = d.process("p", "Process")
        s = p.start("start", "Begin")
        g = p.gw("exclusive", "split", "Which way?")
        a = p.task("t0", "Branch 0")
        b = p.task("t1", "Branch 1")
        e = p.end("end", "Done")
        p.flow(s, g)
        p.flow(g, a, cond="left", name="Left")
        p.flow(g, b, name="Right", default=True)
        p.flow(a, e)
        p.flow(b, e)
    else:
        split_join(d, "exclusive", "exclusive", conds=True, default=True)
    return ("branches merged by a gateway", "end event merges two flows")


@fixture("BP-21")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    f = p.gw("parallel", "fork")
    a = p.task("a", "Left")
    b = p.task("b", "Right")
    c = p.task("c", "Up")
    x = p.task("x", "Down")
    j2 = p.gw("parallel", "join2")
    e = p.end("end", "Done")
    p.chain(s, f)
    p.chain(f, a)
    p.chain(f, b)
    if bad:
        m = p.gw("parallel", "mixed")
        p.chain(a, m)
        p.chain(b, m)
    else:
        j = p.gw("parallel", "join")
        m = p.gw("parallel", "fork2")
        p.chain(a, j)
        p.chain(b, j)
        p.chain(j, m)
    p.chain(m, c, j2)
    p.chain(m, x, j2)
    p.flow(j2, e)
    return ("joins and splits on separate gateways", "one gateway both joins and splits")


@fixture("BP-22")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    g = p.gw("exclusive", "g", "Which way?")
    a = p.task("a", "Left")
    b = p.task("b", "Right")
    c = p.task("c", "Middle")
    j = p.gw("exclusive", "j")
    e = p.end("end", "Done")
    p.flow(s, g)
    p.flow(g, a, cond="left", name=None if bad else "Left")
    p.flow(g, b, cond="right", name=None if bad else "Right")
    p.flow(g, c, name="Otherwise", default=True)
    for t in (a, b, c):
        p.flow(t, j)
    p.flow(j, e)
    return ("exclusive branches named", "two unnamed exclusive branches")


@fixture("BP-23")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    g = p.gw("inclusive", "g", "Which items?")
    a = p.task("a", "Pack books")
    b = p.task("b", "Pack music")
    j = p.gw("inclusive", "j")
    e = p.end("end", "Done")
    p.flow(s, g)
    p.flow(g, a, cond="books", name="Books")
    p.flow(g, b, name=None if bad else "Otherwise", default=True)
    p.chain(a, j)
    p.chain(b, j)
    p.flow(j, e)
    return ("inclusive branches named", "unnamed inclusive branch")


@fixture("BP-24")
def _(d, bad):
    if bad:
        decision(d, ["Done", "Failed"], "Approved?", ["Approved", "Rejected"])
    else:
        decision(d, ["Approved", "Rejected"], "Approved?", ["Approved", "Rejected"])
    return ("an end state answers the question", "no end state answers the question")


@fixture("BP-25")
def _(d, bad):
    p = d.process("p", "Process")
    s = p.start("start", "Begin")
    t = p.task("t", None if bad else "Work")
    e = p.end("end", "Done")
    p.chain(s, t, e)
    return ("named activity", "unnamed activity")


@fixture("BP-26")
def _(d, bad):
    p = d.process("p", "Process")
    p.line("", "Review", "Review" if bad else "Approve")
    return ("activity names unique", "two activities named alike")


@fixture("BP-27")
def _(d, bad):
    task_pools(d, "sendTask", 0, 0 if bad else 1)
    if bad:
        d.mf("partner", "start", "Order", "m")
        d.elements["start"].append(ET.Element("messageEventDefinition", {"messageRef": "m"}))
    return ("send task with its message flow", "send task without a message flow")


@fixture("BP-28")
def _(d, bad):
    task_pools(d, "receiveTask", 0 if bad else 1, 0)
    if bad:
        d.mf("partner", "start", "Order", "m")
        d.elements["start"].append(ET.Element("messageEventDefinition", {"messageRef": "m"}))
    return ("receive task with its message flow", "receive task without a message flow")


@fixture("BP-29")
def _(d, bad):
    if bad:
        decision(d, ["Reviewed"], "Approved?", ["Approved", "Rejected"])
    else:
        decision(d, ["Approved", "Rejected"], "Approved?", ["Approved", "Rejected"])
    return ("sub-process outcome shown by two ends", "single end before the question gateway")


@fixture("BP-30")
def _(d, bad):
    task_pools(d, "receiveTask", 1, 0, mf_name="Purchase" if bad else "Order")
    return ("message flow named like its message", "message flow named unlike its message")


@fixture("BP-31")
def _(d, bad):
    p = d.process("p", "Process")
    p.line("", "Work")
    n = p.annotation("note", "Done by the clerk")
    if not bad:
        p.association("a", n, "t1")
    return ("annotation attached", "annotation attached to nothing")


@fixture("BP-32")
def _(d, bad):
    p = d.process("p", "Process")
    p.line("", "Work")
    n = p.annotation("note", "Done by the clerk")
    p.association("a", n, "t1", "One" if bad else None)
    return ("undirected annotation association", "annotation association with an arrow")


# ---------------------------------------------------------------- composite models

def composite(d):
    """Order fulfilment model carrying one violation of each sampled rule."""
    d.message("payment", "Payment")
    d.message("receipt", "Receipt")
    d.message("cancellation", "Cancellation")
    d.pool("customer", "Customer")
    d.pool("shop", "Shop", "fulfilment")
    p = d.process("fulfilment", "Order fulfilment")
    # top-level start with a trigger not allowed there
    s = p.start("order_placed", "Order placed", "escalation")
    check = p.task("check_order", "Check order", "userTask")
    prep = p.task("prepare_shipment", "Prepare shipment")
    p.flow(s, check)
    # sole outgoing flow carries a condition
    p.flow(check, prep, cond="order is valid", name="Valid")
    # inclusive split without a default
    extras = p.gw("inclusive", "extras", "Extras ordered?")
    wrap = p.task("wrap_gift", "Wrap gift")
    insure = p.task("add_insurance", "Add insurance")
    joined = p.gw("inclusive", "extras_done")
    p.flow(prep, extras)
    p.flow(extras, wrap, cond="gift wrap", name="Gift wrap")
    p.flow(extras, insure, cond="insured", name="Insurance")
    p.chain(wrap, joined)
    p.chain(insure, joined)
    # event-based gateway without a timer alternative
    wait = p.gw("eventBased", "await_payment", "Await payment")
    paid = p.catch("payment_received", "Payment received", "message:payment")
    cancelled = p.catch("cancellation_received", "Cancellation received", "signal")
    p.chain(joined, wait)
    p.flow(wait, paid)
    p.flow(wait, cancelled)
    done = p.end("order_completed", "Order completed")
    p.flow(paid, done)
    # end event with an outgoing flow
    dropped = p.end("order_cancelled", "Order cancelled")
    archive = p.task("archive_order", "Archive order")
    archived = p.end("order_archived", "Order archived")
    p.chain(cancelled, dropped, archive, archived)
    # boundary event with two outgoing flows; the second path repeats an
    # activity name and ends in an activity without outgoing flow
    late = p.boundary("shipment_late", "Shipment late", prep, "timer")
    notify = p.task("notify_customer", "Notify customer")
    notified = p.end("customer_notified", "Customer notified")
    recheck = p.task("recheck_order", "Check order")
    stock = p.task("update_stock", "Update stock")
    p.chain(late, notify, notified)
    p.chain(late, recheck, stock)
    d.mf("customer", paid, "Payment", "payment")
    # catch event sending a message
    d.mf(paid, "customer", "Receipt", "receipt")
    # non-message catch event receiving a message
    d.mf("customer", cancelled, "Cancellation", "cancellation")


def clean(d):
    """A tidy collaboration that should produce no findings at all."""
    d.message("order", "Order")
    d.message("invoice", "Invoice")
    d.pool("customer", "Customer")
    d.pool("shop", "Shop", "shop_process")
    p = d.process("shop_process", "Order handling")
    s = p.start("order_received", "Order received", "message:order")
    check = p.task("check_stock", "Check stock", "serviceTask")
    avail = p.gw("exclusive", "in_stock", "In stock?")
    ship = p.task("ship_goods", "Ship goods", "manualTask")
    bill = p.task("send_invoice", "Send invoice", "sendTask", messageRef="invoice")
    reject = p.task("reject_order", "Reject order")
    merge = p.gw("exclusive", "merge")
    e = p.end("order_handled", "Order handled")
    p.chain(s, check, avail)
    p.flow(avail, ship, cond="in stock", name="Yes")
    p.flow(avail, reject, name="No", default=True)
    p.chain(ship, bill, merge)
    p.chain(reject, merge)
    p.flow(merge, e)
    d.mf("customer", s, "Order", "order")
    d.mf(bill, "customer", "Invoice", "invoice")


STRUCTURAL = {
    # message flow leaving a gateway
    "gateway-message-flow": lambda d: _structural_gateway(d),
    # sequence flow ending at a data store reference
    "data-store-sequence-flow": lambda d: _structural_store(d),
    # message flow without a targetRef
    "message-flow-missing-endpoint": lambda d: _structural_missing(d),
}


def _structural_base(d):
    d.message("m", "Order")
    d.pool("customer", "Customer")
    d.pool("shop", "Shop", "p")
    p = d.process("p", "Shop")
    s = p.start("start", "Begin")
    g = p.gw("exclusive", "g", "Accept?")
    a = p.task("a", "Accept", "userTask")
    b = p.task("b", "Decline")
    j = p.gw("exclusive", "j")
    e = p.end("end", "Done")
    p.flow(s, g)
    p.flow(g, a, cond="ok", name="Yes")
    p.flow(g, b, name="No", default=True)
    p.chain(a, j)
    p.chain(b, j)
    p.flow(j, e)
    return p


def _structural_gateway(d):
    _structural_base(d)
    d.mf("customer", "a", "Order", "m")
    d.mf("g", "customer", "Order", "m", id="mf_broken")
    # the flow is dropped on load, so it does not count
    d.counts["message_flows"] -= 1


def _structural_store(d):
    p = _structural_base(d)
    d.data_store("store", "Orders")
    p.store_ref("store_ref", "store", "Orders")
    p.flow("a", "store_ref", id="f_broken")
    d.counts["sequence_flows"] -= 1
    d.mf("customer", "a", "Order", "m")


def _structural_missing(d):
    _structural_base(d)
    d.mf("customer", "a", "Order", "m")
    d.mf("a", "customer", "Order", "m", id="mf_broken")
    el = [e for e in d.collab if e.get("id") == "mf_broken"][0]
    del el.attrib["targetRef"]
    # the flow is dropped on load, so it does not count
    d.counts["message_flows"] -= 1


def main():
    os.makedirs(OUT, exist_ok=True)
    only = set(sys.argv[1:])
    for rule in FIXTURES:
        if only and rule not in only:
            continue
        for variant, text in pair(rule).items():
            with open(os.path.join(OUT, f"{rule}-{variant}.bpmn"), "w") as f:
                f.write(text)
    for variant in ("ok", "bad"):
        with open(os.path.join(OUT, f"FC-02-{variant}.cfg"), "w") as f:
            f.write("abstraction = public : private\n")
    top = os.path.dirname(OUT)
    for name, build, note in [
        ("composite", composite, "composite model with one violation of each of ten sampled rules"),
        ("clean", clean, "well-formed collaboration without findings"),
    ]:
        d = Doc()
        build(d)
        with open(os.path.join(top, f"{name}.bpmn"), "w") as f:
            f.write(d.render(note))
    os.makedirs(os.path.join(top, "structural"), exist_ok=True)
    for name, build in STRUCTURAL.items():
        d = Doc()
        build(d)
        with open(os.path.join(top, "structural", f"{name}.bpmn"), "w") as f:
            f.write(d.render(f"structural defect: {name.replace('-', ' ')}"))


if __name__ == "__main__":
    main()
