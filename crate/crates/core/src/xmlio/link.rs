//! Turns a raw element tree into a [`BpmnModel`].
//!
//! Pass one allocates every element and records its id; pass two resolves
//! references. Anything that cannot be resolved is reported as an `M-*`
//! structural finding and left out of the graph.

use super::RawElement;
use crate::engine::Severity;
use crate::model::*;

const IGNORED_IN_CONTAINER: &[&str] = &[
    "documentation",
    "extensionElements",
    "auditing",
    "monitoring",
    "ioBinding",
    "correlationSubscription",
    "supportedInterfaceRef",
    "resourceRole",
    "performer",
    "humanPerformer",
    "potentialOwner",
    "standardLoopCharacteristics",
    "multiInstanceLoopCharacteristics",
    "completionCondition",
    "incoming",
    "outgoing",
    "categoryValueRef",
];

const IGNORED_IN_COLLABORATION: &[&str] = &[
    "documentation",
    "extensionElements",
    "conversation",
    "subConversation",
    "callConversation",
    "conversationNode",
    "conversationLink",
    "conversationAssociation",
    "participantAssociation",
    "messageFlowAssociation",
    "correlationKey",
    "choreographyRef",
];

const ACTIVITY_TAGS: &[&str] = &[
    "task",
    "sendTask",
    "receiveTask",
    "userTask",
    "serviceTask",
    "scriptTask",
    "manualTask",
    "businessRuleTask",
    "callActivity",
    "subProcess",
    "transaction",
    "adHocSubProcess",
];

const EVENT_TAGS: &[&str] = &[
    "startEvent",
    "endEvent",
    "intermediateCatchEvent",
    "intermediateThrowEvent",
    "boundaryEvent",
];

const GATEWAY_TAGS: &[&str] = &[
    "exclusiveGateway",
    "inclusiveGateway",
    "parallelGateway",
    "eventBasedGateway",
    "complexGateway",
];

struct PendingFlow {
    id: String,
    name: Option<String>,
    container: ContainerId,
    source: Option<String>,
    target: Option<String>,
    condition: Option<String>,
}

struct PendingMessageFlow {
    id: String,
    name: Option<String>,
    collaboration: CollabId,
    source: Option<String>,
    target: Option<String>,
    message: Option<String>,
}

#[derive(Default)]
struct PendingNode {
    default: Option<String>,
    attached_to: Option<String>,
    called: Option<String>,
    message: Option<String>,
    event_defs: Vec<RawElement>,
    parallel_multiple: bool,
}

struct PendingDataAssociation {
    index: usize,
    refs: Vec<String>,
}

pub(super) struct Linker {
    m: BpmnModel,
    nodes: Vec<PendingNode>,
    flows: Vec<PendingFlow>,
    message_flows: Vec<PendingMessageFlow>,
    participants: Vec<(ParticipantId, Option<String>)>,
    data_refs: Vec<(DataId, String)>,
    data_assocs: Vec<PendingDataAssociation>,
    assocs: Vec<(ArtifactId, Option<String>, Option<String>)>,
    anon: u32,
}

fn clean_ref(r: &str) -> &str {
    let r = r.trim();
    // QName references such as `tns:Message_1`
    match r.rsplit_once(':') {
        Some((_, local)) => local,
        None => r,
    }
}

impl Linker {
    pub(super) fn new(source_name: &str) -> Self {
        Linker {
            m: BpmnModel {
                source_name: source_name.to_string(),
                ..Default::default()
            },
            nodes: Vec::new(),
            flows: Vec::new(),
            message_flows: Vec::new(),
            participants: Vec::new(),
            data_refs: Vec::new(),
            data_assocs: Vec::new(),
            assocs: Vec::new(),
            anon: 0,
        }
    }

    pub(super) fn run(mut self, root: &RawElement) -> BpmnModel {
        self.m.ids.insert(
            root.attr("id").unwrap_or_default().to_string(),
            ElementRef::Definitions,
        );
        for child in &root.children {
            self.root_child(child);
        }
        self.resolve_participants();
        self.resolve_nodes();
        self.resolve_flows();
        self.resolve_defaults();
        self.resolve_boundaries();
        self.resolve_message_flows();
        self.resolve_data();
        self.resolve_associations();
        self.m.ids.remove("");
        self.m
    }

    fn finding(&mut self, code: &'static str, severity: Severity, element: &str, message: String) {
        self.m.load_findings.push(StructuralFinding {
            code,
            severity,
            element_id: element.to_string(),
            message,
        });
    }

    fn error(&mut self, code: &'static str, element: &str, message: String) {
        self.finding(code, Severity::Error, element, message);
    }

    /// Records `el`'s id (synthesizing one if absent) and returns it.
    fn register(&mut self, el: &RawElement, what: ElementRef) -> String {
        let id = match el.attr("id").map(str::trim).filter(|s| !s.is_empty()) {
            Some(id) => id.to_string(),
            None => {
                self.anon += 1;
                format!("_{}_{}", el.tag, self.anon)
            }
        };
        if self.m.ids.contains_key(&id) {
            self.error(
                "M-DUPLICATE-ID",
                &id,
                format!("duplicate id `{id}` on <{}> (line {})", el.tag, el.line),
            );
        } else {
            self.m.ids.insert(id.clone(), what);
        }
        id
    }

    fn reregister(&mut self, id: &str, what: ElementRef) {
        if let Some(slot) = self.m.ids.get_mut(id) {
            if *slot == ElementRef::Rejected {
                *slot = what;
            }
        }
    }

    fn bool_attr(&mut self, el: &RawElement, key: &str, default: bool) -> bool {
        self.opt_bool_attr(el, key).unwrap_or(default)
    }

    fn opt_bool_attr(&mut self, el: &RawElement, key: &str) -> Option<bool> {
        let raw = el.attr(key)?;
        match raw.trim() {
            "true" | "1" => Some(true),
            "false" | "0" => Some(false),
            other => {
                let id = el.attr("id").unwrap_or("").to_string();
                self.finding(
                    "M-PARSE-WARNING",
                    Severity::Info,
                    &id,
                    format!(
                        "line {}: attribute {key}=\"{other}\" is not a boolean; default used",
                        el.line
                    ),
                );
                None
            }
        }
    }

    fn name(el: &RawElement) -> Option<String> {
        el.attr("name").map(str::to_string)
    }

    // ---- pass one ------------------------------------------------------

    fn root_child(&mut self, el: &RawElement) {
        match el.tag.as_str() {
            "collaboration" => self.collaboration(el),
            "process" => self.process(el),
            "message" | "signal" | "error" | "escalation" | "globalTask" | "globalUserTask"
            | "globalScriptTask" | "globalManualTask" | "globalBusinessRuleTask" => {
                let kind = match el.tag.as_str() {
                    "message" => DefKind::Message,
                    "signal" => DefKind::Signal,
                    "error" => DefKind::Error,
                    "escalation" => DefKind::Escalation,
                    _ => DefKind::GlobalTask,
                };
                let d = DefId(self.m.definitions.len() as u32);
                let id = self.register(el, ElementRef::Definition(d));
                self.m.definitions.push(Definition {
                    id,
                    name: Self::name(el),
                    kind,
                });
            }
            "dataStore" => {
                self.data_element(el, None, DataKind::DataStore);
            }
            _ => {
                if el.attr("id").is_some() {
                    self.register(el, ElementRef::Opaque);
                }
            }
        }
    }

    fn collaboration(&mut self, el: &RawElement) {
        let cid = CollabId(self.m.collaborations.len() as u32);
        let id = self.register(el, ElementRef::Collaboration(cid));
        self.m.collaborations.push(Collaboration {
            id: id.clone(),
            name: Self::name(el),
            participants: Vec::new(),
            message_flows: Vec::new(),
            artifacts: Vec::new(),
        });
        for child in &el.children {
            match child.tag.as_str() {
                "participant" => {
                    let pid = ParticipantId(self.m.participants.len() as u32);
                    let pid_str = self.register(child, ElementRef::Participant(pid));
                    self.m.participants.push(Participant {
                        id: pid_str,
                        name: Self::name(child),
                        collaboration: cid,
                        process: None,
                    });
                    self.m.collaborations[cid.index()].participants.push(pid);
                    self.participants
                        .push((pid, child.attr("processRef").map(str::to_string)));
                }
                "messageFlow" => {
                    let fid = self.register(child, ElementRef::Rejected);
                    self.message_flows.push(PendingMessageFlow {
                        id: fid,
                        name: Self::name(child),
                        collaboration: cid,
                        source: child.attr("sourceRef").map(str::to_string),
                        target: child.attr("targetRef").map(str::to_string),
                        message: child.attr("messageRef").map(str::to_string),
                    });
                }
                "association" | "textAnnotation" | "group" => {
                    let a = self.artifact(child, ArtifactHome::Collaboration(cid));
                    self.m.collaborations[cid.index()].artifacts.push(a);
                }
                t if IGNORED_IN_COLLABORATION.contains(&t) => {}
                _ => self.unknown(child, &id, None),
            }
        }
    }

    fn unknown(&mut self, el: &RawElement, container_id: &str, home: Option<ContainerId>) {
        let reported = match el.attr("id") {
            Some(_) => {
                let id = self.register(el, ElementRef::Opaque);
                if let Some(c) = home {
                    self.m.located.insert(id.clone(), c);
                }
                id
            }
            None => container_id.to_string(),
        };
        self.finding(
            "M-UNKNOWN-ELEMENT",
            Severity::Info,
            &reported,
            format!(
                "unsupported element <{}> (line {}) kept as opaque and not checked",
                el.tag, el.line
            ),
        );
    }

    fn process(&mut self, el: &RawElement) {
        let pid = ProcessId(self.m.processes.len() as u32);
        let id = self.register(el, ElementRef::Process(pid));
        let process_type = match el.attr("processType").map(str::trim) {
            Some("Public") => ProcessType::Public,
            Some("Private") => ProcessType::Private,
            _ => ProcessType::None,
        };
        let is_executable = self.opt_bool_attr(el, "isExecutable");
        let is_closed = self.opt_bool_attr(el, "isClosed");
        self.m.processes.push(ProcessDef {
            id,
            name: Self::name(el),
            process_type,
            is_executable,
            is_closed,
            contents: Contents::default(),
        });
        self.container_children(ContainerId::Process(pid), el, false);
    }

    fn contents_mut(&mut self, c: ContainerId) -> &mut Contents {
        match c {
            ContainerId::Process(p) => &mut self.m.processes[p.index()].contents,
            ContainerId::SubProcess(n) => self.m.nodes[n.index()]
                .contents
                .as_mut()
                .expect("sub-process container"),
        }
    }

    fn container_children(&mut self, c: ContainerId, el: &RawElement, is_node: bool) {
        let cid = self.m.container_id_str(c).to_string();
        for child in &el.children {
            let tag = child.tag.as_str();
            if ACTIVITY_TAGS.contains(&tag) || EVENT_TAGS.contains(&tag) || GATEWAY_TAGS.contains(&tag) {
                self.node(c, child);
                continue;
            }
            match tag {
                "sequenceFlow" => {
                    let id = self.register(child, ElementRef::Rejected);
                    let condition = child
                        .children_named("conditionExpression")
                        .next()
                        .map(|e| e.text.trim().to_string());
                    self.flows.push(PendingFlow {
                        id,
                        name: Self::name(child),
                        container: c,
                        source: child.attr("sourceRef").map(str::to_string),
                        target: child.attr("targetRef").map(str::to_string),
                        condition,
                    });
                }
                "dataObject" => {
                    let d = self.data_element(child, Some(c), DataKind::DataObject);
                    self.contents_mut(c).data.push(d);
                }
                "dataObjectReference" => {
                    let d = self.data_element(child, Some(c), DataKind::DataObjectReference { object: None });
                    self.contents_mut(c).data.push(d);
                    if let Some(r) = child.attr("dataObjectRef") {
                        self.data_refs.push((d, r.to_string()));
                    }
                }
                "dataStoreReference" => {
                    let d = self.data_element(child, Some(c), DataKind::DataStoreReference { store: None });
                    self.contents_mut(c).data.push(d);
                    if let Some(r) = child.attr("dataStoreRef") {
                        self.data_refs.push((d, r.to_string()));
                    }
                }
                "association" | "textAnnotation" | "group" => {
                    let a = self.artifact(child, ArtifactHome::Container(c));
                    self.contents_mut(c).artifacts.push(a);
                }
                "laneSet" => self.lanes(child),
                // Handled on the node itself for sub-processes.
                "ioSpecification" | "property" | "dataInputAssociation" | "dataOutputAssociation"
                    if is_node => {}
                "ioSpecification" => self.io_specification(child, c),
                "property" => {
                    self.data_element(child, Some(c), DataKind::IoData);
                }
                t if IGNORED_IN_CONTAINER.contains(&t) => {}
                _ => self.unknown(child, &cid, Some(c)),
            }
        }
    }

    fn lanes(&mut self, el: &RawElement) {
        if el.attr("id").is_some() {
            self.register(el, ElementRef::Lane);
        }
        for lane in el.children_named("lane") {
            self.register(lane, ElementRef::Lane);
            for nested in lane.children_named("childLaneSet") {
                self.lanes(nested);
            }
        }
    }

    fn io_specification(&mut self, el: &RawElement, c: ContainerId) {
        for child in &el.children {
            if matches!(child.tag.as_str(), "dataInput" | "dataOutput") {
                self.data_element(child, Some(c), DataKind::IoData);
            }
        }
    }

    fn data_element(&mut self, el: &RawElement, container: Option<ContainerId>, kind: DataKind) -> DataId {
        let d = DataId(self.m.data.len() as u32);
        let id = self.register(el, ElementRef::Data(d));
        self.m.data.push(DataElement {
            id,
            name: Self::name(el),
            container,
            kind,
        });
        d
    }

    fn artifact(&mut self, el: &RawElement, home: ArtifactHome) -> ArtifactId {
        let a = ArtifactId(self.m.artifacts.len() as u32);
        let id = self.register(el, ElementRef::Artifact(a));
        let kind = match el.tag.as_str() {
            "association" => {
                let direction = match el.attr("associationDirection").map(str::trim) {
                    Some("One") => ArrowDirection::One,
                    Some("Both") => ArrowDirection::Both,
                    _ => ArrowDirection::None,
                };
                self.assocs.push((
                    a,
                    el.attr("sourceRef").map(str::to_string),
                    el.attr("targetRef").map(str::to_string),
                ));
                ArtifactKind::Association {
                    source: None,
                    target: None,
                    direction,
                }
            }
            "textAnnotation" => {
                let text = el
                    .children_named("text")
                    .map(|t| t.text.trim().to_string())
                    .collect::<Vec<_>>()
                    .join("\n");
                ArtifactKind::TextAnnotation { text }
            }
            _ => ArtifactKind::Group {
                name: Self::name(el),
            },
        };
        self.m.artifacts.push(Artifact {
            id,
            container: home,
            kind,
        });
        a
    }

    fn node(&mut self, c: ContainerId, el: &RawElement) {
        let n = NodeId(self.m.nodes.len() as u32);
        let id = self.register(el, ElementRef::Node(n));
        let mut pending = PendingNode {
            default: el.attr("default").map(str::to_string),
            ..Default::default()
        };
        let tag = el.tag.as_str();
        let mut has_contents = false;
        let kind = if ACTIVITY_TAGS.contains(&tag) {
            let kind = match tag {
                "sendTask" => ActivityKind::SendTask,
                "receiveTask" => ActivityKind::ReceiveTask {
                    instantiate: self.bool_attr(el, "instantiate", false),
                },
                "userTask" => ActivityKind::UserTask,
                "serviceTask" => ActivityKind::ServiceTask,
                "scriptTask" => ActivityKind::ScriptTask,
                "manualTask" => ActivityKind::ManualTask,
                "businessRuleTask" => ActivityKind::BusinessRuleTask,
                "callActivity" => {
                    pending.called = el.attr("calledElement").map(str::to_string);
                    ActivityKind::CallActivity { called: None }
                }
                "subProcess" => {
                    has_contents = true;
                    ActivityKind::SubProcess {
                        triggered_by_event: self.bool_attr(el, "triggeredByEvent", false),
                    }
                }
                "transaction" => {
                    has_contents = true;
                    ActivityKind::Transaction
                }
                "adHocSubProcess" => {
                    has_contents = true;
                    ActivityKind::AdHocSubProcess
                }
                _ => ActivityKind::AbstractTask,
            };
            if matches!(kind, ActivityKind::SendTask | ActivityKind::ReceiveTask { .. }) {
                pending.message = el.attr("messageRef").map(str::to_string);
            }
            NodeKind::Activity(Activity {
                kind,
                is_for_compensation: self.bool_attr(el, "isForCompensation", false),
                boundary_events: Vec::new(),
                default_flow: None,
                data_inputs: Vec::new(),
                data_outputs: Vec::new(),
                message_ref: None,
            })
        } else if EVENT_TAGS.contains(&tag) {
            let (position, interrupting) = match tag {
                "startEvent" => (EventPosition::Start, self.bool_attr(el, "isInterrupting", true)),
                "endEvent" => (EventPosition::End, true),
                "intermediateCatchEvent" => (EventPosition::IntermediateCatch, true),
                "intermediateThrowEvent" => (EventPosition::IntermediateThrow, true),
                _ => {
                    pending.attached_to = el.attr("attachedToRef").map(str::to_string);
                    let cancel = self.bool_attr(el, "cancelActivity", true);
                    (
                        EventPosition::Boundary {
                            attached_to: None,
                            cancel_activity: cancel,
                        },
                        cancel,
                    )
                }
            };
            pending.parallel_multiple = self.bool_attr(el, "parallelMultiple", false);
            pending.event_defs = el
                .children
                .iter()
                .filter(|c| c.tag.ends_with("EventDefinition"))
                .cloned()
                .collect();
            NodeKind::Event(Event {
                position,
                trigger: EventTrigger::None,
                interrupting,
                message_refs: Vec::new(),
            })
        } else {
            let direction = match el.attr("gatewayDirection").map(str::trim) {
                Some("Converging") => GatewayDirection::Converging,
                Some("Diverging") => GatewayDirection::Diverging,
                Some("Mixed") => GatewayDirection::Mixed,
                _ => GatewayDirection::Unspecified,
            };
            let kind = match tag {
                "exclusiveGateway" => GatewayKind::Exclusive,
                "inclusiveGateway" => GatewayKind::Inclusive,
                "parallelGateway" => GatewayKind::Parallel,
                "eventBasedGateway" => GatewayKind::EventBased {
                    instantiate: self.bool_attr(el, "instantiate", false),
                    parallel: el.attr("eventGatewayType").map(str::trim) == Some("Parallel"),
                },
                _ => GatewayKind::Complex,
            };
            NodeKind::Gateway(Gateway {
                kind,
                direction,
                default_flow: None,
            })
        };
        self.m.nodes.push(FlowNode {
            id,
            name: Self::name(el),
            container: c,
            kind,
            incoming: Vec::new(),
            outgoing: Vec::new(),
            contents: has_contents.then(Contents::default),
        });
        self.nodes.push(pending);
        self.contents_mut(c).nodes.push(n);

        for child in &el.children {
            match child.tag.as_str() {
                "dataInputAssociation" | "dataOutputAssociation" => {
                    let direction = if child.tag == "dataInputAssociation" {
                        AssociationDirection::Input
                    } else {
                        AssociationDirection::Output
                    };
                    let index = self.m.data_associations.len();
                    let id = self.register(child, ElementRef::DataAssociation(index));
                    // The far side is sourceRef for inputs and targetRef for
                    // outputs; the near side usually names an ioSpecification
                    // entry and is not needed.
                    let far = match direction {
                        AssociationDirection::Input => "sourceRef",
                        AssociationDirection::Output => "targetRef",
                    };
                    let refs = child
                        .children_named(far)
                        .map(|r| r.text.trim().to_string())
                        .filter(|r| !r.is_empty())
                        .collect();
                    self.m.data_associations.push(DataAssociation {
                        id,
                        direction,
                        owner: n,
                        items: Vec::new(),
                    });
                    self.data_assocs.push(PendingDataAssociation { index, refs });
                    if let NodeKind::Activity(a) = &mut self.m.nodes[n.index()].kind {
                        match direction {
                            AssociationDirection::Input => a.data_inputs.push(index),
                            AssociationDirection::Output => a.data_outputs.push(index),
                        }
                    }
                }
                "ioSpecification" => self.io_specification(child, c),
                "property" => {
                    self.data_element(child, Some(c), DataKind::IoData);
                }
                _ => {}
            }
        }
        if has_contents {
            self.container_children(ContainerId::SubProcess(n), el, true);
        }
    }

    // ---- pass two ------------------------------------------------------

    fn lookup(&mut self, owner: &str, attr: &str, raw: &str) -> Option<ElementRef> {
        let r = clean_ref(raw);
        match self.m.ids.get(raw.trim()).or_else(|| self.m.ids.get(r)) {
            Some(e) => Some(*e),
            None => {
                self.error(
                    "M-DANGLING-REF",
                    owner,
                    format!("{attr} `{}` does not resolve", raw.trim()),
                );
                None
            }
        }
    }

    fn lookup_def(&mut self, owner: &str, attr: &str, raw: Option<&str>, kind: DefKind) -> Option<DefId> {
        match self.lookup(owner, attr, raw?)? {
            ElementRef::Definition(d) if self.m.definitions[d.index()].kind == kind => Some(d),
            _ => {
                self.error(
                    "M-WRONG-KIND",
                    owner,
                    format!("{attr} `{}` is not a {kind:?} definition", raw.unwrap_or_default()),
                );
                None
            }
        }
    }

    fn resolve_participants(&mut self) {
        for (pid, r) in std::mem::take(&mut self.participants) {
            let Some(r) = r else { continue };
            let owner = self.m.participants[pid.index()].id.clone();
            match self.lookup(&owner, "processRef", &r) {
                Some(ElementRef::Process(p)) => self.m.participants[pid.index()].process = Some(p),
                Some(_) => self.error(
                    "M-WRONG-KIND",
                    &owner,
                    format!("processRef `{r}` is not a process"),
                ),
                None => {}
            }
        }
    }

    fn resolve_nodes(&mut self) {
        let pending = std::mem::take(&mut self.nodes);
        for (i, p) in pending.iter().enumerate() {
            let n = NodeId(i as u32);
            let owner = self.m.nodes[i].id.clone();
            if let Some(r) = &p.called {
                let called = match self.lookup(&owner, "calledElement", r) {
                    Some(ElementRef::Process(pid)) => Some(CalledElement::Process(pid)),
                    Some(ElementRef::Definition(d))
                        if self.m.definitions[d.index()].kind == DefKind::GlobalTask =>
                    {
                        Some(CalledElement::GlobalTask(d))
                    }
                    Some(_) => {
                        self.error(
                            "M-WRONG-KIND",
                            &owner,
                            format!("calledElement `{r}` is neither a process nor a global task"),
                        );
                        None
                    }
                    None => None,
                };
                if let NodeKind::Activity(Activity {
                    kind: ActivityKind::CallActivity { called: slot },
                    ..
                }) = &mut self.m.nodes[i].kind
                {
                    *slot = called;
                }
            }
            if p.message.is_some() {
                let d = self.lookup_def(&owner, "messageRef", p.message.as_deref(), DefKind::Message);
                if let NodeKind::Activity(a) = &mut self.m.nodes[i].kind {
                    a.message_ref = d;
                }
            }
            if self.m.nodes[i].event().is_some() {
                self.resolve_trigger(n, p);
            }
        }
        self.nodes = pending;
    }

    fn def_name(&mut self, owner: &str, attr: &str, raw: Option<&str>, kind: DefKind) -> Option<String> {
        let d = self.lookup_def(owner, attr, raw, kind)?;
        label(&self.m.definitions[d.index()].name).map(str::to_string)
    }

    fn resolve_trigger(&mut self, n: NodeId, p: &PendingNode) {
        let owner = self.m.nodes[n.index()].id.clone();
        let event_name = label(&self.m.nodes[n.index()].name).map(str::to_string);
        let mut message_refs = Vec::new();
        let mut triggers = Vec::new();
        for def in &p.event_defs {
            let t = match def.tag.as_str() {
                "messageEventDefinition" => {
                    if let Some(d) =
                        self.lookup_def(&owner, "messageRef", def.attr("messageRef"), DefKind::Message)
                    {
                        message_refs.push(d);
                    }
                    EventTrigger::Message
                }
                "timerEventDefinition" => EventTrigger::Timer,
                "errorEventDefinition" => EventTrigger::Error {
                    name: self.def_name(&owner, "errorRef", def.attr("errorRef"), DefKind::Error),
                },
                "escalationEventDefinition" => EventTrigger::Escalation {
                    name: self.def_name(&owner, "escalationRef", def.attr("escalationRef"), DefKind::Escalation),
                },
                "cancelEventDefinition" => EventTrigger::Cancel,
                "compensateEventDefinition" => {
                    let target = match def.attr("activityRef") {
                        Some(r) => match self.lookup(&owner, "activityRef", r) {
                            Some(ElementRef::Node(a)) => label(&self.m.nodes[a.index()].name).map(str::to_string),
                            _ => None,
                        },
                        None => None,
                    };
                    EventTrigger::Compensation {
                        activity_name: target.or_else(|| event_name.clone()),
                    }
                }
                "conditionalEventDefinition" => EventTrigger::Conditional,
                "linkEventDefinition" => EventTrigger::Link {
                    name: label(&def.attr("name").map(str::to_string))
                        .map(str::to_string)
                        .or_else(|| event_name.clone()),
                },
                "signalEventDefinition" => EventTrigger::Signal {
                    name: self.def_name(&owner, "signalRef", def.attr("signalRef"), DefKind::Signal),
                },
                "terminateEventDefinition" => EventTrigger::Terminate,
                other => {
                    self.finding(
                        "M-UNKNOWN-ELEMENT",
                        Severity::Info,
                        &owner,
                        format!("unsupported event definition <{other}> ignored"),
                    );
                    continue;
                }
            };
            triggers.push(t);
        }
        let trigger = match triggers.len() {
            0 => EventTrigger::None,
            1 => triggers.pop().expect("one trigger"),
            _ if p.parallel_multiple => EventTrigger::ParallelMultiple,
            _ => EventTrigger::Multiple,
        };
        if let NodeKind::Event(e) = &mut self.m.nodes[n.index()].kind {
            e.trigger = trigger;
            e.message_refs = message_refs;
        }
    }

    fn flow_endpoint(&mut self, owner: &str, attr: &str, raw: Option<&str>) -> Option<NodeId> {
        let Some(raw) = raw else {
            self.error("M-MISSING-ENDPOINT", owner, format!("sequence flow has no {attr}"));
            return None;
        };
        match self.lookup(owner, attr, raw)? {
            ElementRef::Node(n) => Some(n),
            other => {
                let what = self.describe(other);
                self.error(
                    "M-WRONG-KIND",
                    owner,
                    format!("{attr} `{}` is a {what}, not a flow node", raw.trim()),
                );
                None
            }
        }
    }

    fn describe(&self, r: ElementRef) -> &'static str {
        match r {
            ElementRef::Data(d) => match self.m.data[d.index()].kind {
                DataKind::DataStore | DataKind::DataStoreReference { .. } => "data store",
                DataKind::DataObject | DataKind::DataObjectReference { .. } => "data object",
                DataKind::IoData => "data input/output",
            },
            ElementRef::Node(n) => match self.m.nodes[n.index()].kind {
                NodeKind::Activity(_) => "activity",
                NodeKind::Event(_) => "event",
                NodeKind::Gateway(_) => "gateway",
            },
            ElementRef::Participant(_) => "participant",
            ElementRef::Process(_) => "process",
            ElementRef::SequenceFlow(_) => "sequence flow",
            ElementRef::MessageFlow(_) => "message flow",
            ElementRef::Artifact(_) => "artifact",
            ElementRef::Definition(_) => "root definition",
            ElementRef::Collaboration(_) => "collaboration",
            _ => "non-flow element",
        }
    }

    fn resolve_flows(&mut self) {
        for p in std::mem::take(&mut self.flows) {
            let src = self.flow_endpoint(&p.id, "sourceRef", p.source.as_deref());
            let tgt = self.flow_endpoint(&p.id, "targetRef", p.target.as_deref());
            let (Some(source), Some(target)) = (src, tgt) else {
                self.m.located.insert(p.id.clone(), p.container);
                continue;
            };
            let f = FlowId(self.m.sequence_flows.len() as u32);
            self.reregister(&p.id, ElementRef::SequenceFlow(f));
            self.m.sequence_flows.push(SequenceFlow {
                id: p.id,
                name: p.name,
                container: p.container,
                source,
                target,
                condition: p.condition,
                is_default: false,
            });
            self.m.nodes[source.index()].outgoing.push(f);
            self.m.nodes[target.index()].incoming.push(f);
            self.contents_mut(p.container).sequence_flows.push(f);
        }
    }

    fn resolve_defaults(&mut self) {
        for i in 0..self.nodes.len() {
            let Some(r) = self.nodes[i].default.clone() else { continue };
            let n = NodeId(i as u32);
            let owner = self.m.nodes[i].id.clone();
            let f = match self.lookup(&owner, "default", &r) {
                Some(ElementRef::SequenceFlow(f)) if self.m.sequence_flows[f.index()].source == n => f,
                Some(ElementRef::Rejected) | None => continue,
                Some(_) => {
                    self.error(
                        "M-WRONG-KIND",
                        &owner,
                        format!("default `{r}` is not an outgoing sequence flow of this node"),
                    );
                    continue;
                }
            };
            if self.m.sequence_flows[f.index()].condition.take().is_some() {
                let fid = self.m.sequence_flows[f.index()].id.clone();
                self.error(
                    "M-DEFAULT-CONDITION",
                    &fid,
                    "default sequence flow carries a condition expression; condition ignored".to_string(),
                );
            }
            self.m.sequence_flows[f.index()].is_default = true;
            match &mut self.m.nodes[i].kind {
                NodeKind::Activity(a) => a.default_flow = Some(f),
                NodeKind::Gateway(g) => g.default_flow = Some(f),
                NodeKind::Event(_) => {
                    self.m.sequence_flows[f.index()].is_default = false;
                    self.error(
                        "M-WRONG-KIND",
                        &owner,
                        "events cannot declare a default flow".to_string(),
                    );
                }
            }
        }
    }

    fn resolve_boundaries(&mut self) {
        for i in 0..self.nodes.len() {
            let is_boundary = matches!(
                self.m.nodes[i].event().map(|e| e.position),
                Some(EventPosition::Boundary { .. })
            );
            if !is_boundary {
                continue;
            }
            let owner = self.m.nodes[i].id.clone();
            let Some(r) = self.nodes[i].attached_to.clone() else {
                self.error(
                    "M-MISSING-ENDPOINT",
                    &owner,
                    "boundary event has no attachedToRef".to_string(),
                );
                continue;
            };
            let a = match self.lookup(&owner, "attachedToRef", &r) {
                Some(ElementRef::Node(a)) if self.m.nodes[a.index()].is_activity() => a,
                Some(other) => {
                    let what = self.describe(other);
                    self.error(
                        "M-WRONG-KIND",
                        &owner,
                        format!("attachedToRef `{r}` is a {what}, not an activity"),
                    );
                    continue;
                }
                None => continue,
            };
            if self.m.nodes[a.index()].container != self.m.nodes[i].container {
                self.error(
                    "M-BOUNDARY-CONTAINER",
                    &owner,
                    format!("boundary event is attached to `{r}`, which lives in another container"),
                );
            }
            if let NodeKind::Event(Event {
                position: EventPosition::Boundary { attached_to, .. },
                ..
            }) = &mut self.m.nodes[i].kind
            {
                *attached_to = Some(a);
            }
            if let NodeKind::Activity(act) = &mut self.m.nodes[a.index()].kind {
                act.boundary_events.push(NodeId(i as u32));
            }
        }
    }

    fn interaction_endpoint(&mut self, owner: &str, attr: &str, raw: Option<&str>) -> Option<InteractionRef> {
        let Some(raw) = raw else {
            self.error("M-MISSING-ENDPOINT", owner, format!("message flow has no {attr}"));
            return None;
        };
        match self.lookup(owner, attr, raw)? {
            ElementRef::Participant(p) => Some(InteractionRef::Participant(p)),
            ElementRef::Node(n) if !self.m.nodes[n.index()].is_gateway() => Some(InteractionRef::Node(n)),
            other @ (ElementRef::Node(_) | ElementRef::Data(_)) => {
                let what = self.describe(other);
                self.error(
                    "M-MESSAGE-FLOW-ENDPOINT",
                    owner,
                    format!("{attr} `{}` is a {what}; message flows connect pools, activities and events only", raw.trim()),
                );
                None
            }
            other => {
                let what = self.describe(other);
                self.error(
                    "M-WRONG-KIND",
                    owner,
                    format!("{attr} `{}` is a {what}, not an interaction node", raw.trim()),
                );
                None
            }
        }
    }

    fn resolve_message_flows(&mut self) {
        for p in std::mem::take(&mut self.message_flows) {
            let src = self.interaction_endpoint(&p.id, "sourceRef", p.source.as_deref());
            let tgt = self.interaction_endpoint(&p.id, "targetRef", p.target.as_deref());
            let message = self.lookup_def(&p.id, "messageRef", p.message.as_deref(), DefKind::Message);
            let (Some(source), Some(target)) = (src, tgt) else { continue };
            if source == target {
                self.error(
                    "M-MESSAGE-FLOW-ENDPOINT",
                    &p.id,
                    "message flow source and target are the same element".to_string(),
                );
                continue;
            }
            let f = MessageFlowId(self.m.message_flows.len() as u32);
            self.reregister(&p.id, ElementRef::MessageFlow(f));
            self.m.message_flows.push(MessageFlow {
                id: p.id,
                name: p.name,
                collaboration: p.collaboration,
                source,
                target,
                message,
            });
            self.m.collaborations[p.collaboration.index()].message_flows.push(f);
        }
    }

    fn resolve_data(&mut self) {
        for (d, r) in std::mem::take(&mut self.data_refs) {
            let owner = self.m.data[d.index()].id.clone();
            let resolved = self.lookup(&owner, "reference", &r);
            let is_object_ref = matches!(self.m.data[d.index()].kind, DataKind::DataObjectReference { .. });
            let target = match resolved {
                Some(ElementRef::Data(t)) => {
                    let ok = match self.m.data[t.index()].kind {
                        DataKind::DataObject => is_object_ref,
                        DataKind::DataStore => !is_object_ref,
                        _ => false,
                    };
                    ok.then_some(t)
                }
                None => continue,
                _ => None,
            };
            let Some(t) = target else {
                self.error(
                    "M-WRONG-KIND",
                    &owner,
                    format!("reference `{r}` does not name a {}", if is_object_ref { "data object" } else { "data store" }),
                );
                continue;
            };
            match &mut self.m.data[d.index()].kind {
                DataKind::DataObjectReference { object } => *object = Some(t),
                DataKind::DataStoreReference { store } => *store = Some(t),
                _ => {}
            }
        }
        for p in std::mem::take(&mut self.data_assocs) {
            let owner = self.m.data_associations[p.index].id.clone();
            let mut items = Vec::new();
            for r in &p.refs {
                match self.lookup(&owner, "data reference", r) {
                    Some(ElementRef::Data(d)) if self.m.data[d.index()].kind != DataKind::IoData => items.push(d),
                    _ => {}
                }
            }
            self.m.data_associations[p.index].items = items;
        }
    }

    fn endpoint(&mut self, owner: &str, attr: &str, raw: Option<&str>) -> Option<Endpoint> {
        let Some(raw) = raw else {
            self.error("M-MISSING-ENDPOINT", owner, format!("association has no {attr}"));
            return None;
        };
        Some(match self.lookup(owner, attr, raw)? {
            ElementRef::Node(n) => Endpoint::Node(n),
            ElementRef::Artifact(a) => Endpoint::Artifact(a),
            ElementRef::Data(d) => Endpoint::Data(d),
            _ => Endpoint::Other,
        })
    }

    fn resolve_associations(&mut self) {
        for (a, s, t) in std::mem::take(&mut self.assocs) {
            let owner = self.m.artifacts[a.index()].id.clone();
            let src = self.endpoint(&owner, "sourceRef", s.as_deref());
            let tgt = self.endpoint(&owner, "targetRef", t.as_deref());
            if let ArtifactKind::Association { source, target, .. } = &mut self.m.artifacts[a.index()].kind {
                *source = src;
                *target = tgt;
            }
        }
    }
}
