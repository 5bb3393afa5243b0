//! In-memory object graph for the collaboration / process-orchestration
//! subset of BPMN 2.0.
//!
//! Every element lives in an arena owned by [`BpmnModel`] and is addressed
//! through a small copyable id. The model is built once by
//! [`crate::xmlio`] and never mutated afterwards.

use std::collections::BTreeMap;
use std::fmt;

use crate::engine::Severity;

macro_rules! arena_id {
    ($($(#[$m:meta])* $name:ident;)*) => {$(
        $(#[$m])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub(crate) u32);

        impl $name {
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }
    )*};
}

arena_id! {
    /// Index of a [`FlowNode`].
    NodeId;
    /// Index of a [`SequenceFlow`].
    FlowId;
    MessageFlowId;
    ProcessId;
    ParticipantId;
    CollabId;
    DataId;
    ArtifactId;
    /// Index of a root-level [`Definition`] (message, signal, error, ...).
    DefId;
}

/// Anything that owns flow elements: a process or a sub-process-like node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ContainerId {
    Process(ProcessId),
    SubProcess(NodeId),
}

/// What an identifier resolves to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementRef {
    Definitions,
    Collaboration(CollabId),
    Participant(ParticipantId),
    Process(ProcessId),
    Node(NodeId),
    SequenceFlow(FlowId),
    MessageFlow(MessageFlowId),
    Data(DataId),
    DataAssociation(usize),
    Artifact(ArtifactId),
    Definition(DefId),
    Lane,
    /// An element outside the recognized vocabulary (kept, never checked).
    Opaque,
    /// An element that failed structural validation and was left out of
    /// the graph; its id still resolves so findings can point at it.
    Rejected,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("unknown id `{0}`")]
    UnknownId(String),
}

/// Direct children of a container.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Contents {
    pub nodes: Vec<NodeId>,
    pub sequence_flows: Vec<FlowId>,
    pub data: Vec<DataId>,
    pub artifacts: Vec<ArtifactId>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProcessType {
    #[default]
    None,
    Public,
    Private,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcessDef {
    pub id: String,
    pub name: Option<String>,
    pub process_type: ProcessType,
    pub is_executable: Option<bool>,
    pub is_closed: Option<bool>,
    pub contents: Contents,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collaboration {
    pub id: String,
    pub name: Option<String>,
    pub participants: Vec<ParticipantId>,
    pub message_flows: Vec<MessageFlowId>,
    pub artifacts: Vec<ArtifactId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Participant {
    pub id: String,
    pub name: Option<String>,
    pub collaboration: CollabId,
    pub process: Option<ProcessId>,
}

impl Participant {
    pub fn is_black_box(&self) -> bool {
        self.process.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNode {
    pub id: String,
    pub name: Option<String>,
    pub container: ContainerId,
    pub kind: NodeKind,
    pub incoming: Vec<FlowId>,
    pub outgoing: Vec<FlowId>,
    /// Present for sub-processes, transactions and ad-hoc sub-processes.
    pub contents: Option<Contents>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Activity(Activity),
    Event(Event),
    Gateway(Gateway),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Activity {
    pub kind: ActivityKind,
    pub is_for_compensation: bool,
    pub boundary_events: Vec<NodeId>,
    pub default_flow: Option<FlowId>,
    pub data_inputs: Vec<usize>,
    pub data_outputs: Vec<usize>,
    /// `messageRef` of send and receive tasks.
    pub message_ref: Option<DefId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActivityKind {
    AbstractTask,
    SendTask,
    ReceiveTask { instantiate: bool },
    UserTask,
    ServiceTask,
    ScriptTask,
    ManualTask,
    BusinessRuleTask,
    CallActivity { called: Option<CalledElement> },
    SubProcess { triggered_by_event: bool },
    Transaction,
    AdHocSubProcess,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CalledElement {
    Process(ProcessId),
    GlobalTask(DefId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Event {
    pub position: EventPosition,
    pub trigger: EventTrigger,
    /// `isInterrupting` for start events, `cancelActivity` for boundary
    /// events, `true` otherwise.
    pub interrupting: bool,
    /// Messages referenced by message event definitions.
    pub message_refs: Vec<DefId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventPosition {
    Start,
    End,
    IntermediateCatch,
    IntermediateThrow,
    Boundary {
        attached_to: Option<NodeId>,
        cancel_activity: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EventTrigger {
    None,
    Message,
    Timer,
    Error { name: Option<String> },
    Escalation { name: Option<String> },
    Cancel,
    Compensation { activity_name: Option<String> },
    Conditional,
    Link { name: Option<String> },
    Signal { name: Option<String> },
    Terminate,
    Multiple,
    ParallelMultiple,
}

/// Trigger without its payload, for set-membership tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriggerKind {
    None,
    Message,
    Timer,
    Error,
    Escalation,
    Cancel,
    Compensation,
    Conditional,
    Link,
    Signal,
    Terminate,
    Multiple,
    ParallelMultiple,
}

impl EventTrigger {
    pub fn kind(&self) -> TriggerKind {
        match self {
            EventTrigger::None => TriggerKind::None,
            EventTrigger::Message => TriggerKind::Message,
            EventTrigger::Timer => TriggerKind::Timer,
            EventTrigger::Error { .. } => TriggerKind::Error,
            EventTrigger::Escalation { .. } => TriggerKind::Escalation,
            EventTrigger::Cancel => TriggerKind::Cancel,
            EventTrigger::Compensation { .. } => TriggerKind::Compensation,
            EventTrigger::Conditional => TriggerKind::Conditional,
            EventTrigger::Link { .. } => TriggerKind::Link,
            EventTrigger::Signal { .. } => TriggerKind::Signal,
            EventTrigger::Terminate => TriggerKind::Terminate,
            EventTrigger::Multiple => TriggerKind::Multiple,
            EventTrigger::ParallelMultiple => TriggerKind::ParallelMultiple,
        }
    }

    /// The matching key carried by error, escalation, signal, link and
    /// compensation triggers.
    pub fn label(&self) -> Option<&str> {
        match self {
            EventTrigger::Error { name }
            | EventTrigger::Escalation { name }
            | EventTrigger::Link { name }
            | EventTrigger::Signal { name } => name.as_deref(),
            EventTrigger::Compensation { activity_name } => activity_name.as_deref(),
            _ => None,
        }
    }
}

impl fmt::Display for TriggerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gateway {
    pub kind: GatewayKind,
    pub direction: GatewayDirection,
    pub default_flow: Option<FlowId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GatewayKind {
    Exclusive,
    Inclusive,
    Parallel,
    EventBased { instantiate: bool, parallel: bool },
    Complex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GatewayDirection {
    #[default]
    Unspecified,
    Converging,
    Diverging,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFlow {
    pub id: String,
    pub name: Option<String>,
    pub container: ContainerId,
    pub source: NodeId,
    pub target: NodeId,
    /// Raw expression body; never evaluated.
    pub condition: Option<String>,
    pub is_default: bool,
}

/// Message-flow endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InteractionRef {
    Participant(ParticipantId),
    Node(NodeId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MessageFlow {
    pub id: String,
    pub name: Option<String>,
    pub collaboration: CollabId,
    pub source: InteractionRef,
    pub target: InteractionRef,
    pub message: Option<DefId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataElement {
    pub id: String,
    pub name: Option<String>,
    /// `None` for root-level data stores.
    pub container: Option<ContainerId>,
    pub kind: DataKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DataKind {
    DataObject,
    DataObjectReference { object: Option<DataId> },
    DataStore,
    DataStoreReference { store: Option<DataId> },
    /// `dataInput`, `dataOutput` or `property`: association endpoints that
    /// are not data objects.
    IoData,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssociationDirection {
    Input,
    Output,
}

/// A data input/output association owned by an activity or event.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataAssociation {
    pub id: String,
    pub direction: AssociationDirection,
    pub owner: NodeId,
    /// Data objects, references and store references on the far side.
    pub items: Vec<DataId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub id: String,
    pub container: ArtifactHome,
    pub kind: ArtifactKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArtifactHome {
    Container(ContainerId),
    Collaboration(CollabId),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ArrowDirection {
    #[default]
    None,
    One,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArtifactKind {
    Association {
        source: Option<Endpoint>,
        target: Option<Endpoint>,
        direction: ArrowDirection,
    },
    TextAnnotation { text: String },
    Group { name: Option<String> },
}

/// Resolved association endpoint. Associations may touch almost anything;
/// only the kinds the rules care about are distinguished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    Node(NodeId),
    Artifact(ArtifactId),
    Data(DataId),
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefKind {
    Message,
    Signal,
    Error,
    Escalation,
    GlobalTask,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub id: String,
    pub name: Option<String>,
    pub kind: DefKind,
}

/// A problem found while linking the raw document into a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralFinding {
    pub code: &'static str,
    pub severity: Severity,
    pub element_id: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BpmnModel {
    pub(crate) source_name: String,
    pub(crate) collaborations: Vec<Collaboration>,
    pub(crate) participants: Vec<Participant>,
    pub(crate) processes: Vec<ProcessDef>,
    pub(crate) nodes: Vec<FlowNode>,
    pub(crate) sequence_flows: Vec<SequenceFlow>,
    pub(crate) message_flows: Vec<MessageFlow>,
    pub(crate) definitions: Vec<Definition>,
    pub(crate) data: Vec<DataElement>,
    pub(crate) data_associations: Vec<DataAssociation>,
    pub(crate) artifacts: Vec<Artifact>,
    pub(crate) ids: BTreeMap<String, ElementRef>,
    /// Containers of elements that are not part of the graph proper
    /// (rejected flows, opaque elements).
    pub(crate) located: BTreeMap<String, ContainerId>,
    pub(crate) load_findings: Vec<StructuralFinding>,
}

impl BpmnModel {
    pub fn source_name(&self) -> &str {
        &self.source_name
    }

    pub fn resolve(&self, id: &str) -> Result<ElementRef, ModelError> {
        self.ids
            .get(id)
            .copied()
            .ok_or_else(|| ModelError::UnknownId(id.to_string()))
    }

    pub fn collaborations(&self) -> &[Collaboration] {
        &self.collaborations
    }
    pub fn participants(&self) -> &[Participant] {
        &self.participants
    }
    pub fn processes(&self) -> &[ProcessDef] {
        &self.processes
    }
    pub fn nodes(&self) -> &[FlowNode] {
        &self.nodes
    }
    pub fn sequence_flows(&self) -> &[SequenceFlow] {
        &self.sequence_flows
    }
    pub fn message_flows(&self) -> &[MessageFlow] {
        &self.message_flows
    }
    pub fn definitions(&self) -> &[Definition] {
        &self.definitions
    }
    pub fn data(&self) -> &[DataElement] {
        &self.data
    }
    pub fn data_associations(&self) -> &[DataAssociation] {
        &self.data_associations
    }
    pub fn artifacts(&self) -> &[Artifact] {
        &self.artifacts
    }

    pub fn node(&self, id: NodeId) -> &FlowNode {
        &self.nodes[id.index()]
    }
    pub fn flow(&self, id: FlowId) -> &SequenceFlow {
        &self.sequence_flows[id.index()]
    }
    pub fn message_flow(&self, id: MessageFlowId) -> &MessageFlow {
        &self.message_flows[id.index()]
    }
    pub fn process(&self, id: ProcessId) -> &ProcessDef {
        &self.processes[id.index()]
    }
    pub fn participant(&self, id: ParticipantId) -> &Participant {
        &self.participants[id.index()]
    }
    pub fn definition(&self, id: DefId) -> &Definition {
        &self.definitions[id.index()]
    }
    pub fn data_element(&self, id: DataId) -> &DataElement {
        &self.data[id.index()]
    }
    pub fn artifact(&self, id: ArtifactId) -> &Artifact {
        &self.artifacts[id.index()]
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len() as u32).map(NodeId)
    }
    pub fn flow_ids(&self) -> impl Iterator<Item = FlowId> + '_ {
        (0..self.sequence_flows.len() as u32).map(FlowId)
    }
    pub fn message_flow_ids(&self) -> impl Iterator<Item = MessageFlowId> + '_ {
        (0..self.message_flows.len() as u32).map(MessageFlowId)
    }
    pub fn process_ids(&self) -> impl Iterator<Item = ProcessId> + '_ {
        (0..self.processes.len() as u32).map(ProcessId)
    }
    pub fn data_ids(&self) -> impl Iterator<Item = DataId> + '_ {
        (0..self.data.len() as u32).map(DataId)
    }
    pub fn artifact_ids(&self) -> impl Iterator<Item = ArtifactId> + '_ {
        (0..self.artifacts.len() as u32).map(ArtifactId)
    }
    pub fn definition_ids(&self) -> impl Iterator<Item = DefId> + '_ {
        (0..self.definitions.len() as u32).map(DefId)
    }

    pub fn contents(&self, c: ContainerId) -> &Contents {
        match c {
            ContainerId::Process(p) => &self.processes[p.index()].contents,
            ContainerId::SubProcess(n) => self.nodes[n.index()]
                .contents
                .as_ref()
                .expect("sub-process container without contents"),
        }
    }

    /// All containers: processes first, then sub-processes in document order.
    pub fn containers(&self) -> Vec<ContainerId> {
        let mut out: Vec<ContainerId> = self.process_ids().map(ContainerId::Process).collect();
        out.extend(
            self.node_ids()
                .filter(|&n| self.node(n).contents.is_some())
                .map(ContainerId::SubProcess),
        );
        out
    }

    pub fn parent(&self, c: ContainerId) -> Option<ContainerId> {
        match c {
            ContainerId::Process(_) => None,
            ContainerId::SubProcess(n) => Some(self.node(n).container),
        }
    }

    pub fn is_top_level(&self, c: ContainerId) -> bool {
        matches!(c, ContainerId::Process(_))
    }

    /// The process at the root of `c`'s container chain.
    pub fn root_process(&self, mut c: ContainerId) -> ProcessId {
        loop {
            match c {
                ContainerId::Process(p) => return p,
                ContainerId::SubProcess(n) => c = self.node(n).container,
            }
        }
    }

    /// `c` followed by its ancestors up to the root process.
    pub fn container_chain(&self, c: ContainerId) -> Vec<ContainerId> {
        let mut out = vec![c];
        let mut cur = c;
        while let Some(p) = self.parent(cur) {
            out.push(p);
            cur = p;
        }
        out
    }

    pub fn container_id_str(&self, c: ContainerId) -> &str {
        match c {
            ContainerId::Process(p) => &self.process(p).id,
            ContainerId::SubProcess(n) => &self.node(n).id,
        }
    }

    pub fn container_name(&self, c: ContainerId) -> Option<&str> {
        match c {
            ContainerId::Process(p) => self.process(p).name.as_deref(),
            ContainerId::SubProcess(n) => self.node(n).name.as_deref(),
        }
    }

    /// Structural findings recorded while the model was linked.
    pub fn load_findings(&self) -> &[StructuralFinding] {
        &self.load_findings
    }
}

impl FlowNode {
    pub fn activity(&self) -> Option<&Activity> {
        match &self.kind {
            NodeKind::Activity(a) => Some(a),
            _ => None,
        }
    }
    pub fn event(&self) -> Option<&Event> {
        match &self.kind {
            NodeKind::Event(e) => Some(e),
            _ => None,
        }
    }
    pub fn gateway(&self) -> Option<&Gateway> {
        match &self.kind {
            NodeKind::Gateway(g) => Some(g),
            _ => None,
        }
    }
    pub fn is_activity(&self) -> bool {
        self.activity().is_some()
    }
    pub fn is_gateway(&self) -> bool {
        self.gateway().is_some()
    }

    pub fn trigger(&self) -> Option<TriggerKind> {
        self.event().map(|e| e.trigger.kind())
    }

    pub fn is_event_at(&self, pos: PositionKind) -> bool {
        self.event().is_some_and(|e| e.position_kind() == pos)
    }

    pub fn is_event_subprocess(&self) -> bool {
        matches!(
            self.activity().map(|a| &a.kind),
            Some(ActivityKind::SubProcess {
                triggered_by_event: true
            })
        )
    }

    pub fn is_compensation_activity(&self) -> bool {
        self.activity().is_some_and(|a| a.is_for_compensation)
    }

    /// Sub-process, transaction, ad-hoc sub-process or call activity: the
    /// kinds allowed to carry message flows on behalf of their contents.
    pub fn is_subprocess_like(&self) -> bool {
        matches!(
            self.activity().map(|a| &a.kind),
            Some(
                ActivityKind::SubProcess { .. }
                    | ActivityKind::Transaction
                    | ActivityKind::AdHocSubProcess
                    | ActivityKind::CallActivity { .. }
            )
        )
    }

    pub fn default_flow(&self) -> Option<FlowId> {
        match &self.kind {
            NodeKind::Activity(a) => a.default_flow,
            NodeKind::Gateway(g) => g.default_flow,
            NodeKind::Event(_) => None,
        }
    }

    /// The trimmed name, or `None` when absent or blank.
    pub fn label(&self) -> Option<&str> {
        label(&self.name)
    }
}

/// Event position without the boundary payload.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionKind {
    Start,
    End,
    IntermediateCatch,
    IntermediateThrow,
    Boundary,
}

impl Event {
    pub fn position_kind(&self) -> PositionKind {
        match self.position {
            EventPosition::Start => PositionKind::Start,
            EventPosition::End => PositionKind::End,
            EventPosition::IntermediateCatch => PositionKind::IntermediateCatch,
            EventPosition::IntermediateThrow => PositionKind::IntermediateThrow,
            EventPosition::Boundary { .. } => PositionKind::Boundary,
        }
    }

    pub fn is_catch(&self) -> bool {
        matches!(
            self.position_kind(),
            PositionKind::Start | PositionKind::IntermediateCatch | PositionKind::Boundary
        )
    }

    pub fn is_throw(&self) -> bool {
        !self.is_catch()
    }

    pub fn attached_to(&self) -> Option<NodeId> {
        match self.position {
            EventPosition::Boundary { attached_to, .. } => attached_to,
            _ => None,
        }
    }
}

/// Trim a name; blank counts as unnamed.
pub fn label(name: &Option<String>) -> Option<&str> {
    name.as_deref().map(str::trim).filter(|s| !s.is_empty())
}
