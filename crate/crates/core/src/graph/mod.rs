//! Derived indices and flow analyses over a loaded model.
//!
//! [`Graph`] is built once per model and shared read-only by every rule.
//! The token analysis behind [`Graph::classify_incoming`] is computed
//! lazily per container.

mod tokens;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::OnceLock;

use crate::model::*;

pub use tokens::TokenNet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TokenMode {
    Exclusive,
    NonExclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowClass {
    Normal,
    Exception,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    NotASplit,
    ExclusiveSplit,
    NonExclusiveSplit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degrees {
    pub incoming: usize,
    pub outgoing: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MessagePartners {
    pub in_partners: BTreeSet<InteractionRef>,
    pub out_partners: BTreeSet<InteractionRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("container `{0}` has no source node; token analysis skipped")]
    AnalysisSkipped(String),
    #[error("`{0}` is not a join (needs two or more incoming flows)")]
    NotAJoin(String),
}

pub struct Graph<'m> {
    model: &'m BpmnModel,
    containers: Vec<ContainerId>,
    container_slot: BTreeMap<ContainerId, usize>,
    mf_in: BTreeMap<InteractionRef, Vec<MessageFlowId>>,
    mf_out: BTreeMap<InteractionRef, Vec<MessageFlowId>>,
    associations: BTreeMap<Endpoint, Vec<ArtifactId>>,
    participant_of: BTreeMap<ProcessId, ParticipantId>,
    callers: BTreeMap<ProcessId, Vec<NodeId>>,
    flow_class: Vec<FlowClass>,
    nets: Vec<OnceLock<Result<TokenNet, GraphError>>>,
}

impl<'m> Graph<'m> {
    pub fn new(model: &'m BpmnModel) -> Self {
        let containers = model.containers();
        let container_slot = containers.iter().enumerate().map(|(i, c)| (*c, i)).collect();

        let mut mf_in: BTreeMap<_, Vec<_>> = BTreeMap::new();
        let mut mf_out: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for id in model.message_flow_ids() {
            let mf = model.message_flow(id);
            mf_out.entry(mf.source).or_default().push(id);
            mf_in.entry(mf.target).or_default().push(id);
        }

        let mut associations: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for a in model.artifact_ids() {
            if let ArtifactKind::Association { source, target, .. } = &model.artifact(a).kind {
                for end in [source, target].into_iter().flatten() {
                    if *end != Endpoint::Other {
                        associations.entry(*end).or_default().push(a);
                    }
                }
            }
        }

        let mut participant_of = BTreeMap::new();
        for (i, p) in model.participants().iter().enumerate() {
            if let Some(proc_id) = p.process {
                participant_of.entry(proc_id).or_insert(ParticipantId(i as u32));
            }
        }

        let mut callers: BTreeMap<_, Vec<_>> = BTreeMap::new();
        for n in model.node_ids() {
            if let Some(Activity {
                kind: ActivityKind::CallActivity {
                    called: Some(CalledElement::Process(p)),
                },
                ..
            }) = model.node(n).activity()
            {
                callers.entry(*p).or_default().push(n);
            }
        }

        let nets = containers.iter().map(|_| OnceLock::new()).collect();
        let mut g = Graph {
            model,
            containers,
            container_slot,
            mf_in,
            mf_out,
            associations,
            participant_of,
            callers,
            flow_class: Vec::new(),
            nets,
        };
        g.flow_class = g.compute_flow_classes();
        g
    }

    pub fn model(&self) -> &'m BpmnModel {
        self.model
    }

    pub fn containers(&self) -> &[ContainerId] {
        &self.containers
    }

    pub fn is_top_level(&self, c: ContainerId) -> bool {
        self.model.is_top_level(c)
    }

    pub fn degrees(&self, n: NodeId) -> Degrees {
        let node = self.model.node(n);
        Degrees {
            incoming: node.incoming.len(),
            outgoing: node.outgoing.len(),
        }
    }

    /// Flow nodes of `c`; with `recursive`, also those of nested sub-processes.
    pub fn descendants(&self, c: ContainerId, recursive: bool) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![c];
        while let Some(c) = stack.pop() {
            for &n in &self.model.contents(c).nodes {
                out.push(n);
                if recursive && self.model.node(n).contents.is_some() {
                    stack.push(ContainerId::SubProcess(n));
                }
            }
        }
        out.sort();
        out
    }

    /// `c` and every sub-process container nested in it.
    pub fn nested_containers(&self, c: ContainerId) -> Vec<ContainerId> {
        let mut out = vec![c];
        out.extend(
            self.descendants(c, true)
                .into_iter()
                .filter(|&n| self.model.node(n).contents.is_some())
                .map(ContainerId::SubProcess),
        );
        out
    }

    /// Nodes of `c` accepted by `pred`, grouped by trimmed name. Unnamed
    /// nodes are left out.
    pub fn name_index(&self, c: ContainerId, pred: impl Fn(&FlowNode) -> bool) -> BTreeMap<String, Vec<NodeId>> {
        let mut out: BTreeMap<String, Vec<NodeId>> = BTreeMap::new();
        for &n in &self.model.contents(c).nodes {
            let node = self.model.node(n);
            if pred(node) {
                if let Some(name) = node.label() {
                    out.entry(name.to_string()).or_default().push(n);
                }
            }
        }
        out
    }

    pub fn messages_in(&self, r: InteractionRef) -> &[MessageFlowId] {
        self.mf_in.get(&r).map_or(&[], Vec::as_slice)
    }

    pub fn messages_out(&self, r: InteractionRef) -> &[MessageFlowId] {
        self.mf_out.get(&r).map_or(&[], Vec::as_slice)
    }

    pub fn node_messages_in(&self, n: NodeId) -> &[MessageFlowId] {
        self.messages_in(InteractionRef::Node(n))
    }

    pub fn node_messages_out(&self, n: NodeId) -> &[MessageFlowId] {
        self.messages_out(InteractionRef::Node(n))
    }

    /// Associations (artifacts) touching `e`.
    pub fn associations_of(&self, e: Endpoint) -> &[ArtifactId] {
        self.associations.get(&e).map_or(&[], Vec::as_slice)
    }

    pub fn participant_of(&self, p: ProcessId) -> Option<ParticipantId> {
        self.participant_of.get(&p).copied()
    }

    /// Call activities whose called element is `p`.
    pub fn callers(&self, p: ProcessId) -> &[NodeId] {
        self.callers.get(&p).map_or(&[], Vec::as_slice)
    }

    /// The pool an endpoint belongs to, or the endpoint itself when its
    /// process is not bound to a participant.
    pub fn owning_partner(&self, r: InteractionRef) -> InteractionRef {
        match r {
            InteractionRef::Participant(_) => r,
            InteractionRef::Node(n) => {
                let root = self.model.root_process(self.model.node(n).container);
                self.participant_of(root).map_or(r, InteractionRef::Participant)
            }
        }
    }

    /// Opposite endpoints of the message flows attached to `n`, each
    /// resolved to its owning pool where there is one.
    pub fn message_partners(&self, n: NodeId) -> MessagePartners {
        let me = InteractionRef::Node(n);
        let mf = |id| self.model.message_flow(id);
        MessagePartners {
            in_partners: self
                .messages_in(me)
                .iter()
                .map(|&id| self.owning_partner(mf(id).source))
                .collect(),
            out_partners: self
                .messages_out(me)
                .iter()
                .map(|&id| self.owning_partner(mf(id).target))
                .collect(),
        }
    }

    pub fn split_kind(&self, n: NodeId) -> SplitKind {
        let node = self.model.node(n);
        if node.outgoing.len() <= 1 {
            return SplitKind::NotASplit;
        }
        match &node.kind {
            NodeKind::Gateway(g) => match g.kind {
                GatewayKind::Exclusive | GatewayKind::EventBased { parallel: false, .. } => SplitKind::ExclusiveSplit,
                _ => SplitKind::NonExclusiveSplit,
            },
            NodeKind::Activity(a) => {
                let all_conditional = node.outgoing.iter().all(|&f| {
                    Some(f) == a.default_flow || self.model.flow(f).condition.is_some()
                });
                let conditional = node
                    .outgoing
                    .iter()
                    .filter(|&&f| self.model.flow(f).condition.is_some())
                    .count();
                if all_conditional && conditional >= 1 {
                    SplitKind::ExclusiveSplit
                } else {
                    SplitKind::NonExclusiveSplit
                }
            }
            NodeKind::Event(_) => SplitKind::NonExclusiveSplit,
        }
    }

    pub fn flow_class(&self, f: FlowId) -> FlowClass {
        self.flow_class[f.index()]
    }

    fn compute_flow_classes(&self) -> Vec<FlowClass> {
        let m = self.model;
        let mut class: Vec<Option<FlowClass>> = vec![None; m.sequence_flows().len()];
        let sources = |boundary: bool| {
            m.node_ids().filter(move |&n| {
                let node = m.node(n);
                let is_boundary = node.is_event_at(PositionKind::Boundary);
                node.incoming.is_empty() && is_boundary == boundary
            })
        };
        for (seeds, label) in [
            (sources(false).collect::<Vec<_>>(), FlowClass::Normal),
            (sources(true).collect(), FlowClass::Exception),
        ] {
            let mut queue: VecDeque<NodeId> = seeds.into();
            let mut seen: BTreeSet<NodeId> = queue.iter().copied().collect();
            while let Some(n) = queue.pop_front() {
                for &f in &m.node(n).outgoing {
                    if class[f.index()].is_none() {
                        class[f.index()] = Some(label);
                    }
                    let t = m.flow(f).target;
                    if seen.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
        }
        class.into_iter().map(|c| c.unwrap_or(FlowClass::Normal)).collect()
    }

    /// The token net of `c`, built on first use.
    pub fn token_net(&self, c: ContainerId) -> Result<&TokenNet, GraphError> {
        let slot = self.container_slot[&c];
        self.nets[slot]
            .get_or_init(|| TokenNet::build(self, c))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Whether some reachable state of one process instance carries a token
    /// on both `a` and `b` at once. Undecided cases (search budget spent)
    /// answer `true`.
    pub fn co_markable(&self, a: FlowId, b: FlowId) -> Result<bool, GraphError> {
        let c = self.model.node(self.model.flow(a).target).container;
        Ok(self.token_net(c)?.co_markable(a, b).unwrap_or(true))
    }

    /// Token mode of each incoming flow of `join`: an edge is non-exclusive
    /// when it can hold a token at the same time as another incoming edge.
    pub fn classify_incoming(&self, join: NodeId) -> Result<BTreeMap<FlowId, TokenMode>, GraphError> {
        let node = self.model.node(join);
        if node.incoming.len() < 2 {
            return Err(GraphError::NotAJoin(node.id.clone()));
        }
        let net = self.token_net(node.container)?;
        let mut out: BTreeMap<FlowId, TokenMode> =
            node.incoming.iter().map(|&f| (f, TokenMode::Exclusive)).collect();
        for (i, &a) in node.incoming.iter().enumerate() {
            for &b in &node.incoming[i + 1..] {
                if net.co_markable(a, b).unwrap_or(true) {
                    out.insert(a, TokenMode::NonExclusive);
                    out.insert(b, TokenMode::NonExclusive);
                }
            }
        }
        Ok(out)
    }
}
