//! Programmatic model construction, mostly for tests and benchmarks.
//!
//! The builder writes the same raw element tree the XML reader produces,
//! so a built model goes through exactly the same linking as a parsed one.

use std::collections::{BTreeMap, BTreeSet};

use super::RawElement;
use crate::model::BpmnModel;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("`{0}` is not a container")]
    NotAContainer(String),
    #[error("boundary events attach to activities only; `{0}` is not one")]
    NotAnActivity(String),
    #[error("`{from}` and `{to}` live in different containers")]
    CrossContainer { from: String, to: String },
}

/// Event trigger for builder-made events. Named triggers create (or reuse)
/// the matching root definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriggerSpec {
    None,
    Message,
    Timer,
    Error(Option<String>),
    Escalation(Option<String>),
    Cancel,
    /// Optional id of the compensated activity.
    Compensation(Option<String>),
    Conditional,
    Link(Option<String>),
    Signal(Option<String>),
    Terminate,
    Multiple,
    ParallelMultiple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeSpec {
    Task,
    SendTask,
    ReceiveTask,
    UserTask,
    ServiceTask,
    ScriptTask,
    ManualTask,
    BusinessRuleTask,
    /// Optional id of the called process.
    CallActivity(Option<String>),
    SubProcess,
    EventSubProcess,
    Transaction,
    AdHocSubProcess,
    Start(TriggerSpec),
    End(TriggerSpec),
    CatchEvent(TriggerSpec),
    ThrowEvent(TriggerSpec),
    ExclusiveGateway,
    InclusiveGateway,
    ParallelGateway,
    EventBasedGateway,
    ComplexGateway,
}

impl NodeSpec {
    fn tag(&self) -> &'static str {
        match self {
            NodeSpec::Task => "task",
            NodeSpec::SendTask => "sendTask",
            NodeSpec::ReceiveTask => "receiveTask",
            NodeSpec::UserTask => "userTask",
            NodeSpec::ServiceTask => "serviceTask",
            NodeSpec::ScriptTask => "scriptTask",
            NodeSpec::ManualTask => "manualTask",
            NodeSpec::BusinessRuleTask => "businessRuleTask",
            NodeSpec::CallActivity(_) => "callActivity",
            NodeSpec::SubProcess | NodeSpec::EventSubProcess => "subProcess",
            NodeSpec::Transaction => "transaction",
            NodeSpec::AdHocSubProcess => "adHocSubProcess",
            NodeSpec::Start(_) => "startEvent",
            NodeSpec::End(_) => "endEvent",
            NodeSpec::CatchEvent(_) => "intermediateCatchEvent",
            NodeSpec::ThrowEvent(_) => "intermediateThrowEvent",
            NodeSpec::ExclusiveGateway => "exclusiveGateway",
            NodeSpec::InclusiveGateway => "inclusiveGateway",
            NodeSpec::ParallelGateway => "parallelGateway",
            NodeSpec::EventBasedGateway => "eventBasedGateway",
            NodeSpec::ComplexGateway => "complexGateway",
        }
    }

    fn is_container(&self) -> bool {
        matches!(
            self,
            NodeSpec::SubProcess | NodeSpec::EventSubProcess | NodeSpec::Transaction | NodeSpec::AdHocSubProcess
        )
    }

    fn is_activity(&self) -> bool {
        !matches!(
            self,
            NodeSpec::Start(_)
                | NodeSpec::End(_)
                | NodeSpec::CatchEvent(_)
                | NodeSpec::ThrowEvent(_)
                | NodeSpec::ExclusiveGateway
                | NodeSpec::InclusiveGateway
                | NodeSpec::ParallelGateway
                | NodeSpec::EventBasedGateway
                | NodeSpec::ComplexGateway
        )
    }
}

#[derive(Clone, Debug)]
pub struct ModelBuilder {
    source_name: String,
    root: RawElement,
    /// Child-index path from the root to every addressable element.
    paths: BTreeMap<String, Vec<usize>>,
    /// Owning container of each flow node.
    home: BTreeMap<String, String>,
    containers: BTreeSet<String>,
    activities: BTreeSet<String>,
    collaboration: Option<usize>,
    next_flow: usize,
}

impl ModelBuilder {
    pub fn new(source_name: &str) -> Self {
        ModelBuilder {
            source_name: source_name.to_string(),
            root: RawElement::new("definitions").with_attr("id", "Definitions"),
            paths: BTreeMap::new(),
            home: BTreeMap::new(),
            containers: BTreeSet::new(),
            activities: BTreeSet::new(),
            collaboration: None,
            next_flow: 0,
        }
    }

    fn claim(&self, id: &str) -> Result<(), BuildError> {
        if self.paths.contains_key(id) || id == "Definitions" {
            return Err(BuildError::DuplicateId(id.to_string()));
        }
        Ok(())
    }

    fn element_mut(&mut self, id: &str) -> Result<&mut RawElement, BuildError> {
        let path = self
            .paths
            .get(id)
            .ok_or_else(|| BuildError::UnknownId(id.to_string()))?;
        let mut el = &mut self.root;
        for &i in path {
            el = &mut el.children[i];
        }
        Ok(el)
    }

    fn push_child(&mut self, parent: Option<&str>, child: RawElement) -> Result<Vec<usize>, BuildError> {
        let (el, mut path) = match parent {
            Some(p) => {
                let path = self.paths[p].clone();
                (self.element_mut(p)?, path)
            }
            None => (&mut self.root, Vec::new()),
        };
        path.push(el.children.len());
        el.children.push(child);
        Ok(path)
    }

    pub fn new_process(&mut self, id: &str) -> Result<&mut Self, BuildError> {
        self.claim(id)?;
        let path = self.push_child(None, RawElement::new("process").with_attr("id", id))?;
        self.paths.insert(id.to_string(), path);
        self.containers.insert(id.to_string());
        Ok(self)
    }

    pub fn add_node(&mut self, container: &str, id: &str, spec: NodeSpec) -> Result<&mut Self, BuildError> {
        self.claim(id)?;
        if !self.containers.contains(container) {
            return Err(BuildError::NotAContainer(container.to_string()));
        }
        let mut el = RawElement::new(spec.tag()).with_attr("id", id);
        match &spec {
            NodeSpec::EventSubProcess => el.set_attr("triggeredByEvent", "true"),
            NodeSpec::CallActivity(Some(p)) => el.set_attr("calledElement", p),
            NodeSpec::Start(t) | NodeSpec::End(t) | NodeSpec::CatchEvent(t) | NodeSpec::ThrowEvent(t) => {
                self.add_trigger(&mut el, t)?;
            }
            _ => {}
        }
        let path = self.push_child(Some(container), el)?;
        self.paths.insert(id.to_string(), path);
        self.home.insert(id.to_string(), container.to_string());
        if spec.is_container() {
            self.containers.insert(id.to_string());
        }
        if spec.is_activity() {
            self.activities.insert(id.to_string());
        }
        Ok(self)
    }

    fn definition(&mut self, tag: &str, name: &str) -> Result<String, BuildError> {
        let id = format!("{tag}_{}", name.replace(|c: char| !c.is_alphanumeric(), "_"));
        if !self.paths.contains_key(&id) {
            let el = RawElement::new(tag).with_attr("id", &id).with_attr("name", name);
            let path = self.push_child(None, el)?;
            self.paths.insert(id.clone(), path);
        }
        Ok(id)
    }

    fn add_trigger(&mut self, el: &mut RawElement, t: &TriggerSpec) -> Result<(), BuildError> {
        let def = |tag: &str| RawElement::new(tag);
        let child = match t {
            TriggerSpec::None => return Ok(()),
            TriggerSpec::Multiple | TriggerSpec::ParallelMultiple => {
                if *t == TriggerSpec::ParallelMultiple {
                    el.set_attr("parallelMultiple", "true");
                }
                el.children.push(def("messageEventDefinition"));
                def("signalEventDefinition")
            }
            TriggerSpec::Message => def("messageEventDefinition"),
            TriggerSpec::Timer => def("timerEventDefinition"),
            TriggerSpec::Cancel => def("cancelEventDefinition"),
            TriggerSpec::Conditional => def("conditionalEventDefinition"),
            TriggerSpec::Terminate => def("terminateEventDefinition"),
            TriggerSpec::Link(name) => {
                let mut d = def("linkEventDefinition");
                if let Some(n) = name {
                    d.set_attr("name", n);
                }
                d
            }
            TriggerSpec::Compensation(activity) => {
                let mut d = def("compensateEventDefinition");
                if let Some(a) = activity {
                    d.set_attr("activityRef", a);
                }
                d
            }
            TriggerSpec::Error(name) | TriggerSpec::Escalation(name) | TriggerSpec::Signal(name) => {
                let (tag, attr) = match t {
                    TriggerSpec::Error(_) => ("error", "errorRef"),
                    TriggerSpec::Escalation(_) => ("escalation", "escalationRef"),
                    _ => ("signal", "signalRef"),
                };
                let mut d = def(&format!("{tag}EventDefinition"));
                if let Some(n) = name {
                    let id = self.definition(tag, n)?;
                    d.set_attr(attr, &id);
                }
                d
            }
        };
        el.children.push(child);
        Ok(())
    }

    pub fn set_name(&mut self, id: &str, name: &str) -> Result<&mut Self, BuildError> {
        self.element_mut(id)?.set_attr("name", name);
        Ok(self)
    }

    /// Sets an arbitrary attribute, for anything the typed calls don't cover.
    pub fn set_attr(&mut self, id: &str, key: &str, value: &str) -> Result<&mut Self, BuildError> {
        self.element_mut(id)?.set_attr(key, value);
        Ok(self)
    }

    /// Adds a sequence flow inside the source's container and returns its id.
    pub fn connect(&mut self, source: &str, target: &str, condition: Option<&str>) -> Result<String, BuildError> {
        let hs = self.home.get(source).ok_or_else(|| BuildError::UnknownId(source.to_string()))?;
        let ht = self.home.get(target).ok_or_else(|| BuildError::UnknownId(target.to_string()))?;
        if hs != ht {
            return Err(BuildError::CrossContainer {
                from: source.to_string(),
                to: target.to_string(),
            });
        }
        self.connect_across(source, target, condition)
    }

    /// Like [`connect`](Self::connect) but allows endpoints in different
    /// containers; used to build deliberately broken fixtures.
    pub fn connect_across(&mut self, source: &str, target: &str, condition: Option<&str>) -> Result<String, BuildError> {
        let home = self
            .home
            .get(source)
            .cloned()
            .ok_or_else(|| BuildError::UnknownId(source.to_string()))?;
        if !self.home.contains_key(target) {
            return Err(BuildError::UnknownId(target.to_string()));
        }
        let id = loop {
            self.next_flow += 1;
            let id = format!("Flow_{}", self.next_flow);
            if !self.paths.contains_key(&id) {
                break id;
            }
        };
        let mut el = RawElement::new("sequenceFlow")
            .with_attr("id", &id)
            .with_attr("sourceRef", source)
            .with_attr("targetRef", target);
        if let Some(c) = condition {
            let mut cond = RawElement::new("conditionExpression");
            cond.text = c.to_string();
            el.children.push(cond);
        }
        let path = self.push_child(Some(&home), el)?;
        self.paths.insert(id.clone(), path);
        Ok(id)
    }

    pub fn set_default(&mut self, node: &str, flow: &str) -> Result<&mut Self, BuildError> {
        if !self.paths.contains_key(flow) {
            return Err(BuildError::UnknownId(flow.to_string()));
        }
        self.set_attr(node, "default", flow)
    }

    pub fn add_boundary(
        &mut self,
        activity: &str,
        id: &str,
        trigger: TriggerSpec,
        interrupting: bool,
    ) -> Result<&mut Self, BuildError> {
        if !self.activities.contains(activity) {
            return Err(match self.paths.contains_key(activity) {
                true => BuildError::NotAnActivity(activity.to_string()),
                false => BuildError::UnknownId(activity.to_string()),
            });
        }
        self.claim(id)?;
        let container = self.home[activity].clone();
        let mut el = RawElement::new("boundaryEvent")
            .with_attr("id", id)
            .with_attr("attachedToRef", activity);
        if !interrupting {
            el.set_attr("cancelActivity", "false");
        }
        self.add_trigger(&mut el, &trigger)?;
        let path = self.push_child(Some(&container), el)?;
        self.paths.insert(id.to_string(), path);
        self.home.insert(id.to_string(), container);
        Ok(self)
    }

    fn collaboration_index(&mut self) -> usize {
        *self.collaboration.get_or_insert_with(|| {
            self.root
                .children
                .push(RawElement::new("collaboration").with_attr("id", "Collaboration"));
            self.root.children.len() - 1
        })
    }

    /// Adds a pool; `process` of `None` makes a black box.
    pub fn add_participant(&mut self, id: &str, process: Option<&str>) -> Result<&mut Self, BuildError> {
        self.claim(id)?;
        if let Some(p) = process {
            if !self.containers.contains(p) {
                return Err(BuildError::UnknownId(p.to_string()));
            }
        }
        let c = self.collaboration_index();
        let mut el = RawElement::new("participant").with_attr("id", id);
        if let Some(p) = process {
            el.set_attr("processRef", p);
        }
        let coll = &mut self.root.children[c];
        coll.children.push(el);
        self.paths.insert(id.to_string(), vec![c, coll.children.len() - 1]);
        Ok(self)
    }

    pub fn add_message_flow(&mut self, id: &str, source: &str, target: &str) -> Result<&mut Self, BuildError> {
        self.claim(id)?;
        for end in [source, target] {
            if !self.paths.contains_key(end) {
                return Err(BuildError::UnknownId(end.to_string()));
            }
        }
        let c = self.collaboration_index();
        let el = RawElement::new("messageFlow")
            .with_attr("id", id)
            .with_attr("sourceRef", source)
            .with_attr("targetRef", target);
        let coll = &mut self.root.children[c];
        coll.children.push(el);
        self.paths.insert(id.to_string(), vec![c, coll.children.len() - 1]);
        Ok(self)
    }

    pub fn into_model(self) -> BpmnModel {
        super::link(&self.root, &self.source_name)
    }
}
