//! Token-flow view of one container, used to decide whether two sequence
//! flows can carry a token at the same time.
//!
//! The container is read as a place/transition net: every sequence flow is
//! a place, every way a node can fire is a transition. Co-markability of
//! two places is a coverability question, answered exactly by backward
//! search over upward-closed sets of markings.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use super::{Graph, GraphError, SplitKind};
use crate::model::*;

/// Upper bound on the number of minimal markings kept during one backward
/// search. Exceeding it leaves the query undecided.
const BASIS_BUDGET: usize = 20_000;

#[derive(Clone, Debug)]
struct Transition {
    pre: Vec<usize>,
    post: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct TokenNet {
    places: usize,
    place_of: BTreeMap<FlowId, usize>,
    transitions: Vec<Transition>,
    initial: Vec<u32>,
    /// Places some firing sequence can mark at all.
    markable: Vec<bool>,
    /// Place weights that no transition increases in total, so a marking
    /// heavier than the initial one can never be covered.
    weight: Vec<u32>,
}

/// One output set per exclusive branch, or a single set with every
/// outgoing flow.
fn output_sets(kind: SplitKind, outs: &[usize]) -> Vec<Vec<usize>> {
    match kind {
        SplitKind::ExclusiveSplit => outs.iter().map(|&o| vec![o]).collect(),
        _ => vec![outs.to_vec()],
    }
}

impl TokenNet {
    pub(super) fn build(g: &Graph<'_>, c: ContainerId) -> Result<TokenNet, GraphError> {
        let m = g.model();
        let nodes: Vec<NodeId> = m
            .contents(c)
            .nodes
            .iter()
            .copied()
            .filter(|&n| {
                let node = m.node(n);
                !node.is_event_subprocess() && !node.is_compensation_activity()
            })
            .collect();

        let mut place_of = BTreeMap::new();
        for &n in &nodes {
            let node = m.node(n);
            for &f in node.incoming.iter().chain(&node.outgoing) {
                let next = place_of.len();
                place_of.entry(f).or_insert(next);
            }
        }
        let mut places = place_of.len();
        let mut fresh = || {
            places += 1;
            places - 1
        };
        let place = |f: &FlowId| place_of[f];

        let starts: Vec<NodeId> = nodes
            .iter()
            .copied()
            .filter(|&n| m.node(n).is_event_at(PositionKind::Start))
            .collect();
        // Explicit start events are alternatives sharing one initial token;
        // without them, every source node starts at once.
        let explicit = !starts.is_empty();
        let sources: Vec<NodeId> = if explicit {
            starts
        } else {
            nodes
                .iter()
                .copied()
                .filter(|&n| {
                    let node = m.node(n);
                    node.incoming.is_empty() && !node.is_event_at(PositionKind::Boundary)
                })
                .collect()
        };
        if sources.is_empty() {
            return Err(GraphError::AnalysisSkipped(m.container_id_str(c).to_string()));
        }
        let shared = explicit.then(&mut fresh);
        let initial_places: BTreeMap<NodeId, usize> = sources
            .iter()
            .map(|&s| (s, shared.unwrap_or_else(&mut fresh)))
            .collect();

        let mut transitions = Vec::new();
        for &n in &nodes {
            let node = m.node(n);
            if node.is_event_at(PositionKind::Boundary) {
                continue;
            }
            let and_join = node.incoming.len() >= 2
                && node.gateway().is_some_and(|gw| gw.kind == GatewayKind::Parallel);
            let mut input_sets: Vec<Vec<usize>> = if and_join {
                vec![node.incoming.iter().map(place).collect()]
            } else {
                node.incoming.iter().map(|f| vec![place(f)]).collect()
            };
            if let Some(&p) = initial_places.get(&n) {
                input_sets.push(vec![p]);
            }
            let outs: Vec<usize> = node.outgoing.iter().map(place).collect();
            let outputs = output_sets(g.split_kind(n), &outs);
            let boundaries: Vec<NodeId> = node
                .activity()
                .map(|a| a.boundary_events.clone())
                .unwrap_or_default()
                .into_iter()
                .filter(|&b| m.node(b).container == c)
                .collect();

            if boundaries.is_empty() {
                for pre in &input_sets {
                    for post in &outputs {
                        transitions.push(Transition {
                            pre: pre.clone(),
                            post: post.clone(),
                        });
                    }
                }
                continue;
            }
            // Activities with boundary events get a "running" place so that
            // boundary events can fire while the activity is active.
            let running = fresh();
            for pre in &input_sets {
                transitions.push(Transition {
                    pre: pre.clone(),
                    post: vec![running],
                });
            }
            for post in &outputs {
                transitions.push(Transition {
                    pre: vec![running],
                    post: post.clone(),
                });
            }
            for b in boundaries {
                let bnode = m.node(b);
                let bouts: Vec<usize> = bnode.outgoing.iter().map(place).collect();
                let interrupting = bnode.event().is_some_and(|e| e.interrupting);
                let mut post = bouts;
                if !interrupting {
                    post.push(running);
                }
                transitions.push(Transition {
                    pre: vec![running],
                    post,
                });
            }
        }

        let mut initial = vec![0; places];
        for &p in initial_places.values() {
            initial[p] = 1;
        }
        let mut net = TokenNet {
            places,
            place_of,
            transitions,
            initial,
            markable: Vec::new(),
            weight: Vec::new(),
        };
        net.markable = net.markable();
        net.weight = net.weights();
        Ok(net)
    }

    pub fn place_count(&self) -> usize {
        self.places
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    /// `Some(true)` if a reachable marking has tokens on both flows,
    /// `Some(false)` if none has, `None` if the search budget ran out.
    pub fn co_markable(&self, a: FlowId, b: FlowId) -> Option<bool> {
        let (Some(&pa), Some(&pb)) = (self.place_of.get(&a), self.place_of.get(&b)) else {
            return Some(false);
        };
        let mut target = vec![0u32; self.places];
        target[pa] += 1;
        target[pb] += 1;
        self.coverable(target)
    }

    /// Places that some firing sequence can mark at all, ignoring how many
    /// tokens each transition needs.
    fn markable(&self) -> Vec<bool> {
        let mut on: Vec<bool> = self.initial.iter().map(|&k| k > 0).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for t in &self.transitions {
                if t.pre.iter().all(|&p| on[p]) {
                    for &p in &t.post {
                        if !on[p] {
                            on[p] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        on
    }

    /// Weight 0 for places a token-multiplying transition can feed, directly
    /// or downstream; weight 1 elsewhere. Every transition then keeps or
    /// lowers the weighted token sum.
    fn weights(&self) -> Vec<u32> {
        let mut fed = vec![false; self.places];
        let mut changed = true;
        while changed {
            changed = false;
            for t in &self.transitions {
                if t.post.len() > t.pre.len() || t.pre.iter().any(|&p| fed[p]) {
                    for &p in &t.post {
                        if !fed[p] {
                            fed[p] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        fed.iter().map(|&f| u32::from(!f)).collect()
    }

    fn weigh(&self, m: &[u32]) -> u32 {
        m.iter().zip(&self.weight).map(|(k, w)| k * w).sum()
    }

    fn coverable(&self, target: Vec<u32>) -> Option<bool> {
        let covers = |big: &[u32], small: &[u32]| big.iter().zip(small).all(|(x, y)| x >= y);
        let markable = &self.markable;
        let ceiling = self.weigh(&self.initial);
        if target.iter().zip(markable).any(|(&k, &on)| k > 0 && !on) || self.weigh(&target) > ceiling {
            return Some(false);
        }
        if covers(&self.initial, &target) {
            return Some(true);
        }
        let size = |m: &[u32]| m.iter().sum::<u32>();
        let mut basis: Vec<Vec<u32>> = vec![target];
        let mut alive: Vec<bool> = vec![true];
        // Smallest markings first: they subsume the most.
        let mut work = BinaryHeap::from([(Reverse(size(&basis[0])), 0usize)]);
        while let Some((_, i)) = work.pop() {
            if !alive[i] {
                continue;
            }
            for t in &self.transitions {
                if !t.post.iter().any(|&p| basis[i][p] > 0) {
                    continue;
                }
                let mut pred = basis[i].clone();
                for &p in &t.post {
                    pred[p] = pred[p].saturating_sub(1);
                }
                for &p in &t.pre {
                    pred[p] += 1;
                }
                if covers(&self.initial, &pred) {
                    return Some(true);
                }
                if t.pre.iter().any(|&p| !markable[p]) || self.weigh(&pred) > ceiling {
                    continue;
                }
                if basis
                    .iter()
                    .zip(&alive)
                    .any(|(b, &live)| live && covers(&pred, b))
                {
                    continue;
                }
                for (b, live) in basis.iter().zip(alive.iter_mut()) {
                    if *live && covers(b, &pred) {
                        *live = false;
                    }
                }
                if basis.len() >= BASIS_BUDGET {
                    return None;
                }
                work.push((Reverse(size(&pred)), basis.len()));
                basis.push(pred);
                alive.push(true);
            }
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xmlio::{ModelBuilder, NodeSpec, TriggerSpec};

    /// start → split → (a, b) → join → end, with the given gateway kinds.
    fn diamond(split: NodeSpec, join: NodeSpec) -> (BpmnModel, String, String) {
        let mut b = ModelBuilder::new("t");
        b.new_process("p").unwrap();
        for (id, spec) in [
            ("s", NodeSpec::Start(TriggerSpec::None)),
            ("x", split),
            ("a", NodeSpec::Task),
            ("b", NodeSpec::Task),
            ("j", join),
            ("e", NodeSpec::End(TriggerSpec::None)),
        ] {
            b.add_node("p", id, spec).unwrap();
        }
        b.connect("s", "x", None).unwrap();
        b.connect("x", "a", None).unwrap();
        b.connect("x", "b", None).unwrap();
        let fa = b.connect("a", "j", None).unwrap();
        let fb = b.connect("b", "j", None).unwrap();
        b.connect("j", "e", None).unwrap();
        (b.into_model(), fa, fb)
    }

    fn query(m: &BpmnModel, a: &str, b: &str) -> Option<bool> {
        let g = Graph::new(m);
        let flow = |id: &str| match m.resolve(id).unwrap() {
            ElementRef::SequenceFlow(f) => f,
            other => panic!("{other:?}"),
        };
        let net = g.token_net(m.node(m.flow(flow(a)).target).container).unwrap();
        net.co_markable(flow(a), flow(b))
    }

    #[test]
    fn parallel_branches_meet() {
        let (m, a, b) = diamond(NodeSpec::ParallelGateway, NodeSpec::ParallelGateway);
        assert_eq!(query(&m, &a, &b), Some(true));
    }

    #[test]
    fn exclusive_branches_never_meet() {
        let (m, a, b) = diamond(NodeSpec::ExclusiveGateway, NodeSpec::ExclusiveGateway);
        assert_eq!(query(&m, &a, &b), Some(false));
    }

    #[test]
    fn weights_only_drop_after_multiplication() {
        let (m, ..) = diamond(NodeSpec::ExclusiveGateway, NodeSpec::ParallelGateway);
        let g = Graph::new(&m);
        let net = g.token_net(ContainerId::Process(ProcessId(0))).unwrap();
        assert!(net.weight.iter().all(|&w| w == 1));
        assert!(net.markable.iter().all(|&on| on));

        let (m, ..) = diamond(NodeSpec::ParallelGateway, NodeSpec::ParallelGateway);
        let g = Graph::new(&m);
        let net = g.token_net(ContainerId::Process(ProcessId(0))).unwrap();
        // Every transition keeps or lowers the weighted sum.
        for t in &net.transitions {
            let before: u32 = t.pre.iter().map(|&p| net.weight[p]).sum();
            let after: u32 = t.post.iter().map(|&p| net.weight[p]).sum();
            assert!(after <= before, "{t:?}");
        }
        assert!(net.weight.contains(&0));
    }
}
