//! Independent reference for token co-markability: enumerate small
//! single-start workflow graphs and explore their token game with a
//! Karp–Miller coverability tree.

use std::collections::{BTreeSet, HashSet};

use bpmnlint_core::graph::{Graph, TokenMode};
use bpmnlint_core::xmlio::{ModelBuilder, NodeSpec, TriggerSpec};
use bpmnlint_core::{BpmnModel, ElementRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Start,
    End,
    Task,
    XorSplit,
    XorJoin,
    AndSplit,
    AndJoin,
}

impl Kind {
    const GROWN: [Kind; 6] = [Kind::End, Kind::Task, Kind::XorSplit, Kind::XorJoin, Kind::AndSplit, Kind::AndJoin];

    fn ins(self) -> usize {
        match self {
            Kind::Start => 0,
            Kind::XorJoin | Kind::AndJoin => 2,
            _ => 1,
        }
    }

    fn outs(self) -> usize {
        match self {
            Kind::End => 0,
            Kind::XorSplit | Kind::AndSplit => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Family {
    pub kinds: Vec<Kind>,
    pub edges: Vec<(usize, usize)>,
}

/// Every connected graph grown from one start by attaching each open
/// outgoing port either to a free incoming port of an existing node or to
/// a new node, up to `max_nodes` nodes, with all ports filled. Isomorphic
/// copies are dropped.
pub fn families(max_nodes: usize) -> Vec<Family> {
    struct Walk {
        max: usize,
        kinds: Vec<Kind>,
        edges: Vec<(usize, usize)>,
        free_in: Vec<usize>,
        seen: HashSet<Vec<u8>>,
        out: Vec<Family>,
    }
    fn grow(w: &mut Walk, pending: &[usize]) {
        let Some((&src, rest)) = pending.split_first() else {
            if w.free_in.iter().all(|&c| c == 0) {
                let f = Family { kinds: w.kinds.clone(), edges: w.edges.clone() };
                if w.seen.insert(canonical(&f)) {
                    w.out.push(f);
                }
            }
            return;
        };
        for n in 0..w.kinds.len() {
            if w.free_in[n] > 0 && n != src {
                w.free_in[n] -= 1;
                w.edges.push((src, n));
                grow(w, rest);
                w.edges.pop();
                w.free_in[n] += 1;
            }
        }
        if w.kinds.len() < w.max {
            for k in Kind::GROWN {
                let n = w.kinds.len();
                w.kinds.push(k);
                w.free_in.push(k.ins() - 1);
                w.edges.push((src, n));
                let mut next = rest.to_vec();
                next.extend(std::iter::repeat_n(n, k.outs()));
                grow(w, &next);
                w.edges.pop();
                w.free_in.pop();
                w.kinds.pop();
            }
        }
    }
    let mut w = Walk {
        max: max_nodes,
        kinds: vec![Kind::Start],
        edges: Vec::new(),
        free_in: vec![0],
        seen: HashSet::new(),
        out: Vec::new(),
    };
    grow(&mut w, &[0]);
    w.out
}

/// Isomorphism-invariant code. Every node is reachable from the start and
/// only splits have a choice of successor order, so the smallest
/// depth-first encoding over all split orders identifies the graph.
pub fn canonical(f: &Family) -> Vec<u8> {
    let n = f.kinds.len();
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in &f.edges {
        succ[a].push(b);
    }
    let splits: Vec<usize> = (0..n).filter(|&v| succ[v].len() == 2).collect();
    let mut best: Option<Vec<u8>> = None;
    for mask in 0u32..(1 << splits.len()) {
        let flipped = |v: usize| splits.iter().position(|&s| s == v).is_some_and(|i| mask & (1 << i) != 0);
        let ordered = |v: usize| {
            let mut s = succ[v].clone();
            if flipped(v) {
                s.reverse();
            }
            s
        };
        let mut number = vec![usize::MAX; n];
        let mut seq = Vec::with_capacity(n);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if number[v] != usize::MAX {
                continue;
            }
            number[v] = seq.len();
            seq.push(v);
            for t in ordered(v).into_iter().rev() {
                if number[t] == usize::MAX {
                    stack.push(t);
                }
            }
        }
        let mut code = Vec::with_capacity(3 * n);
        for &v in &seq {
            code.push(f.kinds[v] as u8);
            code.extend(ordered(v).into_iter().map(|t| number[t] as u8));
            code.push(u8::MAX);
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

const OMEGA: u32 = u32::MAX;

/// Place pairs `(i, j)`, `i < j`, that some reachable marking covers.
/// Places are edge indices; one extra place holds the start token.
pub fn co_markable_pairs(f: &Family) -> BTreeSet<(usize, usize)> {
    let places = f.edges.len() + 1;
    let initial = f.edges.len();
    let mut ins = vec![Vec::new(); f.kinds.len()];
    let mut outs = vec![Vec::new(); f.kinds.len()];
    for (e, &(a, b)) in f.edges.iter().enumerate() {
        outs[a].push(e);
        ins[b].push(e);
    }
    let mut transitions: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for (n, &k) in f.kinds.iter().enumerate() {
        let pre: Vec<Vec<usize>> = match k {
            Kind::Start => vec![vec![initial]],
            Kind::AndJoin => vec![ins[n].clone()],
            _ => ins[n].iter().map(|&p| vec![p]).collect(),
        };
        let post: Vec<Vec<usize>> = match k {
            Kind::XorSplit => outs[n].iter().map(|&p| vec![p]).collect(),
            _ => vec![outs[n].clone()],
        };
        for i in &pre {
            for o in &post {
                transitions.push((i.clone(), o.clone()));
            }
        }
    }

    let mut root = vec![0u32; places];
    root[initial] = 1;
    let covers = |big: &[u32], small: &[u32]| big.iter().zip(small).all(|(x, y)| x >= y);
    // Tree nodes: (marking, parent). A successor covered by a node already
    // in the tree is not added: that node is (or will be) expanded, and
    // anything the successor leads to is covered by what it leads to.
    let mut tree: Vec<(Vec<u32>, Option<usize>)> = vec![(root, None)];
    let mut stack = vec![0usize];
    let mut co = BTreeSet::new();
    while let Some(id) = stack.pop() {
        let m = tree[id].0.clone();
        let marked: Vec<usize> = (0..places).filter(|&p| m[p] > 0).collect();
        for (x, &i) in marked.iter().enumerate() {
            for &j in &marked[x + 1..] {
                co.insert((i, j));
            }
        }
        for (pre, post) in &transitions {
            if !pre.iter().all(|&p| m[p] > 0) {
                continue;
            }
            let mut next = m.clone();
            for &p in pre {
                if next[p] != OMEGA {
                    next[p] -= 1;
                }
            }
            for &p in post {
                if next[p] != OMEGA {
                    next[p] += 1;
                }
            }
            // Accelerate against strictly smaller ancestors.
            let mut anc = Some(id);
            while let Some(a) = anc {
                let am = &tree[a].0;
                if am != &next && covers(&next, am) {
                    for p in 0..places {
                        if am[p] < next[p] {
                            next[p] = OMEGA;
                        }
                    }
                }
                anc = tree[a].1;
            }
            if !tree.iter().any(|(t, _)| covers(t, &next)) {
                tree.push((next, Some(id)));
                stack.push(tree.len() - 1);
            }
        }
    }
    co
}

/// Builds the family as a BPMN process; returns it with the flow id of
/// each edge.
pub fn to_model(f: &Family) -> (BpmnModel, Vec<String>) {
    let mut b = ModelBuilder::new("family");
    b.new_process("p").unwrap();
    for (n, k) in f.kinds.iter().enumerate() {
        let spec = match k {
            Kind::Start => NodeSpec::Start(TriggerSpec::None),
            Kind::End => NodeSpec::End(TriggerSpec::None),
            Kind::Task => NodeSpec::Task,
            Kind::XorSplit | Kind::XorJoin => NodeSpec::ExclusiveGateway,
            Kind::AndSplit | Kind::AndJoin => NodeSpec::ParallelGateway,
        };
        b.add_node("p", &format!("n{n}"), spec).unwrap();
    }
    let flows = f
        .edges
        .iter()
        .map(|&(a, c)| b.connect(&format!("n{a}"), &format!("n{c}"), None).unwrap())
        .collect();
    (b.into_model(), flows)
}

#[derive(Debug, Default)]
pub struct Tally {
    pub graphs: usize,
    pub pairs: usize,
    pub disagreements: Vec<String>,
}

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.graphs += other.graphs;
        self.pairs += other.pairs;
        self.disagreements.extend(other.disagreements);
        self
    }
}

/// Compares the linter's co-markability and join classification with the
/// oracle on every join of `f`.
pub fn compare(f: &Family) -> Tally {
    let expected = co_markable_pairs(f);
    let (model, flows) = to_model(f);
    let graph = Graph::new(&model);
    let flow = |e: usize| match model.resolve(&flows[e]) {
        Ok(ElementRef::SequenceFlow(id)) => id,
        other => panic!("flow {} resolved to {other:?}", flows[e]),
    };
    let mut tally = Tally { graphs: 1, ..Tally::default() };
    for (n, k) in f.kinds.iter().enumerate() {
        if !matches!(k, Kind::XorJoin | Kind::AndJoin) {
            continue;
        }
        let ins: Vec<usize> = (0..f.edges.len()).filter(|&e| f.edges[e].1 == n).collect();
        let (a, b) = (ins[0], ins[1]);
        let want = expected.contains(&(a.min(b), a.max(b)));
        let got = graph.co_markable(flow(a), flow(b)).expect("token net");
        let join = model.node(model.flow(flow(a)).target);
        let modes = graph
            .classify_incoming(model.flow(flow(a)).target)
            .expect("classification");
        let want_mode = if want { TokenMode::NonExclusive } else { TokenMode::Exclusive };
        let modes_ok = modes.values().all(|&m| m == want_mode);
        tally.pairs += 1;
        if got != want || !modes_ok {
            tally.disagreements.push(format!(
                "{:?} {:?} join {}: oracle {want}, linter {got}, modes {modes:?}",
                f.kinds, f.edges, join.id
            ));
        }
    }
    tally
}
