//! Synthetic models for benchmarking the linter.

use bpmnlint_core::xmlio::{ModelBuilder, NodeSpec, TriggerSpec};
use bpmnlint_core::BpmnModel;

/// A process of `blocks` sequential blocks, each a parallel split into
/// `width` named tasks followed by the matching join.
pub fn parallel_chain(blocks: usize, width: usize) -> BpmnModel {
    let mut b = ModelBuilder::new("synthetic.bpmn");
    b.new_process("P").expect("fresh process");
    let add = |b: &mut ModelBuilder, id: &str, spec: NodeSpec| {
        b.add_node("P", id, spec).expect("unique id");
        b.set_name(id, id).expect("known id");
    };
    add(&mut b, "start", NodeSpec::Start(TriggerSpec::None));
    let mut prev = "start".to_string();
    for k in 0..blocks {
        let (split, join) = (format!("split{k}"), format!("join{k}"));
        add(&mut b, &split, NodeSpec::ParallelGateway);
        add(&mut b, &join, NodeSpec::ParallelGateway);
        b.connect(&prev, &split, None).expect("same container");
        for w in 0..width {
            let task = format!("task{k}_{w}");
            add(&mut b, &task, NodeSpec::Task);
            b.connect(&split, &task, None).expect("same container");
            b.connect(&task, &join, None).expect("same container");
        }
        prev = join;
    }
    add(&mut b, "end", NodeSpec::End(TriggerSpec::None));
    b.connect(&prev, "end", None).expect("same container");
    b.into_model()
}
