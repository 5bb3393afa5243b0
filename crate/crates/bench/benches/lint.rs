use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bpmnlint_bench::parallel_chain;
use bpmnlint_core::{engine, LintConfig};

fn lint(c: &mut Criterion) {
    let config = LintConfig::strict();
    let mut group = c.benchmark_group("lint");
    for blocks in [1, 4, 16] {
        let model = parallel_chain(blocks, 3);
        group.bench_with_input(BenchmarkId::new("parallel_chain", blocks), &model, |b, m| {
            b.iter(|| engine::run(m, &config).expect("valid config"))
        });
    }
    group.finish();
}

fn parse(c: &mut Criterion) {
    let xml = std::fs::read(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/composite.bpmn"));
    if let Ok(xml) = xml {
        c.bench_function("parse_composite", |b| {
            b.iter(|| bpmnlint_core::xmlio::parse_bpmn(&xml, "composite.bpmn").expect("fixture parses"))
        });
    }
}

criterion_group!(benches, lint, parse);
criterion_main!(benches);
