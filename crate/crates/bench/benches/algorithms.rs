use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cliquelab_bench::{fixtures, random_graphs};
use cliquelab_core::counterexamples::{fig2_graph, laplante_15, tamta_family};
use cliquelab_core::wood::{build_gh, max_flow, verify_wood_theorem, DEFAULT_SUBSET_CAP};
use cliquelab_core::{
    laplante, max_clique, maximal_cliques, poly_clique, ChoicePolicy, FamilyParams, SearchMode,
    DEFAULT_NODE_CAP,
};

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    for (name, g) in random_graphs().into_iter().chain(fixtures()) {
        group.bench_with_input(BenchmarkId::new("max_clique", &name), &g, |b, g| {
            b.iter(|| max_clique(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("maximal_cliques", &name), &g, |b, g| {
            b.iter(|| maximal_cliques(black_box(g)))
        });
    }
    group.finish();
}

fn reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduction");
    for (name, g) in random_graphs() {
        let net = build_gh(&g);
        group.bench_with_input(BenchmarkId::new("max_flow", &name), &net, |b, net| {
            b.iter(|| max_flow(black_box(net)))
        });
    }
    let fig2 = fig2_graph();
    group.bench_function("theorem/fig2-k4", |b| {
        b.iter(|| verify_wood_theorem(black_box(&fig2), 4, DEFAULT_SUBSET_CAP))
    });
    group.finish();
}

fn heuristics(c: &mut Criterion) {
    let mut group = c.benchmark_group("heuristics");
    for (name, g) in random_graphs() {
        group.bench_with_input(BenchmarkId::new("poly_clique_k4", &name), &g, |b, g| {
            b.iter(|| poly_clique::run(black_box(g), 4, &ChoicePolicy::LowestId))
        });
        group.bench_with_input(BenchmarkId::new("laplante", &name), &g, |b, g| {
            b.iter(|| laplante::run(black_box(g), &ChoicePolicy::LowestId))
        });
    }
    group.finish();
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    for k in [4, 6, 8] {
        let g = tamta_family(FamilyParams::new(k).unwrap());
        group.bench_with_input(BenchmarkId::new("poly_adversarial", k), &g, |b, g| {
            b.iter(|| poly_clique::search_traces(g, k, SearchMode::Adversarial, DEFAULT_NODE_CAP))
        });
    }
    let g = laplante_15();
    for mode in [SearchMode::Adversarial, SearchMode::Optimistic] {
        group.bench_function(format!("laplante15/{mode}"), |b| {
            b.iter(|| laplante::search_traces(black_box(&g), mode, DEFAULT_NODE_CAP))
        });
    }
    group.finish();
}

criterion_group!(benches, oracle, reduction, heuristics, searches);
criterion_main!(benches);
