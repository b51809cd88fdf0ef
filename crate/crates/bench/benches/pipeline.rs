use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use randtopo_bench::{er_graph, sparse_plane};
use randtopo_core::census::{
    cross_polytope_counts, empty_simplex_counts, estimate_mu, five_vertex_trees, subgraph_counts, CanonicalGraph,
};
use randtopo_core::generators::{cech_complex, clique_complex};
use randtopo_core::lab::{run_experiment, Model, ParamRule, RegimeSpec};
use randtopo_core::{betti_numbers, DEFAULT_PRIME};

fn complexes(c: &mut Criterion) {
    let mut group = c.benchmark_group("complex");
    for n in [100, 200] {
        let g = er_graph(n, 0.1);
        group.bench_with_input(BenchmarkId::new("er_clique_dim3", n), &g, |b, g| {
            b.iter(|| clique_complex(black_box(g), 3))
        });
    }
    let (pts, r, _) = sparse_plane(2000, 4.0);
    group.bench_function("cech_dim2_n2000", |b| b.iter(|| cech_complex(black_box(&pts), r, 2).unwrap()));
    group.finish();
}

fn homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti");
    for n in [60, 100] {
        let cx = clique_complex(&er_graph(n, 0.15), 3);
        group.bench_with_input(BenchmarkId::new("er_up_to_2", n), &cx, |b, cx| {
            b.iter(|| betti_numbers(black_box(cx), 2, DEFAULT_PRIME).unwrap())
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    let (pts, r, g) = sparse_plane(2000, 3.0);
    group.bench_function("empty_triangles_n2000", |b| {
        b.iter(|| empty_simplex_counts(black_box(&pts), r, 3, &g).unwrap())
    });
    group.bench_function("cross_polytopes_k1_n2000", |b| b.iter(|| cross_polytope_counts(black_box(&g), 1)));
    let trees = five_vertex_trees();
    group.bench_function("five_vertex_trees_n2000", |b| {
        b.iter(|| subgraph_counts(black_box(&g), &trees, false).unwrap())
    });
    let chorded_cycle = CanonicalGraph::from_edges(
        9,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 0), (0, 4), (2, 7)],
    )
    .unwrap();
    group.bench_function("canonical_form_9", |b| b.iter(|| CanonicalGraph::from_graph(&black_box(&chorded_cycle).to_graph())));
    group.bench_function("mu_k3_d2_1e5", |b| b.iter(|| estimate_mu(3, 2, 100_000, black_box(1)).unwrap()));
    group.finish();
}

fn experiment(c: &mut Criterion) {
    let mut group = c.benchmark_group("experiment");
    group.sample_size(10);
    let rips = RegimeSpec::geometric(Model::Rips, 500, 1, 2, ParamRule::Alpha { alpha: 1.0 });
    group.bench_function("rips_k1_n500_20_trials", |b| b.iter(|| run_experiment(black_box(&rips), 20, 3).unwrap()));
    let er = RegimeSpec::er(60, 1, ParamRule::Explicit { value: 0.1 });
    group.bench_function("er_k1_n60_50_trials", |b| b.iter(|| run_experiment(black_box(&er), 50, 3).unwrap()));
    group.finish();
}

criterion_group!(benches, complexes, homology, census, experiment);
criterion_main!(benches);
