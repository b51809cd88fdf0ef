//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test --release -p randtopo-core --test acceptance -- --nocapture`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use randtopo_core::census::{
    cross_polytope_counts, enumerate_extension_types, faces_on_large_components, five_vertex_trees,
    isolated_empty_simplex_count, subgraph_counts, y_count, z_count, CanonicalGraph,
};
use randtopo_core::census::{empty_simplex_count, er_covariance_faces, er_expected_faces, er_variance_faces};
use randtopo_core::generators::{
    cech_complex, cech_complex_full, clique_complex, clique_complex_full, gen_er_graph, geometric_graph,
    rips_complex, sample_points,
};
use randtopo_core::lab::{run_experiment, run_experiment_with_workers, Model, ParamRule, RegimeSpec};
use randtopo_core::lab::{self_standardized_ks, tv_to_poisson};
use randtopo_core::{betti_numbers, f_vector, DensitySpec, Graph, RngStream, SimplicialComplex, DEFAULT_PRIME};

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    println!("criterion {id:02} [{}] {name}: {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
fn rational_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = (&m[rank][c] * &m[r][j] - &m[r][c] * &m[rank][j]) / &prev;
                m[r][j] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Integer boundary matrix built from the face lists without library help.
fn integer_boundary(c: &SimplicialComplex, k: usize) -> Vec<Vec<BigInt>> {
    let lower: Vec<Vec<u32>> = c.faces(k - 1).iter().map(<[u32]>::to_vec).collect();
    let upper: Vec<Vec<u32>> = c.faces(k).iter().map(<[u32]>::to_vec).collect();
    let mut m = vec![vec![BigInt::zero(); upper.len()]; lower.len()];
    for (j, face) in upper.iter().enumerate() {
        for skip in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(skip);
            let i = lower.iter().position(|f| *f == sub).expect("closed");
            m[i][j] = if skip % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        }
    }
    m
}

fn oracle_betti(c: &SimplicialComplex) -> Vec<u64> {
    let top = c.max_dim();
    let ranks: Vec<u64> = (0..=top + 1)
        .map(|k| {
            if k == 0 || k > top {
                0
            } else {
                rational_rank(integer_boundary(c, k)) as u64
            }
        })
        .collect();
    (0..=top).map(|k| c.face_count(k) as u64 - ranks[k] - ranks[k + 1]).collect()
}

#[test]
fn criterion_01_homology_matches_rational_oracle() {
    let mut instances = 0;
    let mut mismatches = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (pi, p) in [0.3, 0.5, 0.7].into_iter().enumerate() {
        for t in 0..80u64 {
            let n = rng.random_range(4..=12);
            let g = gen_er_graph(n, p, RngStream::new(100 + pi as u64, t)).unwrap();
            let c = clique_complex_full(&g);
            let ours = betti_numbers(&c, c.max_dim(), DEFAULT_PRIME).unwrap().betti;
            if ours != oracle_betti(&c) {
                mismatches += 1;
            }
            instances += 1;
        }
    }
    report(1, "homology vs rational elimination", mismatches == 0 && instances >= 200, &format!("{instances} complexes, {mismatches} mismatches"));
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn octahedron() -> Graph {
    Graph::from_edges(6, (0..6).flat_map(|u| (u + 1..6).filter(move |&v| v != u + 3).map(move |v| (u, v)))).unwrap()
}

#[test]
fn criterion_02_known_spaces() {
    let mut ok = true;
    let c4 = clique_complex_full(&cycle(4));
    ok &= betti_numbers(&c4, 1, DEFAULT_PRIME).unwrap().betti == [1, 1];
    let oct = clique_complex_full(&octahedron());
    ok &= betti_numbers(&oct, 2, DEFAULT_PRIME).unwrap().betti == [1, 0, 1];
    for m in 1..=8 {
        let c = clique_complex_full(&Graph::complete(m));
        let mut expected = vec![0; m];
        expected[0] = 1;
        ok &= betti_numbers(&c, m - 1, DEFAULT_PRIME).unwrap().betti == expected;
    }
    report(2, "known spaces", ok, "C4 = (1,1), K_{2,2,2} = (1,0,1), K_m = (1,0,...,0) for m <= 8");
}

/// Full complexes from all three models, with their Betti numbers in every degree.
fn full_corpus() -> Vec<(SimplicialComplex, Vec<u64>)> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in 0..400u64 {
        let n = rng.random_range(3..=16);
        let p = rng.random_range(0.1..0.8);
        out.push(clique_complex_full(&gen_er_graph(n, p, RngStream::new(300, t)).unwrap()));
    }
    for t in 0..300u64 {
        let n = rng.random_range(5..=80);
        let d = rng.random_range(1..=3);
        // a few expected neighbours per point keeps cliques small
        let r = rng.random_range(0.1..0.6) * (n as f64).powf(-1.0 / d as f64);
        let pts = sample_points(n, DensitySpec::uniform_cube(d), RngStream::new(301, t)).unwrap();
        let g = geometric_graph(&pts, r).unwrap();
        out.push(clique_complex_full(&g));
        let pts = sample_points(n, DensitySpec::uniform_cube(d), RngStream::new(302, t)).unwrap();
        out.push(cech_complex_full(&pts, r).unwrap());
    }
    out.into_iter()
        .map(|c| {
            let b = betti_numbers(&c, c.max_dim(), DEFAULT_PRIME).unwrap().betti;
            (c, b)
        })
        .collect()
}

fn alternating(v: &[u64]) -> i64 {
    v.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
}

#[test]
fn criterion_03_euler_poincare() {
    let corpus = full_corpus();
    let bad = corpus.iter().filter(|(c, b)| alternating(&f_vector(c)) != alternating(b)).count();
    report(3, "Euler-Poincare identity", bad == 0 && corpus.len() >= 1000, &format!("{} full instances, {bad} violations", corpus.len()));
}

#[test]
fn criterion_04_morse_sandwich() {
    let corpus = full_corpus();
    let mut checks = 0;
    let mut bad = 0;
    for (c, b) in &corpus {
        let f: Vec<i64> = f_vector(c).iter().map(|&x| x as i64).collect();
        for (k, &beta) in b.iter().enumerate() {
            let below = if k == 0 { 0 } else { f[k - 1] };
            let above = f.get(k + 1).copied().unwrap_or(0);
            let beta = beta as i64;
            checks += 1;
            if !(f[k] - below - above <= beta && beta <= f[k]) {
                bad += 1;
            }
        }
    }
    // capped ER complexes at larger n, degrees below the cap
    for t in 0..200u64 {
        let g = gen_er_graph(60, 0.15, RngStream::new(400, t)).unwrap();
        let c = clique_complex(&g, 3);
        let f: Vec<i64> = f_vector(&c).iter().map(|&x| x as i64).collect();
        let b = betti_numbers(&c, 2, DEFAULT_PRIME).unwrap().betti;
        for k in 0..=2 {
            let below = if k == 0 { 0 } else { f[k - 1] };
            checks += 1;
            if !(f[k] - below - f[k + 1] <= b[k] as i64 && b[k] as i64 <= f[k]) {
                bad += 1;
            }
        }
    }
    report(4, "Morse sandwich", bad == 0, &format!("{checks} (instance, k) checks, {bad} violations"));
}

#[test]
fn criterion_05_cech_sandwich() {
    let mut instances = 0;
    let mut bad = 0;
    let mut nontrivial = 0;
    for (ni, n) in [50usize, 150, 300, 600].into_iter().enumerate() {
        for (ai, alpha) in [0.5, 3.0, 30.0].into_iter().enumerate() {
            for (di, density) in [DensitySpec::uniform_cube(2), DensitySpec::gaussian(2)].into_iter().enumerate() {
                for t in 0..12u64 {
                    let mut r = (alpha / (n as f64).powi(3)).sqrt().sqrt();
                    if di == 1 {
                        // the gaussian peak density is about 1/6 of the cube's
                        r *= 2.5;
                    }
                    let stream = RngStream::new(500 + (ni * 10 + ai * 2 + di) as u64, t);
                    let pts = sample_points(n, density, stream).unwrap();
                    let g = geometric_graph(&pts, r).unwrap();
                    let c = cech_complex(&pts, r, 2).unwrap();
                    let beta = betti_numbers(&c, 1, DEFAULT_PRIME).unwrap().betti[1];
                    let s = empty_simplex_count(&pts, r, 3).unwrap();
                    let iso = isolated_empty_simplex_count(&pts, r, 3, &g).unwrap();
                    let upper = s + y_count(&g, 3).unwrap() + z_count(&g, 3).unwrap();
                    instances += 1;
                    if beta > 0 {
                        nontrivial += 1;
                    }
                    if !(iso <= beta && beta <= upper) {
                        bad += 1;
                    }
                }
            }
        }
    }
    report(5, "Cech sandwich (beta_{k-2})", bad == 0, &format!("{instances} instances ({nontrivial} with beta_1 > 0), {bad} violations"));
}

#[test]
fn criterion_06_rips_sandwich_and_tree_bound() {
    let trees = five_vertex_trees();
    let mut instances = 0;
    let mut bad_octo = 0;
    let mut bad_tree = 0;
    let mut nontrivial = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for t in 0..520u64 {
        let k = 1 + (t % 2) as usize;
        let n = rng.random_range(20..=150);
        let r = rng.random_range(0.02..0.09);
        let pts = sample_points(n, DensitySpec::uniform_cube(2), RngStream::new(600, t)).unwrap();
        let g = geometric_graph(&pts, r).unwrap();
        let c = rips_complex(&pts, r, k + 1).unwrap();
        let beta = betti_numbers(&c, k, DEFAULT_PRIME).unwrap().betti[k];
        let (_, oc) = cross_polytope_counts(&g, k);
        let fge = faces_on_large_components(&c, k, 2 * k + 3);
        if !(oc <= beta && beta <= oc + fge) {
            bad_octo += 1;
        }
        if beta > 0 {
            nontrivial += 1;
        }
        let f1_ge5 = faces_on_large_components(&c, 1, 5);
        let t_sum: u64 = subgraph_counts(&g, &trees, false).unwrap().iter().sum();
        if f1_ge5 > 4 * t_sum {
            bad_tree += 1;
        }
        instances += 1;
    }
    report(
        6,
        "Rips sandwich and tree bound",
        bad_octo == 0 && bad_tree == 0 && instances >= 500,
        &format!("{instances} instances ({nontrivial} with beta_k > 0), {bad_octo} sandwich and {bad_tree} tree-bound violations"),
    );
}

#[test]
fn criterion_07_extension_type_counts() {
    let k1 = enumerate_extension_types(1).unwrap().len();
    let k2 = enumerate_extension_types(2).unwrap().len();
    report(7, "extension types", k1 == 3 && k2 == 17, &format!("k=1: {k1} (want 3), k=2: {k2} (want 17)"));
}

#[test]
fn criterion_08_er_moments() {
    let (n, p, trials) = (30usize, 0.2, 100_000u64);
    let samples: Vec<(f64, f64)> = (0..trials)
        .map(|t| {
            let c = clique_complex(&gen_er_graph(n, p, RngStream::new(800, t)).unwrap(), 2);
            (c.face_count(1) as f64, c.face_count(2) as f64)
        })
        .collect();
    let m = trials as f64;
    let mean = |f: &dyn Fn(&(f64, f64)) -> f64| samples.iter().map(f).sum::<f64>() / m;
    let (mx, my) = (mean(&|s| s.0), mean(&|s| s.1));
    let (vx, vy) = (mean(&|s| (s.0 - mx).powi(2)), mean(&|s| (s.1 - my).powi(2)));
    let cxy = mean(&|s| (s.0 - mx) * (s.1 - my));
    let se_var = |mu: f64, v: f64, pick: &dyn Fn(&(f64, f64)) -> f64| {
        ((samples.iter().map(|s| (pick(s) - mu).powi(4)).sum::<f64>() / m - v * v) / m).sqrt()
    };
    let se_cov = ((samples.iter().map(|s| ((s.0 - mx) * (s.1 - my) - cxy).powi(2)).sum::<f64>() / m) / m).sqrt();
    let checks = [
        ("E f1", mx, er_expected_faces(n, 1, p).unwrap(), (vx / m).sqrt()),
        ("E f2", my, er_expected_faces(n, 2, p).unwrap(), (vy / m).sqrt()),
        ("Var f1", vx, er_variance_faces(n, 1, p).unwrap(), se_var(mx, vx, &|s| s.0)),
        ("Var f2", vy, er_variance_faces(n, 2, p).unwrap(), se_var(my, vy, &|s| s.1)),
        ("Cov f1 f2", cxy, er_covariance_faces(n, 1, p).unwrap(), se_cov),
    ];
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, mc, exact, se) in checks {
        let z = (mc - exact) / se;
        pass &= z.abs() <= 3.0;
        detail.push(format!("{name}: mc {mc:.3} exact {exact:.3} z {z:+.2}"));
    }
    report(8, "ER exact moments", pass, &detail.join("; "));
}

#[test]
fn criterion_09_er_clt() {
    let spec = RegimeSpec::er(400, 1, ParamRule::ErGamma { gamma: 0.7 });
    let res = run_experiment(&spec, 500, 9).unwrap();
    let b1: Vec<f64> = res.column("betti_1").unwrap().iter().map(|&v| v as f64).collect();
    let ks = self_standardized_ks(&b1).unwrap();
    report(9, "ER CLT for beta_1", ks <= 0.10, &format!("KS = {ks:.4}, mean beta_1 = {:.2}", res.mean("betti_1").unwrap()));
}

fn cech_tv(n: usize, trials: usize, seed: u64) -> (f64, f64) {
    let spec = RegimeSpec::geometric(Model::Cech, n, 3, 2, ParamRule::Alpha { alpha: 3.0 });
    let res = run_experiment(&spec, trials, seed).unwrap();
    let b1 = res.column("betti_1").unwrap();
    let mean = res.mean("betti_1").unwrap();
    (tv_to_poisson(&b1, mean).unwrap(), mean)
}

#[test]
fn criterion_10_cech_poisson_regime() {
    let (tv500, m500) = cech_tv(500, 2000, 10);
    let (tv2000, m2000) = cech_tv(2000, 2000, 11);
    report(
        10,
        "Cech Poisson regime",
        tv500 <= 0.15 && tv2000 < tv500,
        &format!("n=500: TV {tv500:.4} (mean {m500:.3}); n=2000: TV {tv2000:.4} (mean {m2000:.3})"),
    );
}

#[test]
fn criterion_11_cech_vanishing_regime() {
    let n = 1000usize;
    let alpha = (n as f64).powf(-0.5);
    let spec = RegimeSpec::geometric(Model::Cech, n, 3, 2, ParamRule::Alpha { alpha });
    let res = run_experiment(&spec, 500, 12).unwrap();
    let b1 = res.column("betti_1").unwrap();
    let frac = b1.iter().filter(|&&b| b > 0).count() as f64 / b1.len() as f64;
    report(11, "Cech vanishing regime", frac <= 0.05, &format!("fraction with beta_1 > 0: {frac:.4}"));
}

/// Fixed `α` for the Rips scaling check.
const RIPS_ALPHA: f64 = 1.0;

#[test]
fn criterion_12_rips_expectation_scaling() {
    let mean_at = |n: usize, seed: u64| {
        let spec = RegimeSpec::geometric(Model::Rips, n, 1, 2, ParamRule::Alpha { alpha: RIPS_ALPHA });
        run_experiment(&spec, 1000, seed).unwrap().mean("betti_1").unwrap()
    };
    let (a, b) = (mean_at(300, 13), mean_at(500, 14));
    let rel = (a - b).abs() / a.max(b);
    report(12, "Rips expectation scaling", rel <= 0.25, &format!("alpha {RIPS_ALPHA}: mean beta_1 {a:.4} at n=300, {b:.4} at n=500, relative gap {rel:.3}"));
}

#[test]
fn criterion_13_determinism() {
    let specs = [
        RegimeSpec::er(40, 1, ParamRule::Explicit { value: 0.15 }),
        RegimeSpec::geometric(Model::Cech, 200, 3, 2, ParamRule::Alpha { alpha: 3.0 }),
        RegimeSpec::geometric(Model::Rips, 150, 1, 2, ParamRule::Explicit { value: 0.04 }),
    ];
    let mut identical = true;
    for spec in &specs {
        let a = run_experiment_with_workers(spec, 40, 2024, 1).unwrap();
        let b = run_experiment_with_workers(spec, 40, 2024, 8).unwrap();
        let c = run_experiment_with_workers(spec, 40, 2024, 3).unwrap();
        identical &= a.to_csv() == b.to_csv() && a.to_csv() == c.to_csv();
        identical &= a.summary_json() == b.summary_json();
        identical &= a.summary_json() == c.summary_json();
    }
    report(13, "determinism across worker counts", identical, "1, 3 and 8 workers on ER, Cech and Rips experiments");
}

// Brute-force census oracles: plain subset and permutation enumeration.

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Number of injective maps of the pattern into `vs` preserving pattern
/// edges (and non-edges when `induced`), divided by automorphisms.
fn brute_pattern_count(g: &Graph, pattern: &CanonicalGraph, induced: bool) -> u64 {
    let v = pattern.vertex_count();
    let mut pm = vec![vec![false; v]; v];
    for (a, b) in pattern.edges() {
        pm[a][b] = true;
        pm[b][a] = true;
    }
    let padj = |a: usize, b: usize| pm[a][b];
    let perms = permutations(v);
    let aut = perms.iter().filter(|p| (0..v).all(|a| (0..v).all(|b| a == b || padj(a, b) == padj(p[a], p[b])))).count() as u64;
    let mut maps = 0u64;
    for set in subsets(g.vertex_count(), v) {
        for p in &perms {
            let ok = (0..v).all(|a| {
                (a + 1..v).all(|b| {
                    let host = g.has_edge(set[p[a]], set[p[b]]);
                    if padj(a, b) {
                        host
                    } else {
                        !induced || !host
                    }
                })
            });
            if ok {
                maps += 1;
            }
        }
    }
    maps / aut
}

fn brute_y(g: &Graph, k: usize) -> u64 {
    let n = g.vertex_count();
    let mut total = 0;
    for q in subsets(n, k - 1).into_iter().filter(|q| is_clique(g, q)) {
        for (i, &u) in q.iter().enumerate() {
            for &v in &q[i + 1..] {
                for a in 0..n {
                    for b in 0..n {
                        if a != b && !q.contains(&a) && !q.contains(&b) && g.has_edge(u, a) && g.has_edge(v, b) {
                            total += 1;
                        }
                    }
                }
            }
        }
    }
    total
}

fn brute_z(g: &Graph, k: usize) -> u64 {
    let n = g.vertex_count();
    let mut total = 0;
    for q in subsets(n, k - 1).into_iter().filter(|q| is_clique(g, q)) {
        for &u in &q {
            for a in 0..n {
                for b in 0..n {
                    if a != b && !q.contains(&a) && !q.contains(&b) && g.has_edge(u, a) && g.has_edge(a, b) {
                        total += 1;
                    }
                }
            }
        }
    }
    total
}

/// Complement of the induced graph is a perfect matching.
fn brute_cross(g: &Graph, k: usize) -> (u64, u64) {
    let n = g.vertex_count();
    let size = 2 * k + 2;
    if size > n {
        return (0, 0);
    }
    let mut o = 0;
    let mut oc = 0;
    for set in subsets(n, size) {
        let matched = set.iter().all(|&u| set.iter().filter(|&&v| v != u && !g.has_edge(u, v)).count() == 1);
        if matched {
            o += 1;
            let closed = set.iter().all(|&u| g.neighbors(u).iter().all(|&w| set.contains(&(w as usize))));
            if closed {
                oc += 1;
            }
        }
    }
    (o, oc)
}

fn brute_f_ge(g: &Graph, k: usize, i: usize) -> u64 {
    let n = g.vertex_count();
    // component sizes by repeated relaxation
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for (u, v) in g.edges() {
            let m = label[u].min(label[v]);
            if label[u] != m || label[v] != m {
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    subsets(n, k + 1)
        .into_iter()
        .filter(|f| is_clique(g, f))
        .filter(|f| label.iter().filter(|&&l| l == label[f[0]]).count() >= i)
        .count() as u64
}

fn small_patterns() -> Vec<CanonicalGraph> {
    let mut pats: BTreeSet<CanonicalGraph> = BTreeSet::new();
    for v in 2..=4 {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            pats.insert(CanonicalGraph::from_edges(v, &edges).unwrap());
        }
    }
    pats.extend(five_vertex_trees());
    pats.into_iter().collect()
}

#[test]
fn criterion_14_census_matches_brute_force() {
    let patterns = small_patterns();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut mismatches: Vec<String> = Vec::new();
    let instances = 520;
    for t in 0..instances {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.1..0.9);
        let g = gen_er_graph(n, p, RngStream::new(1400, t)).unwrap();
        let mut check = |what: String, ours: u64, brute: u64| {
            if ours != brute {
                mismatches.push(format!("graph {t}: {what} {ours} vs {brute}"));
            }
        };
        for induced in [false, true] {
            let ours = subgraph_counts(&g, &patterns, induced).unwrap();
            for (pat, &c) in patterns.iter().zip(&ours) {
                check(format!("{pat:?} induced={induced}"), c, brute_pattern_count(&g, pat, induced));
            }
        }
        for k in 3..=4 {
            check(format!("Y_{k}"), y_count(&g, k).unwrap(), brute_y(&g, k));
            check(format!("Z_{k}"), z_count(&g, k).unwrap(), brute_z(&g, k));
        }
        for k in 1..=3 {
            let (o, oc) = cross_polytope_counts(&g, k);
            let (bo, boc) = brute_cross(&g, k);
            check(format!("o_{k}"), o, bo);
            check(format!("o_comp_{k}"), oc, boc);
        }
        let c = clique_complex_full(&g);
        for k in 0..=2 {
            for i in [1, 3, 2 * k + 3] {
                check(format!("f_{k}_ge_{i}"), faces_on_large_components(&c, k, i), brute_f_ge(&g, k, i));
            }
        }
    }
    let detail = if mismatches.is_empty() {
        format!("{instances} graphs, all counters exact")
    } else {
        format!("{} mismatches, first: {}", mismatches.len(), mismatches[0])
    };
    report(14, "census vs brute force", mismatches.is_empty(), &detail);
}
