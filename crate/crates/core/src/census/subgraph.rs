//! Exact subgraph and induced-subgraph counts for small patterns.
//!
//! Vertex subsets of the pattern size are enumerated (connected subsets only,
//! via ESU, when every pattern is connected). Each subset's induced graph is
//! compared against the patterns after an edge-count and degree-sequence
//! filter; results are memoised on the subset's raw adjacency code.

use std::collections::HashMap;

use crate::complex::Graph;
use crate::error::{Error, Result};

use super::canonical::{
    count_spanning_embeddings, degree_sequence, CanonicalGraph, SmallAdjacency, MAX_CANONICAL_VERTICES,
};

/// Largest pattern accepted by [`subgraph_counts`].
pub const MAX_PATTERN_VERTICES: usize = 9;

/// Calls `visit` once for every vertex set of size `size` inducing a
/// connected subgraph (Wernicke's ESU enumeration).
pub fn for_each_connected_subset<F: FnMut(&[usize])>(g: &Graph, size: usize, mut visit: F) {
    if size == 0 {
        return;
    }
    fn extend<F: FnMut(&[usize])>(
        g: &Graph,
        size: usize,
        root: usize,
        sub: &mut Vec<usize>,
        mut ext: Vec<usize>,
        visit: &mut F,
    ) {
        if sub.len() == size {
            visit(sub);
            return;
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in g.neighbors(w) {
                let u = u as usize;
                if u <= root || sub.contains(&u) || u == w || next.contains(&u) {
                    continue;
                }
                // exclusive neighbourhood: not adjacent to the current subset
                if sub.iter().any(|&s| g.has_edge(s, u)) {
                    continue;
                }
                next.push(u);
            }
            sub.push(w);
            extend(g, size, root, sub, next, visit);
            sub.pop();
        }
    }
    let mut sub = Vec::with_capacity(size);
    for v in 0..g.vertex_count() {
        sub.push(v);
        let ext: Vec<usize> = g.neighbors(v).iter().map(|&u| u as usize).filter(|&u| u > v).collect();
        extend(g, size, v, &mut sub, ext, &mut visit);
        sub.pop();
    }
}

fn for_each_subset<F: FnMut(&[usize])>(n: usize, size: usize, visit: &mut F) {
    fn rec<F: FnMut(&[usize])>(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, visit: &mut F) {
        if cur.len() == size {
            visit(cur);
            return;
        }
        for v in start..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, size, cur, visit);
            cur.pop();
        }
    }
    rec(0, n, size, &mut Vec::with_capacity(size), visit);
}

fn induced_adjacency(g: &Graph, subset: &[usize]) -> SmallAdjacency {
    let mut adj = [0u16; MAX_CANONICAL_VERTICES];
    for (i, &u) in subset.iter().enumerate() {
        for (j, &v) in subset.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

#[allow(clippy::needless_range_loop)]
fn raw_code(n: usize, adj: &SmallAdjacency) -> u64 {
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | u64::from(adj[i] >> j & 1);
        }
    }
    code
}

struct PatternInfo {
    form: CanonicalGraph,
    adjacency: SmallAdjacency,
    edges: usize,
    degrees: Vec<u32>,
    automorphisms: u64,
}

/// Counts of each pattern in `g`: copies as subgraphs (`induced = false`) or
/// as induced subgraphs (`induced = true`).
pub fn subgraph_counts(g: &Graph, patterns: &[CanonicalGraph], induced: bool) -> Result<Vec<u64>> {
    if let Some(p) = patterns.iter().find(|p| p.vertex_count() > MAX_PATTERN_VERTICES) {
        return Err(Error::PatternTooLarge(p.vertex_count()));
    }
    let mut counts = vec![0u64; patterns.len()];
    let mut sizes: Vec<usize> = patterns.iter().map(CanonicalGraph::vertex_count).collect();
    sizes.sort_unstable();
    sizes.dedup();

    for size in sizes {
        let group: Vec<usize> = (0..patterns.len()).filter(|&i| patterns[i].vertex_count() == size).collect();
        if size == 0 {
            for &i in &group {
                counts[i] = 1;
            }
            continue;
        }
        let infos: Vec<PatternInfo> = group
            .iter()
            .map(|&i| {
                let form = patterns[i].clone();
                let adjacency = form.adjacency();
                PatternInfo {
                    edges: form.edge_count(),
                    degrees: form.degree_sequence(),
                    automorphisms: form.automorphism_count(),
                    adjacency,
                    form,
                }
            })
            .collect();
        let all_connected = infos.iter().all(|p| p.form.is_connected());
        let mut memo: HashMap<u64, Vec<u64>> = HashMap::new();
        let mut local = vec![0u64; infos.len()];

        let mut visit = |subset: &[usize]| {
            let adj = induced_adjacency(g, subset);
            let key = raw_code(size, &adj);
            let hits = memo.entry(key).or_insert_with(|| {
                let edges: usize = adj[..size].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
                let degrees = degree_sequence(size, &adj);
                let mut form: Option<CanonicalGraph> = None;
                infos
                    .iter()
                    .map(|p| {
                        if induced {
                            if p.edges != edges || p.degrees != degrees {
                                return 0;
                            }
                            let f = form.get_or_insert_with(|| {
                                CanonicalGraph::from_adjacency(size, &adj).expect("size checked")
                            });
                            u64::from(*f == p.form)
                        } else {
                            if p.edges > edges {
                                return 0;
                            }
                            count_spanning_embeddings(size, &p.adjacency, &adj) / p.automorphisms
                        }
                    })
                    .collect()
            });
            for (l, h) in local.iter_mut().zip(hits.iter()) {
                *l += h;
            }
        };
        if all_connected {
            for_each_connected_subset(g, size, &mut visit);
        } else {
            for_each_subset(g.vertex_count(), size, &mut visit);
        }
        for (&i, c) in group.iter().zip(local) {
            counts[i] = c;
        }
    }
    Ok(counts)
}
