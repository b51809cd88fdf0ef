//! Induced cross-polytope skeleta `K_{2,...,2}`.
//!
//! A vertex set induces `K_{2,...,2}` exactly when its complement graph is a
//! perfect matching. The search builds such sets part by part: the smallest
//! remaining vertex, its unique non-neighbour partner, and candidates adjacent
//! to both.

use crate::complex::{components, Graph};

fn count_parts(g: &Graph, candidates: &[u32], parts: usize) -> u64 {
    if parts == 0 {
        return 1;
    }
    let mut total = 0;
    for (i, &v) in candidates.iter().enumerate() {
        if candidates.len() - i < 2 * parts {
            break;
        }
        let later = &candidates[i + 1..];
        for &a in later {
            if g.has_edge(v as usize, a as usize) {
                continue;
            }
            let next: Vec<u32> = later
                .iter()
                .copied()
                .filter(|&w| w != a && g.has_edge(v as usize, w as usize) && g.has_edge(a as usize, w as usize))
                .collect();
            total += count_parts(g, &next, parts - 1);
        }
    }
    total
}

/// `o_k`, the number of induced copies of the 1-skeleton of the `k`-dimensional
/// cross-polytope.
pub fn induced_cross_polytopes(g: &Graph, k: usize) -> u64 {
    let parts = k + 1;
    let mut total = 0;
    for v in 0..g.vertex_count() {
        if g.degree(v) < 2 * k {
            continue;
        }
        // the partner of v is a non-neighbour sharing 2k neighbours with it
        let nv: Vec<u32> = g.neighbors(v).iter().copied().filter(|&w| w as usize > v).collect();
        for a in v + 1..g.vertex_count() {
            if g.has_edge(v, a) {
                continue;
            }
            let next: Vec<u32> = nv.iter().copied().filter(|&w| g.has_edge(a, w as usize)).collect();
            if next.len() >= 2 * k {
                total += count_parts(g, &next, parts - 1);
            }
        }
    }
    total
}

/// `õ_k`, connected components that are themselves cross-polytope skeleta.
pub fn component_cross_polytopes(g: &Graph, k: usize) -> u64 {
    let size = 2 * k + 2;
    components(g)
        .members()
        .values()
        .filter(|m| m.len() == size && m.iter().all(|&v| g.degree(v) == 2 * k))
        .count() as u64
}

/// `(o_k, õ_k)` for `k >= 1`.
pub fn cross_polytope_counts(g: &Graph, k: usize) -> (u64, u64) {
    (induced_cross_polytopes(g, k), component_cross_polytopes(g, k))
}
