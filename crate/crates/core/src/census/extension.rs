//! Graphs reached by growing a `(k+1)`-clique one pendant edge at a time
//! until it has `2k+3` vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

use super::canonical::{CanonicalGraph, MAX_CANONICAL_VERTICES};

/// Isomorphism classes produced by every run of the extension procedure
/// from `K_{k+1}`, in canonical-form order.
pub fn enumerate_extension_types(k: usize) -> Result<Vec<CanonicalGraph>> {
    let target = 2 * k + 3;
    if target > MAX_CANONICAL_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "extension types need 2k+3 <= {MAX_CANONICAL_VERTICES} vertices, got k = {k}"
        )));
    }
    let start = CanonicalGraph::from_graph(&crate::complex::Graph::complete(k + 1))?;
    let mut level: BTreeSet<CanonicalGraph> = BTreeSet::from([start]);
    for n in k + 1..target {
        let mut next = BTreeSet::new();
        for h in &level {
            let mut adj = h.adjacency();
            for v in 0..n {
                adj[v] |= 1 << n;
                adj[n] = 1 << v;
                next.insert(CanonicalGraph::from_adjacency(n + 1, &adj)?);
                adj[v] &= !(1 << n);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// The trees on five vertices, the `k = 1` extension types.
pub fn five_vertex_trees() -> Vec<CanonicalGraph> {
    enumerate_extension_types(1).expect("k = 1 fits")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    /// AHU encodings of every rooted tree with `m` nodes, `1 <= m <= max`.
    #[allow(clippy::needless_range_loop)]
    fn rooted_trees(max: usize) -> Vec<BTreeSet<String>> {
        fn encode(children: &[Vec<usize>], v: usize) -> String {
            let mut parts: Vec<String> = children[v].iter().map(|&c| encode(children, c)).collect();
            parts.sort();
            format!("({})", parts.concat())
        }
        let mut by_size: Vec<BTreeSet<String>> = vec![BTreeSet::new(); max + 1];
        let mut trees: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
        by_size[1].insert("()".into());
        for m in 2..=max {
            let mut grown = BTreeMap::new();
            for t in &trees {
                for v in 0..t.len() {
                    let mut u = t.clone();
                    let next = u.len();
                    u[v].push(next);
                    u.push(vec![]);
                    grown.entry(encode(&u, 0)).or_insert(u);
                }
            }
            by_size[m] = grown.keys().cloned().collect();
            trees = grown.into_values().collect();
        }
        by_size
    }

    /// For k >= 2 the clique is the only `K_{k+1}`, so classes are multisets of
    /// `k+1` rooted trees (one hung at each clique vertex) with `2k+3` nodes.
    fn multiset_oracle(k: usize) -> usize {
        let total = 2 * k + 3;
        let trees = rooted_trees(total);
        let all: Vec<(usize, &String)> = (1..=total).flat_map(|m| trees[m].iter().map(move |s| (m, s))).collect();
        fn go(all: &[(usize, &String)], from: usize, left: usize, slots: usize) -> usize {
            if slots == 0 {
                return usize::from(left == 0);
            }
            (from..all.len()).filter(|&i| all[i].0 <= left).map(|i| go(all, i, left - all[i].0, slots - 1)).sum()
        }
        go(&all, 0, total, k + 1)
    }

    #[test]
    fn rooted_tree_counts() {
        let t = rooted_trees(6);
        let counts: Vec<usize> = t.iter().skip(1).map(BTreeSet::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn small_k() {
        assert_eq!(enumerate_extension_types(0).unwrap().len(), 1);
        let trees = five_vertex_trees();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.vertex_count() == 5 && t.edge_count() == 4 && t.is_connected()));
    }

    #[test]
    fn k2_and_k3_match_rooted_forest_count() {
        for k in 2..=3 {
            let types = enumerate_extension_types(k).unwrap();
            assert_eq!(types.len(), multiset_oracle(k), "k = {k}");
            let edges = k * (k + 1) / 2 + k + 2;
            assert!(types.iter().all(|t| t.vertex_count() == 2 * k + 3 && t.edge_count() == edges));
        }
        assert_eq!(multiset_oracle(2), 18);
    }

    #[test]
    fn too_large() {
        assert!(enumerate_extension_types(5).is_err());
        assert_eq!(enumerate_extension_types(4).unwrap().len(), multiset_oracle(4));
    }
}
