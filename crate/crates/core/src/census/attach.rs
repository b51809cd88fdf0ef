//! Counts of small cliques with extra edges or paths hanging off them.
//!
//! The base "simplex on k-1 vertices" is read as a `(k-1)`-clique of the
//! graph. Attachments must leave the clique: `out(u) = N(u) \ Q`.

use crate::complex::Graph;
use crate::error::{Error, Result};
use crate::generators::clique_complex;

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("attachment counts need k >= 3, got {k}")));
    }
    Ok(())
}

fn outside(g: &Graph, u: u32, clique: &[u32]) -> Vec<u32> {
    g.neighbors(u as usize).iter().copied().filter(|a| !clique.contains(a)).collect()
}

fn common(a: &[u32], b: &[u32]) -> u64 {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// `Y_{n,k}`: triples of a `(k-1)`-clique `Q`, an unordered pair `{u, v}`
/// in `Q`, and edges `u-a`, `v-b` with `a != b` both outside `Q`.
pub fn y_count(g: &Graph, k: usize) -> Result<u64> {
    check_k(k)?;
    let c = clique_complex(g, k - 2);
    let mut total = 0u64;
    for q in c.faces(k - 2).iter() {
        let outs: Vec<Vec<u32>> = q.iter().map(|&u| outside(g, u, q)).collect();
        for i in 0..outs.len() {
            for j in i + 1..outs.len() {
                total += outs[i].len() as u64 * outs[j].len() as u64 - common(&outs[i], &outs[j]);
            }
        }
    }
    Ok(total)
}

/// `Z_{n,k}`: a `(k-1)`-clique `Q`, a vertex `u` in `Q` and a path `u-a-b`
/// with `a` and `b` outside `Q`.
pub fn z_count(g: &Graph, k: usize) -> Result<u64> {
    check_k(k)?;
    let c = clique_complex(g, k - 2);
    let mut total = 0u64;
    for q in c.faces(k - 2).iter() {
        for &u in q {
            for a in outside(g, u, q) {
                total += outside(g, a, q).len() as u64;
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(y_count(&path4(), 3).unwrap(), 1);
        assert_eq!(z_count(&path4(), 3).unwrap(), 2);
        let tri = Graph::complete(3);
        assert_eq!(y_count(&tri, 3).unwrap(), 0);
        assert_eq!(z_count(&tri, 3).unwrap(), 0);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(y_count(&star, 3).unwrap(), 0);
        assert_eq!(z_count(&star, 3).unwrap(), 0);
    }

    #[test]
    fn k_below_three_is_rejected() {
        assert!(y_count(&path4(), 2).is_err());
        assert!(z_count(&path4(), 2).is_err());
    }

    #[test]
    fn shared_pendant_is_not_a_y() {
        // edge 0-1 with both ends joined to 2 only: a = b is excluded
        let g = Graph::complete(3);
        assert_eq!(y_count(&g, 3).unwrap(), 0);
        // square: base 0-1 has pendants 3 (at 0) and 2 (at 1)
        let sq = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(y_count(&sq, 3).unwrap(), 4);
        assert_eq!(z_count(&sq, 3).unwrap(), 8);
    }
}
