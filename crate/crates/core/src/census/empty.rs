//! Empty simplices of a Čech complex.

use crate::complex::{Graph, PointCloud};
use crate::error::{Error, Result};
use crate::generators::{cech_complex, clique_complex, geometric_graph, miniball::balls_intersect};

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("empty simplices need k >= 2, got {k}")));
    }
    Ok(())
}

/// Visits every empty `(k-1)`-simplex: `k` points whose `(k-1)`-subsets all
/// span Čech faces while the `k` balls have no common point. Candidates are
/// the `k`-cliques of `g`, the geometric graph of `pts` at radius `r`.
fn for_each_empty<F: FnMut(&[u32])>(pts: &PointCloud, r: f64, k: usize, g: &Graph, mut visit: F) -> Result<()> {
    if k == 2 {
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) {
                    visit(&[u as u32, v as u32]);
                }
            }
        }
        return Ok(());
    }
    let cech = cech_complex(pts, r, k - 2)?;
    let facets = cech.faces(k - 2);
    let cliques = clique_complex(g, k - 1);
    let mut sub = Vec::with_capacity(k - 1);
    let mut centers: Vec<&[f64]> = Vec::with_capacity(k);
    for face in cliques.faces(k - 1).iter() {
        let boundary_present = (0..k).all(|skip| {
            sub.clear();
            sub.extend(face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            facets.position(&sub).is_some()
        });
        if !boundary_present {
            continue;
        }
        centers.clear();
        centers.extend(face.iter().map(|&v| pts.point(v as usize)));
        if !balls_intersect(&centers, r) {
            visit(face);
        }
    }
    Ok(())
}

/// `S_{n,k}`, the number of empty `(k-1)`-simplices.
pub fn empty_simplex_count(pts: &PointCloud, r: f64, k: usize) -> Result<u64> {
    check_k(k)?;
    let g = geometric_graph(pts, r)?;
    let mut count = 0;
    for_each_empty(pts, r, k, &g, |_| count += 1)?;
    Ok(count)
}

/// `S̃_{n,k}`: empty `(k-1)`-simplices whose vertices have no neighbours
/// outside the simplex in `g`.
pub fn isolated_empty_simplex_count(pts: &PointCloud, r: f64, k: usize, g: &Graph) -> Result<u64> {
    check_k(k)?;
    if g.vertex_count() != pts.len() {
        return Err(Error::InvalidParameter("graph and point cloud sizes differ".into()));
    }
    let mut count = 0;
    for_each_empty(pts, r, k, g, |face| {
        // in a clique, degree k-1 means no outside neighbours
        if face.iter().all(|&v| g.degree(v as usize) == k - 1) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// `(S_{n,k}, S̃_{n,k})` sharing one enumeration.
pub fn empty_simplex_counts(pts: &PointCloud, r: f64, k: usize, g: &Graph) -> Result<(u64, u64)> {
    check_k(k)?;
    let (mut all, mut isolated) = (0, 0);
    for_each_empty(pts, r, k, g, |face| {
        all += 1;
        if face.iter().all(|&v| g.degree(v as usize) == k - 1) {
            isolated += 1;
        }
    })?;
    Ok((all, isolated))
}
