use crate::complex::{FaceList, Graph, PointCloud, SimplicialComplex};
use crate::error::Result;

use super::{geometric_graph, miniball::balls_intersect};

/// Ordered clique expansion: each face grows only by vertices larger than
/// its last vertex that are adjacent to all of its vertices. `accept` filters
/// candidate faces with three or more vertices; a rejected face prunes its
/// whole subtree, so `accept` must be monotone under taking subsets.
struct Expansion<'a, F> {
    graph: &'a Graph,
    cap: usize,
    accept: F,
    faces: Vec<FaceList>,
    truncated: bool,
}

impl<F: FnMut(&[u32]) -> bool> Expansion<'_, F> {
    fn record(&mut self, face: &[u32]) {
        let dim = face.len() - 1;
        while self.faces.len() <= dim {
            let width = self.faces.len() + 1;
            self.faces.push(FaceList::new(width));
        }
        self.faces[dim].push(face);
    }

    fn grow(&mut self, face: &mut Vec<u32>, candidates: &[u32]) {
        for (i, &v) in candidates.iter().enumerate() {
            face.push(v);
            if face.len() >= 3 && !(self.accept)(face) {
                face.pop();
                continue;
            }
            if face.len() - 1 > self.cap {
                // one face above the cap is enough to know the complex is cut
                self.truncated = true;
                face.pop();
                return;
            }
            self.record(face);
            let next: Vec<u32> = intersect_sorted(&candidates[i + 1..], self.graph.neighbors(v as usize));
            if !next.is_empty() && (face.len() <= self.cap || !self.truncated) {
                self.grow(face, &next);
            }
            face.pop();
        }
    }

    fn run(mut self) -> (Vec<FaceList>, bool) {
        self.faces.push(FaceList::new(1));
        let mut face = Vec::with_capacity(8);
        for v in 0..self.graph.vertex_count() {
            face.push(v as u32);
            self.record(&face);
            if self.cap == 0 {
                if !self.truncated && self.graph.degree(v) > 0 {
                    self.truncated = true;
                }
            } else {
                let forward: Vec<u32> = self
                    .graph
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| u as usize > v)
                    .collect();
                self.grow(&mut face, &forward);
            }
            face.pop();
        }
        (self.faces, self.truncated)
    }
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn expand<F: FnMut(&[u32]) -> bool>(g: &Graph, cap: usize, accept: F) -> (Vec<FaceList>, bool) {
    Expansion {
        graph: g,
        cap,
        accept,
        faces: Vec::new(),
        truncated: false,
    }
    .run()
}

/// Clique complex of `g` with faces up to dimension `max_dim`: the `i`-faces
/// are exactly the `(i + 1)`-cliques.
pub fn clique_complex(g: &Graph, max_dim: usize) -> SimplicialComplex {
    let (faces, truncated) = expand(g, max_dim, |_| true);
    SimplicialComplex::from_parts(g.vertex_count(), max_dim, faces, truncated)
}

/// Clique complex with every clique of `g`; `max_dim` is the clique number minus one.
pub fn clique_complex_full(g: &Graph) -> SimplicialComplex {
    let (faces, _) = expand(g, usize::MAX - 1, |_| true);
    let top = faces.len() - 1;
    SimplicialComplex::from_parts(g.vertex_count(), top, faces, false)
}

/// Vietoris–Rips complex: the clique complex of the `2r` geometric graph.
pub fn rips_complex(pts: &PointCloud, r: f64, max_dim: usize) -> Result<SimplicialComplex> {
    Ok(clique_complex(&geometric_graph(pts, r)?, max_dim))
}

fn cech_filter<'a>(pts: &'a PointCloud, r: f64) -> impl FnMut(&[u32]) -> bool + 'a {
    let mut centers: Vec<&[f64]> = Vec::new();
    move |face: &[u32]| {
        centers.clear();
        centers.extend(face.iter().map(|&v| pts.point(v as usize)));
        balls_intersect(&centers, r)
    }
}

/// Čech complex of radius-`r` balls: a face is present iff the balls about its
/// vertices share a point. Candidates are cliques of the geometric graph,
/// which already encodes every pairwise test.
pub fn cech_complex(pts: &PointCloud, r: f64, max_dim: usize) -> Result<SimplicialComplex> {
    let g = geometric_graph(pts, r)?;
    let (faces, truncated) = expand(&g, max_dim, cech_filter(pts, r));
    Ok(SimplicialComplex::from_parts(pts.len(), max_dim, faces, truncated))
}

/// Čech complex with no dimension cap.
pub fn cech_complex_full(pts: &PointCloud, r: f64) -> Result<SimplicialComplex> {
    let g = geometric_graph(pts, r)?;
    let (faces, _) = expand(&g, usize::MAX - 1, cech_filter(pts, r));
    let top = faces.len() - 1;
    Ok(SimplicialComplex::from_parts(pts.len(), top, faces, false))
}
