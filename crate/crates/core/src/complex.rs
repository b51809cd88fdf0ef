//! Graphs, point clouds and simplicial complexes.
//!
//! Vertices are 0-based everywhere. Faces are strictly increasing vertex
//! tuples, stored flat per dimension in lexicographic order so that face
//! lookup is a binary search and every count is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(vertex_count: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let adjacency = (0..vertex_count)
            .map(|v| {
                (0..vertex_count as u32)
                    .filter(|&u| u as usize != v)
                    .collect()
            })
            .collect();
        Self { adjacency }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adjacency })
    }

    /// Builds a graph from adjacency lists that are already symmetric,
    /// sorted and loop-free.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<u32>>) -> Self {
        debug_assert!(adjacency.iter().enumerate().all(|(v, ns)| {
            ns.windows(2).all(|w| w[0] < w[1]) && ns.iter().all(|&u| u as usize != v)
        }));
        Self { adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .filter(move |&&v| (v as usize) > u)
                .map(move |&v| (u, v as usize))
        })
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced edges are valid")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count());
        Graph::from_edges(
            self.vertex_count(),
            self.edges().map(|(u, v)| (perm[u], perm[v])),
        )
        .expect("permutation preserves validity")
    }

    pub fn is_valid(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().enumerate().all(|(v, ns)| {
            ns.windows(2).all(|w| w[0] < w[1])
                && ns.iter().all(|&u| {
                    (u as usize) < n && u as usize != v && self.has_edge(u as usize, v)
                })
        })
    }
}

/// Tag naming the density a point cloud was drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityKind {
    /// Uniform on the unit cube `[0, 1]^d`.
    UniformCube,
    /// Standard normal in each coordinate.
    Gaussian,
    /// Points supplied from outside the library.
    External,
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DensityKind::UniformCube => "uniform_cube",
            DensityKind::Gaussian => "gaussian",
            DensityKind::External => "external",
        })
    }
}

/// `n` points in `R^d`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dimension: usize,
    coords: Vec<f64>,
    density: DensityKind,
}

impl PointCloud {
    pub fn new(dimension: usize, coords: Vec<f64>, density: DensityKind) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidParameter("point dimension must be >= 1".into()));
        }
        if !coords.len().is_multiple_of(dimension) {
            return Err(Error::InvalidParameter(format!(
                "{} coordinates do not split into points of dimension {dimension}",
                coords.len()
            )));
        }
        if let Some(bad) = coords.iter().find(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite coordinate {bad}")));
        }
        Ok(Self {
            dimension,
            coords,
            density,
        })
    }

    pub fn from_points(points: &[Vec<f64>], density: DensityKind) -> Result<Self> {
        let dimension = points.first().map_or(1, Vec::len);
        if points.iter().any(|p| p.len() != dimension) {
            return Err(Error::InvalidParameter("points have mixed dimensions".into()));
        }
        Self::new(dimension, points.concat(), density)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dimension
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn density(&self) -> DensityKind {
        self.density
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dimension..(i + 1) * self.dimension]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dimension)
    }

    /// Reorders points so that point `i` becomes point `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> PointCloud {
        let mut coords = vec![0.0; self.coords.len()];
        for (i, &j) in perm.iter().enumerate() {
            coords[j * self.dimension..(j + 1) * self.dimension].copy_from_slice(self.point(i));
        }
        PointCloud {
            dimension: self.dimension,
            coords,
            density: self.density,
        }
    }
}

/// Faces of one dimension: flat vertex storage with a fixed width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceList {
    width: usize,
    data: Vec<u32>,
}

impl FaceList {
    pub(crate) fn new(width: usize) -> Self {
        Self {
            width,
            data: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, face: &[u32]) {
        debug_assert_eq!(face.len(), self.width);
        self.data.extend_from_slice(face);
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.width
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> std::slice::ChunksExact<'_, u32> {
        self.data.chunks_exact(self.width)
    }

    /// Index of `face` in the sorted list.
    pub fn position(&self, face: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    fn is_sorted_unique(&self) -> bool {
        let mut prev: Option<&[u32]> = None;
        for f in self.iter() {
            if !f.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
            if prev.is_some_and(|p| p >= f) {
                return false;
            }
            prev = Some(f);
        }
        true
    }
}

/// Simplicial complex stored by dimension up to a cap.
///
/// `truncated` records whether faces above `max_dim` exist in the full
/// complex; when it is false the complex is complete and its top Betti
/// number can be computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    max_dim: usize,
    faces: Vec<FaceList>,
    truncated: bool,
}

impl SimplicialComplex {
    pub(crate) fn from_parts(
        vertex_count: usize,
        max_dim: usize,
        mut faces: Vec<FaceList>,
        truncated: bool,
    ) -> Self {
        faces.truncate(max_dim + 1);
        while faces.len() < max_dim + 1 {
            faces.push(FaceList::new(faces.len() + 1));
        }
        let c = Self {
            vertex_count,
            max_dim,
            faces,
            truncated,
        };
        debug_assert!(c.is_valid());
        c
    }

    /// Downward closure of `simplices`, keeping dimensions `0..=max_dim`.
    /// Every vertex `0..vertex_count` is a 0-face.
    pub fn from_simplices(
        vertex_count: usize,
        simplices: &[Vec<usize>],
        max_dim: usize,
    ) -> Result<Self> {
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<u32>>> =
            vec![Default::default(); max_dim + 1];
        let mut truncated = false;
        for s in simplices {
            let mut s: Vec<u32> = s.iter().map(|&v| v as u32).collect();
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                continue;
            }
            if let Some(&v) = s.iter().find(|&&v| v as usize >= vertex_count) {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} out of range for {vertex_count} vertices"
                )));
            }
            if s.len() > max_dim + 1 {
                truncated = true;
            }
            let m = s.len();
            for mask in 1u64..(1u64 << m) {
                let size = mask.count_ones() as usize;
                if size > max_dim + 1 {
                    continue;
                }
                let sub: Vec<u32> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                by_dim[size - 1].insert(sub);
            }
        }
        for v in 0..vertex_count as u32 {
            by_dim[0].insert(vec![v]);
        }
        let faces = by_dim
            .into_iter()
            .enumerate()
            .map(|(d, set)| {
                let mut list = FaceList::new(d + 1);
                for f in set {
                    list.push(&f);
                }
                list
            })
            .collect();
        Ok(Self::from_parts(vertex_count, max_dim, faces, truncated))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// True when no face of dimension above `max_dim` exists in the full complex.
    pub fn is_full(&self) -> bool {
        !self.truncated
    }

    /// Faces of dimension `dim`; empty for `dim > max_dim`.
    pub fn faces(&self, dim: usize) -> &FaceList {
        static EMPTY: FaceList = FaceList {
            width: 0,
            data: Vec::new(),
        };
        self.faces.get(dim).unwrap_or(&EMPTY)
    }

    pub fn face_count(&self, dim: usize) -> usize {
        self.faces.get(dim).map_or(0, FaceList::len)
    }

    /// Highest dimension with at least one face.
    pub fn dimension(&self) -> usize {
        (0..=self.max_dim)
            .rev()
            .find(|&d| self.face_count(d) > 0)
            .unwrap_or(0)
    }

    pub fn contains(&self, face: &[u32]) -> bool {
        !face.is_empty()
            && face.len() <= self.max_dim + 1
            && self.faces[face.len() - 1].position(face).is_some()
    }

    pub fn one_skeleton(&self) -> Graph {
        let edges = if self.max_dim >= 1 {
            self.faces(1)
                .iter()
                .map(|e| (e[0] as usize, e[1] as usize))
                .collect::<Vec<_>>()
        } else {
            Vec::new()
        };
        Graph::from_edges(self.vertex_count, edges).expect("complex edges are valid")
    }

    /// Checks sortedness, uniqueness, the vertex set and downward closure.
    pub fn is_valid(&self) -> bool {
        if self.faces.len() != self.max_dim + 1 {
            return false;
        }
        let verts = &self.faces[0];
        if verts.len() != self.vertex_count
            || verts.iter().enumerate().any(|(i, f)| f[0] as usize != i)
        {
            return false;
        }
        if !self.faces.iter().all(FaceList::is_sorted_unique) {
            return false;
        }
        let mut sub = Vec::new();
        for d in 1..=self.max_dim {
            for f in self.faces[d].iter() {
                for skip in 0..f.len() {
                    sub.clear();
                    sub.extend(f.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                    if self.faces[d - 1].position(&sub).is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Number of faces in each dimension `0..=max_dim`.
pub fn f_vector(c: &SimplicialComplex) -> Vec<u64> {
    (0..=c.max_dim()).map(|d| c.face_count(d) as u64).collect()
}

/// Connected components, labelled by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    component_id: Vec<usize>,
    component_sizes: BTreeMap<usize, usize>,
}

impl ComponentDecomposition {
    pub fn label(&self, v: usize) -> usize {
        self.component_id[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.component_id
    }

    pub fn sizes(&self) -> &BTreeMap<usize, usize> {
        &self.component_sizes
    }

    pub fn count(&self) -> usize {
        self.component_sizes.len()
    }

    /// Size of the component containing `v`.
    pub fn size_of(&self, v: usize) -> usize {
        self.component_sizes[&self.component_id[v]]
    }

    /// Vertices grouped by component, in label order.
    pub fn members(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &l) in self.component_id.iter().enumerate() {
            out.entry(l).or_default().push(v);
        }
        out
    }
}

pub fn components(g: &Graph) -> ComponentDecomposition {
    let n = g.vertex_count();
    let mut component_id = vec![usize::MAX; n];
    let mut component_sizes = BTreeMap::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if component_id[root] != usize::MAX {
            continue;
        }
        component_id[root] = root;
        stack.push(root);
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &u in g.neighbors(v) {
                let u = u as usize;
                if component_id[u] == usize::MAX {
                    component_id[u] = root;
                    stack.push(u);
                }
            }
        }
        component_sizes.insert(root, size);
    }
    ComponentDecomposition {
        component_id,
        component_sizes,
    }
}
