//! Canonical labelling of small graphs (up to 11 vertices).
//!
//! Vertices are first split by iterated colour refinement (degree, then
//! neighbour colour multisets), which is isomorphism invariant. The
//! canonical labelling is the refinement-respecting permutation with the
//! largest adjacency code, found by branch and bound over positions.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::Graph;
use crate::error::{Error, Result};

/// Largest vertex count [`CanonicalGraph`] handles.
pub const MAX_CANONICAL_VERTICES: usize = 11;

/// Adjacency of a small graph: bit `j` of `adj[i]` is the edge `{i, j}`.
pub type SmallAdjacency = [u16; MAX_CANONICAL_VERTICES];

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Isomorphism class representative of a small graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalGraph {
    vertex_count: usize,
    code: u64,
}

impl fmt::Debug for CanonicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalGraph({}, {:?})", self.vertex_count, self.edges())
    }
}

impl Serialize for CanonicalGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            vertices: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr {
            vertices: self.vertex_count,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl CanonicalGraph {
    pub fn from_adjacency(n: usize, adj: &SmallAdjacency) -> Result<Self> {
        if n > MAX_CANONICAL_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "canonical form supports at most {MAX_CANONICAL_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Self {
            vertex_count: n,
            code: canonical_code(n, adj),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_CANONICAL_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "canonical form supports at most {MAX_CANONICAL_VERTICES} vertices, got {n}"
            )));
        }
        let mut adj = [0u16; MAX_CANONICAL_VERTICES];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidParameter(format!("bad edge ({u}, {v})")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Self::from_adjacency(n, &adj)
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        Self::from_edges(g.vertex_count(), &g.edges().collect::<Vec<_>>())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Bit string of the canonical adjacency matrix, pairs ordered
    /// `(0,1), (0,2), (1,2), (0,3), ...` from the most significant bit.
    pub fn code(&self) -> u64 {
        self.code
    }

    fn pair_count(&self) -> usize {
        self.vertex_count * self.vertex_count.saturating_sub(1) / 2
    }

    /// Canonical edge list, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let total = self.pair_count();
        let mut out = Vec::new();
        for i in 0..self.vertex_count {
            for j in i + 1..self.vertex_count {
                if self.code >> (total - 1 - pair_index(i, j)) & 1 == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.code.count_ones() as usize
    }

    pub fn adjacency(&self) -> SmallAdjacency {
        let mut adj = [0u16; MAX_CANONICAL_VERTICES];
        for (u, v) in self.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.vertex_count, self.edges()).expect("canonical edges are valid")
    }

    pub fn degree_sequence(&self) -> Vec<u32> {
        degree_sequence(self.vertex_count, &self.adjacency())
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.vertex_count, &self.adjacency())
    }

    /// Number of automorphisms.
    pub fn automorphism_count(&self) -> u64 {
        let adj = self.adjacency();
        count_spanning_embeddings(self.vertex_count, &adj, &adj)
    }
}

pub(crate) fn degree_sequence(n: usize, adj: &SmallAdjacency) -> Vec<u32> {
    let mut d: Vec<u32> = adj[..n].iter().map(|a| a.count_ones()).collect();
    d.sort_unstable();
    d
}

pub(crate) fn is_connected(n: usize, adj: &SmallAdjacency) -> bool {
    if n == 0 {
        return true;
    }
    let all: u16 = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    let mut seen = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == all
}

/// Colour classes after refinement, listed in canonical colour order.
fn refined_cells(n: usize, adj: &SmallAdjacency) -> Vec<Vec<usize>> {
    let mut colour: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    let mut distinct = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        colour = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("signature present"))
            .collect();
        if sorted.len() == distinct {
            break;
        }
        distinct = sorted.len();
    }
    let mut cells = vec![Vec::new(); distinct];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

struct Search<'a> {
    n: usize,
    adj: &'a SmallAdjacency,
    total: usize,
    slot_cell: Vec<usize>,
    cells: Vec<Vec<usize>>,
    label: Vec<usize>,
    used: u16,
    best: Option<u64>,
}

impl Search<'_> {
    fn prefix_mask(&self, filled: usize) -> u64 {
        let bits = filled * filled.saturating_sub(1) / 2;
        if bits == 0 {
            0
        } else {
            let m = if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
            m << (self.total - bits)
        }
    }

    fn run(&mut self, pos: usize, code: u64, tied: bool) {
        if pos == self.n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let cell = self.slot_cell[pos];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = code;
            for (i, &u) in self.label.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    next |= 1u64 << (self.total - 1 - pair_index(i, pos));
                }
            }
            let mut still_tied = tied;
            if tied {
                if let Some(best) = self.best {
                    let mask = self.prefix_mask(pos + 1);
                    match (next & mask).cmp(&(best & mask)) {
                        std::cmp::Ordering::Less => continue,
                        std::cmp::Ordering::Greater => still_tied = false,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            self.used |= 1 << v;
            self.label.push(v);
            self.run(pos + 1, next, still_tied);
            self.label.pop();
            self.used &= !(1 << v);
        }
    }
}

fn canonical_code(n: usize, adj: &SmallAdjacency) -> u64 {
    if n < 2 {
        return 0;
    }
    let cells = refined_cells(n, adj);
    let slot_cell = cells
        .iter()
        .enumerate()
        .flat_map(|(c, members)| std::iter::repeat_n(c, members.len()))
        .collect();
    let mut search = Search {
        n,
        adj,
        total: n * (n - 1) / 2,
        slot_cell,
        cells,
        label: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0, true);
    search.best.expect("at least one labelling")
}

/// Bijections `f` from pattern vertices to host vertices (both on `n`
/// vertices) that map every pattern edge to a host edge.
pub(crate) fn count_spanning_embeddings(n: usize, pattern: &SmallAdjacency, host: &SmallAdjacency) -> u64 {
    // place pattern vertices in BFS order so adjacency constraints bite early
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u16;
    for start in 0..n {
        if placed >> start & 1 == 1 {
            continue;
        }
        placed |= 1 << start;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in 0..n {
                if pattern[v] >> u & 1 == 1 && placed >> u & 1 == 0 {
                    placed |= 1 << u;
                    order.push(u);
                }
            }
        }
    }
    fn go(depth: usize, order: &[usize], pattern: &SmallAdjacency, host: &SmallAdjacency, map: &mut [usize], used: u16, n: usize) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let need = pattern[v].count_ones();
        let mut total = 0;
        for h in 0..n {
            if used >> h & 1 == 1 || host[h].count_ones() < need {
                continue;
            }
            let ok = order[..depth]
                .iter()
                .all(|&u| pattern[v] >> u & 1 == 0 || host[h] >> map[u] & 1 == 1);
            if ok {
                map[v] = h;
                total += go(depth + 1, order, pattern, host, map, used | 1 << h, n);
            }
        }
        total
    }
    let mut map = vec![usize::MAX; n];
    go(0, &order, pattern, host, &mut map, 0, n)
}
