//! Count statistics of graphs and complexes.

pub mod attach;
pub mod canonical;
pub mod cross;
pub mod empty;
pub mod extension;
pub mod moments;
pub mod mu;
pub mod subgraph;

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::complex::{components, f_vector, Graph, PointCloud, SimplicialComplex};
use crate::error::Result;
use crate::homology::{betti_numbers, euler_characteristic, BettiVector};

pub use attach::{y_count, z_count};
pub use canonical::CanonicalGraph;
pub use cross::cross_polytope_counts;
pub use empty::{empty_simplex_count, empty_simplex_counts, isolated_empty_simplex_count};
pub use extension::{enumerate_extension_types, five_vertex_trees};
pub use moments::{er_betti_bounds, er_covariance_faces, er_expected_faces, er_variance_faces};
pub use mu::{estimate_mu, estimate_mu_with_threshold, MuEstimate};
pub use subgraph::subgraph_counts;

/// `f_k^{>=i}`: `k`-faces lying in components of the 1-skeleton with at
/// least `i` vertices.
pub fn faces_on_large_components(c: &SimplicialComplex, k: usize, i: usize) -> u64 {
    if k > c.max_dim() {
        return 0;
    }
    let comps = components(&c.one_skeleton());
    c.faces(k).iter().filter(|f| comps.size_of(f[0] as usize) >= i).count() as u64
}

/// Statistics of one instance. Each map is keyed by the `k` it was computed
/// for; `f_ge` by `(k, i)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CensusReport {
    pub f: Vec<u64>,
    pub betti: Option<BettiVector>,
    pub euler: i64,
    pub s_empty: BTreeMap<usize, u64>,
    pub s_isolated: BTreeMap<usize, u64>,
    pub y_count: BTreeMap<usize, u64>,
    pub z_count: BTreeMap<usize, u64>,
    pub o_induced: BTreeMap<usize, u64>,
    pub o_component: BTreeMap<usize, u64>,
    pub f_ge: BTreeMap<(usize, usize), u64>,
}

impl CensusReport {
    pub fn new(c: &SimplicialComplex) -> Self {
        CensusReport {
            f: f_vector(c),
            euler: euler_characteristic(c),
            ..Default::default()
        }
    }

    /// Adds Betti numbers over `GF(q)`.
    pub fn with_betti(mut self, c: &SimplicialComplex, up_to: usize, q: u64) -> Result<Self> {
        self.betti = Some(betti_numbers(c, up_to, q)?);
        Ok(self)
    }

    /// Adds `S_{n,k}` and `S̃_{n,k}`; `g` is the geometric graph of `pts` at `r`.
    pub fn add_empty(&mut self, pts: &PointCloud, r: f64, k: usize, g: &Graph) -> Result<()> {
        let (s, iso) = empty_simplex_counts(pts, r, k, g)?;
        self.s_empty.insert(k, s);
        self.s_isolated.insert(k, iso);
        Ok(())
    }

    pub fn add_attachments(&mut self, g: &Graph, k: usize) -> Result<()> {
        self.y_count.insert(k, y_count(g, k)?);
        self.z_count.insert(k, z_count(g, k)?);
        Ok(())
    }

    pub fn add_cross(&mut self, g: &Graph, k: usize) {
        let (o, oc) = cross_polytope_counts(g, k);
        self.o_induced.insert(k, o);
        self.o_component.insert(k, oc);
    }

    pub fn add_f_ge(&mut self, c: &SimplicialComplex, k: usize, i: usize) {
        self.f_ge.insert((k, i), faces_on_large_components(c, k, i));
    }

    /// Flat key/value form: `f_k`, `S_k`, `S_iso_k`, `Y_k`, `Z_k`, `o_k`,
    /// `o_comp_k`, `f_{k}_ge_{i}`, `betti_k`, `euler`.
    pub fn to_flat(&self) -> Map<String, Value> {
        let mut out = Map::new();
        for (k, v) in self.f.iter().enumerate() {
            out.insert(format!("f_{k}"), Value::from(*v));
        }
        let maps = [
            ("S", &self.s_empty),
            ("S_iso", &self.s_isolated),
            ("Y", &self.y_count),
            ("Z", &self.z_count),
            ("o", &self.o_induced),
            ("o_comp", &self.o_component),
        ];
        for (name, map) in maps {
            for (k, v) in map {
                out.insert(format!("{name}_{k}"), Value::from(*v));
            }
        }
        for ((k, i), v) in &self.f_ge {
            out.insert(format!("f_{k}_ge_{i}"), Value::from(*v));
        }
        if let Some(b) = &self.betti {
            for (k, v) in b.betti.iter().enumerate() {
                out.insert(format!("betti_{k}"), Value::from(*v));
            }
        }
        out.insert("euler".into(), Value::from(self.euler));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_flat()).expect("flat map serializes")
    }
}
