//! Seeded construction of the three random models: Erdős–Rényi clique
//! complexes, Vietoris–Rips complexes and Čech complexes.
//!
//! Every generator is a pure function of its parameters and an
//! [`RngStream`], so trials can run in any order or in parallel.

mod clique;
pub mod miniball;

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::complex::{DensityKind, Graph, PointCloud};
use crate::error::{Error, Result};

pub use clique::{cech_complex, cech_complex_full, clique_complex, clique_complex_full, rips_complex};
pub use miniball::{balls_intersect, min_enclosing_radius};

/// Random stream keyed by `(master_seed, stream_index)`.
///
/// The stream index selects an independent ChaCha stream, so the bytes a
/// trial sees depend only on this pair and never on scheduling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngStream {
    pub master_seed: u64,
    pub stream_index: u64,
}

impl RngStream {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        Self {
            master_seed,
            stream_index,
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master_seed);
        rng.set_stream(self.stream_index);
        rng
    }
}

/// Sampling density for point clouds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensitySpec {
    pub kind: DensityKind,
    pub dimension: usize,
}

impl DensitySpec {
    pub fn uniform_cube(dimension: usize) -> Self {
        Self {
            kind: DensityKind::UniformCube,
            dimension,
        }
    }

    pub fn gaussian(dimension: usize) -> Self {
        Self {
            kind: DensityKind::Gaussian,
            dimension,
        }
    }

    /// `∫ f(x)^k dx` over `R^d`.
    pub fn power_integral(&self, k: usize) -> f64 {
        match self.kind {
            DensityKind::UniformCube => 1.0,
            DensityKind::Gaussian => {
                let d = self.dimension as f64;
                let k = k as f64;
                (2.0 * std::f64::consts::PI).powf(-d * (k - 1.0) / 2.0) * k.powf(-d / 2.0)
            }
            DensityKind::External => f64::NAN,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dimension == 0 {
            return Err(Error::InvalidParameter("density dimension must be >= 1".into()));
        }
        if self.kind == DensityKind::External {
            return Err(Error::InvalidParameter("cannot sample from an external density".into()));
        }
        Ok(())
    }
}

/// `G(n, p)`: each of the `C(n, 2)` edges independently with probability `p`.
pub fn gen_er_graph(n: usize, p: f64, stream: RngStream) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = stream.rng();
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                adjacency[u].push(v as u32);
                adjacency[v].push(u as u32);
            }
        }
    }
    // pushes happen in increasing order for both endpoints
    Ok(Graph::from_sorted_adjacency(adjacency))
}

/// `n` i.i.d. points from `density`.
pub fn sample_points(n: usize, density: DensitySpec, stream: RngStream) -> Result<PointCloud> {
    density.validate()?;
    let mut rng = stream.rng();
    let len = n * density.dimension;
    let coords: Vec<f64> = match density.kind {
        DensityKind::UniformCube => (0..len).map(|_| rng.random::<f64>()).collect(),
        DensityKind::Gaussian => (0..len).map(|_| rng.sample(StandardNormal)).collect(),
        DensityKind::External => unreachable!(),
    };
    PointCloud::new(density.dimension, coords, density.kind)
}

pub(crate) fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}

/// Geometric graph with an edge `{i, j}` iff `|x_i - x_j| <= 2r`.
///
/// Points are bucketed on a grid of cell width `2r`; only the `3^d`
/// neighbouring cells are scanned for each point.
pub fn geometric_graph(pts: &PointCloud, r: f64) -> Result<Graph> {
    check_radius(r)?;
    let n = pts.len();
    let dim = pts.dimension();
    let width = 2.0 * r;
    let threshold = width * width;
    let cell_of = |p: &[f64]| -> Vec<i64> { p.iter().map(|x| (x / width).floor() as i64).collect() };

    let mut grid: HashMap<Vec<i64>, Vec<u32>> = HashMap::new();
    for (i, p) in pts.points().enumerate() {
        grid.entry(cell_of(p)).or_default().push(i as u32);
    }

    let offsets: Vec<Vec<i64>> = (0..3usize.pow(dim as u32))
        .map(|mut code| {
            (0..dim)
                .map(|_| {
                    let o = (code % 3) as i64 - 1;
                    code /= 3;
                    o
                })
                .collect()
        })
        .collect();

    let mut adjacency = vec![Vec::new(); n];
    let mut key = vec![0i64; dim];
    for (i, p) in pts.points().enumerate() {
        let home = cell_of(p);
        for off in &offsets {
            for ((k, h), o) in key.iter_mut().zip(&home).zip(off) {
                *k = h + o;
            }
            let Some(bucket) = grid.get(&key) else { continue };
            for &j in bucket {
                if (j as usize) <= i {
                    continue;
                }
                let q = pts.point(j as usize);
                let d2: f64 = p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum();
                if d2 <= threshold {
                    adjacency[i].push(j);
                    adjacency[j as usize].push(i as u32);
                }
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adjacency))
}
