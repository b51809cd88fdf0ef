//! Fixed-seed inputs shared by the benchmarks in `benches/`.

use randtopo_core::generators::{gen_er_graph, geometric_graph, sample_points};
use randtopo_core::{DensitySpec, Graph, PointCloud, RngStream};

pub const SEED: u64 = 0x5eed;

pub fn er_graph(n: usize, p: f64) -> Graph {
    gen_er_graph(n, p, RngStream::new(SEED, 0)).expect("valid p")
}

pub fn square_points(n: usize) -> PointCloud {
    sample_points(n, DensitySpec::uniform_cube(2), RngStream::new(SEED, 1)).expect("valid density")
}

/// Points and radius with mean degree about `degree`.
pub fn sparse_plane(n: usize, degree: f64) -> (PointCloud, f64, Graph) {
    let pts = square_points(n);
    let r = (degree / (n as f64 * std::f64::consts::PI)).sqrt() / 2.0;
    let g = geometric_graph(&pts, r).expect("positive radius");
    (pts, r, g)
}
