//! Random simplicial complexes: the Erdős–Rényi clique complex, the random
//! Čech complex and the random Vietoris–Rips complex, their Betti numbers,
//! the counting statistics that bracket those Betti numbers, and a seeded
//! Monte Carlo harness for checking expectation, Poisson and normal limits.

pub mod census;
pub mod complex;
pub mod error;
pub mod generators;
pub mod homology;
pub mod io;
pub mod lab;

pub use complex::{components, f_vector, ComponentDecomposition, DensityKind, Graph, PointCloud, SimplicialComplex};
pub use error::{Error, Result};
pub use generators::{DensitySpec, RngStream};
pub use homology::{betti_numbers, euler_characteristic, BettiVector, DEFAULT_PRIME, SECOND_PRIME};

/// Version string echoed into every output file.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
