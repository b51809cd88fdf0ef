//! Betti numbers by boundary-matrix rank over a prime field, and the Euler
//! characteristic.

pub mod field;

use serde::{Deserialize, Serialize};

use crate::complex::{components, SimplicialComplex};
use crate::error::{Error, Result};

pub use field::SparseColumn;

/// Default field characteristic, a prime just below `2^31`.
pub const DEFAULT_PRIME: u64 = 2_147_483_629;
/// Second prime used for the torsion cross-check.
pub const SECOND_PRIME: u64 = 2_147_483_587;

/// Simplicial boundary `∂_k` from `k`-chains to `(k-1)`-chains over `GF(q)`.
///
/// Column `j` is the boundary of the `j`-th `k`-face; omitting the vertex at
/// position `i` contributes sign `(-1)^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub rows: usize,
    pub q: u64,
    pub columns: Vec<SparseColumn>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r as usize == row)
            .map_or(0, |&(_, v)| v)
    }

    pub fn rank(&self) -> usize {
        field::rank(self.rows, &self.columns, self.q)
    }

    /// `self · rhs` as dense rows.
    pub fn compose(&self, rhs: &BoundaryMatrix) -> Vec<Vec<u64>> {
        assert_eq!(self.cols(), rhs.rows);
        let q = self.q;
        let mut out = vec![vec![0u64; rhs.cols()]; self.rows];
        for (j, col) in rhs.columns.iter().enumerate() {
            for &(mid, b) in col {
                for &(r, a) in &self.columns[mid as usize] {
                    let cell = &mut out[r as usize][j];
                    *cell = (*cell + a * b) % q;
                }
            }
        }
        out
    }
}

fn check_prime(q: u64) -> Result<()> {
    if (2..(1 << 32)).contains(&q) && field::is_prime(q) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{q} is not a prime below 2^32")))
    }
}

pub fn boundary_matrix(c: &SimplicialComplex, k: usize, q: u64) -> Result<BoundaryMatrix> {
    if k == 0 || k > c.max_dim() {
        return Err(Error::DegreeOutOfRange {
            degree: k,
            max_dim: c.max_dim(),
        });
    }
    check_prime(q)?;
    let lower = c.faces(k - 1);
    let mut sub = Vec::with_capacity(k);
    let columns = c
        .faces(k)
        .iter()
        .map(|face| {
            let mut col: SparseColumn = (0..face.len())
                .map(|skip| {
                    sub.clear();
                    sub.extend(face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
                    let row = lower.position(&sub).expect("complex is downward closed");
                    let val = if skip % 2 == 0 { 1 } else { q - 1 };
                    (row as u32, val)
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect();
    Ok(BoundaryMatrix {
        degree: k,
        rows: lower.len(),
        q,
        columns,
    })
}

/// Betti numbers `β_0..=β_up_to` over `GF(q)` with the boundary ranks used.
/// `ranks[k]` is the rank of `∂_k`; `ranks[0]` is 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub q: u64,
    pub betti: Vec<u64>,
    pub ranks: Vec<u64>,
}

impl BettiVector {
    pub fn get(&self, k: usize) -> u64 {
        self.betti[k]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("betti vector serializes")
    }
}

/// Betti numbers up to degree `up_to`.
///
/// `β_k` needs faces of dimension `k + 1`, so `up_to` must be below
/// `max_dim` unless the complex is full (nothing exists above `max_dim`).
pub fn betti_numbers(c: &SimplicialComplex, up_to: usize, q: u64) -> Result<BettiVector> {
    check_prime(q)?;
    let allowed = if c.is_full() {
        c.max_dim()
    } else {
        c.max_dim().saturating_sub(1)
    };
    if up_to > allowed || (!c.is_full() && c.max_dim() == 0) {
        return Err(Error::InsufficientDimension {
            degree: up_to,
            needed: up_to + 1,
            max_dim: c.max_dim(),
        });
    }
    let top = (up_to + 1).min(c.max_dim());
    let mut ranks = vec![0u64; up_to + 2];
    for (k, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *rank = boundary_matrix(c, k, q)?.rank() as u64;
    }
    let betti: Vec<u64> = (0..=up_to)
        .map(|k| c.face_count(k) as u64 - ranks[k] - ranks[k + 1])
        .collect();
    let n_components = components(&c.one_skeleton()).count() as u64;
    assert_eq!(
        betti[0], n_components,
        "β_0 from ranks disagrees with the component count"
    );
    Ok(BettiVector { q, betti, ranks })
}

/// Betti numbers computed over two primes; disagreement flags torsion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPrimeBetti {
    pub primary: BettiVector,
    pub secondary: BettiVector,
}

impl TwoPrimeBetti {
    pub fn agree(&self) -> bool {
        self.primary.betti == self.secondary.betti
    }
}

pub fn betti_two_primes(c: &SimplicialComplex, up_to: usize) -> Result<TwoPrimeBetti> {
    Ok(TwoPrimeBetti {
        primary: betti_numbers(c, up_to, DEFAULT_PRIME)?,
        secondary: betti_numbers(c, up_to, SECOND_PRIME)?,
    })
}

/// `Σ (-1)^i f_i` over the stored dimensions.
pub fn euler_characteristic(c: &SimplicialComplex) -> i64 {
    (0..=c.max_dim())
        .map(|i| {
            let f = c.face_count(i) as i64;
            if i % 2 == 0 {
                f
            } else {
                -f
            }
        })
        .sum()
}
