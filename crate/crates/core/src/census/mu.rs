//! Monte Carlo estimate of the empty-simplex constant
//! `μ = ∫ h(0, y_2, ..., y_k) dy`, where `h` is the indicator that the unit
//! balls about `0, y_2, ..., y_k` form an empty `(k-1)`-simplex.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};
use crate::generators::miniball::{balls_intersect, min_enclosing_radius};
use crate::generators::RngStream;

const BLOCK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MuEstimate {
    pub k: usize,
    pub d: usize,
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub accepted: u64,
}

/// Volume of the radius-`radius` ball in `R^d`.
pub fn ball_volume(d: usize, radius: f64) -> f64 {
    let half = d as f64 / 2.0;
    (half * std::f64::consts::PI.ln() - ln_gamma(half + 1.0) + d as f64 * radius.ln()).exp()
}

fn sample_ball<R: Rng>(rng: &mut R, d: usize, radius: f64, out: &mut [f64]) {
    let mut norm2 = 0.0;
    for x in out.iter_mut() {
        *x = rng.sample(StandardNormal);
        norm2 += *x * *x;
    }
    let u: f64 = rng.random();
    let scale = radius * u.powf(1.0 / d as f64) / norm2.sqrt();
    out.iter_mut().for_each(|x| *x *= scale);
}

/// `h` at the points `pts`: every subset missing one point has balls meeting
/// at unit radius, while the whole set needs radius above `threshold`.
fn indicator(pts: &[Vec<f64>], threshold: f64) -> bool {
    let k = pts.len();
    let mut sub: Vec<&[f64]> = Vec::with_capacity(k - 1);
    for skip in 0..k {
        sub.clear();
        sub.extend(pts.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, p)| p.as_slice()));
        if !balls_intersect(&sub, 1.0) {
            return false;
        }
    }
    let all: Vec<&[f64]> = pts.iter().map(Vec::as_slice).collect();
    min_enclosing_radius(&all) > threshold
}

fn block_hits(k: usize, d: usize, count: u64, stream: RngStream, threshold: f64) -> u64 {
    let mut rng = stream.rng();
    let mut pts = vec![vec![0.0; d]; k];
    let mut hits = 0;
    for _ in 0..count {
        for y in pts.iter_mut().skip(1) {
            sample_ball(&mut rng, d, 2.0, y);
        }
        if indicator(&pts, threshold) {
            hits += 1;
        }
    }
    hits
}

/// Estimates `μ` for `k` points in `R^d` from `samples` draws. Block `b`
/// draws from `RngStream(seed, b)`, so the result does not depend on the
/// thread count.
pub fn estimate_mu(k: usize, d: usize, samples: u64, seed: u64) -> Result<MuEstimate> {
    estimate_mu_with_threshold(k, d, samples, seed, 1.0)
}

/// As [`estimate_mu`] with the full-set radius test at `threshold` instead of 1.
pub fn estimate_mu_with_threshold(k: usize, d: usize, samples: u64, seed: u64, threshold: f64) -> Result<MuEstimate> {
    if k < 3 {
        return Err(Error::MuUnavailable(k));
    }
    if d == 0 || samples == 0 {
        return Err(Error::InvalidParameter("estimate_mu needs d >= 1 and samples >= 1".into()));
    }
    let blocks = samples.div_ceil(BLOCK);
    let accepted: u64 = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let count = BLOCK.min(samples - b * BLOCK);
            block_hits(k, d, count, RngStream::new(seed, b), threshold)
        })
        .sum();
    let volume = ball_volume(d, 2.0).powi(k as i32 - 1);
    let frac = accepted as f64 / samples as f64;
    Ok(MuEstimate {
        k,
        d,
        value: volume * frac,
        std_error: volume * (frac * (1.0 - frac) / samples as f64).sqrt(),
        samples,
        accepted,
    })
}
