//! Distances from an empirical sample to Poisson and standard normal laws.

use statrs::function::erf::erfc;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// Upper tail mass below which the Poisson pmf is no longer summed.
pub const POISSON_TAIL: f64 = 1e-12;

fn poisson_ln_pmf(j: u64, lambda: f64) -> f64 {
    j as f64 * lambda.ln() - lambda - ln_gamma(j as f64 + 1.0)
}

/// Smallest `J` with `P(Y > J) < 1e-12` for `Y ~ Poisson(λ)`. Tails are
/// summed from the far end, where the pmf is below `1e-40`.
pub fn poisson_cutoff(lambda: f64) -> u64 {
    let mut far = lambda.ceil() as u64 + 1;
    while poisson_ln_pmf(far, lambda) > -92.0 {
        far += 1;
    }
    let mut tail = 0.0;
    let mut j = far;
    while j > 0 {
        // tail = P(Y >= j) = P(Y > j - 1)
        tail += poisson_ln_pmf(j, lambda).exp();
        if tail >= POISSON_TAIL {
            return j;
        }
        j -= 1;
    }
    0
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("poisson rate must be positive, got {lambda}")))
    }
}

/// Total variation distance between an empirical pmf (`pmf[j]` is the mass
/// at `j`) and `Poisson(λ)`, summed up to the tail cutoff or the pmf's length,
/// whichever is larger.
pub fn tv_pmf_to_poisson(pmf: &[f64], lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let cutoff = poisson_cutoff(lambda).max(pmf.len().saturating_sub(1) as u64);
    let total: f64 = (0..=cutoff)
        .map(|j| {
            let emp = pmf.get(j as usize).copied().unwrap_or(0.0);
            (emp - poisson_ln_pmf(j, lambda).exp()).abs()
        })
        .sum();
    Ok(total / 2.0)
}

/// Total variation distance between the empirical law of `samples` and
/// `Poisson(λ)`.
pub fn tv_to_poisson(samples: &[u64], lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let Some(&max) = samples.iter().max() else {
        return Err(Error::InvalidParameter("no samples".into()));
    };
    let mut counts = vec![0u64; max as usize + 1];
    for &s in samples {
        counts[s as usize] += 1;
    }
    let m = samples.len() as f64;
    let pmf: Vec<f64> = counts.iter().map(|&c| c as f64 / m).collect();
    tv_pmf_to_poisson(&pmf, lambda)
}

/// Standard normal CDF.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

/// One-sample Kolmogorov–Smirnov statistic of `(x - center) / scale`
/// against the standard normal.
pub fn ks_to_normal(samples: &[f64], center: f64, scale: f64) -> Result<f64> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::InvalidParameter(format!("scale must be positive, got {scale}")));
    }
    if samples.is_empty() {
        return Err(Error::InvalidParameter("no samples".into()));
    }
    let mut z: Vec<f64> = samples.iter().map(|x| (x - center) / scale).collect();
    z.sort_by(f64::total_cmp);
    let m = z.len() as f64;
    Ok(z.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let phi = normal_cdf(x);
        d.max((i + 1) as f64 / m - phi).max(phi - i as f64 / m)
    }))
}

/// Mean and sample standard deviation (divisor `m - 1`).
pub fn mean_and_sd(samples: &[f64]) -> (f64, f64) {
    let m = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / m;
    if samples.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = samples.iter().map(|x| (x - mean) * (x - mean)).sum();
    (mean, (ss / (m - 1.0)).sqrt())
}

/// KS distance after standardizing by the sample's own mean and standard
/// deviation; `None` when the sample is constant.
pub fn self_standardized_ks(samples: &[f64]) -> Option<f64> {
    let (mean, sd) = mean_and_sd(samples);
    (sd > 0.0).then(|| ks_to_normal(samples, mean, sd).expect("positive scale"))
}
