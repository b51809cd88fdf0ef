//! Exact face-count moments of the Erdős–Rényi clique complex.
//!
//! Pairs of cliques sharing fewer than two vertices are independent, so the
//! variance and covariance sums start at an overlap of two vertices. This
//! avoids subtracting two nearly equal large numbers.

use statrs::function::factorial::ln_binomial;

use crate::error::{Error, Result};

fn check(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

fn choose2(m: usize) -> u64 {
    (m * m.saturating_sub(1) / 2) as u64
}

fn ln_choose(n: usize, k: usize) -> Option<f64> {
    (k <= n).then(|| ln_binomial(n as u64, k as u64))
}

/// `E[f_k] = C(n, k+1) p^{C(k+1, 2)}`.
pub fn er_expected_faces(n: usize, k: usize, p: f64) -> Result<f64> {
    check(p)?;
    let Some(lc) = ln_choose(n, k + 1) else {
        return Ok(0.0);
    };
    let m = choose2(k + 1);
    if m == 0 {
        return Ok(lc.exp().round());
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    Ok((lc + m as f64 * p.ln()).exp())
}

/// `Σ_{r>=2} C(a, r) C(n - a, b - r) (p^{e - C(r,2)} - p^e)`, scaled by `C(n, a)`,
/// for cliques on `a` and `b` vertices with `e` total edge slots.
fn overlap_sum(n: usize, a: usize, b: usize, p: f64) -> f64 {
    if p == 0.0 || p == 1.0 {
        return 0.0;
    }
    let Some(lead) = ln_choose(n, a) else {
        return 0.0;
    };
    let e = (choose2(a) + choose2(b)) as f64;
    let lp = p.ln();
    let mut total = 0.0;
    for r in 2..=a.min(b) {
        let (Some(x), Some(y)) = (ln_choose(a, r), ln_choose(n - a, b - r)) else {
            continue;
        };
        let shared = choose2(r) as f64;
        // p^{e-s} - p^e = p^{e-s} (1 - p^s)
        let ln_term = lead + x + y + (e - shared) * lp + (-(shared * lp).exp_m1()).ln();
        total += ln_term.exp();
    }
    total
}

/// `Var(f_k)`.
pub fn er_variance_faces(n: usize, k: usize, p: f64) -> Result<f64> {
    check(p)?;
    Ok(overlap_sum(n, k + 1, k + 1, p))
}

/// `Cov(f_k, f_{k+1})`.
pub fn er_covariance_faces(n: usize, k: usize, p: f64) -> Result<f64> {
    check(p)?;
    Ok(overlap_sum(n, k + 1, k + 2, p))
}

/// `[E[f_k - f_{k-1} - f_{k+1}], E[f_k]]`, the expected Morse bounds on `β_k`.
pub fn er_betti_bounds(n: usize, k: usize, p: f64) -> Result<(f64, f64)> {
    let fk = er_expected_faces(n, k, p)?;
    let below = if k == 0 { 0.0 } else { er_expected_faces(n, k - 1, p)? };
    let above = er_expected_faces(n, k + 1, p)?;
    Ok((fk - below - above, fk))
}
