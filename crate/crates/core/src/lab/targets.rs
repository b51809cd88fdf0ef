//! Leading-order predictions for a regime.

use std::collections::BTreeMap;

use crate::census::{er_betti_bounds, er_expected_faces, MuEstimate};
use crate::error::{Error, Result};
use crate::generators::DensitySpec;

use super::{Model, RegimeSpec};

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Named predictions:
///
/// * ER: `E_f_j` for `j <= k+1` and `E_beta_k_lower` / `E_beta_k_upper`, the
///   expected Morse bounds.
/// * Čech: `scaling = n^k r^{d(k-1)}` and, given a matching `mu`,
///   `E_S_iso_k = scaling · μ · ∫f^k / k!` with its standard error.
/// * Rips: `scaling = n^{2k+2} r^{d(2k+1)}`.
pub fn theorem_targets(spec: &RegimeSpec, mu: Option<&MuEstimate>) -> Result<BTreeMap<String, f64>> {
    let x = spec.validate()?;
    let (n, k, d) = (spec.n as f64, spec.k, spec.d as i32);
    let mut out = BTreeMap::new();
    match spec.model {
        Model::ErClique => {
            for j in 0..=k + 1 {
                out.insert(format!("E_f_{j}"), er_expected_faces(spec.n, j, x)?);
            }
            let (lo, hi) = er_betti_bounds(spec.n, k, x)?;
            out.insert(format!("E_beta_{k}_lower"), lo);
            out.insert(format!("E_beta_{k}_upper"), hi);
        }
        Model::Cech => {
            if k < 3 {
                return Err(Error::MuUnavailable(k));
            }
            let scaling = n.powi(k as i32) * x.powi(d * (k as i32 - 1));
            out.insert("scaling".into(), scaling);
            if let Some(mu) = mu {
                if mu.k != k || mu.d != spec.d {
                    return Err(Error::InvalidParameter(format!(
                        "mu estimated for (k, d) = ({}, {}), regime has ({k}, {d})",
                        mu.k, mu.d
                    )));
                }
                let density = DensitySpec {
                    kind: spec.density,
                    dimension: spec.d,
                };
                let factor = scaling * density.power_integral(k) / factorial(k);
                out.insert(format!("E_S_iso_{k}"), factor * mu.value);
                out.insert(format!("E_S_iso_{k}_se"), factor * mu.std_error);
            }
        }
        Model::Rips => {
            let scaling = n.powi(2 * k as i32 + 2) * x.powi(d * (2 * k as i32 + 1));
            out.insert("scaling".into(), scaling);
        }
    }
    Ok(out)
}
