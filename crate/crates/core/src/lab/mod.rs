//! Seeded Monte Carlo experiments over the three models, with exact
//! aggregation and distances to the Poisson and normal limits.

pub mod distance;
pub mod targets;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{
    cross_polytope_counts, empty_simplex_counts, faces_on_large_components, five_vertex_trees, subgraph_counts,
    y_count, z_count,
};
use crate::complex::{f_vector, DensityKind};
use crate::error::{Error, Result};
use crate::generators::{
    cech_complex, clique_complex, gen_er_graph, geometric_graph, rips_complex, sample_points, DensitySpec, RngStream,
};
use crate::homology::{betti_numbers, DEFAULT_PRIME};

pub use distance::{ks_to_normal, self_standardized_ks, tv_pmf_to_poisson, tv_to_poisson};
pub use targets::theorem_targets;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    ErClique,
    Cech,
    Rips,
}

impl std::str::FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "er" | "er_clique" => Ok(Model::ErClique),
            "cech" => Ok(Model::Cech),
            "rips" | "vr" => Ok(Model::Rips),
            other => Err(Error::InvalidRegime(format!("unknown model {other:?}"))),
        }
    }
}

/// How the edge probability (ER) or radius (geometric models) is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum ParamRule {
    /// `p` or `r` given directly.
    Explicit { value: f64 },
    /// `p = n^{-γ}`.
    ErGamma { gamma: f64 },
    /// Čech: `n^k r^{d(k-1)} = α`; Rips: `n^{2k+2} r^{d(2k+1)} = α`.
    Alpha { alpha: f64 },
}

/// One point in parameter space.
///
/// For Čech, `k` counts simplex vertices: the statistics are the empty
/// `(k-1)`-simplices and `β_{k-2}`. For ER and Rips, `k` is the homology degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeSpec {
    pub model: Model,
    pub k: usize,
    pub d: usize,
    pub n: usize,
    pub density: DensityKind,
    pub rule: ParamRule,
}

impl RegimeSpec {
    pub fn er(n: usize, k: usize, rule: ParamRule) -> Self {
        RegimeSpec {
            model: Model::ErClique,
            k,
            d: 0,
            n,
            density: DensityKind::UniformCube,
            rule,
        }
    }

    pub fn geometric(model: Model, n: usize, k: usize, d: usize, rule: ParamRule) -> Self {
        RegimeSpec {
            model,
            k,
            d,
            n,
            density: DensityKind::UniformCube,
            rule,
        }
    }

    /// The resolved `p` (ER) or `r` (Čech, Rips).
    pub fn parameter(&self) -> Result<f64> {
        let n = self.n as f64;
        let (k, d) = (self.k as f64, self.d as f64);
        let value = match (self.model, self.rule) {
            (_, ParamRule::Explicit { value }) => value,
            (Model::ErClique, ParamRule::ErGamma { gamma }) => n.powf(-gamma),
            (Model::Cech, ParamRule::Alpha { alpha }) => (alpha / n.powf(k)).powf(1.0 / (d * (k - 1.0))),
            (Model::Rips, ParamRule::Alpha { alpha }) => {
                (alpha / n.powf(2.0 * k + 2.0)).powf(1.0 / (d * (2.0 * k + 1.0)))
            }
            (model, rule) => {
                return Err(Error::InvalidRegime(format!("rule {rule:?} does not apply to {model:?}")));
            }
        };
        match self.model {
            Model::ErClique if !(0.0..=1.0).contains(&value) => Err(Error::InvalidProbability(value)),
            Model::Cech | Model::Rips if !(value > 0.0 && value.is_finite()) => Err(Error::InvalidRadius(value)),
            _ => Ok(value),
        }
    }

    pub fn validate(&self) -> Result<f64> {
        if let ParamRule::Alpha { alpha } = self.rule {
            if !(alpha > 0.0 && alpha.is_finite()) {
                return Err(Error::InvalidRegime(format!("alpha must be positive, got {alpha}")));
            }
        }
        match self.model {
            Model::ErClique => {}
            Model::Cech | Model::Rips => {
                if self.d == 0 {
                    return Err(Error::InvalidRegime("geometric models need d >= 1".into()));
                }
                if self.density == DensityKind::External {
                    return Err(Error::InvalidRegime("experiments sample from uniform_cube or gaussian".into()));
                }
            }
        }
        if self.model == Model::Cech && self.k < 2 {
            return Err(Error::InvalidRegime("cech experiments need k >= 2".into()));
        }
        self.parameter()
    }

    /// Human-readable notes when the parameters sit outside the regime the
    /// limit theorems describe.
    pub fn warnings(&self) -> Vec<String> {
        let Ok(x) = self.parameter() else {
            return Vec::new();
        };
        let n = self.n as f64;
        let mut out = Vec::new();
        match self.model {
            Model::ErClique if self.k >= 1 => {
                let lo = n.powf(-1.0 / self.k as f64);
                let hi = n.powf(-1.0 / (self.k as f64 + 1.0));
                if x <= lo {
                    out.push(format!("p = {x} is not above n^(-1/k) = {lo}; outside the normal regime"));
                }
                if x >= hi {
                    out.push(format!("p = {x} is not below n^(-1/(k+1)) = {hi}; outside the normal regime"));
                }
            }
            Model::Cech | Model::Rips => {
                let nrd = n * x.powi(self.d as i32);
                if nrd >= 1.0 {
                    out.push(format!("n r^d = {nrd} is not small; outside the sparse regime"));
                }
            }
            _ => {}
        }
        out
    }

    fn density_spec(&self) -> DensitySpec {
        DensitySpec {
            kind: self.density,
            dimension: self.d,
        }
    }

    /// Names of the per-trial statistics, in column order.
    pub fn columns(&self) -> Vec<String> {
        let k = self.k;
        let mut cols = Vec::new();
        match self.model {
            Model::ErClique => {
                cols.extend((0..=k + 1).map(|i| format!("f_{i}")));
                cols.extend((0..=k).map(|i| format!("betti_{i}")));
            }
            Model::Cech => {
                cols.extend((0..k).map(|i| format!("f_{i}")));
                cols.extend((0..=k - 2).map(|i| format!("betti_{i}")));
                cols.push(format!("S_{k}"));
                cols.push(format!("S_iso_{k}"));
                if k >= 3 {
                    cols.push(format!("Y_{k}"));
                    cols.push(format!("Z_{k}"));
                }
            }
            Model::Rips => {
                cols.extend((0..=k + 1).map(|i| format!("f_{i}")));
                cols.extend((0..=k).map(|i| format!("betti_{i}")));
                cols.push(format!("o_{k}"));
                cols.push(format!("o_comp_{k}"));
                cols.push(format!("f_{k}_ge_{}", 2 * k + 3));
                if k == 1 {
                    cols.extend(["t_1", "t_2", "t_3"].map(String::from));
                }
            }
        }
        cols
    }

    /// Statistics of trial `t`, in [`columns`](Self::columns) order.
    pub fn run_trial(&self, param: f64, stream: RngStream) -> Result<Vec<u64>> {
        let k = self.k;
        let mut row = Vec::new();
        match self.model {
            Model::ErClique => {
                let g = gen_er_graph(self.n, param, stream)?;
                let c = clique_complex(&g, k + 1);
                row.extend(f_vector(&c));
                row.extend(betti_numbers(&c, k, DEFAULT_PRIME)?.betti);
            }
            Model::Cech => {
                let pts = sample_points(self.n, self.density_spec(), stream)?;
                let c = cech_complex(&pts, param, k - 1)?;
                let g = c.one_skeleton();
                row.extend(f_vector(&c));
                row.extend(betti_numbers(&c, k - 2, DEFAULT_PRIME)?.betti);
                let (s, iso) = empty_simplex_counts(&pts, param, k, &g)?;
                row.push(s);
                row.push(iso);
                if k >= 3 {
                    row.push(y_count(&g, k)?);
                    row.push(z_count(&g, k)?);
                }
            }
            Model::Rips => {
                let pts = sample_points(self.n, self.density_spec(), stream)?;
                let c = rips_complex(&pts, param, k + 1)?;
                let g = geometric_graph(&pts, param)?;
                row.extend(f_vector(&c));
                row.extend(betti_numbers(&c, k, DEFAULT_PRIME)?.betti);
                let (o, oc) = cross_polytope_counts(&g, k);
                row.push(o);
                row.push(oc);
                row.push(faces_on_large_components(&c, k, 2 * k + 3));
                if k == 1 {
                    row.extend(subgraph_counts(&g, &five_vertex_trees(), false)?);
                }
            }
        }
        Ok(row)
    }
}

/// Exact sums over trials and the moments derived from them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub sum: i128,
    pub sum_sq: i128,
    pub mean: f64,
    /// Unbiased sample variance; 0 for a single trial.
    pub variance: f64,
}

impl Aggregate {
    pub fn from_values(values: impl Iterator<Item = u64>) -> Self {
        let (mut m, mut sum, mut sum_sq) = (0i128, 0i128, 0i128);
        for v in values {
            let v = v as i128;
            m += 1;
            sum += v;
            sum_sq += v * v;
        }
        let mean = sum as f64 / m as f64;
        let variance = if m > 1 {
            // m * sum_sq - sum^2 is exact
            (m * sum_sq - sum * sum) as f64 / (m * (m - 1)) as f64
        } else {
            0.0
        };
        Aggregate {
            sum,
            sum_sq,
            mean,
            variance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentResult {
    pub regime: RegimeSpec,
    /// Resolved `p` or `r`.
    pub parameter: f64,
    pub trials: usize,
    pub master_seed: u64,
    pub columns: Vec<String>,
    pub per_trial: Vec<Vec<u64>>,
    pub aggregates: BTreeMap<String, Aggregate>,
    /// Against `Poisson(mean)`; absent when the mean is 0.
    pub tv_to_poisson: BTreeMap<String, f64>,
    /// Self-standardized; absent for constant statistics.
    pub ks_to_normal: BTreeMap<String, f64>,
    pub warnings: Vec<String>,
    pub version: String,
}

impl ExperimentResult {
    pub fn column(&self, name: &str) -> Option<Vec<u64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.per_trial.iter().map(|row| row[i]).collect())
    }

    pub fn mean(&self, name: &str) -> Option<f64> {
        self.aggregates.get(name).map(|a| a.mean)
    }

    fn summarize(&mut self) {
        self.aggregates.clear();
        self.tv_to_poisson.clear();
        self.ks_to_normal.clear();
        for (i, name) in self.columns.iter().enumerate() {
            let values: Vec<u64> = self.per_trial.iter().map(|row| row[i]).collect();
            let agg = Aggregate::from_values(values.iter().copied());
            if agg.mean > 0.0 {
                let tv = tv_to_poisson(&values, agg.mean).expect("positive mean");
                self.tv_to_poisson.insert(name.clone(), tv);
            }
            let reals: Vec<f64> = values.iter().map(|&v| v as f64).collect();
            if let Some(ks) = self_standardized_ks(&reals) {
                self.ks_to_normal.insert(name.clone(), ks);
            }
            self.aggregates.insert(name.clone(), agg);
        }
    }

    /// Aggregates recomputed from `per_trial` match the stored ones.
    pub fn aggregates_consistent(&self) -> bool {
        self.columns.iter().enumerate().all(|(i, name)| {
            let agg = Aggregate::from_values(self.per_trial.iter().map(|row| row[i]));
            self.aggregates.get(name) == Some(&agg)
        })
    }

    /// One row per trial: `trial,<columns...>`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (t, row) in self.per_trial.iter().enumerate() {
            write!(out, "{t}").unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Everything except the per-trial rows.
    pub fn summary_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("result serializes");
        v.as_object_mut().expect("object").remove("per_trial");
        v
    }
}

/// Runs `trials` seeded trials of `spec` on the current rayon pool. Trial
/// `t` draws from `RngStream(master_seed, t)`.
pub fn run_experiment(spec: &RegimeSpec, trials: usize, master_seed: u64) -> Result<ExperimentResult> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    let parameter = spec.validate()?;
    let per_trial = (0..trials)
        .into_par_iter()
        .map(|t| spec.run_trial(parameter, RngStream::new(master_seed, t as u64)))
        .collect::<Result<Vec<_>>>()?;
    let mut result = ExperimentResult {
        regime: *spec,
        parameter,
        trials,
        master_seed,
        columns: spec.columns(),
        per_trial,
        aggregates: BTreeMap::new(),
        tv_to_poisson: BTreeMap::new(),
        ks_to_normal: BTreeMap::new(),
        warnings: spec.warnings(),
        version: crate::VERSION.to_string(),
    };
    result.summarize();
    Ok(result)
}

/// As [`run_experiment`] on a dedicated pool of `workers` threads.
pub fn run_experiment_with_workers(
    spec: &RegimeSpec,
    trials: usize,
    master_seed: u64,
    workers: usize,
) -> Result<ExperimentResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| run_experiment(spec, trials, master_seed))
}
