//! Flag/config-file merging and regime resolution.

use std::path::{Path, PathBuf};

use clap::Args;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use randtopo_core::lab::{Model, ParamRule, RegimeSpec};
use randtopo_core::DensityKind;

use crate::CliError;

/// Model and parameter flags shared by `experiment`, `sweep` and `census`.
#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModelArgs {
    /// er | cech | rips
    #[arg(long)]
    pub model: Option<String>,
    /// Number of vertices or points
    #[arg(long)]
    pub n: Option<usize>,
    /// Homology degree (er, rips) or simplex vertex count (cech)
    #[arg(long)]
    pub k: Option<usize>,
    /// Ambient dimension for geometric models
    #[arg(long)]
    pub d: Option<usize>,
    /// Edge probability (er)
    #[arg(long)]
    pub p: Option<f64>,
    /// Ball radius (cech, rips); points are joined when within 2r
    #[arg(long)]
    pub r: Option<f64>,
    /// p = n^-gamma (er)
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Scaling constant for the geometric regimes
    #[arg(long)]
    pub alpha: Option<f64>,
    /// uniform_cube | gaussian
    #[arg(long)]
    pub density: Option<String>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub trials: Option<usize>,
    /// Master seed; required
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads (results do not depend on it)
    #[arg(long)]
    pub workers: Option<usize>,
    /// Per-trial CSV output
    #[arg(long)]
    pub out_csv: Option<PathBuf>,
    /// Summary JSON output; stdout when absent
    #[arg(long)]
    pub out_json: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub model: ModelArgs,
    /// Comma-separated values of p (er) or r (cech, rips)
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// CSV output; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CensusArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Read points (CSV) instead of sampling them
    #[arg(long)]
    pub points: Option<PathBuf>,
    /// Read an edge list instead of sampling a graph (er)
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Largest face dimension built; defaults to k + 1
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// Field characteristic for homology
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MuArgs {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Radius the full set must exceed to count as empty
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long)]
    pub workers: Option<usize>,
}

fn overlay(base: &mut Map<String, Value>, top: Map<String, Value>) {
    for (key, value) in top {
        if !value.is_null() {
            base.insert(key, value);
        }
    }
}

/// Values from the optional JSON `config` file, overridden by any flag given.
pub fn merge<T: Serialize + DeserializeOwned>(flags: T, config: Option<&Path>) -> Result<T, CliError> {
    let Some(path) = config else {
        return Ok(flags);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let file: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    let Value::Object(mut base) = file else {
        return Err(CliError::Config(format!("{}: expected a JSON object", path.display())));
    };
    let Value::Object(top) = serde_json::to_value(flags).expect("flags serialize") else {
        unreachable!("argument structs serialize to objects");
    };
    overlay(&mut base, top);
    serde_json::from_value(Value::Object(base)).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

pub fn require<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Config(format!("missing --{flag}")))
}

impl ModelArgs {
    pub fn parse_model(&self) -> Result<Model, CliError> {
        require(self.model.as_deref(), "model")?.parse().map_err(|e: randtopo_core::Error| CliError::Config(e.to_string()))
    }

    pub fn density_kind(&self) -> Result<DensityKind, CliError> {
        match self.density.as_deref().unwrap_or("uniform_cube") {
            "uniform_cube" | "uniform" => Ok(DensityKind::UniformCube),
            "gaussian" => Ok(DensityKind::Gaussian),
            other => Err(CliError::Config(format!("unknown density {other:?}"))),
        }
    }

    /// The parameter rule, with `explicit` standing in for a grid value.
    pub fn rule(&self, model: Model, explicit: Option<f64>) -> Result<ParamRule, CliError> {
        let explicit = explicit.or(match model {
            Model::ErClique => self.p,
            Model::Cech | Model::Rips => self.r,
        });
        let given = [explicit.is_some(), self.gamma.is_some(), self.alpha.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            let names = match model {
                Model::ErClique => "--p or --gamma",
                Model::Cech | Model::Rips => "--r or --alpha",
            };
            return Err(CliError::Config(format!("give exactly one of {names}")));
        }
        Ok(match (explicit, self.gamma, self.alpha) {
            (Some(value), _, _) => ParamRule::Explicit { value },
            (_, Some(gamma), _) => ParamRule::ErGamma { gamma },
            (_, _, Some(alpha)) => ParamRule::Alpha { alpha },
            _ => unreachable!(),
        })
    }

    pub fn regime(&self, explicit: Option<f64>) -> Result<RegimeSpec, CliError> {
        let model = self.parse_model()?;
        let n = require(self.n, "n")?;
        let k = require(self.k, "k")?;
        let rule = self.rule(model, explicit)?;
        let spec = match model {
            Model::ErClique => RegimeSpec::er(n, k, rule),
            Model::Cech | Model::Rips => {
                let mut spec = RegimeSpec::geometric(model, n, k, require(self.d, "d")?, rule);
                spec.density = self.density_kind()?;
                spec
            }
        };
        spec.validate().map_err(|e| CliError::Config(e.to_string()))?;
        Ok(spec)
    }
}
