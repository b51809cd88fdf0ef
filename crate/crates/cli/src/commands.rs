use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};

use randtopo_core::census::{enumerate_extension_types, estimate_mu_with_threshold, CensusReport};
use randtopo_core::generators::{cech_complex, clique_complex, gen_er_graph, geometric_graph, sample_points};
use randtopo_core::io::{parse_edge_list, parse_points_csv};
use randtopo_core::lab::{run_experiment, Model, RegimeSpec};
use randtopo_core::{DensitySpec, Graph, PointCloud, RngStream, DEFAULT_PRIME, VERSION};

use crate::config::{require, CensusArgs, ExperimentArgs, MuArgs, SweepArgs};
use crate::CliError;

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| CliError::Runtime(format!("{}: {}", path.display(), e.error)))?;
    Ok(())
}

fn emit(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())?;
            Ok(())
        }
    }
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool, CliError> {
    let n = match workers {
        Some(0) => return Err(CliError::Config("--workers must be >= 1".into())),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| CliError::Runtime(e.to_string()))
}

fn runtime(e: randtopo_core::Error) -> CliError {
    CliError::Runtime(e.to_string())
}

fn regime_echo(spec: &RegimeSpec) -> Result<Value, CliError> {
    let parameter = spec.parameter().map_err(|e| CliError::Config(e.to_string()))?;
    Ok(json!({ "regime": spec, "parameter": parameter }))
}

pub fn experiment(args: ExperimentArgs) -> Result<(), CliError> {
    let seed = require(args.seed, "seed")?;
    let trials = require(args.trials, "trials")?;
    if trials == 0 {
        return Err(CliError::Config("--trials must be >= 1".into()));
    }
    let spec = args.model.regime(None)?;
    let mut echo = regime_echo(&spec)?;
    echo["trials"] = json!(trials);
    echo["seed"] = json!(seed);
    echo["prime"] = json!(DEFAULT_PRIME);
    echo["version"] = json!(VERSION);

    let result = pool(args.workers)?.install(|| run_experiment(&spec, trials, seed)).map_err(runtime)?;
    let mut summary = result.summary_json();
    summary["config"] = echo.clone();
    if let Some(path) = &args.out_csv {
        let csv = format!("# config {echo}\n{}", result.to_csv());
        write_atomic(path, &csv)?;
    }
    let text = serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n";
    emit(args.out_json.as_deref(), &text)
}

pub fn sweep(args: SweepArgs) -> Result<(), CliError> {
    let seed = require(args.seed, "seed")?;
    let trials = require(args.trials, "trials")?;
    let grid = require(args.grid.clone(), "grid")?;
    if grid.is_empty() || trials == 0 {
        return Err(CliError::Config("--grid must be nonempty and --trials >= 1".into()));
    }
    let specs = grid
        .iter()
        .map(|&v| args.model.regime(Some(v)))
        .collect::<Result<Vec<_>, _>>()?;
    let echo = json!({
        "model": specs[0].model,
        "n": specs[0].n,
        "k": specs[0].k,
        "d": specs[0].d,
        "density": specs[0].density,
        "grid": grid,
        "trials": trials,
        "seed": seed,
        "version": VERSION,
    });
    let pool = pool(args.workers)?;
    let columns = specs[0].columns();
    let mut csv = format!("# config {echo}\nparam");
    for c in &columns {
        csv.push_str(&format!(",mean_{c}"));
    }
    csv.push('\n');
    for (spec, value) in specs.iter().zip(&grid) {
        let result = pool.install(|| run_experiment(spec, trials, seed)).map_err(runtime)?;
        csv.push_str(&value.to_string());
        for c in &columns {
            csv.push_str(&format!(",{}", result.mean(c).expect("column present")));
        }
        csv.push('\n');
    }
    emit(args.out.as_deref(), &csv)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))
}

pub fn census(mut args: CensusArgs) -> Result<(), CliError> {
    let model = args.model.parse_model()?;
    let k = require(args.model.k, "k")?;
    let q = args.prime.unwrap_or(DEFAULT_PRIME);

    let mut points: Option<PointCloud> = None;
    let mut graph: Option<Graph> = None;
    match (model, &args.points, &args.edges) {
        (Model::ErClique, _, Some(path)) => {
            let g = parse_edge_list(&read(path)?).map_err(|e| CliError::Config(e.to_string()))?;
            args.model.n.get_or_insert(g.vertex_count());
            if args.model.p.is_none() && args.model.gamma.is_none() {
                // p is irrelevant for a given graph
                args.model.p = Some(0.0);
            }
            graph = Some(g);
        }
        (Model::Cech | Model::Rips, Some(path), _) => {
            let pts = parse_points_csv(&read(path)?).map_err(|e| CliError::Config(e.to_string()))?;
            args.model.n.get_or_insert(pts.len());
            args.model.d.get_or_insert(pts.dimension());
            points = Some(pts);
        }
        (_, Some(_), _) | (_, _, Some(_)) => {
            return Err(CliError::Config("--points goes with cech/rips, --edges with er".into()));
        }
        _ => {}
    }
    let spec = args.model.regime(None)?;
    let param = spec.parameter().map_err(|e| CliError::Config(e.to_string()))?;
    let sampled = points.is_none() && graph.is_none();
    let seed = if sampled { Some(require(args.seed, "seed")?) } else { args.seed };
    let stream = RngStream::new(seed.unwrap_or(0), 0);
    let max_dim = args.max_dim.unwrap_or(k + 1);

    let mut echo = regime_echo(&spec)?;
    echo["seed"] = json!(seed);
    echo["max_dim"] = json!(max_dim);
    echo["prime"] = json!(q);
    echo["version"] = json!(VERSION);
    if let Some(p) = &args.points {
        echo["points"] = json!(p);
    }
    if let Some(p) = &args.edges {
        echo["edges"] = json!(p);
    }

    let report = match model {
        Model::ErClique => {
            let g = match graph {
                Some(g) => g,
                None => gen_er_graph(spec.n, param, stream).map_err(runtime)?,
            };
            let c = clique_complex(&g, max_dim);
            let mut report = with_betti(CensusReport::new(&c), &c, q)?;
            if k >= 1 {
                report.add_cross(&g, k);
            }
            report.add_f_ge(&c, k, 2 * k + 3);
            report
        }
        Model::Cech | Model::Rips => {
            let pts = match points {
                Some(p) => p,
                None => sample_points(spec.n, DensitySpec { kind: spec.density, dimension: spec.d }, stream)
                    .map_err(runtime)?,
            };
            let g = geometric_graph(&pts, param).map_err(runtime)?;
            let c = if model == Model::Cech {
                cech_complex(&pts, param, max_dim).map_err(runtime)?
            } else {
                clique_complex(&g, max_dim)
            };
            let mut report = with_betti(CensusReport::new(&c), &c, q)?;
            if model == Model::Cech {
                if k >= 2 {
                    report.add_empty(&pts, param, k, &g).map_err(runtime)?;
                }
                if k >= 3 {
                    report.add_attachments(&g, k).map_err(runtime)?;
                }
            } else {
                if k >= 1 {
                    report.add_cross(&g, k);
                }
                report.add_f_ge(&c, k, 2 * k + 3);
            }
            report
        }
    };
    let out = json!({ "config": echo, "census": report.to_flat() });
    emit(args.out.as_deref(), &(serde_json::to_string_pretty(&out).expect("serializes") + "\n"))
}

/// Betti numbers in every degree the complex supports.
fn with_betti(report: CensusReport, c: &randtopo_core::SimplicialComplex, q: u64) -> Result<CensusReport, CliError> {
    let top = if c.is_full() {
        Some(c.max_dim())
    } else {
        c.max_dim().checked_sub(1)
    };
    match top {
        Some(up_to) => report.with_betti(c, up_to, q).map_err(|e| CliError::Config(e.to_string())),
        None => Ok(report),
    }
}

pub fn extension_types(k: usize) -> Result<(), CliError> {
    if k > 3 {
        return Err(CliError::Config(format!("extension-types supports 0 <= k <= 3, got {k}")));
    }
    let types = enumerate_extension_types(k).map_err(runtime)?;
    let out = json!({ "k": k, "count": types.len(), "graphs": types });
    emit(None, &(serde_json::to_string_pretty(&out).expect("serializes") + "\n"))
}

pub fn estimate_mu(args: MuArgs) -> Result<(), CliError> {
    let k = require(args.k, "k")?;
    let d = require(args.d, "d")?;
    let seed = require(args.seed, "seed")?;
    let samples = args.samples.unwrap_or(1_000_000);
    let threshold = args.threshold.unwrap_or(1.0);
    let mu = pool(args.workers)?
        .install(|| estimate_mu_with_threshold(k, d, samples, seed, threshold))
        .map_err(|e| CliError::Config(e.to_string()))?;
    let out = json!({
        "config": { "k": k, "d": d, "samples": samples, "seed": seed, "threshold": threshold, "version": VERSION },
        "mu": mu,
    });
    emit(None, &(serde_json::to_string_pretty(&out).expect("serializes") + "\n"))
}
