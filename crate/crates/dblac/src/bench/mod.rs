//! Benchmark harness: timed repeated runs over instance sets, aggregation,
//! CSV emission and SVG charts.
//!
//! Timing covers the coloring call only; parsing and generation happen
//! before the clock starts. Every timed coloring is verified proper before
//! a record is emitted.

mod csv;
mod svg;

pub use csv::{write_records_csv, write_summary_csv};
pub use svg::emit_plots;

use crate::algo::{run_algorithm, AlgorithmId};
use crate::dimacs::parse_dimacs;
use crate::gen::gen_erdos_renyi;
use crate::graph::Graph;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("instance `{name}`: {source}")]
    UnreadableFile {
        name: String,
        source: std::io::Error,
    },
    #[error("instance `{name}`: {message}")]
    BadInstance { name: String, message: String },
    #[error("algorithm {algorithm} produced an improper coloring on `{instance}` (edge {u}-{v})")]
    ImproperColoring {
        instance: String,
        algorithm: AlgorithmId,
        u: usize,
        v: usize,
    },
    #[error("manifest line {line}: {message}")]
    BadManifest { line: usize, message: String },
    #[error("manifest: duplicate instance name `{0}`")]
    DuplicateInstance(String),
    #[error("colors vary across repetitions for `{instance}` / {algorithm}")]
    ColorsVary {
        instance: String,
        algorithm: AlgorithmId,
    },
}

/// Where an instance's graph comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSource {
    File(PathBuf),
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

#[derive(Clone, Debug)]
pub struct InstanceSpec {
    pub name: String,
    pub source: InstanceSource,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub instances: Vec<InstanceSpec>,
    pub algorithms: Vec<AlgorithmId>,
    pub repetitions: usize,
    pub warmup: usize,
    /// Worker threads; 1 guarantees serial execution for clean timing.
    pub jobs: usize,
    pub continue_on_error: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            instances: Vec::new(),
            algorithms: vec![AlgorithmId::Dblac, AlgorithmId::Dsatur, AlgorithmId::Rlf],
            repetitions: 1,
            warmup: 1,
            jobs: 1,
            continue_on_error: false,
        }
    }
}

/// One (instance, algorithm, repetition) measurement.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub instance: String,
    pub algorithm: AlgorithmId,
    pub repetition: usize,
    pub colors: usize,
    pub runtime_seconds: f64,
}

/// Per-(instance, algorithm) aggregate.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub instance: String,
    pub algorithm: AlgorithmId,
    pub mean_colors: f64,
    pub mean_runtime_s: f64,
    pub min_runtime_s: f64,
    pub repetitions: usize,
}

/// Benchmark manifest: one instance per line, `file <path>` or
/// `er <n> <p> <seed>`. Blank lines and `#` comments are ignored.
pub fn parse_manifest(text: &str) -> Result<Vec<InstanceSpec>, BenchError> {
    let mut specs: Vec<InstanceSpec> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let spec = match tokens.next().unwrap() {
            "file" => {
                let path = tokens.next().ok_or(BenchError::BadManifest {
                    line,
                    message: "expected `file <path>`".into(),
                })?;
                let name = Path::new(path)
                    .file_name()
                    .map(|f| f.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.to_string());
                InstanceSpec {
                    name,
                    source: InstanceSource::File(PathBuf::from(path)),
                }
            }
            "er" => {
                let mut next = |what: &str| -> Result<&str, BenchError> {
                    tokens.next().ok_or(BenchError::BadManifest {
                        line,
                        message: format!("expected `er <n> <p> <seed>`, missing {what}"),
                    })
                };
                let n: usize = parse_field(next("n")?, line, "n")?;
                let p: f64 = parse_field(next("p")?, line, "p")?;
                let seed: u64 = parse_field(next("seed")?, line, "seed")?;
                InstanceSpec {
                    name: format!("er-{n}-{p}-{seed}"),
                    source: InstanceSource::ErdosRenyi { n, p, seed },
                }
            }
            other => {
                return Err(BenchError::BadManifest {
                    line,
                    message: format!("unknown instance kind `{other}`"),
                })
            }
        };
        if specs.iter().any(|s| s.name == spec.name) {
            return Err(BenchError::DuplicateInstance(spec.name));
        }
        specs.push(spec);
    }
    Ok(specs)
}

fn parse_field<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, BenchError> {
    tok.parse().map_err(|_| BenchError::BadManifest {
        line,
        message: format!("invalid {what}: `{tok}`"),
    })
}

fn load_instance(spec: &InstanceSpec) -> Result<Graph, BenchError> {
    match &spec.source {
        InstanceSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| BenchError::UnreadableFile {
                name: spec.name.clone(),
                source,
            })?;
            let parsed = parse_dimacs(&text).map_err(|e| BenchError::BadInstance {
                name: spec.name.clone(),
                message: e.to_string(),
            })?;
            Ok(parsed.graph)
        }
        InstanceSource::ErdosRenyi { n, p, seed } => {
            gen_erdos_renyi(*n, *p, *seed).map_err(|e| BenchError::BadInstance {
                name: spec.name.clone(),
                message: e.to_string(),
            })
        }
    }
}

/// Warmup runs untimed, then `repetitions` timed runs. Each coloring is
/// verified proper; an improper one aborts with an error rather than
/// emitting a bad record.
pub fn run_instance(
    name: &str,
    g: &Graph,
    id: AlgorithmId,
    repetitions: usize,
    warmup: usize,
) -> Result<Vec<BenchRecord>, BenchError> {
    assert!(repetitions >= 1);
    for _ in 0..warmup {
        run_algorithm(id, g);
    }
    let mut records = Vec::with_capacity(repetitions);
    for rep in 0..repetitions {
        let start = Instant::now();
        let coloring = run_algorithm(id, g);
        let runtime_seconds = start.elapsed().as_secs_f64();
        if let Some((u, v)) = g.violating_edge(&coloring.assignment).expect("length matches") {
            return Err(BenchError::ImproperColoring {
                instance: name.to_string(),
                algorithm: id,
                u,
                v,
            });
        }
        records.push(BenchRecord {
            instance: name.to_string(),
            algorithm: id,
            repetition: rep,
            colors: coloring.k,
            runtime_seconds,
        });
    }
    Ok(records)
}

/// Result of a suite run; `failed_cells` is non-zero only when the config
/// asked to continue past per-cell errors.
#[derive(Debug)]
pub struct SuiteOutcome {
    pub records: Vec<BenchRecord>,
    pub failed_cells: usize,
}

/// Runs the full instances x algorithms grid. Each instance's graph is
/// loaded or generated once and shared across algorithms. Records come back
/// in deterministic (instance, algorithm, repetition) order regardless of
/// the worker count.
pub fn run_suite(cfg: &BenchConfig) -> Result<SuiteOutcome, BenchError> {
    run_suite_with_progress(cfg, |_, _| {})
}

pub fn run_suite_with_progress(
    cfg: &BenchConfig,
    progress: impl Fn(&str, AlgorithmId) + Sync,
) -> Result<SuiteOutcome, BenchError> {
    let mut graphs = Vec::with_capacity(cfg.instances.len());
    let mut load_failures = Vec::new();
    for spec in &cfg.instances {
        match load_instance(spec) {
            Ok(g) => graphs.push(Some(g)),
            Err(e) if cfg.continue_on_error => {
                eprintln!("warning: skipping {}: {}", spec.name, e);
                load_failures.push(e);
                graphs.push(None);
            }
            Err(e) => return Err(e),
        }
    }

    let cells: Vec<(usize, AlgorithmId)> = (0..cfg.instances.len())
        .flat_map(|i| cfg.algorithms.iter().map(move |&a| (i, a)))
        .collect();
    let results: Mutex<Vec<Option<Result<Vec<BenchRecord>, BenchError>>>> =
        Mutex::new((0..cells.len()).map(|_| None).collect());
    let next_cell = AtomicUsize::new(0);
    let workers = cfg.jobs.max(1).min(cells.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next_cell.fetch_add(1, Ordering::Relaxed);
                if idx >= cells.len() {
                    break;
                }
                let (i, algorithm) = cells[idx];
                let Some(g) = graphs[i].as_ref() else { continue };
                let name = &cfg.instances[i].name;
                progress(name, algorithm);
                let result = run_instance(name, g, algorithm, cfg.repetitions, cfg.warmup);
                results.lock().unwrap()[idx] = Some(result);
            });
        }
    });

    let mut records = Vec::new();
    let mut failed_cells = load_failures.len() * cfg.algorithms.len();
    for slot in results.into_inner().unwrap() {
        match slot {
            Some(Ok(mut cell_records)) => records.append(&mut cell_records),
            Some(Err(e)) => {
                if !cfg.continue_on_error {
                    return Err(e);
                }
                eprintln!("warning: {e}");
                failed_cells += 1;
            }
            None => {} // cell of a skipped instance, already counted
        }
    }
    Ok(SuiteOutcome {
        records,
        failed_cells,
    })
}

/// Groups records by (instance, algorithm). Colorers are deterministic, so
/// repetitions must agree on the color count; disagreement is an error.
pub fn aggregate(records: &[BenchRecord]) -> Result<Vec<SummaryRow>, BenchError> {
    let mut keys: Vec<(String, AlgorithmId)> = Vec::new();
    for r in records {
        let key = (r.instance.clone(), r.algorithm);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    keys.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut rows = Vec::with_capacity(keys.len());
    for (instance, algorithm) in keys {
        let mut group: Vec<&BenchRecord> = records
            .iter()
            .filter(|r| r.instance == instance && r.algorithm == algorithm)
            .collect();
        // Fixed summation order makes aggregation permutation-invariant
        // down to the last float bit.
        group.sort_by_key(|r| r.repetition);
        let colors = group[0].colors;
        if group.iter().any(|r| r.colors != colors) {
            return Err(BenchError::ColorsVary {
                instance,
                algorithm,
            });
        }
        let reps = group.len();
        let mean_runtime_s =
            group.iter().map(|r| r.runtime_seconds).sum::<f64>() / reps as f64;
        let min_runtime_s = group
            .iter()
            .map(|r| r.runtime_seconds)
            .fold(f64::INFINITY, f64::min);
        let mean_colors =
            group.iter().map(|r| r.colors as f64).sum::<f64>() / reps as f64;
        rows.push(SummaryRow {
            instance,
            algorithm,
            mean_colors,
            mean_runtime_s,
            min_runtime_s,
            repetitions: reps,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn run_instance_edgeless() {
        let g = fixtures::edgeless(10);
        let records = run_instance("edgeless", &g, AlgorithmId::Ldf, 3, 1).unwrap();
        assert_eq!(records.len(), 3);
        assert!(records.iter().all(|r| r.colors == 1));
        assert!(records.iter().all(|r| r.runtime_seconds >= 0.0));
    }

    #[test]
    fn colors_identical_across_repetitions() {
        let g = crate::gen::gen_erdos_renyi(40, 0.5, 9).unwrap();
        for id in AlgorithmId::ALL {
            let records = run_instance("er", &g, id, 5, 0).unwrap();
            assert!(records.windows(2).all(|w| w[0].colors == w[1].colors));
        }
    }

    #[test]
    fn suite_cardinality() {
        let cfg = BenchConfig {
            instances: vec![
                InstanceSpec {
                    name: "a".into(),
                    source: InstanceSource::ErdosRenyi { n: 20, p: 0.3, seed: 1 },
                },
                InstanceSpec {
                    name: "b".into(),
                    source: InstanceSource::ErdosRenyi { n: 20, p: 0.5, seed: 2 },
                },
            ],
            algorithms: vec![AlgorithmId::Dblac, AlgorithmId::Rlf],
            repetitions: 3,
            warmup: 0,
            ..Default::default()
        };
        let outcome = run_suite(&cfg).unwrap();
        assert_eq!(outcome.records.len(), 12);
        assert_eq!(outcome.failed_cells, 0);
    }

    #[test]
    fn parallel_suite_matches_serial() {
        let instances: Vec<InstanceSpec> = (0..6)
            .map(|i| InstanceSpec {
                name: format!("er{i}"),
                source: InstanceSource::ErdosRenyi { n: 30, p: 0.4, seed: i },
            })
            .collect();
        let serial = BenchConfig {
            instances: instances.clone(),
            repetitions: 2,
            warmup: 0,
            jobs: 1,
            ..Default::default()
        };
        let parallel = BenchConfig { jobs: 4, ..serial.clone() };
        let a = run_suite(&serial).unwrap().records;
        let b = run_suite(&parallel).unwrap().records;
        let key = |r: &BenchRecord| (r.instance.clone(), r.algorithm, r.repetition, r.colors);
        assert_eq!(a.iter().map(key).collect::<Vec<_>>(), b.iter().map(key).collect::<Vec<_>>());
    }

    #[test]
    fn aggregate_arithmetic_and_grouping() {
        let rec = |inst: &str, rep, rt| BenchRecord {
            instance: inst.into(),
            algorithm: AlgorithmId::Dsatur,
            repetition: rep,
            colors: 4,
            runtime_seconds: rt,
        };
        let rows = aggregate(&[rec("x", 0, 0.001), rec("x", 1, 0.002), rec("x", 2, 0.003)]).unwrap();
        assert_eq!(rows.len(), 1);
        assert!((rows[0].mean_runtime_s - 0.002).abs() < 1e-12);
        assert_eq!(rows[0].min_runtime_s, 0.001);
        assert_eq!(rows[0].mean_colors, 4.0);
        assert_eq!(rows[0].repetitions, 3);

        assert!(aggregate(&[]).unwrap().is_empty());

        let mixed = vec![rec("x", 0, 0.1), rec("y", 0, 0.2)];
        assert_eq!(aggregate(&mixed).unwrap().len(), 2);
    }

    #[test]
    fn aggregate_is_permutation_invariant() {
        let mut records: Vec<BenchRecord> = (0..4)
            .flat_map(|rep| {
                ["a", "b"].into_iter().map(move |inst| BenchRecord {
                    instance: inst.into(),
                    algorithm: AlgorithmId::Rlf,
                    repetition: rep,
                    colors: 3,
                    runtime_seconds: 0.001 * (rep + 1) as f64,
                })
            })
            .collect();
        let forward = aggregate(&records).unwrap();
        records.reverse();
        assert_eq!(aggregate(&records).unwrap(), forward);
    }

    #[test]
    fn aggregate_rejects_varying_colors() {
        let mut a = BenchRecord {
            instance: "x".into(),
            algorithm: AlgorithmId::Ldf,
            repetition: 0,
            colors: 3,
            runtime_seconds: 0.0,
        };
        let mut b = a.clone();
        a.repetition = 0;
        b.repetition = 1;
        b.colors = 4;
        assert!(matches!(
            aggregate(&[a, b]),
            Err(BenchError::ColorsVary { .. })
        ));
    }

    #[test]
    fn manifest_parsing() {
        let specs = parse_manifest("# comment\nfile graphs/myciel3.col\n\ner 100 0.5 7\n").unwrap();
        assert_eq!(specs.len(), 2);
        assert_eq!(specs[0].name, "myciel3.col");
        assert_eq!(specs[1].name, "er-100-0.5-7");
        assert_eq!(
            specs[1].source,
            InstanceSource::ErdosRenyi { n: 100, p: 0.5, seed: 7 }
        );

        assert!(matches!(
            parse_manifest("bogus line\n"),
            Err(BenchError::BadManifest { line: 1, .. })
        ));
        assert!(matches!(
            parse_manifest("er 10 0.5 1\ner 10 0.5 1\n"),
            Err(BenchError::DuplicateInstance(_))
        ));
        assert!(matches!(
            parse_manifest("er 10 x 1\n"),
            Err(BenchError::BadManifest { line: 1, .. })
        ));
    }

    #[test]
    fn unreadable_file_names_instance() {
        let cfg = BenchConfig {
            instances: vec![InstanceSpec {
                name: "missing.col".into(),
                source: InstanceSource::File("/nonexistent/missing.col".into()),
            }],
            ..Default::default()
        };
        let err = run_suite(&cfg).unwrap_err();
        assert!(err.to_string().contains("missing.col"));
    }
}
