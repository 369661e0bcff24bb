use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use orbiquot::classify::{self, lookup, pipeline_samples, Config, Source, Status};
use orbiquot::coxeter::{check_goodness, coxeter_presentation, CoxeterComplexData, Goodness};
use orbiquot::geometry::{orbit_distance, CurvatureStats, DEFAULT_RESTARTS};
use orbiquot::{Error, GroupSpec, LieGroupRep, Vector};

/// Orbit spaces of compact group actions on round spheres.
#[derive(Parser)]
#[command(name = "orbiquot", version)]
struct Cli {
    /// Seed for every randomized stage; overrides the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// JSON config with fields seed, samples, tol_rank, tol_polar, restarts.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Write curvature samples as CSV here.
    #[arg(long, global = true)]
    dump_samples: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RepSource {
    /// Registry entry id.
    #[arg(long)]
    entry: Option<String>,
    /// Path to a GroupSpec JSON document.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a representation and write its generators as JSON.
    Build {
        #[command(flatten)]
        source: RepSource,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the analysis pipeline on a representation.
    Analyze {
        #[command(flatten)]
        source: RepSource,
    },
    /// Verify one registry entry against its tabulated invariants.
    VerifyEntry { id: String },
    /// Verify the registry.
    VerifyTables {
        /// Restrict to one table (1, 2 or 3).
        #[arg(long)]
        table: Option<u8>,
    },
    /// Sample sectional curvatures of the quotient.
    Curvature {
        #[command(flatten)]
        source: RepSource,
    },
    /// Orbit distance between two points given as comma-separated coordinates.
    Distance {
        #[command(flatten)]
        source: RepSource,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        p: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        q: Vec<f64>,
    },
    /// Decide goodness of a Coxeter complex given as JSON.
    CoxeterCheck {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

/// A failure that maps to exit code 3.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(status) => ExitCode::from(status.exit_code() as u8),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config, Usage> {
    let mut config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(seed) = cli.seed {
        config.seed = seed;
    }
    Ok(config)
}

fn load_spec(source: &RepSource) -> Result<GroupSpec, Usage> {
    match (&source.entry, &source.spec) {
        (Some(id), _) => lookup(id).map(|e| e.spec).ok_or_else(|| Usage(Error::UnknownEntry(id.clone()).to_string())),
        (None, Some(path)) => {
            let spec: GroupSpec = serde_json::from_str(&std::fs::read_to_string(path)?).map_err(Error::from)?;
            spec.validate()?;
            Ok(spec)
        }
        (None, None) => Err(Usage("one of --entry or --spec is required".into())),
    }
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Usage> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).map_err(Error::from)?;
        std::fs::write(path, text + "\n")?;
    }
    Ok(())
}

fn dump_samples(path: &Path, rep: &LieGroupRep, config: &Config) -> Result<(), Usage> {
    let mut csv = String::from("index,K,a_norm_sq\n");
    for (i, s) in pipeline_samples(rep, config)?.iter().enumerate() {
        let _ = writeln!(csv, "{i},{},{}", s.curvature, s.a_norm_sq);
    }
    std::fs::write(path, csv)?;
    Ok(())
}

fn print_report(r: &classify::AnalysisReport) {
    println!("{} ({})", r.id.as_deref().unwrap_or("analysis"), r.label);
    for c in &r.checks {
        let expected = if c.expected.is_empty() { String::new() } else { format!(" (expected {})", c.expected) };
        println!("  {:<28} {}{} [{:?}]", c.name, c.computed, expected, c.status);
    }
    println!("status: {:?}", r.status);
}

fn run(cli: &Cli) -> Result<Status, Usage> {
    let config = load_config(cli)?;
    match &cli.command {
        Command::Build { source, out } => {
            let rep = LieGroupRep::from_spec(&load_spec(source)?)?;
            write_json(&Some(out.clone()), &rep.to_document())?;
            println!("{}: {} generators on R^{}", rep.label(), rep.algebra_dim(), rep.ambient_dim());
            Ok(Status::Pass)
        }
        Command::Analyze { source } => {
            let spec = load_spec(source)?;
            let report = classify::analyze(&spec, &config)?;
            print_report(&report);
            write_json(&cli.json, &report)?;
            if let Some(path) = &cli.dump_samples {
                dump_samples(path, &LieGroupRep::from_spec(&spec)?, &config)?;
            }
            Ok(report.status)
        }
        Command::VerifyEntry { id } => {
            let report = classify::verify_entry(id, &config)?;
            print_report(&report);
            write_json(&cli.json, &report)?;
            if let Some(path) = &cli.dump_samples {
                dump_samples(path, &LieGroupRep::from_spec(&report.spec)?, &config)?;
            }
            Ok(report.status)
        }
        Command::VerifyTables { table } => {
            let sources = match table {
                None => None,
                Some(1) => Some(vec![Source::Table1]),
                Some(2) => Some(vec![Source::Table2]),
                Some(3) => Some(vec![Source::Table3]),
                Some(t) => return Err(Usage(format!("no table {t}"))),
            };
            let summary = classify::verify_tables(&config, sources.as_deref())?;
            print!("{}", summary.render());
            write_json(&cli.json, &summary)?;
            Ok(summary.status)
        }
        Command::Curvature { source } => {
            let rep = LieGroupRep::from_spec(&load_spec(source)?)?;
            let samples = pipeline_samples(&rep, &config)?;
            let stats = CurvatureStats::from_samples(&samples);
            println!(
                "{} samples: min {} max {} mean {} stddev {}",
                stats.samples, stats.min, stats.max, stats.mean, stats.stddev
            );
            write_json(&cli.json, &stats)?;
            if let Some(path) = &cli.dump_samples {
                dump_samples(path, &rep, &config)?;
            }
            Ok(Status::Pass)
        }
        Command::Distance { source, p, q } => {
            let rep = LieGroupRep::from_spec(&load_spec(source)?)?;
            let n = rep.ambient_dim();
            if p.len() != n || q.len() != n {
                return Err(Usage(format!("points must have {n} coordinates")));
            }
            let (p, q) = (Vector::from_column_slice(p), Vector::from_column_slice(q));
            if p.norm() == 0.0 || q.norm() == 0.0 {
                return Err(Usage("points must be nonzero".into()));
            }
            let d = orbit_distance(&rep, &p, &q, config.seed, DEFAULT_RESTARTS);
            println!("distance {} ({} restarts, {} steps)", d.distance, d.restarts, d.iterations);
            write_json(&cli.json, &d)?;
            Ok(Status::Pass)
        }
        Command::CoxeterCheck { input } => {
            let data = CoxeterComplexData::from_json(&std::fs::read_to_string(input)?)?;
            let verdict = check_goodness(&data)?;
            println!("C1 {} C2 {}: {:?}", verdict.c1, verdict.c2, verdict.verdict);
            if let Ok(p) = coxeter_presentation(&data) {
                println!("{p}");
            }
            write_json(&cli.json, &verdict)?;
            Ok(match verdict.verdict {
                Goodness::Good => Status::Pass,
                Goodness::Bad => Status::Fail,
                Goodness::Unknown => Status::Inconclusive,
            })
        }
    }
}
