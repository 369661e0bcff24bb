//! Registry verification and analysis reports.
//!
//! [`verify_entry`] runs the full pipeline on a registry entry and compares
//! every computed invariant with the tabulated one; [`analyze`] runs the same
//! pipeline on an arbitrary [`GroupSpec`]. Reports are deterministic
//! functions of the entry and the [`Config`], so two runs serialize to the
//! same bytes.

mod registry;
mod tables;

pub use registry::{lookup, orbit_equivalent_groups, registry, Expected, RegistryEntry, Source};
pub use tables::{verify_tables, TablesSummary};

use serde::{Deserialize, Serialize};

use crate::coxeter::{check_goodness, complex_from_action, CoxeterComplexData, Goodness, GoodnessVerdict};
use crate::geometry::{
    curvature_samples, oneill_a, oneill_a_finite_difference, orbit_distance, random_horizontal_configuration,
    CurvatureSample, CurvatureStats, DEFAULT_RESTARTS,
};
use crate::isotropy::{cohomogeneity, lrs_reduction, principal_point, SearchOptions, Signature, StratumWitness, DEFAULT_SAMPLES};
use crate::liealg::{GroupSpec, LieGroupRep};
use crate::polarity::{is_infinitesimally_polar, is_polar, PolarityVerdict, Verdict, DEFAULT_TEST_POINTS};
use crate::{Error, Real, Result, Tolerances};

pub const SCHEMA: u32 = 1;
/// Half-width of the band a constant curvature must fall in.
pub const CURVATURE_TOL: Real = 1e-6;
/// Largest relative deviation of the analytic A-tensor from finite differences.
pub const A_TENSOR_TOL: Real = 1e-6;
/// Configurations per entry in the finite-difference comparison.
pub const FD_CONFIGS: usize = 50;
const FD_STEP: Real = 1e-5;

/// Run parameters. Loaded from JSON; missing fields take their defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    /// Curvature samples per entry.
    pub samples: usize,
    pub tol_rank: Real,
    pub tol_polar: Real,
    /// Restarts of the stratum search.
    pub restarts: usize,
}

impl Default for Config {
    fn default() -> Self {
        let t = Tolerances::default();
        Self { seed: 0, samples: 200, tol_rank: t.rank, tol_polar: t.polar, restarts: 64 }
    }
}

impl Config {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances { rank: self.tol_rank, polar: self.tol_polar }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Info,
    Inconclusive,
    Fail,
}

impl Status {
    /// Process exit code: 0 pass, 1 fail, 2 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass | Status::Info => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    /// Overall status of a list of checks: any failure fails, then any
    /// inconclusive check makes the whole inconclusive.
    pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
        let worst = statuses.into_iter().filter(|s| *s != Status::Info).max();
        worst.unwrap_or(Status::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Check {
    fn new(name: &str, expected: impl ToString, computed: impl ToString, status: Status) -> Self {
        Self { name: name.into(), expected: expected.to_string(), computed: computed.to_string(), status }
    }

    fn compare<T: PartialEq + std::fmt::Display>(name: &str, expected: T, computed: T) -> Self {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Self::new(name, expected, computed, status)
    }
}

/// Result of a pipeline stage that may be skipped or fail.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step<T> {
    Done(T),
    Skipped(String),
    Failed(String),
}

impl<T> Step<T> {
    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(v) => Step::Done(v),
            Err(e) => Step::Failed(e.to_string()),
        }
    }

    pub fn done(&self) -> Option<&T> {
        match self {
            Step::Done(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfPolarSummary {
    pub verdict: PolarityVerdict,
    pub witnesses: Vec<Signature>,
    pub failing: Option<Signature>,
}

/// Dimensions along the reduction by the principal isotropy algebra.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReductionChain {
    pub ambient_dim: usize,
    pub fixed_dim: usize,
    pub algebra_dim: usize,
    pub principal_isotropy_dim: usize,
    pub reduced_algebra_dim: usize,
    pub reduced_cohomogeneity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoxeterSummary {
    pub complex: CoxeterComplexData,
    pub goodness: GoodnessVerdict,
    pub assumptions: Vec<String>,
}

/// Orbit distance from the principal point used by the pipeline to a
/// stratum witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessDistance {
    pub signature: Signature,
    pub stratum_codim: usize,
    pub distance: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Computed {
    pub ambient_dim: usize,
    pub algebra_dim: usize,
    pub closure_residual: Real,
    pub cohomogeneity: usize,
    pub quotient_dim: usize,
    pub polar: Step<PolarityVerdict>,
    pub inf_polar: Step<InfPolarSummary>,
    pub strata: Step<Vec<StratumWitness>>,
    pub codim_one_signatures: usize,
    pub boundary: bool,
    pub curvature: Step<CurvatureStats>,
    /// Largest relative deviation between analytic and finite-difference
    /// A-tensors, with a unit floor on the denominator.
    pub a_tensor_error: Step<Real>,
    pub reduction: Step<ReductionChain>,
    pub coxeter: Step<CoxeterSummary>,
    pub distances: Vec<WitnessDistance>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub id: Option<String>,
    pub label: String,
    pub spec: GroupSpec,
    pub config: Config,
    pub computed: Computed,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl AnalysisReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs the pipeline on the registry entry `id` and compares with its
/// tabulated values.
pub fn verify_entry(id: &str, config: &Config) -> Result<AnalysisReport> {
    let entry = lookup(id).ok_or_else(|| Error::UnknownEntry(id.into()))?;
    let rep = LieGroupRep::from_spec(&entry.spec)?;
    let computed = run_pipeline(&rep, config);
    let mut checks = expected_checks(&entry.expected, &computed);
    checks.extend(property_checks(&computed));
    checks.push(Check::new("quotient", &entry.expected.quotient, format!("dimension {}", computed.quotient_dim), Status::Info));
    Ok(assemble(Some(entry.id), entry.description, entry.spec, config, computed, checks))
}

/// Runs the pipeline on an arbitrary representation, without expected
/// values. Polarity verdicts are reported as information unless
/// inconclusive.
pub fn analyze(spec: &GroupSpec, config: &Config) -> Result<AnalysisReport> {
    let rep = LieGroupRep::from_spec(spec)?;
    let computed = run_pipeline(&rep, config);
    let mut checks = vec![
        verdict_info("polar", &computed.polar.clone().map_done(|v| v.verdict)),
        verdict_info("infinitesimally polar", &computed.inf_polar.clone().map_done(|v| v.verdict.verdict)),
        Check::new("cohomogeneity", "", computed.cohomogeneity, Status::Info),
    ];
    checks.extend(property_checks(&computed));
    Ok(assemble(None, rep.label().to_string(), spec.clone(), config, computed, checks))
}

impl<T> Step<T> {
    fn map_done<U>(self, f: impl FnOnce(T) -> U) -> Step<U> {
        match self {
            Step::Done(v) => Step::Done(f(v)),
            Step::Skipped(s) => Step::Skipped(s),
            Step::Failed(s) => Step::Failed(s),
        }
    }
}

fn assemble(
    id: Option<String>,
    label: String,
    spec: GroupSpec,
    config: &Config,
    computed: Computed,
    checks: Vec<Check>,
) -> AnalysisReport {
    let status = Status::combine(checks.iter().map(|c| c.status));
    AnalysisReport { schema: SCHEMA, id, label, spec, config: config.clone(), computed, checks, status }
}

/// Curvature samples used by the pipeline, for dumping.
pub fn pipeline_samples(rep: &LieGroupRep, config: &Config) -> Result<Vec<CurvatureSample>> {
    curvature_samples(rep, config.seed, config.samples, &config.tolerances())
}

fn run_pipeline(rep: &LieGroupRep, config: &Config) -> Computed {
    let tol = config.tolerances();
    let seed = config.seed;
    let cohom = cohomogeneity(rep, seed, DEFAULT_SAMPLES, &tol);
    let quotient_dim = cohom.saturating_sub(1);
    let search = SearchOptions { seed, restarts: config.restarts, ..SearchOptions::default() };
    let polar = Step::from_result(is_polar(rep, seed, DEFAULT_TEST_POINTS, &tol));
    let inf = is_infinitesimally_polar(rep, &search, &tol);
    let (inf_polar, strata) = match inf {
        Ok(r) => (
            Step::Done(InfPolarSummary {
                verdict: r.verdict,
                witnesses: r.witnesses.iter().map(StratumWitness::signature).collect(),
                failing: r.failing.as_ref().map(StratumWitness::signature),
            }),
            Step::Done(r.witnesses),
        ),
        Err(e) => (Step::Failed(e.to_string()), Step::Failed(e.to_string())),
    };
    let witnesses: &[StratumWitness] = strata.done().map(Vec::as_slice).unwrap_or(&[]);
    let codim_one: std::collections::BTreeSet<Signature> =
        witnesses.iter().filter(|w| w.stratum_codim == 1).map(StratumWitness::signature).collect();
    let (curvature, a_tensor_error) = if quotient_dim >= 2 {
        (
            Step::from_result(pipeline_samples(rep, config).map(|s| CurvatureStats::from_samples(&s))),
            Step::from_result(a_tensor_error(rep, seed, &tol)),
        )
    } else {
        let why = format!("quotient dimension {quotient_dim} is below 2");
        (Step::Skipped(why.clone()), Step::Skipped(why))
    };
    let reduction = Step::from_result(lrs_reduction(rep, seed, &tol).map(|red| ReductionChain {
        ambient_dim: rep.ambient_dim(),
        fixed_dim: red.fixed_basis.ncols(),
        algebra_dim: rep.algebra_dim(),
        principal_isotropy_dim: red.subalgebra_dim,
        reduced_algebra_dim: red.rep.algebra_dim(),
        reduced_cohomogeneity: cohomogeneity(&red.rep, seed, DEFAULT_SAMPLES, &tol),
    }));
    let coxeter = if cohom == 3 {
        Step::from_result(complex_from_action(rep, seed, &tol).and_then(|m| {
            let goodness = check_goodness(&m.data)?;
            Ok(CoxeterSummary { complex: m.data, goodness, assumptions: m.assumptions })
        }))
    } else {
        Step::Skipped(format!("quotient dimension {quotient_dim} is not 2"))
    };
    let (p, _) = principal_point(rep, seed, DEFAULT_SAMPLES, &tol);
    let distances = witnesses
        .iter()
        .map(|w| WitnessDistance {
            signature: w.signature(),
            stratum_codim: w.stratum_codim,
            distance: orbit_distance(rep, &p, &w.point_vector(), seed, DEFAULT_RESTARTS).distance,
        })
        .collect();
    Computed {
        ambient_dim: rep.ambient_dim(),
        algebra_dim: rep.algebra_dim(),
        closure_residual: rep.closure_residual(),
        cohomogeneity: cohom,
        quotient_dim,
        polar,
        inf_polar,
        boundary: !codim_one.is_empty(),
        codim_one_signatures: codim_one.len(),
        strata,
        curvature,
        a_tensor_error,
        reduction,
        coxeter,
        distances,
    }
}

/// Largest relative deviation between the analytic A-tensor and central
/// differences over [`FD_CONFIGS`] random regular configurations.
pub fn a_tensor_error(rep: &LieGroupRep, seed: u64, tol: &Tolerances) -> Result<Real> {
    let mut worst: Real = 0.0;
    for i in 0..FD_CONFIGS {
        let (p, x, y) = random_horizontal_configuration(rep, seed ^ 0xfd, i as u64, tol)?;
        let a = oneill_a(rep, &p, &x, &y, tol)?;
        let fd = oneill_a_finite_difference(rep, &p, &x, &y, FD_STEP, tol)?;
        worst = worst.max((&a - &fd).norm() / a.norm().max(1.0));
    }
    Ok(worst)
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Polar => "yes",
        Verdict::NonPolar => "no",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn verdict_info(name: &str, step: &Step<Verdict>) -> Check {
    match step {
        Step::Done(Verdict::Inconclusive) => Check::new(name, "", "inconclusive", Status::Inconclusive),
        Step::Done(v) => Check::new(name, "", verdict_word(*v), Status::Info),
        Step::Skipped(s) => Check::new(name, "", format!("skipped: {s}"), Status::Info),
        Step::Failed(e) => Check::new(name, "", format!("error: {e}"), Status::Fail),
    }
}

fn verdict_check(name: &str, expected: bool, step: &Step<Verdict>) -> Check {
    let exp = if expected { "yes" } else { "no" };
    match step {
        Step::Done(Verdict::Inconclusive) => Check::new(name, exp, "inconclusive", Status::Inconclusive),
        Step::Done(v) => Check::compare(name, exp, verdict_word(*v)),
        Step::Skipped(s) => Check::new(name, exp, format!("skipped: {s}"), Status::Fail),
        Step::Failed(e) => Check::new(name, exp, format!("error: {e}"), Status::Fail),
    }
}

fn expected_checks(e: &Expected, c: &Computed) -> Vec<Check> {
    let mut checks = vec![
        Check::compare("cohomogeneity", e.cohom, c.cohomogeneity),
        verdict_check("polar", e.polar, &c.polar.clone().map_done(|v| v.verdict)),
        verdict_check("infinitesimally polar", e.inf_polar, &c.inf_polar.clone().map_done(|v| v.verdict.verdict)),
        Check::compare("boundary", e.boundary, c.boundary),
    ];
    if let Some(k) = e.curvature {
        let exp = format!("{k} +- {CURVATURE_TOL:e}");
        checks.push(match &c.curvature {
            Step::Done(s) => {
                let ok = s.samples > 0 && (s.min - k).abs() <= CURVATURE_TOL && (s.max - k).abs() <= CURVATURE_TOL;
                Check::new("curvature", exp, format!("[{}, {}]", s.min, s.max), if ok { Status::Pass } else { Status::Fail })
            }
            Step::Skipped(s) => Check::new("curvature", exp, format!("skipped: {s}"), Status::Fail),
            Step::Failed(err) => Check::new("curvature", exp, format!("error: {err}"), Status::Fail),
        });
    }
    if let Some(good) = e.good {
        let exp = if good { "good" } else { "bad" };
        checks.push(match &c.coxeter {
            Step::Done(s) => match s.goodness.verdict {
                Goodness::Unknown => Check::new("coxeter", exp, "unknown", Status::Inconclusive),
                Goodness::Good => Check::compare("coxeter", exp, "good"),
                Goodness::Bad => Check::compare("coxeter", exp, "bad"),
            },
            Step::Skipped(s) => Check::new("coxeter", exp, format!("skipped: {s}"), Status::Fail),
            Step::Failed(err) => Check::new("coxeter", exp, format!("error: {err}"), Status::Fail),
        });
    }
    checks
}

/// Checks that hold for every representation.
fn property_checks(c: &Computed) -> Vec<Check> {
    let mut checks = Vec::new();
    match &c.curvature {
        Step::Done(s) => {
            let ok = s.min >= 1.0 - 1e-9;
            checks.push(Check::new("curvature at least 1", ">= 1", s.min, if ok { Status::Pass } else { Status::Fail }));
        }
        Step::Failed(e) => checks.push(Check::new("curvature at least 1", ">= 1", format!("error: {e}"), Status::Fail)),
        Step::Skipped(_) => {}
    }
    match &c.a_tensor_error {
        Step::Done(err) => {
            let ok = *err <= A_TENSOR_TOL;
            checks.push(Check::new(
                "a-tensor finite differences",
                format!("<= {A_TENSOR_TOL:e}"),
                format!("{err:e}"),
                if ok { Status::Pass } else { Status::Fail },
            ));
        }
        Step::Failed(e) => checks.push(Check::new("a-tensor finite differences", "", format!("error: {e}"), Status::Fail)),
        Step::Skipped(_) => {}
    }
    checks.push(Check::new("codim-1 signatures", "", c.codim_one_signatures, Status::Info));
    match &c.reduction {
        Step::Done(r) => checks.push(Check::new(
            "reduction chain",
            "",
            format!(
                "ambient {} -> {}, algebra {} -> {}, cohomogeneity {}",
                r.ambient_dim, r.fixed_dim, r.algebra_dim, r.reduced_algebra_dim, r.reduced_cohomogeneity
            ),
            Status::Info,
        )),
        Step::Failed(e) => checks.push(Check::new("reduction chain", "", format!("error: {e}"), Status::Fail)),
        Step::Skipped(_) => {}
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_overrides() {
        let c = Config::from_json(r#"{"seed": 7, "tol_rank": 1e-9}"#).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.samples, 200);
        assert_eq!(c.tol_rank, 1e-9);
        assert!(Config::from_json(r#"{"sead": 1}"#).is_err());
    }

    #[test]
    fn status_combination() {
        assert_eq!(Status::combine([Status::Pass, Status::Info]), Status::Pass);
        assert_eq!(Status::combine([Status::Pass, Status::Inconclusive]), Status::Inconclusive);
        assert_eq!(Status::combine([Status::Inconclusive, Status::Fail]), Status::Fail);
        assert_eq!(Status::combine([]), Status::Pass);
    }

    #[test]
    fn unknown_entry() {
        assert!(matches!(verify_entry("T9-row99", &Config::default()), Err(Error::UnknownEntry(_))));
    }

    #[test]
    fn polar_control_passes() {
        let r = verify_entry("polar-control-so3-vec", &Config::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{:#?}", r.checks);
        assert!(matches!(r.computed.curvature, Step::Skipped(_)));
    }
}
