//! Verification of the whole registry.

use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{orbit_equivalent_groups, registry, verify_entry, AnalysisReport, Check, Config, Source, Status, Step, SCHEMA};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TablesSummary {
    pub schema: u32,
    pub config: Config,
    /// One report per entry, sorted by id.
    pub reports: Vec<AnalysisReport>,
    /// Agreement of cohomogeneities across orbit-equivalent rows.
    pub equivalences: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub status: Status,
}

/// Verifies every registry entry, in parallel, optionally restricted to
/// the given sources.
pub fn verify_tables(config: &Config, sources: Option<&[Source]>) -> Result<TablesSummary> {
    let ids: Vec<String> = registry()
        .into_iter()
        .filter(|e| sources.is_none_or(|s| s.contains(&e.source)))
        .map(|e| e.id)
        .collect();
    let reports: Vec<AnalysisReport> = ids.par_iter().map(|id| verify_entry(id, config)).collect::<Result<_>>()?;
    let equivalences = orbit_equivalent_groups()
        .into_iter()
        .filter_map(|group| {
            let cohoms: Vec<(String, usize)> = group
                .iter()
                .filter_map(|id| reports.iter().find(|r| r.id.as_deref() == Some(id)))
                .map(|r| (r.id.clone().unwrap_or_default(), r.computed.cohomogeneity))
                .collect();
            if cohoms.len() < 2 {
                return None;
            }
            let same = cohoms.iter().all(|(_, c)| *c == cohoms[0].1);
            let listed = cohoms.iter().map(|(id, c)| format!("{id}: {c}")).collect::<Vec<_>>().join(", ");
            Some(Check {
                name: format!("orbit-equivalent cohomogeneity ({})", group.join(", ")),
                expected: "equal".into(),
                computed: listed,
                status: if same { Status::Pass } else { Status::Fail },
            })
        })
        .collect::<Vec<_>>();
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let status = Status::combine(reports.iter().map(|r| r.status).chain(equivalences.iter().map(|c| c.status)));
    Ok(TablesSummary {
        schema: SCHEMA,
        config: config.clone(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        inconclusive: count(Status::Inconclusive),
        reports,
        equivalences,
        status,
    })
}

impl TablesSummary {
    /// Expected and computed columns side by side, one row per entry.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<24} {:>9} {:>9} {:>11} {:>13} {:>27} {:>9} {:>9} {:>13}",
            "entry", "cohom", "polar", "inf-polar", "boundary", "curvature", "codim-1", "coxeter", "status"
        );
        for r in &self.reports {
            let cell = |name: &str| {
                r.check(name).map(|c| format!("{}/{}", short(&c.expected), short(&c.computed))).unwrap_or_else(|| "-".into())
            };
            let curvature = match (&r.computed.curvature, r.check("curvature")) {
                (Step::Done(s), Some(c)) => format!("{}/[{:.6},{:.6}]", short(&c.expected), s.min, s.max),
                (Step::Done(s), None) => format!("[{:.4},{:.4}]", s.min, s.max),
                _ => "-".into(),
            };
            let coxeter = match (&r.computed.coxeter, r.check("coxeter")) {
                (_, Some(c)) => format!("{}/{}", c.expected, short(&c.computed)),
                (Step::Done(s), None) => format!("{:?}", s.goodness.verdict).to_lowercase(),
                _ => "-".into(),
            };
            let _ = writeln!(
                out,
                "{:<24} {:>9} {:>9} {:>11} {:>13} {:>27} {:>9} {:>9} {:>13}",
                r.id.as_deref().unwrap_or("-"),
                cell("cohomogeneity"),
                cell("polar"),
                cell("infinitesimally polar"),
                cell("boundary"),
                curvature,
                r.computed.codim_one_signatures,
                coxeter,
                format!("{:?}", r.status).to_lowercase(),
            );
        }
        for c in &self.equivalences {
            let _ = writeln!(out, "{}: {} [{:?}]", c.name, c.computed, c.status);
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} inconclusive: {:?}",
            self.passed, self.failed, self.inconclusive, self.status
        );
        out
    }
}

fn short(s: &str) -> String {
    let s = s.split(" +- ").next().unwrap_or(s);
    if s.starts_with("error") || s.starts_with("skipped") {
        "err".into()
    } else {
        s.into()
    }
}
