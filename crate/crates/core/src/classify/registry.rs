//! Known representations with their tabulated invariants.

use serde::{Deserialize, Serialize};

use crate::liealg::{Factor, FactorKind, Field, GroupSpec, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Table1,
    Table2,
    Table3,
    Example,
    Control,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub cohom: usize,
    pub polar: bool,
    pub inf_polar: bool,
    /// Constant sectional curvature of the quotient, when asserted.
    pub curvature: Option<f64>,
    pub quotient: String,
    pub boundary: bool,
    /// Whether the 2-dimensional quotient is a good orbifold.
    pub good: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegistryEntry {
    pub id: String,
    pub source: Source,
    /// Group and module in words, with the parameter used.
    pub description: String,
    /// Entries describing the same representation.
    pub aliases: Vec<String>,
    pub spec: GroupSpec,
    pub expected: Expected,
}

fn f(kind: FactorKind, n: usize) -> Factor {
    Factor::new(kind, n)
}

fn st(i: usize) -> Letter {
    Letter::standard(i)
}

fn vec_(i: usize) -> Letter {
    Letter::vector(i)
}

fn w(i: usize, weights: &[i64]) -> Letter {
    Letter::weighted(i, weights.to_vec())
}

use Field::{Complex as C, Quaternionic as H, Real as R};
use FactorKind::{Sp, Spin7, Spin9, Su, Torus, So, G2, U};

fn doubling(factors: Vec<Factor>, field: Field, word: Vec<Letter>) -> GroupSpec {
    GroupSpec::new(factors).summand(field, word).doubled()
}

struct Row {
    id: &'static str,
    source: Source,
    description: &'static str,
    aliases: &'static [&'static str],
    spec: GroupSpec,
    cohom: usize,
    polar: bool,
    inf_polar: bool,
    curvature: Option<f64>,
    quotient: &'static str,
    boundary: bool,
    good: Option<bool>,
}

impl From<Row> for RegistryEntry {
    fn from(r: Row) -> Self {
        RegistryEntry {
            id: r.id.into(),
            source: r.source,
            description: r.description.into(),
            aliases: r.aliases.iter().map(|s| s.to_string()).collect(),
            spec: r.spec,
            expected: Expected {
                cohom: r.cohom,
                polar: r.polar,
                inf_polar: r.inf_polar,
                curvature: r.curvature,
                quotient: r.quotient.into(),
                boundary: r.boundary,
                good: r.good,
            },
        }
    }
}

fn spin9_double() -> GroupSpec {
    doubling(vec![f(Spin9, 0)], R, vec![st(0)])
}
fn su3_double() -> GroupSpec {
    doubling(vec![f(Su, 3)], C, vec![st(0)])
}
fn u2_double() -> GroupSpec {
    doubling(vec![f(U, 2)], C, vec![st(0)])
}
fn sp2_double() -> GroupSpec {
    doubling(vec![f(Sp, 2)], H, vec![st(0)])
}
fn sp2u1_double() -> GroupSpec {
    doubling(vec![f(Sp, 2), f(Torus, 1)], C, vec![st(0), w(1, &[1])])
}
fn sp2sp1_double() -> GroupSpec {
    doubling(vec![f(Sp, 2), f(Sp, 1)], H, vec![st(0), st(1)])
}
fn t2sp2() -> GroupSpec {
    GroupSpec::new(vec![f(Torus, 2), f(Sp, 2)])
        .summand(C, vec![w(0, &[1, 0]), st(1)])
        .summand(C, vec![st(1), w(0, &[0, 1])])
}

/// Every registry entry, sorted by id. Rows with a size parameter use the
/// smallest admissible value.
pub fn registry() -> Vec<RegistryEntry> {
    let good = Some(true);
    let bad = Some(false);
    let t2 = "good orbifold quotient";
    let t3 = "bad orbifold quotient";
    let rows = vec![
        // Table 1: quotients of constant curvature 4.
        Row { id: "T1-spin9", source: Source::Table1, description: "Spin(9) on R^16 + R^16", aliases: &["T2-row2"], spec: spin9_double(), cohom: 4, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^3_++(1/2)", boundary: true, good: None },
        Row { id: "T1-su3", source: Source::Table1, description: "SU(3) on C^3 + C^3", aliases: &["T2-row4a"], spec: su3_double(), cohom: 4, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^3_+(1/2)", boundary: true, good: None },
        Row { id: "T1-u2", source: Source::Table1, description: "U(2) on C^2 + C^2", aliases: &["T2-row4b"], spec: u2_double(), cohom: 4, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^3_+(1/2)", boundary: true, good: None },
        Row { id: "T1-sp2", source: Source::Table1, description: "Sp(2) on H^2 + H^2", aliases: &["T2-row6"], spec: sp2_double(), cohom: 6, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^5_+(1/2)", boundary: true, good: None },
        Row { id: "T1-sp2u1", source: Source::Table1, description: "Sp(2)U(1) on C^4 + C^4", aliases: &["T2-row7"], spec: sp2u1_double(), cohom: 5, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^4_++(1/2)", boundary: true, good: None },
        Row { id: "T1-sp2sp1", source: Source::Table1, description: "Sp(2)Sp(1) on R^8 + R^8", aliases: &["T2-row10"], spec: sp2sp1_double(), cohom: 4, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^3_++(1/2)", boundary: true, good: None },
        Row { id: "T1-t2sp2", source: Source::Table1, description: "T^2 x Sp(2) on C^4 + C^4", aliases: &["T2-row8"], spec: t2sp2(), cohom: 4, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^3_+++(1/2)", boundary: true, good: None },
        // Table 2: good orbifold quotients.
        Row { id: "T2-row1a", source: Source::Table2, description: "SO(n) on R^n + R^n, n = 2", aliases: &[], spec: doubling(vec![f(So, 2)], R, vec![st(0)]), cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: false, good },
        Row { id: "T2-row1b", source: Source::Table2, description: "G2 on R^7 + R^7", aliases: &[], spec: doubling(vec![f(G2, 0)], R, vec![st(0)]), cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good },
        Row { id: "T2-row1c", source: Source::Table2, description: "Spin(7) on Delta_7 + Delta_7", aliases: &[], spec: doubling(vec![f(Spin7, 0)], R, vec![st(0)]), cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good },
        Row { id: "T2-row2", source: Source::Table2, description: "Spin(9) on Delta_9 + Delta_9", aliases: &["T1-spin9"], spec: spin9_double(), cohom: 4, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good: None },
        Row { id: "T2-row3", source: Source::Table2, description: "SU(2) on C^2 + C^2", aliases: &[], spec: doubling(vec![f(Su, 2)], C, vec![st(0)]), cohom: 5, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: false, good: None },
        Row { id: "T2-row4a", source: Source::Table2, description: "SU(n) on C^n + C^n, n = 3", aliases: &["T1-su3"], spec: su3_double(), cohom: 4, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good: None },
        Row { id: "T2-row4b", source: Source::Table2, description: "U(n) on C^n + C^n, n = 2", aliases: &["T1-u2"], spec: u2_double(), cohom: 4, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good: None },
        Row {
            id: "T2-row5a", source: Source::Table2, description: "U(1) x SU(n) x U(1) on C (x) C^n + C^n (x) C, n = 2", aliases: &[],
            spec: GroupSpec::new(vec![f(Torus, 2), f(Su, 2)]).summand(C, vec![w(0, &[1, 0]), st(1)]).summand(C, vec![st(1), w(0, &[0, 1])]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good,
        },
        Row {
            id: "T2-row5b", source: Source::Table2, description: "U(1) x SU(n) on C^r (x) C^n + C^s (x) C^n, n = 3, r = 1, s = 2", aliases: &[],
            spec: GroupSpec::new(vec![f(Torus, 1), f(Su, 3)]).summand(C, vec![w(0, &[1]), st(1)]).summand(C, vec![w(0, &[2]), st(1)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good,
        },
        Row { id: "T2-row6", source: Source::Table2, description: "Sp(n) on H^n + H^n, n = 2", aliases: &["T1-sp2"], spec: sp2_double(), cohom: 6, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good: None },
        Row { id: "T2-row7", source: Source::Table2, description: "Sp(n) x U(1) on H^n (x) C + H^n (x) C, n = 2", aliases: &["T1-sp2u1"], spec: sp2u1_double(), cohom: 5, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good: None },
        Row { id: "T2-row8", source: Source::Table2, description: "U(1) x Sp(n) x U(1) on C (x) H^n + H^n (x) C, n = 2", aliases: &["T1-t2sp2"], spec: t2sp2(), cohom: 4, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good: None },
        Row {
            id: "T2-row9a", source: Source::Table2, description: "Sp(1) x Sp(n) x Sp(1) on H (x) H^n + H^n (x) H, n = 2", aliases: &[],
            spec: GroupSpec::new(vec![f(Sp, 1), f(Sp, 2), f(Sp, 1)]).summand(H, vec![st(0), st(1)]).summand(H, vec![st(1), st(2)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good,
        },
        Row {
            id: "T2-row9b", source: Source::Table2, description: "U(1) x Sp(n) x Sp(1) on C (x) H^n + H^n (x) H, n = 2", aliases: &[],
            spec: GroupSpec::new(vec![f(Torus, 1), f(Sp, 2), f(Sp, 1)]).summand(C, vec![w(0, &[1]), st(1)]).summand(H, vec![st(1), st(2)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good,
        },
        Row {
            id: "T2-row9c", source: Source::Table2, description: "Sp(n) x Sp(1) on H^n (x) H + H^n, n = 2", aliases: &[],
            spec: GroupSpec::new(vec![f(Sp, 2), f(Sp, 1)]).summand(H, vec![st(0), st(1)]).summand(H, vec![st(0)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good,
        },
        Row { id: "T2-row10", source: Source::Table2, description: "Sp(n) x Sp(1) on H^n (x) H + H^n (x) H, n = 2", aliases: &["T1-sp2sp1"], spec: sp2sp1_double(), cohom: 4, polar: false, inf_polar: true, curvature: None, quotient: t2, boundary: true, good: None },
        // Table 3: bad orbifold quotients.
        Row {
            id: "T3-row11", source: Source::Table3, description: "U(1) on C^r + C^s, r = 1, s = 2", aliases: &["wcp-1-2"],
            spec: GroupSpec::new(vec![f(Torus, 1)]).summand(C, vec![w(0, &[1])]).summand(C, vec![w(0, &[2])]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t3, boundary: false, good: bad,
        },
        Row {
            id: "T3-row12", source: Source::Table3, description: "SU(2) x U(1) on C^2 (x) C + R^3", aliases: &[],
            spec: GroupSpec::new(vec![f(Su, 2), f(Torus, 1)]).summand(C, vec![st(0), w(1, &[1])]).summand(R, vec![vec_(0)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: "half of a tear-drop", boundary: true, good: bad,
        },
        Row {
            id: "T3-row13a", source: Source::Table3, description: "Sp(2) x Sp(1) on H^2 (x) H + R^5", aliases: &[],
            spec: GroupSpec::new(vec![f(Sp, 2), f(Sp, 1)]).summand(H, vec![st(0), st(1)]).summand(R, vec![vec_(0)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t3, boundary: true, good: bad,
        },
        Row {
            id: "T3-row13b", source: Source::Table3, description: "Sp(2) x U(1) on H^2 (x) C + R^5", aliases: &[],
            spec: GroupSpec::new(vec![f(Sp, 2), f(Torus, 1)]).summand(C, vec![st(0), w(1, &[1])]).summand(R, vec![vec_(0)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t3, boundary: true, good: bad,
        },
        Row {
            id: "T3-row13c", source: Source::Table3, description: "Sp(2) on H^2 + R^5", aliases: &[],
            spec: GroupSpec::new(vec![f(Sp, 2)]).summand(H, vec![st(0)]).summand(R, vec![vec_(0)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t3, boundary: true, good: bad,
        },
        Row {
            id: "T3-row14", source: Source::Table3, description: "Spin(9) on Delta_9 + R^9", aliases: &[],
            spec: GroupSpec::new(vec![f(Spin9, 0)]).summand(R, vec![st(0)]).summand(R, vec![vec_(0)]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: t3, boundary: true, good: bad,
        },
        // Worked examples and controls.
        Row {
            id: "hopf", source: Source::Example, description: "U(1) on C^2 with weights (1, 1)", aliases: &[],
            spec: GroupSpec::new(vec![f(Torus, 1)]).summand(C, vec![w(0, &[1])]).summand(C, vec![w(0, &[1])]),
            cohom: 3, polar: false, inf_polar: true, curvature: Some(4.0), quotient: "S^2(1/2)", boundary: false, good: None,
        },
        Row {
            id: "wcp-1-2", source: Source::Example, description: "U(1) on C^2 with weights (1, 2)", aliases: &["T3-row11"],
            spec: GroupSpec::new(vec![f(Torus, 1)]).summand(C, vec![w(0, &[1])]).summand(C, vec![w(0, &[2])]),
            cohom: 3, polar: false, inf_polar: true, curvature: None, quotient: "tear-drop", boundary: false, good: bad,
        },
        Row {
            id: "polar-control-so3-vec", source: Source::Control, description: "SO(3) on R^3", aliases: &[],
            spec: GroupSpec::new(vec![f(So, 3)]).summand(R, vec![st(0)]),
            cohom: 1, polar: true, inf_polar: true, curvature: None, quotient: "point", boundary: false, good: None,
        },
        Row {
            id: "polar-control-torus2", source: Source::Control, description: "T^2 on C^2 with weights (1, 0), (0, 1)", aliases: &[],
            spec: GroupSpec::new(vec![f(Torus, 2)]).summand(C, vec![w(0, &[1, 0])]).summand(C, vec![w(0, &[0, 1])]),
            cohom: 2, polar: true, inf_polar: true, curvature: None, quotient: "interval [0, pi/2]", boundary: true, good: None,
        },
        Row {
            id: "polar-control-torus3", source: Source::Control, description: "T^3 on C^3 with the coordinate weights", aliases: &[],
            spec: GroupSpec::new(vec![f(Torus, 3)])
                .summand(C, vec![w(0, &[1, 0, 0])])
                .summand(C, vec![w(0, &[0, 1, 0])])
                .summand(C, vec![w(0, &[0, 0, 1])]),
            cohom: 3, polar: true, inf_polar: true, curvature: Some(1.0), quotient: "S^2_+++(1)", boundary: true, good: Some(true),
        },
        Row {
            id: "torus-su3", source: Source::Control, description: "maximal torus of SU(3) on C^3", aliases: &[],
            spec: GroupSpec::new(vec![f(Torus, 2)])
                .summand(C, vec![w(0, &[1, 0])])
                .summand(C, vec![w(0, &[0, 1])])
                .summand(C, vec![w(0, &[-1, -1])]),
            cohom: 4, polar: false, inf_polar: false, curvature: None, quotient: "not an orbifold", boundary: false, good: None,
        },
    ];
    let mut entries: Vec<RegistryEntry> = rows.into_iter().map(RegistryEntry::from).collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    entries
}

pub fn lookup(id: &str) -> Option<RegistryEntry> {
    registry().into_iter().find(|e| e.id == id)
}

/// Groups of entries whose representations are orbit-equivalent up to the
/// choice of parameter, so their cohomogeneities agree.
pub fn orbit_equivalent_groups() -> Vec<Vec<&'static str>> {
    vec![
        vec!["T2-row1a", "T2-row1b", "T2-row1c"],
        vec!["T2-row4a", "T2-row4b"],
        vec!["T2-row5a", "T2-row5b"],
        vec!["T2-row9a", "T2-row9b", "T2-row9c"],
        vec!["T3-row13a", "T3-row13b", "T3-row13c"],
    ]
}
