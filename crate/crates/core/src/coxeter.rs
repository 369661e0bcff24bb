//! Goodness of 2-dimensional and hand-entered Coxeter orbifolds.
//!
//! A Coxeter orbifold over a simply connected space is good iff
//! (C1) every codimension-2 stratum lies in two different mirrors, and
//! (C2) two mirrors meeting in several codimension-2 strata meet with the
//! same local order everywhere. The stronger condition (C3) asks that in
//! the completion of every face any two boundary strata intersect.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::geometry::{corner_order, measure_corner, same_orbit, DEFAULT_RESTARTS};
use crate::isotropy::{
    cohomogeneity, find_singular_points, orbit_dim, stratum_witness, torus_lines, SearchOptions, Signature, DEFAULT_SAMPLES,
};
use crate::linalg::singular_values;
use crate::liealg::LieGroupRep;
use crate::{Error, Real, Result, Tolerances, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corner {
    /// Local dihedral order: half the order of the local group.
    pub order: u32,
    /// The two mirror slots; both may name the same mirror.
    pub mirrors: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterComplexData {
    pub mirrors: Vec<String>,
    pub corners: Vec<Corner>,
    pub simply_connected: bool,
    /// Singular points off the boundary (cone points). A complex with cone
    /// points is not a Coxeter orbifold and is reported bad.
    #[serde(default, skip_serializing_if = "is_zero")]
    pub interior_singular: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl CoxeterComplexData {
    pub fn validate(&self) -> Result<()> {
        let names: BTreeSet<&str> = self.mirrors.iter().map(String::as_str).collect();
        if names.len() != self.mirrors.len() {
            return Err(Error::InvalidParameter("mirror names must be distinct".into()));
        }
        for (i, c) in self.corners.iter().enumerate() {
            if c.order < 2 {
                return Err(Error::InvalidParameter(format!("corner {i} has order {} < 2", c.order)));
            }
            if let Some(m) = c.mirrors.iter().find(|m| !names.contains(m.as_str())) {
                return Err(Error::InvalidParameter(format!("corner {i} names unknown mirror `{m}`")));
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let data: Self = serde_json::from_str(text)?;
        data.validate()?;
        Ok(data)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Goodness {
    Good,
    Bad,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodnessVerdict {
    pub c1: bool,
    pub c2: bool,
    pub verdict: Goodness,
    pub failing: Vec<String>,
}

pub fn check_goodness(data: &CoxeterComplexData) -> Result<GoodnessVerdict> {
    data.validate()?;
    let mut failing = Vec::new();
    for (i, c) in data.corners.iter().enumerate() {
        if c.mirrors[0] == c.mirrors[1] {
            failing.push(format!("C1: corner {i} lies twice in mirror `{}`", c.mirrors[0]));
        }
    }
    let c1 = failing.is_empty();
    let mut orders: BTreeMap<(&str, &str), BTreeSet<u32>> = BTreeMap::new();
    for c in &data.corners {
        let (a, b) = (c.mirrors[0].as_str(), c.mirrors[1].as_str());
        orders.entry((a.min(b), a.max(b))).or_default().insert(c.order);
    }
    let mut c2 = true;
    for ((a, b), set) in &orders {
        if set.len() > 1 {
            c2 = false;
            failing.push(format!("C2: mirrors `{a}` and `{b}` meet with orders {set:?}"));
        }
    }
    if data.interior_singular > 0 {
        failing.push(format!("{} singular point(s) off the boundary", data.interior_singular));
    }
    let verdict = if !data.simply_connected {
        Goodness::Unknown
    } else if c1 && c2 && data.interior_singular == 0 {
        Goodness::Good
    } else {
        Goodness::Bad
    };
    Ok(GoodnessVerdict { c1, c2, verdict, failing })
}

/// The completion of one face: its boundary strata and which pairs of them
/// intersect (a symmetric matrix).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCompletion {
    pub mirror: String,
    pub boundary: Vec<String>,
    pub meets: Vec<Vec<bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct C3Verdict {
    pub holds: bool,
    pub witnesses: Vec<String>,
}

pub fn check_c3(faces: &[FaceCompletion]) -> Result<C3Verdict> {
    let mut witnesses = Vec::new();
    for face in faces {
        let k = face.boundary.len();
        if face.meets.len() != k || face.meets.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidParameter(format!("face `{}`: intersection matrix must be {k} x {k}", face.mirror)));
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if !(face.meets[i][j] && face.meets[j][i]) {
                    witnesses.push(format!(
                        "face `{}`: `{}` and `{}` do not meet",
                        face.mirror, face.boundary[i], face.boundary[j]
                    ));
                }
            }
        }
    }
    Ok(C3Verdict { holds: witnesses.is_empty(), witnesses })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "< {} | {} >", self.generators.join(", "), self.relations.join(", "))
    }
}

/// Generators `s_W` per mirror; relations `s_W^2` per mirror and
/// `(s_W s_W')^n` per corner.
pub fn coxeter_presentation(data: &CoxeterComplexData) -> Result<Presentation> {
    let v = check_goodness(data)?;
    if !(v.c1 && v.c2) {
        return Err(Error::Precondition(format!("C1/C2 fail: {}", v.failing.join("; "))));
    }
    let generators: Vec<String> = data.mirrors.iter().map(|m| format!("s_{m}")).collect();
    let mut relations: Vec<String> = generators.iter().map(|g| format!("{g}^2")).collect();
    relations.extend(data.corners.iter().map(|c| format!("(s_{} s_{})^{}", c.mirrors[0], c.mirrors[1], c.order)));
    Ok(Presentation { generators, relations })
}

/// How a corner of a measured complex was resolved.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CornerAudit {
    pub point: Vec<Real>,
    pub signature: Signature,
    pub angle: Real,
    pub order: u32,
    /// Stratum codimension just off the corner along the two extremal
    /// directions.
    pub endpoint_codims: [usize; 2],
    pub cone_point: bool,
    /// Arc length of the mirror leaving along each extremal direction.
    pub arc_lengths: Option<[Real; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasuredComplex {
    pub data: CoxeterComplexData,
    pub corners: Vec<CornerAudit>,
    /// Assumptions behind the complex that the caller should audit.
    pub assumptions: Vec<String>,
}

/// Parameter at which the extremal directions are probed.
const PROBE: Real = 1e-3;
/// Radius at which arriving mirrors are matched to corner slots.
const MATCH_RADIUS: Real = 0.05;
/// Orbit distance below which two points are taken to be on one orbit.
const SAME_ORBIT: Real = 1e-6;
/// The same at the matching radius, where slots are about
/// `MATCH_RADIUS * angle` apart.
const MATCH_TOL: Real = 1e-3;
const ARC_SAMPLES: usize = 1440;

struct CornerNode {
    point: Vector,
    audit: CornerAudit,
    /// Extremal directions, for reflection corners.
    slots: Option<[Vector; 2]>,
}

/// A mirror arc leaving corner `from` along slot `slot`, ending at `end`
/// where it arrives with unit velocity `velocity`.
struct Arc {
    from: usize,
    slot: usize,
    end: Vector,
    velocity: Vector,
    length: Real,
}

/// Assembles the Coxeter complex of a 2-dimensional quotient.
///
/// Corners start from the codimension-2 witnesses. At each corner the two
/// directions realizing the corner angle are probed: if neither enters a
/// codimension-1 stratum the corner is a cone point; otherwise the two
/// mirrors leave along the great circles `cos(t) p + sin(t) u`, which are
/// quotient geodesics inside the mirrors. Each is followed to the next
/// rank drop, i.e. the next corner, which joins the search if it is on a
/// new orbit. Every traced arc is one mirror; arriving arcs are matched to
/// the slots of the corner they reach by orbit distances of nearby probe
/// points. Codimension-1 signatures met by no arc are closed mirrors
/// without corners.
pub fn complex_from_action(rep: &LieGroupRep, seed: u64, tol: &Tolerances) -> Result<MeasuredComplex> {
    let cohom = cohomogeneity(rep, seed, DEFAULT_SAMPLES, tol);
    if cohom != 3 {
        return Err(Error::Precondition(format!("cohomogeneity is {cohom}, not 3")));
    }
    let witnesses = find_singular_points(rep, cohom, &SearchOptions { seed, ..SearchOptions::default() }, tol)?;
    let same_orbit_within = |a: &Vector, b: &Vector, tol: Real| same_orbit(rep, a, b, tol, seed, DEFAULT_RESTARTS);
    let same_orbit = |a: &Vector, b: &Vector| same_orbit_within(a, b, SAME_ORBIT);

    let mut queue: std::collections::VecDeque<Vector> =
        witnesses.iter().filter(|w| w.stratum_codim == 2).map(|w| w.point_vector()).collect();
    let mut nodes: Vec<CornerNode> = Vec::new();
    let mut arcs: Vec<Arc> = Vec::new();
    while let Some(p) = queue.pop_front() {
        if nodes.iter().any(|n| same_orbit(&n.point, &p)) {
            continue;
        }
        if nodes.len() >= MAX_CORNERS {
            return Err(Error::Precondition(format!("more than {MAX_CORNERS} corners")));
        }
        let node = examine_corner(rep, &p, cohom, seed, tol)?;
        if let Some(slots) = &node.slots {
            for (k, u) in slots.iter().enumerate() {
                let arc = trace_mirror(rep, &p, u, cohom, tol)?;
                queue.push_back(arc.end.clone());
                arcs.push(Arc { from: nodes.len(), slot: k, ..arc });
            }
        }
        nodes.push(node);
    }

    // Resolve every arc end to a (corner, slot) pair.
    let mut ends: Vec<(usize, usize)> = Vec::with_capacity(arcs.len());
    for arc in &arcs {
        let c = nodes.iter().position(|n| same_orbit(&n.point, &arc.end)).ok_or_else(|| {
            Error::Precondition("a mirror arc ends outside the discovered corners".into())
        })?;
        let slots = nodes[c].slots.as_ref().ok_or_else(|| Error::Precondition("a mirror arc ends at a cone point".into()))?;
        let back = -&arc.velocity;
        let probe = |base: &Vector, dir: &Vector| base * MATCH_RADIUS.cos() + dir * MATCH_RADIUS.sin();
        let arriving = probe(&arc.end, &back);
        let slot = (0..2)
            .find(|&k| same_orbit_within(&arriving, &probe(&nodes[c].point, &slots[k]), MATCH_TOL))
            .ok_or_else(|| Error::Precondition("a mirror arc arrives along neither extremal direction".into()))?;
        ends.push((c, slot));
    }
    // Each arc and its reverse form one mirror.
    let mut mirror_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut mirror_count = 0;
    let mut inconsistent = 0;
    for (arc, &end) in arcs.iter().zip(&ends) {
        let start = (arc.from, arc.slot);
        match (mirror_of.get(&start).copied(), mirror_of.get(&end).copied()) {
            (Some(a), Some(b)) if a != b => inconsistent += 1,
            (Some(a), _) | (_, Some(a)) => {
                mirror_of.insert(start, a);
                mirror_of.insert(end, a);
            }
            (None, None) => {
                mirror_of.insert(start, mirror_count);
                mirror_of.insert(end, mirror_count);
                mirror_count += 1;
            }
        }
    }
    if inconsistent > 0 {
        return Err(Error::Precondition(format!("{inconsistent} mirror arc(s) traced inconsistently")));
    }
    // Codimension-1 strata that no arc passes through.
    let arc_signatures: BTreeSet<Signature> = arcs
        .iter()
        .map(|a| {
            let mid = nodes[a.from].point.clone() * (0.5 * a.length).cos()
                + nodes[a.from].slots.as_ref().expect("arcs leave reflection corners")[a.slot].clone() * (0.5 * a.length).sin();
            stratum_witness(rep, &mid, cohom, tol).map(|w| w.signature())
        })
        .collect::<Result<_>>()?;
    let closed = witnesses
        .iter()
        .filter(|w| w.stratum_codim == 1 && !arc_signatures.contains(&w.signature()))
        .count();
    let name = |i: usize| format!("W{i}");
    let corners = nodes
        .iter()
        .enumerate()
        .filter(|(_, n)| n.slots.is_some())
        .map(|(c, n)| Corner { order: n.audit.order, mirrors: [name(mirror_of[&(c, 0)]), name(mirror_of[&(c, 1)])] })
        .collect();
    let mut audits: Vec<CornerAudit> = nodes.into_iter().map(|n| n.audit).collect();
    for (arc, audit_index) in arcs.iter().map(|a| (a, a.from)) {
        let lengths = audits[audit_index].arc_lengths.get_or_insert([0.0; 2]);
        lengths[arc.slot] = arc.length;
    }
    let data = CoxeterComplexData {
        mirrors: (0..mirror_count + closed).map(name).collect(),
        interior_singular: audits.iter().filter(|a| a.cone_point).count(),
        corners,
        simply_connected: true,
    };
    let assumptions = vec![
        "underlying space simply connected (quotient of a sphere by a connected group)".into(),
        "codimension-1 strata met by no traced arc are connected closed mirrors, one per signature".into(),
    ];
    Ok(MeasuredComplex { data, corners: audits, assumptions })
}

const MAX_CORNERS: usize = 16;

fn examine_corner(rep: &LieGroupRep, p: &Vector, cohom: usize, seed: u64, tol: &Tolerances) -> Result<CornerNode> {
    let w = stratum_witness(rep, p, cohom, tol)?;
    let m = measure_corner(rep, p, seed, tol)?;
    let order = corner_order(m.angle)?;
    let dirs = m.endpoint_vectors();
    let mut codims = [0; 2];
    for (k, u) in dirs.iter().enumerate() {
        let q: Vector = p * PROBE.cos() + u * PROBE.sin();
        codims[k] = stratum_witness(rep, &q, cohom, tol)?.stratum_codim;
    }
    let slots = match codims {
        [1, 1] => Some(dirs),
        [0, 0] => None,
        _ => {
            return Err(Error::Precondition(format!(
                "corner {:?}: extremal directions enter strata of codimension {codims:?}",
                w.signature()
            )))
        }
    };
    let audit = CornerAudit {
        point: p.iter().copied().collect(),
        signature: w.signature(),
        angle: m.angle,
        order,
        endpoint_codims: codims,
        cone_point: slots.is_none(),
        arc_lengths: None,
    };
    Ok(CornerNode { point: p.clone(), audit, slots })
}

/// Follows `cos(t) p + sin(t) u` from the corner `p` to the first later
/// point where the isotropy grows: a drop of the orbit rank, or for torus
/// actions a line of the support vanishing, confirmed by the stratum
/// codimension reaching 2.
fn trace_mirror(rep: &LieGroupRep, p: &Vector, u: &Vector, cohom: usize, tol: &Tolerances) -> Result<Arc> {
    let at = |t: Real| p * t.cos() + u * t.sin();
    let start = at(PROBE);
    let mirror_rank = orbit_dim(rep, &start, tol);
    let lines: Vec<std::ops::Range<usize>> = torus_lines(rep)
        .map(|ls| {
            ls.into_iter()
                .map(|(r, _)| r)
                .filter(|r| p.rows(r.start, r.len()).norm() + u.rows(r.start, r.len()).norm() > 1e-9)
                .collect()
        })
        .unwrap_or_default();
    let phi = |t: Real| -> Real {
        let q = at(t);
        let sv = singular_values(&rep.evaluation(&q));
        let scale = sv.first().copied().unwrap_or(0.0).max(1.0);
        let rank_part = if mirror_rank == 0 { Real::INFINITY } else { sv[mirror_rank - 1] / scale };
        lines.iter().map(|r| q.rows(r.start, r.len()).norm()).fold(rank_part, Real::min)
    };
    let h = std::f64::consts::PI / ARC_SAMPLES as Real;
    let mut values: Vec<Real> = (0..=ARC_SAMPLES + 1).map(|i| phi(PROBE + i as Real * h)).collect();
    for i in 1..=ARC_SAMPLES {
        if !(values[i] <= values[i - 1] && values[i] <= values[i + 1]) {
            continue;
        }
        let t0 = PROBE + (i - 1) as Real * h;
        let t = golden_minimum(&phi, t0, t0 + 2.0 * h);
        if phi(t) > 1e-7 {
            continue;
        }
        let end = at(t);
        if stratum_witness(rep, &end, cohom, tol)?.stratum_codim != 2 {
            values[i] = Real::INFINITY;
            continue;
        }
        let velocity = -p * t.sin() + u * t.cos();
        return Ok(Arc { from: 0, slot: 0, end, velocity, length: t });
    }
    Err(Error::Precondition("mirror arc reaches no corner within length pi".into()))
}

fn golden_minimum(f: &impl Fn(Real) -> Real, mut a: Real, mut b: Real) -> Real {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > 1e-12 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Hand-entered complexes used as fixtures, each with optional face data
/// for the (C3) check.
pub mod fixtures {
    use super::*;

    fn corner(order: u32, a: &str, b: &str) -> Corner {
        Corner { order, mirrors: [a.into(), b.into()] }
    }

    fn face(mirror: &str, boundary: &[&str], meets: &[&[bool]]) -> FaceCompletion {
        FaceCompletion {
            mirror: mirror.into(),
            boundary: boundary.iter().map(|s| s.to_string()).collect(),
            meets: meets.iter().map(|r| r.to_vec()).collect(),
        }
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// One mirror folding onto itself at a corner of order 2.
    pub fn half_tear_drop() -> (CoxeterComplexData, Vec<FaceCompletion>) {
        let data = CoxeterComplexData {
            mirrors: names(&["m"]),
            corners: vec![corner(2, "m", "m")],
            simply_connected: true,
            interior_singular: 0,
        };
        // The completion of the face is an interval whose two endpoints
        // both map to the corner.
        let faces = vec![face("m", &["corner+", "corner-"], &[&[true, false], &[false, true]])];
        (data, faces)
    }

    /// The chamber of the reflection group generated by reflections in the
    /// sides of a square.
    pub fn square_chamber() -> (CoxeterComplexData, Vec<FaceCompletion>) {
        let data = CoxeterComplexData {
            mirrors: names(&["a", "b", "c", "d"]),
            corners: vec![corner(2, "a", "b"), corner(2, "b", "c"), corner(2, "c", "d"), corner(2, "d", "a")],
            simply_connected: true,
            interior_singular: 0,
        };
        // Each side is an edge whose two corners lie at opposite ends.
        let faces = ["a", "b", "c", "d"]
            .iter()
            .map(|m| face(m, &["start", "end"], &[&[true, false], &[false, true]]))
            .collect();
        (data, faces)
    }

    /// Two mirrors meeting at two corners of different orders.
    pub fn lens() -> (CoxeterComplexData, Vec<FaceCompletion>) {
        let data = CoxeterComplexData {
            mirrors: names(&["a", "b"]),
            corners: vec![corner(2, "a", "b"), corner(3, "a", "b")],
            simply_connected: true,
            interior_singular: 0,
        };
        let faces = ["a", "b"]
            .iter()
            .map(|m| face(m, &["order2", "order3"], &[&[true, false], &[false, true]]))
            .collect();
        (data, faces)
    }

    /// The quarter-sphere: two half great circles meeting at both poles.
    pub fn quarter_sphere() -> (CoxeterComplexData, Vec<FaceCompletion>) {
        let data = CoxeterComplexData {
            mirrors: names(&["a", "b"]),
            corners: vec![corner(2, "a", "b"), corner(2, "a", "b")],
            simply_connected: true,
            interior_singular: 0,
        };
        let faces = ["a", "b"]
            .iter()
            .map(|m| face(m, &["north", "south"], &[&[true, false], &[false, true]]))
            .collect();
        (data, faces)
    }

    /// A tetrahedral chamber in dimension 3: four triangular faces, six
    /// edges of order 2. In each face the three edges meet pairwise at the
    /// vertices.
    pub fn tetrahedron() -> (CoxeterComplexData, Vec<FaceCompletion>) {
        let m = ["f0", "f1", "f2", "f3"];
        let mut corners = Vec::new();
        for i in 0..4 {
            for j in (i + 1)..4 {
                corners.push(corner(2, m[i], m[j]));
            }
        }
        let data = CoxeterComplexData { mirrors: names(&m), corners, simply_connected: true, interior_singular: 0 };
        let all = [true, true, true];
        let faces = (0..4)
            .map(|i| {
                let edges: Vec<String> = (0..4).filter(|&j| j != i).map(|j| format!("{}{}", m[i], m[j])).collect();
                let refs: Vec<&str> = edges.iter().map(String::as_str).collect();
                face(m[i], &refs, &[&all, &all, &all])
            })
            .collect();
        (data, faces)
    }

    /// A chamber with a single corner of order 4.
    pub fn order_four_corner() -> (CoxeterComplexData, Vec<FaceCompletion>) {
        let data = CoxeterComplexData {
            mirrors: names(&["a", "b"]),
            corners: vec![corner(4, "a", "b")],
            simply_connected: true,
            interior_singular: 0,
        };
        let faces = ["a", "b"].iter().map(|m| face(m, &["ab"], &[&[true]])).collect();
        (data, faces)
    }

    /// Every bundled complex with its name.
    pub fn all() -> Vec<(&'static str, CoxeterComplexData, Vec<FaceCompletion>)> {
        vec![
            ("half-tear-drop", half_tear_drop()),
            ("square-chamber", square_chamber()),
            ("lens", lens()),
            ("quarter-sphere", quarter_sphere()),
            ("tetrahedron", tetrahedron()),
            ("order-four-corner", order_four_corner()),
        ]
        .into_iter()
        .map(|(n, (d, f))| (n, d, f))
        .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn verdicts_of_fixtures() {
        let v = check_goodness(&half_tear_drop().0).unwrap();
        assert!(!v.c1 && v.verdict == Goodness::Bad);
        let v = check_goodness(&square_chamber().0).unwrap();
        assert!(v.c1 && v.c2 && v.verdict == Goodness::Good);
        let v = check_goodness(&lens().0).unwrap();
        assert!(v.c1 && !v.c2 && v.verdict == Goodness::Bad);
        let mut unknown = square_chamber().0;
        unknown.simply_connected = false;
        assert_eq!(check_goodness(&unknown).unwrap().verdict, Goodness::Unknown);
    }

    #[test]
    fn c3_implies_c1_and_c2() {
        for (name, data, faces) in all() {
            if check_c3(&faces).unwrap().holds {
                let v = check_goodness(&data).unwrap();
                assert!(v.c1 && v.c2, "{name}");
            }
        }
        assert!(check_c3(&tetrahedron().1).unwrap().holds);
        assert!(!check_c3(&half_tear_drop().1).unwrap().holds);
    }

    #[test]
    fn presentations() {
        let p = coxeter_presentation(&square_chamber().0).unwrap();
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.relations.len(), 8);
        assert!(p.relations.contains(&"(s_a s_b)^2".to_string()));
        let p = coxeter_presentation(&order_four_corner().0).unwrap();
        assert!(p.relations.contains(&"(s_a s_b)^4".to_string()));
        assert!(matches!(coxeter_presentation(&half_tear_drop().0), Err(Error::Precondition(_))));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let text = r#"{"mirrors": ["a", "b"], "corners": [{"order": 3, "mirrors": ["a", "b"]}], "simply_connected": true}"#;
        let data = CoxeterComplexData::from_json(text).unwrap();
        assert_eq!(data.corners[0].order, 3);
        assert!(CoxeterComplexData::from_json(r#"{"mirrors": ["a"], "corners": [{"order": 1, "mirrors": ["a", "a"]}], "simply_connected": true}"#).is_err());
        assert!(CoxeterComplexData::from_json(r#"{"mirrors": ["a"], "corners": [{"order": 2, "mirrors": ["a"]}], "simply_connected": true}"#).is_err());
    }

    use crate::liealg::{build_circle_weights, build_classical, doubling, Factor, FactorKind, Field, GroupSpec, Letter};

    #[test]
    fn measured_complexes() {
        let t = Tolerances::default();
        let row12 = GroupSpec::new(vec![Factor::new(FactorKind::Su, 2), Factor::new(FactorKind::Torus, 1)])
            .summand(Field::Complex, vec![Letter::standard(0), Letter::weighted(1, vec![1])])
            .summand(Field::Real, vec![Letter::vector(0)]);
        let m = complex_from_action(&LieGroupRep::from_spec(&row12).unwrap(), 0, &t).unwrap();
        assert_eq!(check_goodness(&m.data).unwrap().verdict, Goodness::Bad);
        let m = complex_from_action(&build_circle_weights(&[1, 2]).unwrap(), 0, &t).unwrap();
        assert_eq!(check_goodness(&m.data).unwrap().verdict, Goodness::Bad);
        let m = complex_from_action(&doubling(&build_classical(FactorKind::So, 2).unwrap()).unwrap(), 0, &t).unwrap();
        assert_eq!(check_goodness(&m.data).unwrap().verdict, Goodness::Good);
        let torus3 = GroupSpec::new(vec![Factor::new(FactorKind::Torus, 3)])
            .summand(Field::Complex, vec![Letter::weighted(0, vec![1, 0, 0])])
            .summand(Field::Complex, vec![Letter::weighted(0, vec![0, 1, 0])])
            .summand(Field::Complex, vec![Letter::weighted(0, vec![0, 0, 1])]);
        let m = complex_from_action(&LieGroupRep::from_spec(&torus3).unwrap(), 0, &t).unwrap();
        assert_eq!((m.data.mirrors.len(), m.data.corners.len()), (3, 3));
        assert_eq!(check_goodness(&m.data).unwrap().verdict, Goodness::Good);
    }
}
