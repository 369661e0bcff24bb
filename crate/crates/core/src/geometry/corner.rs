//! Angles at codimension-2 strata of the quotient.
//!
//! Near a corner preimage `p` the quotient looks like the cone over
//! `S(N_p) / G_p`, where `N_p` is the part of the slice moved by the
//! isotropy group `G_p`. The corner angle is the largest distance in
//! `S(N_p) / G_p`, found by farthest-point sweeps over candidate directions.
//! Distances there are minima over representatives `c` of
//! the components of `G_p` (found by optimization over the whole group, so
//! finite isotropy is seen) of orbit distances under the identity
//! component.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::isotropy::{
    cohomogeneity, fixed_space, isotropy_algebra, moved_lines, singular_candidates, stratum_witness, torus_lines,
    SearchOptions, DEFAULT_SAMPLES,
};
use crate::linalg::complement;
use crate::liealg::LieGroupRep;
use crate::rng::{derived, unit_vector};
use crate::{Error, Mat, Real, Result, Tolerances, Vector};

use super::distance::{isotropy_elements, orbit_distance};

const RESTARTS: usize = 16;
const SLICE_RESTARTS: usize = 8;
const MAX_SINGULAR: usize = 12;
const SWEEPS: usize = 4;
/// Largest allowed distance of `pi / angle` from an integer.
pub const ORDER_GUARD: Real = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CornerMeasurement {
    pub point: Vec<Real>,
    pub angle: Real,
    /// Unit directions in the moved part of the slice realizing the angle.
    pub endpoints: [Vec<Real>; 2],
    /// Number of candidate directions compared pairwise.
    pub candidates: usize,
}

impl CornerMeasurement {
    pub fn endpoint_vectors(&self) -> [Vector; 2] {
        [Vector::from_column_slice(&self.endpoints[0]), Vector::from_column_slice(&self.endpoints[1])]
    }
}

/// Orthonormal columns spanning the part of the slice at `p` on which the
/// isotropy acts nontrivially. Torus actions use their exact isotropy
/// groups; otherwise the identity component decides.
pub fn moved_slice(rep: &LieGroupRep, p: &Vector, tol: &Tolerances) -> Result<Mat> {
    let n = rep.ambient_dim();
    if let Some(lines) = torus_lines(rep) {
        let moved = moved_lines(&lines, p);
        let mut basis = Mat::zeros(n, 2 * moved.len());
        for (k, r) in moved.iter().enumerate() {
            basis[(r.start, 2 * k)] = 1.0;
            basis[(r.start + 1, 2 * k + 1)] = 1.0;
        }
        return Ok(basis);
    }
    let data = isotropy_algebra(rep, p, tol)?;
    let fixed = fixed_space(data.slice_rep.generators(), data.slice_dim(), tol);
    Ok(&data.slice_basis * complement(&fixed, tol.rank))
}

/// Measures the angle of the quotient at the codimension-2 stratum through
/// `p`.
pub fn measure_corner(rep: &LieGroupRep, p: &Vector, seed: u64, tol: &Tolerances) -> Result<CornerMeasurement> {
    let p = p / p.norm();
    let cohom = cohomogeneity(rep, seed, DEFAULT_SAMPLES, tol);
    if cohom < 3 {
        return Err(Error::NotACorner(format!("quotient dimension {} is below 2", cohom.saturating_sub(1))));
    }
    let w = stratum_witness(rep, &p, cohom, tol)?;
    if w.stratum_codim != 2 {
        return Err(Error::NotACorner(format!("stratum codimension is {}", w.stratum_codim)));
    }
    let normal = moved_slice(rep, &p, tol)?;
    let data = isotropy_algebra(rep, &p, tol)?;
    let restricted: Vec<Mat> = data.isotropy_basis.iter().map(|x| normal.transpose() * x * &normal).collect();
    let normal_rep = LieGroupRep::spanned_by("moved slice", normal.ncols(), &restricted, 1e-10)?;
    let components = distinct_components(&normal_rep, isotropy_elements(rep, &p, &normal, seed, RESTARTS), seed);
    let candidates = candidate_directions(&normal_rep, seed, tol)?;
    let distance = |u: &Vector, v: &Vector| -> Real {
        components
            .iter()
            .map(|c| orbit_distance(&normal_rep, u, &(c * v), seed, SLICE_RESTARTS).distance)
            .fold(Real::INFINITY, Real::min)
    };
    // S(N_p) / G_p is an interval, or a circle at a cone point, so farthest
    // point sweeps find its diameter among the candidates.
    let farthest = |from: usize| -> (Real, usize) {
        let d: Vec<Real> = candidates.par_iter().map(|c| distance(&candidates[from], c)).collect();
        d.into_iter().enumerate().fold((Real::NEG_INFINITY, from), |acc, (k, x)| if x > acc.0 { (x, k) } else { acc })
    };
    if candidates.len() < 2 {
        return Err(Error::NotACorner("the isotropy moves no slice direction".into()));
    }
    let (mut i, mut best) = (0, farthest(0));
    for _ in 0..SWEEPS {
        let next = farthest(best.1);
        if next.0 <= best.0 {
            break;
        }
        i = best.1;
        best = next;
    }
    let (angle, j) = best;
    let lift = |c: &Vector| -> Vec<Real> { (&normal * c).iter().copied().collect() };
    Ok(CornerMeasurement {
        point: p.iter().copied().collect(),
        angle,
        endpoints: [lift(&candidates[i]), lift(&candidates[j])],
        candidates: candidates.len(),
    })
}

/// Drops isotropy elements inducing the same map on the quotient by the
/// identity component as an element already kept, tested on two generic
/// directions.
fn distinct_components(normal_rep: &LieGroupRep, elements: Vec<Mat>, seed: u64) -> Vec<Mat> {
    let m = normal_rep.ambient_dim();
    let probes: Vec<Vector> = (0..2).map(|k| unit_vector(&mut derived(seed ^ 0x9e0, k), m)).collect();
    let mut kept: Vec<Mat> = Vec::new();
    for c in elements {
        let duplicate = kept.iter().any(|k| {
            probes.iter().all(|x| orbit_distance(normal_rep, &(k * x), &(&c * x), seed, SLICE_RESTARTS).distance < 1e-6)
        });
        if !duplicate {
            kept.push(c);
        }
    }
    kept
}

/// Unit directions in the moved slice, in its own coordinates: the basis
/// vectors, singular points of the identity component, a few random
/// directions, and for a plane a uniform grid of angles.
fn candidate_directions(normal_rep: &LieGroupRep, seed: u64, tol: &Tolerances) -> Result<Vec<Vector>> {
    let m = normal_rep.ambient_dim();
    let mut out: Vec<Vector> = (0..m)
        .map(|k| {
            let mut e = Vector::zeros(m);
            e[k] = 1.0;
            e
        })
        .collect();
    if normal_rep.algebra_dim() > 0 {
        let c = cohomogeneity(normal_rep, seed, DEFAULT_SAMPLES, tol);
        if c >= 2 {
            let opts = SearchOptions { seed, restarts: 64, ..SearchOptions::default() };
            let singular = singular_candidates(normal_rep, c, &opts, tol)?;
            out.extend(singular.iter().take(MAX_SINGULAR).map(|w| w.point_vector()));
        }
    }
    if m == 2 {
        out.extend((1..12).map(|k| {
            let phi = k as Real * std::f64::consts::PI / 12.0;
            Vector::from_vec(vec![phi.cos(), phi.sin()])
        }));
    }
    out.extend((0..4).map(|k| unit_vector(&mut derived(seed ^ 0xc0de, k), m)));
    Ok(out)
}

/// Corner angle in radians at the codimension-2 stratum through `p`.
pub fn corner_angle(rep: &LieGroupRep, p: &Vector, seed: u64, tol: &Tolerances) -> Result<Real> {
    Ok(measure_corner(rep, p, seed, tol)?.angle)
}

/// The order `n` with `angle = pi / n`, if `pi / angle` is within
/// [`ORDER_GUARD`] of an integer `n >= 2`.
pub fn corner_order(angle: Real) -> Result<u32> {
    let ratio = std::f64::consts::PI / angle;
    let n = ratio.round();
    if !ratio.is_finite() || (ratio - n).abs() > ORDER_GUARD || n < 2.0 {
        return Err(Error::AngleNotSubmultiple { angle, ratio });
    }
    Ok(n as u32)
}
