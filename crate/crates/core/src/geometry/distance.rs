//! Orbit distances on the sphere by optimization over the group.
//!
//! `d(Gp, Gq) = min_g angle(p, g q)`. With `g = exp(sum t_i A_i)` the cosine
//! `<p, g q>` is maximized by multi-start ascent; each step moves the current
//! point `w = g q` by `exp(alpha sum g_i A_i)` where `g_i = <p, A_i w>` is
//! the gradient at the identity, so group elements are only ever applied.
//! A Newton polish on the symmetric Hessian finishes each run.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::expm;
use crate::liealg::LieGroupRep;
use crate::rng::derived;
use crate::{Mat, Real, Vector};

pub const DEFAULT_RESTARTS: usize = 32;
const GRADIENT_TOL: Real = 1e-10;
const MAX_STEPS: usize = 2000;
const NEWTON_STEPS: usize = 8;
const STALL_WINDOW: usize = 20;
const STALL_GAIN: Real = 1e-15;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub p: Vec<Real>,
    pub q: Vec<Real>,
    /// Best angle found, in `[0, pi]`.
    pub distance: Real,
    /// Optimizer steps taken by the winning restart.
    pub iterations: usize,
    pub restarts: usize,
}

/// Upper bound for the orbit distance between unit vectors `p` and `q`,
/// exact when the restarts reach the global optimum.
///
/// Restart 0 starts at the identity; the others at `exp(sum t_i A_i)` with
/// `t` uniform in `[-pi, pi]^d`.
pub fn orbit_distance(rep: &LieGroupRep, p: &Vector, q: &Vector, seed: u64, restarts: usize) -> DistanceResult {
    let p = p / p.norm();
    let q = q / q.norm();
    let restarts = restarts.max(1);
    let runs: Vec<(Real, Vector, usize)> = (0..restarts)
        .into_par_iter()
        .map(|k| ascend(rep, &p, restart_point(rep, &q, seed, k), None))
        .collect();
    let (best, w, iterations) = runs
        .into_iter()
        .reduce(|acc, r| if r.0 > acc.0 { r } else { acc })
        .expect("at least one restart");
    DistanceResult {
        p: p.iter().copied().collect(),
        q: q.iter().copied().collect(),
        distance: (&w - &p * best).norm().atan2(best),
        iterations,
        restarts,
    }
}

/// Whether `p` and `q` lie on orbits closer than `threshold`. Restarts run
/// in the order of [`orbit_distance`] and stop at the first success; the
/// norms of the summands, which are invariants, rule out distant orbits
/// without optimizing.
pub fn same_orbit(rep: &LieGroupRep, p: &Vector, q: &Vector, threshold: Real, seed: u64, restarts: usize) -> bool {
    let p = p / p.norm();
    let q = q / q.norm();
    let summand_gap = rep
        .summand_ranges()
        .iter()
        .map(|r| (p.rows(r.start, r.len()).norm() - q.rows(r.start, r.len()).norm()).abs())
        .fold(0.0, Real::max);
    // The distance is at least the gap in every invariant norm.
    if summand_gap > threshold {
        return false;
    }
    (0..restarts.max(1)).any(|k| {
        let (f, w, _) = ascend(rep, &p, restart_point(rep, &q, seed, k), None);
        (&w - &p * f).norm().atan2(f) < threshold
    })
}

fn restart_point(rep: &LieGroupRep, q: &Vector, seed: u64, k: usize) -> Vector {
    let d = rep.algebra_dim();
    if k == 0 || d == 0 {
        return q.clone();
    }
    let mut rng = derived(seed ^ 0xd157, k as u64);
    let t: Vec<Real> = (0..d).map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI)).collect();
    expm(&rep.combination(&t)) * q
}

fn gradient(rep: &LieGroupRep, p: &Vector, w: &Vector) -> Vec<Real> {
    rep.generators().iter().map(|a| p.dot(&(a * w))).collect()
}

/// Returns the best cosine reached, the point reaching it and the number
/// of steps.
/// Every accepted step is also applied to the columns of `companion`.
fn ascend(rep: &LieGroupRep, p: &Vector, mut w: Vector, mut companion: Option<&mut Mat>) -> (Real, Vector, usize) {
    let mut f = p.dot(&w);
    if rep.algebra_dim() == 0 {
        return (f, w, 0);
    }
    let mut alpha = 1.0;
    let mut steps = 0;
    let mut history = std::collections::VecDeque::with_capacity(STALL_WINDOW);
    while steps < MAX_STEPS {
        // Near degenerate maxima the gradient decays slowly while the value
        // has long converged; hand over to the Newton polish then.
        if history.len() == STALL_WINDOW {
            if f - history.pop_front().unwrap_or(f) < STALL_GAIN {
                break;
            }
        }
        history.push_back(f);
        let g = gradient(rep, p, &w);
        let gn2: Real = g.iter().map(|x| x * x).sum();
        if gn2.sqrt() < GRADIENT_TOL {
            break;
        }
        let x = rep.combination(&g);
        let mut accepted = false;
        for _ in 0..60 {
            let step = expm(&(&x * alpha));
            let cand = &step * &w;
            let fc = p.dot(&cand);
            if fc >= f + 1e-4 * alpha * gn2 {
                if let Some(c) = companion.as_deref_mut() {
                    *c = &step * &*c;
                }
                w = cand;
                f = fc;
                alpha *= 2.0;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        steps += 1;
        if !accepted {
            break;
        }
    }
    let (w, f) = newton_polish(rep, p, w, f, companion);
    (f, w, steps)
}

/// Newton iterations on `t -> <p, exp(sum t_i A_i) w>` using the symmetrized
/// Hessian `H_ij = <p, (A_i A_j + A_j A_i) w> / 2`, inverting only its
/// negative eigenvalues.
fn newton_polish(
    rep: &LieGroupRep,
    p: &Vector,
    mut w: Vector,
    mut f: Real,
    mut companion: Option<&mut Mat>,
) -> (Vector, Real) {
    let gens = rep.generators();
    let d = gens.len();
    for _ in 0..NEWTON_STEPS {
        let aw: Vec<Vector> = gens.iter().map(|a| a * &w).collect();
        let ap: Vec<Vector> = gens.iter().map(|a| a.transpose() * p).collect();
        let g = Vector::from_iterator(d, aw.iter().map(|v| p.dot(v)));
        if g.norm() < 1e-15 {
            break;
        }
        let mut h = Mat::zeros(d, d);
        for i in 0..d {
            for j in 0..=i {
                // <p, A_i A_j w> = <A_i^T p, A_j w>
                let v = 0.5 * (ap[i].dot(&aw[j]) + ap[j].dot(&aw[i]));
                h[(i, j)] = v;
                h[(j, i)] = v;
            }
        }
        let eig = h.symmetric_eigen();
        let scale = eig.eigenvalues.amax().max(1e-300);
        let mut step = Vector::zeros(d);
        for k in 0..d {
            let lambda = eig.eigenvalues[k];
            if lambda < -1e-8 * scale {
                let u = eig.eigenvectors.column(k);
                step -= u * (u.dot(&g) / lambda);
            }
        }
        let g = expm(&rep.combination(step.as_slice()));
        let cand = &g * &w;
        let fc = p.dot(&cand);
        if fc < f {
            break;
        }
        if let Some(c) = companion.as_deref_mut() {
            *c = &g * &*c;
        }
        w = cand;
        f = fc;
    }
    (w, f)
}

/// Group elements fixing the unit vector `p`, found by maximizing
/// `<p, g p>` from `restarts` random starts, each returned through its
/// action `frame^T g frame` on the orthonormal columns of a `g_p`-invariant
/// subspace. Different restarts can land in different components of the
/// isotropy group.
pub(crate) fn isotropy_elements(rep: &LieGroupRep, p: &Vector, frame: &Mat, seed: u64, restarts: usize) -> Vec<Mat> {
    let d = rep.algebra_dim();
    (0..restarts.max(1))
        .into_par_iter()
        .filter_map(|k| {
            let mut g = if k == 0 || d == 0 {
                Mat::identity(p.len(), p.len())
            } else {
                let mut rng = derived(seed ^ 0x150e, k as u64);
                let t: Vec<Real> = (0..d).map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI)).collect();
                expm(&rep.combination(&t))
            };
            let start = &g * p;
            let (f, w, _) = ascend(rep, p, start, Some(&mut g));
            let residual = (&w - p * f).norm().atan2(f);
            (residual < 1e-8).then(|| frame.transpose() * g * frame)
        })
        .collect()
}

/// A group element `exp(sum t_i A_i)` for the given coefficients.
pub fn group_element(rep: &LieGroupRep, t: &[Real]) -> Mat {
    expm(&rep.combination(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_circle_weights, build_classical, doubling, FactorKind};
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    fn e(n: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(n);
        v[i] = 1.0;
        v
    }

    #[test]
    fn same_orbit_detects_circle_orbits() {
        let rep = build_circle_weights(&[1, 1]).unwrap();
        let p = Vector::from_vec(vec![1.0, 0.0, 1.0, 0.0]);
        // Rotation by a quarter turn in both planes stays on the orbit.
        let q = Vector::from_vec(vec![0.0, 1.0, 0.0, 1.0]);
        assert!(same_orbit(&rep, &p, &q, 1e-6, 0, 8));
        // Equal summand norms but a different relative phase.
        let r = Vector::from_vec(vec![1.0, 0.0, 0.0, 1.0]);
        assert!(!same_orbit(&rep, &p, &r, 1e-6, 0, 8));
        assert!(!same_orbit(&rep, &p, &e(4, 0), 1e-6, 0, 8));
    }

    #[test]
    fn hopf_distances() {
        let rep = build_circle_weights(&[1, 1]).unwrap();
        let d = orbit_distance(&rep, &e(4, 0), &e(4, 2), 0, 8);
        assert!((d.distance - FRAC_PI_2).abs() < 1e-9);
        let q = (e(4, 0) + e(4, 2)) * FRAC_1_SQRT_2;
        let d = orbit_distance(&rep, &e(4, 0), &q, 0, 8);
        assert!((d.distance - FRAC_PI_4).abs() < 1e-9, "{}", d.distance);
    }

    #[test]
    fn points_on_one_orbit_have_distance_zero() {
        let rep = doubling(&build_classical(FactorKind::So, 3).unwrap()).unwrap();
        let p = crate::rng::unit_vector(&mut derived(1, 2), 6);
        let g = group_element(&rep, &[0.3, -1.2, 2.0]);
        let d = orbit_distance(&rep, &p, &(g * &p), 0, 8);
        assert!(d.distance < 1e-7, "{}", d.distance);
    }

    #[test]
    fn distance_is_bounded_by_angle() {
        let rep = build_circle_weights(&[1, 2]).unwrap();
        let p = crate::rng::unit_vector(&mut derived(3, 0), 4);
        let q = crate::rng::unit_vector(&mut derived(3, 1), 4);
        let d = orbit_distance(&rep, &p, &q, 0, 8);
        assert!(d.distance <= p.dot(&q).clamp(-1.0, 1.0).acos() + 1e-12);
    }
}
