//! Orbit-type strata: signatures at a point and witness search.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::sorted_svd;
use crate::liealg::LieGroupRep;
use crate::rng::{derived, unit_vector};
use crate::{Error, Mat, Real, Result, Tolerances, Vector};

use super::torus::{group_fixed_dim, torus_lines};
use super::{fixed_space, isotropy_algebra};

/// Coarse orbit-type invariant used to tell strata apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub isotropy_dim: usize,
    pub fixed_dim: usize,
    pub orbit_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StratumWitness {
    pub point: Vec<Real>,
    /// Codimension of the stratum inside the quotient of the unit sphere.
    pub stratum_codim: usize,
    pub isotropy_dim: usize,
    /// Dimension of the isotropy-fixed part of the slice.
    pub fixed_dim: usize,
    pub orbit_dim: usize,
}

impl StratumWitness {
    pub fn signature(&self) -> Signature {
        Signature { isotropy_dim: self.isotropy_dim, fixed_dim: self.fixed_dim, orbit_dim: self.orbit_dim }
    }

    pub fn point_vector(&self) -> Vector {
        Vector::from_column_slice(&self.point)
    }

    fn sort_key(&self) -> (usize, Signature) {
        (self.stratum_codim, self.signature())
    }
}

/// Stratum data at `p`. The stratum codimension is
/// `(cohomogeneity - 1) - fixed_dim`. For torus actions on weighted lines
/// the fixed dimension accounts for finite isotropy exactly.
pub fn stratum_witness(rep: &LieGroupRep, p: &Vector, cohomogeneity: usize, tol: &Tolerances) -> Result<StratumWitness> {
    let data = isotropy_algebra(rep, p, tol)?;
    let orbit_dim = data.orbit_dim();
    let fixed_dim = match torus_lines(rep) {
        Some(lines) => group_fixed_dim(&lines, p, orbit_dim),
        None => data.fixed_dim(tol),
    };
    let quotient_dim = cohomogeneity.checked_sub(1).ok_or_else(|| Error::Precondition("cohomogeneity 0".into()))?;
    let stratum_codim = quotient_dim.checked_sub(fixed_dim).ok_or_else(|| {
        Error::RankDrop(format!("fixed slice dimension {fixed_dim} exceeds quotient dimension {quotient_dim}"))
    })?;
    Ok(StratumWitness { point: p.iter().copied().collect(), stratum_codim, isotropy_dim: data.isotropy_dim(), fixed_dim, orbit_dim })
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub seed: u64,
    pub restarts: usize,
    /// Descent iterations per restart.
    pub iterations: usize,
    /// Extra starting points, e.g. supplied by a registry entry.
    pub seeds: Vec<Vector>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { seed: 0, restarts: 64, iterations: 150, seeds: Vec::new() }
    }
}

/// Witnesses for the orbit-type strata, one per signature, sorted by
/// stratum codimension then signature.
///
/// Candidates come from structured seeds (coordinate vectors, random points
/// inside each summand, caller-supplied points) and from multi-start
/// projected descent on the sphere minimizing the sum of the `r` smallest
/// of the leading `dim V - cohomogeneity` squared singular values of the
/// evaluation matrix (`r` cycles through `1..=3`). Every candidate is then
/// polished onto the fixed space of its near-isotropy. The search may miss
/// strata.
pub fn find_singular_points(
    rep: &LieGroupRep,
    cohomogeneity: usize,
    opts: &SearchOptions,
    tol: &Tolerances,
) -> Result<Vec<StratumWitness>> {
    let (structured, descended) = search_points(rep, cohomogeneity, opts, tol);
    let witnesses = structured
        .par_iter()
        .chain(descended.par_iter())
        .map(|p| stratum_witness(rep, p, cohomogeneity, tol))
        .collect::<Result<Vec<_>>>()?;
    let mut by_signature: std::collections::BTreeMap<Signature, StratumWitness> = Default::default();
    for w in witnesses {
        by_signature.entry(w.signature()).or_insert(w);
    }
    let mut out: Vec<StratumWitness> = by_signature.into_values().collect();
    out.sort_by_key(StratumWitness::sort_key);
    Ok(out)
}

/// Every polished search candidate off the principal stratum, without
/// merging equal signatures.
pub(crate) fn singular_candidates(
    rep: &LieGroupRep,
    cohomogeneity: usize,
    opts: &SearchOptions,
    tol: &Tolerances,
) -> Result<Vec<StratumWitness>> {
    let (structured, descended) = search_points(rep, cohomogeneity, opts, tol);
    let witnesses = structured
        .iter()
        .chain(descended.iter())
        .map(|p| stratum_witness(rep, p, cohomogeneity, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(witnesses.into_iter().filter(|w| w.stratum_codim > 0).collect())
}

/// Structured starting points and descended random starts, all polished.
fn search_points(rep: &LieGroupRep, cohomogeneity: usize, opts: &SearchOptions, tol: &Tolerances) -> (Vec<Vector>, Vec<Vector>) {
    let n = rep.ambient_dim();
    let generic_rank = n - cohomogeneity;
    let mut starts: Vec<Vector> = Vec::new();
    for i in 0..n {
        let mut e = Vector::zeros(n);
        e[i] = 1.0;
        starts.push(e);
    }
    for (s, range) in rep.summand_ranges().iter().enumerate() {
        for k in 0..2u64 {
            let mut rng = derived(opts.seed ^ 0x5eed, (s as u64) * 2 + k);
            let mut p = Vector::zeros(n);
            p.rows_mut(range.start, range.len()).copy_from(&unit_vector(&mut rng, range.len()));
            starts.push(p);
        }
    }
    starts.extend(opts.seeds.iter().map(|p| p / p.norm()));

    let structured: Vec<Vector> = starts.par_iter().map(|p| polish(rep, p.clone(), tol)).collect();
    let max_r = generic_rank.clamp(1, 3);
    let descended: Vec<Vector> = (0..opts.restarts)
        .into_par_iter()
        .map(|i| {
            let start = unit_vector(&mut derived(opts.seed, i as u64), n);
            let r = 1 + i % max_r;
            let p = descend(rep, start, generic_rank, r.min(generic_rank), opts.iterations);
            polish(rep, p, tol)
        })
        .collect();

    (structured, descended)
}

/// Sum of the `r` smallest of the leading `m` squared singular values of
/// `E(p)` and its Euclidean gradient.
fn objective(rep: &LieGroupRep, p: &Vector, m: usize, r: usize) -> (Real, Vector) {
    let svd = sorted_svd(&rep.evaluation(p));
    let mut value = 0.0;
    let mut grad = Vector::zeros(p.len());
    let top = m.min(svd.singular_values.len());
    for k in top.saturating_sub(r)..top {
        let s = svd.singular_values[k];
        value += s * s;
        let b = rep.combination(svd.v.column(k).as_slice());
        // d s_k / dp = B_k^T u_k = -B_k u_k for skew B_k.
        grad -= (b * svd.u.column(k)) * (2.0 * s);
    }
    (value, grad)
}

fn descend(rep: &LieGroupRep, mut p: Vector, m: usize, r: usize, iterations: usize) -> Vector {
    if m == 0 || r == 0 {
        return p;
    }
    let mut step = 0.5;
    let (mut f, mut g) = objective(rep, &p, m, r);
    for _ in 0..iterations {
        let tangent = &g - &p * g.dot(&p);
        let gn2 = tangent.norm_squared();
        if f < 1e-24 || gn2 < 1e-28 {
            break;
        }
        let mut accepted = false;
        for _ in 0..30 {
            let mut q = &p - &tangent * step;
            q /= q.norm();
            let (fq, gq) = objective(rep, &q, m, r);
            if fq <= f - 1e-4 * step * gn2 {
                p = q;
                f = fq;
                g = gq;
                accepted = true;
                step *= 2.0;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    p
}

/// Moves `p` onto the common fixed space of the algebra elements that
/// almost fix it, repeating until those elements fix it to working
/// precision.
fn polish(rep: &LieGroupRep, mut p: Vector, tol: &Tolerances) -> Vector {
    let n = rep.ambient_dim();
    let d = rep.algebra_dim();
    if d == 0 {
        return p;
    }
    for _ in 0..40 {
        let e = rep.evaluation(&p);
        let (values, right) = right_singular_pairs(&e);
        let top = values.first().copied().unwrap_or(0.0).max(1.0);
        let small: Vec<usize> = (0..d).filter(|&k| values[k] < 1e-3 * top).collect();
        let worst_small = small.iter().map(|&k| values[k]).fold(0.0, Real::max);
        if small.is_empty() || worst_small < 1e-15 * top {
            break;
        }
        let mats: Vec<Mat> = small
            .iter()
            .map(|&k| {
                let m = rep.combination(right.column(k).as_slice());
                let norm = m.norm();
                m / norm.max(1e-300)
            })
            .collect();
        let loose = Tolerances { rank: 1e-2, ..*tol };
        let fix = fixed_space(&mats, n, &loose);
        if fix.ncols() == 0 {
            break;
        }
        let q = &fix * (fix.transpose() * &p);
        let norm = q.norm();
        if norm < 0.5 {
            break;
        }
        let q = q / norm;
        if (&q - &p).norm() < 1e-16 {
            p = q;
            break;
        }
        p = q;
    }
    p
}

/// All `d` singular values of `e` (padded with zeros when `e` is wide) and
/// the matching right singular vectors.
fn right_singular_pairs(e: &Mat) -> (Vec<Real>, Mat) {
    let (n, d) = e.shape();
    let svd = if n >= d {
        sorted_svd(e)
    } else {
        let mut padded = Mat::zeros(d, d);
        padded.view_mut((0, 0), (n, d)).copy_from(e);
        sorted_svd(&padded)
    };
    (svd.singular_values, svd.v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isotropy::{cohomogeneity, DEFAULT_SAMPLES};
    use crate::liealg::{build_circle_weights, build_classical, doubling, FactorKind};

    #[test]
    fn principal_point_has_codim_zero() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let t = Tolerances::default();
        let c = cohomogeneity(&rep, 0, DEFAULT_SAMPLES, &t);
        let p = unit_vector(&mut derived(9, 9), 16);
        assert_eq!(stratum_witness(&rep, &p, c, &t).unwrap().stratum_codim, 0);
    }

    #[test]
    fn sp2_doubling_boundary_point() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let t = Tolerances::default();
        let mut p = Vector::zeros(16);
        p[0] = 1.0;
        let w = stratum_witness(&rep, &p, 6, &t).unwrap();
        assert_eq!((w.fixed_dim, w.stratum_codim), (4, 1));
    }

    #[test]
    fn weight_two_plane_is_a_corner() {
        let rep = build_circle_weights(&[1, 2]).unwrap();
        let t = Tolerances::default();
        let p = Vector::from_vec(vec![0.0, 0.0, 1.0, 0.0]);
        assert_eq!(stratum_witness(&rep, &p, 3, &t).unwrap().stratum_codim, 2);
    }

    #[test]
    fn search_on_sp2_doubling_and_hopf() {
        let t = Tolerances::default();
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let found = find_singular_points(&rep, 6, &SearchOptions { restarts: 8, ..Default::default() }, &t).unwrap();
        let codims: Vec<usize> = found.iter().map(|w| w.stratum_codim).collect();
        assert!(codims.contains(&0) && codims.contains(&1), "{codims:?}");
        let hopf = build_circle_weights(&[1, 1]).unwrap();
        let found = find_singular_points(&hopf, 3, &SearchOptions { restarts: 8, ..Default::default() }, &t).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].stratum_codim, 0);
    }
}
