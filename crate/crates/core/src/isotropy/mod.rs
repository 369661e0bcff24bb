//! Isotropy algebras, orbits, slices and cohomogeneity.
//!
//! Everything is computed from the evaluation matrix `E(p) = [A_1 p ... A_d p]`:
//! its kernel is the isotropy algebra `g_p`, its image the orbit tangent
//! space `V_p`, and `H_p = (R p + V_p)^perp` is the slice.

mod reduction;
mod strata;
mod torus;

use crate::linalg::{complement, null_space, orthonormalize_matrices, range_space, rank};
use crate::liealg::LieGroupRep;
use crate::rng::{derived, unit_vector};
use crate::{Mat, Result, Tolerances, Vector};

pub use reduction::{lrs_reduction, reduce_by, strata_reduction, Reduction};
pub(crate) use strata::singular_candidates;
pub(crate) use torus::{moved_lines, torus_lines};
pub use strata::{find_singular_points, stratum_witness, SearchOptions, Signature, StratumWitness};

/// Default number of random points used to find the principal orbit type.
pub const DEFAULT_SAMPLES: usize = 16;

#[derive(Debug, Clone)]
pub struct IsotropyData {
    pub point: Vector,
    /// Trace-orthonormal basis of `g_p`.
    pub isotropy_basis: Vec<Mat>,
    /// Orthonormal columns spanning `V_p`.
    pub orbit_basis: Mat,
    /// Orthonormal columns spanning `H_p`.
    pub slice_basis: Mat,
    /// `g_p` acting on `H_p` in the slice basis, modulo its kernel there.
    pub slice_rep: LieGroupRep,
}

impl IsotropyData {
    pub fn isotropy_dim(&self) -> usize {
        self.isotropy_basis.len()
    }

    pub fn orbit_dim(&self) -> usize {
        self.orbit_basis.ncols()
    }

    pub fn slice_dim(&self) -> usize {
        self.slice_basis.ncols()
    }

    /// Dimension of the subspace of `H_p` fixed by `g_p`.
    pub fn fixed_dim(&self, tol: &Tolerances) -> usize {
        fixed_space(self.slice_rep.generators(), self.slice_dim(), tol).ncols()
    }
}

/// Common kernel of `mats` (all `n x n`), as orthonormal columns.
pub fn fixed_space(mats: &[Mat], n: usize, tol: &Tolerances) -> Mat {
    if mats.is_empty() {
        return Mat::identity(n, n);
    }
    let mut stacked = Mat::zeros(n * mats.len(), n);
    for (k, m) in mats.iter().enumerate() {
        stacked.view_mut((k * n, 0), (n, n)).copy_from(m);
    }
    null_space(&stacked, tol.rank)
}

pub fn isotropy_algebra(rep: &LieGroupRep, p: &Vector, tol: &Tolerances) -> Result<IsotropyData> {
    let n = rep.ambient_dim();
    let e = rep.evaluation(p);
    let kernel = null_space(&e, tol.rank);
    let raw: Vec<Mat> = kernel.column_iter().map(|c| rep.combination(c.as_slice())).collect();
    let isotropy_basis = orthonormalize_matrices(&raw, 1e-6);
    let orbit_basis = range_space(&e, tol.rank);
    let mut normal_to = Mat::zeros(n, 1 + orbit_basis.ncols());
    normal_to.set_column(0, p);
    normal_to.view_mut((0, 1), (n, orbit_basis.ncols())).copy_from(&orbit_basis);
    let slice_basis = complement(&normal_to, tol.rank);
    let restricted: Vec<Mat> = isotropy_basis.iter().map(|x| slice_basis.transpose() * x * &slice_basis).collect();
    let slice_rep = LieGroupRep::spanned_by(format!("slice of {}", rep.label()), slice_basis.ncols(), &restricted, 1e-10)?;
    Ok(IsotropyData { point: p.clone(), isotropy_basis, orbit_basis, slice_basis, slice_rep })
}

pub fn orbit_dim(rep: &LieGroupRep, p: &Vector, tol: &Tolerances) -> usize {
    rank(&rep.evaluation(p), tol.rank)
}

/// Random unit point realizing the largest orbit dimension among
/// `samples` draws, with that dimension.
pub fn principal_point(rep: &LieGroupRep, seed: u64, samples: usize, tol: &Tolerances) -> (Vector, usize) {
    let n = rep.ambient_dim();
    let mut best: Option<(Vector, usize)> = None;
    for i in 0..samples.max(1) {
        let p = unit_vector(&mut derived(seed, i as u64), n);
        let d = orbit_dim(rep, &p, tol);
        if best.as_ref().is_none_or(|(_, b)| d > *b) {
            best = Some((p, d));
        }
    }
    best.expect("at least one sample")
}

/// `dim V - max orbit dimension` over `samples` random unit points.
pub fn cohomogeneity(rep: &LieGroupRep, seed: u64, samples: usize, tol: &Tolerances) -> usize {
    rep.ambient_dim() - principal_point(rep, seed, samples, tol).1
}

/// Isotropy algebra at a principal point, trace-orthonormal.
pub fn principal_isotropy(rep: &LieGroupRep, seed: u64, tol: &Tolerances) -> Result<Vec<Mat>> {
    let (p, _) = principal_point(rep, seed, DEFAULT_SAMPLES, tol);
    Ok(isotropy_algebra(rep, &p, tol)?.isotropy_basis)
}

/// The slice representation at `p`; the zero algebra when `g_p` acts
/// trivially on the slice.
pub fn slice_representation(rep: &LieGroupRep, p: &Vector, tol: &Tolerances) -> Result<LieGroupRep> {
    Ok(isotropy_algebra(rep, p, tol)?.slice_rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_circle_weights, build_classical, build_g2, build_spin, doubling, FactorKind};

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn rank_nullity_and_tangency() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let p = unit_vector(&mut derived(3, 0), 16);
        let data = isotropy_algebra(&rep, &p, &tol()).unwrap();
        assert_eq!(data.isotropy_dim() + data.orbit_dim(), rep.algebra_dim());
        for a in rep.generators() {
            assert!((a * &p).dot(&p).abs() < 1e-14);
        }
        assert_eq!(data.slice_dim(), 16 - 1 - data.orbit_dim());
    }

    #[test]
    fn hopf_is_almost_free() {
        let rep = build_circle_weights(&[1, 1]).unwrap();
        let p = unit_vector(&mut derived(1, 0), 4);
        let data = isotropy_algebra(&rep, &p, &tol()).unwrap();
        assert_eq!((data.isotropy_dim(), data.orbit_dim()), (0, 1));
        assert!(principal_isotropy(&rep, 0, &tol()).unwrap().is_empty());
    }

    #[test]
    fn generic_isotropy_of_spinor_and_g2_vector() {
        let spin9 = build_spin(9).unwrap();
        let p = unit_vector(&mut derived(5, 0), 16);
        assert_eq!(isotropy_algebra(&spin9, &p, &tol()).unwrap().isotropy_dim(), 21);
        let g2 = build_g2().unwrap();
        let q = unit_vector(&mut derived(5, 1), 7);
        assert_eq!(isotropy_algebra(&g2, &q, &tol()).unwrap().isotropy_dim(), 8);
    }

    #[test]
    fn so3_doubling_at_orthogonal_pair() {
        let rep = doubling(&build_classical(FactorKind::So, 3).unwrap()).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = Vector::from_vec(vec![s, 0.0, 0.0, 0.0, s, 0.0]);
        assert_eq!(isotropy_algebra(&rep, &p, &tol()).unwrap().isotropy_dim(), 0);
    }

    #[test]
    fn cohomogeneity_of_doublings() {
        let t = tol();
        let sp2 = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        assert_eq!(cohomogeneity(&sp2, 0, DEFAULT_SAMPLES, &t), 6);
        let su2 = doubling(&build_classical(FactorKind::Su, 2).unwrap()).unwrap();
        assert_eq!(cohomogeneity(&su2, 0, DEFAULT_SAMPLES, &t), 5);
        let spin9 = doubling(&build_spin(9).unwrap()).unwrap();
        assert_eq!(cohomogeneity(&spin9, 0, DEFAULT_SAMPLES, &t), 4);
    }

    #[test]
    fn slice_invariance() {
        let rep = doubling(&build_spin(9).unwrap()).unwrap();
        let mut p = Vector::zeros(32);
        p.rows_mut(0, 16).copy_from(&unit_vector(&mut derived(2, 0), 16));
        let data = isotropy_algebra(&rep, &p, &tol()).unwrap();
        assert_eq!(data.isotropy_dim(), 21);
        let h = &data.slice_basis;
        let proj = h * h.transpose();
        for x in &data.isotropy_basis {
            let moved = x * h;
            assert!((&moved - &proj * &moved).norm() < 1e-10);
        }
        assert!(data.slice_rep.closure_residual() < 1e-10);
    }
}
