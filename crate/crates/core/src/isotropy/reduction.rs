//! Reductions to the fixed space of an isotropy algebra.
//!
//! For a subalgebra `h` of `g`, the normalizer `n = {xi : [xi, h] in h}`
//! preserves `W = Fix(h)`; the reduced representation is `n` acting on `W`
//! modulo the elements acting trivially there. Taking `h` principal gives
//! the Luna-Richardson-Straume reduction, which has the same quotient.

use crate::linalg::{commutator, frob_dot, null_space, vectorize};
use crate::liealg::LieGroupRep;
use crate::{Error, Mat, Result, Tolerances, Vector};

use super::{cohomogeneity, fixed_space, isotropy_algebra, principal_isotropy, DEFAULT_SAMPLES};

#[derive(Debug, Clone)]
pub struct Reduction {
    /// Normalizer of `h` acting on `Fix(h)`, in the basis `fixed_basis`.
    pub rep: LieGroupRep,
    /// Orthonormal columns spanning `Fix(h)` in the original space.
    pub fixed_basis: Mat,
    pub subalgebra_dim: usize,
    pub normalizer_dim: usize,
}

/// Reduction by the subalgebra spanned by the trace-orthonormal `h`.
pub fn reduce_by(rep: &LieGroupRep, h: &[Mat], tol: &Tolerances) -> Result<Reduction> {
    let n = rep.ambient_dim();
    let d = rep.algebra_dim();
    if h.is_empty() {
        return Ok(Reduction { rep: rep.clone(), fixed_basis: Mat::identity(n, n), subalgebra_dim: 0, normalizer_dim: d });
    }
    let fixed_basis = fixed_space(h, n, tol);
    let outside_h = |x: Mat| -> Vector {
        let mut r = x;
        for b in h {
            let c = frob_dot(b, &r);
            r -= b * c;
        }
        vectorize(&r)
    };
    let block = n * n;
    let mut system = Mat::zeros(block * h.len(), d);
    for (i, a) in rep.generators().iter().enumerate() {
        for (k, hk) in h.iter().enumerate() {
            system.view_mut((k * block, i), (block, 1)).copy_from(&outside_h(commutator(a, hk)));
        }
    }
    let coeffs = null_space(&system, tol.rank);
    let restricted: Vec<Mat> = coeffs
        .column_iter()
        .map(|c| fixed_basis.transpose() * rep.combination(c.as_slice()) * &fixed_basis)
        .collect();
    let reduced = LieGroupRep::spanned_by(format!("reduction of {}", rep.label()), fixed_basis.ncols(), &restricted, 1e-10)?;
    Ok(Reduction { rep: reduced, fixed_basis, subalgebra_dim: h.len(), normalizer_dim: coeffs.ncols() })
}

/// Reduction by the principal isotropy algebra. Fails with
/// [`Error::DegenerateReduction`] if the fixed space is smaller than the
/// cohomogeneity, which signals a rank-tolerance problem.
pub fn lrs_reduction(rep: &LieGroupRep, seed: u64, tol: &Tolerances) -> Result<Reduction> {
    let h = principal_isotropy(rep, seed, tol)?;
    let red = reduce_by(rep, &h, tol)?;
    let cohom = cohomogeneity(rep, seed, DEFAULT_SAMPLES, tol);
    if red.fixed_basis.ncols() < cohom {
        return Err(Error::DegenerateReduction { fixed_dim: red.fixed_basis.ncols(), cohomogeneity: cohom });
    }
    Ok(red)
}

/// Reduction by the isotropy algebra at `p`: the normalizer of `g_p`
/// acting on `Fix(g_p)`.
pub fn strata_reduction(rep: &LieGroupRep, p: &Vector, tol: &Tolerances) -> Result<Reduction> {
    let data = isotropy_algebra(rep, p, tol)?;
    reduce_by(rep, &data.isotropy_basis, tol)
}
