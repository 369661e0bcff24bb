//! Vertical and horizontal parts of Killing fields along the sphere.

use serde::{Deserialize, Serialize};

use crate::isotropy::isotropy_algebra;
use crate::linalg::skew_defect;
use crate::liealg::LieGroupRep;
use crate::{Error, Mat, Real, Result, Tolerances, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KillingSplit {
    /// `|P_V(p) xi p|`.
    pub vertical: Real,
    /// Norm of the part of `xi p` orthogonal to `p` and to `V_p`.
    pub horizontal: Real,
    /// `<xi p, p>`, zero for skew `xi`.
    pub radial: Real,
}

/// Splits the Killing field `q -> xi q` at the unit point `p` into its
/// orbit-tangent and horizontal parts.
pub fn killing_component_norms(rep: &LieGroupRep, xi: &Mat, p: &Vector, tol: &Tolerances) -> Result<KillingSplit> {
    if xi.nrows() != rep.ambient_dim() || xi.ncols() != rep.ambient_dim() || p.len() != rep.ambient_dim() {
        return Err(Error::InvalidParameter("xi and p must match the ambient dimension".into()));
    }
    if skew_defect(xi) > 1e-12 * xi.norm().max(1.0) {
        return Err(Error::InvalidParameter("xi must be skew-symmetric".into()));
    }
    if (p.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter("p must be a unit vector".into()));
    }
    let data = isotropy_algebra(rep, p, tol)?;
    let v = xi * p;
    let radial = v.dot(p);
    let vertical = data.orbit_basis.transpose() * &v;
    let horizontal = &v - p * radial - &data.orbit_basis * &vertical;
    Ok(KillingSplit { vertical: vertical.norm(), horizontal: horizontal.norm(), radial })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_classical, doubling, FactorKind};

    /// Coordinates of `diag(cos r, sin r)` in the quaternionic doubling,
    /// whose summands are the two columns.
    fn gamma(r: Real) -> Vector {
        let mut p = Vector::zeros(16);
        p[0] = r.cos();
        p[12] = r.sin();
        p
    }

    /// Right multiplication by `[[0, 1], [-1, 0]]`: column one becomes minus
    /// column two, column two becomes column one.
    fn xi() -> Mat {
        let mut m = Mat::zeros(16, 16);
        for k in 0..8 {
            m[(k, 8 + k)] = -1.0;
            m[(8 + k, k)] = 1.0;
        }
        m
    }

    #[test]
    fn profile_is_cos_two_r() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let t = Tolerances::default();
        for r in [0.0, 0.3, std::f64::consts::FRAC_PI_4] {
            let s = killing_component_norms(&rep, &xi(), &gamma(r), &t).unwrap();
            assert!((s.vertical - (2.0 * r).sin()).abs() < 1e-9, "{r}: {s:?}");
            assert!((s.horizontal - (2.0 * r).cos()).abs() < 1e-9, "{r}: {s:?}");
        }
    }
}
