//! O'Neill curvature of the quotient at regular points.
//!
//! With `P_V(q)` the orthogonal projector onto the orbit tangent space at
//! `q`, the integrability tensor of the horizontal distribution at `p` is
//! `A_x y = -(1/2) P_V (dP_V[x] y - dP_V[y] x)` and the quotient has
//! sectional curvature `K = 1 + 3 |A_x y|^2` on the plane spanned by the
//! orthonormal horizontal pair `x, y`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::isotropy::{isotropy_algebra, orbit_dim, principal_point, DEFAULT_SAMPLES};
use crate::linalg::gram_schmidt;
use crate::liealg::LieGroupRep;
use crate::rng::{derived, unit_in_span, unit_vector};
use crate::{Error, Mat, Real, Result, Tolerances, Vector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureSample {
    pub point: Vec<Real>,
    pub x: Vec<Real>,
    pub y: Vec<Real>,
    pub a_norm_sq: Real,
    pub curvature: Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvatureStats {
    pub min: Real,
    pub max: Real,
    pub mean: Real,
    pub stddev: Real,
    pub samples: usize,
}

impl CurvatureStats {
    pub fn from_samples(samples: &[CurvatureSample]) -> Self {
        let n = samples.len();
        let values = samples.iter().map(|s| s.curvature);
        let min = values.clone().fold(Real::INFINITY, Real::min);
        let max = values.clone().fold(Real::NEG_INFINITY, Real::max);
        let mean = values.clone().sum::<Real>() / n.max(1) as Real;
        let var = values.map(|k| (k - mean).powi(2)).sum::<Real>() / n.max(1) as Real;
        Self { min, max, mean, stddev: var.sqrt(), samples: n }
    }
}

/// Generators whose values at a point form a basis of the orbit tangent
/// space, chosen by greedy column pivoting.
#[derive(Debug, Clone)]
pub struct VerticalFrame {
    indices: Vec<usize>,
}

/// Conditioning limit of the frame Gram matrix.
const MAX_CONDITION: Real = 1e12;

impl VerticalFrame {
    pub fn at(rep: &LieGroupRep, p: &Vector, tol: &Tolerances) -> Result<Self> {
        let e = rep.evaluation(p);
        let expected = orbit_dim(rep, p, tol);
        let scale = e.column_iter().map(|c| c.norm()).fold(0.0, Real::max).max(1.0);
        let mut residuals: Vec<Vector> = e.column_iter().map(|c| c.into_owned()).collect();
        let mut indices = Vec::with_capacity(expected);
        while indices.len() < expected {
            let (best, norm) = residuals
                .iter()
                .enumerate()
                .filter(|(i, _)| !indices.contains(i))
                .map(|(i, r)| (i, r.norm()))
                .fold((usize::MAX, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best == usize::MAX || norm <= tol.rank * scale {
                break;
            }
            let q = &residuals[best] / norm;
            for r in residuals.iter_mut() {
                let c = q.dot(r);
                r.axpy(-c, &q, 1.0);
            }
            indices.push(best);
        }
        if indices.len() != expected {
            return Err(Error::RankDrop(format!("found {} of {expected} independent orbit directions", indices.len())));
        }
        indices.sort_unstable();
        let frame = Self { indices };
        frame.gram_inverse(rep, p)?;
        Ok(frame)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    fn columns(&self, rep: &LieGroupRep, q: &Vector) -> Mat {
        let mut k = Mat::zeros(q.len(), self.indices.len());
        for (j, &i) in self.indices.iter().enumerate() {
            k.set_column(j, &(&rep.generators()[i] * q));
        }
        k
    }

    fn gram_inverse(&self, rep: &LieGroupRep, q: &Vector) -> Result<Mat> {
        let k = self.columns(rep, q);
        let g = k.transpose() * &k;
        if g.nrows() == 0 {
            return Ok(g);
        }
        let eig = g.clone().symmetric_eigen();
        let lo = eig.eigenvalues.iter().copied().fold(Real::INFINITY, Real::min);
        let hi = eig.eigenvalues.iter().copied().fold(0.0, Real::max);
        if lo <= 0.0 || hi / lo > MAX_CONDITION {
            return Err(Error::RankDrop(format!("orbit frame Gram matrix is singular (eigenvalues {lo:e}..{hi:e})")));
        }
        g.try_inverse().ok_or_else(|| Error::RankDrop("orbit frame Gram matrix is not invertible".into()))
    }

    /// `P_V(q) = K (K^T K)^{-1} K^T`.
    pub fn projector(&self, rep: &LieGroupRep, q: &Vector) -> Result<Mat> {
        let k = self.columns(rep, q);
        let ginv = self.gram_inverse(rep, q)?;
        Ok(&k * ginv * k.transpose())
    }

    /// Directional derivative `dP_V[v]` at `p`, by the product rule.
    pub fn projector_derivative(&self, rep: &LieGroupRep, p: &Vector, v: &Vector) -> Result<Mat> {
        let k = self.columns(rep, p);
        let dk = self.columns(rep, v);
        let ginv = self.gram_inverse(rep, p)?;
        let dg = dk.transpose() * &k + k.transpose() * &dk;
        let dginv = -(&ginv * dg * &ginv);
        Ok(&dk * &ginv * k.transpose() + &k * &ginv * dk.transpose() + &k * dginv * k.transpose())
    }
}

/// `dP_V[v]` at a regular point `p`.
pub fn vertical_projection_derivative(rep: &LieGroupRep, p: &Vector, v: &Vector, tol: &Tolerances) -> Result<Mat> {
    VerticalFrame::at(rep, p, tol)?.projector_derivative(rep, p, v)
}

/// The O'Neill tensor `A_x y` at a regular point.
pub fn oneill_a(rep: &LieGroupRep, p: &Vector, x: &Vector, y: &Vector, tol: &Tolerances) -> Result<Vector> {
    let frame = VerticalFrame::at(rep, p, tol)?;
    let pv = frame.projector(rep, p)?;
    let dx = frame.projector_derivative(rep, p, x)?;
    let dy = frame.projector_derivative(rep, p, y)?;
    Ok(-(pv * (dx * y - dy * x)) * 0.5)
}

/// `A_x y` from central differences of the horizontal extensions
/// `X(q) = (I - q q^T / |q|^2 - P_V(q)) x`, with step `h`.
pub fn oneill_a_finite_difference(
    rep: &LieGroupRep,
    p: &Vector,
    x: &Vector,
    y: &Vector,
    h: Real,
    tol: &Tolerances,
) -> Result<Vector> {
    let frame = VerticalFrame::at(rep, p, tol)?;
    let n = p.len();
    let horizontal = |q: &Vector, v: &Vector| -> Result<Vector> {
        let pi = Mat::identity(n, n) - q * q.transpose() / q.norm_squared() - frame.projector(rep, q)?;
        Ok(pi * v)
    };
    let derivative = |field: &Vector, dir: &Vector| -> Result<Vector> {
        Ok((horizontal(&(p + dir * h), field)? - horizontal(&(p - dir * h), field)?) / (2.0 * h))
    };
    // [X, Y] = DY[x] - DX[y]
    let bracket = derivative(y, x)? - derivative(x, y)?;
    Ok(frame.projector(rep, p)? * bracket * 0.5)
}

fn check_horizontal_pair(rep: &LieGroupRep, p: &Vector, x: &Vector, y: &Vector) -> Result<()> {
    let e = rep.evaluation(p);
    let bad = (x.norm() - 1.0).abs() > 1e-10
        || (y.norm() - 1.0).abs() > 1e-10
        || x.dot(y).abs() > 1e-10
        || x.dot(p).abs() > 1e-10
        || y.dot(p).abs() > 1e-10
        || (e.transpose() * x).amax() > 1e-8 * e.amax().max(1.0)
        || (e.transpose() * y).amax() > 1e-8 * e.amax().max(1.0);
    if bad {
        return Err(Error::Precondition("x, y must be orthonormal and horizontal at p".into()));
    }
    Ok(())
}

/// Sectional curvature of the quotient on the horizontal plane `x ^ y`.
pub fn oneill_curvature(rep: &LieGroupRep, p: &Vector, x: &Vector, y: &Vector, tol: &Tolerances) -> Result<CurvatureSample> {
    check_horizontal_pair(rep, p, x, y)?;
    let a = oneill_a(rep, p, x, y, tol)?;
    let a_norm_sq = a.norm_squared();
    Ok(CurvatureSample {
        point: p.iter().copied().collect(),
        x: x.iter().copied().collect(),
        y: y.iter().copied().collect(),
        a_norm_sq,
        curvature: 1.0 + 3.0 * a_norm_sq,
    })
}

/// A regular point with an orthonormal horizontal pair, drawn from the
/// `index`-th stream of `seed`.
pub fn random_horizontal_configuration(
    rep: &LieGroupRep,
    seed: u64,
    index: u64,
    tol: &Tolerances,
) -> Result<(Vector, Vector, Vector)> {
    let n = rep.ambient_dim();
    let generic = principal_point(rep, seed, DEFAULT_SAMPLES, tol).1;
    let mut rng = derived(seed ^ 0xc0e7, index);
    for _ in 0..16 {
        let p = unit_vector(&mut rng, n);
        let data = isotropy_algebra(rep, &p, tol)?;
        if data.orbit_dim() != generic {
            continue;
        }
        if data.slice_dim() < 2 {
            return Err(Error::Precondition("quotient dimension must be at least 2".into()));
        }
        let h = &data.slice_basis;
        let a = unit_in_span(&mut rng, h);
        let b = unit_in_span(&mut rng, h);
        let pair = gram_schmidt([a, b].iter(), 1e-3);
        if pair.len() == 2 {
            return Ok((p, pair[0].clone(), pair[1].clone()));
        }
    }
    Err(Error::RankDrop("no regular point found".into()))
}

/// Curvature at `samples` random regular points and horizontal planes.
pub fn curvature_samples(rep: &LieGroupRep, seed: u64, samples: usize, tol: &Tolerances) -> Result<Vec<CurvatureSample>> {
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let (p, x, y) = random_horizontal_configuration(rep, seed, i as u64, tol)?;
            oneill_curvature(rep, &p, &x, &y, tol)
        })
        .collect()
}

pub fn curvature_statistics(rep: &LieGroupRep, seed: u64, samples: usize, tol: &Tolerances) -> Result<CurvatureStats> {
    Ok(CurvatureStats::from_samples(&curvature_samples(rep, seed, samples, tol)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_circle_weights, build_classical, doubling, FactorKind, Field, Factor, GroupSpec, Letter};

    #[test]
    fn hopf_quotient_has_curvature_four() {
        let rep = build_circle_weights(&[1, 1]).unwrap();
        let t = Tolerances::default();
        for s in curvature_samples(&rep, 0, 20, &t).unwrap() {
            assert!((s.curvature - 4.0).abs() < 1e-9, "{}", s.curvature);
        }
    }

    #[test]
    fn torus_quotient_curvature_is_at_least_one() {
        let spec = GroupSpec::new(vec![Factor::new(FactorKind::Torus, 2)])
            .summand(Field::Complex, vec![Letter::weighted(0, vec![1, 0])])
            .summand(Field::Complex, vec![Letter::weighted(0, vec![0, 1])])
            .summand(Field::Complex, vec![Letter::weighted(0, vec![1, 1])]);
        let rep = LieGroupRep::from_spec(&spec).unwrap();
        let t = Tolerances::default();
        let stats = curvature_statistics(&rep, 0, 20, &t).unwrap();
        assert!(stats.min >= 1.0 - 1e-9);
    }

    #[test]
    fn projector_derivative_matches_finite_difference() {
        let rep = build_circle_weights(&[1, 1]).unwrap();
        let t = Tolerances::default();
        let (p, x, _) = random_horizontal_configuration(&rep, 3, 0, &t).unwrap();
        let frame = VerticalFrame::at(&rep, &p, &t).unwrap();
        let h = 1e-5;
        let fd = (frame.projector(&rep, &(&p + &x * h)).unwrap() - frame.projector(&rep, &(&p - &x * h)).unwrap()) / (2.0 * h);
        let exact = frame.projector_derivative(&rep, &p, &x).unwrap();
        assert!((fd - exact).norm() < 1e-6);
        let zero = frame.projector_derivative(&rep, &p, &Vector::zeros(4)).unwrap();
        assert_eq!(zero.norm(), 0.0);
    }

    #[test]
    fn sp2_doubling_has_curvature_four() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let t = Tolerances::default();
        let stats = curvature_statistics(&rep, 1, 30, &t).unwrap();
        assert!((stats.min - 4.0).abs() < 1e-6 && (stats.max - 4.0).abs() < 1e-6, "{stats:?}");
    }

    #[test]
    fn weights_one_two_have_varying_curvature() {
        let rep = build_circle_weights(&[1, 2]).unwrap();
        let stats = curvature_statistics(&rep, 0, 200, &Tolerances::default()).unwrap();
        assert!(stats.max - stats.min > 0.5, "{stats:?}");
    }

    #[test]
    fn analytic_tensor_matches_finite_differences() {
        let rep = doubling(&build_classical(FactorKind::So, 3).unwrap()).unwrap();
        let t = Tolerances::default();
        for i in 0..5 {
            let (p, x, y) = random_horizontal_configuration(&rep, 7, i, &t).unwrap();
            let a = oneill_a(&rep, &p, &x, &y, &t).unwrap();
            let fd = oneill_a_finite_difference(&rep, &p, &x, &y, 1e-5, &t).unwrap();
            assert!((a - fd).norm() < 1e-6);
        }
    }
}
