//! Numerical polarity and infinitesimal polarity.
//!
//! A representation is polar iff the normal space `Sigma = R p + H_p` at a
//! principal point `p` meets every orbit orthogonally, i.e. `A q` is
//! orthogonal to `Sigma` for every generator `A` and every `q` in `Sigma`.
//! Infinitesimal polarity asks the same of every slice representation; it
//! is checked at the stratum witnesses found by
//! [`find_singular_points`](crate::isotropy::find_singular_points), so the
//! verdict is witness-based.

use serde::{Deserialize, Serialize};

use crate::isotropy::{
    cohomogeneity, find_singular_points, isotropy_algebra, principal_point, SearchOptions, StratumWitness,
    DEFAULT_SAMPLES,
};
use crate::liealg::LieGroupRep;
use crate::rng::{derived, unit_in_span};
use crate::{Mat, Real, Result, Tolerances};

/// Number of sample points in the section test.
pub const DEFAULT_TEST_POINTS: usize = 256;
/// Restarts of the witness search inside slice representations.
const NESTED_RESTARTS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Polar,
    Inconclusive,
    NonPolar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolarityVerdict {
    pub verdict: Verdict,
    /// Largest relative component of `A_i q` inside the candidate section.
    pub residual: Real,
    pub test_points: usize,
}

impl PolarityVerdict {
    fn classify(residual: Real, test_points: usize, tol: Real) -> Self {
        let verdict = if residual < tol {
            Verdict::Polar
        } else if residual > 10.0 * tol {
            Verdict::NonPolar
        } else {
            Verdict::Inconclusive
        };
        Self { verdict, residual, test_points }
    }

    fn trivially_polar() -> Self {
        Self { verdict: Verdict::Polar, residual: 0.0, test_points: 0 }
    }

    pub fn is_polar(&self) -> bool {
        self.verdict == Verdict::Polar
    }

    /// Conjunction: the worst verdict, the largest residual.
    fn and(self, other: Self) -> Self {
        Self {
            verdict: self.verdict.max(other.verdict),
            residual: self.residual.max(other.residual),
            test_points: self.test_points + other.test_points,
        }
    }
}

/// Section test at a principal point with `test_points` samples.
pub fn is_polar(rep: &LieGroupRep, seed: u64, test_points: usize, tol: &Tolerances) -> Result<PolarityVerdict> {
    if rep.algebra_dim() == 0 || rep.ambient_dim() == 0 {
        return Ok(PolarityVerdict::trivially_polar());
    }
    let (p, _) = principal_point(rep, seed, DEFAULT_SAMPLES, tol);
    let data = isotropy_algebra(rep, &p, tol)?;
    let n = rep.ambient_dim();
    let mut section = Mat::zeros(n, 1 + data.slice_dim());
    section.set_column(0, &p);
    section.view_mut((0, 1), (n, data.slice_dim())).copy_from(&data.slice_basis);
    let residual = section_residual(rep, &section, seed, test_points);
    Ok(PolarityVerdict::classify(residual, test_points, tol.polar))
}

fn section_residual(rep: &LieGroupRep, section: &Mat, seed: u64, test_points: usize) -> Real {
    let mut worst: Real = 0.0;
    for i in 0..test_points {
        let q = unit_in_span(&mut derived(seed ^ 0x5ec7, i as u64), section);
        for a in rep.generators() {
            let v = a * &q;
            let norm = v.norm();
            if norm < 1e-10 {
                continue;
            }
            let inside = (section.transpose() * &v).norm();
            worst = worst.max(inside / norm);
        }
    }
    worst
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfPolarReport {
    pub verdict: PolarityVerdict,
    /// Stratum witnesses whose slice representations were tested.
    pub witnesses: Vec<StratumWitness>,
    /// First witness whose slice representation is not polar.
    pub failing: Option<StratumWitness>,
}

/// Checks polarity of the slice representation at every stratum witness,
/// recursing into the slices' own witnesses up to depth equal to the
/// cohomogeneity.
pub fn is_infinitesimally_polar(rep: &LieGroupRep, search: &SearchOptions, tol: &Tolerances) -> Result<InfPolarReport> {
    let cohom = cohomogeneity(rep, search.seed, DEFAULT_SAMPLES, tol);
    let witnesses = find_singular_points(rep, cohom, search, tol)?;
    let mut verdict = PolarityVerdict::trivially_polar();
    let mut failing = None;
    for w in &witnesses {
        let slice = isotropy_algebra(rep, &w.point_vector(), tol)?.slice_rep;
        let v = slice_polarity(&slice, search.seed, cohom, tol)?;
        if !v.is_polar() && failing.is_none() {
            failing = Some(w.clone());
        }
        verdict = verdict.and(v);
    }
    Ok(InfPolarReport { verdict, witnesses, failing })
}

fn slice_polarity(slice: &LieGroupRep, seed: u64, depth: usize, tol: &Tolerances) -> Result<PolarityVerdict> {
    let own = is_polar(slice, seed, DEFAULT_TEST_POINTS, tol)?;
    if !own.is_polar() || depth == 0 || slice.algebra_dim() == 0 {
        return Ok(own);
    }
    let cohom = cohomogeneity(slice, seed, DEFAULT_SAMPLES, tol);
    if cohom <= 1 {
        return Ok(own);
    }
    let opts = SearchOptions { seed, restarts: NESTED_RESTARTS, ..SearchOptions::default() };
    let mut acc = own;
    for w in find_singular_points(slice, cohom, &opts, tol)? {
        if w.isotropy_dim == 0 {
            continue;
        }
        let inner = isotropy_algebra(slice, &w.point_vector(), tol)?.slice_rep;
        acc = acc.and(slice_polarity(&inner, seed, depth - 1, tol)?);
        if !acc.is_polar() {
            break;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_classical, doubling, FactorKind, Field, GroupSpec, Factor, Letter};

    fn torus(weights: &[[i64; 2]]) -> LieGroupRep {
        let spec = weights.iter().fold(GroupSpec::new(vec![Factor::new(FactorKind::Torus, 2)]), |s, w| {
            s.summand(Field::Complex, vec![Letter::weighted(0, w.to_vec())])
        });
        LieGroupRep::from_spec(&spec).unwrap()
    }

    #[test]
    fn vector_rep_is_polar() {
        let rep = build_classical(FactorKind::So, 3).unwrap();
        let v = is_polar(&rep, 0, 64, &Tolerances::default()).unwrap();
        assert_eq!(v.verdict, Verdict::Polar);
        assert!(v.residual < 1e-10);
    }

    #[test]
    fn independent_torus_is_polar() {
        let v = is_polar(&torus(&[[1, 0], [0, 1]]), 0, 64, &Tolerances::default()).unwrap();
        assert!(v.residual < 1e-10, "{v:?}");
    }

    #[test]
    fn sp2_doubling_is_not_polar() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let v = is_polar(&rep, 0, 64, &Tolerances::default()).unwrap();
        assert_eq!(v.verdict, Verdict::NonPolar);
        assert!(v.residual > 1e-2);
    }

    #[test]
    fn maximal_torus_of_su3_is_not_infinitesimally_polar() {
        let rep = torus(&[[1, 0], [0, 1], [-1, -1]]);
        let opts = SearchOptions { restarts: 8, ..Default::default() };
        let report = is_infinitesimally_polar(&rep, &opts, &Tolerances::default()).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::NonPolar);
        assert!(report.failing.is_some());
    }

    #[test]
    fn sp2_doubling_is_infinitesimally_polar() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let opts = SearchOptions { restarts: 8, ..Default::default() };
        let report = is_infinitesimally_polar(&rep, &opts, &Tolerances::default()).unwrap();
        assert_eq!(report.verdict.verdict, Verdict::Polar, "{report:?}");
    }
}
