//! Tracing horizontal great circles through the orbit-type strata.

use serde::{Deserialize, Serialize};

use crate::isotropy::{cohomogeneity, stratum_witness, Signature, DEFAULT_SAMPLES};
use crate::liealg::LieGroupRep;
use crate::{Error, Real, Result, Tolerances, Vector};

/// Parameter resolution of the stratum-change bisection.
const BISECTION_TOL: Real = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeodesicSample {
    pub t: Real,
    pub stratum_codim: usize,
    pub signature: Signature,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignatureChange {
    /// The change happens inside `(lower, upper)`.
    pub lower: Real,
    pub upper: Real,
    pub from: GeodesicSample,
    pub to: GeodesicSample,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeodesicTrace {
    pub samples: Vec<GeodesicSample>,
    pub changes: Vec<SignatureChange>,
}

impl GeodesicTrace {
    /// Stratum codimensions with consecutive repeats removed.
    pub fn codim_sequence(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for s in &self.samples {
            if out.last() != Some(&s.stratum_codim) {
                out.push(s.stratum_codim);
            }
        }
        out
    }
}

/// Samples the orbit type along `gamma(t) = cos(t) p + sin(t) v` at
/// `t = k * step_size` for `k = 0..=steps`, and brackets every signature
/// change by bisection.
pub fn trace_quotient_geodesic(
    rep: &LieGroupRep,
    p: &Vector,
    v: &Vector,
    steps: usize,
    step_size: Real,
    tol: &Tolerances,
) -> Result<GeodesicTrace> {
    check_horizontal(rep, p, v)?;
    let cohom = cohomogeneity(rep, 0, DEFAULT_SAMPLES, tol);
    let at = |t: Real| -> Result<GeodesicSample> {
        let q = p * t.cos() + v * t.sin();
        let w = stratum_witness(rep, &q, cohom, tol)?;
        Ok(GeodesicSample { t, stratum_codim: w.stratum_codim, signature: w.signature() })
    };
    let samples = (0..=steps).map(|k| at(k as Real * step_size)).collect::<Result<Vec<_>>>()?;
    let mut changes = Vec::new();
    for pair in samples.windows(2) {
        if pair[0].signature == pair[1].signature {
            continue;
        }
        let (mut lo, mut hi) = (pair[0], pair[1]);
        while hi.t - lo.t > BISECTION_TOL {
            let mid = at(0.5 * (lo.t + hi.t))?;
            if mid.signature == lo.signature {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        changes.push(SignatureChange { lower: lo.t, upper: hi.t, from: lo, to: hi });
    }
    Ok(GeodesicTrace { samples, changes })
}

fn check_horizontal(rep: &LieGroupRep, p: &Vector, v: &Vector) -> Result<()> {
    let e = rep.evaluation(p);
    let scale = e.amax().max(1.0);
    if (p.norm() - 1.0).abs() > 1e-10
        || (v.norm() - 1.0).abs() > 1e-10
        || p.dot(v).abs() > 1e-10
        || (e.transpose() * v).amax() > 1e-8 * scale
    {
        return Err(Error::Precondition("v must be a unit horizontal vector at the unit point p".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{build_circle_weights, build_classical, doubling, FactorKind};

    #[test]
    fn boundary_to_soul_geodesic() {
        let rep = doubling(&build_classical(FactorKind::Sp, 2).unwrap()).unwrap();
        let mut p = Vector::zeros(16);
        p[0] = 1.0;
        let mut v = Vector::zeros(16);
        v[12] = 1.0;
        let trace = trace_quotient_geodesic(&rep, &p, &v, 8, std::f64::consts::FRAC_PI_4 / 8.0, &Tolerances::default()).unwrap();
        assert_eq!(trace.samples[0].stratum_codim, 1);
        assert!(trace.samples[1..8].iter().all(|s| s.stratum_codim == 0));
        assert!(trace.changes[0].upper - trace.changes[0].lower <= 1e-9);
    }

    #[test]
    fn free_action_keeps_its_signature() {
        let rep = build_circle_weights(&[1, 1]).unwrap();
        let p = Vector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        let v = Vector::from_vec(vec![0.0, 0.0, 1.0, 0.0]);
        let trace = trace_quotient_geodesic(&rep, &p, &v, 10, 0.3, &Tolerances::default()).unwrap();
        assert!(trace.changes.is_empty());
    }

    #[test]
    fn leaving_the_weight_two_axis() {
        let rep = build_circle_weights(&[1, 2]).unwrap();
        let p = Vector::from_vec(vec![0.0, 0.0, 1.0, 0.0]);
        let v = Vector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        let trace = trace_quotient_geodesic(&rep, &p, &v, 4, 0.3, &Tolerances::default()).unwrap();
        assert_eq!(trace.codim_sequence(), vec![2, 0]);
    }
}
