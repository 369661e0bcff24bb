//! Explicit matrix Lie algebras of orthogonal representations.
//!
//! A [`LieGroupRep`] is an ambient dimension `N` together with a basis of
//! skew-symmetric `N x N` matrices spanning the image of the Lie algebra.
//! Representations are built from a [`GroupSpec`] (factors plus a sum of
//! tensor words) or assembled with [`direct_sum`], [`doubling`] and
//! [`tensor`].

pub(crate) mod classical;
mod module;
mod spec;
pub(crate) mod spin;

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::linalg::{commutator, gram_schmidt, orthonormalize_matrices, rank, skew_defect, vectorize};
use crate::{Error, Mat, Real, Result, Vector};

pub use module::Structure;
pub use spec::{Factor, FactorKind, Field, GroupSpec, Letter, ModuleKind, Summand};

use module::Module;

/// Orthogonal representation of a compact Lie algebra.
#[derive(Debug, Clone)]
pub struct LieGroupRep {
    label: String,
    ambient_dim: usize,
    generators: Vec<Mat>,
    spec: Option<GroupSpec>,
    factor_ranges: Vec<Range<usize>>,
    summand_ranges: Vec<Range<usize>>,
    structure: Structure,
}

/// Absolute tolerance for generator skew-symmetry.
pub const SKEW_TOL: Real = 1e-12;

impl LieGroupRep {
    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        let (module, dims) = spec.build_module()?;
        let mut summand_ranges = Vec::with_capacity(dims.len());
        let mut off = 0;
        for d in dims {
            summand_ranges.push(off..off + d);
            off += d;
        }
        Self::from_module(spec.to_string(), module, Some(spec.clone()), summand_ranges)
    }

    fn from_module(label: String, m: Module, spec: Option<GroupSpec>, summand_ranges: Vec<Range<usize>>) -> Result<Self> {
        let mut factor_ranges = Vec::with_capacity(m.gens.len());
        let mut generators = Vec::new();
        for g in m.gens {
            let start = generators.len();
            generators.extend(g);
            factor_ranges.push(start..generators.len());
        }
        let rep = Self { label, ambient_dim: m.dim, generators, spec, factor_ranges, summand_ranges, structure: m.structure };
        rep.check_basic()?;
        Ok(rep)
    }

    /// Wraps an explicit list of skew-symmetric generators, which must be
    /// linearly independent.
    pub fn from_generators(label: impl Into<String>, generators: Vec<Mat>) -> Result<Self> {
        let n = generators.first().map(|g| g.nrows()).unwrap_or(0);
        Self::from_generators_on(label, n, generators)
    }

    /// As [`from_generators`](Self::from_generators) with an explicit
    /// ambient dimension, allowing the trivial algebra.
    pub fn from_generators_on(label: impl Into<String>, ambient_dim: usize, generators: Vec<Mat>) -> Result<Self> {
        let d = generators.len();
        let rep = Self {
            label: label.into(),
            ambient_dim,
            generators,
            spec: None,
            factor_ranges: vec![0..d],
            summand_ranges: vec![0..ambient_dim],
            structure: Structure::Real,
        };
        rep.check_basic()?;
        Ok(rep)
    }

    /// Representation spanned by `mats` after discarding dependent and
    /// numerically zero members; the result has a trace-orthonormal basis.
    pub fn spanned_by(label: impl Into<String>, ambient_dim: usize, mats: &[Mat], tol: Real) -> Result<Self> {
        let kept: Vec<Mat> = mats.iter().filter(|m| m.norm() > tol).cloned().collect();
        let basis = orthonormalize_matrices(&kept, tol.sqrt().min(1e-4));
        let basis = basis.into_iter().map(|m| (&m - m.transpose()) * 0.5).collect();
        Self::from_generators_on(label, ambient_dim, basis)
    }

    fn check_basic(&self) -> Result<()> {
        for (i, g) in self.generators.iter().enumerate() {
            if g.nrows() != self.ambient_dim || g.ncols() != self.ambient_dim {
                return Err(Error::Structure(format!("generator {i} is not {0}x{0}", self.ambient_dim)));
            }
            let defect = skew_defect(g);
            if defect > SKEW_TOL * g.norm().max(1.0) {
                return Err(Error::Structure(format!("generator {i} is not skew-symmetric (defect {defect:e})")));
            }
        }
        if !self.generators.is_empty() {
            let stacked = Mat::from_columns(&self.generators.iter().map(vectorize).collect::<Vec<_>>());
            let r = rank(&stacked, 1e-8);
            if r < self.generators.len() {
                return Err(Error::Structure(format!(
                    "generators span {r} dimensions, expected {} (action is not almost effective)",
                    self.generators.len()
                )));
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn algebra_dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn factor_ranges(&self) -> &[Range<usize>] {
        &self.factor_ranges
    }

    /// Coordinate ranges of the irreducible-summand blocks of `R^N`.
    pub fn summand_ranges(&self) -> &[Range<usize>] {
        &self.summand_ranges
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    /// Columns `A_1 p, ..., A_d p`.
    pub fn evaluation(&self, p: &Vector) -> Mat {
        let mut e = Mat::zeros(self.ambient_dim, self.generators.len());
        for (i, a) in self.generators.iter().enumerate() {
            e.set_column(i, &(a * p));
        }
        e
    }

    /// `sum_i c_i A_i`.
    pub fn combination(&self, coeffs: &[Real]) -> Mat {
        let mut out = Mat::zeros(self.ambient_dim, self.ambient_dim);
        for (a, &c) in self.generators.iter().zip(coeffs) {
            if c != 0.0 {
                out += a * c;
            }
        }
        out
    }

    /// Largest absolute entry of `A + A^T` over all generators.
    pub fn skew_residual(&self) -> Real {
        self.generators.iter().map(skew_defect).fold(0.0, Real::max)
    }

    /// Largest Frobenius norm of the component of `[A_i, A_j]` orthogonal
    /// to the span of the generators.
    pub fn closure_residual(&self) -> Real {
        let vecs: Vec<Vector> = self.generators.iter().map(vectorize).collect();
        let basis = gram_schmidt(vecs.iter(), 1e-8);
        let mut worst: Real = 0.0;
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                let mut r = vectorize(&commutator(&self.generators[i], &self.generators[j]));
                for _ in 0..2 {
                    for q in &basis {
                        let c = q.dot(&r);
                        r.axpy(-c, q, 1.0);
                    }
                }
                worst = worst.max(r.norm());
            }
        }
        worst
    }

    /// The representation `Q A Q^T` on the same space, for orthogonal `Q`.
    pub fn conjugated(&self, q: &Mat) -> Result<Self> {
        if q.nrows() != self.ambient_dim || (q.transpose() * q - Mat::identity(q.nrows(), q.nrows())).norm() > 1e-10 {
            return Err(Error::InvalidParameter("conjugating matrix must be orthogonal of ambient size".into()));
        }
        let generators = self.generators.iter().map(|a| q * a * q.transpose()).map(|m| (&m - m.transpose()) * 0.5).collect();
        let structure = match &self.structure {
            Structure::Real => Structure::Real,
            Structure::Complex(j) => Structure::Complex(q * j * q.transpose()),
            Structure::Quaternionic(t) => Structure::Quaternionic(t.clone().map(|m| q * m * q.transpose())),
        };
        Ok(Self {
            label: format!("{} (conjugated)", self.label),
            generators,
            structure,
            // The GroupSpec describes the original coordinates only.
            spec: None,
            summand_ranges: vec![0..self.ambient_dim],
            ..self.clone()
        })
    }

    fn module(&self) -> Module {
        let gens = self.factor_ranges.iter().map(|r| self.generators[r.clone()].to_vec()).collect();
        Module { dim: self.ambient_dim, structure: self.structure.clone(), gens }
    }

    pub fn to_document(&self) -> RepDocument {
        RepDocument {
            label: self.label.clone(),
            spec: self.spec.clone(),
            ambient_dim: self.ambient_dim,
            generators: self
                .generators
                .iter()
                .map(|g| g.row_iter().map(|r| r.iter().copied().collect()).collect())
                .collect(),
        }
    }

    pub fn from_document(doc: &RepDocument) -> Result<Self> {
        if let Some(spec) = &doc.spec {
            return Self::from_spec(spec);
        }
        let n = doc.ambient_dim;
        let mut gens = Vec::with_capacity(doc.generators.len());
        for rows in &doc.generators {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidParameter(format!("generator is not {n}x{n}")));
            }
            gens.push(Mat::from_fn(n, n, |r, c| rows[r][c]));
        }
        Self::from_generators_on(doc.label.clone(), n, gens)
    }
}

/// JSON form of a representation; generators are row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepDocument {
    #[serde(default)]
    pub label: String,
    pub spec: Option<GroupSpec>,
    pub ambient_dim: usize,
    pub generators: Vec<Vec<Vec<Real>>>,
}

fn check_dims(kind: FactorKind, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(format!("{kind:?}(0) is not a group")));
    }
    Ok(())
}

/// Standard vector representation of a classical algebra, realified.
pub fn build_classical(kind: FactorKind, n: usize) -> Result<LieGroupRep> {
    check_dims(kind, n)?;
    let field = match kind {
        FactorKind::So => Field::Real,
        FactorKind::Su | FactorKind::U => Field::Complex,
        FactorKind::Sp => Field::Quaternionic,
        other => return Err(Error::InvalidParameter(format!("{other:?} is not a classical family"))),
    };
    if kind == FactorKind::So && n == 1 {
        return Err(Error::InvalidParameter("so(1) is the zero algebra".into()));
    }
    if kind == FactorKind::Su && n == 1 {
        return Err(Error::InvalidParameter("su(1) is the zero algebra".into()));
    }
    LieGroupRep::from_spec(&GroupSpec::new(vec![Factor::new(kind, n)]).summand(field, vec![Letter::standard(0)]))
}

/// Half-spin module `Delta_7` on `R^8` or `Delta_9` on `R^16`.
pub fn build_spin(n: usize) -> Result<LieGroupRep> {
    let kind = match n {
        7 => FactorKind::Spin7,
        9 => FactorKind::Spin9,
        _ => return Err(Error::InvalidParameter(format!("spin({n}) is not supported; use 7 or 9"))),
    };
    LieGroupRep::from_spec(&GroupSpec::new(vec![Factor::new(kind, n)]).summand(Field::Real, vec![Letter::standard(0)]))
}

/// `g2` acting on the imaginary octonions `R^7`.
pub fn build_g2() -> Result<LieGroupRep> {
    LieGroupRep::from_spec(&GroupSpec::new(vec![Factor::new(FactorKind::G2, 0)]).summand(Field::Real, vec![Letter::standard(0)]))
}

/// Circle acting on `C^m` with the given rotation speeds.
pub fn build_circle_weights(weights: &[i64]) -> Result<LieGroupRep> {
    LieGroupRep::from_spec(&circle_weights_spec(weights)?)
}

pub fn circle_weights_spec(weights: &[i64]) -> Result<GroupSpec> {
    if weights.is_empty() {
        return Err(Error::InvalidParameter("no weights given".into()));
    }
    if weights.contains(&0) {
        return Err(Error::InvalidParameter("zero weight; trivial summands must be declared explicitly".into()));
    }
    Ok(weights.iter().fold(GroupSpec::new(vec![Factor::new(FactorKind::Torus, 1)]), |s, &w| {
        s.summand(Field::Complex, vec![Letter::weighted(0, vec![w])])
    }))
}

/// Diagonal action on `V + W`; both parts must come from the same group.
pub fn direct_sum(a: &LieGroupRep, b: &LieGroupRep) -> Result<LieGroupRep> {
    let same_shape = a.factor_ranges == b.factor_ranges;
    let same_group = match (&a.spec, &b.spec) {
        (Some(x), Some(y)) => x.factors == y.factors,
        _ => true,
    };
    if !same_shape || !same_group {
        return Err(Error::Structure("direct sum requires the same group acting on both parts".into()));
    }
    let m = module::direct_sum(&[a.module(), b.module()]);
    let spec = match (&a.spec, &b.spec) {
        (Some(x), Some(y)) => Some(GroupSpec { factors: x.factors.clone(), summands: [x.summands.clone(), y.summands.clone()].concat() }),
        _ => None,
    };
    let shift = a.ambient_dim;
    let summand_ranges = a
        .summand_ranges
        .iter()
        .cloned()
        .chain(b.summand_ranges.iter().map(|r| r.start + shift..r.end + shift))
        .collect();
    let label = match &spec {
        Some(s) => s.to_string(),
        None => format!("{} + {}", a.label, b.label),
    };
    LieGroupRep::from_module(label, m, spec, summand_ranges)
}

pub fn doubling(a: &LieGroupRep) -> Result<LieGroupRep> {
    direct_sum(a, a)
}

/// Outer tensor product over the given field: the product group acts by
/// `A (x) 1 + 1 (x) B`, realified.
pub fn tensor(field: Field, a: &LieGroupRep, b: &LieGroupRep) -> Result<LieGroupRep> {
    let na = a.factor_ranges.len();
    let nb = b.factor_ranges.len();
    let lift = |m: &Module, first: bool| {
        let mut gens = Vec::with_capacity(na + nb);
        for f in 0..na + nb {
            let own = if first { f < na } else { f >= na };
            if own {
                gens.push(m.gens[if first { f } else { f - na }].clone());
            } else {
                let d = if first { b.factor_ranges[f - na].len() } else { a.factor_ranges[f].len() };
                gens.push(vec![Mat::zeros(m.dim, m.dim); d]);
            }
        }
        Module { gens, ..m.clone() }
    };
    let m = module::tensor(field, &lift(&a.module(), true), &lift(&b.module(), false))?;
    let spec = match (&a.spec, &b.spec) {
        (Some(x), Some(y)) => {
            let factors = [x.factors.clone(), y.factors.clone()].concat();
            let mut summands = Vec::new();
            for sx in &x.summands {
                for sy in &y.summands {
                    let shifted = sy.word.iter().map(|l| Letter { factor: l.factor + na, ..l.clone() });
                    summands.push(Summand { field, word: sx.word.iter().cloned().chain(shifted).collect() });
                }
            }
            Some(GroupSpec { factors, summands })
        }
        _ => None,
    };
    let label = match &spec {
        Some(s) => s.to_string(),
        None => format!("({}) (x) ({})", a.label, b.label),
    };
    let n = m.dim;
    LieGroupRep::from_module(label, m, spec, vec![0..n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rep: &LieGroupRep, n: usize, d: usize) {
        assert_eq!(rep.ambient_dim(), n, "{}", rep.label());
        assert_eq!(rep.algebra_dim(), d, "{}", rep.label());
        assert!(rep.skew_residual() < SKEW_TOL);
        assert!(rep.closure_residual() < 1e-10, "{}: {}", rep.label(), rep.closure_residual());
    }

    #[test]
    fn classical_dimensions() {
        check(&build_classical(FactorKind::So, 4).unwrap(), 4, 6);
        check(&build_classical(FactorKind::Su, 3).unwrap(), 6, 8);
        check(&build_classical(FactorKind::U, 2).unwrap(), 4, 4);
        check(&build_classical(FactorKind::Sp, 2).unwrap(), 8, 10);
        check(&build_classical(FactorKind::Sp, 1).unwrap(), 4, 3);
    }

    #[test]
    fn zero_size_is_rejected() {
        for kind in [FactorKind::So, FactorKind::Su, FactorKind::U, FactorKind::Sp] {
            assert!(matches!(build_classical(kind, 0), Err(Error::InvalidParameter(_))));
        }
    }

    #[test]
    fn exceptional_dimensions() {
        check(&build_spin(7).unwrap(), 8, 21);
        check(&build_spin(9).unwrap(), 16, 36);
        check(&build_g2().unwrap(), 7, 14);
        assert!(build_spin(8).is_err());
    }

    #[test]
    fn circle_weights() {
        let rep = build_circle_weights(&[1, 2]).unwrap();
        check(&rep, 4, 1);
        assert!(build_circle_weights(&[1, 0]).is_err());
    }

    #[test]
    fn combinators() {
        let su2 = build_classical(FactorKind::Su, 2).unwrap();
        check(&doubling(&su2).unwrap(), 8, 3);
        let sp2 = build_classical(FactorKind::Sp, 2).unwrap();
        let sp1 = build_classical(FactorKind::Sp, 1).unwrap();
        let t = tensor(Field::Quaternionic, &sp2, &sp1).unwrap();
        check(&t, 8, 13);
        let so3 = build_classical(FactorKind::So, 3).unwrap();
        assert!(matches!(tensor(Field::Complex, &so3, &su2), Err(Error::Structure(_))));
        assert!(direct_sum(&so3, &su2).is_err());
    }

    #[test]
    fn spin9_with_vector() {
        let spec = GroupSpec::new(vec![Factor::new(FactorKind::Spin9, 9)])
            .summand(Field::Real, vec![Letter::standard(0)])
            .summand(Field::Real, vec![Letter::vector(0)]);
        check(&LieGroupRep::from_spec(&spec).unwrap(), 25, 36);
    }

    #[test]
    fn sp2_vector_and_su2_vector() {
        let spec = GroupSpec::new(vec![Factor::new(FactorKind::Sp, 2)])
            .summand(Field::Quaternionic, vec![Letter::standard(0)])
            .summand(Field::Real, vec![Letter::vector(0)]);
        check(&LieGroupRep::from_spec(&spec).unwrap(), 13, 10);
        let spec = GroupSpec::new(vec![Factor::new(FactorKind::Su, 2), Factor::new(FactorKind::Torus, 1)])
            .summand(Field::Complex, vec![Letter::standard(0), Letter::weighted(1, vec![1])])
            .summand(Field::Real, vec![Letter::vector(0)]);
        check(&LieGroupRep::from_spec(&spec).unwrap(), 7, 4);
    }

    #[test]
    fn mixed_tensor_words() {
        let spec = GroupSpec::new(vec![
            Factor::new(FactorKind::Torus, 1),
            Factor::new(FactorKind::Sp, 2),
            Factor::new(FactorKind::Sp, 1),
        ])
        .summand(Field::Complex, vec![Letter::weighted(0, vec![1]), Letter::standard(1)])
        .summand(Field::Quaternionic, vec![Letter::standard(1), Letter::standard(2)]);
        let rep = LieGroupRep::from_spec(&spec).unwrap();
        check(&rep, 16, 14);
        assert_eq!(rep.summand_ranges(), &[0..8, 8..16]);
    }

    #[test]
    fn spec_validation() {
        let unused = GroupSpec::new(vec![Factor::new(FactorKind::So, 3), Factor::new(FactorKind::Su, 2)])
            .summand(Field::Real, vec![Letter::standard(0)]);
        assert!(matches!(LieGroupRep::from_spec(&unused), Err(Error::InvalidParameter(_))));
        let zero = GroupSpec::new(vec![Factor::new(FactorKind::Torus, 2)]).summand(Field::Complex, vec![Letter::weighted(0, vec![0, 0])]);
        assert!(zero.validate().is_err());
    }

    #[test]
    fn document_roundtrip() {
        let rep = build_circle_weights(&[1, 2]).unwrap();
        let doc = rep.to_document();
        let json = serde_json::to_string(&doc).unwrap();
        let back: RepDocument = serde_json::from_str(&json).unwrap();
        let rebuilt = LieGroupRep::from_document(&back).unwrap();
        assert_eq!(rebuilt.generators(), rep.generators());
    }
}
