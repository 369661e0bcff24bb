//! Symbolic description of a product group and a representation as a sum
//! of tensor words, plus the builder turning it into matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{commutator, frob_dot, orthonormalize_matrices};
use crate::{Error, Mat, Result};

use super::classical::{
    complex_unit, quaternionic_triple, realify_complex, so_basis, sp2_vector_space, sp_basis, su_basis_complex,
    u_basis_complex,
};
use super::module::{direct_sum, tensor, Module, Structure};
use super::spin::{g2_basis, spin7_basis, spin9_basis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Torus,
    So,
    Su,
    U,
    Sp,
    Spin7,
    Spin9,
    G2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
    Quaternionic,
}

/// Which module of a factor a tensor letter refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    /// Defining module: `R^n`, `C^n`, `H^n`, `Delta_7`, `Delta_9`, `R^7`,
    /// or a weighted complex line for a torus.
    #[default]
    Standard,
    /// Vector representation: `so(n)` on `R^n`, `su(2) = sp(1)` on `R^3`,
    /// `sp(2)` on `R^5`, `spin(n)` on `R^n`, `g2` on `R^7`.
    Vector,
    Adjoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub kind: FactorKind,
    /// Size parameter; the torus rank for `torus`, ignored for the
    /// exceptional kinds.
    #[serde(default)]
    pub n: usize,
}

impl Factor {
    pub fn new(kind: FactorKind, n: usize) -> Self {
        Self { kind, n }
    }

    pub fn algebra_dim(&self) -> usize {
        let n = self.n;
        match self.kind {
            FactorKind::Torus => n,
            FactorKind::So => n * n.saturating_sub(1) / 2,
            FactorKind::Su => (n * n).saturating_sub(1),
            FactorKind::U => n * n,
            FactorKind::Sp => n * (2 * n + 1),
            FactorKind::Spin7 => 21,
            FactorKind::Spin9 => 36,
            FactorKind::G2 => 14,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Torus => write!(f, "T{}", self.n),
            FactorKind::So => write!(f, "SO({})", self.n),
            FactorKind::Su => write!(f, "SU({})", self.n),
            FactorKind::U => write!(f, "U({})", self.n),
            FactorKind::Sp => write!(f, "Sp({})", self.n),
            FactorKind::Spin7 => write!(f, "Spin(7)"),
            FactorKind::Spin9 => write!(f, "Spin(9)"),
            FactorKind::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Letter {
    pub factor: usize,
    #[serde(default)]
    pub module: ModuleKind,
    /// Integer weights, one per circle of a torus factor.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

impl Letter {
    pub fn standard(factor: usize) -> Self {
        Self { factor, module: ModuleKind::Standard, weights: None }
    }

    pub fn vector(factor: usize) -> Self {
        Self { factor, module: ModuleKind::Vector, weights: None }
    }

    pub fn weighted(factor: usize, weights: Vec<i64>) -> Self {
        Self { factor, module: ModuleKind::Standard, weights: Some(weights) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub field: Field,
    pub word: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
    pub summands: Vec<Summand>,
}

impl GroupSpec {
    pub fn new(factors: Vec<Factor>) -> Self {
        Self { factors, summands: Vec::new() }
    }

    pub fn summand(mut self, field: Field, word: Vec<Letter>) -> Self {
        self.summands.push(Summand { field, word });
        self
    }

    /// Repeats every summand once more (the doubling `V + V`).
    pub fn doubled(mut self) -> Self {
        let copy = self.summands.clone();
        self.summands.extend(copy);
        self
    }

    pub fn algebra_dim(&self) -> usize {
        self.factors.iter().map(Factor::algebra_dim).sum()
    }

    pub fn validate(&self) -> Result<()> {
        if self.factors.is_empty() {
            return Err(Error::InvalidParameter("group has no factors".into()));
        }
        for (i, f) in self.factors.iter().enumerate() {
            let needs_n = !matches!(f.kind, FactorKind::Spin7 | FactorKind::Spin9 | FactorKind::G2);
            if needs_n && f.n == 0 {
                return Err(Error::InvalidParameter(format!("factor {i} ({:?}) has size parameter 0", f.kind)));
            }
        }
        if self.summands.is_empty() {
            return Err(Error::InvalidParameter("representation has no summands".into()));
        }
        let mut used = vec![false; self.factors.len()];
        for (s, summand) in self.summands.iter().enumerate() {
            if summand.word.is_empty() {
                return Err(Error::InvalidParameter(format!("summand {s} is an empty tensor word")));
            }
            for letter in &summand.word {
                let f = self.factors.get(letter.factor).ok_or_else(|| {
                    Error::InvalidParameter(format!("summand {s} refers to missing factor {}", letter.factor))
                })?;
                used[letter.factor] = true;
                match (f.kind, &letter.weights) {
                    (FactorKind::Torus, None) => {
                        return Err(Error::InvalidParameter(format!("summand {s}: torus letter needs weights")))
                    }
                    (FactorKind::Torus, Some(w)) => {
                        if w.len() != f.n {
                            return Err(Error::InvalidParameter(format!(
                                "summand {s}: {} weights for a torus of rank {}",
                                w.len(),
                                f.n
                            )));
                        }
                        if w.iter().all(|&x| x == 0) {
                            return Err(Error::InvalidParameter(format!(
                                "summand {s}: all torus weights are zero; declare trivial summands explicitly"
                            )));
                        }
                        if letter.module != ModuleKind::Standard {
                            return Err(Error::InvalidParameter(format!("summand {s}: torus letters are weighted lines")));
                        }
                    }
                    (_, Some(_)) => {
                        return Err(Error::InvalidParameter(format!("summand {s}: weights on a non-torus factor")))
                    }
                    _ => {}
                }
            }
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::InvalidParameter(format!("factor {i} ({}) appears in no summand", self.factors[i])));
        }
        Ok(())
    }

    /// The assembled module and the real dimension of each summand.
    pub(crate) fn build_module(&self) -> Result<(Module, Vec<usize>)> {
        self.validate()?;
        let dims: Vec<usize> = self.factors.iter().map(Factor::algebra_dim).collect();
        let defining: Vec<Option<(Vec<Mat>, Structure)>> = self.factors.iter().map(defining_module).collect();
        let mut parts = Vec::with_capacity(self.summands.len());
        for (s, summand) in self.summands.iter().enumerate() {
            let context = |e: Error| Error::Structure(format!("summand {s} ({}): {e}", self.summand_label(summand)));
            let mut letters = summand.word.iter().map(|l| letter_module(self, &dims, &defining, l));
            let mut acc = letters.next().expect("validated nonempty")?;
            for next in letters {
                acc = tensor(summand.field, &acc, &next?).map_err(context)?;
            }
            if summand.word.len() == 1 {
                acc = retag(acc, summand.field).map_err(context)?;
            }
            parts.push(acc);
        }
        let dims = parts.iter().map(|m| m.dim).collect();
        Ok((direct_sum(&parts), dims))
    }

    fn summand_label(&self, s: &Summand) -> String {
        let sep = match s.field {
            Field::Real => " (x)R ",
            Field::Complex => " (x)C ",
            Field::Quaternionic => " (x)H ",
        };
        s.word
            .iter()
            .map(|l| {
                let f = &self.factors[l.factor];
                match (&l.weights, l.module) {
                    (Some(w), _) => format!("{f}{w:?}"),
                    (None, ModuleKind::Standard) => format!("{f}.std"),
                    (None, ModuleKind::Vector) => format!("{f}.vec"),
                    (None, ModuleKind::Adjoint) => format!("{f}.ad"),
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = self.factors.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" x ");
        let rep = self.summands.iter().map(|s| self.summand_label(s)).collect::<Vec<_>>().join(" + ");
        write!(f, "{group} on {rep}")
    }
}

/// A single-letter summand keeps only the structure its field tag asks for.
fn retag(m: Module, field: Field) -> Result<Module> {
    let structure = match (field, m.structure) {
        (Field::Real, _) => Structure::Real,
        (Field::Complex, Structure::Complex(j)) => Structure::Complex(j),
        (Field::Complex, Structure::Quaternionic(t)) => Structure::Complex(t[0].clone()),
        (Field::Quaternionic, Structure::Quaternionic(t)) => Structure::Quaternionic(t),
        (f, _) => return Err(Error::Structure(format!("module has no invariant {f:?} structure"))),
    };
    Ok(Module { structure, ..m })
}

fn defining_module(f: &Factor) -> Option<(Vec<Mat>, Structure)> {
    let n = f.n;
    Some(match f.kind {
        FactorKind::Torus => return None,
        FactorKind::So => (so_basis(n), Structure::Real),
        FactorKind::Su => (su_basis_complex(n).iter().map(realify_complex).collect(), Structure::Complex(complex_unit(n))),
        FactorKind::U => (u_basis_complex(n).iter().map(realify_complex).collect(), Structure::Complex(complex_unit(n))),
        FactorKind::Sp => (sp_basis(n), Structure::Quaternionic(quaternionic_triple(n))),
        FactorKind::Spin7 => (spin7_basis(), Structure::Real),
        FactorKind::Spin9 => (spin9_basis(), Structure::Real),
        FactorKind::G2 => (g2_basis(), Structure::Real),
    })
}

/// Matrices of `X -> [xi, X]` on the span of `space` for every `xi` in
/// `gens`, in an orthonormal basis of that span.
fn induced_by_commutator(gens: &[Mat], space: &[Mat]) -> Vec<Mat> {
    let basis = orthonormalize_matrices(space, 1e-8);
    gens.iter()
        .map(|xi| {
            let images: Vec<Mat> = basis.iter().map(|b| commutator(xi, b)).collect();
            Mat::from_fn(basis.len(), basis.len(), |r, c| frob_dot(&basis[r], &images[c]))
        })
        .collect()
}

fn letter_module(
    spec: &GroupSpec,
    dims: &[usize],
    defining: &[Option<(Vec<Mat>, Structure)>],
    letter: &Letter,
) -> Result<Module> {
    let f = letter.factor;
    let factor = &spec.factors[f];
    if factor.kind == FactorKind::Torus {
        let w = letter.weights.as_ref().expect("validated torus weights");
        let j = complex_unit(1);
        let mats = w.iter().map(|&x| &j * x as f64).collect();
        return Ok(Module::trivial_except(dims, f, mats, Structure::Complex(j)));
    }
    let (gens, structure) = defining[f].clone().expect("non-torus factors have a defining module");
    let unsupported = || Error::InvalidParameter(format!("{factor} has no {:?} module", letter.module));
    let module = match letter.module {
        ModuleKind::Standard => Module::trivial_except(dims, f, gens, structure),
        ModuleKind::Adjoint => Module::trivial_except(dims, f, induced_by_commutator(&gens, &gens), Structure::Real),
        ModuleKind::Vector => {
            let mats = match (factor.kind, factor.n) {
                (FactorKind::So, _) | (FactorKind::G2, _) => gens,
                (FactorKind::Su, 2) | (FactorKind::Sp, 1) => induced_by_commutator(&gens, &gens),
                (FactorKind::Sp, 2) => induced_by_commutator(&gens, &sp2_vector_space()),
                (FactorKind::Spin7, _) => so_basis(7),
                (FactorKind::Spin9, _) => so_basis(9),
                _ => return Err(unsupported()),
            };
            Module::trivial_except(dims, f, mats, Structure::Real)
        }
    };
    if module.dim == 0 {
        return Err(unsupported());
    }
    Ok(module)
}
