//! Real modules of a product Lie algebra, with optional complex or
//! quaternionic structure, and their sums and tensor products.

use nalgebra::Complex;

use crate::linalg::gram_schmidt;
use crate::{Error, Mat, Result, Vector};

use super::classical::{complex_unit, realify_complex, CMat};
use super::Field;

/// Invariant linear structure on a real module. Matrices are orthogonal,
/// square to `-I` and commute with every generator.
#[derive(Debug, Clone)]
pub enum Structure {
    Real,
    Complex(Mat),
    /// Anticommuting complex structures `I, J` with `K = +-IJ`.
    Quaternionic([Mat; 3]),
}

impl Structure {
    fn complex_unit(&self) -> Option<&Mat> {
        match self {
            Structure::Real => None,
            Structure::Complex(j) => Some(j),
            Structure::Quaternionic(t) => Some(&t[0]),
        }
    }
}

/// A module of a product algebra: `gens[f][k]` is the matrix of the `k`-th
/// basis element of factor `f`.
#[derive(Debug, Clone)]
pub(crate) struct Module {
    pub dim: usize,
    pub structure: Structure,
    pub gens: Vec<Vec<Mat>>,
}

impl Module {
    pub fn trivial_except(factor_dims: &[usize], factor: usize, mats: Vec<Mat>, structure: Structure) -> Self {
        let dim = structure_dim(&structure, &mats);
        let gens = factor_dims
            .iter()
            .enumerate()
            .map(|(f, &d)| if f == factor { mats.clone() } else { vec![Mat::zeros(dim, dim); d] })
            .collect();
        Self { dim, structure, gens }
    }
}

fn structure_dim(s: &Structure, mats: &[Mat]) -> usize {
    match s {
        Structure::Complex(j) => j.nrows(),
        Structure::Quaternionic(t) => t[0].nrows(),
        Structure::Real => mats.first().map(|m| m.nrows()).unwrap_or(0),
    }
}

fn block_diag(blocks: &[&Mat]) -> Mat {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = Mat::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        out.view_mut((off, off), (b.nrows(), b.nrows())).copy_from(*b);
        off += b.nrows();
    }
    out
}

pub(crate) fn direct_sum(parts: &[Module]) -> Module {
    let dim = parts.iter().map(|m| m.dim).sum();
    let nf = parts.first().map(|m| m.gens.len()).unwrap_or(0);
    let gens = (0..nf)
        .map(|f| {
            (0..parts[0].gens[f].len())
                .map(|k| block_diag(&parts.iter().map(|m| &m.gens[f][k]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let structure = if parts.iter().all(|m| matches!(m.structure, Structure::Quaternionic(_))) {
        let triple = |i: usize| {
            block_diag(
                &parts
                    .iter()
                    .map(|m| match &m.structure {
                        Structure::Quaternionic(t) => &t[i],
                        _ => unreachable!(),
                    })
                    .collect::<Vec<_>>(),
            )
        };
        Structure::Quaternionic([triple(0), triple(1), triple(2)])
    } else if parts.iter().all(|m| m.structure.complex_unit().is_some()) {
        Structure::Complex(block_diag(&parts.iter().map(|m| m.structure.complex_unit().unwrap()).collect::<Vec<_>>()))
    } else {
        Structure::Real
    };
    Module { dim, structure, gens }
}

/// Vectors `u_1..u_m` such that `u_1, J u_1, ..., u_m, J u_m` is an
/// orthonormal basis, chosen greedily from the standard basis.
pub(crate) fn complex_frame(j: &Mat) -> Mat {
    let n = j.nrows();
    let mut frame: Vec<Vector> = Vec::with_capacity(n / 2);
    let mut span: Vec<Vector> = Vec::with_capacity(n);
    for i in 0..n {
        let mut r = Vector::zeros(n);
        r[i] = 1.0;
        for _ in 0..2 {
            for q in &span {
                let c = q.dot(&r);
                r.axpy(-c, q, 1.0);
            }
        }
        let norm = r.norm();
        if norm > 0.5 {
            let u = r / norm;
            let ju = j * &u;
            span.push(u.clone());
            span.push(ju);
            frame.push(u);
        }
    }
    crate::linalg::columns(n, &frame)
}

/// Complex matrix of a real map in the frame `u_k` of the complex
/// structure `j`: entry `<u_k, X u_l> + i <J u_k, X u_l>`. For an
/// antilinear `X` this is the matrix `S` with `X z = S conj(z)`.
pub(crate) fn in_frame(x: &Mat, frame: &Mat, j: &Mat) -> CMat {
    let xf = x * frame;
    let re = frame.transpose() * &xf;
    let im = (j * frame).transpose() * &xf;
    CMat::from_fn(re.nrows(), re.ncols(), |r, c| Complex::new(re[(r, c)], im[(r, c)]))
}

fn complex_letters(m: &Module) -> Result<(Mat, &Mat)> {
    let j = m
        .structure
        .complex_unit()
        .ok_or_else(|| Error::Structure("complex tensor requested but a factor module has no invariant complex structure".into()))?;
    Ok((complex_frame(j), j))
}

fn kron_sum(a: &CMat, b: &CMat) -> CMat {
    let ia = CMat::identity(a.nrows(), a.nrows());
    let ib = CMat::identity(b.nrows(), b.nrows());
    a.kronecker(&ib) + ia.kronecker(b)
}

fn per_factor<F>(a: &Module, b: &Module, mut f: F) -> Vec<Vec<Mat>>
where
    F: FnMut(&Mat, &Mat) -> Mat,
{
    a.gens
        .iter()
        .zip(b.gens.iter())
        .map(|(ga, gb)| ga.iter().zip(gb.iter()).map(|(x, y)| f(x, y)).collect())
        .collect()
}

pub(crate) fn tensor(field: Field, a: &Module, b: &Module) -> Result<Module> {
    match field {
        Field::Real => Ok(real_tensor(a, b)),
        Field::Complex => complex_tensor(a, b),
        Field::Quaternionic => quaternionic_tensor(a, b),
    }
}

fn real_tensor(a: &Module, b: &Module) -> Module {
    let ia = Mat::identity(a.dim, a.dim);
    let ib = Mat::identity(b.dim, b.dim);
    let gens = per_factor(a, b, |x, y| x.kronecker(&ib) + ia.kronecker(y));
    Module { dim: a.dim * b.dim, structure: Structure::Real, gens }
}

fn complex_tensor(a: &Module, b: &Module) -> Result<Module> {
    let (fa, ja) = complex_letters(a)?;
    let (fb, jb) = complex_letters(b)?;
    let m = fa.ncols() * fb.ncols();
    let gens = per_factor(a, b, |x, y| realify_complex(&kron_sum(&in_frame(x, &fa, ja), &in_frame(y, &fb, jb))));
    Ok(Module { dim: 2 * m, structure: Structure::Complex(complex_unit(m)), gens })
}

/// `V (x)_H W` as the real form of `V (x)_C W` fixed by `J_V (x) J_W`.
fn quaternionic_tensor(a: &Module, b: &Module) -> Result<Module> {
    let triple = |m: &Module| match &m.structure {
        Structure::Quaternionic(t) => Ok(t.clone()),
        _ => Err(Error::Structure("quaternionic tensor requested but a factor module has no invariant quaternionic structure".into())),
    };
    let ta = triple(a)?;
    let tb = triple(b)?;
    let fa = complex_frame(&ta[0]);
    let fb = complex_frame(&tb[0]);
    let sa = in_frame(&ta[1], &fa, &ta[0]);
    let sb = in_frame(&tb[1], &fb, &tb[0]);
    let m = fa.ncols() * fb.ncols();
    let mut conj = Mat::identity(2 * m, 2 * m);
    for k in 0..m {
        conj[(2 * k + 1, 2 * k + 1)] = -1.0;
    }
    let t = realify_complex(&sa.kronecker(&sb)) * conj;
    let projector = (Mat::identity(2 * m, 2 * m) + &t) * 0.5;
    let candidates: Vec<Vector> = (0..2 * m).map(|i| projector.column(i).into_owned()).collect();
    let basis = gram_schmidt(candidates.iter(), 1e-6);
    if basis.len() != m {
        return Err(Error::Structure(format!(
            "real form of quaternionic tensor has dimension {} instead of {m}",
            basis.len()
        )));
    }
    let q = crate::linalg::columns(2 * m, &basis);
    let gens = per_factor(a, b, |x, y| {
        let full = realify_complex(&kron_sum(&in_frame(x, &fa, &ta[0]), &in_frame(y, &fb, &tb[0])));
        q.transpose() * full * &q
    });
    Ok(Module { dim: m, structure: Structure::Real, gens })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::classical::quaternionic_triple;

    #[test]
    fn frame_of_quaternionic_i_is_orthonormal() {
        let [i, _, _] = quaternionic_triple(2);
        let f = complex_frame(&i);
        assert_eq!(f.ncols(), 4);
        let mut full = Mat::zeros(8, 8);
        for k in 0..4 {
            full.set_column(2 * k, &f.column(k));
            full.set_column(2 * k + 1, &(&i * f.column(k)));
        }
        assert!((full.transpose() * &full - Mat::identity(8, 8)).norm() < 1e-14);
    }

    #[test]
    fn antilinear_structure_squares_to_minus_one() {
        let [i, j, _] = quaternionic_triple(1);
        let f = complex_frame(&i);
        let s = in_frame(&j, &f, &i);
        let sq = &s * s.map(|z| z.conj());
        assert!((sq + CMat::identity(2, 2)).norm() < 1e-14);
    }
}
