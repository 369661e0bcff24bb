//! Bases of the classical matrix Lie algebras and their realified standard
//! modules.
//!
//! Complex coordinates are realified as `(re, im)` pairs, so an entry `z`
//! becomes the block `[[re, -im], [im, re]]`. Quaternionic coordinates use
//! the order `(1, i, j, k)`; matrices act by left multiplication and scalars
//! by right multiplication, so `sp(n)` commutes with the right action of
//! `i`, `j`, `k`.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{Complex, DMatrix};

use crate::Mat;

pub(crate) type CMat = DMatrix<Complex<f64>>;
pub(crate) type Quat = [f64; 4];

const Q_ONE: Quat = [1.0, 0.0, 0.0, 0.0];
const Q_I: Quat = [0.0, 1.0, 0.0, 0.0];
const Q_J: Quat = [0.0, 0.0, 1.0, 0.0];
const Q_K: Quat = [0.0, 0.0, 0.0, 1.0];
pub(crate) const IMAGINARY_UNITS: [Quat; 3] = [Q_I, Q_J, Q_K];

/// Hamilton product.
pub(crate) fn qmul(p: Quat, q: Quat) -> Quat {
    [
        p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
        p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
        p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
        p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0],
    ]
}

fn basis_quat(c: usize) -> Quat {
    let mut e = [0.0; 4];
    e[c] = 1.0;
    e
}

/// Real 4x4 matrix of `x -> q x`.
pub(crate) fn left_mult(q: Quat) -> Mat {
    let mut m = Mat::zeros(4, 4);
    for c in 0..4 {
        let col = qmul(q, basis_quat(c));
        for r in 0..4 {
            m[(r, c)] = col[r];
        }
    }
    m
}

/// Real 4x4 matrix of `x -> x q`.
pub(crate) fn right_mult(q: Quat) -> Mat {
    let mut m = Mat::zeros(4, 4);
    for c in 0..4 {
        let col = qmul(basis_quat(c), q);
        for r in 0..4 {
            m[(r, c)] = col[r];
        }
    }
    m
}

/// Square quaternionic matrix stored row-major.
#[derive(Debug, Clone)]
pub(crate) struct QMat {
    n: usize,
    entries: Vec<Quat>,
}

impl QMat {
    pub(crate) fn zeros(n: usize) -> Self {
        Self { n, entries: vec![[0.0; 4]; n * n] }
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, q: Quat) {
        self.entries[r * self.n + c] = q;
    }

    pub(crate) fn realify(&self) -> Mat {
        let mut m = Mat::zeros(4 * self.n, 4 * self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                let q = self.entries[r * self.n + c];
                if q != [0.0; 4] {
                    m.view_mut((4 * r, 4 * c), (4, 4)).copy_from(&left_mult(q));
                }
            }
        }
        m
    }
}

fn scale(q: Quat, s: f64) -> Quat {
    [q[0] * s, q[1] * s, q[2] * s, q[3] * s]
}

fn neg(q: Quat) -> Quat {
    scale(q, -1.0)
}

pub(crate) fn realify_complex(m: &CMat) -> Mat {
    let (r, c) = m.shape();
    let mut out = Mat::zeros(2 * r, 2 * c);
    for i in 0..r {
        for j in 0..c {
            let z = m[(i, j)];
            out[(2 * i, 2 * j)] = z.re;
            out[(2 * i, 2 * j + 1)] = -z.im;
            out[(2 * i + 1, 2 * j)] = z.im;
            out[(2 * i + 1, 2 * j + 1)] = z.re;
        }
    }
    out
}

/// Realified multiplication by `i` on `C^m`.
pub(crate) fn complex_unit(m: usize) -> Mat {
    realify_complex(&(CMat::identity(m, m) * Complex::new(0.0, 1.0)))
}

/// Right multiplication by `i`, `j`, `k` on `H^n`.
pub(crate) fn quaternionic_triple(n: usize) -> [Mat; 3] {
    IMAGINARY_UNITS.map(|q| {
        let block = right_mult(q);
        let mut m = Mat::zeros(4 * n, 4 * n);
        for r in 0..n {
            m.view_mut((4 * r, 4 * r), (4, 4)).copy_from(&block);
        }
        m
    })
}

/// `E_ij = e_i e_j^T - e_j e_i^T` for `i < j`, lexicographic.
pub(crate) fn so_basis(n: usize) -> Vec<Mat> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(elementary_skew(n, i, j));
        }
    }
    out
}

pub(crate) fn elementary_skew(n: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    m[(i, j)] = 1.0;
    m[(j, i)] = -1.0;
    m
}

/// Off-diagonal part of the unitary algebra: `(E_kl - E_lk)/sqrt2` and
/// `i(E_kl + E_lk)/sqrt2` for `k < l`.
fn unitary_off_diagonal(n: usize) -> Vec<CMat> {
    let s = FRAC_1_SQRT_2;
    let mut out = Vec::new();
    for k in 0..n {
        for l in (k + 1)..n {
            let mut a = CMat::zeros(n, n);
            a[(k, l)] = Complex::new(s, 0.0);
            a[(l, k)] = Complex::new(-s, 0.0);
            out.push(a);
            let mut b = CMat::zeros(n, n);
            b[(k, l)] = Complex::new(0.0, s);
            b[(l, k)] = Complex::new(0.0, s);
            out.push(b);
        }
    }
    out
}

/// Orthonormal basis of `su(n)` (Frobenius norm one), complex form.
pub(crate) fn su_basis_complex(n: usize) -> Vec<CMat> {
    let mut out = unitary_off_diagonal(n);
    for m in 1..n {
        let norm = ((m * (m + 1)) as f64).sqrt();
        let mut h = CMat::zeros(n, n);
        for k in 0..m {
            h[(k, k)] = Complex::new(0.0, 1.0 / norm);
        }
        h[(m, m)] = Complex::new(0.0, -(m as f64) / norm);
        out.push(h);
    }
    out
}

pub(crate) fn u_basis_complex(n: usize) -> Vec<CMat> {
    let mut out = unitary_off_diagonal(n);
    for k in 0..n {
        let mut h = CMat::zeros(n, n);
        h[(k, k)] = Complex::new(0.0, 1.0);
        out.push(h);
    }
    out
}

/// Basis of `sp(n)` (quaternionic skew-hermitian), realified on `R^{4n}`.
pub(crate) fn sp_basis(n: usize) -> Vec<Mat> {
    let s = FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(n * (2 * n + 1));
    for k in 0..n {
        for q in IMAGINARY_UNITS {
            let mut m = QMat::zeros(n);
            m.set(k, k, q);
            out.push(m.realify());
        }
    }
    for k in 0..n {
        for l in (k + 1)..n {
            let mut a = QMat::zeros(n);
            a.set(k, l, scale(Q_ONE, s));
            a.set(l, k, scale(Q_ONE, -s));
            out.push(a.realify());
            for q in IMAGINARY_UNITS {
                let mut b = QMat::zeros(n);
                b.set(k, l, scale(q, s));
                b.set(l, k, scale(q, s));
                out.push(b.realify());
            }
        }
    }
    out
}

/// Traceless quaternion-hermitian 2x2 matrices, realified; the module of the
/// vector representation of `sp(2)` under conjugation.
pub(crate) fn sp2_vector_space() -> Vec<Mat> {
    let mut out = Vec::with_capacity(5);
    let mut d = QMat::zeros(2);
    d.set(0, 0, Q_ONE);
    d.set(1, 1, neg(Q_ONE));
    out.push(d.realify());
    for q in [Q_ONE, Q_I, Q_J, Q_K] {
        let mut m = QMat::zeros(2);
        m.set(0, 1, q);
        let conj = if q == Q_ONE { q } else { neg(q) };
        m.set(1, 0, conj);
        out.push(m.realify());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_units_multiply() {
        assert_eq!(qmul(Q_I, Q_J), Q_K);
        assert_eq!(qmul(Q_J, Q_K), Q_I);
        assert_eq!(qmul(Q_K, Q_I), Q_J);
        assert_eq!(qmul(Q_J, Q_I), neg(Q_K));
    }

    #[test]
    fn left_and_right_multiplications_commute() {
        for p in IMAGINARY_UNITS {
            for q in IMAGINARY_UNITS {
                let l = left_mult(p);
                let r = right_mult(q);
                assert!((&l * &r - &r * &l).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn su_basis_is_orthonormal_and_traceless() {
        let b = su_basis_complex(3);
        assert_eq!(b.len(), 8);
        for (i, x) in b.iter().enumerate() {
            assert!(x.trace().norm() < 1e-15);
            for (j, y) in b.iter().enumerate() {
                let ip = (x.adjoint() * y).trace().re;
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((ip - expect).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn sp_vector_space_is_symmetric() {
        for m in sp2_vector_space() {
            assert!((&m - m.transpose()).norm() < 1e-15);
        }
    }
}
