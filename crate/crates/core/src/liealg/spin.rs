//! Octonions, real Clifford modules and the exceptional algebras.
//!
//! Octonion units are `e_0 = 1, e_1, ..., e_7` with the Fano-plane rule
//! `e_i e_{i+1} = e_{i+3}` (imaginary indices taken in `1..=7` modulo 7),
//! which gives the oriented lines
//! `(1,2,4) (2,3,5) (3,4,6) (4,5,7) (5,6,1) (6,7,2) (7,1,3)`.
//!
//! The nine gamma matrices on `R^16` are
//!
//! ```text
//! gamma_a = [[0, L_a], [L_a^T, 0]]   a = 0..=7
//! gamma_8 = diag(I_8, -I_8)
//! ```
//!
//! where `L_a` is left multiplication by `e_a`. They are symmetric,
//! square to the identity and pairwise anticommute, so `(1/2) gamma_i gamma_j`
//! (`i < j`) spans `spin(9)` acting on the half-spin module `R^16`.
//!
//! The 8-dimensional module of `spin(7)` is the upper-left block of
//! `(1/2) gamma_i gamma_j` for `1 <= i < j <= 7`, i.e. `-(1/2) L_i L_j`.

use crate::linalg::{null_space, orthonormalize_matrices, rref};
use crate::Mat;

use super::classical::so_basis;

/// `(sign, index)` with `e_a e_b = sign * e_index`.
pub(crate) fn octonion_product(a: usize, b: usize) -> (f64, usize) {
    const LINES: [[usize; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];
    if a == 0 {
        return (1.0, b);
    }
    if b == 0 {
        return (1.0, a);
    }
    if a == b {
        return (-1.0, 0);
    }
    for [x, y, z] in LINES {
        for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
            if (a, b) == (p, q) {
                return (1.0, r);
            }
            if (a, b) == (q, p) {
                return (-1.0, r);
            }
        }
    }
    unreachable!("every pair of distinct imaginary units lies on a Fano line")
}

/// Left multiplication by `e_a` on `R^8`.
pub(crate) fn octonion_left(a: usize) -> Mat {
    let mut m = Mat::zeros(8, 8);
    for b in 0..8 {
        let (s, c) = octonion_product(a, b);
        m[(c, b)] = s;
    }
    m
}

pub(crate) fn gammas() -> Vec<Mat> {
    let mut out = Vec::with_capacity(9);
    for a in 0..8 {
        let l = octonion_left(a);
        let mut g = Mat::zeros(16, 16);
        g.view_mut((0, 8), (8, 8)).copy_from(&l);
        g.view_mut((8, 0), (8, 8)).copy_from(&l.transpose());
        out.push(g);
    }
    let mut g8 = Mat::identity(16, 16);
    for i in 8..16 {
        g8[(i, i)] = -1.0;
    }
    out.push(g8);
    out
}

pub(crate) fn spin9_basis() -> Vec<Mat> {
    let g = gammas();
    let mut out = Vec::with_capacity(36);
    for i in 0..9 {
        for j in (i + 1)..9 {
            out.push(&g[i] * &g[j] * 0.5);
        }
    }
    out
}

pub(crate) fn spin7_basis() -> Vec<Mat> {
    let g = gammas();
    let mut out = Vec::with_capacity(21);
    for i in 1..8 {
        for j in (i + 1)..8 {
            let full = &g[i] * &g[j] * 0.5;
            out.push(full.view((0, 0), (8, 8)).into_owned());
        }
    }
    out
}

/// Cross product on `Im O = R^7` (coordinates indexed by `e_1..e_7`).
pub(crate) fn cross(x: &[f64], y: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; 7];
    for a in 0..7 {
        if x[a] == 0.0 {
            continue;
        }
        for b in 0..7 {
            if a == b || y[b] == 0.0 {
                continue;
            }
            let (s, c) = octonion_product(a + 1, b + 1);
            out[c - 1] += s * x[a] * y[b];
        }
    }
    out
}

/// The constraint system `A(x*y) = Ax*y + x*Ay` over `A` in `so(7)`, one
/// block of seven rows per pair `e_a, e_b` with `a < b`, one column per
/// `E_ij` of [`so_basis`].
pub(crate) fn g2_constraint_matrix() -> Mat {
    let so7 = so_basis(7);
    let unit = |k: usize| {
        let mut v = vec![0.0; 7];
        v[k] = 1.0;
        v
    };
    let mut rows = Vec::new();
    for a in 0..7 {
        for b in (a + 1)..7 {
            let (ea, eb) = (unit(a), unit(b));
            let ab = cross(&ea, &eb);
            let mut block = Mat::zeros(7, so7.len());
            for (m, e) in so7.iter().enumerate() {
                let apply = |v: &[f64]| -> Vec<f64> { (0..7).map(|r| (0..7).map(|c| e[(r, c)] * v[c]).sum()).collect() };
                let lhs = apply(&ab);
                let t1 = cross(&apply(&ea), &eb);
                let t2 = cross(&ea, &apply(&eb));
                for r in 0..7 {
                    block[(r, m)] = lhs[r] - t1[r] - t2[r];
                }
            }
            rows.push(block);
        }
    }
    let mut out = Mat::zeros(7 * rows.len(), so7.len());
    for (k, block) in rows.iter().enumerate() {
        out.view_mut((7 * k, 0), (7, so7.len())).copy_from(block);
    }
    out
}

/// Canonical trace-orthonormal basis of `g2` in `so(7)`: the kernel of the
/// derivation system in reduced row echelon form, Gram-Schmidt in row
/// order, each matrix signed so its first nonzero entry (column-major) is
/// positive.
pub(crate) fn g2_basis() -> Vec<Mat> {
    let so7 = so_basis(7);
    let kernel = null_space(&g2_constraint_matrix(), 1e-10);
    let canonical = rref(&kernel.transpose(), 1e-10);
    let mats: Vec<Mat> = canonical
        .row_iter()
        .map(|row| so7.iter().zip(row.iter()).fold(Mat::zeros(7, 7), |acc, (e, &c)| acc + e * c))
        .collect();
    orthonormalize_matrices(&mats, 1e-6)
        .into_iter()
        .map(|m| {
            let first = m.iter().find(|x| x.abs() > 1e-12).copied().unwrap_or(1.0);
            if first < 0.0 {
                -m
            } else {
                m
            }
        })
        .map(|m| m.map(|x| if x.abs() < 1e-15 { 0.0 } else { x }))
        .collect()
}
