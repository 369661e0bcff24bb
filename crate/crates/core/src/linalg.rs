//! Dense linear algebra helpers, generic over the scalar field.
//!
//! Every rank decision in the crate goes through [`threshold`]: a singular
//! value counts as zero iff it is below `tol * max(sigma_max, 1)`. Matrices
//! produced by the Lie algebra constructors have entries of order one, so the
//! floor of one keeps an all-zero evaluation matrix from reporting noise as
//! rank.

use nalgebra::{convert, DMatrix, DVector, RealField};

/// Thin singular value decomposition with singular values sorted in
/// decreasing order: `a = u diag(s) v^T` with `u` of size `n x k`, `v` of
/// size `m x k`, `k = min(n, m)`.
#[derive(Debug, Clone)]
pub struct SortedSvd<T: RealField> {
    pub u: DMatrix<T>,
    pub singular_values: Vec<T>,
    pub v: DMatrix<T>,
}

pub fn threshold<T: RealField + Copy>(sigma_max: T, tol: T) -> T {
    tol * sigma_max.max(T::one())
}

/// Computed in double precision by `faer`, whose SVD is robust for the
/// clustered singular values typical of evaluation matrices.
pub fn sorted_svd<T: RealField + Copy>(a: &DMatrix<T>) -> SortedSvd<T> {
    full_svd(a, false)
}

/// `full` requests a square right factor, so that `v` spans the null space
/// of a wide matrix too.
fn full_svd<T: RealField + Copy>(a: &DMatrix<T>, full: bool) -> SortedSvd<T> {
    let (n, m) = a.shape();
    let k = n.min(m);
    if k == 0 {
        let vcols = if full { m } else { 0 };
        return SortedSvd { u: DMatrix::zeros(n, 0), singular_values: vec![], v: DMatrix::identity(m, vcols) };
    }
    let f = faer::Mat::<f64>::from_fn(n, m, |i, j| nalgebra::try_convert(a[(i, j)]).unwrap_or(f64::NAN));
    let (u, s, v) = faer_svd(&f, full)
        .or_else(|| faer_svd(&f.transpose().to_owned(), full).map(|(u, s, v)| (v, s, u)))
        .or_else(|| nalgebra_svd(&f, full))
        .expect("no SVD routine converged");
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| s[j].partial_cmp(&s[i]).unwrap_or(std::cmp::Ordering::Equal).then(i.cmp(&j)));
    let vcols = if full { m } else { k };
    order.extend(k..vcols);
    let us = DMatrix::<T>::from_fn(n, k, |i, c| convert(u[(i, order[c])]));
    let vs = DMatrix::<T>::from_fn(m, vcols, |i, c| convert(v[(i, order[c])]));
    SortedSvd { u: us, singular_values: order[..k].iter().map(|&i| convert(s[i])).collect(), v: vs }
}

type Factors = (DMatrix<f64>, Vec<f64>, DMatrix<f64>);

fn faer_svd(f: &faer::Mat<f64>, full: bool) -> Option<Factors> {
    let svd = if full { f.svd() } else { f.thin_svd() }.ok()?;
    let (u, s, v) = (svd.U(), svd.S().column_vector(), svd.V());
    Some((
        DMatrix::from_fn(u.nrows(), u.ncols(), |i, j| u[(i, j)]),
        (0..s.nrows()).map(|i| s[i]).collect(),
        DMatrix::from_fn(v.nrows(), v.ncols(), |i, j| v[(i, j)]),
    ))
}

/// Last resort, accepted only if it reconstructs the input.
fn nalgebra_svd(f: &faer::Mat<f64>, full: bool) -> Option<Factors> {
    let (n, m) = (f.nrows(), f.ncols());
    let a = DMatrix::<f64>::from_fn(n, m, |i, j| f[(i, j)]);
    let padded = if full && n < m { a.clone().insert_rows(n, m - n, 0.0) } else { a.clone() };
    let svd = padded.svd(true, true);
    let (u, vt) = (svd.u.as_ref()?, svd.v_t.as_ref()?);
    let k = n.min(m);
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let recon = u.rows(0, n).columns(0, k) * DMatrix::from_diagonal(&DVector::from_column_slice(&sv[..k])) * vt.rows(0, k);
    let scale = a.amax().max(1.0);
    ((recon - &a).amax() <= 1e-12 * scale).then(|| (u.rows(0, n).columns(0, k).into_owned(), sv[..k].to_vec(), vt.transpose()))
}

pub fn singular_values<T: RealField + Copy>(a: &DMatrix<T>) -> Vec<T> {
    sorted_svd(a).singular_values
}

pub fn rank<T: RealField + Copy>(a: &DMatrix<T>, tol: T) -> usize {
    let sv = singular_values(a);
    rank_of(&sv, tol)
}

pub fn rank_of<T: RealField + Copy>(sorted_sv: &[T], tol: T) -> usize {
    let Some(&top) = sorted_sv.first() else { return 0 };
    let thr = threshold(top, tol);
    sorted_sv.iter().filter(|&&s| s > thr).count()
}

/// Orthonormal basis (as columns) of `{x : a x = 0}`.
pub fn null_space<T: RealField + Copy>(a: &DMatrix<T>, tol: T) -> DMatrix<T> {
    let (n, m) = a.shape();
    if n == 0 || m == 0 {
        return DMatrix::identity(m, m);
    }
    let svd = full_svd(a, true);
    let r = rank_of(&svd.singular_values, tol);
    svd.v.columns(r, m - r).into_owned()
}

/// Orthonormal basis (as columns) of the column span of `a`.
pub fn range_space<T: RealField + Copy>(a: &DMatrix<T>, tol: T) -> DMatrix<T> {
    let n = a.nrows();
    if a.ncols() == 0 || n == 0 {
        return DMatrix::zeros(n, 0);
    }
    let svd = sorted_svd(a);
    let r = rank_of(&svd.singular_values, tol);
    svd.u.columns(0, r).into_owned()
}

/// Orthonormal basis of the orthogonal complement of the column span of `a`.
pub fn complement<T: RealField + Copy>(a: &DMatrix<T>, tol: T) -> DMatrix<T> {
    null_space(&a.transpose(), tol)
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
/// residual falls below `keep * |v|` are dropped. Order is preserved.
pub fn gram_schmidt<'a, T, I>(vectors: I, keep: T) -> Vec<DVector<T>>
where
    T: RealField + Copy,
    I: IntoIterator<Item = &'a DVector<T>>,
{
    let mut out: Vec<DVector<T>> = Vec::new();
    for v in vectors {
        let norm0 = v.norm();
        if norm0 == T::zero() {
            continue;
        }
        let mut r = v.clone();
        for _ in 0..2 {
            for q in &out {
                let c = q.dot(&r);
                r.axpy(-c, q, T::one());
            }
        }
        let norm = r.norm();
        if norm > keep * norm0 {
            out.push(r / norm);
        }
    }
    out
}

/// Stacks column vectors into a matrix with `n` rows.
pub fn columns<T: RealField + Copy>(n: usize, cols: &[DVector<T>]) -> DMatrix<T> {
    let mut m = DMatrix::<T>::zeros(n, cols.len());
    for (j, c) in cols.iter().enumerate() {
        m.set_column(j, c);
    }
    m
}

/// Reduced row echelon form with partial pivoting. Entries below
/// `tol * max|a|` are treated as zero. The result is unique for the row
/// space, which makes it a canonical basis.
pub fn rref<T: RealField + Copy>(a: &DMatrix<T>, tol: T) -> DMatrix<T> {
    let mut m = a.clone();
    let (rows, cols) = m.shape();
    let scale = m.iter().fold(T::zero(), |acc, x| acc.max(x.abs())).max(T::one());
    let eps = tol * scale;
    let mut lead = 0;
    for c in 0..cols {
        if lead >= rows {
            break;
        }
        let (mut best, mut best_val) = (lead, T::zero());
        for r in lead..rows {
            if m[(r, c)].abs() > best_val {
                best = r;
                best_val = m[(r, c)].abs();
            }
        }
        if best_val <= eps {
            for r in lead..rows {
                m[(r, c)] = T::zero();
            }
            continue;
        }
        m.swap_rows(lead, best);
        let pivot = m[(lead, c)];
        for k in 0..cols {
            m[(lead, k)] /= pivot;
        }
        for r in 0..rows {
            if r != lead {
                let f = m[(r, c)];
                if f != T::zero() {
                    for k in 0..cols {
                        let sub = f * m[(lead, k)];
                        m[(r, k)] -= sub;
                    }
                }
            }
        }
        lead += 1;
    }
    m.rows(0, lead).into_owned()
}

/// Matrix exponential by scaling and squaring with a diagonal [6/6] Pade
/// approximant; the scaled matrix has 1-norm at most 1/2, which puts the
/// truncation error far below double precision.
pub fn expm<T: RealField + Copy>(a: &DMatrix<T>) -> DMatrix<T> {
    let n = a.nrows();
    let norm1 = (0..n)
        .map(|j| a.column(j).iter().fold(T::zero(), |acc, x| acc + x.abs()))
        .fold(T::zero(), |acc, x| acc.max(x));
    let half: T = convert(0.5);
    let mut squarings = 0u32;
    let mut scaled_norm = norm1;
    while scaled_norm > half {
        scaled_norm *= half;
        squarings += 1;
    }
    let scale: T = convert(0.5f64.powi(squarings as i32));
    let x = a * scale;
    // Pade [6/6] coefficients c_k = (12-k)! 6! / (12! k! (6-k)!)
    let c: [f64; 7] = [
        1.0,
        0.5,
        5.0 / 44.0,
        1.0 / 66.0,
        1.0 / 792.0,
        1.0 / 15840.0,
        1.0 / 665280.0,
    ];
    let id = DMatrix::<T>::identity(n, n);
    let x2 = &x * &x;
    let x4 = &x2 * &x2;
    let x6 = &x4 * &x2;
    let even = &id * convert::<f64, T>(c[0]) + &x2 * convert::<f64, T>(c[2]) + &x4 * convert::<f64, T>(c[4]) + &x6 * convert::<f64, T>(c[6]);
    let odd_inner = &id * convert::<f64, T>(c[1]) + &x2 * convert::<f64, T>(c[3]) + &x4 * convert::<f64, T>(c[5]);
    let odd = &x * odd_inner;
    let num = &even + &odd;
    let den = &even - &odd;
    let mut r = den.lu().solve(&num).expect("Pade denominator is invertible for |X| <= 1/2");
    for _ in 0..squarings {
        r = &r * &r;
    }
    r
}

/// Frobenius inner product `tr(a^T b)`.
pub fn frob_dot<T: RealField + Copy>(a: &DMatrix<T>, b: &DMatrix<T>) -> T {
    a.iter().zip(b.iter()).fold(T::zero(), |acc, (x, y)| acc + *x * *y)
}

pub fn commutator<T: RealField + Copy>(a: &DMatrix<T>, b: &DMatrix<T>) -> DMatrix<T> {
    a * b - b * a
}

/// Column-major flattening.
pub fn vectorize<T: RealField + Copy>(a: &DMatrix<T>) -> DVector<T> {
    DVector::from_column_slice(a.as_slice())
}

pub fn unvectorize<T: RealField + Copy>(v: &DVector<T>, rows: usize, cols: usize) -> DMatrix<T> {
    DMatrix::from_column_slice(rows, cols, v.as_slice())
}

/// Trace-orthonormal basis of the span of `mats`, in order, dependent
/// members dropped.
pub fn orthonormalize_matrices<T: RealField + Copy>(mats: &[DMatrix<T>], keep: T) -> Vec<DMatrix<T>> {
    let Some(first) = mats.first() else { return vec![] };
    let (r, c) = first.shape();
    let vecs: Vec<DVector<T>> = mats.iter().map(vectorize).collect();
    gram_schmidt(vecs.iter(), keep).iter().map(|v| unvectorize(v, r, c)).collect()
}

/// Largest absolute entry of `a + a^T`.
pub fn skew_defect<T: RealField + Copy>(a: &DMatrix<T>) -> T {
    let s = a + a.transpose();
    s.iter().fold(T::zero(), |acc, x| acc.max(x.abs()))
}
