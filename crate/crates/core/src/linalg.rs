//! Dense linear-algebra helpers shared by the algebraic modules.
//!
//! Everything here works on `nalgebra` dynamic matrices. Subspaces are passed
//! around as matrices whose columns form an orthonormal basis.

use alloc::vec::Vec;

use nalgebra::{Complex, DMatrix, DVector, SymmetricEigen};

pub type Complex64 = Complex<f64>;
pub type RMat = DMatrix<f64>;
pub type CMat = DMatrix<Complex64>;
pub type RVec = DVector<f64>;
pub type CVec = DVector<Complex64>;

pub const I: Complex64 = Complex { re: 0.0, im: 1.0 };

pub fn commutator(a: &RMat, b: &RMat) -> RMat {
    a * b - b * a
}

pub fn commutator_c(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

pub fn to_complex(m: &RMat) -> CMat {
    m.map(|x| Complex64::new(x, 0.0))
}

/// Real `2n x 2n` matrix of a complex `n x n` matrix.
///
/// Coordinates are interleaved: real index `2k` carries `Re z_k` and `2k + 1`
/// carries `Im z_k`.
pub fn realify(m: &CMat) -> RMat {
    let (r, c) = m.shape();
    let mut out = RMat::zeros(2 * r, 2 * c);
    for j in 0..r {
        for k in 0..c {
            let z = m[(j, k)];
            out[(2 * j, 2 * k)] = z.re;
            out[(2 * j, 2 * k + 1)] = -z.im;
            out[(2 * j + 1, 2 * k)] = z.im;
            out[(2 * j + 1, 2 * k + 1)] = z.re;
        }
    }
    out
}

/// Inverse of [`realify`] for complex-linear real matrices.
pub fn derealify(m: &RMat) -> CMat {
    let (r, c) = (m.nrows() / 2, m.ncols() / 2);
    CMat::from_fn(r, c, |j, k| Complex64::new(m[(2 * j, 2 * k)], m[(2 * j + 1, 2 * k)]))
}

pub fn realify_vec(v: &CVec) -> RVec {
    RVec::from_fn(2 * v.len(), |i, _| {
        let z = v[i / 2];
        if i % 2 == 0 {
            z.re
        } else {
            z.im
        }
    })
}

pub fn derealify_vec(v: &RVec) -> CVec {
    CVec::from_fn(v.len() / 2, |k, _| Complex64::new(v[2 * k], v[2 * k + 1]))
}

pub fn max_abs(m: &RMat) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

pub fn max_abs_c(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.norm()))
}

fn sorted_order(values: &RVec) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap_or(core::cmp::Ordering::Equal));
    idx
}

/// Eigen-decomposition of a real symmetric matrix, eigenvalues ascending.
pub fn eigh(m: &RMat) -> (RVec, RMat) {
    let sym = (m + m.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let order = sorted_order(&eig.eigenvalues);
    let values = RVec::from_iterator(order.len(), order.iter().map(|&i| eig.eigenvalues[i]));
    let vectors = RMat::from_columns(
        &order.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect::<Vec<_>>(),
    );
    (values, vectors)
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues ascending.
pub fn eigh_c(m: &CMat) -> (RVec, CMat) {
    let herm = (m + m.adjoint()).map(|z| z * 0.5);
    let eig = SymmetricEigen::new(herm);
    let order = sorted_order(&eig.eigenvalues);
    let values = RVec::from_iterator(order.len(), order.iter().map(|&i| eig.eigenvalues[i]));
    let vectors = CMat::from_columns(
        &order.iter().map(|&i| eig.eigenvectors.column(i).into_owned()).collect::<Vec<_>>(),
    );
    (values, vectors)
}

/// Canonical orthonormal basis of the column span of `w` (orthonormal columns).
///
/// Greedy pivoted Gram-Schmidt on the columns of the orthogonal projector
/// `w wᵀ`, which depends only on the subspace. At each step the projector
/// column with the largest residual is taken; near-ties go to the lowest
/// ambient index.
pub fn canonical_basis(w: &RMat) -> RMat {
    let k = w.ncols();
    let n = w.nrows();
    if k == 0 {
        return RMat::zeros(n, 0);
    }
    let p = w * w.transpose();
    let mut resid: Vec<RVec> = (0..n).map(|j| p.column(j).into_owned()).collect();
    let mut out: Vec<RVec> = Vec::with_capacity(k);
    for _ in 0..k {
        let norms: Vec<f64> = resid.iter().map(|r| r.norm()).collect();
        let best = norms.iter().cloned().fold(0.0, f64::max);
        let j = norms.iter().position(|&x| x >= best * (1.0 - 1e-9)).unwrap_or(0);
        let q = &resid[j] / norms[j];
        for r in resid.iter_mut() {
            let c = q.dot(r);
            r.axpy(-c, &q, 1.0);
        }
        out.push(q);
    }
    RMat::from_columns(&out)
}

/// Complex analogue of [`canonical_basis`]; each basis vector is real and
/// positive at its pivot coordinate.
pub fn canonical_basis_c(w: &CMat) -> CMat {
    let k = w.ncols();
    let n = w.nrows();
    if k == 0 {
        return CMat::zeros(n, 0);
    }
    let p = w * w.adjoint();
    let mut resid: Vec<CVec> = (0..n).map(|j| p.column(j).into_owned()).collect();
    let mut out: Vec<CVec> = Vec::with_capacity(k);
    for _ in 0..k {
        let norms: Vec<f64> = resid.iter().map(|r| r.norm()).collect();
        let best = norms.iter().cloned().fold(0.0, f64::max);
        let j = norms.iter().position(|&x| x >= best * (1.0 - 1e-9)).unwrap_or(0);
        let pivot = resid[j][j];
        let phase = if pivot.norm() > 0.0 { pivot.conj() / pivot.norm() } else { Complex64::new(1.0, 0.0) };
        let q = resid[j].map(|z| z * phase / norms[j]);
        for r in resid.iter_mut() {
            let c = q.dotc(r);
            r.axpy(-c, &q, Complex64::new(1.0, 0.0));
        }
        out.push(q);
    }
    CMat::from_columns(&out)
}

/// Modified Gram-Schmidt over the columns in order, dropping columns whose
/// residual norm falls below `tol` times their original norm.
pub fn orthonormalize(cols: &[RVec], tol: f64) -> RMat {
    let n = cols.first().map_or(0, |c| c.len());
    let mut out: Vec<RVec> = Vec::new();
    for c in cols {
        let orig = c.norm();
        if orig == 0.0 {
            continue;
        }
        let mut r = c.clone();
        for _ in 0..2 {
            for q in &out {
                let d = q.dot(&r);
                r.axpy(-d, q, 1.0);
            }
        }
        let nr = r.norm();
        if nr > tol * orig {
            out.push(r / nr);
        }
    }
    if out.is_empty() {
        RMat::zeros(n, 0)
    } else {
        RMat::from_columns(&out)
    }
}

/// Orthonormal canonical basis of `{x : m x = 0}`.
///
/// Directions whose squared singular value is below `tol² · max(1, σ_max²)`
/// count as null.
pub fn null_space(m: &RMat, tol: f64) -> RMat {
    let gram = m.transpose() * m;
    let (vals, vecs) = eigh(&gram);
    let top = vals.iter().cloned().fold(1.0, f64::max);
    let cols: Vec<RVec> = (0..vals.len())
        .filter(|&i| vals[i] <= tol * tol * top)
        .map(|i| vecs.column(i).into_owned())
        .collect();
    if cols.is_empty() {
        return RMat::zeros(m.ncols(), 0);
    }
    canonical_basis(&RMat::from_columns(&cols))
}

/// Orthogonal complement of the span of the orthonormal columns of `w`.
pub fn orthogonal_complement(w: &RMat) -> RMat {
    let n = w.nrows();
    if w.ncols() == 0 {
        return RMat::identity(n, n);
    }
    null_space(&w.transpose(), 1e-6)
}

/// Largest principal angle between two subspaces of equal dimension, given
/// by orthonormal bases.
pub fn principal_angle(a: &RMat, b: &RMat) -> f64 {
    if a.ncols() != b.ncols() {
        return core::f64::consts::FRAC_PI_2;
    }
    if a.ncols() == 0 {
        return 0.0;
    }
    let resid = b - a * (a.transpose() * b);
    let s = resid.svd(false, false).singular_values.max();
    libm::asin(s.min(1.0))
}

/// `m^{-1/2}` for a symmetric positive-definite matrix.
pub fn inv_sqrt_spd(m: &RMat) -> RMat {
    let (vals, vecs) = eigh(m);
    let d = RMat::from_diagonal(&vals.map(|x| 1.0 / libm::sqrt(x)));
    &vecs * d * vecs.transpose()
}

/// Sum in a fixed balanced binary tree order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let (l, r) = xs.split_at(n / 2);
            pairwise_sum(l) + pairwise_sum(r)
        }
    }
}

/// Flips `v` so that its first coordinate of non-negligible size is positive.
pub fn fix_sign(v: &mut RVec) {
    let scale = v.amax();
    if let Some(x) = v.iter().find(|x| x.abs() > 1e-8 * scale) {
        if *x < 0.0 {
            v.neg_mut();
        }
    }
}

/// `Σ c_j basis_j`.
pub fn combine(basis: &[RMat], coeffs: impl Iterator<Item = f64>) -> RMat {
    let (r, c) = basis[0].shape();
    let mut out = RMat::zeros(r, c);
    for (b, x) in basis.iter().zip(coeffs) {
        if x != 0.0 {
            out += b * x;
        }
    }
    out
}
