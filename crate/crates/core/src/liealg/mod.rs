//! Compact classical Lie algebras as real matrix algebras.
//!
//! Every algebra is stored as a subalgebra of `so(N)` acting on a real ambient
//! space: `so(N)` on `ℝ^N`, `su(n)` on `ℂ^n ≅ ℝ^{2n}` and `sp(n)` on
//! `ℂ^{2n} ≅ ℝ^{4n}`, complex coordinates interleaved as `(Re z_0, Im z_0, …)`.
//! The inner product is `⟨x, y⟩ = −tr(xy)` on these real matrices and the
//! stored basis is orthonormal for it, so coordinates are plain dot products.
//!
//! Canonical basis order:
//! * `so(N)`: `(E_ij − E_ji)/√2` for `i < j`, lexicographic.
//! * `su(n)`: the `n − 1` diagonal generators `i·diag(1, …, 1, −l, 0, …)`,
//!   then for each `j < k` the pair `E_jk − E_kj`, `i(E_jk + E_kj)`.
//! * `sp(n)`: the `u(2n)` basis in the same order, projected onto the
//!   `J`-commuting part and deduplicated.

mod clifford;
mod pfaffian;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;


pub use clifford::{clifford_gammas, spin_lift, CliffordModule};
pub use pfaffian::pfaffian;

use crate::linalg::{
    commutator, derealify, max_abs, orthonormalize, realify, to_complex, CMat, Complex64, RMat, RVec, I,
};
use crate::sl2rep::{antilinear_structure, irrep};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Su,
    So,
    Sp,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Su => "su",
            Family::So => "so",
            Family::Sp => "sp",
        })
    }
}

#[derive(Debug, Clone)]
pub struct MatrixLieAlgebra {
    family: Family,
    param: usize,
    basis: Vec<RMat>,
    /// Quaternionic structure on the realified ambient (sp only).
    quaternionic: Option<RMat>,
}

impl MatrixLieAlgebra {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> usize {
        self.param
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis[0].nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RMat] {
        &self.basis
    }

    /// Whether the defining representation is complex (su, sp).
    pub fn is_complex(&self) -> bool {
        self.family != Family::So
    }

    /// `J` as a real matrix on the ambient, for `sp(n)`.
    pub fn quaternionic_structure(&self) -> Option<&RMat> {
        self.quaternionic.as_ref()
    }

    pub fn inner(&self, x: &RMat, y: &RMat) -> f64 {
        -(x * y).trace()
    }

    pub fn bracket(&self, x: &RMat, y: &RMat) -> Result<RMat> {
        let n = self.ambient_dim();
        if x.shape() != (n, n) || y.shape() != (n, n) {
            return Err(Error::ShapeMismatch(format!("bracket arguments must be {n} x {n}")));
        }
        Ok(commutator(x, y))
    }

    /// Coordinates of `x` in the orthonormal basis.
    pub fn coords(&self, x: &RMat) -> RVec {
        RVec::from_iterator(self.dim(), self.basis.iter().map(|b| self.inner(b, x)))
    }

    pub fn from_coords(&self, c: &[f64]) -> RMat {
        crate::linalg::combine(&self.basis, c.iter().copied())
    }

    /// Distance from `x` to its projection onto the algebra.
    pub fn residual(&self, x: &RMat) -> f64 {
        let c = self.coords(x);
        max_abs(&(x - self.from_coords(c.as_slice())))
    }

    /// `ad(x)` as a `dim x dim` matrix in the orthonormal basis.
    pub fn ad_matrix(&self, x: &RMat) -> RMat {
        let cols: Vec<RVec> = self.basis.iter().map(|b| self.coords(&commutator(x, b))).collect();
        RMat::from_columns(&cols)
    }

    /// The element as a matrix of the defining representation (complex for su
    /// and sp).
    pub fn defining(&self, x: &RMat) -> CMat {
        if self.is_complex() {
            derealify(x)
        } else {
            to_complex(x)
        }
    }

    /// Checks the defining conditions; returns the worst residual.
    pub fn membership_residual(&self, x: &RMat) -> f64 {
        let mut worst = max_abs(&(x + x.transpose()));
        if self.is_complex() {
            let j = complex_structure(self.ambient_dim() / 2);
            worst = worst.max(max_abs(&(x * &j - &j * x)));
            worst = worst.max(derealify(x).trace().norm());
        }
        if let Some(q) = &self.quaternionic {
            worst = worst.max(max_abs(&(x * q - q * x)));
        }
        worst
    }
}

/// Multiplication by `i` on the interleaved `ℝ^{2n}`.
pub fn complex_structure(n: usize) -> RMat {
    realify(&CMat::identity(n, n).map(|z| z * I))
}

fn so_basis(n: usize) -> Vec<RMat> {
    let w = core::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut m = RMat::zeros(n, n);
            m[(i, j)] = w;
            m[(j, i)] = -w;
            out.push(m);
        }
    }
    out
}

/// `u(n)` (`traceless = false`) or `su(n)` generators as complex matrices, not
/// yet normalized.
fn unitary_generators(n: usize, traceless: bool) -> Vec<CMat> {
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::new();
    if traceless {
        for l in 1..n {
            let mut m = CMat::from_element(n, n, zero);
            for k in 0..l {
                m[(k, k)] = I;
            }
            m[(l, l)] = I * -(l as f64);
            out.push(m);
        }
    } else {
        for k in 0..n {
            let mut m = CMat::from_element(n, n, zero);
            m[(k, k)] = I;
            out.push(m);
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            let mut a = CMat::from_element(n, n, zero);
            a[(j, k)] = Complex64::new(1.0, 0.0);
            a[(k, j)] = Complex64::new(-1.0, 0.0);
            let mut b = CMat::from_element(n, n, zero);
            b[(j, k)] = I;
            b[(k, j)] = I;
            out.push(a);
            out.push(b);
        }
    }
    out
}

fn normalized(m: RMat) -> RMat {
    let norm = libm::sqrt(-(&m * &m).trace());
    m / norm
}

/// Builds `su(n)` (`n ≥ 2`), `so(N)` (`N ≥ 3`) or `sp(n)` (`n ≥ 1`).
pub fn build_algebra(family: Family, param: usize) -> Result<MatrixLieAlgebra> {
    let min = match family {
        Family::Su => 2,
        Family::So => 3,
        Family::Sp => 1,
    };
    if param < min {
        return Err(Error::UnsupportedParam { family, param });
    }
    let (basis, quaternionic) = match family {
        Family::So => (so_basis(param), None),
        Family::Su => {
            let basis = unitary_generators(param, true).iter().map(|m| normalized(realify(m))).collect();
            (basis, None)
        }
        Family::Sp => {
            // J = v ↦ S conj(v), the quaternionic structure of S^{2n−1}.
            let s = antilinear_structure(&irrep(2 * param - 1));
            let sinv = s.matrix.adjoint();
            let projected: Vec<RVec> = unitary_generators(2 * param, false)
                .iter()
                .map(|a| {
                    let twisted = &s.matrix * a.map(|z| z.conj()) * &sinv;
                    let p = (a + twisted).map(|z| z * 0.5);
                    let r = realify(&p);
                    RVec::from_column_slice(r.as_slice())
                })
                .collect();
            let n = 4 * param;
            let on = orthonormalize(&projected, 1e-8);
            let basis = on
                .column_iter()
                .map(|c| normalized(RMat::from_column_slice(n, n, c.as_slice())))
                .collect();
            (basis, Some(s.realified()))
        }
    };
    let alg = MatrixLieAlgebra { family, param, basis, quaternionic };
    let expected = match family {
        Family::Su => param * param - 1,
        Family::So => param * (param - 1) / 2,
        Family::Sp => param * (2 * param + 1),
    };
    debug_assert_eq!(alg.dim(), expected);
    Ok(alg)
}

/// `x ↦ σ x σ⁻¹` with `σ = diag(−1, 1, …, 1)` on `so(N)`.
#[derive(Debug, Clone)]
pub struct OrientationInvolution {
    sigma: RMat,
    coords: RMat,
}

impl OrientationInvolution {
    pub fn sigma(&self) -> &RMat {
        &self.sigma
    }

    pub fn apply(&self, x: &RMat) -> RMat {
        &self.sigma * x * &self.sigma
    }

    /// The involution in the orthonormal coordinates of the algebra.
    pub fn matrix(&self) -> &RMat {
        &self.coords
    }
}

pub fn orientation_involution(g: &MatrixLieAlgebra) -> Result<OrientationInvolution> {
    if g.family() != Family::So {
        return Err(Error::WrongFamily(g.family()));
    }
    let n = g.ambient_dim();
    let mut sigma = RMat::identity(n, n);
    sigma[(0, 0)] = -1.0;
    let cols: Vec<RVec> = g.basis().iter().map(|b| g.coords(&(&sigma * b * &sigma))).collect();
    Ok(OrientationInvolution { sigma, coords: RMat::from_columns(&cols) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn families() -> Vec<(Family, usize)> {
        let mut v = Vec::new();
        for n in 2..=5 {
            v.push((Family::Su, n));
        }
        for n in 3..=8 {
            v.push((Family::So, n));
        }
        for n in 1..=3 {
            v.push((Family::Sp, n));
        }
        v
    }

    #[test]
    fn dimensions() {
        let so4 = build_algebra(Family::So, 4).unwrap();
        assert_eq!((so4.dim(), so4.ambient_dim()), (6, 4));
        let su3 = build_algebra(Family::Su, 3).unwrap();
        assert_eq!((su3.dim(), su3.ambient_dim()), (8, 6));
        let sp2 = build_algebra(Family::Sp, 2).unwrap();
        assert_eq!((sp2.dim(), sp2.ambient_dim()), (10, 8));
    }

    #[test]
    fn below_minimum_is_rejected() {
        assert_eq!(
            build_algebra(Family::So, 2).unwrap_err(),
            Error::UnsupportedParam { family: Family::So, param: 2 }
        );
        assert!(build_algebra(Family::Su, 1).is_err());
        assert!(build_algebra(Family::Sp, 0).is_err());
    }

    #[test]
    fn basis_is_orthonormal_and_closed() {
        for (f, p) in families() {
            let g = build_algebra(f, p).unwrap();
            for (i, a) in g.basis().iter().enumerate() {
                assert!(g.membership_residual(a) < 1e-12, "{f}({p})");
                for (j, b) in g.basis().iter().enumerate() {
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((g.inner(a, b) - expected).abs() < 1e-12);
                    if j > i {
                        assert!(g.residual(&g.bracket(a, b).unwrap()) < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn so3_elementary_bracket() {
        // e1∧e2 = E_01 − E_10, e2∧e3 = E_12 − E_21 (zero-based); direct product.
        let g = build_algebra(Family::So, 3).unwrap();
        let unit = |i: usize, j: usize| {
            let mut m = RMat::zeros(3, 3);
            m[(i, j)] = 1.0;
            m[(j, i)] = -1.0;
            m
        };
        let br = g.bracket(&unit(0, 1), &unit(1, 2)).unwrap();
        let mut expected = RMat::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    expected[(i, j)] += unit(0, 1)[(i, k)] * unit(1, 2)[(k, j)] - unit(1, 2)[(i, k)] * unit(0, 1)[(k, j)];
                }
            }
        }
        assert_eq!(br, expected);
        assert_eq!(br, unit(0, 2));
        assert!(max_abs(&g.bracket(&unit(0, 1), &unit(0, 1)).unwrap()) == 0.0);
        assert!(g.bracket(&RMat::zeros(2, 2), &unit(0, 1)).is_err());
    }

    #[test]
    fn sp_commutes_with_j() {
        for n in 1..=3 {
            let g = build_algebra(Family::Sp, n).unwrap();
            let j = g.quaternionic_structure().unwrap();
            assert!(max_abs(&(j * j + RMat::identity(4 * n, 4 * n))) < 1e-15);
            for b in g.basis() {
                assert!(max_abs(&(b * j - j * b)) < 1e-14);
            }
        }
    }

    #[test]
    fn orientation_involution_action() {
        let g = build_algebra(Family::So, 6).unwrap();
        let s = orientation_involution(&g).unwrap();
        // basis order: (0,1), (0,2), …, (0,5), (1,2), …
        for (k, b) in g.basis().iter().enumerate() {
            let expected = if k < 5 { -b } else { b.clone() };
            assert_eq!(s.apply(b), expected);
        }
        let m = s.matrix();
        assert!(max_abs(&(m * m - RMat::identity(15, 15))) < 1e-15);
        assert_eq!(s.sigma().determinant(), -1.0);
        let su = build_algebra(Family::Su, 3).unwrap();
        assert_eq!(orientation_involution(&su).unwrap_err(), Error::WrongFamily(Family::Su));
    }
}
