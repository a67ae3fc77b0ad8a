//! Irreducible `sl(2)` representations and isotypic decomposition.
//!
//! `S^n` is realized in the weight basis `v_0, …, v_n` with
//! `H v_k = (n − 2k) v_k`, `F v_k = v_{k+1}` and `E v_k = k(n − k + 1) v_{k−1}`,
//! so that `H`, `E`, `F` have integer entries. The orthonormal basis is
//! `u_k = c_k v_k` with `c_k = (k! · n!/(n − k)!)^{-1/2}`; in it `E† = F` and
//! the compact generators
//!
//! ```text
//! X1 = iH,  X2 = E − F,  X3 = i(E + F)
//! ```
//!
//! are anti-Hermitian with `[X1, X2] = 2 X3` (cyclically) and
//! `−(X1² + X2² + X3²) = H² + 2EF + 2FE = n(n + 2)`.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::{DMatrix, Scalar};

use crate::linalg::{
    canonical_basis, canonical_basis_c, commutator, commutator_c, eigh, eigh_c, fix_sign, max_abs,
    max_abs_c, null_space, CMat, CVec, Complex64, RMat, RVec, I,
};
use crate::{Error, Result};

/// Tolerance for structural identities (commutators, skewness).
pub const STRUCTURE_TOL: f64 = 1e-12;
/// Tolerance for eigenspace membership and closure of an action.
pub const EIGENSPACE_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct Irrep {
    n: usize,
    h: DMatrix<i64>,
    e: DMatrix<i64>,
    f: DMatrix<i64>,
    scale: RVec,
    compact: [CMat; 3],
}

impl Irrep {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    /// `H` in the integer weight basis.
    pub fn h(&self) -> &DMatrix<i64> {
        &self.h
    }

    pub fn e(&self) -> &DMatrix<i64> {
        &self.e
    }

    pub fn f(&self) -> &DMatrix<i64> {
        &self.f
    }

    /// Diagonal change of basis: `u_k = scale[k] · v_k`.
    pub fn scale(&self) -> &RVec {
        &self.scale
    }

    /// `X1, X2, X3` in the orthonormal basis.
    pub fn compact(&self) -> &[CMat; 3] {
        &self.compact
    }

    /// `H, E, F` in the orthonormal basis.
    pub fn ladder_orthonormal(&self) -> [CMat; 3] {
        let d = self.dim();
        let conj = |m: &DMatrix<i64>| {
            CMat::from_fn(d, d, |i, j| {
                Complex64::new(m[(i, j)] as f64 * self.scale[i] / self.scale[j], 0.0)
            })
        };
        [conj(&self.h), conj(&self.e), conj(&self.f)]
    }

    /// `H² + 2EF + 2FE` in exact integer arithmetic.
    pub fn casimir_exact(&self) -> DMatrix<i64> {
        &self.h * &self.h + (&self.e * &self.f) * 2 + (&self.f * &self.e) * 2
    }

    /// `−(X1² + X2² + X3²)`.
    pub fn casimir(&self) -> CMat {
        casimir_c(&self.compact)
    }
}

/// The irreducible representation `S^n`.
pub fn irrep(n: usize) -> Irrep {
    let d = n + 1;
    let h = DMatrix::from_fn(d, d, |i, j| if i == j { n as i64 - 2 * i as i64 } else { 0 });
    let e = DMatrix::from_fn(d, d, |i, j| if j == i + 1 { (j * (n - j + 1)) as i64 } else { 0 });
    let f = DMatrix::from_fn(d, d, |i, j| if i == j + 1 { 1 } else { 0 });
    let mut scale = RVec::zeros(d);
    scale[0] = 1.0;
    for k in 1..d {
        scale[k] = scale[k - 1] / libm::sqrt((k * (n - k + 1)) as f64);
    }
    let mut eo = CMat::zeros(d, d);
    let mut fo = CMat::zeros(d, d);
    for k in 1..d {
        let w = Complex64::new(libm::sqrt((k * (n - k + 1)) as f64), 0.0);
        eo[(k - 1, k)] = w;
        fo[(k, k - 1)] = w;
    }
    let ho = CMat::from_fn(d, d, |i, j| if i == j { Complex64::new(n as f64 - 2.0 * i as f64, 0.0) } else { Complex64::new(0.0, 0.0) });
    let x1 = ho.map(|z| z * I);
    let x2 = &eo - &fo;
    let x3 = (&eo + &fo).map(|z| z * I);
    Irrep { n, h, e, f, scale, compact: [x1, x2, x3] }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// `S · conj(S) = +I`.
    Real,
    /// `S · conj(S) = −I`.
    Quaternionic,
}

/// The antilinear map `v ↦ S · conj(v)` commuting with the compact generators.
#[derive(Debug, Clone)]
pub struct AntilinearStructure {
    pub matrix: CMat,
    pub kind: StructureKind,
}

impl AntilinearStructure {
    pub fn apply(&self, v: &CVec) -> CVec {
        &self.matrix * v.map(|z| z.conj())
    }

    /// The structure map as a real-linear map on the interleaved `ℝ^{2d}`.
    pub fn realified(&self) -> RMat {
        let d = self.matrix.nrows();
        let conj = RMat::from_fn(2 * d, 2 * d, |i, j| {
            if i != j {
                0.0
            } else if i % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        });
        crate::linalg::realify(&self.matrix) * conj
    }
}

/// `S u_k = (−1)^k u_{n−k}` in the orthonormal weight basis.
pub fn antilinear_structure(r: &Irrep) -> AntilinearStructure {
    let n = r.n();
    let d = r.dim();
    let mut s = CMat::zeros(d, d);
    for k in 0..d {
        s[(n - k, k)] = Complex64::new(if k % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
    }
    let kind = if n % 2 == 0 { StructureKind::Real } else { StructureKind::Quaternionic };
    AntilinearStructure { matrix: s, kind }
}

/// Orthonormal basis (columns) of the real points of `S^n`, `n` even.
///
/// For `k < n − k` the pair `(u_k + (−1)^k u_{n−k})/√2`,
/// `i(u_k − (−1)^k u_{n−k})/√2`; for the middle weight `u_{n/2}` or
/// `i·u_{n/2}` depending on the parity of `n/2`.
pub fn real_form_basis(r: &Irrep) -> Result<CMat> {
    let n = r.n();
    if n % 2 == 1 {
        return Err(Error::NoRealForm(n));
    }
    let d = r.dim();
    let h = core::f64::consts::FRAC_1_SQRT_2;
    let mut cols: Vec<CVec> = Vec::with_capacity(d);
    for k in 0..=n / 2 {
        let j = n - k;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        if k < j {
            let mut a = CVec::zeros(d);
            a[k] = Complex64::new(h, 0.0);
            a[j] = Complex64::new(sign * h, 0.0);
            let mut b = CVec::zeros(d);
            b[k] = Complex64::new(0.0, h);
            b[j] = Complex64::new(0.0, -sign * h);
            cols.push(a);
            cols.push(b);
        } else {
            let mut a = CVec::zeros(d);
            a[k] = if k % 2 == 0 { Complex64::new(1.0, 0.0) } else { I };
            cols.push(a);
        }
    }
    Ok(CMat::from_columns(&cols))
}

/// Real skew-symmetric matrices of `X1, X2, X3` in [`real_form_basis`].
pub fn real_form_action(r: &Irrep) -> Result<[RMat; 3]> {
    let w = real_form_basis(r)?;
    let conv = |x: &CMat| -> Result<RMat> {
        let m = w.adjoint() * x * &w;
        let imag = m.iter().fold(0.0, |acc: f64, z| acc.max(z.im.abs()));
        if imag > STRUCTURE_TOL {
            return Err(Error::DecompositionResidual(format!("real form has imaginary residue {imag:e}")));
        }
        Ok(m.map(|z| z.re))
    };
    let [x1, x2, x3] = r.compact();
    Ok([conv(x1)?, conv(x2)?, conv(x3)?])
}

/// One isotypic summand: an orthonormal basis (columns) of a copy of `S^spin`.
#[derive(Debug, Clone)]
pub struct IsotypicComponent<T: Scalar> {
    pub spin: usize,
    pub basis: DMatrix<T>,
}

impl<T: Scalar> IsotypicComponent<T> {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }
}

/// `{m + n, m + n − 2, …, m − n}`.
pub fn clebsch_gordan_spins(m: usize, n: usize) -> Result<Vec<usize>> {
    if m < n {
        return Err(Error::ArgumentOrder { m, n });
    }
    Ok((0..=n).map(|k| m + n - 2 * k).collect())
}

/// `X ⊗ 1 + 1 ⊗ Y` for each generator.
pub fn tensor_action(a: &[CMat; 3], b: &[CMat; 3]) -> [CMat; 3] {
    let ia = CMat::identity(a[0].nrows(), a[0].nrows());
    let ib = CMat::identity(b[0].nrows(), b[0].nrows());
    core::array::from_fn(|k| a[k].kronecker(&ib) + ia.kronecker(&b[k]))
}

/// Induced action on `Λ²`, basis `e_i ∧ e_j` (`i < j`, lexicographic).
pub fn wedge2_action(a: &[CMat; 3]) -> [CMat; 3] {
    let d = a[0].nrows();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| -> Option<(usize, f64)> {
        if i == j {
            None
        } else if i < j {
            pairs.iter().position(|&p| p == (i, j)).map(|p| (p, 1.0))
        } else {
            pairs.iter().position(|&p| p == (j, i)).map(|p| (p, -1.0))
        }
    };
    core::array::from_fn(|g| {
        let x = &a[g];
        let mut out = CMat::zeros(pairs.len(), pairs.len());
        for (col, &(i, j)) in pairs.iter().enumerate() {
            for k in 0..d {
                if let Some((row, s)) = index(k, j) {
                    out[(row, col)] += x[(k, i)] * s;
                }
                if let Some((row, s)) = index(i, k) {
                    out[(row, col)] += x[(k, j)] * s;
                }
            }
        }
        out
    })
}

pub fn casimir_c(x: &[CMat; 3]) -> CMat {
    -(&x[0] * &x[0] + &x[1] * &x[1] + &x[2] * &x[2])
}

pub fn casimir_r(x: &[RMat; 3]) -> RMat {
    -(&x[0] * &x[0] + &x[1] * &x[1] + &x[2] * &x[2])
}

fn closure_residual_c(x: &[CMat; 3]) -> Result<f64> {
    let n = x[0].nrows();
    if x.iter().any(|m| m.nrows() != n || m.ncols() != n) {
        return Err(Error::ShapeMismatch(format!("generators must be square of equal size {n}")));
    }
    let scale = x.iter().map(max_abs_c).fold(1.0, f64::max);
    let mut worst = 0.0_f64;
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let r = commutator_c(&x[a], &x[b]) - x[c].map(|z| z * 2.0);
        worst = worst.max(max_abs_c(&r));
    }
    for m in x {
        worst = worst.max(max_abs_c(&(m + m.adjoint())));
    }
    Ok(worst / scale)
}

fn closure_residual_r(x: &[RMat; 3]) -> Result<f64> {
    let n = x[0].nrows();
    if x.iter().any(|m| m.nrows() != n || m.ncols() != n) {
        return Err(Error::ShapeMismatch(format!("generators must be square of equal size {n}")));
    }
    let scale = x.iter().map(max_abs).fold(1.0, f64::max);
    let mut worst = 0.0_f64;
    for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        worst = worst.max(max_abs(&(commutator(&x[a], &x[b]) - &x[c] * 2.0)));
    }
    for m in x {
        worst = worst.max(max_abs(&(m + m.transpose())));
    }
    Ok(worst / scale)
}

/// Groups ascending Casimir eigenvalues by the spin `s` with `λ = s(s + 2)`.
fn casimir_groups(vals: &RVec) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, &lambda) in vals.iter().enumerate() {
        let s = libm::round(libm::sqrt(1.0 + lambda.max(0.0)) - 1.0).max(0.0) as usize;
        let expected = (s * (s + 2)) as f64;
        if (lambda - expected).abs() > 1e-6 * (1.0 + expected) {
            return Err(Error::DecompositionResidual(format!(
                "Casimir eigenvalue {lambda} is not of the form s(s+2)"
            )));
        }
        match groups.last_mut() {
            Some((gs, idx)) if *gs == s => idx.push(i),
            _ => groups.push((s, alloc::vec![i])),
        }
    }
    Ok(groups)
}

fn tiles(n: usize, s: usize, k: usize) -> Result<usize> {
    if k % (s + 1) != 0 {
        return Err(Error::DecompositionResidual(format!(
            "Casimir eigenspace of spin {s} has dimension {k}, not a multiple of {} (ambient {n})",
            s + 1
        )));
    }
    Ok(k / (s + 1))
}

/// Decomposes `ℂ^N` under anti-Hermitian compact generators (standard
/// Hermitian inner product) into irreducible summands.
///
/// Components come out in ascending spin. A Casimir eigenspace holding several
/// copies is split along a canonical basis of its highest-weight space; each
/// component basis is `F^k w / ‖F^k w‖` for its highest-weight vector `w`.
pub fn isotypic_decompose(action: &[CMat; 3]) -> Result<Vec<IsotypicComponent<Complex64>>> {
    let residual = closure_residual_c(action)?;
    if residual > EIGENSPACE_TOL {
        return Err(Error::NonClosedAction { residual });
    }
    let n = action[0].nrows();
    let (vals, vecs) = eigh_c(&casimir_c(action));
    let h = action[0].map(|z| -z * I);
    let lower = (&action[1] + action[2].map(|z| z * I)).map(|z| -z * 0.5);
    let mut out = Vec::new();
    for (s, idx) in casimir_groups(&vals)? {
        let mult = tiles(n, s, idx.len())?;
        let w = CMat::from_columns(&idx.iter().map(|&i| vecs.column(i).into_owned()).collect::<Vec<_>>());
        let hw = w.adjoint() * &h * &w;
        let (hv, hvec) = eigh_c(&hw);
        let top: Vec<CVec> = (hv.len() - mult..hv.len()).map(|i| &w * hvec.column(i)).collect();
        for i in hv.len() - mult..hv.len() {
            if (hv[i] - s as f64).abs() > 1e-6 * (1.0 + s as f64) {
                return Err(Error::DecompositionResidual(format!("highest weight {} != {s}", hv[i])));
            }
        }
        let highest = canonical_basis_c(&CMat::from_columns(&top));
        for c in 0..mult {
            let mut cols: Vec<CVec> = alloc::vec![highest.column(c).into_owned()];
            for _ in 0..s {
                let next = &lower * cols.last().unwrap();
                let norm = next.norm();
                cols.push(next / Complex64::new(norm, 0.0));
            }
            out.push(IsotypicComponent { spin: s, basis: CMat::from_columns(&cols) });
        }
    }
    Ok(out)
}

/// `E(a + ib)` for real generators, returned as `(Re, Im)`.
fn raise_real(x: &[RMat; 3], a: &RVec, b: &RVec) -> (RVec, RVec) {
    let re = (&x[1] * a + &x[2] * b) * 0.5;
    let im = (&x[1] * b - &x[2] * a) * 0.5;
    (re, im)
}

/// Decomposes `ℝ^N` under real skew-symmetric compact generators (standard
/// inner product). Every summand must have even spin.
///
/// Within a Casimir eigenspace the zero-weight space `ker X1` is split either
/// along a canonical basis or, when `splitter` is given, along the eigenvectors
/// of that symmetric operator (which must commute with the action). Each
/// component has the real basis `z, Re E z, Im E z, Re E² z, …` normalized,
/// where `z` is its zero-weight vector and `E = (X2 − iX3)/2`. Components are
/// ordered by spin, then by splitter eigenvalue.
pub fn isotypic_decompose_real(
    action: &[RMat; 3],
    splitter: Option<&RMat>,
) -> Result<Vec<IsotypicComponent<f64>>> {
    let residual = closure_residual_r(action)?;
    if residual > EIGENSPACE_TOL {
        return Err(Error::NonClosedAction { residual });
    }
    let n = action[0].nrows();
    if let Some(sp) = splitter {
        if sp.nrows() != n || sp.ncols() != n {
            return Err(Error::ShapeMismatch(format!("splitter must be {n} x {n}")));
        }
    }
    let (vals, vecs) = eigh(&casimir_r(action));
    let mut out = Vec::new();
    for (s, idx) in casimir_groups(&vals)? {
        let mult = tiles(n, s, idx.len())?;
        if s % 2 == 1 {
            return Err(Error::DecompositionResidual(format!("odd spin {s} in a real representation")));
        }
        let w = RMat::from_columns(&idx.iter().map(|&i| vecs.column(i).into_owned()).collect::<Vec<_>>());
        let m = w.transpose() * &action[0] * &w;
        let kernel = null_space(&m, 1e-6);
        if kernel.ncols() != mult {
            return Err(Error::DecompositionResidual(format!(
                "zero-weight space of spin {s} has dimension {}, expected {mult}",
                kernel.ncols()
            )));
        }
        let zero = &w * kernel;
        let zeros = match splitter {
            Some(sp) if mult > 1 => {
                let (_, q) = eigh(&(zero.transpose() * sp * &zero));
                let mut z = &zero * q;
                for mut c in z.column_iter_mut() {
                    let mut v = c.clone_owned();
                    fix_sign(&mut v);
                    c.copy_from(&v);
                }
                z
            }
            _ => canonical_basis(&zero),
        };
        for c in 0..mult {
            let z = zeros.column(c).into_owned();
            let mut cols: Vec<RVec> = alloc::vec![z.clone()];
            let (mut re, mut im) = (z, RVec::zeros(n));
            for _ in 0..s / 2 {
                let (r2, i2) = raise_real(action, &re, &im);
                re = r2;
                im = i2;
                cols.push(re.normalize());
                cols.push(im.normalize());
            }
            out.push(IsotypicComponent { spin: s, basis: RMat::from_columns(&cols) });
        }
    }
    Ok(out)
}

/// Spins of a decomposition, in component order.
pub fn spins<T: Scalar>(components: &[IsotypicComponent<T>]) -> Vec<usize> {
    components.iter().map(|c| c.spin).collect()
}
