//! Principal three-dimensional subalgebras and the Kostant decomposition.
//!
//! The principal triple is modelled directly on the defining representation:
//!
//! * `su(n)`: the image of `S^{n−1}`.
//! * `so(2k+1)`: the real form of `S^{2k}`.
//! * `so(2k)`: the real form of `1 ⊕ S^{2k−2}`, trivial summand on `e_0`.
//! * `sp(n)`: the image of `S^{2n−1}`, which commutes with its quaternionic
//!   structure.
//!
//! The adjoint action of the triple is then decomposed into isotypic
//! components; their spins are `2λ` for the exponents `λ` of the algebra.

use alloc::format;
use alloc::vec::Vec;

use crate::linalg::{
    max_abs, null_space, orthogonal_complement, principal_angle, realify, RMat, RVec,
};
use crate::liealg::{
    build_algebra, clifford_gammas, orientation_involution, spin_lift, CliffordModule, Family, MatrixLieAlgebra,
};
use crate::sl2rep::{irrep, isotypic_decompose_real, real_form_action, spins, IsotypicComponent};
use crate::{Error, Result};

/// Maximum principal angle accepted when two subspaces must coincide.
pub const SUBSPACE_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct PrincipalTriple {
    pub host: MatrixLieAlgebra,
    /// `[X1, X2] = 2 X3` and cyclically.
    pub generators: [RMat; 3],
}

impl PrincipalTriple {
    /// Largest violation of the bracket relations and of membership in the host.
    pub fn residual(&self) -> f64 {
        let x = &self.generators;
        let mut worst = 0.0_f64;
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            worst = worst.max(max_abs(&(&x[a] * &x[b] - &x[b] * &x[a] - &x[c] * 2.0)));
        }
        for g in x {
            worst = worst.max(self.host.membership_residual(g)).max(self.host.residual(g));
        }
        worst
    }

    /// Orthonormal coordinates (columns) of `span{X1, X2, X3}` in the host.
    pub fn span_coords(&self) -> RMat {
        let cols: Vec<RVec> = self.generators.iter().map(|x| self.host.coords(x).normalize()).collect();
        RMat::from_columns(&cols)
    }

    /// `ad(X_a)` in the orthonormal coordinates of the host.
    pub fn adjoint_action(&self) -> [RMat; 3] {
        let [a, b, c] = &self.generators;
        [self.host.ad_matrix(a), self.host.ad_matrix(b), self.host.ad_matrix(c)]
    }
}

fn block_diag_zero(m: &RMat) -> RMat {
    let n = m.nrows() + 1;
    let mut out = RMat::zeros(n, n);
    out.view_mut((1, 1), (n - 1, n - 1)).copy_from(m);
    out
}

pub fn principal_triple(g: &MatrixLieAlgebra) -> Result<PrincipalTriple> {
    let p = g.param();
    let generators: [RMat; 3] = match g.family() {
        Family::Su => irrep(p - 1).compact().clone().map(|x| realify(&x)),
        Family::Sp => irrep(2 * p - 1).compact().clone().map(|x| realify(&x)),
        Family::So if p % 2 == 1 => real_form_action(&irrep(p - 1))?,
        Family::So => real_form_action(&irrep(p - 2))?.map(|x| block_diag_zero(&x)),
    };
    let t = PrincipalTriple { host: g.clone(), generators };
    let residual = t.residual();
    if residual > 1e-10 {
        return Err(Error::DecompositionResidual(format!("principal triple residual {residual:e}")));
    }
    Ok(t)
}

/// Cartan types with their ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl CartanType {
    pub fn of(family: Family, param: usize) -> CartanType {
        match family {
            Family::Su => CartanType::A(param - 1),
            Family::Sp => CartanType::C(param),
            Family::So if param % 2 == 1 => CartanType::B(param / 2),
            Family::So => CartanType::D(param / 2),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(l) | CartanType::B(l) | CartanType::C(l) | CartanType::D(l) => l,
            CartanType::G2 => 2,
            CartanType::F4 => 4,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
        }
    }
}

/// Exponents in ascending order. For `D_l` this is `1, 3, …, 2l − 3` together
/// with `l − 1`.
pub fn exponents(t: CartanType) -> Vec<usize> {
    let mut out: Vec<usize> = match t {
        CartanType::A(l) => (1..=l).collect(),
        CartanType::B(l) | CartanType::C(l) => (0..l).map(|k| 2 * k + 1).collect(),
        CartanType::D(l) => {
            let mut v: Vec<usize> = (0..l.saturating_sub(1)).map(|k| 2 * k + 1).collect();
            v.push(l - 1);
            v
        }
        CartanType::G2 => alloc::vec![1, 5],
        CartanType::F4 => alloc::vec![1, 5, 7, 11],
        CartanType::E6 => alloc::vec![1, 4, 5, 7, 8, 11],
        CartanType::E7 => alloc::vec![1, 5, 7, 9, 11, 13, 17],
        CartanType::E8 => alloc::vec![1, 7, 11, 13, 17, 19, 23, 29],
    };
    out.sort_unstable();
    out
}

#[derive(Debug, Clone)]
pub struct KostantDecomposition {
    /// Components in orthonormal coordinates of the algebra, ascending spin;
    /// for `so(4k)` the copy on which `σ = −1` comes first.
    pub components: Vec<IsotypicComponent<f64>>,
    /// `spin / 2` for each component, in component order.
    pub exponents: Vec<usize>,
}

impl KostantDecomposition {
    /// Basis of component `i` as matrices of the algebra.
    pub fn component_matrices(&self, g: &MatrixLieAlgebra, i: usize) -> Vec<RMat> {
        self.components[i].basis.column_iter().map(|c| g.from_coords(c.as_slice())).collect()
    }

    /// Index of the component equal to `span{X1, X2, X3}`.
    pub fn principal_index(&self, t: &PrincipalTriple) -> Option<usize> {
        let span = t.span_coords();
        self.components
            .iter()
            .position(|c| c.spin == 2 && principal_angle(&c.basis, &span) <= SUBSPACE_TOL)
    }
}

pub fn kostant_decompose(g: &MatrixLieAlgebra, t: &PrincipalTriple) -> Result<KostantDecomposition> {
    let action = t.adjoint_action();
    let splitter = match g.family() {
        Family::So if g.param() % 2 == 0 => Some(orientation_involution(g)?.matrix().clone()),
        _ => None,
    };
    let components = isotypic_decompose_real(&action, splitter.as_ref())?;
    let got: Vec<usize> = components.iter().map(|c| c.spin / 2).collect();
    let mut sorted = got.clone();
    sorted.sort_unstable();
    let expected = exponents(CartanType::of(g.family(), g.param()));
    if sorted != expected {
        return Err(Error::DecompositionResidual(format!(
            "{}({}) exponents {sorted:?}, expected {expected:?}",
            g.family(),
            g.param()
        )));
    }
    Ok(KostantDecomposition { components, exponents: got })
}

/// The two copies of `S^{4k−2}` in `so(4k)`: `(V, V′)` with `σ = −1` on `V`
/// (inside the span of `e_0 ∧ e_i`) and `σ = +1` on `V′`.
pub fn split_euler_pontryagin(
    g: &MatrixLieAlgebra,
    kd: &KostantDecomposition,
) -> Result<(IsotypicComponent<f64>, IsotypicComponent<f64>)> {
    if g.family() != Family::So {
        return Err(Error::WrongFamily(g.family()));
    }
    let n = g.ambient_dim();
    if n % 4 != 0 {
        return Err(Error::NotApplicable(format!("so({n}) has no repeated exponent")));
    }
    let spin = n - 2;
    let copies: Vec<&IsotypicComponent<f64>> = kd.components.iter().filter(|c| c.spin == spin).collect();
    if copies.len() != 2 {
        return Err(Error::NotApplicable(format!("spin {spin} occurs {} times", copies.len())));
    }
    let sigma = orientation_involution(g)?;
    let eigen = |c: &IsotypicComponent<f64>| (c.basis.transpose() * sigma.matrix() * &c.basis).trace() / c.dim() as f64;
    let (a, b) = (copies[0], copies[1]);
    let (ea, eb) = (eigen(a), eigen(b));
    let ok = |x: f64, target: f64| (x - target).abs() < 1e-8;
    if ok(ea, -1.0) && ok(eb, 1.0) {
        Ok((a.clone(), b.clone()))
    } else if ok(ea, 1.0) && ok(eb, -1.0) {
        Ok((b.clone(), a.clone()))
    } else {
        Err(Error::DecompositionResidual(format!("orientation eigenvalues {ea}, {eb} are not ±1")))
    }
}

/// Spin representation of `so(7)` or `so(9)` restricted to the principal
/// triple.
#[derive(Debug, Clone)]
pub struct SpinStructure {
    pub d: usize,
    pub algebra: MatrixLieAlgebra,
    pub clifford: CliffordModule,
    pub triple: PrincipalTriple,
    /// Lifts of the orthonormal basis of `so(d)`.
    pub algebra_image: Vec<RMat>,
    /// Lifts of `X1, X2, X3`.
    pub lifted_triple: [RMat; 3],
    /// Isotypic components of `ℝ^{spin_dim}`, ascending spin.
    pub summands: Vec<IsotypicComponent<f64>>,
    /// Unit spinor fixed by the triple (`d = 7`).
    pub fixed_spinor: Option<RVec>,
    /// Orthonormal coordinates (columns) in `so(7)` of the annihilator of the
    /// fixed spinor (`d = 7`).
    pub stabilizer: Option<RMat>,
}

impl SpinStructure {
    /// `a ↦ lift(a)` for an element given by coordinates in `so(d)`.
    pub fn lift_coords(&self, c: &[f64]) -> RMat {
        crate::linalg::combine(&self.algebra_image, c.iter().copied())
    }

    /// Summand of the given spin.
    pub fn summand(&self, spin: usize) -> Option<&IsotypicComponent<f64>> {
        self.summands.iter().find(|c| c.spin == spin)
    }
}

pub fn spin_structure(d: usize) -> Result<SpinStructure> {
    let clifford = clifford_gammas(d)?;
    let algebra = build_algebra(Family::So, d)?;
    let triple = principal_triple(&algebra)?;
    let algebra_image = algebra.basis().iter().map(|b| spin_lift(&clifford, b)).collect::<Result<Vec<_>>>()?;
    let [a, b, c] = &triple.generators;
    let lifted_triple = [spin_lift(&clifford, a)?, spin_lift(&clifford, b)?, spin_lift(&clifford, c)?];
    let summands = isotypic_decompose_real(&lifted_triple, None)?;
    let expected: &[usize] = if d == 7 { &[0, 6] } else { &[4, 10] };
    if spins(&summands) != expected {
        return Err(Error::DecompositionResidual(format!(
            "spin({d}) module has spins {:?}, expected {expected:?}",
            spins(&summands)
        )));
    }
    let (fixed_spinor, stabilizer) = if d == 7 {
        let mut u = summands[0].basis.column(0).into_owned();
        crate::linalg::fix_sign(&mut u);
        let cols: Vec<RVec> = algebra_image.iter().map(|m| m * &u).collect();
        let stab = null_space(&RMat::from_columns(&cols), 1e-6);
        if stab.ncols() != 14 {
            return Err(Error::DecompositionResidual(format!("stabilizer has dimension {}", stab.ncols())));
        }
        (Some(u), Some(stab))
    } else {
        (None, None)
    };
    Ok(SpinStructure {
        d,
        algebra,
        clifford,
        triple,
        algebra_image,
        lifted_triple,
        summands,
        fixed_spinor,
        stabilizer,
    })
}

/// Decomposition of the stabilizer of the fixed spinor under the triple.
pub fn stabilizer_decomposition(s: &SpinStructure) -> Result<Vec<IsotypicComponent<f64>>> {
    let stab = s.stabilizer.as_ref().ok_or_else(|| Error::NotApplicable(format!("spin({}) has no fixed spinor", s.d)))?;
    let action = s.triple.adjoint_action().map(|x| stab.transpose() * x * stab);
    isotypic_decompose_real(&action, None)
}

/// The spin-6 Kostant component of `so(7)`, checked against the orthogonal
/// complement of the stabilizer.
pub fn g2_complement(s: &SpinStructure, kd: &KostantDecomposition) -> Result<IsotypicComponent<f64>> {
    let stab = s.stabilizer.as_ref().ok_or_else(|| Error::NotApplicable(format!("spin({}) has no fixed spinor", s.d)))?;
    let stab_spins = spins(&stabilizer_decomposition(s)?);
    if stab_spins != [2, 10] {
        return Err(Error::Mismatch(format!("stabilizer spins {stab_spins:?}, expected [2, 10]")));
    }
    let comp = kd
        .components
        .iter()
        .find(|c| c.spin == 6)
        .ok_or_else(|| Error::Mismatch("no spin-6 component".into()))?;
    let complement = orthogonal_complement(stab);
    let angle = principal_angle(&comp.basis, &complement);
    if angle > SUBSPACE_TOL {
        return Err(Error::Mismatch(format!("spin-6 component is at angle {angle:e} from the complement")));
    }
    Ok(comp.clone())
}

/// Singular values of `a ↦ lift(a)·u` on the given subspace of `so(7)`
/// (orthonormal coordinate columns), descending.
pub fn orbit_map_singular_values(s: &SpinStructure, subspace: &RMat) -> Result<RVec> {
    let u = s.fixed_spinor.as_ref().ok_or_else(|| Error::NotApplicable(format!("spin({}) has no fixed spinor", s.d)))?;
    let cols: Vec<RVec> = subspace.column_iter().map(|c| s.lift_coords(c.as_slice()) * u).collect();
    let mut sv = RMat::from_columns(&cols).svd(false, false).singular_values;
    sv.as_mut_slice().sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
    Ok(sv)
}
