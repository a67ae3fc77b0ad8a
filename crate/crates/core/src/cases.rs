//! The groups the verification suites run on, with their designated
//! components and forms.
//!
//! For a group acting transitively on an odd sphere `S^{N−1}` the designated
//! component is the one whose dimension is `N − 1`:
//!
//! * `SO(2n)`: the Euler component `span{e_0 ∧ e_i}`, on `ℝ^{2n}`.
//! * `SU(n)`: the top component `S^{2n−2}`, on `ℂ^n ≅ ℝ^{2n}`.
//! * `Sp(n)`: the top component `S^{4n−2}`, on `ℂ^{2n} ≅ ℝ^{4n}`.
//! * `Spin(7)`: the `S^6` component of `so(7)`, lifted to `ℝ^8`.
//! * `Spin(9)`: the `S^{14}` component of `so(9)`, lifted to `ℝ^{16}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::grassmann::GrassmannFrame;
use crate::invforms::{FormSpec, InvariantPolynomial, MAX_EXACT_DEGREE};
use crate::liealg::{build_algebra, orientation_involution, Family, MatrixLieAlgebra};
use crate::linalg::{RMat, RVec};
use crate::principal::{
    kostant_decompose, principal_triple, spin_structure, KostantDecomposition, PrincipalTriple, SpinStructure,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Su(usize),
    So(usize),
    Sp(usize),
    Spin7,
    Spin9,
}

impl Group {
    /// Parses a family name (`su`, `so`, `sp`, `spin7`, `spin9`) and parameter.
    pub fn parse(family: &str, param: Option<usize>) -> Result<Group> {
        let need = |p: Option<usize>| p.ok_or_else(|| Error::NotApplicable(format!("family {family} needs a parameter")));
        match family {
            "su" => Ok(Group::Su(need(param)?)),
            "so" => Ok(Group::So(need(param)?)),
            "sp" => Ok(Group::Sp(need(param)?)),
            "spin7" => Ok(Group::Spin7),
            "spin9" => Ok(Group::Spin9),
            _ => Err(Error::NotApplicable(format!("unknown family {family}"))),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Group::Su(n) => format!("su({n})"),
            Group::So(n) => format!("so({n})"),
            Group::Sp(n) => format!("sp({n})"),
            Group::Spin7 => "spin7".into(),
            Group::Spin9 => "spin9".into(),
        }
    }

    /// The Lie algebra (for the spin groups, `so(7)` or `so(9)`).
    pub fn algebra_key(&self) -> (Family, usize) {
        match *self {
            Group::Su(n) => (Family::Su, n),
            Group::So(n) => (Family::So, n),
            Group::Sp(n) => (Family::Sp, n),
            Group::Spin7 => (Family::So, 7),
            Group::Spin9 => (Family::So, 9),
        }
    }

    /// Dimension of the sphere's ambient space, when the group acts
    /// transitively on an odd sphere.
    pub fn sphere_ambient(&self) -> Option<usize> {
        match *self {
            Group::Su(n) => Some(2 * n),
            Group::So(n) if n % 2 == 0 => Some(n),
            Group::So(_) => None,
            Group::Sp(n) => Some(4 * n),
            Group::Spin7 => Some(8),
            Group::Spin9 => Some(16),
        }
    }
}

/// A group with its principal triple and Kostant decomposition.
#[derive(Debug, Clone)]
pub struct GroupModel {
    pub group: Group,
    pub algebra: MatrixLieAlgebra,
    pub triple: PrincipalTriple,
    pub kostant: KostantDecomposition,
    pub spin: Option<SpinStructure>,
}

pub fn model(group: Group) -> Result<GroupModel> {
    let (family, param) = group.algebra_key();
    let algebra = build_algebra(family, param)?;
    let triple = principal_triple(&algebra)?;
    let kostant = kostant_decompose(&algebra, &triple)?;
    let spin = match group {
        Group::Spin7 => Some(spin_structure(7)?),
        Group::Spin9 => Some(spin_structure(9)?),
        _ => None,
    };
    Ok(GroupModel { group, algebra, triple, kostant, spin })
}

impl GroupModel {
    pub fn component_count(&self) -> usize {
        self.kostant.components.len()
    }

    pub fn spin_of(&self, i: usize) -> usize {
        self.kostant.components[i].spin
    }

    /// The oriented Grassmannian point of component `i`.
    pub fn frame(&self, i: usize) -> Result<GrassmannFrame> {
        let c = self
            .kostant
            .components
            .get(i)
            .ok_or_else(|| Error::NotApplicable(format!("{} has no component {i}", self.group.label())))?;
        GrassmannFrame::new(c.basis.clone())
    }

    /// Index of `V_1 = span{X1, X2, X3}`.
    pub fn principal_index(&self) -> usize {
        self.kostant.principal_index(&self.triple).expect("the triple spans a spin-2 component")
    }

    /// Eigenvalue of the orientation involution on component `i` (`so(2k)`).
    pub fn sigma_eigenvalue(&self, i: usize) -> Option<f64> {
        if self.algebra.family() != Family::So || self.algebra.ambient_dim() % 2 == 1 {
            return None;
        }
        let s = orientation_involution(&self.algebra).ok()?;
        let b = &self.kostant.components[i].basis;
        Some((b.transpose() * s.matrix() * b).trace() / b.ncols() as f64)
    }

    /// Index of the Euler component `V` (`so(2k)`).
    pub fn euler_index(&self) -> Option<usize> {
        let spin = self.algebra.ambient_dim().checked_sub(2)?;
        (0..self.component_count())
            .find(|&i| self.spin_of(i) == spin && self.sigma_eigenvalue(i).is_some_and(|e| e < -0.5))
    }

    /// Index of `V′` (`so(4k)`).
    pub fn pontryagin_twin_index(&self) -> Option<usize> {
        let spin = self.algebra.ambient_dim().checked_sub(2)?;
        (0..self.component_count())
            .find(|&i| self.spin_of(i) == spin && self.sigma_eigenvalue(i).is_some_and(|e| e > 0.5))
    }

    /// The characteristic-class form attached to component `i`, if its degree
    /// is within reach of exact antisymmetrization.
    pub fn default_form(&self, i: usize) -> Option<FormSpec> {
        let lambda = self.spin_of(i) / 2;
        if 2 * lambda + 1 > MAX_EXACT_DEGREE {
            return None;
        }
        let poly = match self.group {
            Group::So(_) if Some(i) == self.euler_index() => InvariantPolynomial::euler(&self.algebra).ok()?,
            _ if lambda == 1 => InvariantPolynomial::cartan(),
            Group::Su(_) | Group::Sp(_) => InvariantPolynomial::char_coeff(lambda + 1),
            Group::Spin7 if lambda == 3 => InvariantPolynomial::spin7_class(),
            _ if lambda % 2 == 1 => InvariantPolynomial::pontryagin(lambda.div_ceil(2)),
            _ => return None,
        };
        Some(FormSpec::new(poly))
    }

    /// Index of the designated sphere component.
    pub fn sphere_index(&self) -> Option<usize> {
        let ambient = self.group.sphere_ambient()?;
        match self.group {
            Group::So(_) => self.euler_index(),
            _ => (0..self.component_count()).find(|&i| self.kostant.components[i].dim() == ambient - 1),
        }
    }

    /// Matrices acting on the sphere's ambient space for the designated
    /// component. For `so(2n)` this is `a_i v = v_0 e_i − v_i e_0`, which
    /// spans the Euler component; otherwise the component's orthonormal basis
    /// (lifted to the spin module for the spin groups).
    pub fn sphere_matrices(&self) -> Result<Vec<RMat>> {
        let i = self
            .sphere_index()
            .ok_or_else(|| Error::NotApplicable(format!("{} acts on no odd sphere", self.group.label())))?;
        Ok(match self.group {
            Group::So(n) => euler_sphere_basis(n),
            Group::Spin7 | Group::Spin9 => {
                let s = self.spin.as_ref().expect("spin groups carry a spin structure");
                self.kostant.components[i].basis.column_iter().map(|c| s.lift_coords(c.as_slice())).collect()
            }
            _ => self.kostant.component_matrices(&self.algebra, i),
        })
    }

    /// Matrices of the algebra basis acting on the sphere's ambient space.
    pub fn sphere_images(&self) -> Option<Vec<RMat>> {
        self.group.sphere_ambient()?;
        Some(match &self.spin {
            Some(s) => s.algebra_image.clone(),
            None => self.algebra.basis().to_vec(),
        })
    }

    /// Orthonormal coordinates of the designated component matching
    /// [`sphere_matrices`](Self::sphere_matrices) up to scale and rotation.
    pub fn sphere_frame(&self) -> Option<GrassmannFrame> {
        self.frame(self.sphere_index()?).ok()
    }
}

/// `a_i v = v_0 e_i − v_i e_0` for `i = 1, …, n − 1`.
pub fn euler_sphere_basis(n: usize) -> Vec<RMat> {
    (1..n)
        .map(|i| {
            let mut m = RMat::zeros(n, n);
            m[(i, 0)] = 1.0;
            m[(0, i)] = -1.0;
            m
        })
        .collect()
}

/// Groups covered by the evidence report, in report order.
pub fn report_groups() -> Vec<Group> {
    let mut v = Vec::new();
    v.extend((3..=6).map(Group::Su));
    v.extend((4..=9).map(Group::So));
    v.extend((2..=3).map(Group::Sp));
    v.push(Group::Spin7);
    v.push(Group::Spin9);
    v
}

/// `det(u, a_1 u, …, a_7 u)` over the product of the column norms, for the
/// spin-6 component at the fixed spinor.
pub fn spin7_submersion_ratio(m: &GroupModel) -> Result<f64> {
    let s = m.spin.as_ref().filter(|s| s.d == 7).ok_or(Error::WrongFamily(Family::So))?;
    let u = s.fixed_spinor.as_ref().expect("d = 7 has a fixed spinor");
    let i = m.sphere_index().ok_or_else(|| Error::NotApplicable("no spin-6 component".into()))?;
    let mut cols: Vec<RVec> = alloc::vec![u.clone()];
    cols.extend(m.kostant.components[i].basis.column_iter().map(|c| s.lift_coords(c.as_slice()) * u));
    let norms: f64 = cols.iter().map(|c| c.norm()).product();
    Ok(RMat::from_columns(&cols).determinant() / norms)
}
