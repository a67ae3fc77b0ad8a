//! Sylvester resultants and the polynomial model of `S^n`.
//!
//! The orthonormal weight vector `u_k` of `S^n` corresponds to the monomial
//! `√C(n, k) z^{n−k}`. Polynomials are stored leading coefficient first, with
//! a formal degree that may exceed the actual one.
//!
//! Under this identification the antilinear structure of `S^n` becomes
//! `a_j ↦ (−1)^{n−j} conj(a_{n−j})`. For even `n` its fixed points are the
//! real polynomials, `a_j = (−1)^j conj(a_{n−j})`; for odd `n` it is `−p*`
//! with `p*(z) = z^n conj(p(−1/z̄))`.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::cases::{model, Group};
use crate::invforms::q_poly_eval;
use crate::linalg::{derealify_vec, eigh_c, realify_vec, CMat, CVec, Complex64, RMat, RVec, I};
use crate::principal::SpinStructure;
use crate::sampling::{gaussian_vec, stream_rng, SphereSampler};
use crate::sl2rep::{antilinear_structure, irrep, AntilinearStructure, StructureKind};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    /// `a_0, …, a_deg`, leading first.
    pub coeffs: Vec<Complex64>,
}

impl Poly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs a formal degree");
        Poly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero(deg: usize) -> Self {
        Poly::new(alloc::vec![Complex64::new(0.0, 0.0); deg + 1])
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.deg() + other.deg());
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Whether `a_j = (−1)^j conj(a_{deg−j})` within `tol`.
    pub fn is_real_structured(&self, tol: f64) -> bool {
        let d = self.deg();
        (0..=d).all(|j| {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            (self.coeffs[j] - self.coeffs[d - j].conj() * sign).norm() <= tol
        })
    }

    /// Projection onto the real polynomials of the same formal degree.
    pub fn real_part(&self) -> Poly {
        let d = self.deg();
        Poly::new(
            (0..=d)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                    (self.coeffs[j] + self.coeffs[d - j].conj() * sign) * 0.5
                })
                .collect(),
        )
    }
}

/// Determinant of the `(m + n) x (m + n)` Sylvester matrix of formal degrees
/// `m = deg p`, `n = deg q`.
pub fn sylvester_resultant(p: &Poly, q: &Poly) -> Complex64 {
    let (m, n) = (p.deg(), q.deg());
    let size = m + n;
    if size == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut s = CMat::zeros(size, size);
    for r in 0..n {
        for (k, a) in p.coeffs.iter().enumerate() {
            s[(r, r + k)] = *a;
        }
    }
    for r in 0..m {
        for (k, b) in q.coeffs.iter().enumerate() {
            s[(n + r, r + k)] = *b;
        }
    }
    s.determinant()
}

/// `p*(z) = z^D conj(p(−1/z̄))` for odd formal degree `D`:
/// `b_j = (−1)^j conj(a_{D−j})`.
pub fn j_transform(p: &Poly) -> Result<Poly> {
    let d = p.deg();
    if d % 2 == 0 {
        return Err(Error::EvenDegree(d));
    }
    Ok(Poly::new(
        (0..=d)
            .map(|j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                p.coeffs[d - j].conj() * sign
            })
            .collect(),
    ))
}

fn sqrt_binomials(n: usize) -> Vec<f64> {
    let mut out = alloc::vec![1.0_f64; n + 1];
    for k in 1..=n {
        out[k] = out[k - 1] * (n - k + 1) as f64 / k as f64;
    }
    out.iter().map(|&x| libm::sqrt(x)).collect()
}

/// Polynomial of the weight coordinates `w_k` (in `u_0, …, u_n`).
pub fn weight_poly(w: &CVec) -> Poly {
    let b = sqrt_binomials(w.len() - 1);
    Poly::new(w.iter().zip(b.iter()).map(|(z, s)| z * *s).collect())
}

pub fn poly_weight(p: &Poly) -> CVec {
    let b = sqrt_binomials(p.deg());
    CVec::from_iterator(p.deg() + 1, p.coeffs.iter().zip(b.iter()).map(|(z, s)| z / *s))
}

/// Polynomial pair attached to a vector of the realified `S^{n−1}`, `n = dim`.
///
/// * `n` odd (real structure): `(p_1, p_2)` for `v = v_1 + i v_2` with `v_1`,
///   `v_2` real.
/// * `n` even (quaternionic structure): `(p, p*)`.
pub fn vector_to_polys(v: &RVec, structure: &AntilinearStructure) -> Result<(Poly, Poly)> {
    let n = structure.matrix.nrows();
    if v.len() != 2 * n {
        return Err(Error::ShapeMismatch(format!("vector of length {} for S^{}", v.len(), n - 1)));
    }
    let parity_ok = match structure.kind {
        StructureKind::Real => n % 2 == 1,
        StructureKind::Quaternionic => n % 2 == 0,
    };
    if !parity_ok {
        return Err(Error::WrongParity(n));
    }
    let w = derealify_vec(v);
    match structure.kind {
        StructureKind::Real => {
            let sw = structure.apply(&w);
            let w1 = (&w + &sw).map(|z| z * 0.5);
            let w2 = (&w - &sw).map(|z| z / (I * 2.0));
            Ok((weight_poly(&w1), weight_poly(&w2)))
        }
        StructureKind::Quaternionic => {
            let p = weight_poly(&w);
            let ps = j_transform(&p)?;
            Ok((p, ps))
        }
    }
}

/// Inverse of [`vector_to_polys`] on its image: `(p_1, p_2) ↦ w(p_1) + i w(p_2)`
/// for the real structure, `(p, _) ↦ w(p)` for the quaternionic one.
pub fn polys_to_vector(p: &Poly, q: &Poly, structure: &AntilinearStructure) -> RVec {
    let w = match structure.kind {
        StructureKind::Real => poly_weight(p) + poly_weight(q).map(|z| z * I),
        StructureKind::Quaternionic => poly_weight(p),
    };
    realify_vec(&w)
}

/// Complex weight frames of the real summands of a spin module: for each
/// summand of spin `s`, columns `ŵ_0, …, ŵ_s` in `ℂ^N` on which the lifted
/// triple acts by the standard matrices of `S^s`, with
/// `conj(ŵ_k) = (−1)^k ŵ_{s−k}`.
#[derive(Debug, Clone)]
pub struct WeightFrames {
    /// `(spin, frame)`, descending spin.
    pub summands: Vec<(usize, CMat)>,
}

pub fn weight_frames(s: &SpinStructure) -> Result<WeightFrames> {
    let x = s.lifted_triple.clone().map(|m| m.map(|a| Complex64::new(a, 0.0)));
    let lower = (&x[1] + x[2].map(|z| z * I)).map(|z| -z * 0.5);
    let mut summands = Vec::new();
    for comp in &s.summands {
        let spin = comp.spin;
        let w = comp.basis.map(|a| Complex64::new(a, 0.0));
        let h = w.adjoint() * x[0].map(|z| -z * I) * &w;
        let (vals, vecs) = eigh_c(&h);
        let top = vals.len() - 1;
        if (vals[top] - spin as f64).abs() > 1e-8 {
            return Err(Error::DecompositionResidual(format!("highest weight {} != {spin}", vals[top])));
        }
        let mut cols: Vec<CVec> = alloc::vec![&w * vecs.column(top)];
        for _ in 0..spin {
            let next = &lower * cols.last().expect("nonempty");
            let norm = next.norm();
            cols.push(next / Complex64::new(norm, 0.0));
        }
        let theta = cols[spin].dotc(&cols[0].map(|z| z.conj())).arg();
        let phase = Complex64::from_polar(1.0, theta / 2.0);
        let frame = CMat::from_columns(&cols.iter().map(|c| c * phase).collect::<Vec<_>>());
        summands.push((spin, frame));
    }
    summands.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(WeightFrames { summands })
}

impl WeightFrames {
    /// Real polynomials of the summand projections of `v`, descending spin.
    pub fn polys(&self, v: &RVec) -> Vec<Poly> {
        let vc = v.map(|a| Complex64::new(a, 0.0));
        self.summands.iter().map(|(_, f)| weight_poly(&(f.adjoint() * &vc))).collect()
    }

    /// `Σ_summands Σ_k w_k(p) ŵ_k`, real for real polynomials.
    pub fn vector(&self, polys: &[Poly]) -> RVec {
        let n = self.summands[0].1.nrows();
        let mut out = CVec::zeros(n);
        for ((_, f), p) in self.summands.iter().zip(polys) {
            out += f * poly_weight(p);
        }
        out.map(|z| z.re)
    }
}

/// Cases of the resultant suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultantCase {
    /// `SU(n)` on `ℂ^n ≅ S^{n−1}`, `3 ≤ n ≤ 6`.
    Su(usize),
    /// `Spin(9)` on `ℝ^16 = S^10 ⊕ S^4`.
    Spin9,
}

impl ResultantCase {
    pub fn label(&self) -> alloc::string::String {
        match self {
            ResultantCase::Su(n) => format!("su({n})"),
            ResultantCase::Spin9 => "spin9".into(),
        }
    }
}

enum PolyModel {
    Su(AntilinearStructure),
    Spin9(WeightFrames),
}

struct CaseModel {
    mats: Vec<RMat>,
    ambient: usize,
    polys: PolyModel,
}

impl CaseModel {
    fn new(case: ResultantCase) -> Result<Self> {
        let group = match case {
            ResultantCase::Su(n) if (3..=6).contains(&n) => Group::Su(n),
            ResultantCase::Su(n) => {
                return Err(Error::UnsupportedParam { family: crate::liealg::Family::Su, param: n })
            }
            ResultantCase::Spin9 => Group::Spin9,
        };
        let m = model(group)?;
        let mats = m.sphere_matrices()?;
        let ambient = mats[0].nrows();
        let polys = match case {
            ResultantCase::Su(n) => PolyModel::Su(antilinear_structure(&irrep(n - 1))),
            ResultantCase::Spin9 => PolyModel::Spin9(weight_frames(m.spin.as_ref().expect("spin structure"))?),
        };
        Ok(CaseModel { mats, ambient, polys })
    }

    fn resultant(&self, v: &RVec) -> Result<Complex64> {
        let (p, q) = match &self.polys {
            PolyModel::Su(s) => vector_to_polys(v, s)?,
            PolyModel::Spin9(f) => {
                let mut ps = f.polys(v);
                let q = ps.pop().expect("two summands");
                (ps.pop().expect("two summands"), q)
            }
        };
        Ok(sylvester_resultant(&p, &q))
    }

    /// A unit vector whose polynomial pair has the common root `c`.
    fn common_zero_vector<R: Rng>(&self, rng: &mut R, c: Complex64) -> RVec {
        let quad = Poly::new(alloc::vec![I * c.conj(), I * (1.0 - c.norm_sqr()), -I * c]);
        let mut random_poly = |deg: usize| {
            let re = gaussian_vec(rng, deg + 1);
            let im = gaussian_vec(rng, deg + 1);
            Poly::new((0..=deg).map(|k| Complex64::new(re[k], im[k])).collect())
        };
        let v = match &self.polys {
            PolyModel::Su(s) => {
                let n = s.matrix.nrows();
                match s.kind {
                    StructureKind::Real => {
                        let p1 = quad.mul(&random_poly(n - 3).real_part());
                        let p2 = quad.mul(&random_poly(n - 3).real_part());
                        polys_to_vector(&p1, &p2, s)
                    }
                    StructureKind::Quaternionic => {
                        let p = quad.mul(&random_poly(n - 3));
                        polys_to_vector(&p, &p, s)
                    }
                }
            }
            PolyModel::Spin9(f) => {
                let polys: Vec<Poly> = f
                    .summands
                    .iter()
                    .map(|(spin, _)| quad.mul(&random_poly(spin - 2).real_part()))
                    .collect();
                f.vector(&polys)
            }
        };
        v.normalize()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProportionalityReport {
    pub ratio_mean: f64,
    /// `max |q/r − mean| / |mean|` over the samples above the floor.
    pub ratio_rel_spread: f64,
    pub zeros_consistent: bool,
    pub samples: usize,
    pub used: usize,
    /// Largest `|Q|` and `|R|` on the common-zero samples, relative to the
    /// largest values on the random samples.
    pub zero_q_max: f64,
    pub zero_r_max: f64,
}

/// Relative floor below which `|R|` is excluded from the ratio.
pub const RATIO_FLOOR: f64 = 1e-8;
/// Number of constructed common-zero samples.
pub const COMMON_ZERO_SAMPLES: usize = 100;
/// Relative size under which `Q` and `R` count as vanishing.
pub const ZERO_TOL: f64 = 1e-8;

pub fn proportionality_suite(case: ResultantCase, samples: usize, seed: u64) -> Result<ProportionalityReport> {
    let cm = CaseModel::new(case)?;
    let sampler = SphereSampler::new(seed, samples);
    let mut pairs: Vec<(f64, f64)> = Vec::with_capacity(samples);
    for i in 0..samples {
        let v = sampler.point(i, cm.ambient);
        let q = q_poly_eval(&cm.mats, &v)?;
        let r = cm.resultant(&v)?.re;
        pairs.push((q, r));
    }
    let r_max = pairs.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    let q_max = pairs.iter().map(|p| p.0.abs()).fold(0.0, f64::max);
    let ratios: Vec<f64> =
        pairs.iter().filter(|p| p.1.abs() >= RATIO_FLOOR * r_max && r_max > 0.0).map(|p| p.0 / p.1).collect();
    if ratios.is_empty() {
        return Err(Error::DegenerateSample);
    }
    let ratio_mean = crate::linalg::pairwise_sum(&ratios) / ratios.len() as f64;
    let ratio_rel_spread = ratios.iter().map(|r| (r - ratio_mean).abs()).fold(0.0, f64::max) / ratio_mean.abs();

    let mut zero_q_max = 0.0_f64;
    let mut zero_r_max = 0.0_f64;
    for i in 0..COMMON_ZERO_SAMPLES {
        let mut rng = stream_rng(seed ^ 0x5eed_c0de, i as u64);
        let c = Complex64::new(rng.sample(rand_distr::StandardNormal), rng.sample(rand_distr::StandardNormal));
        let v = cm.common_zero_vector(&mut rng, c);
        zero_q_max = zero_q_max.max(q_poly_eval(&cm.mats, &v)?.abs() / q_max);
        zero_r_max = zero_r_max.max(cm.resultant(&v)?.norm() / r_max);
    }
    Ok(ProportionalityReport {
        ratio_mean,
        ratio_rel_spread,
        zeros_consistent: zero_q_max <= ZERO_TOL && zero_r_max <= ZERO_TOL,
        samples,
        used: ratios.len(),
        zero_q_max,
        zero_r_max,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignReport {
    pub min: f64,
    pub max: f64,
    pub violations: usize,
    pub samples: usize,
    /// `+1` when the claim is non-negativity, `−1` for non-positivity.
    pub expected_sign: i8,
    /// Largest `|Im R| / max |R|`.
    pub max_imag: f64,
    /// Whether all values lie on one side of zero, whichever it is.
    pub definite: bool,
}

/// Relative tolerance for a sign violation.
pub const SIGN_TOL: f64 = 1e-10;

/// Signs of `R(p_1, p_2)` (`n` odd and Spin(9), claimed `≥ 0`) or `R(p, p*)`
/// (`n` even, claimed `≤ 0`) over random vectors.
pub fn sign_suite(case: ResultantCase, samples: usize, seed: u64) -> Result<SignReport> {
    let cm = CaseModel::new(case)?;
    let expected_sign: i8 = match case {
        ResultantCase::Su(n) if n % 2 == 0 => -1,
        _ => 1,
    };
    let sampler = SphereSampler::new(seed, samples);
    let values: Vec<Complex64> =
        (0..samples).map(|i| cm.resultant(&sampler.point(i, cm.ambient))).collect::<Result<_>>()?;
    let scale = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let min = values.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
    let max = values.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let violations = values.iter().filter(|z| z.re * f64::from(expected_sign) < -SIGN_TOL * scale).count();
    let tol = SIGN_TOL * scale;
    let definite = min >= -tol || max <= tol;
    let max_imag = if scale > 0.0 { values.iter().map(|z| z.im.abs()).fold(0.0, f64::max) / scale } else { 0.0 };
    Ok(SignReport { min, max, violations, samples, expected_sign, max_imag, definite })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::principal::spin_structure;
    use crate::sl2rep::irrep;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_poly(seed: u64, deg: usize) -> Poly {
        let mut rng = stream_rng(seed, 0);
        let re = gaussian_vec(&mut rng, deg + 1);
        let im = gaussian_vec(&mut rng, deg + 1);
        Poly::new((0..=deg).map(|k| c(re[k], im[k])).collect())
    }

    #[test]
    fn small_resultants() {
        let p = Poly::from_real(&[1.0, -1.0]);
        let q = Poly::from_real(&[1.0, 1.0]);
        assert!((sylvester_resultant(&p, &q) - c(2.0, 0.0)).norm() < 1e-14);
        let r = random_poly(1, 3);
        assert!(sylvester_resultant(&r, &r).norm() < 1e-10);
        assert_eq!(sylvester_resultant(&Poly::from_real(&[2.0]), &Poly::from_real(&[3.0])), c(1.0, 0.0));
    }

    #[test]
    fn j_transform_properties() {
        let p = random_poly(2, 5);
        let pss = j_transform(&j_transform(&p).unwrap()).unwrap();
        for (a, b) in pss.coeffs.iter().zip(p.coeffs.iter()) {
            assert!((a + b).norm() < 1e-14);
        }
        let mono = Poly::from_real(&[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(j_transform(&mono).unwrap(), Poly::from_real(&[0.0, 0.0, 0.0, -1.0]));
        assert_eq!(j_transform(&Poly::from_real(&[1.0, 0.0])).unwrap().coeffs[1], c(-1.0, 0.0));
        assert_eq!(j_transform(&random_poly(3, 4)).unwrap_err(), Error::EvenDegree(4));
        // direct definition z^D conj(p(−1/z̄)) at a sample point
        let z = c(0.3, -0.7);
        let lhs = j_transform(&p).unwrap().eval(z);
        let rhs = z.powu(5) * p.eval(-c(1.0, 0.0) / z.conj()).conj();
        assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
        let r = sylvester_resultant(&p, &j_transform(&p).unwrap());
        assert!(r.im.abs() < 1e-9 * r.norm());
    }

    #[test]
    fn structure_matches_reality_condition() {
        // σ(w) for S^4: its polynomial satisfies p(−1/z̄) = z̄^{−4} conj(p(z)).
        let s = antilinear_structure(&irrep(4));
        let mut rng = stream_rng(4, 0);
        let w = derealify_vec(&gaussian_vec(&mut rng, 10));
        let real = (&w + s.apply(&w)).map(|z| z * 0.5);
        let p = weight_poly(&real);
        assert!(p.is_real_structured(1e-14));
        let z = c(0.4, 1.3);
        let lhs = p.eval(-c(1.0, 0.0) / z.conj());
        let rhs = p.eval(z).conj() / z.conj().powu(4);
        assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
    }

    #[test]
    fn round_trips() {
        for n in [3, 4, 5, 6] {
            let s = antilinear_structure(&irrep(n - 1));
            let v = SphereSampler::new(3, 1).point(0, 2 * n);
            let (p, q) = vector_to_polys(&v, &s).unwrap();
            let back = polys_to_vector(&p, &q, &s);
            assert!((back - &v).amax() < 1e-12);
            if n % 2 == 1 {
                assert!(p.is_real_structured(1e-12) && q.is_real_structured(1e-12));
            }
        }
        let w = CVec::from_vec(alloc::vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0)]);
        assert!((poly_weight(&weight_poly(&w)) - &w).norm() < 1e-14);
    }

    #[test]
    fn vector_with_zero_imaginary_part() {
        let s = antilinear_structure(&irrep(2));
        let w = CVec::from_vec(alloc::vec![c(1.0, 0.5), c(0.0, 0.3), c(1.0, -0.5)]);
        let real = (&w + s.apply(&w)).map(|z| z * 0.5);
        let (_, p2) = vector_to_polys(&realify_vec(&real), &s).unwrap();
        assert!(p2.coeffs.iter().all(|z| z.norm() < 1e-15));
        let (p1, p2) = vector_to_polys(&realify_vec(&real), &s).unwrap();
        assert!(sylvester_resultant(&p1, &p2).norm() < 1e-14);
        assert!(matches!(vector_to_polys(&RVec::zeros(4), &s), Err(Error::ShapeMismatch(_))));
        let odd_as_real = AntilinearStructure { matrix: antilinear_structure(&irrep(3)).matrix, kind: StructureKind::Real };
        assert_eq!(vector_to_polys(&RVec::zeros(8), &odd_as_real).unwrap_err(), Error::WrongParity(4));
    }

    #[test]
    fn spin9_frames_are_standard() {
        let s = spin_structure(9).unwrap();
        let f = weight_frames(&s).unwrap();
        assert_eq!(f.summands.iter().map(|x| x.0).collect::<Vec<_>>(), alloc::vec![10, 4]);
        for (spin, frame) in &f.summands {
            let std = irrep(*spin);
            for (a, x) in s.lifted_triple.iter().enumerate() {
                let xc = x.map(|t| c(t, 0.0));
                let m = frame.adjoint() * xc * frame;
                assert!(crate::linalg::max_abs_c(&(m - &std.compact()[a])) < 1e-9);
            }
            let conj = frame.map(|z| z.conj());
            for k in 0..=*spin {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let d = conj.column(k) - frame.column(spin - k) * c(sign, 0.0);
                assert!(d.norm() < 1e-9);
            }
        }
        let v = SphereSampler::new(1, 1).point(0, 16);
        let polys = f.polys(&v);
        assert!(polys.iter().all(|p| p.is_real_structured(1e-12)));
        assert!((f.vector(&polys) - v).amax() < 1e-12);
    }

    #[test]
    fn unsupported_case() {
        assert!(matches!(proportionality_suite(ResultantCase::Su(7), 10, 0), Err(Error::UnsupportedParam { .. })));
    }

    #[test]
    fn su3_suites_small() {
        let rep = proportionality_suite(ResultantCase::Su(3), 50, 1).unwrap();
        assert!(rep.ratio_rel_spread < 1e-8, "{rep:?}");
        assert!(rep.zeros_consistent, "{rep:?}");
        // R(p_1, p_2) carries the sign (−1)^m for degree 2m: su(3) is non-positive.
        let sign = sign_suite(ResultantCase::Su(3), 200, 1).unwrap();
        assert!(sign.definite && sign.max <= 0.0, "{sign:?}");
        assert_eq!(sign.violations, 200);
        let sign4 = sign_suite(ResultantCase::Su(4), 200, 1).unwrap();
        assert_eq!(sign4.violations, 0, "{sign4:?}");
    }
}
