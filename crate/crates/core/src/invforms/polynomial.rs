use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::liealg::{pfaffian, Family, MatrixLieAlgebra};
use crate::linalg::{CMat, RMat, I};
use crate::{Error, Result};

/// Building blocks of invariant polynomials, evaluated on the defining
/// representation `D(x)` of an algebra element `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitive {
    /// `tr((i D)^j)`, real because `i D` is Hermitian.
    TracePower(usize),
    /// `e_j` of the eigenvalues of `i D`, the degree-`j` coefficient of
    /// `det(λ − i D)` up to sign.
    CharCoeff(usize),
    /// Pfaffian of the real skew matrix of `so(2k)`, degree `k`.
    Pfaffian { half_dim: usize },
    /// `Σ_k Re((i D)_kk)^j`; not invariant, only useful as a negative control.
    DiagonalPower(usize),
}

impl Primitive {
    pub fn degree(&self) -> usize {
        match *self {
            Primitive::TracePower(j) | Primitive::CharCoeff(j) | Primitive::DiagonalPower(j) => j,
            Primitive::Pfaffian { half_dim } => half_dim,
        }
    }

    fn max_power(&self) -> usize {
        match *self {
            Primitive::TracePower(j) | Primitive::CharCoeff(j) => j,
            _ => 0,
        }
    }
}

/// `coeff · Π factors`.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coeff: f64,
    pub factors: Vec<Primitive>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantPolynomial {
    degree: usize,
    terms: Vec<Term>,
    label: String,
}

impl InvariantPolynomial {
    /// Checks that every term is homogeneous of the same degree.
    pub fn new(label: impl Into<String>, terms: Vec<Term>) -> Result<Self> {
        let degree = terms
            .first()
            .map(|t| t.factors.iter().map(Primitive::degree).sum())
            .ok_or_else(|| Error::DegreeMismatch { expected: 1, got: 0 })?;
        for t in &terms {
            let d: usize = t.factors.iter().map(Primitive::degree).sum();
            if d != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: d });
            }
        }
        Ok(InvariantPolynomial { degree, terms, label: label.into() })
    }

    fn single(label: String, p: Primitive) -> Self {
        InvariantPolynomial { degree: p.degree(), terms: vec![Term { coeff: 1.0, factors: vec![p] }], label }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `tr((iD)^2)`, whose form is the Cartan 3-form.
    pub fn cartan() -> Self {
        Self::single("cartan".into(), Primitive::TracePower(2))
    }

    pub fn trace_power(j: usize) -> Self {
        Self::single(format!("tr{j}"), Primitive::TracePower(j))
    }

    /// Chern-type class `c_j`.
    pub fn char_coeff(j: usize) -> Self {
        Self::single(format!("c{j}"), Primitive::CharCoeff(j))
    }

    /// Euler class (Pfaffian) on `so(2k)`.
    pub fn euler(g: &MatrixLieAlgebra) -> Result<Self> {
        if g.family() != Family::So {
            return Err(Error::WrongFamily(g.family()));
        }
        if g.ambient_dim() % 2 == 1 {
            return Err(Error::NotApplicable(format!("so({}) has no Euler class", g.ambient_dim())));
        }
        Ok(Self::single("euler".into(), Primitive::Pfaffian { half_dim: g.ambient_dim() / 2 }))
    }

    /// Pontryagin class `p_j = (−1)^j c_{2j}`.
    pub fn pontryagin(j: usize) -> Self {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        InvariantPolynomial {
            degree: 2 * j,
            terms: vec![Term { coeff: sign, factors: vec![Primitive::CharCoeff(2 * j)] }],
            label: format!("p{j}"),
        }
    }

    /// `p1² − 4 p2`.
    pub fn spin7_class() -> Self {
        let p1 = Primitive::CharCoeff(2);
        let p2 = Primitive::CharCoeff(4);
        InvariantPolynomial {
            degree: 4,
            terms: vec![Term { coeff: 1.0, factors: vec![p1, p1] }, Term { coeff: -4.0, factors: vec![p2] }],
            label: "p1^2-4p2".into(),
        }
    }

    /// `p1⁴ − 8 p1² p2 + 16 p2² − 64 p4`.
    pub fn spin9_class() -> Self {
        let (c2, c4, c8) = (Primitive::CharCoeff(2), Primitive::CharCoeff(4), Primitive::CharCoeff(8));
        // p1 = −c2, p2 = c4, p4 = c8
        InvariantPolynomial {
            degree: 8,
            terms: vec![
                Term { coeff: 1.0, factors: vec![c2, c2, c2, c2] },
                Term { coeff: -8.0, factors: vec![c2, c2, c4] },
                Term { coeff: 16.0, factors: vec![c4, c4] },
                Term { coeff: -64.0, factors: vec![c8] },
            ],
            label: "p1^4-8p1^2p2+16p2^2-64p4".into(),
        }
    }

    /// Adds a scaled copy of another polynomial of the same degree.
    pub fn plus(mut self, coeff: f64, other: &InvariantPolynomial) -> Result<Self> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: other.degree });
        }
        for t in &other.terms {
            self.terms.push(Term { coeff: coeff * t.coeff, factors: t.factors.clone() });
        }
        self.label = format!("{}+{coeff}*{}", self.label, other.label);
        Ok(self)
    }

    fn max_power(&self) -> usize {
        self.terms.iter().flat_map(|t| t.factors.iter()).map(Primitive::max_power).max().unwrap_or(0)
    }

    /// `P(x)` for `x` in `g`.
    pub fn eval(&self, g: &MatrixLieAlgebra, x: &RMat) -> Result<f64> {
        let ctx = EvalContext::new(g, x, self.max_power());
        let mut total = 0.0;
        for t in &self.terms {
            let mut prod = t.coeff;
            for f in &t.factors {
                prod *= ctx.primitive(f)?;
            }
            total += prod;
        }
        Ok(total)
    }
}

struct EvalContext<'a> {
    x: &'a RMat,
    m: CMat,
    /// `power_sums[k] = tr((iD)^k)`.
    power_sums: Vec<f64>,
    elementary: Vec<f64>,
}

impl<'a> EvalContext<'a> {
    fn new(g: &MatrixLieAlgebra, x: &'a RMat, max_power: usize) -> Self {
        let m = g.defining(x).map(|z| z * I);
        let mut power_sums = vec![m.nrows() as f64];
        let mut acc = m.clone();
        for k in 1..=max_power {
            if k > 1 {
                acc = &acc * &m;
            }
            power_sums.push(acc.trace().re);
        }
        // Newton: k e_k = Σ_{i=1}^k (−1)^{i−1} e_{k−i} p_i
        let mut elementary = vec![1.0];
        for k in 1..=max_power {
            let mut s = 0.0;
            for i in 1..=k {
                let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
                s += sign * elementary[k - i] * power_sums[i];
            }
            elementary.push(s / k as f64);
        }
        EvalContext { x, m, power_sums, elementary }
    }

    fn primitive(&self, p: &Primitive) -> Result<f64> {
        match *p {
            Primitive::TracePower(j) => Ok(self.power_sums[j]),
            Primitive::CharCoeff(j) => Ok(self.elementary[j]),
            Primitive::Pfaffian { half_dim } => {
                if self.x.nrows() != 2 * half_dim {
                    return Err(Error::ShapeMismatch(format!(
                        "Pfaffian of degree {half_dim} on a {} x {} matrix",
                        self.x.nrows(),
                        self.x.ncols()
                    )));
                }
                pfaffian(self.x)
            }
            Primitive::DiagonalPower(j) => {
                Ok((0..self.m.nrows()).map(|k| libm::pow(self.m[(k, k)].re, j as f64)).sum())
            }
        }
    }
}

/// Symmetric multilinear form of `P` by the polarization identity
/// `(1/k!) Σ_{S ⊆ {1..k}} (−1)^{k−|S|} P(Σ_{i∈S} a_i)`.
pub fn polarize_eval(p: &InvariantPolynomial, g: &MatrixLieAlgebra, args: &[RMat]) -> Result<f64> {
    let k = p.degree();
    if args.len() != k {
        return Err(Error::ArityMismatch { expected: k, got: args.len() });
    }
    let n = g.ambient_dim();
    let mut total = 0.0;
    let mut sum = RMat::zeros(n, n);
    for mask in 1u32..(1u32 << k) {
        sum.fill(0.0);
        for (i, a) in args.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum += a;
            }
        }
        let sign = if (k - mask.count_ones() as usize) % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * p.eval(g, &sum)?;
    }
    let fact: f64 = (1..=k).map(|i| i as f64).product();
    Ok(total / fact)
}

/// Largest form degree accepted by [`form_eval`].
pub const MAX_EXACT_DEGREE: usize = 11;

/// The alternating `(2k − 1)`-form of an invariant polynomial of degree `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FormSpec {
    pub polynomial: InvariantPolynomial,
    pub form_degree: usize,
}

impl FormSpec {
    pub fn new(polynomial: InvariantPolynomial) -> Self {
        let form_degree = 2 * polynomial.degree() - 1;
        FormSpec { polynomial, form_degree }
    }

    pub fn label(&self) -> &str {
        self.polynomial.label()
    }
}

/// One term of the reduced antisymmetrization: the lone first argument, the
/// bracket pairs, and the permutation sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedTerm {
    pub first: usize,
    pub pairs: Vec<(usize, usize)>,
    pub sign: i8,
}

fn permutation_sign(p: &[usize]) -> i8 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn matchings(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    if rest.is_empty() {
        out.push(acc.clone());
        return;
    }
    let a = rest[0];
    for j in 1..rest.len() {
        let b = rest[j];
        let remaining: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != b).collect();
        acc.push((a, b));
        matchings(&remaining, acc, out);
        acc.pop();
    }
}

/// The `d · (d − 1)! / (2^m m!)` reduced terms for `d = 2m + 1`.
pub fn reduced_terms(d: usize) -> Vec<ReducedTerm> {
    let mut out = Vec::new();
    for first in 0..d {
        let rest: Vec<usize> = (0..d).filter(|&i| i != first).collect();
        let mut ms = Vec::new();
        matchings(&rest, &mut Vec::new(), &mut ms);
        for pairs in ms {
            let mut perm = vec![first];
            for &(a, b) in &pairs {
                perm.push(a);
                perm.push(b);
            }
            out.push(ReducedTerm { first, sign: permutation_sign(&perm), pairs });
        }
    }
    out
}

/// `Σ ± P(a_first, [a_i1, a_j1], …, [a_im, a_jm])` over the reduced terms,
/// coefficient 1 per term. Alternating in all arguments.
pub fn form_eval(fs: &FormSpec, g: &MatrixLieAlgebra, args: &[RMat]) -> Result<f64> {
    let d = fs.form_degree;
    if d > MAX_EXACT_DEGREE {
        return Err(Error::DegreeTooLarge(d));
    }
    if args.len() != d {
        return Err(Error::ArityMismatch { expected: d, got: args.len() });
    }
    let mut brackets: Vec<Vec<Option<RMat>>> = vec![vec![None; d]; d];
    for i in 0..d {
        for j in i + 1..d {
            brackets[i][j] = Some(&args[i] * &args[j] - &args[j] * &args[i]);
        }
    }
    let mut total = 0.0;
    let mut slot: Vec<RMat> = Vec::with_capacity(fs.polynomial.degree());
    for t in reduced_terms(d) {
        slot.clear();
        slot.push(args[t.first].clone());
        for &(a, b) in &t.pairs {
            slot.push(brackets[a][b].clone().expect("a < b in matchings"));
        }
        total += t.sign as f64 * polarize_eval(&fs.polynomial, g, &slot)?;
    }
    Ok(total)
}

/// Infinitesimal invariance defect `Σ_i α(a_1, …, [x, a_i], …, a_d)`,
/// maximized over random unit `x` and unit arguments.
pub fn invariance_check(fs: &FormSpec, g: &MatrixLieAlgebra, trials: usize, seed: u64) -> Result<f64> {
    let d = fs.form_degree;
    let mut worst = 0.0_f64;
    for trial in 0..trials {
        let mut rng = crate::sampling::stream_rng(seed, trial as u64);
        let mut unit = || {
            let c = crate::sampling::gaussian_vec(&mut rng, g.dim()).normalize();
            g.from_coords(c.as_slice())
        };
        let x = unit();
        let args: Vec<RMat> = (0..d).map(|_| unit()).collect();
        let mut total = 0.0;
        for i in 0..d {
            let mut moved = args.clone();
            moved[i] = &x * &args[i] - &args[i] * &x;
            total += form_eval(fs, g, &moved)?;
        }
        worst = worst.max(total.abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_algebra;

    fn random_element(g: &MatrixLieAlgebra, seed: u64) -> RMat {
        let mut rng = crate::sampling::stream_rng(seed, 0);
        let c = crate::sampling::gaussian_vec(&mut rng, g.dim());
        g.from_coords(c.as_slice())
    }

    #[test]
    fn reduced_term_counts() {
        assert_eq!(reduced_terms(1).len(), 1);
        assert_eq!(reduced_terms(3).len(), 3);
        assert_eq!(reduced_terms(5).len(), 15);
        assert_eq!(reduced_terms(7).len(), 105);
        assert_eq!(reduced_terms(11).len(), 10395);
    }

    #[test]
    fn char_coeffs_match_eigenvalues() {
        // so(4) element with rotation angles 1 and 2: iD has eigenvalues ±1, ±2.
        let g = build_algebra(Family::So, 4).unwrap();
        let mut x = RMat::zeros(4, 4);
        x[(0, 1)] = 1.0;
        x[(1, 0)] = -1.0;
        x[(2, 3)] = 2.0;
        x[(3, 2)] = -2.0;
        let c = |j| InvariantPolynomial::char_coeff(j).eval(&g, &x).unwrap();
        assert!(c(1).abs() < 1e-12);
        assert!((c(2) - (-1.0 - 4.0)).abs() < 1e-12);
        assert!((c(4) - 4.0).abs() < 1e-12);
        assert!((InvariantPolynomial::trace_power(2).eval(&g, &x).unwrap() - 10.0).abs() < 1e-12);
        assert!((InvariantPolynomial::euler(&g).unwrap().eval(&g, &x).unwrap() - 2.0).abs() < 1e-12);
        // p1 = 5 = 1 + 4, p2 = 4 = 1·4: p1² − 4p2 = 9
        assert!((InvariantPolynomial::spin7_class().eval(&g, &x).unwrap() - 9.0).abs() < 1e-12);
    }

    #[test]
    fn pfaffian_squares_to_top_char_coeff() {
        let g = build_algebra(Family::So, 6).unwrap();
        let x = random_element(&g, 4);
        let pf = InvariantPolynomial::euler(&g).unwrap().eval(&g, &x).unwrap();
        let c6 = InvariantPolynomial::char_coeff(6).eval(&g, &x).unwrap();
        assert!((pf * pf + c6).abs() < 1e-9 * c6.abs().max(1.0));
    }

    #[test]
    fn polarization_restricts_to_diagonal() {
        let g = build_algebra(Family::Su, 3).unwrap();
        let x = random_element(&g, 1);
        for p in [InvariantPolynomial::trace_power(2), InvariantPolynomial::char_coeff(3)] {
            let args = vec![x.clone(); p.degree()];
            let lhs = polarize_eval(&p, &g, &args).unwrap();
            let rhs = p.eval(&g, &x).unwrap();
            assert!((lhs - rhs).abs() < 1e-10 * rhs.abs().max(1.0));
        }
        let so4 = build_algebra(Family::So, 4).unwrap();
        let mut j = RMat::zeros(4, 4);
        j[(0, 1)] = 1.0;
        j[(1, 0)] = -1.0;
        j[(2, 3)] = 1.0;
        j[(3, 2)] = -1.0;
        let e = InvariantPolynomial::euler(&so4).unwrap();
        assert!((polarize_eval(&e, &so4, &[j.clone(), j]).unwrap() - 1.0).abs() < 1e-14);
        assert!(matches!(
            polarize_eval(&e, &so4, &[]),
            Err(Error::ArityMismatch { expected: 2, got: 0 })
        ));
    }

    #[test]
    fn inhomogeneous_terms_are_rejected() {
        let t = |f: Vec<Primitive>| Term { coeff: 1.0, factors: f };
        let bad = InvariantPolynomial::new("bad", vec![t(vec![Primitive::TracePower(2)]), t(vec![Primitive::TracePower(3)])]);
        assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn cartan_form_on_su2() {
        // With P = tr((iD)²) the reduced sum is 3·P(a1, [a2, a3]) on a basis,
        // and P(x, y) = −tr(D_x D_y) = ⟨x, y⟩/2 on the realified su(2).
        let g = build_algebra(Family::Su, 2).unwrap();
        let fs = FormSpec::new(InvariantPolynomial::cartan());
        let b = g.basis();
        let v = form_eval(&fs, &g, b).unwrap();
        let br = g.bracket(&b[1], &b[2]).unwrap();
        let direct = 3.0 * 0.5 * g.inner(&b[0], &br);
        assert!((v - direct).abs() < 1e-12);
        assert!(v.abs() > 0.1);
        assert_eq!(form_eval(&fs, &g, &[b[0].clone(), b[0].clone(), b[1].clone()]).unwrap(), 0.0);
        assert!(matches!(form_eval(&fs, &g, &b[..2]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn degree_cap() {
        let g = build_algebra(Family::Su, 7).unwrap();
        let fs = FormSpec::new(InvariantPolynomial::char_coeff(7));
        assert_eq!(fs.form_degree, 13);
        assert_eq!(form_eval(&fs, &g, &g.basis()[..13]).unwrap_err(), Error::DegreeTooLarge(13));
    }

    #[test]
    fn invariance_and_negative_control() {
        let g2 = build_algebra(Family::Su, 2).unwrap();
        assert!(invariance_check(&FormSpec::new(InvariantPolynomial::cartan()), &g2, 5, 0).unwrap() < 1e-11);
        let g = build_algebra(Family::Su, 3).unwrap();
        let fs = FormSpec::new(InvariantPolynomial::trace_power(3));
        assert!(invariance_check(&fs, &g, 5, 0).unwrap() < 1e-9);
        let corrupted = InvariantPolynomial::trace_power(3)
            .plus(1.0, &InvariantPolynomial::single("diag3".into(), Primitive::DiagonalPower(3)))
            .unwrap();
        assert!(invariance_check(&FormSpec::new(corrupted), &g, 5, 0).unwrap() > 1e-3);
    }

    #[test]
    fn polarization_is_multilinear() {
        let g = build_algebra(Family::So, 5).unwrap();
        let p = InvariantPolynomial::trace_power(4);
        let a: Vec<RMat> = (0..4).map(|s| random_element(&g, 10 + s)).collect();
        let base = polarize_eval(&p, &g, &a).unwrap();
        let mut scaled = a.clone();
        scaled[2] = &scaled[2] * 3.0;
        assert!((polarize_eval(&p, &g, &scaled).unwrap() - 3.0 * base).abs() < 1e-9 * base.abs().max(1.0));
    }
}
