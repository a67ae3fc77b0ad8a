use kostant_core::grassmann::{f_value, grad_fd, retract, ExactForm, GrassmannFrame, TangentDirection};
use kostant_core::invforms::{form_eval, polarize_eval, reduced_terms, FormSpec, InvariantPolynomial};
use kostant_core::liealg::{clifford_gammas, spin_lift};
use kostant_core::liealg::pfaffian;
use kostant_core::liealg::{build_algebra, orientation_involution, Family, MatrixLieAlgebra};
use kostant_core::linalg::{commutator, max_abs, max_abs_c};
use kostant_core::principal::{exponents, kostant_decompose, principal_triple, CartanType};
use kostant_core::resultants::{sylvester_resultant, Poly};
use kostant_core::sampling::{gaussian_mat, gaussian_vec, random_frame, random_rotation, stream_rng};
use kostant_core::sl2rep::{clebsch_gordan_spins, irrep, isotypic_decompose, spins, tensor_action, wedge2_action};
use kostant_core::{CMat, Complex64, RMat};
use proptest::prelude::*;

fn random_element(g: &MatrixLieAlgebra, seed: u64, stream: u64) -> RMat {
    let mut rng = stream_rng(seed, stream);
    g.from_coords(gaussian_vec(&mut rng, g.dim()).as_slice())
}

fn random_skew(seed: u64, n: usize) -> RMat {
    let mut rng = stream_rng(seed, 0);
    let a = gaussian_mat(&mut rng, n, n);
    &a - a.transpose()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_products_follow_clebsch_gordan(m in 0usize..=6, n in 0usize..=6) {
        let (m, n) = if m >= n { (m, n) } else { (n, m) };
        let action = tensor_action(irrep(m).compact(), irrep(n).compact());
        let comps = isotypic_decompose(&action).unwrap();
        prop_assert_eq!(sorted(spins(&comps)), sorted(clebsch_gordan_spins(m, n).unwrap()));
        let dim = (m + 1) * (n + 1);
        let mut proj = CMat::zeros(dim, dim);
        for c in &comps {
            proj += &c.basis * c.basis.adjoint();
        }
        prop_assert!(max_abs_c(&(proj - CMat::identity(dim, dim))) < 1e-10);
    }

    #[test]
    fn wedge_square_spins(n in 1usize..=8) {
        let comps = isotypic_decompose(&wedge2_action(irrep(n).compact())).unwrap();
        let expected: Vec<usize> = (0..).map(|k| 2 * n - 2 - 4 * k).take_while(|&s| s as isize >= 0).take((n + 1) / 2).collect();
        prop_assert_eq!(sorted(spins(&comps)), sorted(expected));
    }

    #[test]
    fn pfaffian_squares_to_determinant(seed in any::<u64>()) {
        let a = random_skew(seed, 6);
        let pf = pfaffian(&a).unwrap();
        let det = a.determinant();
        prop_assert!((pf * pf - det).abs() <= 1e-9 * det.abs().max(1.0));
    }

    #[test]
    fn resultant_is_multiplicative(seed in any::<u64>(), dp in 1usize..4, dr in 1usize..4, dq in 1usize..4) {
        let mut rng = stream_rng(seed, 0);
        let mut poly = |d: usize| {
            let re = gaussian_vec(&mut rng, d + 1);
            let im = gaussian_vec(&mut rng, d + 1);
            Poly::new((0..=d).map(|k| Complex64::new(re[k], im[k])).collect())
        };
        let (p, r, q) = (poly(dp), poly(dr), poly(dq));
        let lhs = sylvester_resultant(&p.mul(&r), &q);
        let rhs = sylvester_resultant(&p, &q) * sylvester_resultant(&r, &q);
        prop_assert!((lhs - rhs).norm() <= 1e-8 * rhs.norm().max(1e-300));
    }
}

/// Roots by simultaneous Weierstrass iteration.
fn durand_kerner(p: &Poly) -> Vec<Complex64> {
    let a0 = p.coeffs[0];
    let n = p.deg();
    let mut z: Vec<Complex64> = (0..n).map(|k| Complex64::new(0.4, 0.9).powu(k as u32)).collect();
    for _ in 0..500 {
        for i in 0..n {
            let mut denom = a0;
            for j in 0..n {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            let step = p.eval(z[i]) / denom;
            z[i] -= step;
        }
    }
    z
}

#[test]
fn resultant_matches_root_product() {
    for seed in 0..10 {
        let mut rng = stream_rng(seed, 1);
        let mut poly = |d: usize| {
            let re = gaussian_vec(&mut rng, d + 1);
            let im = gaussian_vec(&mut rng, d + 1);
            Poly::new((0..=d).map(|k| Complex64::new(re[k], im[k])).collect())
        };
        let (p, q) = (poly(4), poly(3));
        let roots = durand_kerner(&p);
        let oracle = roots.iter().fold(p.coeffs[0].powu(3), |acc, &r| acc * q.eval(r));
        let r = sylvester_resultant(&p, &q);
        assert!((r - oracle).norm() < 1e-8 * oracle.norm(), "{r} vs {oracle}");
    }
}

#[test]
fn brackets_satisfy_jacobi() {
    for (family, param) in [(Family::Su, 3), (Family::So, 5), (Family::Sp, 2)] {
        let g = build_algebra(family, param).unwrap();
        for t in 0..100 {
            let x = random_element(&g, t, 0);
            let y = random_element(&g, t, 1);
            let z = random_element(&g, t, 2);
            let j = commutator(&x, &commutator(&y, &z)) + commutator(&y, &commutator(&z, &x)) + commutator(&z, &commutator(&x, &y));
            assert!(max_abs(&j) <= 1e-12 * 100.0_f64.max(max_abs(&x) * max_abs(&y) * max_abs(&z)), "{family}({param})");
        }
    }
}

#[test]
fn spin_lift_is_a_homomorphism() {
    for d in [7, 9] {
        let cm = clifford_gammas(d).unwrap();
        for t in 0..100 {
            let a = random_skew(2 * t, d);
            let b = random_skew(2 * t + 1, d);
            let lhs = spin_lift(&cm, &commutator(&a, &b)).unwrap();
            let rhs = commutator(&spin_lift(&cm, &a).unwrap(), &spin_lift(&cm, &b).unwrap());
            assert!(max_abs(&(lhs - rhs)) <= 1e-10, "d = {d}");
        }
    }
}

#[test]
fn kostant_spins_are_twice_the_exponents() {
    let mut cases = vec![];
    cases.extend((2..=8).map(|n| (Family::Su, n)));
    cases.extend((3..=12).map(|n| (Family::So, n)));
    cases.extend((1..=4).map(|n| (Family::Sp, n)));
    for (family, param) in cases {
        let g = build_algebra(family, param).unwrap();
        if g.dim() > 150 {
            continue;
        }
        let t = principal_triple(&g).unwrap();
        let kd = kostant_decompose(&g, &t).unwrap();
        let got = sorted(kd.components.iter().map(|c| c.spin).collect());
        let want = sorted(exponents(CartanType::of(family, param)).iter().map(|e| 2 * e).collect());
        assert_eq!(got, want, "{family}({param})");
        let total: usize = kd.components.iter().map(|c| c.dim()).sum();
        assert_eq!(total, g.dim());
    }
}

fn naive_form(fs: &FormSpec, g: &MatrixLieAlgebra, args: &[RMat]) -> f64 {
    let d = args.len();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut total = 0.0;
    permute(&mut perm, 0, &mut |p| {
        let mut inv = 0;
        for i in 0..d {
            for j in i + 1..d {
                inv += usize::from(p[i] > p[j]);
            }
        }
        let sign = if inv % 2 == 0 { 1.0 } else { -1.0 };
        let mut slot = vec![args[p[0]].clone()];
        for k in 0..(d - 1) / 2 {
            slot.push(commutator(&args[p[1 + 2 * k]], &args[p[2 + 2 * k]]));
        }
        total += sign * polarize_eval(&fs.polynomial, g, &slot).unwrap();
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

#[test]
fn reduced_antisymmetrization_matches_full_sum() {
    assert_eq!(reduced_terms(3).len(), 3);
    assert_eq!(reduced_terms(5).len(), 15);
    assert_eq!(reduced_terms(7).len(), 105);
    let g = build_algebra(Family::Su, 3).unwrap();
    for (poly, weight) in [(InvariantPolynomial::cartan(), 2.0), (InvariantPolynomial::trace_power(3), 8.0)] {
        let fs = FormSpec::new(poly);
        let args: Vec<RMat> = (0..fs.form_degree).map(|i| random_element(&g, 11, i as u64)).collect();
        let reduced = form_eval(&fs, &g, &args).unwrap();
        let naive = naive_form(&fs, &g, &args);
        assert!((naive - weight * reduced).abs() <= 1e-10 * naive.abs().max(1.0), "{naive} vs {reduced}");
    }
}

#[test]
fn forms_are_alternating() {
    let g = build_algebra(Family::Su, 4).unwrap();
    let fs = FormSpec::new(InvariantPolynomial::trace_power(3));
    let mut args: Vec<RMat> = (0..5).map(|i| random_element(&g, 5, i)).collect();
    let before = form_eval(&fs, &g, &args).unwrap();
    args.swap(1, 3);
    let after = form_eval(&fs, &g, &args).unwrap();
    assert!((before + after).abs() <= 1e-10 * before.abs().max(1.0));
}

#[test]
fn euler_form_changes_sign_under_orientation_reversal() {
    for n in [4, 8] {
        let g = build_algebra(Family::So, n).unwrap();
        let sigma = orientation_involution(&g).unwrap();
        let fs = FormSpec::new(InvariantPolynomial::euler(&g).unwrap());
        for t in 0..5 {
            let args: Vec<RMat> = (0..fs.form_degree).map(|i| random_element(&g, 100 + t, i as u64)).collect();
            let flipped: Vec<RMat> = args.iter().map(|a| sigma.apply(a)).collect();
            let a = form_eval(&fs, &g, &args).unwrap();
            let b = form_eval(&fs, &g, &flipped).unwrap();
            assert!((a + b).abs() <= 1e-10 * a.abs().max(1.0), "so({n}): {a} {b}");
        }
    }
}

#[test]
fn grassmann_value_is_invariant_under_rebasing() {
    let g = build_algebra(Family::Su, 3).unwrap();
    let eval = ExactForm::new(g.clone(), FormSpec::new(InvariantPolynomial::cartan()));
    let mut rng = stream_rng(3, 0);
    let frame = random_frame(&mut rng, g.dim(), 3);
    let r = random_rotation(&mut rng, 3);
    let a = f_value(&eval, &GrassmannFrame::new(frame.clone()).unwrap()).unwrap();
    let b = f_value(&eval, &GrassmannFrame::new(&frame * r).unwrap()).unwrap();
    assert!((a - b).abs() < 1e-12 * a.abs().max(1.0));
    let reversed = f_value(&eval, &GrassmannFrame::new(frame).unwrap().reversed()).unwrap();
    assert!((a + reversed).abs() < 1e-12 * a.abs().max(1.0));
}

#[test]
fn gradient_error_is_second_order() {
    let g = build_algebra(Family::Su, 3).unwrap();
    let eval = ExactForm::new(g.clone(), FormSpec::new(InvariantPolynomial::cartan()));
    let mut rng = stream_rng(8, 0);
    let fr = GrassmannFrame::new(random_frame(&mut rng, g.dim(), 3)).unwrap();
    let mut dir = TangentDirection::zeros(&fr);
    dir.coeffs[(0, 0)] = 1.0;
    let derivative = |h: f64| {
        let p = f_value(&eval, &retract(&fr, &dir, h)).unwrap();
        let m = f_value(&eval, &retract(&fr, &dir, -h)).unwrap();
        (p - m) / (2.0 * h)
    };
    // Richardson extrapolation gives a reference far more accurate than either step.
    let (h1, h2) = (2e-2, 1e-2);
    let reference = (4.0 * derivative(h2 / 2.0) - derivative(h2)) / 3.0;
    let e1 = (derivative(h1) - reference).abs();
    let e2 = (derivative(h2) - reference).abs();
    let ratio = e1 / e2;
    assert!((3.5..4.5).contains(&ratio), "error ratio {ratio}");
    let (grad, _) = grad_fd(&eval, &fr, 1e-4).unwrap();
    assert!((grad.coeffs[(0, 0)] - reference).abs() < 1e-6 * reference.abs().max(1.0));
}
