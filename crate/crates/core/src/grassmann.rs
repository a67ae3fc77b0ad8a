//! Functions on oriented Grassmannians induced by alternating forms.
//!
//! A point is an ordered orthonormal frame `X` (`n x d`) in the coordinates of
//! the algebra together with an orthonormal complement `N`. Tangent vectors
//! are `d x (n − d)` coefficient arrays `C`, moving frame vector `k` along
//! `Σ_l C_kl N_l`. The retraction is the polar one:
//!
//! ```text
//! X(t) = (X + t N Cᵀ)(1 + t² C Cᵀ)^{−1/2}
//! N(t) = (N − t X C)(1 + t² Cᵀ C)^{−1/2}
//! ```

use alloc::format;
use alloc::vec::Vec;

use crate::invforms::{form_eval, sphere_average, FormSpec};
use crate::liealg::MatrixLieAlgebra;
use crate::linalg::{inv_sqrt_spd, max_abs, orthogonal_complement, RMat};
use crate::sampling::{gaussian_mat, stream_rng, SphereSampler};
use crate::{Error, Result};

/// An alternating form on the algebra, evaluated on ordered frames given in
/// orthonormal coordinates.
pub trait FormEvaluator {
    fn degree(&self) -> usize;
    fn ambient_dim(&self) -> usize;
    fn eval_frame(&self, frame: &RMat) -> Result<f64>;
}

/// Exact antisymmetrized form.
#[derive(Debug, Clone)]
pub struct ExactForm {
    pub algebra: MatrixLieAlgebra,
    pub spec: FormSpec,
}

impl ExactForm {
    pub fn new(algebra: MatrixLieAlgebra, spec: FormSpec) -> Self {
        ExactForm { algebra, spec }
    }
}

impl FormEvaluator for ExactForm {
    fn degree(&self) -> usize {
        self.spec.form_degree
    }

    fn ambient_dim(&self) -> usize {
        self.algebra.dim()
    }

    fn eval_frame(&self, frame: &RMat) -> Result<f64> {
        let args: Vec<RMat> = frame.column_iter().map(|c| self.algebra.from_coords(c.as_slice())).collect();
        form_eval(&self.spec, &self.algebra, &args)
    }
}

/// Sphere-averaged form: the mean of `det(v, a_1 v, …, a_d v)` over a fixed
/// set of sample points, where `a_j` acts through `images` (one matrix per
/// algebra basis element).
#[derive(Debug, Clone)]
pub struct SphereForm {
    pub images: Vec<RMat>,
    pub sampler: SphereSampler,
}

impl SphereForm {
    pub fn new(images: Vec<RMat>, sampler: SphereSampler) -> Self {
        SphereForm { images, sampler }
    }

    pub fn matrices(&self, frame: &RMat) -> Vec<RMat> {
        frame.column_iter().map(|c| crate::linalg::combine(&self.images, c.iter().copied())).collect()
    }
}

impl FormEvaluator for SphereForm {
    fn degree(&self) -> usize {
        self.images[0].nrows() - 1
    }

    fn ambient_dim(&self) -> usize {
        self.images.len()
    }

    fn eval_frame(&self, frame: &RMat) -> Result<f64> {
        Ok(sphere_average(&self.matrices(frame), &self.sampler)?.mean)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannFrame {
    pub frame: RMat,
    pub complement: RMat,
}

impl GrassmannFrame {
    /// `frame` must have orthonormal columns.
    pub fn new(frame: RMat) -> Result<Self> {
        let d = frame.ncols();
        let defect = max_abs(&(frame.transpose() * &frame - RMat::identity(d, d)));
        if defect > 1e-10 {
            return Err(Error::ShapeMismatch(format!("frame is not orthonormal (defect {defect:e})")));
        }
        let complement = orthogonal_complement(&frame);
        Ok(GrassmannFrame { frame, complement })
    }

    pub fn ambient_dim(&self) -> usize {
        self.frame.nrows()
    }

    pub fn d(&self) -> usize {
        self.frame.ncols()
    }

    /// Largest deviation of `[frame | complement]` from orthonormality.
    pub fn orthonormality_defect(&self) -> f64 {
        let n = self.ambient_dim();
        let mut all = RMat::zeros(n, n);
        all.view_mut((0, 0), (n, self.d())).copy_from(&self.frame);
        all.view_mut((0, self.d()), (n, n - self.d())).copy_from(&self.complement);
        max_abs(&(all.transpose() * all - RMat::identity(n, n)))
    }

    /// The same point with the first two frame vectors swapped.
    pub fn reversed(&self) -> Self {
        let mut out = self.clone();
        if self.d() >= 2 {
            out.frame.swap_columns(0, 1);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TangentDirection {
    pub coeffs: RMat,
}

impl TangentDirection {
    pub fn zeros(fr: &GrassmannFrame) -> Self {
        TangentDirection { coeffs: RMat::zeros(fr.d(), fr.ambient_dim() - fr.d()) }
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    /// The tangent vector as an `n x d` displacement of the frame.
    pub fn displacement(&self, fr: &GrassmannFrame) -> RMat {
        &fr.complement * self.coeffs.transpose()
    }
}

pub fn f_value(eval: &dyn FormEvaluator, fr: &GrassmannFrame) -> Result<f64> {
    if eval.degree() != fr.d() {
        return Err(Error::DegreeMismatch { expected: eval.degree(), got: fr.d() });
    }
    if eval.ambient_dim() != fr.ambient_dim() {
        return Err(Error::ShapeMismatch(format!(
            "frame lives in dimension {}, form in {}",
            fr.ambient_dim(),
            eval.ambient_dim()
        )));
    }
    eval.eval_frame(&fr.frame)
}

pub fn retract(fr: &GrassmannFrame, dir: &TangentDirection, t: f64) -> GrassmannFrame {
    if t == 0.0 || fr.complement.ncols() == 0 {
        return fr.clone();
    }
    let c = &dir.coeffs;
    let (d, k) = c.shape();
    let y = (&fr.frame + &fr.complement * c.transpose() * t) * inv_sqrt_spd(&(RMat::identity(d, d) + c * c.transpose() * (t * t)));
    let z = (&fr.complement - &fr.frame * c * t) * inv_sqrt_spd(&(RMat::identity(k, k) + c.transpose() * c * (t * t)));
    GrassmannFrame { frame: y, complement: z }
}

/// Central-difference gradient along every coordinate direction.
pub fn grad_fd(eval: &dyn FormEvaluator, fr: &GrassmannFrame, h: f64) -> Result<(TangentDirection, f64)> {
    let mut g = TangentDirection::zeros(fr);
    let (d, k) = g.coeffs.shape();
    for i in 0..d {
        for j in 0..k {
            let mut e = TangentDirection::zeros(fr);
            e.coeffs[(i, j)] = 1.0;
            let plus = f_value(eval, &retract(fr, &e, h))?;
            let minus = f_value(eval, &retract(fr, &e, -h))?;
            g.coeffs[(i, j)] = (plus - minus) / (2.0 * h);
        }
    }
    let norm = g.norm();
    Ok((g, norm))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HessianCounts {
    pub negative: usize,
    pub zero: usize,
    pub positive: usize,
}

/// Signs of second central differences along seeded random unit tangent
/// directions, with values in `[−tol·s, tol·s]` counted as zero, where
/// `s = max(1, |f|)`. Requires the gradient norm to be within the same
/// tolerance.
pub fn hessian_probe(
    eval: &dyn FormEvaluator,
    fr: &GrassmannFrame,
    directions: usize,
    h: f64,
    tol: f64,
    seed: u64,
) -> Result<HessianCounts> {
    let f0 = f_value(eval, fr)?;
    let s = f0.abs().max(1.0);
    let (_, grad_norm) = grad_fd(eval, fr, h)?;
    if grad_norm > tol * s {
        return Err(Error::NotCritical { grad_norm, tol: tol * s });
    }
    let mut counts = HessianCounts::default();
    let (d, k) = (fr.d(), fr.ambient_dim() - fr.d());
    if d * k == 0 {
        return Ok(counts);
    }
    for i in 0..directions {
        let mut rng = stream_rng(seed, i as u64);
        let c = gaussian_mat(&mut rng, d, k);
        let dir = TangentDirection { coeffs: &c / c.norm() };
        let plus = f_value(eval, &retract(fr, &dir, h))?;
        let minus = f_value(eval, &retract(fr, &dir, -h))?;
        let second = (plus - 2.0 * f0 + minus) / (h * h);
        if second > tol * s {
            counts.positive += 1;
        } else if second < -tol * s {
            counts.negative += 1;
        } else {
            counts.zero += 1;
        }
    }
    Ok(counts)
}

/// Gradient ascent with backtracking: each step tries `t = step` along the
/// finite-difference gradient and halves it (up to 30 times) until the value
/// does not decrease; otherwise the frame is kept. Returns the visited frames
/// and values, starting with `fr0`.
pub fn ascent(
    eval: &dyn FormEvaluator,
    fr0: &GrassmannFrame,
    step: f64,
    iters: usize,
    h: f64,
) -> Result<Vec<(GrassmannFrame, f64)>> {
    let mut fr = fr0.clone();
    let mut value = f_value(eval, &fr)?;
    let mut trace = alloc::vec![(fr.clone(), value)];
    for _ in 0..iters {
        if step > 0.0 {
            let (g, norm) = grad_fd(eval, &fr, h)?;
            if norm > 0.0 {
                let mut t = step;
                for _ in 0..30 {
                    let cand = retract(&fr, &g, t);
                    let v = f_value(eval, &cand)?;
                    if v >= value {
                        fr = cand;
                        value = v;
                        break;
                    }
                    t *= 0.5;
                }
            }
        }
        trace.push((fr.clone(), value));
    }
    Ok(trace)
}

/// Seeded random frames of the evaluator's shape.
pub fn probe_frames(eval: &dyn FormEvaluator, count: usize, seed: u64) -> Vec<GrassmannFrame> {
    (0..count)
        .map(|i| {
            let mut rng = stream_rng(seed, i as u64);
            let x = crate::sampling::random_frame(&mut rng, eval.ambient_dim(), eval.degree());
            GrassmannFrame::new(x).expect("orthonormalized")
        })
        .collect()
}

/// `max |f|` over `fr` and the probe frames.
pub fn value_scale(eval: &dyn FormEvaluator, fr: &GrassmannFrame, probes: &[GrassmannFrame]) -> Result<f64> {
    let mut scale = f_value(eval, fr)?.abs();
    for p in probes {
        scale = scale.max(f_value(eval, p)?.abs());
    }
    Ok(scale)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Criticality {
    pub value: f64,
    pub grad_norm: f64,
    /// `max |f|` over the frame and the probe frames.
    pub scale: f64,
    /// Smallest gradient norm over the probe frames, when requested.
    pub control_grad: Option<f64>,
}

impl Criticality {
    pub fn is_critical(&self, tol: f64) -> bool {
        self.grad_norm <= tol * self.scale
    }
}

/// Value, gradient and scale at `fr`; with `controls`, also the gradients at
/// the probe frames.
pub fn criticality(
    eval: &dyn FormEvaluator,
    fr: &GrassmannFrame,
    h: f64,
    probes: usize,
    seed: u64,
    controls: bool,
) -> Result<Criticality> {
    let probe = probe_frames(eval, probes, seed);
    let value = f_value(eval, fr)?;
    let scale = value_scale(eval, fr, &probe)?;
    let (_, grad_norm) = grad_fd(eval, fr, h)?;
    let control_grad = if controls {
        let mut min = f64::INFINITY;
        for p in &probe {
            min = min.min(grad_fd(eval, p, h)?.1);
        }
        Some(min)
    } else {
        None
    };
    Ok(Criticality { value, grad_norm, scale, control_grad })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invforms::InvariantPolynomial;
    use crate::liealg::{build_algebra, Family};
    use crate::principal::{kostant_decompose, principal_triple};
    use crate::sampling::{random_frame, random_rotation};

    fn cartan(f: Family, p: usize) -> (ExactForm, GrassmannFrame) {
        let g = build_algebra(f, p).unwrap();
        let t = principal_triple(&g).unwrap();
        let kd = kostant_decompose(&g, &t).unwrap();
        let i = kd.principal_index(&t).unwrap();
        let fr = GrassmannFrame::new(kd.components[i].basis.clone()).unwrap();
        (ExactForm::new(g, FormSpec::new(InvariantPolynomial::cartan())), fr)
    }

    #[test]
    fn retraction_properties() {
        let mut rng = stream_rng(5, 0);
        let fr = GrassmannFrame::new(random_frame(&mut rng, 8, 3)).unwrap();
        let dir = TangentDirection { coeffs: gaussian_mat(&mut rng, 3, 5) };
        assert_eq!(retract(&fr, &dir, 0.0), fr);
        let moved = retract(&fr, &dir, 0.1);
        assert!(moved.orthonormality_defect() < 1e-12);
        // distance to the first-order point is O(t²): halving t quarters it
        let err = |t: f64| (retract(&fr, &dir, t).frame - (&fr.frame + dir.displacement(&fr) * t)).norm();
        let ratio = err(1e-2) / err(5e-3);
        assert!((ratio - 4.0).abs() < 0.1, "{ratio}");
    }

    #[test]
    fn su2_whole_algebra() {
        let (form, fr) = cartan(Family::Su, 2);
        let v = f_value(&form, &fr).unwrap();
        assert!(v.abs() > 0.1);
        assert!((f_value(&form, &fr.reversed()).unwrap() + v).abs() < 1e-12);
        assert_eq!(hessian_probe(&form, &fr, 10, 1e-4, 1e-6, 0).unwrap(), HessianCounts::default());
    }

    #[test]
    fn su3_cartan_critical_at_v1() {
        let (form, fr) = cartan(Family::Su, 3);
        let v = f_value(&form, &fr).unwrap();
        let (_, norm) = grad_fd(&form, &fr, 1e-4).unwrap();
        assert!(norm < 1e-6 * v.abs().max(1.0), "{norm}");
        let mut rng = stream_rng(9, 0);
        let rot = random_rotation(&mut rng, 3);
        let rebased = GrassmannFrame::new(&fr.frame * rot).unwrap();
        assert!((f_value(&form, &rebased).unwrap() - v).abs() < 1e-9);
        let random = GrassmannFrame::new(random_frame(&mut rng, 8, 3)).unwrap();
        let (_, rnorm) = grad_fd(&form, &random, 1e-4).unwrap();
        assert!(rnorm > 1e-2 * v.abs());
        let stay = ascent(&form, &fr, 0.1, 3, 1e-4).unwrap();
        assert!(stay.iter().all(|(_, x)| (x - v).abs() < 1e-6 * v.abs()));
        let up = ascent(&form, &random, 0.2, 10, 1e-4).unwrap();
        assert!(up.windows(2).all(|w| w[1].1 >= w[0].1));
        let flat = ascent(&form, &random, 0.0, 3, 1e-4).unwrap();
        assert!(flat.iter().all(|(f, _)| f == &random));
    }

    #[test]
    fn degree_must_match_frame() {
        let (form, _) = cartan(Family::Su, 3);
        let mut rng = stream_rng(1, 0);
        let fr = GrassmannFrame::new(random_frame(&mut rng, 8, 5)).unwrap();
        assert_eq!(f_value(&form, &fr).unwrap_err(), Error::DegreeMismatch { expected: 3, got: 5 });
    }

    #[test]
    fn not_critical_is_reported() {
        let (form, _) = cartan(Family::Su, 3);
        let mut rng = stream_rng(2, 0);
        let fr = GrassmannFrame::new(random_frame(&mut rng, 8, 3)).unwrap();
        assert!(matches!(hessian_probe(&form, &fr, 5, 1e-4, 1e-6, 0), Err(Error::NotCritical { .. })));
    }

    #[test]
    fn sphere_form_matches_direct_average() {
        let g = build_algebra(Family::So, 4).unwrap();
        let form = SphereForm::new(g.basis().to_vec(), SphereSampler::new(1, 200));
        let fr = GrassmannFrame::new(RMat::identity(6, 6).columns(0, 3).into_owned()).unwrap();
        let direct = sphere_average(&g.basis()[..3], &SphereSampler::new(1, 200)).unwrap().mean;
        assert_eq!(f_value(&form, &fr).unwrap(), direct);
    }
}
