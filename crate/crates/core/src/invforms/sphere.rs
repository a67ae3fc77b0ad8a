use alloc::format;
use alloc::vec::Vec;

use crate::linalg::{pairwise_sum, RMat, RVec};
use crate::sampling::SphereSampler;
use crate::{Error, Result};

fn check_shapes(mats: &[RMat], n: usize) -> Result<()> {
    if mats.len() + 1 != n {
        return Err(Error::ShapeMismatch(format!("{} matrices on R^{n}, need {}", mats.len(), n.saturating_sub(1))));
    }
    if let Some(m) = mats.iter().find(|m| m.shape() != (n, n)) {
        return Err(Error::ShapeMismatch(format!("matrix of shape {:?} on R^{n}", m.shape())));
    }
    Ok(())
}

/// `det(v, a_1 v, …, a_d v)` with `d + 1 = N`.
pub fn sphere_integrand(mats: &[RMat], v: &RVec) -> Result<f64> {
    let n = v.len();
    check_shapes(mats, n)?;
    Ok(integrand_unchecked(mats, v))
}

fn integrand_unchecked(mats: &[RMat], v: &RVec) -> f64 {
    let n = v.len();
    let mut m = RMat::zeros(n, n);
    m.set_column(0, v);
    for (k, a) in mats.iter().enumerate() {
        m.set_column(k + 1, &(a * v));
    }
    m.determinant()
}

/// `sphere_integrand / ‖v‖²`, homogeneous of degree `N − 2` in `v`.
pub fn q_poly_eval(mats: &[RMat], v: &RVec) -> Result<f64> {
    let r2 = v.norm_squared();
    if r2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(sphere_integrand(mats, v)? / r2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereStats {
    pub mean: f64,
    /// Sample standard deviation over `√count`.
    pub stderr: f64,
    pub min_observed: f64,
    pub max_observed: f64,
    pub count: usize,
}

impl SphereStats {
    /// Largest observed `|value|`.
    pub fn scale(&self) -> f64 {
        self.min_observed.abs().max(self.max_observed.abs())
    }
}

/// Integrand values at the sampler's points, in sample order.
pub fn sphere_values(mats: &[RMat], sampler: &SphereSampler) -> Result<Vec<f64>> {
    let n = mats.first().map_or(1, |m| m.nrows());
    check_shapes(mats, n)?;
    Ok((0..sampler.count).map(|i| integrand_unchecked(mats, &sampler.point(i, n))).collect())
}

/// Statistics of a sample, summed in a fixed pairwise order.
pub fn summarize(values: &[f64]) -> SphereStats {
    let count = values.len();
    if count == 0 {
        return SphereStats { mean: 0.0, stderr: 0.0, min_observed: 0.0, max_observed: 0.0, count };
    }
    let mean = pairwise_sum(values) / count as f64;
    let sq: Vec<f64> = values.iter().map(|x| (x - mean) * (x - mean)).collect();
    let var = if count > 1 { pairwise_sum(&sq) / (count - 1) as f64 } else { 0.0 };
    let stderr = libm::sqrt(var / count as f64);
    let min_observed = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max_observed = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    SphereStats { mean, stderr, min_observed, max_observed, count }
}

/// Monte Carlo average of [`sphere_integrand`] over the unit sphere.
pub fn sphere_average(mats: &[RMat], sampler: &SphereSampler) -> Result<SphereStats> {
    Ok(summarize(&sphere_values(mats, sampler)?))
}

/// Number of values whose sign opposes `reference` by more than `tol`.
pub fn sign_violations(values: &[f64], reference: f64, tol: f64) -> usize {
    values.iter().filter(|&&x| x * reference.signum() < -tol).count()
}
