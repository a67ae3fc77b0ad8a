//! Reproducible random draws.
//!
//! Every sample index gets its own ChaCha8 stream, so sample `i` depends only
//! on `(seed, i)` and can be produced in any order or in parallel.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{orthonormalize, RMat, RVec};

/// Uniform points on the unit sphere from normalized Gaussian vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereSampler {
    pub seed: u64,
    pub count: usize,
}

impl SphereSampler {
    pub fn new(seed: u64, count: usize) -> Self {
        SphereSampler { seed, count }
    }

    /// The `i`-th point of `S^{dim−1}`.
    pub fn point(&self, i: usize, dim: usize) -> RVec {
        let mut rng = stream_rng(self.seed, i as u64);
        loop {
            let v = gaussian_vec(&mut rng, dim);
            let n = v.norm();
            if n > 1e-12 {
                return v / n;
            }
        }
    }
}

/// Generator for stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn gaussian_vec<R: Rng>(rng: &mut R, dim: usize) -> RVec {
    RVec::from_iterator(dim, (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)))
}

pub fn gaussian_mat<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RMat {
    RMat::from_iterator(rows, cols, (0..rows * cols).map(|_| rng.sample::<f64, _>(StandardNormal)))
}

/// Orthonormal `n x d` frame from Gaussian columns.
pub fn random_frame<R: Rng>(rng: &mut R, n: usize, d: usize) -> RMat {
    loop {
        let cols: Vec<RVec> = (0..d).map(|_| gaussian_vec(rng, n)).collect();
        let q = orthonormalize(&cols, 1e-6);
        if q.ncols() == d {
            return q;
        }
    }
}

/// Random rotation in `SO(d)`.
pub fn random_rotation<R: Rng>(rng: &mut R, d: usize) -> RMat {
    let mut q = random_frame(rng, d, d);
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_depend_only_on_seed_and_index() {
        let s = SphereSampler::new(3, 10);
        assert_eq!(s.point(5, 4), s.point(5, 4));
        assert_ne!(s.point(5, 4), s.point(6, 4));
        assert_ne!(s.point(5, 4), SphereSampler::new(4, 10).point(5, 4));
        assert!((s.point(7, 9).norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rotation_is_special_orthogonal() {
        let mut rng = stream_rng(1, 0);
        let q = random_rotation(&mut rng, 5);
        assert!((q.determinant() - 1.0).abs() < 1e-12);
        assert!((q.transpose() * &q - RMat::identity(5, 5)).amax() < 1e-12);
    }
}
