use alloc::format;


use crate::linalg::{max_abs, RMat};
use crate::{Error, Result};

/// Pfaffian of a real skew-symmetric `2k x 2k` matrix.
///
/// Skew Gaussian elimination with column pivoting (Parlett-Reid), reading only
/// the strictly lower triangle. `Pf([[0, 1], [−1, 0]]) = 1` and the Pfaffian
/// is multiplicative over block sums, so the standard block form has
/// Pfaffian `+1`.
pub fn pfaffian(a: &RMat) -> Result<f64> {
    let n = a.nrows();
    if a.ncols() != n || n % 2 == 1 {
        return Err(Error::ShapeMismatch(format!("pfaffian needs an even square matrix, got {:?}", a.shape())));
    }
    let residual = max_abs(&(a + a.transpose()));
    if residual > 1e-12 * max_abs(a).max(1.0) {
        return Err(Error::NotSkew { residual });
    }
    let mut m = a.clone();
    let mut pf = 1.0;
    let mut k = 0;
    while k + 1 < n {
        let (mut kp, mut best) = (k + 1, m[(k + 1, k)].abs());
        for i in k + 2..n {
            if m[(i, k)].abs() > best {
                kp = i;
                best = m[(i, k)].abs();
            }
        }
        if kp != k + 1 {
            m.swap_rows(k + 1, kp);
            m.swap_columns(k + 1, kp);
            pf = -pf;
        }
        // upper entry a_{k,k+1} = −a_{k+1,k}
        let pivot = -m[(k + 1, k)];
        if pivot == 0.0 {
            return Ok(0.0);
        }
        pf *= pivot;
        if k + 2 < n {
            // tau_i = a_{k,i} / a_{k,k+1} = −a_{i,k} / pivot
            let tau: alloc::vec::Vec<f64> = (k + 2..n).map(|i| -m[(i, k)] / pivot).collect();
            let col: alloc::vec::Vec<f64> = (k + 2..n).map(|i| m[(i, k + 1)]).collect();
            for (ii, i) in (k + 2..n).enumerate() {
                for (jj, j) in (k + 2..n).enumerate() {
                    if j < i {
                        m[(i, j)] += tau[ii] * col[jj] - col[ii] * tau[jj];
                        m[(j, i)] = -m[(i, j)];
                    }
                }
            }
        }
        k += 2;
    }
    Ok(pf)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(n: usize) -> RMat {
        let mut m = RMat::zeros(2 * n, 2 * n);
        for k in 0..n {
            m[(2 * k, 2 * k + 1)] = 1.0;
            m[(2 * k + 1, 2 * k)] = -1.0;
        }
        m
    }

    #[test]
    fn standard_forms() {
        assert_eq!(pfaffian(&block(1)).unwrap(), 1.0);
        assert_eq!(pfaffian(&block(2)).unwrap(), 1.0);
        assert_eq!(pfaffian(&block(4)).unwrap(), 1.0);
    }

    #[test]
    fn four_by_four_closed_form() {
        // Pf = a01 a23 − a02 a13 + a03 a12
        let v = [0.3, -1.2, 0.7, 2.0, -0.4, 1.1];
        let mut m = RMat::zeros(4, 4);
        let idx = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for (&(i, j), &x) in idx.iter().zip(v.iter()) {
            m[(i, j)] = x;
            m[(j, i)] = -x;
        }
        let expected = v[0] * v[5] - v[1] * v[4] + v[2] * v[3];
        assert!((pfaffian(&m).unwrap() - expected).abs() < 1e-14);
    }

    #[test]
    fn swap_flips_sign() {
        let mut m = block(2);
        m.swap_rows(0, 1);
        m.swap_columns(0, 1);
        assert_eq!(pfaffian(&m).unwrap(), -1.0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(pfaffian(&RMat::identity(2, 2)), Err(Error::NotSkew { .. })));
        assert!(matches!(pfaffian(&RMat::zeros(3, 3)), Err(Error::ShapeMismatch(_))));
    }
}
