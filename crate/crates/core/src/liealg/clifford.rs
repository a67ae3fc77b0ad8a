//! Real Clifford modules for `spin(7)` on `ℝ^8` and `spin(9)` on `ℝ^16`.
//!
//! Generators are Kronecker products of the real 2x2 blocks
//!
//! ```text
//! I = [[1, 0], [0, 1]]   X = [[0, 1], [1, 0]]   Z = [[1, 0], [0, −1]]   E = [[0, 1], [−1, 0]]
//! ```
//!
//! * `d = 7` (skew, `γ² = −1`): `IIE, IEX, XEZ, ZEZ, EIZ, EXX, EZX`.
//! * `d = 9` (symmetric, `γ² = +1`): `IIIX, IIIZ, IIEE, IEXE, XEZE, ZEZE,
//!   EIZE, EXXE, EZXE`.
//!
//! Nine anticommuting real 16x16 matrices cannot all square to `−1` (the
//! negative-definite Clifford algebra in nine generators is `M16(ℂ)`), so the
//! `d = 9` module uses the positive-definite signature. With `ε = γ_i²` the
//! lift `a ↦ (ε/2) Σ_{i<j} a_ij γ_i γ_j` is a Lie algebra homomorphism
//! `so(d) → so(spin_dim)` in both cases.

use alloc::format;
use alloc::vec::Vec;

use crate::linalg::{max_abs, RMat};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CliffordModule {
    pub d: usize,
    pub spin_dim: usize,
    pub gammas: Vec<RMat>,
    /// `+1` or `−1`: `γ_i γ_j + γ_j γ_i = 2 · square · δ_ij`.
    pub square: f64,
}

fn block(c: u8) -> RMat {
    match c {
        b'I' => RMat::identity(2, 2),
        b'X' => RMat::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]),
        b'Z' => RMat::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]),
        b'E' => RMat::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]),
        _ => unreachable!("unknown block"),
    }
}

fn word(w: &str) -> RMat {
    w.bytes().fold(RMat::identity(1, 1), |acc, c| acc.kronecker(&block(c)))
}

const SPIN7: [&str; 7] = ["IIE", "IEX", "XEZ", "ZEZ", "EIZ", "EXX", "EZX"];
const SPIN9: [&str; 9] = ["IIIX", "IIIZ", "IIEE", "IEXE", "XEZE", "ZEZE", "EIZE", "EXXE", "EZXE"];

pub fn clifford_gammas(d: usize) -> Result<CliffordModule> {
    let (words, square): (&[&str], f64) = match d {
        7 => (&SPIN7, -1.0),
        9 => (&SPIN9, 1.0),
        _ => return Err(Error::UnsupportedDim(d)),
    };
    let gammas: Vec<RMat> = words.iter().map(|w| word(w)).collect();
    let spin_dim = gammas[0].nrows();
    Ok(CliffordModule { d, spin_dim, gammas, square })
}

/// Lifts a skew `d x d` matrix to the spin module.
pub fn spin_lift(cm: &CliffordModule, a: &RMat) -> Result<RMat> {
    if a.shape() != (cm.d, cm.d) {
        return Err(Error::ShapeMismatch(format!("spin_lift needs a {0} x {0} matrix", cm.d)));
    }
    let residual = max_abs(&(a + a.transpose()));
    if residual > 1e-12 {
        return Err(Error::NotSkew { residual });
    }
    let mut out = RMat::zeros(cm.spin_dim, cm.spin_dim);
    for i in 0..cm.d {
        for j in i + 1..cm.d {
            if a[(i, j)] != 0.0 {
                out += &cm.gammas[i] * &cm.gammas[j] * (0.5 * cm.square * a[(i, j)]);
            }
        }
    }
    Ok(out)
}
