//! Principal three-dimensional subalgebras of the compact classical Lie
//! algebras and the invariant forms that live on them.
//!
//! The crate is `no_std` (it needs `alloc`) and purely numerical. It covers:
//!
//! * [`sl2rep`]: irreducible `sl(2)` representations, their real and
//!   quaternionic structures, and Casimir-based isotypic decomposition.
//! * [`liealg`]: `su(n)`, `so(N)` and `sp(n)` as real matrix algebras, the
//!   Pfaffian, and Clifford modules for `spin(7)` and `spin(9)`.
//! * [`principal`]: the principal triple, the Kostant decomposition of the
//!   adjoint representation, and the spin-representation structures.
//! * [`invforms`]: invariant polynomials, the bi-invariant forms built from
//!   them, and the sphere pull-back integrand with its Monte Carlo average.
//! * [`grassmann`]: form-induced functions on oriented Grassmannians,
//!   finite-difference gradients, Hessian probes and gradient ascent.
//! * [`resultants`]: Sylvester resultants, the quaternionic transform, the
//!   vector/polynomial identification and the resultant verification suites.
//! * [`cases`]: the fixed group/component pairs the verification suites run on.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cases;
mod error;
pub mod grassmann;
pub mod invforms;
pub mod liealg;
pub mod linalg;
pub mod principal;
pub mod resultants;
pub mod sampling;
pub mod sl2rep;

pub use error::{Error, Result};
pub use linalg::{CMat, CVec, Complex64, RMat, RVec};
