//! Invariant polynomials, the bi-invariant forms they induce, and the sphere
//! pull-back integrand.
//!
//! A polynomial `P` of degree `m + 1` gives the alternating `(2m + 1)`-form
//!
//! ```text
//! α(a_1, …, a_{2m+1}) = Σ ± P(a_first, [a_i1, a_j1], …, [a_im, a_jm])
//! ```
//!
//! summed over a lone first argument and the perfect matchings of the rest,
//! with `P` polarized. For a group acting transitively on `S^{N−1}`, the
//! form obtained by averaging the pulled-back volume form is evaluated on
//! `a_1, …, a_{N−1}` by the sphere average of `det(v, a_1 v, …, a_{N−1} v)`.

mod polynomial;
mod sphere;

pub use polynomial::{
    form_eval, invariance_check, polarize_eval, reduced_terms, FormSpec, InvariantPolynomial, Primitive,
    ReducedTerm, Term, MAX_EXACT_DEGREE,
};
pub use sphere::{
    q_poly_eval, sign_violations, sphere_average, sphere_integrand, sphere_values, summarize, SphereStats,
};
