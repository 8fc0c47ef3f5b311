//! Exact scalar arithmetic: rationals, generalized binomials, Pochhammer
//! symbols, gamma products over Z/2 and sampling-based polynomial identity
//! certification.

mod binomial;
mod certify;
mod gamma;
mod rat;

pub use binomial::{binom, binomial_gen, factorial, pochhammer};
pub use certify::certify_poly_identity;
pub use gamma::{gamma, gamma_product, gamma_ratio, pow2, GammaValue};
pub use rat::{rat, Rat};
