//! Exact rational linear algebra kernel.
//!
//! Everything downstream (Lie brackets, representation checks, curvature
//! tables, the classifier) runs on the types in this module: arbitrary
//! precision rationals, dense matrices, canonical subspaces, and monic
//! polynomials with factorization over the rationals. No floating point
//! is used anywhere here; the dichotomies the rest of the crate decides
//! (scalar vs. rotation part, zero vs. nonzero eigenvalue) are knife-edge
//! and must not be subject to rounding.

mod matrix;
mod poly;
mod rational;
mod subspace;

pub use matrix::{Matrix, RrefResult};
pub use poly::{FactorError, RationalPolynomial};
pub use rational::{parse_rational, rat, rat_int, rational_to_string, Rational};
pub use subspace::Subspace;

/// Vector helpers shared by the matrix and subspace code.
pub(crate) mod vecops {
    use super::Rational;
    use num::Zero;

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Rational::is_zero)
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(v: &[Rational], c: &Rational) -> Vec<Rational> {
        v.iter().map(|x| x * c).collect()
    }

    pub fn zero(n: usize) -> Vec<Rational> {
        vec![Rational::zero(); n]
    }
}
