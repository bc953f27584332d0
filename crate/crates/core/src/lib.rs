//! Exact-arithmetic machinery for symmetrized shuffling operators on the
//! group algebra of the symmetric group, and for the companion rank-one
//! operators attached to hyperplane orbits of finite reflection groups.
//!
//! Everything spectral here is exact: permutation statistics and group
//! algebra elements with integer coefficients, dense rational matrices,
//! characteristic polynomials over the integers, and the seminormal
//! irreducible representations used to block-diagonalize the operators.

pub mod blocks;
pub mod cache;
pub mod chars;
pub mod error;
pub mod faces;
pub mod groupalg;
pub mod induced;
pub mod injective;
pub mod matrix;
pub mod operators;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod rankone;
pub mod rootsys;
pub mod seminormal;
pub mod setpart;
pub mod tableaux;
pub mod tables;
pub mod words;

pub use error::Error;

/// Exact rational scalar used throughout the linear algebra.
pub type Q = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Z = num_bigint::BigInt;

/// Convenience: a rational from an `i64`.
pub fn q(n: i64) -> Q {
    Q::from_integer(Z::from(n))
}

/// Convenience: a rational `n/d`.
pub fn qq(n: i64, d: i64) -> Q {
    Q::new(Z::from(n), Z::from(d))
}
