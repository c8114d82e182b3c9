//! Exact arithmetic: rationals, rational polynomials and the cyclotomic
//! fields Q(zeta_n), plus a multiprecision complex embedding.

mod cyclotomic;
mod embed;
mod poly;
mod rational;

pub use cyclotomic::{as_rational, unit_factor, CyclotomicField, CyclotomicNumber};
pub use embed::{embed_complex, ComplexApprox, DEFAULT_DIGITS, MIN_DIGITS};
pub use poly::{cyclotomic_polynomial, euler_phi, RationalPolynomial};
pub use rational::{rat, Rational};
