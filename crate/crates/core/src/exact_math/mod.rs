//! Exact numeric substrate: big rationals, fraction-free linear algebra,
//! Bernoulli numbers and degree-one forms in symbolic parameters.

mod affine;
mod bernoulli;
mod matrix;
mod rational;

pub use affine::{affine_eval, AffineForm, NamedForm, ParamSpace};
pub use bernoulli::bernoulli_plus;
pub use matrix::QMatrix;
pub use rational::{binomial, factorial, format_rational, int, parse_rational, pow, rat, Rational};

/// Determinant of a square matrix.
pub fn det(m: &QMatrix) -> crate::Result<Rational> {
    m.det()
}

/// Exact solution of `a · x = b`.
pub fn solve(a: &QMatrix, b: &[Rational]) -> crate::Result<Vec<Rational>> {
    a.solve(b)
}
