use num_traits::One;

use super::rational::{binomial, Rational};

/// Bernoulli numbers `B_0..=B_{k_max}` with `B_1 = +1/2`, i.e. the
/// coefficients of `x / (1 - e^{-x}) = Σ B_k x^k / k!`.
///
/// Uses `B_m = 1 - Σ_{k<m} C(m, k) B_k / (m - k + 1)`.
pub fn bernoulli_plus(k_max: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(k_max + 1);
    out.push(Rational::one());
    for m in 1..=k_max {
        let mut acc = Rational::one();
        for (k, b) in out.iter().enumerate() {
            acc -= Rational::from_integer(binomial(m, k)) * b
                / Rational::from_integer((m - k + 1).into());
        }
        out.push(acc);
    }
    out
}
