use num_traits::Zero;

use crate::exact_math::{bernoulli_plus, factorial, Rational};

/// Coefficients `B_k / k!` of the single-variable Todd series
/// `y / (1 - e^{-y})`, truncated at a fixed degree.
#[derive(Debug, Clone)]
pub struct ToddSeries {
    coeffs: Vec<Rational>,
}

impl ToddSeries {
    pub fn new(max_degree: usize) -> Self {
        let coeffs = bernoulli_plus(max_degree)
            .into_iter()
            .enumerate()
            .map(|(k, b)| b / Rational::from_integer(factorial(k)))
            .collect();
        ToddSeries { coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients of `Π_i S(w_i x)` in degrees `0..=max_degree`: entry `ℓ`
    /// is the Todd polynomial `Td_ℓ` evaluated on the weight multiset.
    pub fn product(&self, weights: &[Rational]) -> Vec<Rational> {
        let d = self.max_degree();
        let mut acc = vec![Rational::zero(); d + 1];
        acc[0] = self.coeffs[0].clone();
        let mut factor = vec![Rational::zero(); d + 1];
        for w in weights {
            let mut power = Rational::from_integer(1.into());
            for (k, f) in factor.iter_mut().enumerate() {
                *f = &self.coeffs[k] * &power;
                power *= w;
            }
            for deg in (0..=d).rev() {
                let mut s = Rational::zero();
                for k in 0..=deg {
                    if !factor[k].is_zero() && !acc[deg - k].is_zero() {
                        s += &factor[k] * &acc[deg - k];
                    }
                }
                acc[deg] = s;
            }
        }
        acc
    }
}

/// `Td_ℓ` of a weight multiset: the degree-ℓ coefficient of
/// `Π_i w_i x / (1 - e^{-w_i x})`.
pub fn todd_eval(weights: &[Rational], degree: usize) -> Rational {
    ToddSeries::new(degree).product(weights).swap_remove(degree)
}
