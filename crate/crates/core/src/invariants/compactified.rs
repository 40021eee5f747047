//! Intersection numbers on the compactified product test configuration.
//!
//! For the product configuration `M × C` with λ acting diagonally, the
//! compactification over `P^1` has two kinds of fixed loci:
//!
//! * isolated points on the central fiber, one per fixed point `q` of `M`,
//!   with tangent weights `{1} ∪ w_q` (the base direction has weight one)
//!   and fiber weight `Σ w_q` on the polarization;
//! * the whole fiber at infinity, a copy of `M` on which the action is
//!   trivial, with normal weight `-1`.
//!
//! At infinity only the degree-one term of the normal Todd factor survives
//! integration over `M`, giving `(Td_1(-1) / -1) · ∫_M c_1^{n-ℓ+1} Td_{ℓ-1}`.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_math::{factorial, int, pow, AffineForm, Rational};
use crate::localization::{compute_a, todd_eval, Localization, ToddSeries};

/// `∫ c_1(L̄)^{n-ℓ+1} Td_ℓ` on the compactification, split by fixed locus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactifiedIntersection {
    pub degree: usize,
    /// Central-fiber sum at each sample point.
    pub central: Vec<Rational>,
    /// Contribution of the fiber at infinity (sample independent).
    pub infinity: Rational,
    /// `central[i] + infinity`.
    pub totals: Vec<Rational>,
    /// The degree-≤1 form through `totals`.
    pub form: AffineForm,
}

pub fn compactified_intersection(
    loc: &Localization,
    degree: usize,
) -> Result<CompactifiedIntersection> {
    let n = loc.dim();
    if degree == 0 || degree > n {
        return Err(Error::InvalidArgument(format!(
            "compactified intersection for ℓ = {degree}; ℓ = 0 is (n+1)!·b_0"
        )));
    }
    if loc.lambda().is_zero() {
        return Err(Error::Degenerate("lambda is zero".into()));
    }
    let power = n + 1 - degree;
    let series = ToddSeries::new(degree);
    let base_weight = Rational::one();

    let central = loc
        .points()
        .par_iter()
        .map(|sample| {
            let mut sum = Rational::zero();
            for fp in loc.fixed_points() {
                let mut weights = Vec::with_capacity(n + 1);
                weights.push(base_weight.clone());
                for w in &fp.tangent_weights {
                    weights.push(w.eval(sample)?);
                }
                let euler: Rational = weights.iter().product();
                if euler.is_zero() {
                    return Err(Error::Inconsistent(
                        "zero weight on the central fiber".into(),
                    ));
                }
                let todd = series.product(&weights).swap_remove(degree);
                sum += pow(&fp.line_weight.eval(sample)?, power) * todd / euler;
            }
            Ok(sum)
        })
        .collect::<Result<Vec<_>>>()?;

    let normal = int(-1);
    let normal_factor = todd_eval(std::slice::from_ref(&normal), 1) / &normal;
    let lower = compute_a(loc, degree - 1)? * Rational::from_integer(factorial(power));
    let infinity = normal_factor * lower;

    let totals: Vec<Rational> = central.iter().map(|c| c + &infinity).collect();
    let form = loc.fit_affine(&totals, &format!("compactified intersection ℓ = {degree}"))?;
    Ok(CompactifiedIntersection {
        degree,
        central,
        infinity,
        totals,
        form,
    })
}
