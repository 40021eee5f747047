use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_math::{format_rational, pow, AffineForm, Rational};

fn check_lengths(a: &[Rational], b: &[AffineForm]) -> Result<usize> {
    if a.is_empty() || a.len() != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients a_ℓ against {} coefficients b_ℓ",
            a.len(),
            b.len()
        )));
    }
    if a[0].is_zero() {
        return Err(Error::InvalidArgument("a_0 = 0".into()));
    }
    Ok(a.len() - 1)
}

/// `F_ℓ = (a_0 b_ℓ - b_0 a_ℓ) / a_0²` for `1 ≤ ℓ ≤ n`.
pub fn futaki(a: &[Rational], b: &[AffineForm], degree: usize) -> Result<AffineForm> {
    let n = check_lengths(a, b)?;
    if degree == 0 || degree > n {
        return Err(Error::InvalidArgument(format!("F_{degree} with n = {n}")));
    }
    let a0 = &a[0];
    let numerator = b[degree].scale(a0) - b[0].scale(&a[degree]);
    Ok(numerator.scale(&(a0 * a0).recip()))
}

/// The Donaldson–Futaki invariant, `F_1`.
pub fn donaldson_futaki(a: &[Rational], b: &[AffineForm]) -> Result<AffineForm> {
    futaki(a, b, 1)
}

/// `F_1..=F_n`.
pub fn all_futaki(a: &[Rational], b: &[AffineForm]) -> Result<Vec<AffineForm>> {
    let n = check_lengths(a, b)?;
    (1..=n).map(|l| futaki(a, b, l)).collect()
}

/// `Chow(k) = w(k) / (k χ(k)) - b_0 / a_0` at one parameter point, with
/// `χ(k) = Σ a_ℓ k^{n-ℓ}` and `w(k) = Σ_{ℓ≤n} b_ℓ k^{n+1-ℓ}`. The constant
/// term `b_{n+1}` of `w` is taken to be zero, as it is for smooth varieties.
pub fn chow_weight(
    a: &[Rational],
    b: &[AffineForm],
    k: u32,
    point: &[Rational],
) -> Result<Rational> {
    let n = check_lengths(a, b)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let kr = Rational::from_integer(k.into());
    let chi: Rational = a
        .iter()
        .enumerate()
        .map(|(l, al)| al * pow(&kr, n - l))
        .sum();
    if chi.is_zero() {
        return Err(Error::InvalidArgument(format!("χ(k) vanishes at k = {k}")));
    }
    let mut w = Rational::zero();
    for (l, bl) in b.iter().enumerate() {
        w += bl.eval(point)? * pow(&kr, n + 1 - l);
    }
    Ok(w / (kr * chi) - b[0].eval(point)? / &a[0])
}

/// True when shifting `b_ℓ ↦ b_ℓ + c·a_ℓ` for every `ℓ` (a change of
/// linearization) leaves every `F_ℓ` unchanged.
pub fn lift_shift_check(a: &[Rational], b: &[AffineForm], c: &Rational) -> Result<bool> {
    let before = all_futaki(a, b)?;
    let shifted: Vec<AffineForm> = b
        .iter()
        .zip(a)
        .map(|(bl, al)| bl.clone() + AffineForm::constant(al * c))
        .collect();
    let after = all_futaki(a, &shifted)?;
    Ok(before == after)
}

pub(crate) fn describe(values: &[Rational]) -> String {
    values
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(", ")
}
