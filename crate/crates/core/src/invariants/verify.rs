use num_traits::Zero;

use super::compactified::compactified_intersection;
use super::futaki::{all_futaki, describe, lift_shift_check};
use crate::error::{Error, Result};
use crate::exact_math::{factorial, format_rational, pow, AffineForm, Rational};
use crate::localization::Localization;
use crate::toric_fan::{count_lattice_points, dual_polytope, Fan};

/// One side-by-side comparison inside a verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quantity {
    Number(Rational),
    Form(AffineForm),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
}

impl Witness {
    pub fn numbers(label: String, lhs: Rational, rhs: Rational) -> Self {
        Witness {
            label,
            lhs: Quantity::Number(lhs),
            rhs: Quantity::Number(rhs),
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A named check with every comparison it made.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl Verification {
    fn new(name: &str, witnesses: Vec<Witness>, notes: Vec<String>) -> Self {
        Verification {
            name: name.to_string(),
            passed: witnesses.iter().all(Witness::holds),
            witnesses,
            notes,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.holds())
    }
}

/// For `1 ≤ ℓ ≤ n` and every sample point:
///
/// `(n-ℓ+1)!·b_ℓ = ∫_X̄ c_1(L̄)^{n-ℓ+1} Td_ℓ(X̄) − ∫_M c_1(L)^{n-ℓ+1} Td_{ℓ-1}(M)`
///
/// The left side comes from the reconstructed `b_ℓ`, the right side from
/// localization on the `(n+1)`-dimensional compactification.
pub fn verify_bl1(loc: &Localization, b: &[AffineForm]) -> Result<Verification> {
    let n = loc.dim();
    expect_len(b.len(), n + 1, "b")?;
    let points = loc.points();
    let mut witnesses = Vec::new();
    for (l, bl) in b.iter().enumerate().skip(1) {
        let scale = Rational::from_integer(factorial(n + 1 - l));
        let total = compactified_intersection(loc, l)?;
        let lower = loc.residue_sums(n + 1 - l, l - 1)?;
        for (i, point) in points.iter().enumerate() {
            let lhs = bl.eval(point)? * &scale;
            let rhs = &total.totals[i] - &lower[i];
            witnesses.push(Witness::numbers(
                format!("l={l} sample={}", i + 1),
                lhs,
                rhs,
            ));
        }
    }
    Ok(Verification::new("bl1", witnesses, Vec::new()))
}

/// The constant relating the intersection-number formula for `F_ℓ` to
/// `(a_0 b_ℓ − b_0 a_ℓ)/a_0²`.
///
/// Substituting `(L^n) = n!·a_0`, `(L̄^{n+1}) = (n+1)!·b_0`,
/// `(c_1^{n-ℓ} Td_ℓ) = (n-ℓ)!·a_ℓ` and the bracket `{…} = (n-ℓ+1)!·b_ℓ`
/// turns the numerator into `(n+1)!·(n-ℓ+1)!·(a_0 b_ℓ − b_0 a_ℓ)` and the
/// denominator into `n!·(n-ℓ+1)!·(n!)²·a_0²`, leaving `(n+1)/(n!)²`
/// independent of `ℓ`.
pub fn theorem_main_ratio(n: usize) -> Rational {
    let nf = Rational::from_integer(factorial(n));
    Rational::from_integer((n + 1).into()) / (&nf * &nf)
}

/// Assembles
///
/// `[(n+1)(L^n){(c_1(L̄)^{n+1-ℓ}Td_ℓ(X̄)) − (c_1(L)^{n+1-ℓ}Td_{ℓ-1}(M))}
///   − (n-ℓ+1)(L̄^{n+1})(c_1(L)^{n-ℓ}Td_ℓ(M))] / (n!(n-ℓ+1)!(L^n)²)`
///
/// from intersection numbers and compares it with
/// `theorem_main_ratio(n) · F_ℓ` at every sample point.
pub fn verify_theorem_main(
    loc: &Localization,
    a: &[Rational],
    b: &[AffineForm],
) -> Result<Verification> {
    let n = loc.dim();
    expect_len(a.len(), n + 1, "a")?;
    expect_len(b.len(), n + 1, "b")?;
    let f = all_futaki(a, b)?;
    let ratio = theorem_main_ratio(n);
    let ln = Rational::from_integer(factorial(n)) * &a[0];
    let points = loc.points();
    let mut witnesses = Vec::new();
    let mut observed: Vec<Rational> = Vec::new();
    for l in 1..=n {
        let total = compactified_intersection(loc, l)?;
        let lower = loc.residue_sums(n + 1 - l, l - 1)?;
        let td_l = Rational::from_integer(factorial(n - l)) * &a[l];
        let k = Rational::from_integer((n + 1 - l).into());
        let denom = Rational::from_integer(factorial(n) * factorial(n + 1 - l)) * &ln * &ln;
        for (i, point) in points.iter().enumerate() {
            let lbar = Rational::from_integer(factorial(n + 1)) * b[0].eval(point)?;
            let bracket = &total.totals[i] - &lower[i];
            let assembled = (Rational::from_integer((n + 1).into()) * &ln * bracket
                - &k * lbar * &td_l)
                / &denom;
            let fl = f[l - 1].eval(point)?;
            if !fl.is_zero() {
                let r = &assembled / &fl;
                if !observed.contains(&r) {
                    observed.push(r);
                }
            }
            witnesses.push(Witness::numbers(
                format!("l={l} sample={}", i + 1),
                assembled,
                &ratio * fl,
            ));
        }
    }
    let mut notes = vec![format!("ratio (n+1)/(n!)^2 = {}", format_rational(&ratio))];
    if observed.is_empty() {
        notes.push("every F_l vanishes; ratio not observable".into());
    } else {
        notes.push(format!("observed ratios: {}", describe(&observed)));
    }
    Ok(Verification::new("theorem_main", witnesses, notes))
}

/// Lift invariance of every `F_ℓ` for each shift `c`.
pub fn verify_lift_shift(
    a: &[Rational],
    b: &[AffineForm],
    shifts: &[Rational],
) -> Result<Verification> {
    let before = all_futaki(a, b)?;
    let mut witnesses = Vec::new();
    for c in shifts {
        let shifted: Vec<AffineForm> = b
            .iter()
            .zip(a)
            .map(|(bl, al)| bl.clone() + AffineForm::constant(al * c))
            .collect();
        let after = all_futaki(a, &shifted)?;
        debug_assert_eq!(lift_shift_check(a, b, c)?, before == after);
        for (l, (x, y)) in before.iter().zip(after).enumerate() {
            witnesses.push(Witness {
                label: format!("c={} l={}", format_rational(c), l + 1),
                lhs: Quantity::Form(x.clone()),
                rhs: Quantity::Form(y),
            });
        }
    }
    Ok(Verification::new("lift_shift", witnesses, Vec::new()))
}

/// `Σ_ℓ a_ℓ k^{n-ℓ} = #(kQ ∩ Z^n)` for `k = 1..=k_max`.
pub fn verify_ehrhart(fan: &Fan, a: &[Rational], k_max: u32) -> Result<Verification> {
    let n = fan.dim();
    expect_len(a.len(), n + 1, "a")?;
    let q = dual_polytope(fan.polytope());
    let mut witnesses = Vec::new();
    for k in 1..=k_max {
        let kr = Rational::from_integer(k.into());
        let hilbert: Rational = a
            .iter()
            .enumerate()
            .map(|(l, al)| al * pow(&kr, n - l))
            .sum();
        let count = count_lattice_points(&q, k)?;
        witnesses.push(Witness::numbers(
            format!("k={k}"),
            hilbert,
            Rational::from_integer(count.into()),
        ));
    }
    Ok(Verification::new("ehrhart", witnesses, Vec::new()))
}

fn expect_len(got: usize, want: usize, what: &str) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "{got} coefficients {what}_ℓ, expected {want}"
        )))
    }
}
