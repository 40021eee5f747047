use super::futaki::all_futaki;
use super::verify::{verify_bl1, verify_lift_shift, verify_theorem_main, Verification};
use crate::error::Result;
use crate::exact_math::{int, rat, AffineForm, ParamSpace, Rational};
use crate::localization::{compute_a, compute_b, Lambda, Localization, SamplePlan};
use crate::toric_fan::Fan;

/// Everything computed for one (fan, λ) pair.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub n: usize,
    pub params: ParamSpace,
    /// `a_0..=a_n`, coefficients of `χ(M, L^k)`.
    pub a: Vec<Rational>,
    /// `b_0..=b_n`, coefficients of the total weight `w(M, L^k)`.
    pub b: Vec<AffineForm>,
    /// `F_1..=F_n`.
    pub futaki: Vec<AffineForm>,
    /// Some `F_ℓ` is not identically zero.
    pub obstructed: bool,
    pub verifications: Vec<Verification>,
}

impl InvariantReport {
    pub fn donaldson_futaki(&self) -> &AffineForm {
        &self.futaki[0]
    }

    /// `F_ℓ` for `1 ≤ ℓ ≤ n`.
    pub fn futaki(&self, degree: usize) -> &AffineForm {
        &self.futaki[degree - 1]
    }

    pub fn all_verified(&self) -> bool {
        self.verifications.iter().all(|v| v.passed)
    }

    pub fn verification(&self, name: &str) -> Option<&Verification> {
        self.verifications.iter().find(|v| v.name == name)
    }
}

/// Shifts used by the report's lift-invariance check.
pub fn default_shifts() -> Vec<Rational> {
    vec![int(0), int(5), rat(-3, 7), rat(1, 2), int(-11)]
}

/// `a_ℓ`, `b_ℓ` and `F_ℓ` together with the bl1, Theorem-1.1 and lift-shift
/// verifications.
pub fn obstruction_report(fan: &Fan, lambda: &Lambda, plan: SamplePlan) -> Result<InvariantReport> {
    let loc = Localization::new(fan, lambda, plan)?;
    report_from(&loc)
}

pub fn report_from(loc: &Localization) -> Result<InvariantReport> {
    let n = loc.dim();
    let a = (0..=n)
        .map(|l| compute_a(loc, l))
        .collect::<Result<Vec<_>>>()?;
    let b = (0..=n)
        .map(|l| compute_b(loc, l))
        .collect::<Result<Vec<_>>>()?;
    let futaki = all_futaki(&a, &b)?;
    let obstructed = futaki.iter().any(|f| !f.is_zero());
    let verifications = vec![
        verify_bl1(loc, &b)?,
        verify_theorem_main(loc, &a, &b)?,
        verify_lift_shift(&a, &b, &default_shifts())?,
    ];
    Ok(InvariantReport {
        n,
        params: loc.params().clone(),
        a,
        b,
        futaki,
        obstructed,
        verifications,
    })
}
