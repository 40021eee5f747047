use num_traits::{One, Zero};
use rayon::prelude::*;

use super::lambda::{pair, Lambda};
use super::sample::SamplePlan;
use super::todd::ToddSeries;
use crate::error::{Error, Result};
use crate::exact_math::{
    factorial, format_rational, pow, AffineForm, ParamSpace, QMatrix, Rational,
};
use crate::toric_fan::{dual_basis, Fan};

/// Tangent and anticanonical fiber weights at one torus-fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointData {
    /// Position of the cone in [`Fan::cones`].
    pub cone: usize,
    pub vertex_indices: Vec<usize>,
    /// `w_i = ⟨u_i, λ⟩`, aligned with `vertex_indices`.
    pub tangent_weights: Vec<AffineForm>,
    /// `Σ w_i`, the weight of the canonical lift on `-K` at this point.
    pub line_weight: AffineForm,
}

/// Weights at every fixed point of a smooth fan.
pub fn tangent_weights(fan: &Fan, lambda: &Lambda) -> Result<Vec<FixedPointData>> {
    fan.require_smooth()?;
    if lambda.dim() != fan.dim() {
        return Err(Error::DimensionMismatch(format!(
            "lambda of length {} for a fan of dimension {}",
            lambda.dim(),
            fan.dim()
        )));
    }
    fan.cones()
        .iter()
        .enumerate()
        .map(|(at, cone)| {
            let u = dual_basis(cone)?;
            let tangent_weights: Vec<AffineForm> =
                (0..u.rows()).map(|i| pair(u.row(i), lambda)).collect();
            let line_weight = tangent_weights.iter().cloned().sum();
            Ok(FixedPointData {
                cone: at,
                vertex_indices: cone.vertex_indices().to_vec(),
                tangent_weights,
                line_weight,
            })
        })
        .collect()
}

/// `Σ_q (line_q)^d · Td_ℓ(w_q) / Π w_q` at one parameter point.
pub fn residue_sum(
    fixed_points: &[FixedPointData],
    sample: &[Rational],
    c1_power: usize,
    todd_degree: usize,
) -> Result<Rational> {
    let series = ToddSeries::new(todd_degree);
    let mut total = Rational::zero();
    for fp in fixed_points {
        let term = PointTerm::evaluate(fp, sample, &series)?;
        total += term.residue(c1_power, todd_degree);
    }
    Ok(total)
}

/// One fixed point evaluated at one sample.
#[derive(Debug, Clone)]
struct PointTerm {
    line: Rational,
    inverse_euler: Rational,
    todd: Vec<Rational>,
}

impl PointTerm {
    fn evaluate(fp: &FixedPointData, sample: &[Rational], series: &ToddSeries) -> Result<Self> {
        let weights: Vec<Rational> = fp
            .tangent_weights
            .iter()
            .map(|w| w.eval(sample))
            .collect::<Result<_>>()?;
        let euler: Rational = weights.iter().product();
        if euler.is_zero() {
            return Err(Error::Inconsistent(format!(
                "zero tangent weight at cone {:?} for sample {}",
                fp.vertex_indices.iter().map(|v| v + 1).collect::<Vec<_>>(),
                sample
                    .iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(",")
            )));
        }
        Ok(PointTerm {
            line: fp.line_weight.eval(sample)?,
            inverse_euler: euler.recip(),
            todd: series.product(&weights),
        })
    }

    fn residue(&self, c1_power: usize, todd_degree: usize) -> Rational {
        pow(&self.line, c1_power) * &self.todd[todd_degree] * &self.inverse_euler
    }
}

/// All fixed points evaluated at one sample, with Todd data up to degree
/// `n + 1`.
#[derive(Debug, Clone)]
struct SampleEvaluation {
    terms: Vec<PointTerm>,
}

impl SampleEvaluation {
    fn residue(&self, c1_power: usize, todd_degree: usize) -> Rational {
        self.terms
            .iter()
            .map(|t| t.residue(c1_power, todd_degree))
            .sum()
    }
}

/// Fixed-point data for one (fan, λ) pair evaluated at every point of a
/// sample plan. The per-sample work is done once, up front, in parallel.
#[derive(Debug, Clone)]
pub struct Localization {
    dim: usize,
    lambda: Lambda,
    fixed_points: Vec<FixedPointData>,
    plan: SamplePlan,
    evaluations: Vec<SampleEvaluation>,
}

impl Localization {
    pub fn new(fan: &Fan, lambda: &Lambda, plan: SamplePlan) -> Result<Self> {
        let fixed_points = tangent_weights(fan, lambda)?;
        Localization::from_fixed_points(fan.dim(), lambda.clone(), fixed_points, plan)
    }

    pub fn from_fixed_points(
        dim: usize,
        lambda: Lambda,
        fixed_points: Vec<FixedPointData>,
        plan: SamplePlan,
    ) -> Result<Self> {
        let series = ToddSeries::new(dim + 1);
        let points: Vec<&Vec<Rational>> = plan.all().collect();
        let evaluations = points
            .par_iter()
            .map(|sample| {
                let terms = fixed_points
                    .iter()
                    .map(|fp| PointTerm::evaluate(fp, sample, &series))
                    .collect::<Result<_>>()?;
                Ok(SampleEvaluation { terms })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Localization {
            dim,
            lambda,
            fixed_points,
            plan,
            evaluations,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    pub fn params(&self) -> &ParamSpace {
        self.lambda.params()
    }

    pub fn fixed_points(&self) -> &[FixedPointData] {
        &self.fixed_points
    }

    pub fn plan(&self) -> &SamplePlan {
        &self.plan
    }

    /// Every sample point, solve samples first.
    pub fn points(&self) -> Vec<&Vec<Rational>> {
        self.plan.all().collect()
    }

    /// `residue_sum(d, ℓ)` at every sample, in [`Localization::points`]
    /// order.
    pub fn residue_sums(&self, c1_power: usize, todd_degree: usize) -> Result<Vec<Rational>> {
        if todd_degree > self.dim + 1 {
            return Err(Error::InvalidArgument(format!(
                "Todd degree {todd_degree} exceeds {}",
                self.dim + 1
            )));
        }
        Ok(self
            .evaluations
            .iter()
            .map(|e| e.residue(c1_power, todd_degree))
            .collect())
    }

    /// Reconstructs the degree-≤1 form taking `values[i]` at the i-th sample
    /// point, and checks it against every verification sample.
    pub fn fit_affine(&self, values: &[Rational], what: &str) -> Result<AffineForm> {
        fit_affine(&self.plan, values, what)
    }
}

pub(crate) fn fit_affine(plan: &SamplePlan, values: &[Rational], what: &str) -> Result<AffineForm> {
    let k = plan.samples.len();
    if values.len() != plan.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} values for {} sample points",
            values.len(),
            plan.len()
        )));
    }
    let rows: Vec<Vec<Rational>> = plan
        .samples
        .iter()
        .map(|x| {
            std::iter::once(Rational::one())
                .chain(x.iter().cloned())
                .collect()
        })
        .collect();
    let solution = QMatrix::from_rows(rows)?
        .solve(&values[..k])
        .map_err(|_| Error::Inconsistent(format!("sample system for {what} is singular")))?;
    let form = AffineForm::from_parts(solution[0].clone(), &solution[1..]);
    for (x, v) in plan.checks.iter().zip(&values[k..]) {
        let got = form.eval(x)?;
        if &got != v {
            return Err(Error::Inconsistent(format!(
                "{what} is not of degree ≤ 1: reconstruction gives {} but the localized sum is {}",
                format_rational(&got),
                format_rational(v)
            )));
        }
    }
    Ok(form)
}

/// `a_ℓ = (1/(n-ℓ)!) Σ_q c_1^{n-ℓ} Td_ℓ / e`, which must not depend on the
/// sample.
pub fn compute_a(loc: &Localization, degree: usize) -> Result<Rational> {
    let n = loc.dim();
    if degree > n {
        return Err(Error::InvalidArgument(format!("a_{degree} with n = {n}")));
    }
    let scale = Rational::from_integer(factorial(n - degree));
    let values = loc.residue_sums(n - degree, degree)?;
    let first = &values[0] / &scale;
    for (i, v) in values.iter().enumerate().skip(1) {
        let v = v / &scale;
        if v != first {
            return Err(Error::Inconsistent(format!(
                "a_{degree} differs between samples 1 and {}: {} vs {}",
                i + 1,
                format_rational(&first),
                format_rational(&v)
            )));
        }
    }
    Ok(first)
}

/// `b_ℓ = (1/(n-ℓ+1)!) Σ_q c_1^{n-ℓ+1} Td_ℓ / e` as a linear form in the
/// parameters. `b_ℓ` is linear in λ, so it is homogeneous whenever λ is, and
/// that is checked.
pub fn compute_b(loc: &Localization, degree: usize) -> Result<AffineForm> {
    let n = loc.dim();
    if degree > n {
        return Err(Error::InvalidArgument(format!("b_{degree} with n = {n}")));
    }
    let scale = Rational::from_integer(factorial(n + 1 - degree));
    let values: Vec<Rational> = loc
        .residue_sums(n + 1 - degree, degree)?
        .into_iter()
        .map(|v| v / &scale)
        .collect();
    let form = loc.fit_affine(&values, &format!("b_{degree}"))?;
    let homogeneous = loc.lambda().coords().iter().all(AffineForm::is_homogeneous);
    if homogeneous && !form.is_homogeneous() {
        return Err(Error::Inconsistent(format!(
            "b_{degree} has constant term {}",
            format_rational(form.constant_term())
        )));
    }
    Ok(form)
}
