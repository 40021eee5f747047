use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_math::{AffineForm, ParamSpace, Rational};
use crate::toric_fan::{dual_basis, Fan};

/// How a one-parameter subgroup is specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OnePsSpec {
    /// Coordinates of λ in `N ⊗ Q`, one degree-≤1 form per axis.
    Explicit {
        params: ParamSpace,
        coords: Vec<AffineForm>,
    },
    /// Weights on the affine coordinates of one chart: the k-th chart
    /// coordinate (dual to the k-th listed generator) gets weight `params[k]`.
    Chart {
        cone: Vec<usize>,
        params: ParamSpace,
    },
}

impl OnePsSpec {
    pub fn params(&self) -> &ParamSpace {
        match self {
            OnePsSpec::Explicit { params, .. } | OnePsSpec::Chart { params, .. } => params,
        }
    }
}

/// A resolved one-parameter subgroup: lattice coordinates as forms in the
/// declared parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lambda {
    params: ParamSpace,
    coords: Vec<AffineForm>,
}

impl Lambda {
    pub fn new(params: ParamSpace, coords: Vec<AffineForm>) -> Result<Self> {
        if let Some(f) = coords
            .iter()
            .find(|f| f.max_param().is_some_and(|i| i >= params.len()))
        {
            return Err(Error::UnknownParameter(format!(
                "#{} in {f:?}",
                f.max_param().unwrap_or_default()
            )));
        }
        Ok(Lambda { params, coords })
    }

    pub fn params(&self) -> &ParamSpace {
        &self.params
    }

    pub fn coords(&self) -> &[AffineForm] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn scaled(&self, c: &Rational) -> Lambda {
        Lambda {
            params: self.params.clone(),
            coords: self.coords.iter().map(|f| f.scale(c)).collect(),
        }
    }

    pub fn negated(&self) -> Lambda {
        Lambda {
            params: self.params.clone(),
            coords: self.coords.iter().map(|f| -f.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(AffineForm::is_zero)
    }
}

/// Turns a spec into lattice coordinates. For a chart on the cone spanned by
/// `v_{r_1}..v_{r_n}` with parameters `p_1..p_n`, `λ = Σ p_j v_{r_j}`, so the
/// chart coordinate dual to `v_{r_j}` carries weight exactly `p_j`.
pub fn resolve_lambda(spec: &OnePsSpec, fan: &Fan) -> Result<Lambda> {
    let n = fan.dim();
    match spec {
        OnePsSpec::Explicit { params, coords } => {
            if coords.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "lambda has {} coordinates in dimension {n}",
                    coords.len()
                )));
            }
            Lambda::new(params.clone(), coords.clone())
        }
        OnePsSpec::Chart { cone, params } => {
            if cone.len() != n || params.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "chart needs {n} generators and {n} parameters, got {} and {}",
                    cone.len(),
                    params.len()
                )));
            }
            let at = fan.find_cone(cone)?;
            dual_basis(&fan.cones()[at])?;
            let coords = (0..n)
                .map(|i| {
                    cone.iter()
                        .enumerate()
                        .filter(|(_, &r)| fan.polytope().vertex(r)[i] != 0)
                        .map(|(j, &r)| {
                            AffineForm::param(j)
                                .scale(&Rational::from_integer(fan.polytope().vertex(r)[i].into()))
                        })
                        .fold(AffineForm::zero(), |acc, f| acc + f)
                })
                .collect();
            Lambda::new(params.clone(), coords)
        }
    }
}

/// `⟨u, λ⟩` for a rational covector `u`.
pub(crate) fn pair(u: &[Rational], lambda: &Lambda) -> AffineForm {
    u.iter()
        .zip(lambda.coords())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, f)| f.scale(c))
        .sum()
}
