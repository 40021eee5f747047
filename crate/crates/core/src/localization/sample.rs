use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FixedPointData;
use crate::error::{Error, Result};
use crate::exact_math::{int, ParamSpace, QMatrix, Rational};

const MAX_DRAWS: usize = 20_000;
const RANGE: i64 = 24;

/// Parameter values at which localized sums are evaluated.
///
/// `samples` holds `#params + 1` affinely independent points, enough to
/// reconstruct any degree-≤1 form; `checks` holds the extra points used to
/// verify a reconstruction. At every point, every tangent weight at every
/// fixed point is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplePlan {
    pub samples: Vec<Vec<Rational>>,
    pub checks: Vec<Vec<Rational>>,
}

impl SamplePlan {
    /// Solve samples followed by check samples.
    pub fn all(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.samples.iter().chain(&self.checks)
    }

    pub fn len(&self) -> usize {
        self.samples.len() + self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn is_generic(fixed_points: &[FixedPointData], point: &[Rational]) -> Result<bool> {
    for fp in fixed_points {
        for w in &fp.tangent_weights {
            if w.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Draws `count` small-integer points from a ChaCha stream seeded by `seed`,
/// redrawing any point where a tangent weight vanishes.
pub fn make_sample_plan(
    fixed_points: &[FixedPointData],
    params: &ParamSpace,
    count: usize,
    seed: u64,
) -> Result<SamplePlan> {
    let p = params.len();
    if count < p + 2 {
        return Err(Error::InvalidArgument(format!(
            "{count} samples requested, at least {} needed for {p} parameters",
            p + 2
        )));
    }
    for fp in fixed_points {
        if let Some(i) = fp.tangent_weights.iter().position(|w| w.is_zero()) {
            return Err(Error::Degenerate(format!(
                "tangent weight {} vanishes identically at the fixed point of cone {:?}",
                i + 1,
                fp.vertex_indices.iter().map(|v| v + 1).collect::<Vec<_>>()
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<Vec<Rational>> = Vec::with_capacity(p + 1);
    let mut checks = Vec::new();
    let mut draws = 0;
    while samples.len() + checks.len() < count {
        draws += 1;
        if draws > MAX_DRAWS {
            return Err(Error::SamplingFailed {
                attempts: MAX_DRAWS,
            });
        }
        let point: Vec<Rational> = (0..p).map(|_| int(rng.gen_range(-RANGE..=RANGE))).collect();
        if !is_generic(fixed_points, &point)? {
            continue;
        }
        if samples.len() <= p {
            if extends_affine_basis(&samples, &point) {
                samples.push(point);
            }
        } else {
            checks.push(point);
        }
    }
    Ok(SamplePlan { samples, checks })
}

fn extends_affine_basis(basis: &[Vec<Rational>], point: &[Rational]) -> bool {
    let rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(Vec::as_slice)
        .chain(std::iter::once(point))
        .map(|x| {
            std::iter::once(Rational::one())
                .chain(x.iter().cloned())
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0) == basis.len() + 1
}
