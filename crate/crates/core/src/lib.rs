//! Exact higher Futaki invariants of smooth toric Fano manifolds.
//!
//! The pipeline runs from a Fano polytope to its face fan, then to the
//! weights of a one-parameter subgroup at each torus-fixed point, and from
//! those to the coefficients `a_ℓ` of the Hilbert polynomial and `b_ℓ` of the
//! total weight by equivariant localization. The higher Futaki invariants
//! `F_ℓ = (a_0 b_ℓ − b_0 a_ℓ)/a_0²` follow. Their vanishing is necessary for
//! asymptotic Chow semistability. All arithmetic is exact.
//!
//! ```
//! use chow_obstruct::prelude::*;
//!
//! let ex = catalog::cp2();
//! let fan = Fan::new(ex.polytope)?;
//! let lambda = resolve_lambda(&ex.lambda, &fan)?;
//! let points = tangent_weights(&fan, &lambda)?;
//! let plan = make_sample_plan(&points, lambda.params(), 6, 0)?;
//! let report = obstruction_report(&fan, &lambda, plan)?;
//! assert_eq!(report.a[0], rat(9, 2));
//! assert!(!report.obstructed);
//! # Ok::<(), chow_obstruct::Error>(())
//! ```

pub mod catalog;
pub mod error;
pub mod exact_math;
pub mod invariants;
pub mod localization;
pub mod toric_fan;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/fans.md")]
    mod fans {}
    #[doc = include_str!("../../../book/src/localization.md")]
    mod localization {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/sevenfold.md")]
    mod sevenfold {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

/// The names most programs need.
pub mod prelude {
    pub use crate::catalog;
    pub use crate::exact_math::{format_rational, int, rat, AffineForm, ParamSpace, Rational};
    pub use crate::invariants::{obstruction_report, InvariantReport};
    pub use crate::localization::{
        compute_a, compute_b, make_sample_plan, resolve_lambda, tangent_weights, Lambda,
        Localization, OnePsSpec, SamplePlan,
    };
    pub use crate::toric_fan::{dual_polytope, Fan, FanoPolytope};
}
