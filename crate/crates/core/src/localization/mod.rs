//! Equivariant localization on a smooth toric Fano manifold.
//!
//! A one-parameter subgroup λ acts on the tangent space at the fixed point of
//! a maximal cone with weights `⟨u_i, λ⟩`, where `u_1..u_n` is the dual basis
//! of the cone generators. Chern–Todd numbers are then finite sums over fixed
//! points of `c_1^d · Td_ℓ / e`, with `c_1` the sum of the weights and `e`
//! their product.
//!
//! Sums that are linear in the parameters of λ are never manipulated
//! symbolically. They are evaluated exactly at generic integer points and the
//! linear form is recovered by an exact solve, then checked at extra points.

mod lambda;
mod residue;
mod sample;
mod todd;

pub use lambda::{resolve_lambda, Lambda, OnePsSpec};
pub use residue::{
    compute_a, compute_b, residue_sum, tangent_weights, FixedPointData, Localization,
};
pub use sample::{is_generic, make_sample_plan, SamplePlan};
pub use todd::{todd_eval, ToddSeries};
