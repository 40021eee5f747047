#![allow(dead_code)]

use chow_obstruct::catalog::Example;
use chow_obstruct::invariants::{obstruction_report, InvariantReport};
use chow_obstruct::localization::{
    make_sample_plan, resolve_lambda, tangent_weights, Lambda, Localization,
};
use chow_obstruct::toric_fan::{Fan, FanoPolytope};

pub struct Built {
    pub fan: Fan,
    pub lambda: Lambda,
}

pub fn build(ex: Example) -> Built {
    let fan = Fan::new(ex.polytope).unwrap();
    let lambda = resolve_lambda(&ex.lambda, &fan).unwrap();
    Built { fan, lambda }
}

pub fn localize(b: &Built, seed: u64) -> Localization {
    let points = tangent_weights(&b.fan, &b.lambda).unwrap();
    let plan = make_sample_plan(
        &points,
        b.lambda.params(),
        b.lambda.params().len() + 4,
        seed,
    )
    .unwrap();
    Localization::new(&b.fan, &b.lambda, plan).unwrap()
}

pub fn report(b: &Built, seed: u64) -> InvariantReport {
    let points = tangent_weights(&b.fan, &b.lambda).unwrap();
    let plan = make_sample_plan(
        &points,
        b.lambda.params(),
        b.lambda.params().len() + 4,
        seed,
    )
    .unwrap();
    obstruction_report(&b.fan, &b.lambda, plan).unwrap()
}

/// The simplex with vertices `e_1..e_n` and `-(e_1+..+e_n)`.
pub fn projective_space(n: usize) -> FanoPolytope {
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    rows.push(vec![-1; n]);
    FanoPolytope::new(n, rows).unwrap()
}
