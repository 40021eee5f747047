//! Built-in smooth toric Fano examples, each with a one-parameter subgroup
//! given by weights on one chart.

use crate::exact_math::ParamSpace;
use crate::localization::OnePsSpec;
use crate::toric_fan::FanoPolytope;

#[derive(Debug, Clone)]
pub struct Example {
    pub name: &'static str,
    pub polytope: FanoPolytope,
    pub lambda: OnePsSpec,
}

fn chart(cone: &[usize], params: &[&str]) -> OnePsSpec {
    OnePsSpec::Chart {
        cone: cone.iter().map(|i| i - 1).collect(),
        params: ParamSpace::new(params).expect("catalog parameter names are valid"),
    }
}

fn polytope(dim: usize, rows: &[&[i64]]) -> FanoPolytope {
    FanoPolytope::new(dim, rows.iter().map(|r| r.to_vec()).collect())
        .expect("catalog polytopes are valid")
}

pub fn cp1() -> Example {
    Example {
        name: "cp1",
        polytope: polytope(1, &[&[1], &[-1]]),
        lambda: chart(&[1], &["t"]),
    }
}

pub fn cp2() -> Example {
    Example {
        name: "cp2",
        polytope: polytope(2, &[&[1, 0], &[0, 1], &[-1, -1]]),
        lambda: chart(&[1, 2], &["a", "b"]),
    }
}

pub fn p1xp1() -> Example {
    Example {
        name: "p1xp1",
        polytope: polytope(2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]),
        lambda: chart(&[1, 2], &["a", "b"]),
    }
}

/// The Kähler–Einstein toric Fano 7-fold of Nill and Paffenholz, a
/// `P^1`-fibration over `(P^1)^3 × P^3`. Vertex rows are the columns of its
/// usual 7 × 12 vertex matrix; the chart is the cone on
/// `v1, v2, v3, v7, v8, v9, v11` with coordinates `X_1..X_3, Y_1..Y_3, Z`.
pub fn nill_paffenholz_7fold() -> Example {
    Example {
        name: "nill-paffenholz-7fold",
        polytope: polytope(
            7,
            &[
                &[1, 0, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0, 0],
                &[0, 0, -1, 0, 0, 0, -1],
                &[0, -1, 0, 0, 0, 0, -1],
                &[-1, 0, 0, 0, 0, 0, -1],
                &[0, 0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 0, 1, 0],
                &[0, 0, 0, -1, -1, -1, 2],
                &[0, 0, 0, 0, 0, 0, 1],
                &[0, 0, 0, 0, 0, 0, -1],
            ],
        ),
        lambda: chart(
            &[1, 2, 3, 7, 8, 9, 11],
            &[
                "alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3", "gamma",
            ],
        ),
    }
}

pub fn all() -> Vec<Example> {
    vec![cp1(), cp2(), p1xp1(), nill_paffenholz_7fold()]
}

pub fn by_name(name: &str) -> Option<Example> {
    all().into_iter().find(|e| e.name == name)
}
