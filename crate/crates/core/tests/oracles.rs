//! Independent checks of localized quantities against direct lattice-point
//! enumeration of dilates of the dual polytope.

mod common;

use chow_obstruct::catalog;
use chow_obstruct::exact_math::ParamSpace;
use chow_obstruct::exact_math::{binomial, int, pow, AffineForm, Rational};
use chow_obstruct::invariants::verify_ehrhart;
use chow_obstruct::localization::{make_sample_plan, resolve_lambda, tangent_weights, OnePsSpec};
use chow_obstruct::toric_fan::{count_lattice_points, dual_polytope, lattice_summary, Fan};
use common::{build, projective_space, report, Built};

/// `Σ_{u ∈ kQ ∩ Z^n} ⟨u, λ⟩` as a form in the parameters of λ.
fn weight_sum(b: &Built, k: u32) -> AffineForm {
    let q = dual_polytope(b.fan.polytope());
    let summary = lattice_summary(&q, k).unwrap();
    summary
        .coordinate_sum
        .iter()
        .zip(b.lambda.coords())
        .map(|(c, f)| f.scale(&Rational::from_integer((*c).into())))
        .sum()
}

/// `w(k) = Σ_ℓ b_ℓ k^{n+1-ℓ}` must equal minus the total weight of the
/// monomial basis of `H^0(-kK)`: the action on a section is dual to the
/// action on the lattice point that indexes it.
fn check_weight_sums(b: &Built, ks: &[u32]) {
    let r = report(b, 0);
    for &k in ks {
        let kr = int(k.into());
        let expected: AffineForm =
            r.b.iter()
                .enumerate()
                .map(|(l, bl)| bl.scale(&pow(&kr, r.n + 1 - l)))
                .sum();
        assert_eq!(weight_sum(b, k), -expected, "k = {k}");
    }
}

#[test]
fn weight_sums_small_fans() {
    for ex in [catalog::cp1(), catalog::cp2(), catalog::p1xp1()] {
        check_weight_sums(&build(ex), &[1, 2, 3, 4]);
    }
}

#[test]
fn weight_sums_of_a_non_symmetric_lambda() {
    // an explicit λ with a constant part on a fan whose b_ℓ are nonzero
    let fan = Fan::new(projective_space(3)).unwrap();
    let params = ParamSpace::new(&["t"]).unwrap();
    let coords = vec![
        params.parse_form("t").unwrap(),
        params.parse_form("2*t").unwrap(),
        params.parse_form("-5*t").unwrap(),
    ];
    let lambda = resolve_lambda(&OnePsSpec::Explicit { params, coords }, &fan).unwrap();
    check_weight_sums(&Built { fan, lambda }, &[1, 2, 3]);
}

#[test]
fn weight_sums_sevenfold() {
    let b = build(catalog::nill_paffenholz_7fold());
    let s = b
        .lambda
        .params()
        .parse_form("alpha1 + alpha2 + alpha3 - beta1 - beta2 - beta3 - 2*gamma")
        .unwrap();
    assert_eq!(weight_sum(&b, 1), s.scale(&int(-16)));
    assert_eq!(weight_sum(&b, 2), s.scale(&int(-360)));
    check_weight_sums(&b, &[1, 2]);
}

#[test]
fn projective_space_sections() {
    // h^0(CP^n, O(k(n+1))) = C(n + k(n+1), n)
    for n in 1..=4 {
        let q = dual_polytope(&projective_space(n));
        for k in 1..=3u32 {
            let want = binomial(n + k as usize * (n + 1), n);
            assert_eq!(
                int(count_lattice_points(&q, k).unwrap() as i64),
                Rational::from_integer(want)
            );
        }
    }
}

#[test]
fn ehrhart_on_projective_spaces() {
    for n in 1..=4 {
        let fan = Fan::new(projective_space(n)).unwrap();
        let params =
            ParamSpace::new(&(1..=n).map(|i| format!("t{i}")).collect::<Vec<_>>()).unwrap();
        let spec = OnePsSpec::Chart {
            cone: (0..n).collect(),
            params,
        };
        let lambda = resolve_lambda(&spec, &fan).unwrap();
        let r = report(
            &Built {
                fan: fan.clone(),
                lambda: lambda.clone(),
            },
            1,
        );
        assert!(verify_ehrhart(&fan, &r.a, 3).unwrap().passed, "CP^{n}");
        let fps = tangent_weights(&fan, &lambda).unwrap();
        assert_eq!(fps.len(), n + 1);
        let _ = make_sample_plan(&fps, lambda.params(), n + 2, 0).unwrap();
    }
}

#[test]
fn ehrhart_on_shipped_examples() {
    for ex in [catalog::cp1(), catalog::cp2(), catalog::p1xp1()] {
        let b = build(ex);
        let r = report(&b, 0);
        assert!(verify_ehrhart(&b.fan, &r.a, 4).unwrap().passed);
    }
}
