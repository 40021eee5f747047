mod common;

use chow_obstruct::catalog;
use chow_obstruct::exact_math::{
    affine_eval, det, int, rat, solve, AffineForm, ParamSpace, QMatrix, Rational,
};
use chow_obstruct::invariants::{all_futaki, chow_weight, lift_shift_check};
use chow_obstruct::localization::{
    compute_a, make_sample_plan, tangent_weights, todd_eval, Localization,
};
use chow_obstruct::toric_fan::{count_lattice_points, DualPolytope, Inequality};
use common::{build, report};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn square(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
        let rows: Vec<Vec<i64>> = v.chunks(n).map(<[i64]>::to_vec).collect();
        QMatrix::from_int_rows(&rows).unwrap()
    })
}

/// Products of elementary integer operations, so `|det| = 1`.
fn unimodular(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3), 0..12).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        for (i, j, c) in ops {
            if i != j {
                // row_i += c · row_j
                let src = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(src) {
                    *x += c * y;
                }
            }
        }
        QMatrix::from_int_rows(&m).unwrap()
    })
}

proptest! {
    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn determinant_is_multiplicative(a in square(4), b in square(4)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(det(&ab).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn unimodular_solve_round_trip(m in unimodular(5), b in prop::collection::vec(rational(), 5)) {
        let d = det(&m).unwrap();
        prop_assert!(d == int(1) || d == int(-1));
        let x = solve(&m, &b).unwrap();
        prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
        let inv = m.inverse().unwrap();
        prop_assert!(inv.is_integral());
        prop_assert_eq!(inv.mul(&m).unwrap(), QMatrix::identity(5));
    }

    #[test]
    fn affine_eval_is_affine(
        c0 in rational(), c in prop::collection::vec(rational(), 3),
        x in prop::collection::vec(rational(), 3), y in prop::collection::vec(rational(), 3),
        t in rational(),
    ) {
        let space = ParamSpace::new(&["x", "y", "z"]).unwrap();
        let f = AffineForm::from_parts(c0, &c);
        let bind = |v: &[Rational]| -> BTreeMap<String, Rational> {
            space.names().iter().cloned().zip(v.iter().cloned()).collect()
        };
        let mix: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| &t * a + (int(1) - &t) * b).collect();
        let lhs = affine_eval(&f, &space, &bind(&mix)).unwrap();
        let rhs = &t * affine_eval(&f, &space, &bind(&x)).unwrap()
            + (int(1) - &t) * affine_eval(&f, &space, &bind(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn todd_is_multiplicative(
        x in prop::collection::vec(rational(), 0..4),
        y in prop::collection::vec(rational(), 0..4),
    ) {
        let xy: Vec<Rational> = x.iter().chain(&y).cloned().collect();
        for d in 0..=5 {
            let split: Rational = (0..=d).map(|i| todd_eval(&x, i) * todd_eval(&y, d - i)).sum();
            prop_assert_eq!(split, todd_eval(&xy, d));
        }
    }

    #[test]
    fn todd_is_homogeneous(x in prop::collection::vec(rational(), 1..4), c in rational(), d in 0usize..5) {
        let scaled: Vec<Rational> = x.iter().map(|w| w * &c).collect();
        prop_assert_eq!(todd_eval(&scaled, d), todd_eval(&x, d) * chow_obstruct::exact_math::pow(&c, d));
    }

    #[test]
    fn lattice_count_matches_brute_force(
        rows in prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -3i64..=0), 1..6),
        dim in 1usize..=3,
        k in 1u32..=3,
    ) {
        // a box keeps every random polytope bounded
        let mut ineqs: Vec<Inequality> = rows
            .into_iter()
            .map(|(n, o)| Inequality { normal: n[..dim].to_vec(), offset: o })
            .collect();
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 1;
            ineqs.push(Inequality { normal: e.clone(), offset: -2 });
            e[i] = -1;
            ineqs.push(Inequality { normal: e, offset: -2 });
        }
        let q = DualPolytope::new(dim, ineqs).unwrap();
        let bound = 2 * k as i64;
        let mut brute = 0u64;
        let mut u = vec![-bound; dim];
        loop {
            if q.contains(&u, k as i64) {
                brute += 1;
            }
            let mut i = 0;
            while i < dim && u[i] == bound {
                u[i] = -bound;
                i += 1;
            }
            if i == dim {
                break;
            }
            u[i] += 1;
        }
        prop_assert_eq!(count_lattice_points(&q, k).unwrap(), brute);
    }

    #[test]
    fn futaki_invariants_ignore_the_lift(c in rational()) {
        let r = report(&build(catalog::p1xp1()), 0);
        prop_assert!(lift_shift_check(&r.a, &r.b, &c).unwrap());
    }
}

#[test]
fn scale_covariance_on_small_fans() {
    for ex in [catalog::cp1(), catalog::cp2(), catalog::p1xp1()] {
        let b = build(ex);
        let r = report(&b, 0);
        for c in [rat(3, 1), rat(-1, 2), rat(7, 5)] {
            let scaled = common::Built {
                fan: b.fan.clone(),
                lambda: b.lambda.scaled(&c),
            };
            let s = report(&scaled, 4);
            assert_eq!(s.a, r.a);
            for (x, y) in s.b.iter().zip(&r.b) {
                assert_eq!(*x, y.scale(&c));
            }
            for (x, y) in s.futaki.iter().zip(&r.futaki) {
                assert_eq!(*x, y.scale(&c));
            }
        }
        let flipped = common::Built {
            fan: b.fan.clone(),
            lambda: b.lambda.negated(),
        };
        assert_eq!(
            report(&flipped, 0).b,
            r.b.iter().map(|f| -f.clone()).collect::<Vec<_>>()
        );
    }
}

#[test]
fn a_is_sample_independent_and_todd_genus_is_one() {
    for ex in catalog::all() {
        let b = build(ex);
        let fps = tangent_weights(&b.fan, &b.lambda).unwrap();
        let n = b.fan.dim();
        let mut seen: Option<Vec<Rational>> = None;
        for seed in [0, 1, 2] {
            let plan = make_sample_plan(&fps, b.lambda.params(), b.lambda.params().len() + 3, seed)
                .unwrap();
            let loc = Localization::new(&b.fan, &b.lambda, plan).unwrap();
            let a: Vec<Rational> = (0..=n).map(|l| compute_a(&loc, l).unwrap()).collect();
            assert_eq!(a[n], int(1));
            if let Some(prev) = &seen {
                assert_eq!(prev, &a);
            }
            seen = Some(a);
        }
    }
}

#[test]
fn chow_weight_expands_in_futaki_invariants() {
    // Chow(k) = (a_0 / (k χ(k))) Σ_ℓ F_ℓ k^{n+1-ℓ}
    let b = build(catalog::nill_paffenholz_7fold());
    let r = report(&b, 0);
    let f = all_futaki(&r.a, &r.b).unwrap();
    let point: Vec<Rational> = [1, 0, 0, 0, 0, 0, 0].iter().map(|&v| int(v)).collect();
    for k in 1..=4u32 {
        let kr = int(k.into());
        let chi: Rational =
            r.a.iter()
                .enumerate()
                .map(|(l, al)| al * chow_obstruct::exact_math::pow(&kr, r.n - l))
                .sum();
        let series: Rational = f
            .iter()
            .enumerate()
            .map(|(i, fl)| fl.eval(&point).unwrap() * chow_obstruct::exact_math::pow(&kr, r.n - i))
            .sum();
        let want = &r.a[0] / (&kr * chi) * series;
        assert_eq!(chow_weight(&r.a, &r.b, k, &point).unwrap(), want);
    }
}
