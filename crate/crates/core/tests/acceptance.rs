//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::time::Instant;

use chow_obstruct::catalog::{self, Example};
use chow_obstruct::exact_math::{int, rat, AffineForm, ParamSpace, Rational};
use chow_obstruct::invariants::{
    obstruction_report, theorem_main_ratio, verify_ehrhart, verify_lift_shift, InvariantReport,
    Quantity,
};
use chow_obstruct::localization::{
    compute_a, compute_b, make_sample_plan, resolve_lambda, tangent_weights, todd_eval, Lambda,
    Localization,
};
use chow_obstruct::toric_fan::Fan;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Case {
    fan: Fan,
    lambda: Lambda,
    report: InvariantReport,
}

fn build(ex: Example) -> Case {
    let fan = Fan::new(ex.polytope).unwrap();
    let lambda = resolve_lambda(&ex.lambda, &fan).unwrap();
    let report = report_for(&fan, &lambda, 0);
    Case {
        fan,
        lambda,
        report,
    }
}

fn report_for(fan: &Fan, lambda: &Lambda, seed: u64) -> InvariantReport {
    let points = tangent_weights(fan, lambda).unwrap();
    let plan = make_sample_plan(&points, lambda.params(), lambda.params().len() + 4, seed).unwrap();
    obstruction_report(fan, lambda, plan).unwrap()
}

fn s_form(params: &ParamSpace) -> AffineForm {
    params
        .parse_form("alpha1 + alpha2 + alpha3 - beta1 - beta2 - beta3 - 2*gamma")
        .unwrap()
}

/// `c·s` when the form is a multiple of `s`, the full form otherwise.
fn in_terms_of_s(form: &AffineForm, params: &ParamSpace) -> String {
    let c = form.coefficient(0);
    if *form == s_form(params).scale(&c) {
        format!("{c}·s")
    } else {
        form.display(params)
    }
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let fan = Fan::new(catalog::nill_paffenholz_7fold().polytope).unwrap();
    let unimodular = fan.cones().iter().filter(|c| c.is_unimodular()).count();
    outcome(
        fan.cones().len() == 64 && unimodular == 64 && fan.is_smooth(),
        format!(
            "{} maximal cones, {} unimodular",
            fan.cones().len(),
            unimodular
        ),
    )
}

fn criterion_2(seven: &Case) -> Outcome {
    let volume = Rational::from_integer(5040.into()) * &seven.report.a[0];
    outcome(
        volume == int(13047715),
        format!("7!·a_0 = {volume}, expected 13047715"),
    )
}

fn criterion_3(seven: &Case, cp1: &Case, cp2: &Case) -> Outcome {
    let zero = [seven, cp1, cp2].iter().all(|c| c.report.b[0].is_zero());
    outcome(zero, "b_0 on nill-paffenholz-7fold, cp1, cp2")
}

fn criterion_4(seven: &Case) -> Outcome {
    let s = s_form(&seven.report.params);
    let expected = [
        (2, rat(68, 45)),
        (3, rat(68, 15)),
        (4, rat(49, 9)),
        (5, rat(10, 3)),
        (6, rat(214, 315)),
        (7, rat(2, 15)),
    ];
    let mut bad = Vec::new();
    for (l, c) in expected {
        let got = &seven.report.b[l];
        if *got != s.scale(&c) {
            bad.push(format!(
                "b_{l} = {}, expected {c}·s",
                in_terms_of_s(got, &seven.report.params)
            ));
        }
    }
    let detail = if bad.is_empty() {
        "b_2..b_7 match".to_string()
    } else {
        bad.join("; ")
    };
    outcome(bad.is_empty(), detail)
}

fn criterion_5(seven: &Case) -> Outcome {
    let s = s_form(&seven.report.params);
    let expected = [
        (2, rat(7616, 13047715)),
        (3, rat(22848, 13047715)),
        (4, rat(5488, 2609543)),
        (5, rat(3360, 2609543)),
        (6, rat(3424, 13047715)),
        (7, rat(672, 13047715)),
    ];
    let mut bad = Vec::new();
    for (l, c) in expected {
        let got = seven.report.futaki(l);
        if *got != s.scale(&c) {
            bad.push(format!(
                "F_{l} = {}, expected {c}·s",
                in_terms_of_s(got, &seven.report.params)
            ));
        }
    }
    if !seven.report.obstructed {
        bad.push("not obstructed".into());
    }
    let detail = if bad.is_empty() {
        "F_2..F_7 match, obstructed".to_string()
    } else {
        bad.join("; ")
    };
    outcome(bad.is_empty(), detail)
}

fn criterion_6(cases: &[(&str, &Case)]) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, case) in cases {
        let v = case.report.verification("bl1").unwrap();
        count += v.witnesses.len();
        if !v.passed {
            bad.push(name.to_string());
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} sample comparisons; failing: {bad:?}"),
    )
}

fn criterion_7(cases: &[(&str, &Case)]) -> Outcome {
    let mut bad = Vec::new();
    let mut notes = Vec::new();
    for (name, case) in cases {
        let v = case.report.verification("theorem_main").unwrap();
        let expected = theorem_main_ratio(case.report.n);
        if !v.passed {
            bad.push(name.to_string());
        }
        notes.push(format!("{name}: ratio {expected} ({})", v.notes.join("; ")));
    }
    outcome(bad.is_empty(), notes.join(" | "))
}

fn criterion_8(cases: &[(&str, &Case)]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bad = Vec::new();
    for (name, case) in cases {
        let r = &case.report;
        let shifts: Vec<Rational> = (0..5)
            .map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=9)))
            .collect();
        if !verify_lift_shift(&r.a, &r.b, &shifts).unwrap().passed {
            bad.push(format!("{name}: lift shift"));
        }
        if r.a[r.n] != int(1) {
            bad.push(format!("{name}: a_n = {}", r.a[r.n]));
        }
        let c = rat(-5, 3);
        let scaled = report_for(&case.fan, &case.lambda.scaled(&c), 3);
        if scaled.a != r.a {
            bad.push(format!("{name}: a changed under scaling"));
        }
        for (x, y) in scaled.b.iter().zip(&r.b) {
            if *x != y.scale(&c) {
                bad.push(format!("{name}: b not covariant"));
            }
        }
        for (x, y) in scaled.futaki.iter().zip(&r.futaki) {
            if *x != y.scale(&c) {
                bad.push(format!("{name}: F not covariant"));
            }
        }
        // every sample gives the same a_ℓ; compute_a errors otherwise
        let points = tangent_weights(&case.fan, &case.lambda).unwrap();
        let plan = make_sample_plan(
            &points,
            case.lambda.params(),
            case.lambda.params().len() + 8,
            11,
        )
        .unwrap();
        let loc = Localization::new(&case.fan, &case.lambda, plan).unwrap();
        for l in 0..=r.n {
            match compute_a(&loc, l) {
                Ok(v) if v == r.a[l] => {}
                other => bad.push(format!("{name}: a_{l} sample dependent: {other:?}")),
            }
        }
        let _ = compute_b(&loc, 1).unwrap();
    }
    for trial in 0..20 {
        let len_x = rng.gen_range(0..4);
        let len_y = rng.gen_range(0..4);
        let draw = |rng: &mut ChaCha8Rng, len| -> Vec<Rational> {
            (0..len)
                .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                .collect()
        };
        let x = draw(&mut rng, len_x);
        let y = draw(&mut rng, len_y);
        let xy: Vec<Rational> = x.iter().chain(&y).cloned().collect();
        for d in 0..=4 {
            let split: Rational = (0..=d)
                .map(|i| todd_eval(&x, i) * todd_eval(&y, d - i))
                .sum();
            if split != todd_eval(&xy, d) {
                bad.push(format!("Todd multiplicativity trial {trial} degree {d}"));
            }
        }
    }
    let detail = if bad.is_empty() {
        "lift shift, scale covariance, Todd multiplicativity, a_n = 1, sample independence"
            .to_string()
    } else {
        bad.join("; ")
    };
    outcome(bad.is_empty(), detail)
}

fn criterion_9(cases: &[(&str, &Case)]) -> Outcome {
    let mut bad = Vec::new();
    let mut counts = Vec::new();
    for (name, case) in cases {
        let v = verify_ehrhart(&case.fan, &case.report.a, 2).unwrap();
        if !v.passed {
            bad.push(name.to_string());
        }
        counts.push(format!(
            "{name}: {}",
            v.witnesses
                .iter()
                .map(|w| match &w.rhs {
                    Quantity::Number(count) => format!("{} {count}", w.label),
                    Quantity::Form(_) => unreachable!(),
                })
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    outcome(bad.is_empty(), counts.join(" | "))
}

fn main() {
    let start = Instant::now();
    let seven = build(catalog::nill_paffenholz_7fold());
    let cp1 = build(catalog::cp1());
    let cp2 = build(catalog::cp2());
    let p1xp1 = build(catalog::p1xp1());
    let shipped = [
        ("cp1", &cp1),
        ("cp2", &cp2),
        ("p1xp1", &p1xp1),
        ("nill-paffenholz-7fold", &seven),
    ];
    let theorem_cases = [
        ("cp1", &cp1),
        ("cp2", &cp2),
        ("nill-paffenholz-7fold", &seven),
    ];

    let results = [
        criterion_1(),
        criterion_2(&seven),
        criterion_3(&seven, &cp1, &cp2),
        criterion_4(&seven),
        criterion_5(&seven),
        criterion_6(&shipped),
        criterion_7(&theorem_cases),
        criterion_8(&shipped),
        criterion_9(&shipped),
    ];
    let mut failed = 0;
    for (i, r) in results.iter().enumerate() {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {tag}: {}", i + 1, r.detail);
        failed += usize::from(!r.passed);
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        results.len() - failed,
        results.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
