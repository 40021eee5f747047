use std::fmt::Write;

use chow_obstruct::exact_math::{format_rational, AffineForm, ParamSpace, Rational};
use chow_obstruct::invariants::{Quantity, Verification};
use serde_json::{json, Value};

use crate::run::{CliError, Command, Report};
use crate::SCHEMA;

fn form(f: &AffineForm, space: &ParamSpace) -> Value {
    serde_json::to_value(f.named(space)).expect("forms serialize")
}

fn number(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn quantity(q: &Quantity, space: &ParamSpace) -> Value {
    match q {
        Quantity::Number(r) => number(r),
        Quantity::Form(f) => form(f, space),
    }
}

fn verification(v: &Verification, space: &ParamSpace) -> Value {
    let failures: Vec<Value> = v
        .failures()
        .map(|w| json!({"label": w.label, "lhs": quantity(&w.lhs, space), "rhs": quantity(&w.rhs, space)}))
        .collect();
    json!({
        "name": v.name,
        "passed": v.passed,
        "checked": v.witnesses.len(),
        "failures": failures,
        "notes": v.notes,
    })
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

pub fn render_json(r: &Report) -> String {
    let space = r.job.params();
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    doc.insert("command".into(), json!(r.command.name()));
    doc.insert(
        "input".into(),
        json!({
            "dim": r.fan.dim(),
            "vertices": r.fan.polytope().vertices(),
            "params": space.names(),
            "seed": r.job.options.seed,
            "samples": r.job.sample_count(),
            "flip_sign": r.job.options.flip_sign,
            "ehrhart_kmax": r.job.options.ehrhart_kmax,
        }),
    );
    let cones: Vec<Value> = r
        .fan
        .cones()
        .iter()
        .map(|c| json!({"vertices": one_based(c.vertex_indices()), "det": number(&c.det())}))
        .collect();
    doc.insert(
        "fan".into(),
        json!({"cone_count": cones.len(), "smooth": r.fan.is_smooth(), "cones": cones}),
    );
    if let Some(lambda) = &r.lambda {
        if matches!(r.command, Command::Weights | Command::All) {
            let points: Vec<Value> = r
                .fixed_points
                .iter()
                .map(|fp| {
                    json!({
                        "cone": one_based(&fp.vertex_indices),
                        "tangent_weights": fp.tangent_weights.iter().map(|w| form(w, space)).collect::<Vec<_>>(),
                        "line_weight": form(&fp.line_weight, space),
                    })
                })
                .collect();
            doc.insert(
                "weights".into(),
                json!({
                    "lambda": lambda.coords().iter().map(|c| form(c, space)).collect::<Vec<_>>(),
                    "fixed_points": points,
                }),
            );
        }
    }
    if let (Some(inv), Some(plan)) = (&r.invariants, &r.plan) {
        let samples: Vec<Vec<Value>> = plan.all().map(|p| p.iter().map(number).collect()).collect();
        doc.insert(
            "invariants".into(),
            json!({
                "samples": samples,
                "a": inv.a.iter().map(number).collect::<Vec<_>>(),
                "b": inv.b.iter().map(|f| form(f, space)).collect::<Vec<_>>(),
                "futaki": inv.futaki.iter().map(|f| form(f, space)).collect::<Vec<_>>(),
                "donaldson_futaki": form(inv.donaldson_futaki(), space),
                "obstructed": inv.obstructed,
            }),
        );
    }
    if !r.verifications.is_empty() {
        doc.insert(
            "verifications".into(),
            Value::Array(
                r.verifications
                    .iter()
                    .map(|v| verification(v, space))
                    .collect(),
            ),
        );
    }
    doc.insert("verified".into(), json!(r.verified()));
    let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("report serializes");
    out.push('\n');
    out
}

pub fn render_text(r: &Report) -> String {
    let space = r.job.params();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "dimension {}, {} vertices",
        r.fan.dim(),
        r.fan.polytope().vertices().len()
    );
    let _ = writeln!(
        out,
        "fan: {} maximal cones, {}",
        r.fan.cones().len(),
        if r.fan.is_smooth() {
            "smooth"
        } else {
            "not smooth"
        }
    );
    if r.command == Command::Fan {
        for c in r.fan.cones() {
            let _ = writeln!(
                out,
                "  cone {:?} det {}",
                one_based(c.vertex_indices()),
                format_rational(&c.det())
            );
        }
    }
    if let Some(lambda) = &r.lambda {
        let coords: Vec<String> = lambda.coords().iter().map(|c| c.display(space)).collect();
        let _ = writeln!(out, "lambda = ({})", coords.join(", "));
        if matches!(r.command, Command::Weights | Command::All) {
            for fp in &r.fixed_points {
                let w: Vec<String> = fp
                    .tangent_weights
                    .iter()
                    .map(|w| w.display(space))
                    .collect();
                let _ = writeln!(
                    out,
                    "  cone {:?}: weights ({}), line {}",
                    one_based(&fp.vertex_indices),
                    w.join(", "),
                    fp.line_weight.display(space)
                );
            }
        }
    }
    if let Some(inv) = &r.invariants {
        for (l, a) in inv.a.iter().enumerate() {
            let _ = writeln!(out, "a_{l} = {}", format_rational(a));
        }
        for (l, b) in inv.b.iter().enumerate() {
            let _ = writeln!(out, "b_{l} = {}", b.display(space));
        }
        for (l, f) in inv.futaki.iter().enumerate() {
            let _ = writeln!(out, "F_{} = {}", l + 1, f.display(space));
        }
        let _ = writeln!(out, "obstructed: {}", inv.obstructed);
    }
    for v in &r.verifications {
        let _ = writeln!(
            out,
            "{}: {} ({} checked)",
            v.name,
            if v.passed { "pass" } else { "FAIL" },
            v.witnesses.len()
        );
        for note in &v.notes {
            let _ = writeln!(out, "  {note}");
        }
        for w in v.failures() {
            let show = |q: &Quantity| match q {
                Quantity::Number(x) => format_rational(x),
                Quantity::Form(f) => f.display(space),
            };
            let _ = writeln!(out, "  {}: {} != {}", w.label, show(&w.lhs), show(&w.rhs));
        }
    }
    out
}

pub fn error_json(e: &CliError) -> String {
    let message = match e {
        CliError::Input(m) | CliError::Internal(m) => m,
    };
    let doc = json!({"schema": SCHEMA, "error": {"kind": e.kind(), "message": message}});
    let mut out = serde_json::to_string_pretty(&doc).expect("error serializes");
    out.push('\n');
    out
}
