//! File schemas, command bodies and output emission.
//!
//! All outputs are deterministic byte streams: struct-field order is fixed,
//! collections are sorted, and every rational prints in canonical lowest
//! terms. Every written file is re-read and schema-checked before exit.

use crate::svg;
use crate::{Failure, RunFlags};
use ramify_core::arith::form3::Form3;
use ramify_core::arith::rat::Rat;
use ramify_core::error::DegeneracyReport;
use ramify_core::fano::{FanoError, RamificationPoint, ThreefoldPoint, V1Model, V1Report};
use ramify_core::fibration::{
    DoubleCoverSurface, EllipticFibration, GeneratedPoint, GenerationReport, Multisection,
    MultisectionSource, SixLineRun,
};
use ramify_core::json::{poly1_to_value, poly2_from_value, rat_from_value, rat_value};
use ramify_core::plane::{PlaneCurve, ProjLine, SingularityKind};
use serde_json::{json, Value};
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{} is not valid JSON: {e}", path.display())))
}

pub fn read_curve_file(path: &Path) -> Result<PlaneCurve, Failure> {
    let value = read_json(path)?;
    let monomials = match &value {
        Value::Array(_) => &value,
        Value::Object(map) => map.get("curve").ok_or_else(|| {
            Failure::input("curve file must be a monomial array or {\"curve\": [...]}")
        })?,
        _ => return Err(Failure::input("curve file must be a monomial array")),
    };
    let poly = poly2_from_value(monomials).map_err(Failure::input)?;
    PlaneCurve::new(poly).map_err(|e| Failure::input(e.to_string()))
}

pub fn read_fibration_input(path: &Path) -> Result<(DoubleCoverSurface, (Rat, Rat)), Failure> {
    let value = read_json(path)?;
    let obj = value.as_object().ok_or_else(|| {
        Failure::input("expected {\"curve\": [...], \"base_point\": [\"x\",\"y\"]}")
    })?;
    let curve = poly2_from_value(
        obj.get("curve")
            .ok_or_else(|| Failure::input("missing \"curve\""))?,
    )
    .map_err(Failure::input)?;
    let bp = obj
        .get("base_point")
        .and_then(|v| v.as_array())
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Failure::input("missing \"base_point\": [\"x\", \"y\"]"))?;
    let base = (
        rat_from_value(&bp[0]).map_err(Failure::input)?,
        rat_from_value(&bp[1]).map_err(Failure::input)?,
    );
    let curve = PlaneCurve::new(curve).map_err(|e| Failure::input(e.to_string()))?;
    let surface = DoubleCoverSurface::new(curve)?;
    Ok((surface, base))
}

pub fn read_lines_file(path: &Path) -> Result<Vec<ProjLine>, Failure> {
    let value = read_json(path)?;
    let rows = value
        .as_array()
        .ok_or_else(|| Failure::input("lines file must be an array of [\"a\",\"b\",\"c\"]"))?;
    let mut out = Vec::new();
    for row in rows {
        let triple = row
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Failure::input("each line must be [\"a\",\"b\",\"c\"]"))?;
        let a = rat_from_value(&triple[0]).map_err(Failure::input)?;
        let b = rat_from_value(&triple[1]).map_err(Failure::input)?;
        let c = rat_from_value(&triple[2]).map_err(Failure::input)?;
        out.push(ProjLine::new(a, b, c).map_err(|e| Failure::input(e.to_string()))?);
    }
    Ok(out)
}

fn form_from_value(v: &Value, degree: u32) -> Result<Form3, Failure> {
    let chart = poly2_from_value(v).map_err(Failure::input)?;
    Form3::homogenize(&chart, degree).map_err(Failure::input)
}

pub fn read_model_file(path: &Path) -> Result<(V1Model, RamificationPoint), Failure> {
    let value = read_json(path)?;
    let obj = value.as_object().ok_or_else(|| {
        Failure::input("model file must be {\"c\", \"q2\", \"q4\", \"q6\", \"p\"}")
    })?;
    let c = rat_from_value(
        obj.get("c")
            .ok_or_else(|| Failure::input("missing \"c\""))?,
    )
    .map_err(Failure::input)?;
    let q2 = form_from_value(obj.get("q2").unwrap_or(&json!([])), 2)?;
    let q4 = form_from_value(obj.get("q4").unwrap_or(&json!([])), 4)?;
    let q6 = form_from_value(obj.get("q6").unwrap_or(&json!([])), 6)?;
    let model = V1Model::new(c, q2, q4, q6).map_err(fano_failure)?;
    let p = obj
        .get("p")
        .ok_or_else(|| Failure::input("missing \"p\": {\"x\": [...], \"z\"}"))?;
    let px = p
        .get("x")
        .and_then(|v| v.as_array())
        .filter(|a| a.len() == 3)
        .ok_or_else(|| Failure::input("point needs \"x\": [\"x0\",\"x1\",\"x2\"]"))?;
    let x = [
        rat_from_value(&px[0]).map_err(Failure::input)?,
        rat_from_value(&px[1]).map_err(Failure::input)?,
        rat_from_value(&px[2]).map_err(Failure::input)?,
    ];
    let z = rat_from_value(
        p.get("z")
            .ok_or_else(|| Failure::input("point needs \"z\""))?,
    )
    .map_err(Failure::input)?;
    let point = RamificationPoint::new(x, z);
    if !model.on_ramification(&point) {
        return Err(Failure::input("p does not lie on the ramification divisor"));
    }
    Ok((model, point))
}

pub fn write_model_file(
    path: &Path,
    model: &V1Model,
    p: &RamificationPoint,
) -> Result<(), Failure> {
    let form_value = |f: &Form3| ramify_core::json::poly2_to_value(&f.dehomogenize());
    let out = json!({
        "c": rat_value(model.c()),
        "q2": form_value(model.q2()),
        "q4": form_value(model.q4()),
        "q6": form_value(model.q6()),
        "p": {
            "x": [rat_value(&p.x[0]), rat_value(&p.x[1]), rat_value(&p.x[2])],
            "z": rat_value(&p.z),
        },
    });
    let text = format!(
        "{}\n",
        serde_json::to_string_pretty(&out).expect("serializes")
    );
    std::fs::write(path, &text)
        .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    // self-validation: the written model must parse back to the same data
    let (back, back_p) = read_model_file(path)?;
    if back.c() != model.c()
        || back.q2() != model.q2()
        || back.q4() != model.q4()
        || back.q6() != model.q6()
        || back_p != *p
    {
        return Err(Failure::input("model file does not round-trip"));
    }
    Ok(())
}

pub fn fano_failure(e: FanoError) -> Failure {
    match e {
        FanoError::Degenerate(report) => Failure {
            code: 3,
            message: report.to_string(),
            degeneracy: Some(serde_json::to_value(&report).expect("report serializes")),
        },
        other => Failure {
            code: 2,
            message: other.to_string(),
            degeneracy: None,
        },
    }
}

/// Write text to --out or stdout, then self-validate the written file.
fn write_output(
    flags: &RunFlags,
    text: &str,
    validate: impl Fn(&str) -> Result<(), String>,
) -> Result<(), Failure> {
    validate(text).map_err(|e| Failure::input(format!("output failed self-validation: {e}")))?;
    match &flags.out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::input(format!("cannot write to stdout: {e}")))?;
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
            let back = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot re-read {}: {e}", path.display())))?;
            if back != text {
                return Err(Failure::input("written file does not round-trip"));
            }
            Ok(())
        }
    }
}

fn validate_json_lines(text: &str) -> Result<(), String> {
    for (n, line) in text.lines().enumerate() {
        serde_json::from_str::<Value>(line).map_err(|e| format!("line {}: {e}", n + 1))?;
    }
    Ok(())
}

fn validate_json(text: &str) -> Result<(), String> {
    serde_json::from_str::<Value>(text)
        .map(|_| ())
        .map_err(|e| e.to_string())
}

pub fn cmd_analyze_curve(input: &Path, flags: &RunFlags) -> Result<ExitCode, Failure> {
    let curve = read_curve_file(input)?;
    if !curve.is_reduced() {
        let report = DegeneracyReport::MultipleComponents;
        return Err(Failure {
            code: 3,
            message: report.to_string(),
            degeneracy: Some(serde_json::to_value(&report).expect("report serializes")),
        });
    }
    let (singular, nonrational) = curve
        .rational_singular_points()
        .map_err(|e| Failure::input(e.to_string()))?;
    let kind_str = |k: SingularityKind| match k {
        SingularityKind::NodeSplit => "node_split",
        SingularityKind::NodeNonSplit => "node_nonsplit",
        SingularityKind::CuspLike => "cusp_like",
        SingularityKind::Higher => "higher",
    };
    let pts: Vec<Value> = singular
        .iter()
        .map(|rep| {
            let lines: Vec<Value> = rep
                .tangent_lines
                .iter()
                .map(|(l, m)| {
                    let (a, b, c) = l.coefficients();
                    json!({ "line": [rat_value(&a), rat_value(&b), rat_value(&c)], "multiplicity": m })
                })
                .collect();
            json!({
                "point": [rat_value(&rep.point.0), rat_value(&rep.point.1)],
                "multiplicity": rep.multiplicity,
                "kind": kind_str(rep.kind),
                "tangent_lines": lines,
                "residual_degree": rep.residual_degree,
            })
        })
        .collect();
    let out = json!({
        "degree": curve.degree(),
        "reduced": curve.is_reduced(),
        "singular_points": pts,
        "nonrational_singularities_possible": nonrational,
    });
    write_output(
        flags,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&out).expect("serializes")
        ),
        validate_json,
    )?;
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_six_lines(input: &Path, flags: &RunFlags) -> Result<ExitCode, Failure> {
    let lines = read_lines_file(input)?;
    let analysis = ramify_core::plane::six_lines_analysis(&lines).map_err(|e| {
        if matches!(e, ramify_core::error::CurveError::DuplicateLines) {
            let report = DegeneracyReport::MultipleComponents;
            Failure {
                code: 3,
                message: report.to_string(),
                degeneracy: Some(serde_json::to_value(&report).expect("report serializes")),
            }
        } else {
            Failure::input(e.to_string())
        }
    })?;
    let pts: Vec<Value> = analysis
        .iter()
        .map(|(p, m)| {
            let (x, y, z) = p.coords();
            json!({
                "point": [x.to_string(), y.to_string(), z.to_string()],
                "multiplicity": m,
            })
        })
        .collect();
    let doubles = analysis.iter().filter(|(_, m)| *m == 2).count();
    let triples = analysis.iter().filter(|(_, m)| *m == 3).count();
    let out = json!({
        "points": pts,
        "double_points": doubles,
        "triple_points": triples,
    });
    write_output(
        flags,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&out).expect("serializes")
        ),
        validate_json,
    )?;
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_build_fibration(input: &Path, flags: &RunFlags) -> Result<ExitCode, Failure> {
    let (surface, base) = read_fibration_input(input)?;
    let fib = ramify_core::fibration::build_fibration(surface, base)?;
    let out = fibration_to_value(&fib)?;
    write_output(
        flags,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&out).expect("serializes")
        ),
        validate_json,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn fibration_to_value(fib: &EllipticFibration) -> Result<Value, Failure> {
    let degenerate_ts = ramify_core::arith::roots::rational_roots(fib.disc_t())
        .map_err(|e| Failure::input(e.to_string()))?;
    Ok(json!({
        "base_point": [rat_value(&fib.base_point().0), rat_value(&fib.base_point().1)],
        "generic_fiber": fib.generic_fiber().iter().map(poly1_to_value).collect::<Vec<_>>(),
        "disc_t": poly1_to_value(fib.disc_t()),
        "degenerate_fiber_parameters": degenerate_ts
            .roots
            .iter()
            .map(|(t, _)| rat_value(t))
            .collect::<Vec<_>>(),
    }))
}

fn multisection_to_value(fib: &EllipticFibration, ms: &Multisection, index: usize) -> Value {
    let (a, b, c) = ms.line.coefficients();
    // Jacobian model of the witness fiber: a diagnostic for the tangency
    // fiber's curve class, available even before any rational point is found
    let witness_jacobian =
        ramify_core::elliptic::jacobian_invariants(&fib.fiber_at(&ms.witness_t).quartic)
            .ok()
            .map(|e| serde_json::to_value(&e).expect("curve serializes"))
            .unwrap_or(Value::Null);
    let source = match &ms.source {
        MultisectionSource::Tangent { r, r_prime } => json!({
            "kind": "tangent",
            "r": [rat_value(&r.0), rat_value(&r.1)],
            "r_prime": [rat_value(&r_prime.0), rat_value(&r_prime.1)],
        }),
        MultisectionSource::SecondPencil { q, crossing } => {
            let (x, y, z) = q.coords();
            json!({
                "kind": "second_pencil",
                "q": [x.to_string(), y.to_string(), z.to_string()],
                "crossing": [rat_value(&crossing.0), rat_value(&crossing.1)],
            })
        }
    };
    json!({
        "index": index,
        "line": [rat_value(&a), rat_value(&b), rat_value(&c)],
        "model": poly1_to_value(ms.model.quartic()),
        "witness_t": rat_value(&ms.witness_t),
        "witness_point": [rat_value(&ms.witness_point.0), rat_value(&ms.witness_point.1)],
        "witness_fiber_jacobian": witness_jacobian,
        "source": source,
    })
}

pub fn emit_multisections(
    fib: &EllipticFibration,
    found: &[Multisection],
    search_height: u32,
    flags: &RunFlags,
) -> Result<ExitCode, Failure> {
    let out = json!({
        "search_height": search_height,
        "count": found.len(),
        "multisections": found
            .iter()
            .enumerate()
            .map(|(i, ms)| multisection_to_value(fib, ms, i))
            .collect::<Vec<_>>(),
    });
    write_output(
        flags,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&out).expect("serializes")
        ),
        validate_json,
    )?;
    Ok(ExitCode::SUCCESS)
}

pub fn emit_no_multisection(search_height: u32, flags: &RunFlags) -> Result<ExitCode, Failure> {
    let out = json!({
        "search_height": search_height,
        "count": 0,
        "multisections": [],
        "status": "none found below height",
    });
    write_output(
        flags,
        &format!("{}\n", serde_json::to_string(&out).expect("serializes")),
        validate_json,
    )?;
    Ok(ExitCode::SUCCESS)
}

pub fn emit_surface_points(
    points: &[GeneratedPoint],
    report: &GenerationReport,
    flags: &RunFlags,
) -> Result<ExitCode, Failure> {
    let mut text = String::new();
    for p in points {
        text.push_str(&serde_json::to_string(p).expect("point serializes"));
        text.push('\n');
    }
    text.push_str(&format!(
        "{}\n",
        serde_json::to_string(&json!({ "report": report })).expect("report serializes")
    ));
    write_output(flags, &text, validate_json_lines)?;
    if let Some(svg_path) = &flags.svg {
        let doc = svg::fiber_scatter(points.iter().map(|p| &p.t));
        std::fs::write(svg_path, doc)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", svg_path.display())))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn emit_six_line_run(run: &SixLineRun, flags: &RunFlags) -> Result<ExitCode, Failure> {
    let mut text = String::new();
    for p in &run.points {
        text.push_str(&serde_json::to_string(p).expect("point serializes"));
        text.push('\n');
    }
    let (sx, sy, sz) = run.second_point.coords();
    let tail = json!({
        "report": run.report,
        "base_point": [rat_value(&run.base_point.0), rat_value(&run.base_point.1)],
        "second_point": [sx.to_string(), sy.to_string(), sz.to_string()],
        "multisections": run.multisections.len(),
    });
    text.push_str(&format!(
        "{}\n",
        serde_json::to_string(&tail).expect("serializes")
    ));
    write_output(flags, &text, validate_json_lines)?;
    if let Some(svg_path) = &flags.svg {
        let doc = svg::fiber_scatter(run.points.iter().map(|p| &p.t));
        std::fs::write(svg_path, doc)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", svg_path.display())))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn emit_threefold_points(
    points: &[ThreefoldPoint],
    report: &V1Report,
    flags: &RunFlags,
) -> Result<ExitCode, Failure> {
    let mut text = String::new();
    for p in points {
        text.push_str(&serde_json::to_string(p).expect("point serializes"));
        text.push('\n');
    }
    text.push_str(&format!(
        "{}\n",
        serde_json::to_string(&json!({ "report": report })).expect("report serializes")
    ));
    write_output(flags, &text, validate_json_lines)?;
    if let Some(svg_path) = &flags.svg {
        let doc = svg::fiber_scatter(points.iter().map(|p| &p.t));
        std::fs::write(svg_path, doc)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", svg_path.display())))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn cmd_verify(
    input: &Path,
    curve: Option<&Path>,
    model: Option<&Path>,
) -> Result<ExitCode, Failure> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", input.display())))?;
    let curve = curve.map(read_curve_file).transpose()?;
    let model = model.map(read_model_file).transpose()?;
    if curve.is_none() && model.is_none() {
        return Err(Failure::input("verify needs --curve or --model"));
    }
    let mut checked = 0usize;
    let mut violations = 0usize;
    for (n, line) in text.lines().enumerate() {
        let value: Value = serde_json::from_str(line)
            .map_err(|e| Failure::input(format!("line {}: {e}", n + 1)))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Failure::input(format!("line {}: not an object", n + 1)))?;
        if obj.contains_key("report") {
            continue;
        }
        if obj.contains_key("x0") {
            let (model, _) = model
                .as_ref()
                .ok_or_else(|| Failure::input("threefold points need --model"))?;
            let p: ThreefoldPoint = serde_json::from_value(value.clone())
                .map_err(|e| Failure::input(format!("line {}: {e}", n + 1)))?;
            checked += 1;
            if !model.contains(&[p.x0.clone(), p.x1.clone(), p.x2.clone()], &p.z, &p.w) {
                violations += 1;
                eprintln!("line {}: threefold equation violated", n + 1);
            }
        } else if obj.contains_key("w") {
            let curve = curve
                .as_ref()
                .ok_or_else(|| Failure::input("surface points need --curve"))?;
            let p: GeneratedPoint = serde_json::from_value(value.clone())
                .map_err(|e| Failure::input(format!("line {}: {e}", n + 1)))?;
            checked += 1;
            if &p.w * &p.w != curve.equation().eval(&p.x, &p.y) {
                violations += 1;
                eprintln!("line {}: surface equation violated", n + 1);
            }
        } else {
            return Err(Failure::input(format!(
                "line {}: unrecognized point schema",
                n + 1
            )));
        }
    }
    println!(
        "{}",
        json!({ "checked": checked, "violations": violations })
    );
    if violations > 0 {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
