//! Report pipeline behind the `sasakian` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use sasakian_core::builtins::{builtin, BUILTINS};
use sasakian_core::formality::{Obstruction, Verdict, HYPOTHESIS};
use sasakian_core::gysin::{obstruction_verdict, total_space_cohomology};
use sasakian_core::lefschetz::{primitive_subspace, LefschetzAnalysis};
use sasakian_core::minimal_model::{
    build_partial_minimal_model, build_sullivan_model, model_cohomology, verify_three_equivalence,
};
use sasakian_core::scalar::{format_literal, parse_literal};
use sasakian_core::{
    parse_algebra, projective_space_named, serialize_algebra, tensor_product, CohomologyClass, Error,
    GradedAlgebra, Scalar,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Analysis {
    Validate,
    HardLefschetz,
    Gysin,
    Obstructions,
    Formality,
    Massey,
    Model,
}

impl Analysis {
    pub const ALL: [Analysis; 7] = [
        Analysis::Validate,
        Analysis::HardLefschetz,
        Analysis::Gysin,
        Analysis::Obstructions,
        Analysis::Formality,
        Analysis::Massey,
        Analysis::Model,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Analysis::Validate => "validate",
            Analysis::HardLefschetz => "hard-lefschetz",
            Analysis::Gysin => "gysin",
            Analysis::Obstructions => "obstructions",
            Analysis::Formality => "formality",
            Analysis::Massey => "massey",
            Analysis::Model => "model",
        }
    }

    pub fn parse(s: &str) -> Option<Analysis> {
        Analysis::ALL.into_iter().find(|a| a.name() == s)
    }
}

/// Comma-separated analysis names, deduplicated and put in pipeline order.
pub fn parse_analyses(list: &str) -> Result<Vec<Analysis>, String> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let a = Analysis::parse(part).ok_or_else(|| {
            let known: Vec<&str> = Analysis::ALL.iter().map(|a| a.name()).collect();
            format!("unknown analysis {part:?} (known: {})", known.join(", "))
        })?;
        out.push(a);
    }
    if out.is_empty() {
        return Err("no analyses requested".into());
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Comma-separated exact coefficients.
pub fn parse_omega(list: &str) -> Result<Vec<Scalar>, String> {
    list.split(',')
        .enumerate()
        .map(|(k, s)| parse_literal(s.trim()).map_err(|e| format!("omega coefficient {}: {e}", k + 1)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Builtin(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: Source,
    pub omega: Option<Vec<Scalar>>,
    pub analyses: Vec<Analysis>,
    pub format: Format,
}

#[derive(Debug)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Value,
    pub rendered: String,
}

/// Builtin names, and products of projective spaces such as `cp1xcp2` or `cp1xcp1xcp1`
/// when no builtin of that name exists. Product factors get generators `a`, `b`, ...
pub fn load_builtin(name: &str) -> Result<GradedAlgebra, Error> {
    if BUILTINS.iter().any(|b| b.name == name) {
        return builtin(name);
    }
    let factors: Vec<usize> = name
        .split('x')
        .map(|f| f.strip_prefix("cp").and_then(|n| n.parse().ok()).filter(|&n| n >= 1))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvalidArgument(format!("unknown builtin {name:?}")))?;
    if factors.len() > 26 {
        return Err(Error::InvalidArgument("too many factors".into()));
    }
    let mut acc: Option<GradedAlgebra> = None;
    for (k, n) in factors.into_iter().enumerate() {
        let gen = ((b'a' + k as u8) as char).to_string();
        let f = projective_space_named(n, &gen)?;
        acc = Some(match acc {
            None => f,
            Some(a) => tensor_product(&a, &f)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument(format!("unknown builtin {name:?}")))
}

fn load(source: &Source) -> Result<GradedAlgebra, String> {
    match source {
        Source::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_algebra(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        Source::Builtin(name) => load_builtin(name).map_err(|e| e.to_string()),
    }
}

fn lit(x: &Scalar) -> Value {
    Value::String(format_literal(x))
}

fn lits(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(lit).collect())
}

fn class_json(a: &GradedAlgebra, c: &CohomologyClass) -> Value {
    json!({ "coords": lits(c.coords()), "expr": a.describe(c) })
}

fn classes_json(a: &GradedAlgebra, cs: &[CohomologyClass]) -> Value {
    Value::Array(cs.iter().map(|c| class_json(a, c)).collect())
}

/// Input digest: SHA-256 of the serialized algebra with the distinguished class attached.
pub fn digest(a: &GradedAlgebra) -> String {
    hex::encode(Sha256::digest(serialize_algebra(a).as_bytes()))
}

enum Section {
    Done(Value),
    Inapplicable(String),
    Invalid(String),
}

fn section_of(r: Result<Value, Error>) -> Section {
    match r {
        Ok(v) => Section::Done(v),
        Err(Error::Inapplicable(m)) => Section::Inapplicable(m),
        Err(e) => Section::Invalid(e.to_string()),
    }
}

fn validate_section(a: &GradedAlgebra) -> Value {
    let r = a.validate();
    json!({
        "valid": r.is_valid(),
        "dims": a.dims(),
        "checks": r.checks,
    })
}

fn lefschetz_section(a: &GradedAlgebra, w: &CohomologyClass) -> Result<Value, Error> {
    let l = LefschetzAnalysis::new(a, w)?;
    let mut v = json!({
        "hard_lefschetz": l.hard_lefschetz,
        "step_ranks": l.step_ranks(),
        "kernel_dims": l.kernel_dims(),
        "cokernel_dims": l.cokernel_dims(),
        "kernels": l.kernels.iter().map(|k| classes_json(a, k)).collect::<Vec<_>>(),
    });
    if l.hard_lefschetz.holds && a.top_degree() == 6 {
        v["primitive_basis"] = classes_json(a, &primitive_subspace(a, w)?.basis);
    }
    Ok(v)
}

fn gysin_section(a: &GradedAlgebra, w: &CohomologyClass) -> Result<Value, Error> {
    let e = total_space_cohomology(a, w)?;
    let degrees: Vec<Value> = e
        .degrees
        .iter()
        .map(|d| {
            json!({
                "degree": d.degree,
                "base_part": classes_json(a, &d.base_part),
                "fiber_part": classes_json(a, &d.fiber_part),
            })
        })
        .collect();
    Ok(json!({ "betti": e.betti, "b3": e.betti[3], "degrees": degrees }))
}

fn obstructions_section(a: &GradedAlgebra, w: &CohomologyClass) -> Result<Value, Error> {
    Ok(serde_json::to_value(obstruction_verdict(a, w)?).expect("serializable"))
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Formal => "formal",
        Verdict::NonFormal => "non-formal",
    }
}

fn formality_section(a: &GradedAlgebra, w: &CohomologyClass) -> Result<Value, Error> {
    let ob = Obstruction::new(a, w)?;
    let r = ob.report();
    let cross = ob.lambda_crosscheck()?;
    let witness = r.witness.map(|k| json!({ "kernel_index": k, "value": lit(&r.values[k]) }));
    Ok(json!({
        "hypothesis": HYPOTHESIS,
        "primitive_basis": classes_json(a, ob.primitive_basis()),
        "dim_p": r.m,
        "dim_kernel": r.kernel.dim(),
        "kernel_basis": r.kernel.basis.iter().map(|v| lits(v)).collect::<Vec<_>>(),
        "sym2_sym2_basis": r.kernel.index.pair_pairs.iter().map(|&(x, y)| {
            let (i, j) = r.kernel.index.pairs[x];
            let (k, l) = r.kernel.index.pairs[y];
            format!("(p{}p{})(p{}p{})", i + 1, j + 1, k + 1, l + 1)
        }).collect::<Vec<_>>(),
        "values": lits(&r.values),
        "verdict": verdict_name(r.verdict),
        "witness": witness,
        "lambda_crosscheck": cross,
    }))
}

fn massey_section(a: &GradedAlgebra, w: &CohomologyClass) -> Result<Value, Error> {
    let ob = Obstruction::new(a, w)?;
    let table = ob.massey_table()?;
    let nonzero: Vec<Value> = table
        .iter()
        .filter(|e| !num_traits::Zero::is_zero(&e.value))
        .map(|e| json!({ "indices": e.indices, "value": lit(&e.value) }))
        .collect();
    Ok(json!({
        "basis": classes_json(a, ob.primitive_basis()),
        "entries_checked": table.len(),
        "nonzero": nonzero,
    }))
}

fn model_section(a: &GradedAlgebra, w: &CohomologyClass) -> Result<Value, Error> {
    let s = build_sullivan_model(a, w)?;
    let cohomology = model_cohomology(&s)?;
    let derivation_ok = s.derivation_failures()?.is_empty();
    let pm = build_partial_minimal_model(a, w)?;
    let eq = verify_three_equivalence(&pm)?;
    let residual_zero = pm.chain_residuals.iter().all(|r| r.iter().all(num_traits::Zero::is_zero));
    Ok(json!({
        "model_cohomology_dims": cohomology.dims,
        "d_squared_zero": s.d_squared_failures()?.is_empty(),
        "derivation_rule": derivation_ok,
        "generators": eq.generators,
        "chain_map_residuals_zero": residual_zero,
        "d_injective_on_n3": eq.d_injective_on_n3,
        "induced_maps": eq.maps,
        "three_equivalence": eq.holds,
    }))
}

/// Runs the requested analyses in pipeline order.
pub fn run(config: &RunConfig) -> Outcome {
    let mut report = serde_json::Map::new();
    report.insert("tool".into(), json!({ "name": "sasakian", "version": VERSION }));
    let fail = |report: serde_json::Map<String, Value>, msg: String, code: i32, format: Format| {
        let mut report = report;
        report.insert("error".into(), Value::String(msg.clone()));
        report.insert("exit_code".into(), json!(code));
        let report = Value::Object(report);
        let rendered = match format {
            Format::Structured => render_structured(&report),
            Format::Text => format!("error: {msg}\n"),
        };
        Outcome { exit_code: code, report, rendered }
    };

    let mut a = match load(&config.source) {
        Ok(a) => a,
        Err(m) => return fail(report, m, EXIT_INVALID, config.format),
    };
    if let Some(w) = &config.omega {
        a = match a.with_omega(Some(w.clone())) {
            Ok(x) => x,
            Err(e) => return fail(report, format!("--omega: {e}"), EXIT_INVALID, config.format),
        };
    }
    report.insert(
        "input".into(),
        json!({
            "source": match &config.source {
                Source::File(p) => format!("file:{}", p.display()),
                Source::Builtin(n) => format!("builtin:{n}"),
            },
            "digest": digest(&a),
            "omega": a.omega().map(|w| class_json(&a, &w)),
        }),
    );

    let mut sections = serde_json::Map::new();
    let mut exit = EXIT_OK;
    let valid = a.validate().is_valid();
    let omega = a.omega();
    for &an in &config.analyses {
        let section = if an == Analysis::Validate {
            Section::Done(validate_section(&a))
        } else if !valid {
            Section::Invalid("algebra failed validation".into())
        } else if let Some(w) = &omega {
            section_of(match an {
                Analysis::HardLefschetz => lefschetz_section(&a, w),
                Analysis::Gysin => gysin_section(&a, w),
                Analysis::Obstructions => obstructions_section(&a, w),
                Analysis::Formality => formality_section(&a, w),
                Analysis::Massey => massey_section(&a, w),
                Analysis::Model => model_section(&a, w),
                Analysis::Validate => unreachable!(),
            })
        } else {
            Section::Invalid("no distinguished class: give one in the file or with --omega".into())
        };
        let value = match section {
            Section::Done(v) => {
                json!({ "status": "completed", "result": v })
            }
            Section::Inapplicable(m) => {
                exit = exit.max(EXIT_INAPPLICABLE);
                json!({ "status": "inapplicable", "reason": m })
            }
            Section::Invalid(m) => {
                if exit != EXIT_INAPPLICABLE {
                    exit = EXIT_INVALID;
                }
                json!({ "status": "invalid", "reason": m })
            }
        };
        sections.insert(an.name().into(), value);
    }
    if config.analyses.contains(&Analysis::Validate) && !valid {
        exit = EXIT_INVALID;
    }
    report.insert("analyses".into(), Value::Array(config.analyses.iter().map(|a| json!(a.name())).collect()));
    report.insert("results".into(), Value::Object(sections));
    report.insert("summary".into(), summary(&report["results"]));
    report.insert("exit_code".into(), json!(exit));
    let report = Value::Object(report);
    let rendered = match config.format {
        Format::Structured => render_structured(&report),
        Format::Text => render_text(&report, &config.analyses),
    };
    Outcome { exit_code: exit, report, rendered }
}

fn summary(results: &Value) -> Value {
    let ob = &results["obstructions"];
    let sasakian = if ob["status"] == "completed" {
        ob["result"]["overall"].clone()
    } else {
        Value::Null
    };
    let formality = &results["formality"];
    let verdict = if formality["status"] == "completed" {
        formality["result"]["verdict"].clone()
    } else {
        Value::Null
    };
    json!({ "sasakian_obstruction": sasakian, "formality": verdict })
}

pub fn render_structured(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("serializable");
    s.push('\n');
    s
}

fn strs(v: &Value) -> String {
    match v {
        Value::Array(xs) => xs
            .iter()
            .map(|x| match x {
                Value::String(s) => s.clone(),
                Value::Object(o) if o.contains_key("expr") => o["expr"].as_str().unwrap_or("").to_string(),
                other => other.to_string(),
            })
            .collect::<Vec<_>>()
            .join(", "),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_text(report: &Value, analyses: &[Analysis]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "sasakian {}", VERSION);
    let input = &report["input"];
    let _ = writeln!(out, "input: {}", strs(&input["source"]));
    let _ = writeln!(out, "digest: {}", strs(&input["digest"]));
    if let Some(e) = input["omega"]["expr"].as_str() {
        let _ = writeln!(out, "omega: {e}");
    }
    for an in analyses {
        let sec = &report["results"][an.name()];
        let _ = writeln!(out, "\n[{}]", an.name());
        if sec["status"] != "completed" {
            let _ = writeln!(out, "  {}: {}", strs(&sec["status"]), strs(&sec["reason"]));
            continue;
        }
        let r = &sec["result"];
        match an {
            Analysis::Validate => {
                let _ = writeln!(out, "  valid: {}", r["valid"]);
                let _ = writeln!(out, "  dims: {}", r["dims"]);
                for c in r["checks"].as_array().into_iter().flatten() {
                    let mark = if c["passed"] == true { "ok" } else { "FAILED" };
                    let _ = write!(out, "  {:<24} {mark}", strs(&c["name"]));
                    if let Some(w) = c["witness"].as_str() {
                        let _ = write!(out, " ({w})");
                    }
                    out.push('\n');
                }
            }
            Analysis::HardLefschetz => {
                let hl = &r["hard_lefschetz"];
                let _ = writeln!(out, "  holds: {}", hl["holds"]);
                if hl["holds"] == false {
                    let _ = writeln!(out, "  failing k: {}", hl["failing"]);
                }
                let _ = writeln!(out, "  rank of omega: H^p -> H^(p+2): {}", r["step_ranks"]);
                let _ = writeln!(out, "  dim K^p: {}", r["kernel_dims"]);
                let _ = writeln!(out, "  dim Q^p: {}", r["cokernel_dims"]);
                if !r["primitive_basis"].is_null() {
                    let _ = writeln!(out, "  primitive basis: {}", strs(&r["primitive_basis"]));
                }
            }
            Analysis::Gysin => {
                let _ = writeln!(out, "  betti numbers of the total space: {}", r["betti"]);
                let _ = writeln!(out, "  b3: {}", r["b3"]);
            }
            Analysis::Obstructions => {
                for c in r["checks"].as_array().into_iter().flatten() {
                    let state = if c["applicable"] == false {
                        "not applicable"
                    } else if c["fired"] == true {
                        "FIRED"
                    } else {
                        "passed"
                    };
                    let _ = write!(out, "  {:<12} {state}", strs(&c["name"]));
                    if let Some(w) = c["witness"].as_str() {
                        let _ = write!(out, " ({w})");
                    }
                    out.push('\n');
                }
                let _ = writeln!(out, "  overall: {}", strs(&r["overall"]));
            }
            Analysis::Formality => {
                let _ = writeln!(out, "  dim P: {}, dim K_M: {}", r["dim_p"], r["dim_kernel"]);
                let _ = writeln!(out, "  primitive basis: {}", strs(&r["primitive_basis"]));
                let _ = writeln!(out, "  values on kernel basis: [{}]", strs(&r["values"]));
                let _ = writeln!(out, "  verdict: {}", strs(&r["verdict"]));
                if !r["witness"].is_null() {
                    let _ = writeln!(
                        out,
                        "  witness: kernel vector {} with value {}",
                        r["witness"]["kernel_index"].as_u64().unwrap_or(0) + 1,
                        strs(&r["witness"]["value"])
                    );
                }
                let c = &r["lambda_crosscheck"];
                if c["applicable"] == true {
                    let _ = writeln!(out, "  lambda cross-check discrepancy: {:e}", c["max_abs_discrepancy"].as_f64().unwrap_or(f64::NAN));
                } else {
                    let _ = writeln!(out, "  lambda cross-check: not applicable (form on P is indefinite)");
                }
                let _ = writeln!(out, "  note: {}", strs(&r["hypothesis"]));
            }
            Analysis::Massey => {
                let _ = writeln!(out, "  basis: {}", strs(&r["basis"]));
                let nonzero = r["nonzero"].as_array().cloned().unwrap_or_default();
                let _ = writeln!(out, "  nonzero triple products: {} of {}", nonzero.len(), r["entries_checked"]);
                for e in &nonzero {
                    let idx: Vec<String> = e["indices"]
                        .as_array()
                        .into_iter()
                        .flatten()
                        .map(|x| x.to_string())
                        .collect();
                    let _ = writeln!(
                        out,
                        "  <e{}, e{}, e{}> . e{} = {}",
                        idx[0],
                        idx[1],
                        idx[2],
                        idx[3],
                        strs(&e["value"])
                    );
                }
            }
            Analysis::Model => {
                let _ = writeln!(out, "  model cohomology dims: {}", r["model_cohomology_dims"]);
                let g = &r["generators"];
                let _ = writeln!(out, "  generators: V2 = {}, C3 = {}, N3 = {}", g["v2"], g["c3"], g["n3"]);
                let _ = writeln!(out, "  chain map residuals zero: {}", r["chain_map_residuals_zero"]);
                let _ = writeln!(out, "  d injective on N3: {}", r["d_injective_on_n3"]);
                for m in r["induced_maps"].as_array().into_iter().flatten() {
                    let _ = writeln!(
                        out,
                        "  H^{}: {} -> {}, rank {}",
                        m["degree"], m["source_dim"], m["target_dim"], m["rank"]
                    );
                }
                let _ = writeln!(out, "  3-equivalence: {}", r["three_equivalence"]);
            }
        }
    }
    let s = &report["summary"];
    if !s["sasakian_obstruction"].is_null() || !s["formality"].is_null() {
        out.push_str("\nsummary:\n");
        if let Some(x) = s["sasakian_obstruction"].as_str() {
            let _ = writeln!(out, "  sasakian: {x}");
        }
        if let Some(x) = s["formality"].as_str() {
            let _ = writeln!(out, "  formality: {x}");
        }
    }
    out
}

/// Lines for `builtin-list`.
pub fn builtin_list() -> String {
    let mut out = String::new();
    for b in BUILTINS {
        let _ = writeln!(out, "{:<22} {}", b.name, b.description);
    }
    out
}
