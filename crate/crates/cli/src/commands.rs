//! The `transform`, `verify` and `demo` subcommands.

use std::io::Write;
use std::time::Instant;

use serde_json::{json, Value};

use rankone_core::demo::{cubic_threefold, nodal_curve, CubicThreefold, NodalCurve};
use rankone_core::limit::{base_dim, limit_fm_alg, limit_fm_closed, limit_fm_direct};
use rankone_core::{CycleB, LimitResult, Mode};

use crate::args::{DemoArgs, DemoName, Format, ModeArg, ReportFormat, Route, TransformArgs, VerifyArgs};
use crate::emit::{cycle_json, limit_json, limit_latex, pair_latex, Notation};
use crate::eval::Env;
use crate::parser::parse;
use crate::verify::{self, VerifyConfig};
use crate::CliError;

/// Exit status for a run whose identities all held.
pub const EXIT_OK: i32 = 0;
/// Exit status when some identity or comparison failed.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit status for usage, parse and input errors.
pub const EXIT_USAGE: i32 = 2;

fn input(flag: &'static str, text: &str, env: &Env) -> Result<CycleB, CliError> {
    let ast = parse(text).map_err(|source| CliError::Parse { flag, source })?;
    env.eval(&ast).map_err(|source| CliError::Eval { flag, source })
}

fn limit(z: &CycleB, w: &CycleB, g: usize, mode: ModeArg, route: Route) -> LimitResult {
    match (mode, route) {
        (ModeArg::Algebraic, Route::Direct) => limit_fm_direct(z, w, g).kill_gamma(),
        (ModeArg::Algebraic, _) => limit_fm_alg(z, w, g),
        (ModeArg::Rational, Route::Direct) => limit_fm_direct(z, w, g),
        (ModeArg::Rational, _) => limit_fm_closed(z, w, g),
    }
}

fn mode_str(mode: ModeArg) -> &'static str {
    match mode {
        ModeArg::Rational => Mode::Rational.as_str(),
        ModeArg::Algebraic => Mode::Algebraic.as_str(),
    }
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn transform(a: &TransformArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = a.g as usize;
    let env = Env {
        dim: base_dim(g),
        strict: a.strict,
    };
    let z = input("--z", &a.z, &env)?;
    let w = input("--w", &a.w, &env)?;

    let primary_route = if a.route == Route::Direct {
        Route::Direct
    } else {
        Route::Closed
    };
    let primary = limit(&z, &w, g, a.mode, primary_route);
    let direct = (a.route == Route::Both).then(|| limit(&z, &w, g, a.mode, Route::Direct));
    let equal = direct.as_ref().is_none_or(|d| d.same_class(&primary));

    match a.format {
        Format::Text => {
            let route = if a.route == Route::Direct { "direct" } else { "closed" };
            writeln!(out, "g = {g}, mode = {}, route = {route}", mode_str(a.mode))?;
            writeln!(out, "{primary}")?;
            if let Some(d) = &direct {
                writeln!(out, "g = {g}, mode = {}, route = direct", mode_str(a.mode))?;
                writeln!(out, "{d}")?;
                writeln!(out, "routes agree: {equal}")?;
            }
        }
        Format::Json => {
            let route = match a.route {
                Route::Closed => "closed",
                Route::Direct => "direct",
                Route::Both => "both",
            };
            let mut v = limit_json(&primary, route);
            if let Some(d) = &direct {
                v["direct"] = json!({"a": cycle_json(&d.a), "b": cycle_json(&d.b)});
                v["equal"] = json!(equal);
            }
            write_json(out, &v)?;
        }
        Format::Latex => {
            writeln!(out, "{}", limit_latex(&primary, a.notation))?;
            if let Some(d) = &direct {
                writeln!(out, "{}", limit_latex(d, a.notation))?;
            }
        }
    }
    Ok(if equal { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = VerifyConfig {
        suite: a.suite,
        g_max: a.g_max as usize,
        weights: a.weight_window.clone(),
        slack: a.truncation_slack,
        seed: a.seed,
        jobs: a.jobs as usize,
    };
    let start = Instant::now();
    let report = verify::run(&cfg)?;
    match a.format {
        ReportFormat::Text => write!(out, "{}", report.to_text())?,
        ReportFormat::Json => write_json(out, &report.to_json())?,
    }
    // timing stays out of the report so that reports are reproducible
    writeln!(err, "wall time: {:.2}s", start.elapsed().as_secs_f64())?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}

pub fn demo(a: &DemoArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    match a.name {
        DemoName::CubicThreefold => {
            let r = cubic_threefold();
            write_cubic(&r, a.format, a.notation, out)?;
            Ok(if r.phi_matches() && r.weight_one_nonzero() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
        DemoName::NodalCurve => {
            let r = nodal_curve(a.g as usize).map_err(|source| CliError::Eval { flag: "--g", source })?;
            write_nodal(&r, a.format, a.notation, out)?;
            Ok(if r.table_matches() { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn verdict_word(ok: bool) -> &'static str {
    if ok {
        "matches"
    } else {
        "MISMATCH"
    }
}

fn write_cubic(r: &CubicThreefold, format: Format, n: Notation, out: &mut dyn Write) -> Result<(), CliError> {
    let d = base_dim(r.g);
    match format {
        Format::Text => {
            writeln!(
                out,
                "cubic threefold acquiring a node: g = {}, base B = J(C) of dimension {d}",
                r.g
            )?;
            writeln!(out, "curve class [C] = {} + {} up to algebraic equivalence", r.c0, r.c1)?;
            writeln!(out, "input (algebraic equivalence):")?;
            writeln!(out, "  z = {}", r.z)?;
            writeln!(out, "  w = {}", r.w)?;
            writeln!(out, "Pontryagin sign used for star terms: {}", r.star_sign)?;
            writeln!(out, "limit phi_0:")?;
            writeln!(out, "  a = {}", r.phi.a)?;
            writeln!(out, "  b = {}", r.phi.b)?;
            writeln!(
                out,
                "  expected (1/2 F(C).F(C), -F(C)): {}",
                verdict_word(r.phi_matches())
            )?;
            writeln!(
                out,
                "bigrades: F(C0) {}, F(C1) {}, F(C0).F(C1) {}",
                r.grades[0], r.grades[1], r.grades[2]
            )?;
            writeln!(out, "Beauville components of phi_0:")?;
            for (j, a, b) in &r.components {
                writeln!(out, "  j = {j}: a = {a}; b = {b}")?;
            }
            writeln!(out, "weight one phi_0^(1):")?;
            writeln!(out, "  a = {}", r.phi1.0)?;
            writeln!(out, "  b = {}", r.phi1.1)?;
            writeln!(
                out,
                "  expected (F(C0).F(C1), -F(C1)): {}",
                verdict_word(r.phi1_matches())
            )?;
            writeln!(out, "verdict: {}", r.verdict())?;
        }
        Format::Json => {
            let pair = |a: &CycleB, b: &CycleB| json!({"a": cycle_json(a), "b": cycle_json(b)});
            let v = json!({
                "demo": "cubic-threefold",
                "g": r.g,
                "mode": Mode::Algebraic.as_str(),
                "input": pair(&r.z, &r.w),
                "star_rule_sign": r.star_sign.to_fraction_string(),
                "phi": pair(&r.phi.a, &r.phi.b),
                "phi_matches": r.phi_matches(),
                "grades": r.grades.iter().map(|g| json!([g.codim, g.weight])).collect::<Vec<_>>(),
                "components": r.components.iter().map(|(j, a, b)| json!({
                    "weight": j, "a": cycle_json(a), "b": cycle_json(b)
                })).collect::<Vec<_>>(),
                "phi1": pair(&r.phi1.0, &r.phi1.1),
                "phi1_matches": r.phi1_matches(),
                "verdict": r.verdict(),
            });
            write_json(out, &v)?;
        }
        Format::Latex => {
            writeln!(out, "{}", pair_latex(&r.z, &r.w, n))?;
            writeln!(out, "{}", pair_latex(&r.phi.a, &r.phi.b, n))?;
            writeln!(out, "{}", pair_latex(&r.phi1.0, &r.phi1.1, n))?;
            writeln!(out, "% {}", r.verdict())?;
        }
    }
    Ok(())
}

fn write_nodal(r: &NodalCurve, format: Format, n: Notation, out: &mut dyn Write) -> Result<(), CliError> {
    let d = base_dim(r.g);
    match format {
        Format::Text => {
            writeln!(
                out,
                "curve of genus {} acquiring one node: base B of dimension {d}",
                r.g
            )?;
            writeln!(out, "input c0 = nu_*(q^*z + q^*w . eta) with")?;
            for (j, z) in &r.z_components {
                writeln!(out, "  z^({j}) = {z}")?;
            }
            for (j, w) in &r.w_components {
                writeln!(out, "  w^({j}) = {w}")?;
            }
            writeln!(out, "Beauville components c0^(j) = nu_*(q^*z^(j) + q^*w^(j) . eta):")?;
            for row in &r.rows {
                let case = if row.weight == 0 { "j = 0" } else { "j != 0" };
                writeln!(
                    out,
                    "  j = {} ({case}): z = {}; w = {}   [routes agree: {}]",
                    row.weight,
                    row.z,
                    row.w,
                    row.routes_agree()
                )?;
            }
            writeln!(out, "table: {}", verdict_word(r.table_matches()))?;
        }
        Format::Json => {
            let v = json!({
                "demo": "nodal-curve",
                "g": r.g,
                "rows": r.rows.iter().map(|row| json!({
                    "weight": row.weight,
                    "z": cycle_json(&row.z),
                    "w": cycle_json(&row.w),
                    "routes_agree": row.routes_agree(),
                })).collect::<Vec<_>>(),
                "table_matches": r.table_matches(),
            });
            write_json(out, &v)?;
        }
        Format::Latex => {
            for row in &r.rows {
                writeln!(out, "{}", pair_latex(&row.z, &row.w, n))?;
            }
        }
    }
    Ok(())
}
