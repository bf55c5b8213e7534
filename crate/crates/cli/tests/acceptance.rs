//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rankone_cli::ast::{AtomAst, ExprAst, Factor, SymRef, Term};
use rankone_cli::eval::Env;
use rankone_cli::parser::parse;
use rankone_cli::verify::{run, Suite, SuiteReport, VerifyConfig, VerifyReport};
use rankone_core::Rational;

const BIN: &str = env!("CARGO_BIN_EXE_rankone");

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn suite(suite: Suite, g_max: usize) -> (VerifyReport, Duration) {
    let cfg = VerifyConfig {
        suite,
        g_max,
        jobs: jobs(),
        ..VerifyConfig::default()
    };
    let start = Instant::now();
    let report = run(&cfg).expect("thread pool");
    (report, start.elapsed())
}

/// `identity` ran exactly `want` times (any count when `None`) and never failed.
fn identity_clean(s: &SuiteReport, identity: &str, want: Option<usize>) -> Result<String, String> {
    let (n, bad) = (s.checks_of(identity), s.failures_of(identity));
    let count_ok = want.map_or(n > 0, |w| n == w);
    let msg = format!("{identity} {n} checks, {bad} failed");
    if count_ok && bad == 0 {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn all_clean(s: &SuiteReport, ids: &[(&str, Option<usize>)]) -> Verdict {
    let mut ok = true;
    let parts: Vec<String> = ids
        .iter()
        .map(|(id, n)| {
            identity_clean(s, id, *n).unwrap_or_else(|e| {
                ok = false;
                e
            })
        })
        .collect();
    verdict(ok, parts.join("; "))
}

/// Number of `(z, w)` generator pairs on the grid, for `g = 1..=g_max`.
fn grid_size(g_max: usize, weights: usize) -> usize {
    (1..=g_max).map(|g| (g * weights).pow(2)).sum()
}

fn random_name(rng: &mut ChaCha8Rng) -> String {
    ["z", "w", "C", "x_1", "pt", "c'", "Theta"]
        .choose(rng)
        .expect("nonempty")
        .to_string()
}

fn random_sym(rng: &mut ChaCha8Rng) -> SymRef {
    SymRef {
        name: random_name(rng),
        codim: rng.gen_range(-1..=4),
        weight: rng.gen_range(-2..=4),
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> ExprAst {
    let n = rng.gen_range(1..=3);
    ExprAst {
        terms: (0..n).map(|_| random_term(rng, depth)).collect(),
    }
}

fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> Term {
    let n = rng.gen_range(0..=3);
    let factors: Vec<Factor> = (0..n).map(|_| random_factor(rng, depth)).collect();
    let coeff = if factors.is_empty() || rng.gen_bool(0.5) {
        Some(random_rational(rng))
    } else {
        None
    };
    Term { coeff, factors }
}

fn random_factor(rng: &mut ChaCha8Rng, depth: u32) -> Factor {
    let pick = if depth == 0 {
        rng.gen_range(0..4)
    } else {
        rng.gen_range(0..7)
    };
    let atom = match pick {
        0 | 1 => AtomAst::Sym(random_sym(rng)),
        2 => AtomAst::Gamma,
        3 => AtomAst::Point,
        4 => AtomAst::Fb(Box::new(random_expr(rng, depth - 1))),
        5 => AtomAst::Inv(Box::new(random_expr(rng, depth - 1))),
        _ => {
            if rng.gen_bool(0.5) {
                AtomAst::Star(random_sym(rng), random_sym(rng))
            } else {
                AtomAst::Paren(Box::new(random_expr(rng, depth - 1)))
            }
        }
    };
    let power = rng.gen_bool(0.3).then(|| rng.gen_range(0..=3));
    Factor { atom, power }
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().expect("run rankone");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn main() {
    let mut verdicts: Vec<(&str, Verdict)> = Vec::new();

    let (theorem, t_theorem) = suite(Suite::Theorem, 5);
    let th = &theorem.suites[0];
    let pairs = grid_size(5, 4);

    let mut v = all_clean(th, &[("direct-equals-closed", Some(pairs))]);
    if t_theorem > Duration::from_secs(120) {
        v.ok = false;
    }
    v.detail += &format!(" in {:.1}s", t_theorem.as_secs_f64());
    verdicts.push(("1 closed formula equals direct push-pull, g <= 5", v));

    verdicts.push((
        "2 gamma-kill collapse, only (n,m) = (0,0) survives",
        all_clean(
            th,
            &[
                ("gamma-kill-collapse", Some(pairs)),
                ("only-n0-m0-survives", Some(pairs)),
            ],
        ),
    ));

    verdicts.push((
        "3 double transform is (-1)^g inv, g <= 6",
        all_clean(th, &[("double-transform", Some(grid_size(6, 4)))]),
    ));

    let (lemmas, _) = suite(Suite::Lemmas, 5);
    verdicts.push((
        "4 xi powers, exceptional pushforward closed form, lambda pushforward",
        all_clean(
            &lemmas.suites[0],
            &[
                ("xi-power", None),
                ("exceptional-push-closed-form", None),
                ("exceptional-push-k1-zero", None),
                ("lambda-pushforward", None),
            ],
        ),
    ));

    verdicts.push((
        "5 truncation stability with slack 2",
        all_clean(th, &[("truncation-stability", Some(pairs))]),
    ));

    let (oracle, t_oracle) = suite(Suite::Oracle, 4);
    let or = &oracle.suites[0];
    let mut v = all_clean(
        or,
        &[
            ("fourier-twice", Some(4)),
            ("numeric-replay", Some(400)),
            ("intertwining-constant", Some(4)),
            ("selection-rule", Some(4)),
        ],
    );
    let consistent = oracle.oracle.len() == 4 && oracle.oracle.iter().all(|c| c.intertwining.is_some());
    v.ok &= consistent && t_oracle <= Duration::from_secs(60);
    let constants: Vec<String> = oracle
        .oracle
        .iter()
        .map(|c| {
            format!(
                "d={}:{}",
                c.d,
                c.intertwining.as_ref().map_or("?".into(), |k| k.to_string())
            )
        })
        .collect();
    v.detail += &format!("; constants {} in {:.1}s", constants.join(","), t_oracle.as_secs_f64());
    verdicts.push(("6 cohomology oracle, d <= 3", v));

    let (beauville, _) = suite(Suite::Beauville, 5);
    let mut v = all_clean(
        &beauville.suites[0],
        &[
            ("beauville-routes", None),
            ("nodal-curve-table", None),
            ("cubic-threefold-limit", Some(1)),
            ("cubic-threefold-weight-one", Some(1)),
            ("cubic-threefold-verdict", Some(1)),
        ],
    );
    let (code, text, _) = binary(&["demo", "cubic-threefold"]);
    let demo_ok = code == 0
        && text.contains("  a = FB(C[3,0])*FB(C[3,1])\n  b = -FB(C[3,1])\n")
        && text.contains("verdict: C1 != 0 implies phi0^(1) != 0");
    let (code, text, _) = binary(&["demo", "nodal-curve"]);
    let nodal_ok = code == 0 && text.contains("table: matches");
    v.ok &= demo_ok && nodal_ok;
    v.detail += &format!("; cubic demo {demo_ok}, nodal demo {nodal_ok}");
    verdicts.push(("7 Beauville routes, nodal curve table, cubic threefold", v));

    let mut rng = ChaCha8Rng::seed_from_u64(20261015);
    let env = Env::new(3);
    let (mut round_trips, mut evaluated, mut mismatches) = (0, 0, Vec::new());
    for _ in 0..1000 {
        let ast = random_expr(&mut rng, 2);
        let text = ast.to_string();
        match parse(&text) {
            Ok(back) if back == ast => round_trips += 1,
            other => mismatches.push(format!("{text} -> {other:?}")),
        }
        if let Ok(class) = env.eval(&ast) {
            evaluated += 1;
            let again = parse(&class.to_string()).ok().and_then(|a| env.eval(&a).ok());
            if again.as_ref() != Some(&class) {
                mismatches.push(format!("class {class} did not parse back"));
            }
        }
    }
    let args = [
        "verify", "--suite", "all", "--g-max", "3", "--seed", "7", "--format", "json",
    ];
    let runs: Vec<(i32, String, String)> = [["--jobs", "1"], ["--jobs", "4"], ["--jobs", "4"]]
        .iter()
        .map(|j| binary(&[&args[..], &j[..]].concat()))
        .collect();
    let identical = runs.iter().all(|r| r.0 == 0 && r.1 == runs[0].1) && !runs[0].1.is_empty();
    let v = verdict(
        mismatches.is_empty() && round_trips == 1000 && identical,
        format!(
            "{round_trips}/1000 ASTs round-trip, {evaluated} evaluated classes reparse; verify reports identical across runs and --jobs: {identical}{}",
            mismatches.first().map_or(String::new(), |m| format!("; first mismatch: {m}"))
        ),
    );
    verdicts.push(("8 parser round trip and deterministic reports", v));

    let mut failed = 0;
    for (name, v) in &verdicts {
        let tag = if v.ok { "PASS" } else { "FAIL" };
        if !v.ok {
            failed += 1;
        }
        println!("{tag} criterion {name}: {}", v.detail);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
