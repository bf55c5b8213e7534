//! The verification harness behind `rankone verify`.
//!
//! Every suite expands into a flat list of pure cases. Cases may run on a
//! thread pool, but results are collected in list order, so the report does
//! not depend on scheduling.

use std::ops::RangeInclusive;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use rankone_core::base::product;
use rankone_core::base::star_rule_sign;
use rankone_core::bundle::blowup::{lambda_push, tau_push_xe_closed, tau_push_xe_generic};
use rankone_core::demo::{cubic_threefold, nodal_curve};
use rankone_core::limit::{
    base_dim, beauville_specialize, closed_terms, default_k_bound, default_n_bound, double_transform, generator_basis,
    limit_fm_alg, limit_fm_closed, limit_fm_closed_with, limit_fm_direct, limit_fm_direct_with, DirectOptions, Kernel,
};
use rankone_core::oracle::{
    fourier_twice_failures, measure_intertwining, numeric_direct_limit, random_pairs, selection_rule_failures,
    ExtClass, Oracle,
};
use rankone_core::{CycleB, CycleE, CycleP, Div, Rational};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, clap::ValueEnum)]
pub enum Suite {
    Theorem,
    Lemmas,
    Beauville,
    Oracle,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Lemmas => "lemmas",
            Suite::Beauville => "beauville",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Theorem, Suite::Lemmas, Suite::Beauville, Suite::Oracle],
            s => vec![s],
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub g_max: usize,
    pub weights: RangeInclusive<i32>,
    pub slack: u32,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suite: Suite::All,
            g_max: 5,
            weights: 0..=3,
            slack: 2,
            seed: 0,
            jobs: 1,
        }
    }
}

/// Genus bound for the literal and factored kernel cross-checks.
const KERNEL_G_MAX: usize = 3;
/// Largest base dimension the cohomology oracle is asked to handle.
const ORACLE_D_MAX: usize = 4;
const REPLAY_CHUNK: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub identity: &'static str,
    pub g: usize,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Signs measured by the oracle for one base dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConstants {
    pub d: usize,
    pub fourier_twice_sign: Rational,
    pub intertwining: Option<Rational>,
    pub pairs_measured: usize,
    pub star_rule_sign: Rational,
}

#[derive(Default)]
struct Outcome {
    checks: Vec<&'static str>,
    failures: Vec<Failure>,
    constants: Option<OracleConstants>,
}

impl Outcome {
    fn check(&mut self, identity: &'static str, ok: bool, f: impl FnOnce() -> Failure) {
        self.checks.push(identity);
        if !ok {
            self.failures.push(f());
        }
    }
}

struct Case {
    suite: Suite,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

fn case(suite: Suite, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Case {
    Case {
        suite,
        run: Box::new(run),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    /// Checks per identity, in order of first appearance.
    pub identities: Vec<(&'static str, usize)>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn checks_of(&self, identity: &str) -> usize {
        self.identities
            .iter()
            .find(|(k, _)| *k == identity)
            .map_or(0, |(_, n)| *n)
    }

    pub fn failures_of(&self, identity: &str) -> usize {
        self.failures.iter().filter(|f| f.identity == identity).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteReport>,
    pub oracle: Vec<OracleConstants>,
}

impl PartialEq for VerifyConfig {
    fn eq(&self, o: &Self) -> bool {
        (self.suite, self.g_max, &self.weights, self.slack, self.seed)
            == (o.suite, o.g_max, &o.weights, o.slack, o.seed)
    }
}

impl Eq for VerifyConfig {}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }

    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    /// The job count is left out so that reports compare equal across `--jobs`.
    pub fn to_json(&self) -> Value {
        let c = &self.config;
        json!({
            "suite": c.suite.name(),
            "seed": c.seed,
            "g_max": c.g_max,
            "weight_window": format!("{}..{}", c.weights.start(), c.weights.end()),
            "truncation_slack": c.slack,
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| json!({
                "name": s.name,
                "cases": s.cases,
                "failed": s.failures.len(),
                "identities": s.identities.iter().map(|(k, n)| json!({
                    "identity": k,
                    "checks": n,
                    "failed": s.failures_of(k),
                })).collect::<Vec<_>>(),
                "failures": s.failures.iter().map(|f| json!({
                    "identity": f.identity,
                    "g": f.g,
                    "inputs": f.inputs,
                    "expected": f.expected,
                    "actual": f.actual,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "oracle_constants": self.oracle.iter().map(|o| json!({
                "d": o.d,
                "fourier_twice_sign": o.fourier_twice_sign.to_fraction_string(),
                "intertwining_constant": o.intertwining.as_ref().map(Rational::to_fraction_string),
                "pairs_measured": o.pairs_measured,
                "star_rule_sign": o.star_rule_sign.to_fraction_string(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "verify suite={} seed={} g-max={} weight-window={}..{} truncation-slack={}\n",
            c.suite.name(),
            c.seed,
            c.g_max,
            c.weights.start(),
            c.weights.end(),
            c.slack
        );
        for s in &self.suites {
            out.push_str(&format!(
                "{}: {} checks, {} failures\n",
                s.name,
                s.cases,
                s.failures.len()
            ));
            for (k, n) in &s.identities {
                out.push_str(&format!("  {k}: {n} checks, {} failed\n", s.failures_of(k)));
            }
            for f in &s.failures {
                out.push_str(&format!(
                    "  FAIL {} g={} [{}]\n    expected: {}\n    actual:   {}\n",
                    f.identity, f.g, f.inputs, f.expected, f.actual
                ));
            }
        }
        if !self.oracle.is_empty() {
            out.push_str("oracle constants:\n");
            for o in &self.oracle {
                let k = o
                    .intertwining
                    .as_ref()
                    .map_or("inconsistent".to_string(), |c| c.to_string());
                out.push_str(&format!(
                    "  d={}: F.F = {}*inv, F(x*y) = {}*F(x).F(y) over {} pairs, symbolic star sign {}\n",
                    o.d, o.fourier_twice_sign, k, o.pairs_measured, o.star_rule_sign
                ));
            }
        }
        out.push_str(if self.passed() {
            "result: PASS\n"
        } else {
            "result: FAIL\n"
        });
        out
    }
}

fn pair_label(z: &CycleB, w: &CycleB) -> String {
    format!("z = {z}; w = {w}")
}

fn grid(g: usize, weights: &RangeInclusive<i32>) -> Vec<(CycleB, CycleB)> {
    let d = base_dim(g);
    let zs = generator_basis("z", d, weights.clone());
    let ws = generator_basis("w", d, weights.clone());
    zs.iter()
        .flat_map(|z| ws.iter().map(move |w| (z.clone(), w.clone())))
        .collect()
}

fn pair_string((a, b): &(CycleB, CycleB)) -> String {
    format!("({a}, {b})")
}

fn theorem_cases(cfg: &VerifyConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let slack = cfg.slack;
    for g in 1..=cfg.g_max {
        for (z, w) in grid(g, &cfg.weights) {
            out.push(case(Suite::Theorem, move || theorem_pair(&z, &w, g, slack)));
        }
    }
    // one genus past the main grid, at least up to 6
    for g in 1..=(cfg.g_max + 1).max(6) {
        for (z, w) in grid(g, &cfg.weights) {
            out.push(case(Suite::Theorem, move || {
                let mut o = Outcome::default();
                let t = double_transform(&z, &w, g);
                o.check("double-transform", t.holds(), || Failure {
                    identity: "double-transform",
                    g,
                    inputs: pair_label(&z, &w),
                    expected: pair_string(&t.expected),
                    actual: pair_string(&t.twice),
                });
                o
            }));
        }
    }
    out
}

fn theorem_pair(z: &CycleB, w: &CycleB, g: usize, slack: u32) -> Outcome {
    let mut o = Outcome::default();
    let inputs = || pair_label(z, w);
    let closed = limit_fm_closed(z, w, g);
    let direct = limit_fm_direct(z, w, g);
    o.check("direct-equals-closed", direct.same_class(&closed), || Failure {
        identity: "direct-equals-closed",
        g,
        inputs: inputs(),
        expected: closed.to_string(),
        actual: direct.to_string(),
    });

    let killed = closed.kill_gamma();
    let alg = limit_fm_alg(z, w, g);
    o.check("gamma-kill-collapse", killed.same_class(&alg), || Failure {
        identity: "gamma-kill-collapse",
        g,
        inputs: inputs(),
        expected: alg.to_string(),
        actual: killed.to_string(),
    });

    let survivors: Vec<(u32, u32)> = closed_terms(z, w, g, default_n_bound(g))
        .into_iter()
        .filter(|t| !t.a.kill_gamma().is_zero() || !t.b.kill_gamma().is_zero())
        .map(|t| (t.n, t.m))
        .collect();
    o.check("only-n0-m0-survives", survivors.iter().all(|nm| *nm == (0, 0)), || {
        Failure {
            identity: "only-n0-m0-survives",
            g,
            inputs: inputs(),
            expected: "[(0, 0)]".to_string(),
            actual: format!("{survivors:?}"),
        }
    });

    let wide_closed = limit_fm_closed_with(z, w, g, default_n_bound(g) + slack);
    let wide_direct = limit_fm_direct_with(
        z,
        w,
        g,
        &DirectOptions {
            kernel: Kernel::Pullback,
            k_bound: default_k_bound(g) + slack,
        },
    );
    o.check(
        "truncation-stability",
        wide_closed.same_class(&closed) && wide_direct.same_class(&direct),
        || Failure {
            identity: "truncation-stability",
            g,
            inputs: inputs(),
            expected: closed.to_string(),
            actual: format!("closed: {wide_closed}\ndirect: {wide_direct}"),
        },
    );

    if g <= KERNEL_G_MAX {
        for kernel in [Kernel::Factored, Kernel::Literal] {
            let opts = DirectOptions {
                kernel,
                k_bound: default_k_bound(g),
            };
            let other = limit_fm_direct_with(z, w, g, &opts);
            o.check("kernel-agreement", other.same_class(&direct), || Failure {
                identity: "kernel-agreement",
                g,
                inputs: format!("{}; kernel {kernel:?}", inputs()),
                expected: direct.to_string(),
                actual: other.to_string(),
            });
        }
    }
    o
}

fn lemma_cases(cfg: &VerifyConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for g in 1..=cfg.g_max {
        let d = base_dim(g);
        let k_max = 2 * g as u32;
        for div in Div::ALL {
            out.push(case(Suite::Lemmas, move || {
                let mut o = Outcome::default();
                for k in 0..=k_max {
                    let closed = CycleE::xi_power(div, k, d);
                    let iterated = CycleE::xi_power_iterated(div, k, d);
                    o.check("xi-power", closed == iterated, || Failure {
                        identity: "xi-power",
                        g,
                        inputs: format!("{} k={k}", div.label()),
                        expected: format!("{iterated:?}"),
                        actual: format!("{closed:?}"),
                    });
                    let j = if div == Div::E12 { 2 } else { 1 };
                    let expect = product::phi(k, d).scale(&Rational::sign((k as i64 + 1) * j));
                    let pushed = lambda_push(div, &closed.a).qq_push();
                    o.check("lambda-pushforward", pushed == expect, || Failure {
                        identity: "lambda-pushforward",
                        g,
                        inputs: format!("{} k={k}", div.label()),
                        expected: format!("{expect:?}"),
                        actual: format!("{pushed:?}"),
                    });
                }
                o
            }));
        }
        let other = CycleB::symbol("w", 0, 0, d).expect("valid symbol");
        for y in generator_basis("y", d, cfg.weights.clone()) {
            for x in [
                CycleP::new(y.clone(), other.clone()).expect("same base"),
                CycleP::new(other.clone(), y.clone()).expect("same base"),
            ] {
                out.push(case(Suite::Lemmas, move || lemma_sum(&x, g)));
            }
        }
    }
    out
}

fn lemma_sum(x: &CycleP, g: usize) -> Outcome {
    let mut o = Outcome::default();
    for k in 1..=2 * g as u32 {
        let closed = tau_push_xe_closed(x, k);
        let generic = tau_push_xe_generic(x, k);
        o.check("exceptional-push-closed-form", closed == generic, || Failure {
            identity: "exceptional-push-closed-form",
            g,
            inputs: format!("x = {x}; k={k}"),
            expected: generic.to_string(),
            actual: closed.to_string(),
        });
        if k == 1 {
            o.check("exceptional-push-k1-zero", closed.is_zero(), || Failure {
                identity: "exceptional-push-k1-zero",
                g,
                inputs: format!("x = {x}"),
                expected: "0".to_string(),
                actual: closed.to_string(),
            });
        }
    }
    o
}

fn beauville_cases(cfg: &VerifyConfig) -> Vec<Case> {
    let mut out = Vec::new();
    for g in 1..=cfg.g_max {
        for (z, w) in grid(g, &cfg.weights) {
            out.push(case(Suite::Beauville, move || {
                let mut o = Outcome::default();
                let jz = z.weights()[0];
                let jw = w.weights()[0];
                match beauville_specialize(&[(jz, z.clone())], &[(jw, w.clone())], g) {
                    Ok(rows) => {
                        for r in rows {
                            o.check("beauville-routes", r.routes_agree(), || Failure {
                                identity: "beauville-routes",
                                g,
                                inputs: format!("{}; weight {}", pair_label(&z, &w), r.weight),
                                expected: pair_string(&(r.z.admissible_part(), r.w.admissible_part())),
                                actual: pair_string(&r.via_transform),
                            });
                        }
                    }
                    Err(e) => o.check("beauville-routes", false, || Failure {
                        identity: "beauville-routes",
                        g,
                        inputs: pair_label(&z, &w),
                        expected: "rows".to_string(),
                        actual: e.to_string(),
                    }),
                }
                o
            }));
        }
    }
    for g in 3..=cfg.g_max.max(3) {
        out.push(case(Suite::Beauville, move || {
            let mut o = Outcome::default();
            match nodal_curve(g) {
                Ok(n) => {
                    for r in &n.rows {
                        let (z, w) = n.expected_row(r.weight);
                        o.check("nodal-curve-table", r.z == z && r.w == w && r.routes_agree(), || {
                            Failure {
                                identity: "nodal-curve-table",
                                g,
                                inputs: format!("weight {}", r.weight),
                                expected: pair_string(&(z, w)),
                                actual: format!(
                                    "{} via {}",
                                    pair_string(&(r.z.clone(), r.w.clone())),
                                    pair_string(&r.via_transform)
                                ),
                            }
                        });
                    }
                }
                Err(e) => o.check("nodal-curve-table", false, || Failure {
                    identity: "nodal-curve-table",
                    g,
                    inputs: String::new(),
                    expected: "table".to_string(),
                    actual: e.to_string(),
                }),
            }
            o
        }));
    }
    out.push(case(Suite::Beauville, || {
        let mut o = Outcome::default();
        let r = cubic_threefold();
        o.check("cubic-threefold-limit", r.phi_matches(), || Failure {
            identity: "cubic-threefold-limit",
            g: r.g,
            inputs: pair_label(&r.z, &r.w),
            expected: pair_string(&r.expected_phi),
            actual: r.phi.to_string(),
        });
        o.check("cubic-threefold-weight-one", r.phi1_matches(), || Failure {
            identity: "cubic-threefold-weight-one",
            g: r.g,
            inputs: pair_label(&r.z, &r.w),
            expected: pair_string(&r.expected_phi1),
            actual: pair_string(&r.phi1),
        });
        o.check("cubic-threefold-verdict", r.weight_one_nonzero(), || Failure {
            identity: "cubic-threefold-verdict",
            g: r.g,
            inputs: pair_label(&r.z, &r.w),
            expected: "nonzero weight-one limit".to_string(),
            actual: r.verdict(),
        });
        o
    }));
    out
}

fn oracle_rng(seed: u64, d: usize, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((d as u64) << 32) | stream);
    rng
}

fn oracle_cases(cfg: &VerifyConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let seed = cfg.seed;
    let d_max = cfg.g_max.saturating_sub(1).min(ORACLE_D_MAX);
    for d in 0..=d_max {
        let (measure_pairs, replay_pairs): (usize, usize) = if d <= 3 { (12, 100) } else { (4, 10) };
        out.push(case(Suite::Oracle, move || {
            let mut o = Outcome::default();
            let oracle = Oracle::new(d);
            let g = d + 1;
            let bad = fourier_twice_failures(&oracle);
            o.check("fourier-twice", bad.is_empty(), || Failure {
                identity: "fourier-twice",
                g,
                inputs: format!("d={d}"),
                expected: "no failing basis monomials".to_string(),
                actual: format!("{bad:?}"),
            });
            let sign = Rational::sign(d as i64);
            let f1 = oracle.fourier(&ExtClass::one(d));
            let fpt = oracle.fourier(&ExtClass::point(d));
            let sym_ok =
                CycleB::one(d).fb() == CycleB::point(d).scale(&sign) && CycleB::point(d).fb() == CycleB::one(d);
            o.check(
                "unit-point-exchange",
                f1 == ExtClass::point(d).scale(&sign) && fpt == ExtClass::one(d) && sym_ok,
                || Failure {
                    identity: "unit-point-exchange",
                    g,
                    inputs: format!("d={d}"),
                    expected: format!(
                        "F(1) = {}, F(pt) = {}",
                        ExtClass::point(d).scale(&sign),
                        ExtClass::one(d)
                    ),
                    actual: format!("F(1) = {f1}, F(pt) = {fpt}"),
                },
            );
            let bad = selection_rule_failures(&oracle);
            o.check("selection-rule", bad.is_empty(), || Failure {
                identity: "selection-rule",
                g,
                inputs: format!("d={d}"),
                expected: "nonzero exactly at n = 2(d - i)".to_string(),
                actual: format!("{bad:?}"),
            });
            let m = measure_intertwining(&oracle, measure_pairs, &mut oracle_rng(seed, d, 0));
            let star = star_rule_sign(d);
            o.check("intertwining-constant", m.constant() == Some(&star), || Failure {
                identity: "intertwining-constant",
                g,
                inputs: format!("d={d}, {measure_pairs} pairs"),
                expected: format!("single constant {star}"),
                actual: format!("{:?}, {} not proportional", m.constants, m.not_proportional),
            });
            o.constants = Some(OracleConstants {
                d,
                fourier_twice_sign: sign,
                intertwining: m.constant().cloned(),
                pairs_measured: m.measured,
                star_rule_sign: star,
            });
            o
        }));
        for chunk in 0..replay_pairs.div_ceil(REPLAY_CHUNK) {
            let count = REPLAY_CHUNK.min(replay_pairs - chunk * REPLAY_CHUNK);
            out.push(case(Suite::Oracle, move || {
                let mut o = Outcome::default();
                let oracle = Oracle::new(d);
                let pairs = random_pairs(d, count, &mut oracle_rng(seed, d, 1 + chunk as u64));
                for (i, (z, w)) in pairs.iter().enumerate() {
                    let (a, b) = numeric_direct_limit(&oracle, z, w);
                    let (ea, eb) = (oracle.fourier(w), -&oracle.fourier(z));
                    o.check("numeric-replay", a == ea && b == eb, || Failure {
                        identity: "numeric-replay",
                        g: d + 1,
                        inputs: format!("pair {}: z = {z}; w = {w}", chunk * REPLAY_CHUNK + i),
                        expected: format!("({ea}, {eb})"),
                        actual: format!("({a}, {b})"),
                    });
                }
                o
            }));
        }
    }
    out
}

/// Runs the configured suites. Fails only if the thread pool cannot be built.
pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport, rayon::ThreadPoolBuildError> {
    let suites = cfg.suite.expand();
    let cases: Vec<Case> = suites
        .iter()
        .flat_map(|s| match s {
            Suite::Theorem => theorem_cases(cfg),
            Suite::Lemmas => lemma_cases(cfg),
            Suite::Beauville => beauville_cases(cfg),
            Suite::Oracle => oracle_cases(cfg),
            Suite::All => unreachable!("expanded above"),
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs.max(1)).build()?;
    let outcomes: Vec<(Suite, Outcome)> = pool.install(|| cases.par_iter().map(|c| (c.suite, (c.run)())).collect());

    let mut reports: Vec<SuiteReport> = suites
        .iter()
        .map(|s| SuiteReport {
            name: s.name(),
            cases: 0,
            identities: Vec::new(),
            failures: Vec::new(),
        })
        .collect();
    let mut oracle = Vec::new();
    for (suite, o) in outcomes {
        let r = reports
            .iter_mut()
            .find(|r| r.name == suite.name())
            .expect("every case belongs to a selected suite");
        r.cases += o.checks.len();
        for id in o.checks {
            match r.identities.iter_mut().find(|(k, _)| *k == id) {
                Some((_, n)) => *n += 1,
                None => r.identities.push((id, 1)),
            }
        }
        r.failures.extend(o.failures);
        oracle.extend(o.constants);
    }
    Ok(VerifyReport {
        config: cfg.clone(),
        suites: reports,
        oracle,
    })
}
