//! The limit of the Fourier-Mukai transform on a rank-one degeneration.
//!
//! A specialized cycle is `nu_*(q^*z + q^*w . eta)` with `z`, `w` on `B`; the
//! limit of its transform is `nu_*(q^*a + q^*b . eta)`. This module computes
//! `(a, b)` by the closed double-sum formula and by pushing through the
//! blow-up special fibre, and provides the consistency checks built on them.

use std::fmt;

use crate::base::product;
use crate::base::CycleB;
use crate::bundle::{CycleP, CyclePP, CycleV, Div};
use crate::error::CycleError;
use crate::rational::Rational;

/// Rational equivalence, or algebraic equivalence where `gamma` vanishes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    Rational,
    Algebraic,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Rational => "rational",
            Mode::Algebraic => "algebraic",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Provenance {
    Closed,
    Direct,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Closed => "closed",
            Provenance::Direct => "direct",
        }
    }
}

/// `(a, b)` with the limit equal to `nu_*(q^*a + q^*b . eta)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LimitResult {
    pub a: CycleB,
    pub b: CycleB,
    pub mode: Mode,
    pub g: usize,
    pub provenance: Provenance,
}

impl LimitResult {
    /// Passes to algebraic equivalence.
    pub fn kill_gamma(&self) -> LimitResult {
        LimitResult {
            a: self.a.kill_gamma(),
            b: self.b.kill_gamma(),
            mode: Mode::Algebraic,
            ..self.clone()
        }
    }

    /// Equality of the two classes, ignoring how they were obtained.
    pub fn same_class(&self, other: &LimitResult) -> bool {
        self.a == other.a && self.b == other.b
    }

    pub fn as_cycle_p(&self) -> CycleP {
        CycleP {
            z: self.a.clone(),
            w: self.b.clone(),
        }
    }
}

impl fmt::Display for LimitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a = {}\nb = {}", self.a, self.b)
    }
}

/// `d = g - 1`, panicking on `g = 0`.
pub fn base_dim(g: usize) -> usize {
    assert!(g >= 1, "genus must be positive");
    g - 1
}

fn check_inputs(z: &CycleB, w: &CycleB, g: usize) {
    let d = base_dim(g);
    assert!(
        z.dim() == d && w.dim() == d,
        "inputs live on a base of dimension {}/{}, expected {d}",
        z.dim(),
        w.dim()
    );
}

/// Upper bound `2g - 2` of the outer sum in the closed formula.
pub fn default_n_bound(g: usize) -> u32 {
    2 * base_dim(g) as u32
}

/// Upper bound `2g` of the exceptional exponential.
pub fn default_k_bound(g: usize) -> u32 {
    2 * g as u32
}

/// The `(n, m)` summand of the closed formula, before summation.
#[derive(Clone, Debug)]
pub struct ClosedTerm {
    pub n: u32,
    pub m: u32,
    pub a: CycleB,
    pub b: CycleB,
}

/// Every `(n, m)` summand for `0 <= m <= n <= n_bound`:
///
/// `a_nm = (-1)^m/(n+2)! F_B[(z + w gamma) gamma^m] gamma^(n-m+1)`,
/// `b_nm = (-1)^m/(n+2)! F_B[(((-1)^(n+1) - 1) z - w gamma) gamma^m] gamma^(n-m)`.
pub fn closed_terms(z: &CycleB, w: &CycleB, g: usize, n_bound: u32) -> Vec<ClosedTerm> {
    check_inputs(z, w, g);
    let d = z.dim();
    let gamma = CycleB::gamma(d);
    let wg = w * &gamma;
    let a_arg = z + &wg;
    let mut out = Vec::new();
    for n in 0..=n_bound {
        let c_n = Rational::factorial(n + 2).recip();
        let b_arg = &z.scale(&(Rational::sign(n as i64 + 1) - Rational::one())) - &wg;
        for m in 0..=n {
            let c = &c_n * &Rational::sign(m as i64);
            let gm = CycleB::gamma_pow(m, d);
            let a = &(&a_arg * &gm).fb() * &CycleB::gamma_pow(n - m + 1, d);
            let b = &(&b_arg * &gm).fb() * &CycleB::gamma_pow(n - m, d);
            out.push(ClosedTerm {
                n,
                m,
                a: a.scale(&c),
                b: b.scale(&c),
            });
        }
    }
    out
}

pub fn limit_fm_closed(z: &CycleB, w: &CycleB, g: usize) -> LimitResult {
    limit_fm_closed_with(z, w, g, default_n_bound(g))
}

/// The closed formula with an explicit bound on the outer sum.
pub fn limit_fm_closed_with(z: &CycleB, w: &CycleB, g: usize, n_bound: u32) -> LimitResult {
    let terms = closed_terms(z, w, g, n_bound);
    let (a, b) = terms
        .iter()
        .fold((w.fb(), CycleB::zero(z.dim())), |(a, b), t| (&a + &t.a, &b + &t.b));
    LimitResult {
        a,
        b,
        mode: Mode::Rational,
        g,
        provenance: Provenance::Closed,
    }
}

/// `(F_B(w), -F_B(z))`, the limit up to algebraic equivalence.
pub fn limit_fm_alg(z: &CycleB, w: &CycleB, g: usize) -> LimitResult {
    check_inputs(z, w, g);
    LimitResult {
        a: w.fb(),
        b: -z.fb(),
        mode: Mode::Algebraic,
        g,
        provenance: Provenance::Closed,
    }
}

/// How the direct computation evaluates the degenerate Poincare kernel.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Kernel {
    /// `e^(-E12-E21) . tau^*((q x q)^* e^l . p_1^* x)`, pushed by `tau`.
    #[default]
    Pullback,
    /// `e^l . tau_*(e^(-E12-E21) . tau^* p_1^* x)`, using the projection formula.
    Factored,
    /// The exponential of `tau^*(q x q)^* l - E12 - E21` expanded as a power series.
    Literal,
}

#[derive(Clone, Copy, Debug)]
pub struct DirectOptions {
    pub kernel: Kernel,
    /// Highest power of the exceptional divisors kept in the exponential.
    pub k_bound: u32,
}

impl DirectOptions {
    pub fn for_genus(g: usize) -> Self {
        DirectOptions {
            kernel: Kernel::Pullback,
            k_bound: default_k_bound(g),
        }
    }
}

pub fn limit_fm_direct(z: &CycleB, w: &CycleB, g: usize) -> LimitResult {
    limit_fm_direct_with(z, w, g, &DirectOptions::for_genus(g))
}

/// `p_2* tau_*(e^{c_1(sigma^* P_0)} . tau^* p_1^*(q^*z + q^*w eta))` on the
/// blown-up special fibre.
pub fn limit_fm_direct_with(z: &CycleB, w: &CycleB, g: usize, opts: &DirectOptions) -> LimitResult {
    check_inputs(z, w, g);
    let d = z.dim();
    let x = CycleP {
        z: z.clone(),
        w: w.clone(),
    };
    let px = CyclePP::p1_pull(&x);
    let e_l = product::exp_l(d);
    let pushed = match opts.kernel {
        Kernel::Pullback => {
            let exp_e = CycleV::exp_minus_e(d, opts.k_bound);
            (&exp_e * &CycleV::tau_pull(&px.mul_base(&e_l))).tau_push()
        }
        Kernel::Factored => {
            let exp_e = CycleV::exp_minus_e(d, opts.k_bound);
            (&exp_e * &CycleV::tau_pull(&px)).tau_push().mul_base(&e_l)
        }
        Kernel::Literal => {
            let ell = CycleV::tau_pull(&CyclePP::pull(&product::ell_pow(1, d)));
            let exponent = Div::ALL.iter().fold(ell, |acc, &div| &acc - &CycleV::divisor(div, d));
            let mut kernel = CycleV::one(d);
            let mut power = CycleV::one(d);
            for k in 1..=opts.k_bound {
                power = &power * &exponent;
                kernel = &kernel + &power.scale(&Rational::factorial(k).recip());
            }
            (&kernel * &CycleV::tau_pull(&px)).tau_push()
        }
    };
    let out = pushed.p2_push();
    LimitResult {
        a: out.z,
        b: out.w,
        mode: Mode::Rational,
        g,
        provenance: Provenance::Direct,
    }
}

/// Outcome of transforming twice in algebraic equivalence.
#[derive(Clone, Debug)]
pub struct DoubleTransform {
    pub twice: (CycleB, CycleB),
    pub expected: (CycleB, CycleB),
}

impl DoubleTransform {
    pub fn holds(&self) -> bool {
        self.twice == self.expected
    }
}

/// Applies [`limit_fm_alg`] twice and compares with `(-1)^g (-1)^*(z, w)`.
///
/// Symbols outside the admissible window `i - d <= j <= i` have vanishing
/// Beauville component and `F_B` already sends them to zero, so the
/// comparison is against the admissible part of the input.
pub fn double_transform(z: &CycleB, w: &CycleB, g: usize) -> DoubleTransform {
    let once = limit_fm_alg(z, w, g);
    let twice = limit_fm_alg(&once.a, &once.b, g);
    let sign = Rational::sign(g as i64);
    DoubleTransform {
        twice: (twice.a, twice.b),
        expected: (
            z.admissible_part().inv().scale(&sign),
            w.admissible_part().inv().scale(&sign),
        ),
    }
}

pub fn double_transform_check(z: &CycleB, w: &CycleB, g: usize) -> bool {
    double_transform(z, w, g).holds()
}

/// One weight of the specialized Beauville decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BeauvilleRow {
    pub weight: i32,
    pub z: CycleB,
    pub w: CycleB,
    /// The same pair recomputed as `(-1)^g F((-1)^* phi_0^(j))`.
    pub via_transform: (CycleB, CycleB),
}

impl BeauvilleRow {
    /// Whether the transform route reproduces the (admissible part of the)
    /// split components.
    pub fn routes_agree(&self) -> bool {
        self.via_transform == (self.z.admissible_part(), self.w.admissible_part())
    }
}

/// Splits `(z, w)` into weight components and recomputes each through the
/// transform of the inverted limit.
pub fn beauville_specialize(
    z_components: &[(i32, CycleB)],
    w_components: &[(i32, CycleB)],
    g: usize,
) -> Result<Vec<BeauvilleRow>, CycleError> {
    let d = base_dim(g);
    for (j, c) in z_components.iter().chain(w_components) {
        if !c.is_homogeneous_weight(*j) {
            return Err(CycleError::WeightMismatch {
                declared: *j,
                found: c.weights(),
            });
        }
        if c.dim() != d {
            return Err(CycleError::MixedSpace {
                left: format!("B(d={})", c.dim()),
                right: format!("B(d={d})"),
            });
        }
    }
    let mut weights: Vec<i32> = z_components.iter().chain(w_components).map(|(j, _)| *j).collect();
    weights.sort();
    weights.dedup();

    let collect = |parts: &[(i32, CycleB)], j: i32| {
        parts
            .iter()
            .filter(|(k, _)| *k == j)
            .fold(CycleB::zero(d), |acc, (_, c)| &acc + c)
    };
    let z_total = z_components.iter().fold(CycleB::zero(d), |acc, (_, c)| &acc + c);
    let w_total = w_components.iter().fold(CycleB::zero(d), |acc, (_, c)| &acc + c);
    let phi = limit_fm_alg(&z_total, &w_total, g);
    let sign = Rational::sign(g as i64);

    Ok(weights
        .into_iter()
        .map(|j| {
            let inverted = (phi.a.weight_part(j).inv(), phi.b.weight_part(j).inv());
            let back = limit_fm_alg(&inverted.0, &inverted.1, g);
            BeauvilleRow {
                weight: j,
                z: collect(z_components, j),
                w: collect(w_components, j),
                via_transform: (back.a.scale(&sign), back.b.scale(&sign)),
            }
        })
        .collect())
}

/// Every homogeneous generator `name[i,j]` with `0 <= i <= d`, `j` in `weights`.
pub fn generator_basis(name: &str, d: usize, weights: std::ops::RangeInclusive<i32>) -> Vec<CycleB> {
    let mut out = Vec::new();
    for i in 0..=d as i32 {
        for j in weights.clone() {
            out.push(CycleB::symbol(name, i, j, d).expect("generator names are valid"));
        }
    }
    out
}
