//! An independent numeric model used to validate the symbolic rules.
//!
//! Cohomology cannot see Beauville weights or `gamma`, so every check here
//! confirms the weight-zero shadow of a symbolic rule and nothing more.

pub mod model;
pub mod multivector;
pub mod replay;

use rand::Rng;

pub use model::{mu_pull, p1_pull, p2_pull, poincare_class, push_p2, ExtClass, Oracle, ProductClass};
pub use multivector::Multivector;
pub use replay::numeric_direct_limit;

use crate::rational::Rational;

/// Checks `F(F(e_S)) = (-1)^d (-1)^* e_S` on every basis monomial. Returns
/// the masks where it fails.
pub fn fourier_twice_failures(oracle: &Oracle) -> Vec<u32> {
    let d = oracle.dim();
    let sign = Rational::sign(d as i64);
    (0..1u32 << (2 * d))
        .filter(|&mask| {
            let x = ExtClass::basis(d, mask);
            oracle.fourier(&oracle.fourier(&x)) != x.inv().scale(&sign)
        })
        .collect()
}

/// Outcome of measuring `F(x * y) = c F(x) . F(y)` on random pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwining {
    /// Pairs where both sides were nonzero and comparable.
    pub measured: usize,
    /// Distinct constants seen; consistent when there is exactly one.
    pub constants: Vec<Rational>,
    /// Pairs where the two sides were not proportional at all.
    pub not_proportional: usize,
}

impl Intertwining {
    pub fn constant(&self) -> Option<&Rational> {
        match (self.constants.as_slice(), self.not_proportional) {
            ([c], 0) => Some(c),
            _ => None,
        }
    }
}

/// Measures the Pontryagin/Fourier intertwining constant on `pairs` random
/// nonzero even classes.
pub fn measure_intertwining(oracle: &Oracle, pairs: usize, rng: &mut impl Rng) -> Intertwining {
    let d = oracle.dim();
    let mut constants = Vec::new();
    let mut measured = 0;
    let mut not_proportional = 0;
    let mut nonzero = || loop {
        let x = ExtClass::random_even(d, rng);
        if !x.is_zero() {
            return x;
        }
    };
    for _ in 0..pairs {
        let x = nonzero();
        let y = nonzero();
        let lhs = oracle.fourier(&oracle.pontryagin(&x, &y));
        let rhs = oracle.fourier(&x).wedge(&oracle.fourier(&y));
        if lhs.is_zero() && rhs.is_zero() {
            continue;
        }
        match lhs.ratio_to(&rhs) {
            Some(c) => {
                measured += 1;
                if !constants.contains(&c) {
                    constants.push(c);
                }
            }
            None => not_proportional += 1,
        }
    }
    constants.sort();
    Intertwining {
        measured,
        constants,
        not_proportional,
    }
}

/// Checks the `l`-power selection rule in cohomology: for `x` of degree
/// `2i`, `p_2*(l^n . p_1^* x)` is nonzero exactly when `n = 2(d - i)`. Returns the
/// offending `(mask, n)` pairs.
pub fn selection_rule_failures(oracle: &Oracle) -> Vec<(u32, u32)> {
    let d = oracle.dim();
    let l = poincare_class(d);
    let mut powers = vec![ProductClass::one(d)];
    for _ in 0..2 * d {
        let next = powers.last().expect("nonempty").wedge(&l);
        powers.push(next);
    }
    let mut out = Vec::new();
    for mask in (0..1u32 << (2 * d)).filter(|m| m.count_ones() % 2 == 0) {
        let x = p1_pull(&ExtClass::basis(d, mask));
        let i = mask.count_ones() / 2;
        for (n, ln) in powers.iter().enumerate() {
            let survives = !push_p2(&ln.wedge(&x)).is_zero();
            if survives != (n as u32 == 2 * (d as u32 - i)) {
                out.push((mask, n as u32));
            }
        }
    }
    out
}

/// Random integer-coefficient class pairs for the numeric replay.
pub fn random_pairs(d: usize, count: usize, rng: &mut impl Rng) -> Vec<(ExtClass, ExtClass)> {
    (0..count)
        .map(|_| (ExtClass::random(d, rng), ExtClass::random(d, rng)))
        .collect()
}
