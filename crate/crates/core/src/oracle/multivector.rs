//! Exact multivectors in an exterior algebra on at most 32 generators.

use std::collections::BTreeMap;
use std::fmt;

use crate::rational::Rational;

/// A sparse element of `Lambda(x_0, ..., x_{n-1})`.
///
/// A basis monomial is a bitmask; it stands for the wedge of its generators
/// in increasing index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    gens: u32,
    terms: BTreeMap<u32, Rational>,
}

/// Sign of `e_s ^ e_t` relative to `e_(s|t)`, for disjoint `s`, `t`.
pub fn wedge_sign(s: u32, t: u32) -> i64 {
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        // generators of s above this generator of t must move past it
        inversions += (s >> bit >> 1).count_ones();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Multivector {
    pub fn zero(gens: u32) -> Self {
        assert!(gens <= 32, "at most 32 generators");
        Multivector {
            gens,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(gens: u32) -> Self {
        Self::basis(gens, 0, Rational::one())
    }

    pub fn basis(gens: u32, mask: u32, c: Rational) -> Self {
        let mut out = Self::zero(gens);
        out.add_term(mask, c);
        out
    }

    pub fn generator(gens: u32, index: u32) -> Self {
        Self::basis(gens, 1 << index, Rational::one())
    }

    pub fn gens(&self) -> u32 {
        self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, mask: u32) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mask: u32, c: Rational) {
        debug_assert!(self.gens == 32 || mask >> self.gens == 0);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(Rational::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.gens);
        }
        Multivector {
            gens: self.gens,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        assert_eq!(self.gens, other.gens, "multivectors over different algebras");
        let mut out = Self::zero(self.gens);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                if s & t == 0 {
                    let c = a * b;
                    out.add_term(s | t, if wedge_sign(*s, *t) > 0 { c } else { -c });
                }
            }
        }
        out
    }

    /// `exp(x)` for `x` without constant term, so the series terminates.
    pub fn exp(&self) -> Self {
        assert!(self.coefficient(0).is_zero(), "exp needs a nilpotent argument");
        let mut out = Self::one(self.gens);
        let mut power = Self::one(self.gens);
        for k in 1..=self.gens {
            power = power.wedge(self);
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(&Rational::factorial(k).recip());
        }
        out
    }

    pub fn degree_part(&self, deg: u32) -> Self {
        Multivector {
            gens: self.gens,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == deg)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|m| m.count_ones()).collect();
        ds.sort();
        ds.dedup();
        ds
    }

    /// `(-1)^*`, which is `(-1)^deg` on each homogeneous piece.
    pub fn inv(&self) -> Self {
        Multivector {
            gens: self.gens,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.count_ones() % 2 == 0 { c.clone() } else { -c }))
                .collect(),
        }
    }

    /// Applies an algebra homomorphism given on generators.
    pub fn map_generators(&self, target_gens: u32, images: &[Multivector]) -> Self {
        let mut out = Self::zero(target_gens);
        for (m, c) in &self.terms {
            let mut acc = Self::one(target_gens);
            let mut rest = *m;
            while rest != 0 {
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                acc = acc.wedge(&images[bit as usize]);
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// Ratio `c` with `self = c * other`, if there is one.
    pub fn ratio_to(&self, other: &Self) -> Option<Rational> {
        let (m, x) = other.terms.iter().next()?;
        let c = self.coefficient(*m) / x.clone();
        (other.scale(&c) == *self).then_some(c)
    }
}

impl std::ops::Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.gens, rhs.gens, "multivectors over different algebras");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &rhs.scale(&Rational::integer(-1))
    }
}

impl std::ops::Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(&Rational::integer(-1))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(m, c)| (format!("{m:#b}"), c)))
            .finish()
    }
}
