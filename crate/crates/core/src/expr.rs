//! Finite linear combinations of monomials with exact coefficients.
//!
//! An [`Expr`] is always kept in normal form: every monomial is canonical for
//! the ambient dimension, monomials are ordered by their `Ord` impl, like
//! terms are merged and zero coefficients are dropped. Structural equality of
//! two normal forms is therefore equality of classes.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::CycleError;
use crate::grade::Bigrade;
use crate::rational::Rational;

/// A monomial in some formal Chow ring.
///
/// `dim` is the dimension parameter of the ambient space family (for the
/// base variety this is `d = dim B`). Implementations decide what it means
/// for their own space.
pub trait Monomial: Clone + Ord + fmt::Debug + Send + Sync {
    /// Short label of the space, used in diagnostics.
    const SPACE: &'static str;

    fn one() -> Self;

    fn is_one(&self) -> bool;

    fn grade(&self, dim: usize) -> Bigrade;

    /// Product of two canonical monomials; `None` when it vanishes.
    fn mul(&self, other: &Self, dim: usize) -> Option<Self>;

    /// Canonical representative, or `None` when the monomial is zero
    /// (dimension truncation).
    fn canonical(self, dim: usize) -> Option<Self>;
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Expr<M: Monomial> {
    dim: usize,
    terms: BTreeMap<M, Rational>,
}

impl<M: Monomial> Expr<M> {
    pub fn zero(dim: usize) -> Self {
        Expr {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Rational::one())
    }

    pub fn scalar(dim: usize, c: Rational) -> Self {
        let mut e = Self::zero(dim);
        e.add_term(M::one(), c);
        e
    }

    pub fn monomial(dim: usize, m: M) -> Self {
        let mut e = Self::zero(dim);
        e.add_term(m, Rational::one());
        e
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (M, Rational)>,
    {
        let mut e = Self::zero(dim);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, M, Rational> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> btree_map::Keys<'_, M, Rational> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &M) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * m`, canonicalizing `m` first.
    pub fn add_term(&mut self, m: M, c: Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(m) = m.canonical(self.dim) {
            self.add_canonical(m, c);
        }
    }

    fn add_canonical(&mut self, m: M, c: Rational) {
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Re-canonicalizes every term. Idempotent on values built through this
    /// API, which are already normal.
    pub fn normalize(self) -> Self {
        Self::from_terms(self.dim, self.terms)
    }

    fn check_same_space(&self, other: &Self) -> Result<(), CycleError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(CycleError::MixedSpace {
                left: format!("{}(d={})", M::SPACE, self.dim),
                right: format!("{}(d={})", M::SPACE, other.dim),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CycleError> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_canonical(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CycleError> {
        self.check_same_space(other)?;
        let mut out = Self::zero(self.dim);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(m) = m1.mul(m2, self.dim) {
                    out.add_canonical(m, c1 * c2);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        Expr {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&M) -> bool) -> Self {
        Expr {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Rescales every term by a factor depending on its monomial.
    pub fn map_coefficients(&self, mut f: impl FnMut(&M, &Rational) -> Rational) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(m, c)| (m.clone(), f(m, c))))
    }

    /// Linear extension of a map on monomials.
    pub fn flat_map<N: Monomial>(&self, dim: usize, mut f: impl FnMut(&M) -> Expr<N>) -> Expr<N> {
        let mut out = Expr::zero(dim);
        for (m, c) in &self.terms {
            let image = f(m);
            assert_eq!(image.dim, dim, "image lives in a different space");
            for (n, x) in image.terms {
                out.add_canonical(n, x * c);
            }
        }
        out
    }

    /// Distinct bigrades occurring in the expression.
    pub fn grades(&self) -> Vec<Bigrade> {
        let mut gs: Vec<Bigrade> = self.terms.keys().map(|m| m.grade(self.dim)).collect();
        gs.sort();
        gs.dedup();
        gs
    }

    pub fn weights(&self) -> Vec<i32> {
        let mut ws: Vec<i32> = self.grades().into_iter().map(|g| g.weight).collect();
        ws.sort();
        ws.dedup();
        ws
    }

    /// Component of the given Beauville weight.
    pub fn weight_part(&self, weight: i32) -> Self {
        let dim = self.dim;
        self.filter(|m| m.grade(dim).weight == weight)
    }

    pub fn grade_part(&self, grade: Bigrade) -> Self {
        let dim = self.dim;
        self.filter(|m| m.grade(dim) == grade)
    }
}

impl<M: Monomial> fmt::Debug for Expr<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<M: Monomial> Add for &Expr<M> {
    type Output = Expr<M>;
    fn add(self, rhs: &Expr<M>) -> Expr<M> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<M: Monomial> Add for Expr<M> {
    type Output = Expr<M>;
    fn add(self, rhs: Expr<M>) -> Expr<M> {
        &self + &rhs
    }
}

impl<M: Monomial> Sub for &Expr<M> {
    type Output = Expr<M>;
    fn sub(self, rhs: &Expr<M>) -> Expr<M> {
        self + &(-rhs)
    }
}

impl<M: Monomial> Sub for Expr<M> {
    type Output = Expr<M>;
    fn sub(self, rhs: Expr<M>) -> Expr<M> {
        &self - &rhs
    }
}

impl<M: Monomial> Neg for &Expr<M> {
    type Output = Expr<M>;
    fn neg(self) -> Expr<M> {
        Expr {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<M: Monomial> Neg for Expr<M> {
    type Output = Expr<M>;
    fn neg(self) -> Expr<M> {
        -&self
    }
}

impl<M: Monomial> Mul for &Expr<M> {
    type Output = Expr<M>;
    fn mul(self, rhs: &Expr<M>) -> Expr<M> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<M: Monomial> Mul for Expr<M> {
    type Output = Expr<M>;
    fn mul(self, rhs: Expr<M>) -> Expr<M> {
        &self * &rhs
    }
}

impl<M: Monomial> Mul<&Rational> for &Expr<M> {
    type Output = Expr<M>;
    fn mul(self, c: &Rational) -> Expr<M> {
        self.scale(c)
    }
}

impl<M: Monomial> Mul<Rational> for Expr<M> {
    type Output = Expr<M>;
    fn mul(self, c: Rational) -> Expr<M> {
        self.scale(&c)
    }
}
