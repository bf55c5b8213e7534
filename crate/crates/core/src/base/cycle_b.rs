//! The formal Chow ring of the base `B` and the operators acting on it.

use std::fmt;
use std::sync::Arc;

use super::atom::{Atom, MonoB, Symbol};
use crate::error::CycleError;
use crate::expr::{Expr, Monomial};
use crate::grade::Bigrade;
use crate::rational::Rational;

/// A class on `B`, `dim = d = g - 1`.
pub type CycleB = Expr<MonoB>;

/// Sign `c` in `F_B(x * y) = c * F_B(x) . F_B(y)` for even classes.
///
/// The cohomology oracle measures this constant for every `d` it supports
/// (see `oracle::intertwining_sign`); it is `+1` throughout.
pub fn star_rule_sign(_dim: usize) -> Rational {
    Rational::one()
}

impl CycleB {
    /// A named symbol `name[codim,weight]`.
    ///
    /// `pt` is reserved for the point class and must carry bigrade `[d,0]`.
    pub fn symbol(name: &str, codim: i32, weight: i32, dim: usize) -> Result<CycleB, CycleError> {
        Ok(Expr::monomial(
            dim,
            MonoB::atom(Atom::Sym(checked_symbol(name, codim, weight, dim)?)),
        ))
    }

    /// Like [`CycleB::symbol`] but rejects weights outside `i - d <= j <= i`.
    pub fn symbol_strict(name: &str, codim: i32, weight: i32, dim: usize) -> Result<CycleB, CycleError> {
        let grade = Bigrade::new(codim, weight);
        if !grade.is_admissible(dim) {
            return Err(CycleError::InadmissibleWeight {
                name: name.to_string(),
                grade,
                dim,
            });
        }
        Self::symbol(name, codim, weight, dim)
    }

    pub fn from_symbol(s: &Symbol, dim: usize) -> CycleB {
        Expr::monomial(dim, MonoB::atom(Atom::Sym(s.clone())))
    }

    /// Class of a point; the unit when `B` is itself a point.
    pub fn point(dim: usize) -> CycleB {
        Expr::monomial(
            dim,
            MonoB::atom(Atom::Sym(Symbol::new(super::atom::POINT, Bigrade::new(dim as i32, 0)))),
        )
    }

    pub fn gamma(dim: usize) -> CycleB {
        Self::gamma_pow(1, dim)
    }

    pub fn gamma_pow(k: u32, dim: usize) -> CycleB {
        Expr::monomial(dim, MonoB::atom_pow(Atom::Gamma, k))
    }

    /// Pontryagin product of two symbols, kept as an opaque atom.
    pub fn star(x: &Symbol, y: &Symbol, dim: usize) -> Result<CycleB, CycleError> {
        let codim = x.grade().codim + y.grade().codim - dim as i32;
        if codim < 0 {
            return Err(CycleError::NegativeCodim {
                left: x.to_string(),
                right: y.to_string(),
                codim,
                dim,
            });
        }
        // the origin is the unit for the group law
        if x.is_point() && x.grade().codim == dim as i32 {
            return Ok(Self::from_symbol(y, dim));
        }
        if y.is_point() && y.grade().codim == dim as i32 {
            return Ok(Self::from_symbol(x, dim));
        }
        let (a, b) = if x <= y { (x, y) } else { (y, x) };
        Ok(Expr::monomial(dim, MonoB::atom(Atom::Star(a.clone(), b.clone()))))
    }

    /// The Fourier-Mukai transform `F_B`, extended linearly.
    pub fn fb(&self) -> CycleB {
        let dim = self.dim();
        self.flat_map(dim, |m| fb_monomial(m, dim))
    }

    /// `(-1)^*`: multiplies the `(i,j)` component by `(-1)^j`.
    pub fn inv(&self) -> CycleB {
        let dim = self.dim();
        self.map_coefficients(|m, c| {
            if m.grade(dim).weight.rem_euclid(2) == 0 {
                c.clone()
            } else {
                -c
            }
        })
    }

    /// `n^*`: multiplies the `(i,j)` component by `n^(2i - j)`.
    pub fn nstar(&self, n: i64) -> Result<CycleB, CycleError> {
        if n == 0 {
            return Err(CycleError::ZeroMultiplier);
        }
        let dim = self.dim();
        let base = Rational::integer(n);
        Ok(self.map_coefficients(|m, c| c * base.pow(m.grade(dim).eigen_exponent())))
    }

    /// Drops every term that contains `gamma`, at any depth. This is the
    /// passage to algebraic equivalence, where `gamma` is zero.
    pub fn kill_gamma(&self) -> CycleB {
        self.filter(|m| !m.contains_gamma())
    }

    /// Drops terms involving symbols whose weight lies outside
    /// `i - d <= j <= i`; such Beauville components vanish.
    pub fn admissible_part(&self) -> CycleB {
        let dim = self.dim();
        self.filter(|m| !m.any_symbol(&mut |s| !s.grade().is_admissible(dim)))
    }

    /// Whether every term has the given weight.
    pub fn is_homogeneous_weight(&self, weight: i32) -> bool {
        self.weights().iter().all(|w| *w == weight)
    }
}

fn checked_symbol(name: &str, codim: i32, weight: i32, dim: usize) -> Result<Symbol, CycleError> {
    let valid = !name.is_empty()
        && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
    if !valid || Symbol::is_reserved_name(name) {
        return Err(CycleError::InvalidSymbol(format!(
            "`{name}` is not a usable symbol name"
        )));
    }
    if codim < 0 {
        return Err(CycleError::InvalidSymbol(format!(
            "`{name}` has negative codimension {codim}"
        )));
    }
    let s = Symbol::new(name, Bigrade::new(codim, weight));
    if s.is_point() && s.grade() != Bigrade::new(dim as i32, 0) {
        return Err(CycleError::InvalidSymbol(format!(
            "the point class `pt` must have bigrade [{dim},0]"
        )));
    }
    Ok(s)
}

fn fb_symbol(s: &Symbol, dim: usize) -> CycleB {
    fb_monomial(&MonoB::atom(Atom::Sym(s.clone())), dim)
}

/// `F_B` on a single monic monomial.
fn fb_monomial(m: &MonoB, dim: usize) -> CycleB {
    let d = dim as i32;
    let parity = Rational::sign(d as i64);

    // F(1) = (-1)^d [pt] and F([pt]) = 1
    if m.is_one() {
        return CycleB::point(dim).scale(&parity);
    }
    match m.as_single() {
        Some(Atom::Sym(s)) if s.is_point() => return CycleB::one(dim),
        // F(F(x)) = (-1)^d (-1)^* x
        Some(Atom::Fb(inner)) => {
            return Expr::monomial(dim, (**inner).clone()).inv().scale(&parity);
        }
        // F(x * y) = c F(x) F(y)
        Some(Atom::Star(x, y)) => {
            return (&fb_symbol(x, dim) * &fb_symbol(y, dim)).scale(&star_rule_sign(dim));
        }
        _ => {}
    }
    if let Some((x, y)) = transform_pair(m) {
        // F(F(x) F(y)) = c F(F(x * y)) = c (-1)^d (-1)^*(x * y)
        if let Ok(st) = CycleB::star(&x, &y, dim) {
            return st.inv().scale(&(parity * star_rule_sign(dim)));
        }
    }

    let g = m.grade(dim);
    let target = d - g.codim + g.weight;
    if target < 0 || target > d {
        return CycleB::zero(dim);
    }
    Expr::monomial(dim, MonoB::atom(Atom::Fb(Arc::new(m.clone()))))
}

/// Recognizes `F(x) F(y)` with `x`, `y` plain symbols other than the point.
fn transform_pair(m: &MonoB) -> Option<(Symbol, Symbol)> {
    let sym_arg = |a: &Atom| match a {
        Atom::Fb(inner) => match inner.as_single() {
            Some(Atom::Sym(s)) if !s.is_point() => Some(s.clone()),
            _ => None,
        },
        _ => None,
    };
    match m.factors() {
        [(a, 2)] => {
            let s = sym_arg(a)?;
            Some((s.clone(), s))
        }
        [(a, 1), (b, 1)] => Some((sym_arg(a)?, sym_arg(b)?)),
        _ => None,
    }
}

/// Text form used by the CLI and accepted back by its parser.
pub struct DisplayB<'a>(pub &'a CycleB);

impl fmt::Display for DisplayB<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.0.terms())
    }
}

pub(crate) fn write_linear<'a, M: fmt::Display + 'a + Monomial>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a M, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        if m.is_one() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            write!(f, "{m}")?;
        } else {
            write!(f, "{abs}*{m}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Expr<MonoB> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear(f, self.terms())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(name: &str, i: i32, j: i32, d: usize) -> CycleB {
        CycleB::symbol(name, i, j, d).unwrap()
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let z = sym("z", 1, 1, 2);
        let e = &z.scale(&Rational::integer(2)) + &z.scale(&Rational::integer(3));
        assert_eq!(e, z.scale(&Rational::integer(5)));
        let zg = &z * &CycleB::gamma(2);
        assert!((&zg - &zg).is_zero());
    }

    #[test]
    fn dimension_truncation() {
        assert!(CycleB::gamma_pow(2, 1).is_zero());
        let g = CycleB::gamma(3);
        assert!(g.pow(3).len() == 1 && g.pow(4).is_zero());
    }

    #[test]
    fn product_adds_bigrades() {
        let z = sym("z", 1, 1, 2);
        let p = &z * &CycleB::gamma(2);
        assert_eq!(p.grades(), vec![Bigrade::new(2, 2)]);
        let w = sym("w", 0, 0, 2);
        let lhs = &(&z + &w) * &CycleB::gamma(2);
        let rhs = &(&z * &CycleB::gamma(2)) + &(&w * &CycleB::gamma(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn distinct_symbols_differ() {
        assert_ne!(sym("z", 1, 0, 2), sym("z", 1, 1, 2));
        let x = sym("x", 1, 0, 2);
        assert_eq!(x.clone().normalize(), (&x + &CycleB::zero(2)).normalize());
    }

    #[test]
    fn fb_shifts_bigrade() {
        let d = 4;
        let z = sym("z", 3, 1, d);
        let f = z.fb();
        assert_eq!(f.grades(), vec![Bigrade::new(2, 1)]);
        assert!(CycleB::zero(d).fb().is_zero());
    }

    #[test]
    fn fb_twice_is_signed_inversion() {
        for d in 0..6 {
            for i in 0..=d as i32 {
                for j in 0..=i {
                    let z = sym("z", i, j, d);
                    let expect = z.scale(&(Rational::sign(d as i64) * Rational::sign(j as i64)));
                    assert_eq!(z.fb().fb(), expect, "d={d} z[{i},{j}]");
                }
            }
        }
    }

    #[test]
    fn fb_of_point_and_unit() {
        for d in 0..5 {
            assert_eq!(CycleB::point(d).fb(), CycleB::one(d));
            assert_eq!(CycleB::one(d).fb(), CycleB::point(d).scale(&Rational::sign(d as i64)));
        }
        // on a point, pt = 1 and F is the identity on constants
        assert_eq!(CycleB::point(0), CycleB::one(0));
    }

    #[test]
    fn fb_of_star_splits() {
        let d = 4;
        let c0 = Symbol::new("C", Bigrade::new(3, 0));
        let c1 = Symbol::new("C", Bigrade::new(3, 1));
        let st = CycleB::star(&c0, &c1, d).unwrap();
        assert_eq!(st.grades(), vec![Bigrade::new(2, 1)]);
        let lhs = st.fb();
        let rhs = &CycleB::from_symbol(&c0, d).fb() * &CycleB::from_symbol(&c1, d).fb();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.fb(), st.inv().scale(&Rational::sign(d as i64)));
        let cc = CycleB::star(&c0, &c0, d).unwrap();
        assert_eq!(cc.grades(), vec![Bigrade::new(2, 0)]);
    }

    #[test]
    fn star_codim_guard() {
        let a = Symbol::new("a", Bigrade::new(1, 0));
        let err = CycleB::star(&a, &a, 4).unwrap_err();
        assert!(matches!(err, CycleError::NegativeCodim { codim: -2, .. }));
    }

    #[test]
    fn inversion_and_multiplication() {
        let d = 3;
        assert_eq!(sym("z", 1, 0, d).inv(), sym("z", 1, 0, d));
        assert_eq!(sym("z", 1, 1, d).inv(), -sym("z", 1, 1, d));
        let x = &sym("x", 2, 1, d) + &sym("y", 1, 0, d);
        assert_eq!(x.inv().inv(), x);
        assert_eq!(x.nstar(1).unwrap(), x);
        assert_eq!(x.nstar(-1).unwrap(), x.inv());
        assert_eq!(
            sym("z", 1, 1, d).nstar(2).unwrap(),
            sym("z", 1, 1, d).scale(&Rational::integer(2))
        );
        assert_eq!(x.nstar(2).unwrap().nstar(3).unwrap(), x.nstar(6).unwrap());
        assert!(matches!(x.nstar(0), Err(CycleError::ZeroMultiplier)));
    }

    #[test]
    fn kill_gamma_reaches_inside_transforms() {
        let d = 3;
        let w = sym("w", 0, 0, d);
        let g = CycleB::gamma(d);
        let e = &w.fb() + &(&(&w * &g).fb() * &g);
        assert_eq!(e.kill_gamma(), w.fb());
        assert_eq!(e.kill_gamma().kill_gamma(), e.kill_gamma());
        assert!((&w * &g).fb().kill_gamma().is_zero());
    }

    #[test]
    fn symbol_validation() {
        assert!(CycleB::symbol("gamma", 1, 0, 2).is_err());
        assert!(CycleB::symbol("z", -1, 0, 2).is_err());
        assert!(CycleB::symbol("pt", 1, 0, 2).is_err());
        assert!(CycleB::symbol("pt", 2, 0, 2).is_ok());
        assert!(CycleB::symbol_strict("z", 0, 3, 2).is_err());
        assert!(CycleB::symbol_strict("z", 2, 1, 2).is_ok());
    }

    #[test]
    fn text_form() {
        let d = 1;
        let z = sym("z", 1, 1, d);
        let w = sym("w", 0, 0, d);
        let b = &(-z.fb()) - &(&w * &CycleB::gamma(d)).fb().scale(&Rational::new(1, 2));
        assert_eq!(b.to_string(), "-1/2*FB(w[0,0]*gamma) - FB(z[1,1])");
        assert_eq!(CycleB::zero(d).to_string(), "0");
        assert_eq!(CycleB::scalar(d, Rational::new(-3, 2)).to_string(), "-3/2");
    }
}
