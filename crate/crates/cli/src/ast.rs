//! Syntax tree for cycle expressions and its canonical printer.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-'? rat? '*'? factor ('*' factor)*  |  '-'? rat
//! factor := atom ('^' int)?
//! atom   := IDENT '[' int ',' int ']' | 'pt' | 'gamma' | 'FB(' expr ')'
//!         | 'inv(' expr ')' | 'star(' sym ',' sym ')' | '(' expr ')'
//! rat    := int ('/' int)?
//! ```
//!
//! Signs are folded into the term coefficient, so `a - 2*b` and `a + -2*b`
//! give the same tree.

use std::fmt;

use rankone_core::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymRef {
    pub name: String,
    pub codim: i32,
    pub weight: i32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AtomAst {
    Sym(SymRef),
    /// Bare `pt`, the point class of whatever base it is evaluated on.
    Point,
    Gamma,
    Fb(Box<ExprAst>),
    Inv(Box<ExprAst>),
    Star(SymRef, SymRef),
    Paren(Box<ExprAst>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factor {
    pub atom: AtomAst,
    pub power: Option<u32>,
}

/// `coeff * f1 * f2 * ...`. A missing coefficient means 1; a term with no
/// factors always has a coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Option<Rational>,
    pub factors: Vec<Factor>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExprAst {
    pub terms: Vec<Term>,
}

impl fmt::Display for SymRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.name, self.codim, self.weight)
    }
}

impl fmt::Display for AtomAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomAst::Sym(s) => write!(f, "{s}"),
            AtomAst::Point => write!(f, "pt"),
            AtomAst::Gamma => write!(f, "gamma"),
            AtomAst::Fb(e) => write!(f, "FB({e})"),
            AtomAst::Inv(e) => write!(f, "inv({e})"),
            AtomAst::Star(x, y) => write!(f, "star({x},{y})"),
            AtomAst::Paren(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            Some(k) => write!(f, "{}^{k}", self.atom),
            None => write!(f, "{}", self.atom),
        }
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, factors: &[Factor]) -> fmt::Result {
    for (i, x) in factors.iter().enumerate() {
        if i > 0 {
            write!(f, "*")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Writes `|coeff|` and the factors. `-1` before factors is written as a
/// bare sign, `+1` explicitly, so printing and parsing are inverse.
fn write_term_body(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    match &t.coeff {
        None => write_factors(f, &t.factors),
        Some(c) if t.factors.is_empty() => write!(f, "{}", c.abs()),
        Some(c) if c.is_negative() && c.abs().is_one() => write_factors(f, &t.factors),
        Some(c) => {
            write!(f, "{}*", c.abs())?;
            write_factors(f, &t.factors)
        }
    }
}

fn is_negative(t: &Term) -> bool {
    t.coeff.as_ref().is_some_and(Rational::is_negative)
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            match (i, is_negative(t)) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term_body(f, t)?;
        }
        Ok(())
    }
}
