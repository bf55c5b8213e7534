//! Evaluation of parsed expressions into classes on `B`.

use rankone_core::grade::Bigrade;
use rankone_core::{CycleB, CycleError, Symbol};

use crate::ast::{AtomAst, ExprAst, SymRef, Term};

/// Evaluation context: the base dimension and whether symbol weights must lie
/// in the admissible window.
#[derive(Clone, Copy, Debug)]
pub struct Env {
    pub dim: usize,
    pub strict: bool,
}

impl Env {
    pub fn new(dim: usize) -> Self {
        Env { dim, strict: false }
    }

    pub fn eval(&self, e: &ExprAst) -> Result<CycleB, CycleError> {
        e.terms
            .iter()
            .try_fold(CycleB::zero(self.dim), |acc, t| Ok(&acc + &self.term(t)?))
    }

    fn term(&self, t: &Term) -> Result<CycleB, CycleError> {
        let mut out = CycleB::one(self.dim);
        for f in &t.factors {
            let x = self.atom(&f.atom)?;
            out = &out * &x.pow(f.power.unwrap_or(1));
        }
        Ok(match &t.coeff {
            Some(c) => out.scale(c),
            None => out,
        })
    }

    fn symbol(&self, s: &SymRef) -> Result<CycleB, CycleError> {
        if self.strict {
            CycleB::symbol_strict(&s.name, s.codim, s.weight, self.dim)
        } else {
            CycleB::symbol(&s.name, s.codim, s.weight, self.dim)
        }
    }

    fn atom(&self, a: &AtomAst) -> Result<CycleB, CycleError> {
        match a {
            AtomAst::Sym(s) => self.symbol(s),
            AtomAst::Point => Ok(CycleB::point(self.dim)),
            AtomAst::Gamma => Ok(CycleB::gamma(self.dim)),
            AtomAst::Fb(e) => Ok(self.eval(e)?.fb()),
            AtomAst::Inv(e) => Ok(self.eval(e)?.inv()),
            AtomAst::Paren(e) => self.eval(e),
            AtomAst::Star(x, y) => {
                self.symbol(x)?;
                self.symbol(y)?;
                let sx = Symbol::new(&x.name, Bigrade::new(x.codim, x.weight));
                let sy = Symbol::new(&y.name, Bigrade::new(y.codim, y.weight));
                CycleB::star(&sx, &sy, self.dim)
            }
        }
    }
}
