use std::fmt;
use std::sync::Arc;

use crate::expr::Monomial;
use crate::grade::Bigrade;

/// Name of the reserved point-class symbol on `B`.
pub const POINT: &str = "pt";

const RESERVED: [&str; 5] = ["gamma", "FB", "inv", "star", "l"];

/// A named bigraded class on the base abelian variety.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol {
    name: Arc<str>,
    grade: Bigrade,
}

impl Symbol {
    pub fn new(name: &str, grade: Bigrade) -> Self {
        Symbol {
            name: Arc::from(name),
            grade,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn grade(&self) -> Bigrade {
        self.grade
    }

    pub fn is_point(&self) -> bool {
        &*self.name == POINT
    }

    pub fn is_reserved_name(name: &str) -> bool {
        RESERVED.contains(&name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, self.grade)
    }
}

/// Generators of the formal Chow ring of `B`.
///
/// The derived order (symbols, then Pontryagin atoms, then transforms, then
/// `gamma`) is the fixed total order behind every normal form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    Sym(Symbol),
    /// Pontryagin product of two symbols, arguments sorted.
    Star(Symbol, Symbol),
    /// `F_B` applied to a monic monomial.
    Fb(Arc<MonoB>),
    /// `gamma = c_1(J)`, bigrade `(1,1)`.
    Gamma,
}

impl Atom {
    pub fn grade(&self, dim: usize) -> Bigrade {
        let d = dim as i32;
        match self {
            Atom::Sym(s) => s.grade,
            Atom::Star(x, y) => Bigrade::new(x.grade.codim + y.grade.codim - d, x.grade.weight + y.grade.weight),
            Atom::Fb(m) => {
                let g = m.grade(dim);
                Bigrade::new(d - g.codim + g.weight, g.weight)
            }
            Atom::Gamma => Bigrade::new(1, 1),
        }
    }

    fn any_symbol(&self, pred: &mut impl FnMut(&Symbol) -> bool) -> bool {
        match self {
            Atom::Sym(s) => pred(s),
            Atom::Star(x, y) => pred(x) || pred(y),
            Atom::Fb(m) => m.any_symbol(pred),
            Atom::Gamma => false,
        }
    }

    fn gamma_count(&self) -> u32 {
        match self {
            Atom::Gamma => 1,
            Atom::Fb(m) => m.gamma_count(),
            _ => 0,
        }
    }
}

/// A monic monomial on `B`: sorted atoms with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct MonoB(Vec<(Atom, u32)>);

impl MonoB {
    pub fn atom(a: Atom) -> Self {
        MonoB(vec![(a, 1)])
    }

    pub fn atom_pow(a: Atom, k: u32) -> Self {
        if k == 0 {
            MonoB::default()
        } else {
            MonoB(vec![(a, k)])
        }
    }

    pub fn factors(&self) -> &[(Atom, u32)] {
        &self.0
    }

    /// The single atom of a degree-one monomial.
    pub fn as_single(&self) -> Option<&Atom> {
        match self.0.as_slice() {
            [(a, 1)] => Some(a),
            _ => None,
        }
    }

    pub fn contains_gamma(&self) -> bool {
        self.gamma_count() > 0
    }

    /// Number of `gamma` factors, counting those inside transform arguments.
    pub fn gamma_count(&self) -> u32 {
        self.0.iter().map(|(a, k)| a.gamma_count() * k).sum()
    }

    /// Whether some symbol (at any depth) satisfies `pred`.
    pub fn any_symbol(&self, pred: &mut impl FnMut(&Symbol) -> bool) -> bool {
        self.0.iter().any(|(a, _)| a.any_symbol(pred))
    }

    fn merge(&self, other: &MonoB) -> MonoB {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        MonoB(out)
    }

    /// Builds a monomial from unsorted factors.
    pub fn from_factors(factors: impl IntoIterator<Item = (Atom, u32)>) -> Self {
        factors
            .into_iter()
            .filter(|(_, k)| *k > 0)
            .fold(MonoB::default(), |acc, (a, k)| acc.merge(&MonoB(vec![(a, k)])))
    }
}

impl Monomial for MonoB {
    const SPACE: &'static str = "B";

    fn one() -> Self {
        MonoB::default()
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn grade(&self, dim: usize) -> Bigrade {
        self.0
            .iter()
            .fold(Bigrade::ZERO, |acc, (a, k)| acc + a.grade(dim) * (*k as i32))
    }

    fn mul(&self, other: &Self, dim: usize) -> Option<Self> {
        self.merge(other).canonical(dim)
    }

    fn canonical(mut self, dim: usize) -> Option<Self> {
        if dim == 0 {
            // on a point the point class is the unit
            self.0.retain(|(a, _)| !matches!(a, Atom::Sym(s) if s.is_point()));
        }
        let g = self.grade(dim);
        if g.codim > dim as i32 || g.codim < 0 {
            None
        } else {
            Some(self)
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Sym(s) => write!(f, "{s}"),
            Atom::Star(x, y) => write!(f, "star({x},{y})"),
            Atom::Fb(m) => write!(f, "FB({m})"),
            Atom::Gamma => write!(f, "gamma"),
        }
    }
}

impl fmt::Display for MonoB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, (a, k)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if *k == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{k}")?;
            }
        }
        Ok(())
    }
}
