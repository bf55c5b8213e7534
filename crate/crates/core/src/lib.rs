//! Symbolic intersection calculus for the limit of the Fourier-Mukai
//! transform on a rank-one degeneration of abelian varieties.
//!
//! The special fibre is a P^1-bundle `P` over an abelian variety `B` of
//! dimension `d = g - 1`, with its two sections glued. Cycles on it are
//! written `nu_*(q^*z + q^*w . eta)`; [`limit`] computes the limit of the
//! transform both in closed form and by push-pull through the blown-up
//! product of special fibres, and [`oracle`] checks the underlying rules in
//! a concrete cohomology model.

pub mod base;
pub mod bundle;
pub mod demo;
pub mod error;
pub mod expr;
pub mod grade;
pub mod limit;
pub mod oracle;
pub mod rational;

pub use base::{Atom, CycleB, CycleBB, MonoB, MonoBB, Symbol};
pub use bundle::{CycleE, CycleP, CyclePP, CycleV, Div};
pub use error::CycleError;
pub use expr::{Expr, Monomial};
pub use grade::Bigrade;
pub use limit::{LimitResult, Mode, Provenance};
pub use rational::Rational;
