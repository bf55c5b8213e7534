//! The formal Chow rings of the base `B` and of `B x B`.

pub mod atom;
pub mod cycle_b;
pub mod product;

pub use atom::{Atom, MonoB, Symbol, POINT};
pub use cycle_b::{star_rule_sign, CycleB};
pub use product::{CycleBB, MonoBB};
