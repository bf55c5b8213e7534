//! Chow rings of `P`, `P x P` and the blow-up `V~`.

pub mod blowup;
pub mod projective;

pub use blowup::{lambda_push, lambda_restrict, phi_for, tau_push_xe_closed, tau_push_xe_generic, CycleE, CycleV, Div};
pub use projective::{CycleP, CyclePP};
