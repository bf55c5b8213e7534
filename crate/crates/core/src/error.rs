use crate::grade::Bigrade;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycleError {
    #[error("cannot combine a class on {left} with a class on {right}")]
    MixedSpace { left: String, right: String },

    #[error("Pontryagin product of {left} and {right} has negative codimension {codim} on a base of dimension {dim}")]
    NegativeCodim {
        left: String,
        right: String,
        codim: i32,
        dim: usize,
    },

    #[error("component declared with weight {declared} has terms of weight {found:?}")]
    WeightMismatch { declared: i32, found: Vec<i32> },

    #[error("symbol `{name}` has bigrade {grade}, outside the admissible window for dimension {dim}")]
    InadmissibleWeight { name: String, grade: Bigrade, dim: usize },

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("n^* is described by eigenvalues only for n != 0")]
    ZeroMultiplier,
}
