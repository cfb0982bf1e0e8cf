//! Error type shared across the crate.

use crate::goodness::ClassificationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two values live in polynomial rings with different variable counts.
    #[error("dimension mismatch: {left} variables vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An exponent left the 64-bit range during a multiplication.
    #[error("exponent overflow: product exceeds 64-bit exponents")]
    ExponentOverflow,

    /// No pure power of the named variable occurs among the minimal
    /// generators, so the ideal is not m-primary.
    #[error("not m-primary: no pure power of variable {var} among the minimal generators")]
    NotMPrimary { var: usize },

    /// Colon by the zero ideal is undefined.
    #[error("colon by the zero ideal is undefined")]
    ColonByZero,

    /// An operation that requires a good ideal (box decomposition
    /// principle) was handed a bad one. Carries the full classification
    /// report, including the failing witness.
    #[error("bad ideal: the box decomposition principle fails")]
    BadIdeal(Box<ClassificationReport>),

    /// The ascending search for the power index exhausted its lcm bound,
    /// which means the monomial violates the degree condition.
    #[error("no power index found up to the lcm bound {bound}")]
    NoPowerIndex { bound: u128 },

    /// A cone decomposition was requested at a point outside the cone.
    #[error("point {point:?} does not lie in the cone")]
    PointNotInCone { point: Vec<u64> },

    /// An axis index at or beyond the variable count.
    #[error("axis {axis} out of range for {num_vars} variables")]
    AxisOutOfRange { axis: usize, num_vars: usize },
}
