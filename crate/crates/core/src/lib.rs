//! Conformable fractional calculus.
//!
//! Expressions in `t` and `alpha`, conformable derivatives and weighted
//! integrals, Taylor expansions with integral remainders, linear initial value
//! problems and numerical checks of integral inequalities.

// `!(x < y)` is used on purpose so that NaN takes the failing branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod calculus;
pub mod error;
pub mod expr;
pub mod family;
pub mod inequalities;
pub mod ivp;
pub mod taylor;

pub use calculus::{Alpha, ConformableFn, Interval, QuadratureConfig, QuadratureMode};
pub use error::{Error, Result};
pub use expr::Expr;
pub use inequalities::{BoundsPair, HypothesisCheck, InequalityReport, Theorem};
