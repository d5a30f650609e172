//! Exact symbolic engine for twisted Lie-algebraically deformed
//! relativistic and nonrelativistic phase spaces.
//!
//! The engine builds, from first principles, the deformed Poincaré
//! coproducts of an Abelian twist by explicit conjugation, the dual quantum
//! group, the phase-space cross-relations of the Heisenberg double, the
//! nonrelativistic contraction of the resulting tables, and the deformed
//! uncertainty bounds — all over exact Gaussian-rational arithmetic with
//! truncated power series in the deformation variable `s = 1/(2ξ)`.
//! Every derived table is cross-checked against known closed forms and
//! against internal-consistency laws (Hopf axioms, Jacobi identities,
//! Hopf duality).

pub mod closed_form;
pub mod contraction;
pub mod double;
pub mod dual;
pub mod emit;
pub mod error;
pub mod expr;
pub mod generator;
pub mod pairing;
pub mod poincare;
pub mod reference;
pub mod rewrite;
pub mod rng;
pub mod scalar;
pub mod series;
pub mod tensor;
pub mod uncertainty;

pub use closed_form::{ClosedForm, TrigKind};
pub use error::{EngineError, Result};
pub use expr::NcExpr;
pub use generator::{Generator, Word};
pub use scalar::Scalar;
pub use series::Series;
pub use tensor::TensorExpr;

/// Default truncation order for the deformation series. Three nonzero
/// Taylor coefficients of each elementary function fit below this order,
/// which is what separates the circular from the hyperbolic kinds.
pub const DEFAULT_ORDER: u32 = 8;
