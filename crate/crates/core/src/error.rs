//! Engine error type.

use crate::generator::Generator;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EngineError {
    /// The rewrite step budget ran out before a normal form was reached.
    RewriteBudgetExceeded,
    /// An out-of-order adjacent pair has no rule in the active rule set.
    MissingRule(Generator, Generator),
    /// Carrier indices violate the carrier-case invariants.
    InvalidCarrier(String),
    /// A contraction scheme was applied to a table of the wrong case.
    SchemeMismatch {
        expected: &'static str,
        got: &'static str,
    },
    /// A relation keeps a positive power of `c` in the large-`c` limit.
    DivergentLimit {
        pair: (Generator, Generator),
        power: i32,
    },
    /// A cross-relation left letters outside the momentum alphabet.
    MixedResidue { pair: (Generator, Generator) },
    /// A table entry has no closed form, so no operator realization exists.
    UnrecognizedEntry { pair: (Generator, Generator) },
    /// Grid refinement was exhausted before the quadrature stabilized.
    QuadratureNonConvergence,
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::RewriteBudgetExceeded => write!(f, "rewrite budget exceeded"),
            EngineError::MissingRule(a, b) => {
                write!(f, "no rewrite rule for adjacent pair {a}{b}")
            }
            EngineError::InvalidCarrier(msg) => write!(f, "invalid carrier: {msg}"),
            EngineError::SchemeMismatch { expected, got } => {
                write!(
                    f,
                    "contraction scheme for case {expected} applied to case {got}"
                )
            }
            EngineError::DivergentLimit { pair, power } => write!(
                f,
                "relation [{}, {}] diverges as c^{} in the large-c limit",
                pair.0, pair.1, power
            ),
            EngineError::MixedResidue { pair } => write!(
                f,
                "cross-relation [{}, {}] left non-momentum letters",
                pair.0, pair.1
            ),
            EngineError::UnrecognizedEntry { pair } => write!(
                f,
                "table entry [{}, {}] has no recognized closed form",
                pair.0, pair.1
            ),
            EngineError::QuadratureNonConvergence => {
                write!(
                    f,
                    "quadrature did not converge within the refinement ladder"
                )
            }
        }
    }
}

impl std::error::Error for EngineError {}

pub type Result<T> = std::result::Result<T, EngineError>;
