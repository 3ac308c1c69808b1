use thiserror::Error;

use crate::tableaux::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two characters (or residue sequences) live in different `<I^n>`.
    #[error("dimension mismatch: (n={left_n}, e={left_e}) vs (n={right_n}, e={right_e})")]
    DimensionMismatch {
        left_n: usize,
        left_e: usize,
        right_n: usize,
        right_e: usize,
    },

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: Partition, right: Partition },

    #[error("path leaves the dominant chamber at position {position}")]
    NotDominant { position: usize },

    #[error("path point at position {position} does not lie on the requested wall")]
    NotOnWall { position: usize },

    #[error("partition {0} has more than two columns")]
    NotTwoColumn(Partition),

    #[error("partition {shape} is not {e}-restricted")]
    NotRestricted { shape: Partition, e: usize },

    /// The graded decomposition formulas are only certified for p = 0,
    /// p = e, or p coprime to e.
    #[error("(e, p) = ({e}, {p}) is outside the certified range: need p = 0, p = e, or gcd(p, e) = 1")]
    HypothesisGate { e: usize, p: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no (e,p)-regular tableau of shape {0}")]
    EmptyRegularSet(Partition),

    /// Shape data does not satisfy the hypotheses of a homomorphism
    /// pairing / exact sequence construction.
    #[error("pairing hypothesis failed: {0}")]
    Pairing(String),
}

/// Checks the ambient parameter `e >= 2`.
pub(crate) fn check_e(e: usize) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidParameter(format!("e must be at least 2, got {e}")));
    }
    Ok(())
}

/// Checks `p = 0` or `p >= 2`; `p = 1` would make the wall families `e p^z` collapse.
pub(crate) fn check_p(p: usize) -> Result<()> {
    if p == 1 {
        return Err(Error::InvalidParameter("p must be 0 or at least 2".into()));
    }
    Ok(())
}
