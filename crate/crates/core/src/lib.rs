//! Combinatorics of two-column Specht modules at quantum characteristic `e`:
//! tableaux and their lattice paths, `(e, p)`-regularisation, q-characters,
//! graded decomposition and adjustment matrices, and verification suites.
//!
//! All arithmetic is exact. The shared types are re-exported at the root.

pub mod algebra;
pub mod characters;
pub mod decomposition;
pub mod error;
pub mod paths;
pub mod regularisation;
pub mod tableaux;
pub mod verification;

pub use algebra::{Character, Coefficient, LaurentPoly, Residue, ResidueSequence};
pub use decomposition::{AdjustmentMatrix, GradedDecompMatrix};
pub use error::{Error, Result};
pub use paths::{Arc, ArcSign, Path2, PathK};
pub use regularisation::{RegChain, RegPrime, RegResult, RegStage, WTuple};
pub use tableaux::{Node, Partition, StandardTableau};
pub use verification::{Grid, Suite, SuiteReport};
