//! Exact computations on finite-dimensional Lie superalgebras given by graded
//! structure constants: superderivations, the centroid, linear super-commuting
//! maps, and super-biderivations, together with checkers for the identities
//! relating them.
//!
//! Everything is computed over the rationals with exact arithmetic. The
//! theory behind the checks assumes an algebraically closed ground field; the
//! built-in catalog only contains split algebras, for which the rational
//! computations give the same dimensions.

pub mod algebra;
pub mod bider;
pub mod catalog;
pub mod error;
pub mod linalg;
pub mod lsa;
pub mod maps;
pub mod parity;
pub mod rational;
pub mod subspaces;
pub mod violation;

pub use algebra::{AlgebraVector, LieSuperalgebra, Quotient, ValidationReport};
pub use bider::{BiderivationKind, BiderivationSpace, GradedBilinearMap};
pub use catalog::{make, AlgebraSpec};
pub use error::{Error, Result};
pub use linalg::{EchelonBasis, Matrix};
pub use maps::{GradedLinearMap, MapKind, MapSpace};
pub use parity::Parity;
pub use rational::Rational;
pub use subspaces::HypothesisReport;
pub use violation::{Identity, Violation};
