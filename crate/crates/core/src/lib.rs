//! Exact computation of matroid invariants, Chow rings of matroids and
//! mechanical verification of their Hodge-theoretic properties.

pub mod chow;
pub mod corpus;
pub mod descriptor;
pub mod error;
pub mod fan;
pub mod hodge;
pub mod invariants;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod rational;
pub mod report;
pub mod subset;
pub mod suite;

pub use error::{Error, Result};
pub use lattice::FlatsLattice;
pub use matroid::Matroid;
pub use poly::{IntPolynomial, IntPolynomial2};
pub use rational::Rational;
pub use subset::Subset;
