//! Exact combinatorics for boundary links: Seifert matrices under
//! S-equivalence, good-basis detection, link diagrams with cabling and
//! push-offs, Milnor invariants through the Magnus expansion, and a
//! certifier for the hypotheses of the free-sliceness theorem for good
//! boundary links carrying a homotopically trivial+ good basis.
//!
//! The algebra is generic over [`Scalar`]; the aliases below fix the scalar
//! to [`num_bigint::BigInt`], which is what the CLI and catalog use.

pub mod catalog;
pub mod certify;
pub mod diagram;
pub mod error;
pub mod json;
pub mod matrix;
pub mod milnor;
pub mod random;
pub mod scalar;
pub mod scalc;
pub mod seifert;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Int = num_bigint::BigInt;

pub type IntMatrix = matrix::Matrix<Int>;
pub type SeifertMatrix = seifert::SeifertMatrix<Int>;
pub type Congruence = scalc::Congruence<Int>;
pub type Enlargement = scalc::Enlargement<Int>;
pub type SMove = scalc::SMove<Int>;
pub type MoveSequence = scalc::MoveSequence<Int>;
pub type MagnusSeries = milnor::MagnusSeries<Int>;
pub type MuEntry = milnor::MuEntry<Int>;
pub type MuTable = milnor::MuTable<Int>;
pub type Bundle = certify::Bundle<Int>;
