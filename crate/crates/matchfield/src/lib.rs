//! Block diagonal matching fields for the Grassmannian `Gr(k, n)`.
//!
//! The crate covers the combinatorics of `k`-subsets, the weight matrices
//! inducing block diagonal matching fields, matching field tableaux and their
//! degree-two normal forms, the binomial ideals they define, the
//! zero/toric/non-toric classification of Schubert degenerations, and exact
//! f-vectors of small matching field polytopes.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod ideal;
pub mod matching_field;
pub mod polytope;
pub mod schubert;
pub mod tableau;

pub use combinatorics::{Comparison, GrassPerm, Subset};
pub use error::{Error, Result};
pub use matching_field::MatchingField;
