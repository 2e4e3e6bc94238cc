//! Parabolic Catalan combinatorics: R-tuples and R-permutations, the maps between
//! them, semistandard tableaux with row bounds, the scanning method, flagged
//! Schur and Demazure polynomials, and exhaustive census sweeps.
//!
//! Indices are 0-based internally. Everything that is parsed or printed is
//! 1-based.

pub mod census;
pub mod error;
pub mod maps;
pub mod polynomials;
pub mod rtuples;
pub mod scanning;
pub mod tableaux;

pub use error::{Error, Result};
pub use maps::{Chain, RPermutation};
pub use polynomials::{Coeff, Composition, SparsePoly};
pub use rtuples::{CriticalList, CriticalPair, FillKind, Label, RSet, RTuple};
pub use census::{Family, Limits, TheoremId, VerificationReport};
pub use tableaux::{Partition, Tableau};
