//! Cactus group action on standard Young tableaux.
//!
//! The crate provides:
//!
//! - partition arithmetic and shape predicates ([`partition`]);
//! - standard tableau validation, canonical enumeration and indexing
//!   ([`tableau`]);
//! - the action itself: Bender-Knuth involutions, jeu de taquin
//!   evacuation, partial Schützenberger involutions and interval
//!   generators, plus exhaustive checks of the defining relations
//!   ([`cactus`]);
//! - induced permutations of the tableau index space, their parity and
//!   fixed points, and exact small-degree group orders via a stabilizer
//!   chain ([`perm`]);
//! - orbit decomposition of the diagonal action on pairs and triples
//!   ([`orbits`]);
//! - batch classification of shapes as symmetric-vs-alternating image,
//!   with a parity fast path that needs no enumeration ([`survey`]).

pub mod cactus;
pub mod error;
pub mod orbits;
pub mod partition;
pub mod perm;
pub mod survey;
pub mod tableau;

pub use cactus::{CactusAtom, GeneratorWord, IdentityReport, RelationReport};
pub use error::{Error, Result};
pub use orbits::{OrbitDecomposition, OrbitInfo, OrbitLabels, TuplePoint};
pub use partition::{partitions_of, Partition};
pub use perm::{Parity, TableauPermutation};
pub use survey::{ClassificationReport, ClassifyMethod, SurveyConfig, SurveySummary, Verdict};
pub use tableau::{StandardTableau, SytTable, TableauIndex};
