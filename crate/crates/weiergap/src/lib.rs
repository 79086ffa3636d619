//! Weierstrass gap sequences: validation, enumeration, counting,
//! dimension ladders, and weight-based classification.
//!
//! A gap sequence of genus g is a set of g integers 1 = n_1 < ... < n_g
//! <= 2g - 1 whose complement in the nonnegative integers is closed under
//! addition. The crate builds these from both directions: [`sequence`]
//! checks candidates, [`enumerate`] generates the full catalog per genus,
//! [`ladder`] moves between gap sets and dimension ladders, [`analysis`]
//! classifies and bounds, and [`cli`] exposes the lot as a command-line
//! tool with [`cache`]-backed counting and a [`selftest`] suite.

mod bitset;

pub mod analysis;
pub mod cache;
pub mod cli;
pub mod enumerate;
pub mod ladder;
pub mod record;
pub mod selftest;
pub mod sequence;

pub use analysis::{AnalysisError, Classification, PointCountBounds, WeightReport};
pub use cache::{load_counts, save_counts, CacheError};
pub use enumerate::{EnumerationError, EnumerationResult, GenusCount, SequenceFilter, TreeNode};
pub use ladder::{DimensionLadder, LadderError, LadderLaw, LadderReport, LawCheck};
pub use record::SequenceRecord;
pub use selftest::{run_selftest, SelftestConfig};
pub use sequence::{validate, GapSequence, NonGapSet, ValidationError, ValidationErrorKind};
