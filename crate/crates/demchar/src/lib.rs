//! Exact weight distributions of Demazure modules of affine sl2.
//!
//! The engine applies Demazure operators to finitely supported integer
//! measures on the weight lattice, computes exact rational statistics of
//! the results (no floating point anywhere in the core), and cross-checks
//! them against closed forms: the dimension formula, the expected-degree
//! formulas for the standard and sigma-extended word families, the
//! finite-weight variance with its q-integer convolution form, maximal
//! degrees, and the limit ratios of expected to maximal degree.
//!
//! The `demchar` binary exposes all of it: `dist`, `hist`, `stats`,
//! `figure` and `verify` subcommands.
//!
//! ```
//! use demchar::demazure::apply_word;
//! use demchar::formulas::{dimension, expected_degree};
//! use demchar::stats::{moment, total_mass};
//! use demchar::Family;
//!
//! let key = Family::Std0.key(1, 0, 2);
//! let mu = apply_word(&key.word(), key.hw());
//! assert_eq!(total_mass(&mu), dimension(&key));
//! assert_eq!(moment(&mu, 1, 0).unwrap(), expected_degree(&key));
//! ```

pub mod cli;
pub mod demazure;
pub mod formulas;
pub mod lattice;
pub mod serialize;
pub mod stats;
pub mod verify;
pub mod weyl;

pub use demazure::SignedMeasure;
pub use formulas::{Family, FamilyKey};
pub use lattice::{HighestWeight, WeightCoord};
pub use stats::Histogram;
pub use weyl::{Generator, Simple, WeylWord};
