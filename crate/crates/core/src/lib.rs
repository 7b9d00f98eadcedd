//! Counting maximal green sequences of Dynkin and extended Dynkin quivers.
//!
//! The pipeline builds a finite catalog of candidate summands
//! ([`catalog`]), decides pairwise compatibility ([`prec`]), constructs the
//! finite part of the Hasse quiver of support τ-tilting modules by
//! breadth-first mutation ([`hasse`]), and counts its source-to-sink paths by
//! length with exact big integers ([`count`]). [`oracle`] enumerates green
//! sequences directly on the framed quiver and is used to cross-check small
//! cases.

pub mod algebra;
pub mod catalog;
pub mod count;
pub mod error;
pub mod hasse;
pub mod matrix;
pub mod oracle;
pub mod pipeline;
pub mod prec;
pub mod presets;
pub mod quiver;

pub use catalog::{Catalog, ModuleTriple};
pub use count::{LengthDistribution, Summary};
pub use error::{Error, ErrorKind, Result};
pub use hasse::HasseGraph;
pub use matrix::{DimVector, IntMatrix};
pub use pipeline::{analyze, Analysis};
pub use prec::PrecTable;
pub use presets::preset;
pub use quiver::{Quiver, QuiverClass};
