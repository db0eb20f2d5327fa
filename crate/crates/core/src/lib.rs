//! k-polymatroids, their k-natural matroids, and machine verification of the
//! excluded minors for the class whose k-natural matroids are binary.

pub mod binary;
pub mod catalog;
pub mod certify;
pub mod cli;
pub mod compress;
pub mod error;
pub mod natural;
pub mod polymatroid;

pub use error::{Error, Result};
pub use polymatroid::{Polymatroid, Subset, TypeTriple, ValidationReport};
