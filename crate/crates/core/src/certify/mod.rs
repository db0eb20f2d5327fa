//! Excluded-minor certificates, exhaustive sweeps and the decompression check.

mod certificate;
mod classify;
mod decompression;
mod enumerate;

pub use certificate::{in_class, is_excluded_minor, quick_verdict, Certificate, ChildResult, Verdict};
pub use classify::{classify, result_line, Found, SweepMode, SweepReport};
pub use decompression::{verify_no_decompression_excluded, BaseReport, DecompressionReport, DECOMPRESSION_BASES};
pub use enumerate::{enumerate_all, enumerate_polymatroids, sample_polymatroid, Filters, DEFAULT_BUDGET};
