use std::fmt;
use std::time::{Duration, Instant};

use super::certificate::{is_excluded_minor, Verdict};
use crate::catalog;
use crate::compress::enumerate_decompressions;
use crate::error::Result;

/// Outcome for one base polymatroid.
#[derive(Clone, Debug)]
pub struct BaseReport {
    pub base: String,
    pub decompressions: usize,
    pub in_class: usize,
    pub not_excluded: usize,
    pub excluded: usize,
    /// Every excluded-minor certificate reproduced on replay.
    pub certificates_replayed: bool,
}

#[derive(Clone, Debug)]
pub struct DecompressionReport {
    pub k: u32,
    pub bases: Vec<BaseReport>,
    pub elapsed: Duration,
}

impl DecompressionReport {
    /// No decompression of any base is an excluded minor.
    pub fn holds(&self) -> bool {
        self.bases.iter().all(|b| b.excluded == 0 && b.certificates_replayed)
    }

    pub fn total(&self) -> usize {
        self.bases.iter().map(|b| b.decompressions).sum()
    }
}

impl fmt::Display for DecompressionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k = {}, decompressions by d with ρ'(d) in {{k-1, k}}, l in 1..k-1", self.k)?;
        for b in &self.bases {
            writeln!(
                f,
                "  {}: {} decompressions, {} in class, {} not excluded, {} excluded",
                b.base, b.decompressions, b.in_class, b.not_excluded, b.excluded
            )?;
        }
        writeln!(f, "elapsed {:.2?}", self.elapsed)?;
        write!(
            f,
            "{} (machine-verified for k = {} only)",
            if self.holds() { "no decompression is an excluded minor" } else { "FAILED" },
            self.k
        )
    }
}

/// The bases the no-decompression argument reduces to.
pub const DECOMPRESSION_BASES: [&str; 3] = [catalog::U24, catalog::EX_301, catalog::EX_202];

/// Enumerates every decompression of the three bases and certifies each.
pub fn verify_no_decompression_excluded(k: u32, budget: u64) -> Result<DecompressionReport> {
    let start = Instant::now();
    let mut bases = Vec::new();
    for name in DECOMPRESSION_BASES {
        let base = catalog::build(name, k)?.polymatroid;
        let found = enumerate_decompressions(&base, "d", &[k - 1, k], 1..=k - 1, budget)?;
        let mut report = BaseReport {
            base: name.to_string(),
            decompressions: found.len(),
            in_class: 0,
            not_excluded: 0,
            excluded: 0,
            certificates_replayed: true,
        };
        for dec in &found {
            let cert = is_excluded_minor(&dec.polymatroid)?;
            match cert.verdict {
                Verdict::InClass => report.in_class += 1,
                Verdict::NotExcluded => report.not_excluded += 1,
                Verdict::ExcludedMinor => {
                    report.excluded += 1;
                    report.certificates_replayed &= cert.replay()?;
                }
            }
        }
        bases.push(report);
    }
    Ok(DecompressionReport { k, bases, elapsed: start.elapsed() })
}
