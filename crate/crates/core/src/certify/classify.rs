use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use super::certificate::{is_excluded_minor, quick_verdict, Certificate, Verdict};
use super::enumerate::{enumerate_polymatroids, Filters};
use crate::catalog;
use crate::error::Result;
use crate::polymatroid::{CanonicalKey, Polymatroid};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    /// Every polymatroid passing the filters is checked.
    Full,
    /// Only those with `ρ(E) <= ⌊nk/2⌋`; the rest of the excluded minors are
    /// recovered as k-duals of the ones found.
    Restricted,
}

/// An excluded minor found by a sweep.
#[derive(Clone, Debug)]
pub struct Found {
    pub polymatroid: Polymatroid,
    pub key: CanonicalKey,
    pub certificate: Certificate,
    /// Catalog names at this k that are isomorphic to it.
    pub catalog_names: Vec<String>,
    /// Obtained by dualizing an entry found directly.
    pub via_dual: bool,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub k: u32,
    pub n: usize,
    pub filters: Filters,
    pub mode: SweepMode,
    pub enumerated: u64,
    pub nodes: u64,
    /// Sorted by canonical key.
    pub excluded: Vec<Found>,
    /// In restricted mode: every found dual of rank within the cap was
    /// also found directly.
    pub dual_consistent: bool,
    pub elapsed: Duration,
}

impl SweepReport {
    /// Catalog entries on `n` elements that the sweep did not find.
    pub fn missing_catalog_entries(&self) -> Result<Vec<String>> {
        let mut missing = Vec::new();
        for entry in catalog::list_for_k(self.k)? {
            if entry.polymatroid.len() != self.n {
                continue;
            }
            let key = entry.polymatroid.canonical_key();
            if !self.excluded.iter().any(|f| f.key == key) {
                missing.push(entry.name);
            }
        }
        Ok(missing)
    }

    /// Excluded minors that match no catalog entry.
    pub fn uncatalogued(&self) -> Vec<&Found> {
        self.excluded.iter().filter(|f| f.catalog_names.is_empty()).collect()
    }

    /// Found set equals the catalog's `n`-element entries.
    pub fn matches_catalog(&self) -> Result<bool> {
        Ok(self.missing_catalog_entries()?.is_empty() && self.uncatalogued().is_empty())
    }

    /// One `result …` line per excluded minor, sorted.
    pub fn machine_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> =
            self.excluded.iter().map(|f| result_line(&f.polymatroid, f.certificate.verdict)).collect();
        lines.sort();
        lines
    }
}

/// `result name=<hash> verdict=<v> rankE=<int> type=<a1,akm1,ak>`; the type
/// is `-` when some singleton rank is outside `{1, k−1, k}`.
pub fn result_line(p: &Polymatroid, verdict: Verdict) -> String {
    let t = p.type_of().map(|t| t.to_string()).unwrap_or_else(|_| "-".to_string());
    format!(
        "result name={} verdict={} rankE={} type={}",
        p.canonical_key().hash_hex(),
        verdict,
        p.total_rank(),
        t
    )
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            SweepMode::Full => "full",
            SweepMode::Restricted => "restricted",
        };
        writeln!(f, "k = {}, |E| = {}, mode = {mode}, filters: {}", self.k, self.n, self.filters)?;
        writeln!(f, "enumerated {} polymatroids ({} search nodes) in {:.2?}", self.enumerated, self.nodes, self.elapsed)?;
        writeln!(f, "excluded minors found: {}", self.excluded.len())?;
        for found in &self.excluded {
            let names = if found.catalog_names.is_empty() {
                "uncatalogued".to_string()
            } else {
                found.catalog_names.join(" = ")
            };
            let origin = if found.via_dual { " (as a dual)" } else { "" };
            writeln!(
                f,
                "  {} rankE={} {}{}",
                found.key.hash_hex(),
                found.polymatroid.total_rank(),
                names,
                origin
            )?;
        }
        if self.mode == SweepMode::Restricted {
            writeln!(f, "dual consistency: {}", if self.dual_consistent { "ok" } else { "FAILED" })?;
        }
        write!(f, "machine-verified for k = {} only", self.k)
    }
}

fn catalog_names(k: u32, p: &Polymatroid) -> Result<Vec<String>> {
    if k < 3 {
        return Ok(Vec::new());
    }
    let key = p.canonical_key();
    Ok(catalog::list_for_k(k)?
        .into_iter()
        .filter(|e| e.polymatroid.len() == p.len() && e.polymatroid.canonical_key() == key)
        .map(|e| e.name)
        .collect())
}

fn found(k: u32, p: Polymatroid, via_dual: bool) -> Result<Found> {
    let p = p.canonical_form();
    Ok(Found {
        key: p.canonical_key(),
        certificate: is_excluded_minor(&p)?,
        catalog_names: catalog_names(k, &p)?,
        polymatroid: p,
        via_dual,
    })
}

/// Runs the excluded-minor test over an enumeration.
pub fn classify(k: u32, n: usize, filters: &Filters, mode: SweepMode, budget: u64) -> Result<SweepReport> {
    let start = Instant::now();
    let mut filters = filters.clone();
    if mode == SweepMode::Restricted {
        let cap = n as u32 * k / 2;
        filters.max_total_rank = Some(filters.max_total_rank.map_or(cap, |m| m.min(cap)));
    }
    let mut direct: BTreeMap<CanonicalKey, Polymatroid> = BTreeMap::new();
    let mut enumerated = 0u64;
    let nodes = enumerate_polymatroids(k, n, &filters, budget, |p| {
        enumerated += 1;
        if quick_verdict(&p)? == Verdict::ExcludedMinor {
            direct.insert(p.canonical_key(), p);
        }
        Ok(())
    })?;
    let mut excluded: BTreeMap<CanonicalKey, Found> = BTreeMap::new();
    for (key, p) in &direct {
        excluded.insert(key.clone(), found(k, p.clone(), false)?);
    }
    let mut dual_consistent = true;
    if mode == SweepMode::Restricted {
        for p in direct.values() {
            let d = p.dual();
            let key = d.canonical_key();
            if direct.contains_key(&key) {
                continue;
            }
            if filters.max_total_rank.is_some_and(|m| d.total_rank() <= m) && filters.accepts(&d) {
                dual_consistent = false;
            }
            if let Entry::Vacant(slot) = excluded.entry(key) {
                slot.insert(found(k, d, true)?);
            }
        }
    }
    let excluded: Vec<Found> = excluded.into_values().collect();
    Ok(SweepReport {
        k,
        n,
        filters,
        mode,
        enumerated,
        nodes,
        excluded,
        dual_consistent,
        elapsed: start.elapsed(),
    })
}
