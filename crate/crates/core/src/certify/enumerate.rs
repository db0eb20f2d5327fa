//! Orderly generation of k-polymatroids on `n` elements up to isomorphism.
//!
//! Ranks are assigned to subsets in size-then-mask order. Each value lies
//! between the monotone floor and the submodular ceilings of its lower
//! neighbours, so every completed table is a polymatroid. Whenever a level
//! is finished the partial table is compared against its images under all
//! permutations and dropped unless it is the least, which leaves exactly
//! one representative (the canonical form) per isomorphism class.

use rand::Rng;

use crate::compress::bounds;
use crate::error::{Error, Result};
use crate::polymatroid::{canonical_labels, invert, level_order, map_subset, Permutations, Polymatroid, Subset};

/// Default cap on search nodes per sweep.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    /// Allowed singleton ranks; `None` allows `0..=k`.
    pub singleton_ranks: Option<Vec<u32>>,
    /// Cap on `ρ(E)` (and hence on every rank).
    pub max_total_rank: Option<u32>,
    /// No loops and no parallel points.
    pub simple: bool,
    pub connected: bool,
}

impl Filters {
    pub fn none() -> Filters {
        Filters::default()
    }

    /// Necessary conditions for an excluded minor: simple, connected, and
    /// singleton ranks in `{1, k−1, k}`. On one element only validity.
    pub fn default_for(k: u32, n: usize) -> Filters {
        if n < 2 {
            return Filters::none();
        }
        let mut ranks = vec![1, k - 1, k];
        ranks.dedup();
        Filters { singleton_ranks: Some(ranks), max_total_rank: None, simple: true, connected: true }
    }

    pub fn accepts(&self, p: &Polymatroid) -> bool {
        let k = p.k();
        let ranks_ok = (0..p.len()).all(|i| self.singleton_allowed(p.element_rank(i), k));
        ranks_ok
            && self.max_total_rank.is_none_or(|m| p.total_rank() <= m)
            && (!self.simple || p.is_simple())
            && (!self.connected || p.is_connected())
    }

    fn singleton_allowed(&self, r: u32, k: u32) -> bool {
        r <= k
            && self.singleton_ranks.as_ref().is_none_or(|s| s.contains(&r))
            && !(self.simple && r == 0)
    }

    /// True when the filter set is mapped to itself by k-duality on the
    /// polymatroids that matter (excluded minors), i.e. when no rank cap
    /// is imposed.
    pub fn is_duality_symmetric(&self) -> bool {
        self.max_total_rank.is_none()
    }
}

impl std::fmt::Display for Filters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if let Some(r) = &self.singleton_ranks {
            let r: Vec<String> = r.iter().map(u32::to_string).collect();
            parts.push(format!("singleton-ranks={{{}}}", r.join(",")));
        }
        if let Some(m) = self.max_total_rank {
            parts.push(format!("rankE<={m}"));
        }
        if self.simple {
            parts.push("simple".into());
        }
        if self.connected {
            parts.push("connected".into());
        }
        if parts.is_empty() {
            f.write_str("valid")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

struct Generator<'a, F> {
    k: u32,
    filters: &'a Filters,
    order: Vec<Subset>,
    perms: Vec<Vec<usize>>,
    ranks: Vec<u32>,
    nodes: u64,
    budget: u64,
    labels: Vec<String>,
    emit: F,
}

impl<F: FnMut(Polymatroid) -> Result<()>> Generator<'_, F> {
    fn dfs(&mut self, pos: usize) -> Result<()> {
        if pos == self.order.len() {
            let p = Polymatroid::new(self.labels.clone(), self.k, self.ranks.clone())?;
            if !self.filters.connected || p.is_connected() {
                (self.emit)(p)?;
            }
            return Ok(());
        }
        let s = self.order[pos];
        let (lo, mut hi) = bounds(&self.ranks, s, self.k);
        if let Some(m) = self.filters.max_total_rank {
            hi = hi.min(m);
        }
        for v in lo..=hi {
            if !self.admissible(s, v) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.ranks[s.0 as usize] = v;
            let next = pos + 1;
            let level_done = next == self.order.len() || self.order[next].len() != s.len();
            if level_done && !self.is_canonical_prefix(next) {
                continue;
            }
            self.dfs(next)?;
        }
        self.ranks[s.0 as usize] = 0;
        Ok(())
    }

    fn admissible(&self, s: Subset, v: u32) -> bool {
        match s.len() {
            1 => self.filters.singleton_allowed(v, self.k),
            2 if self.filters.simple => {
                let both_points = s.iter().all(|i| self.ranks[1 << i] == 1);
                !both_points || v == 2
            }
            _ => true,
        }
    }

    fn is_canonical_prefix(&self, end: usize) -> bool {
        let prefix = &self.order[..end];
        self.perms.iter().all(|g| {
            let inv = invert(g);
            for &b in prefix {
                let image = self.ranks[map_subset(b, &inv).0 as usize];
                let own = self.ranks[b.0 as usize];
                if image != own {
                    return image > own;
                }
            }
            true
        })
    }
}

/// Calls `emit` once per isomorphism class of k-polymatroids on `n`
/// elements passing `filters`, with its canonical form. Returns the
/// number of search nodes visited.
pub fn enumerate_polymatroids<F>(k: u32, n: usize, filters: &Filters, budget: u64, emit: F) -> Result<u64>
where
    F: FnMut(Polymatroid) -> Result<()>,
{
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if n > crate::polymatroid::MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge { max: crate::polymatroid::MAX_ELEMENTS, got: n });
    }
    let order: Vec<Subset> = level_order(n).into_iter().skip(1).collect();
    let perms = Permutations::new(n).skip(1).collect();
    let mut g = Generator {
        k,
        filters,
        order,
        perms,
        ranks: vec![0; 1 << n],
        nodes: 0,
        budget,
        labels: canonical_labels(n),
        emit,
    };
    g.dfs(0)?;
    Ok(g.nodes)
}

/// Collects [`enumerate_polymatroids`] into a vector.
pub fn enumerate_all(k: u32, n: usize, filters: &Filters, budget: u64) -> Result<Vec<Polymatroid>> {
    let mut out = Vec::new();
    enumerate_polymatroids(k, n, filters, budget, |p| {
        out.push(p);
        Ok(())
    })?;
    Ok(out)
}

/// A random k-polymatroid on `n` elements, built by drawing each rank
/// uniformly from its feasible window in level order and restarting on a
/// dead end. The distribution is not uniform over isomorphism classes.
pub fn sample_polymatroid<R: Rng>(k: u32, n: usize, rng: &mut R) -> Polymatroid {
    let order: Vec<Subset> = level_order(n).into_iter().skip(1).collect();
    'restart: loop {
        let mut ranks = vec![0u32; 1 << n];
        for &s in &order {
            let (lo, hi) = bounds(&ranks, s, k);
            if lo > hi {
                continue 'restart;
            }
            ranks[s.0 as usize] = rng.gen_range(lo..=hi);
        }
        return Polymatroid::new(canonical_labels(n), k, ranks).expect("full table");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn singletons() {
        let all = enumerate_all(3, 1, &Filters::none(), DEFAULT_BUDGET).unwrap();
        assert_eq!(all.iter().map(|p| p.total_rank()).collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    /// Independent count: every table in the box, validated in full and
    /// grouped by canonical key.
    fn brute_force(k: u32, n: usize) -> HashSet<crate::polymatroid::CanonicalKey> {
        let size = 1usize << n;
        let top = k * n as u32;
        let mut keys = HashSet::new();
        let mut ranks = vec![0u32; size];
        loop {
            let p = Polymatroid::new(canonical_labels(n), k, ranks.clone()).unwrap();
            if p.is_valid() {
                keys.insert(p.canonical_key());
            }
            let mut i = 1;
            loop {
                if i == size {
                    return keys;
                }
                if ranks[i] < top {
                    ranks[i] += 1;
                    break;
                }
                ranks[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn matches_brute_force_on_small_grounds() {
        for (k, n) in [(1, 2), (2, 2), (3, 2), (1, 3)] {
            let generated = enumerate_all(k, n, &Filters::none(), DEFAULT_BUDGET).unwrap();
            let keys: HashSet<_> = generated.iter().map(|p| p.canonical_key()).collect();
            assert_eq!(keys.len(), generated.len(), "duplicates at k={k} n={n}");
            assert_eq!(keys, brute_force(k, n), "k={k} n={n}");
            assert!(generated.iter().all(|p| p.is_valid() && *p == p.canonical_form()));
        }
    }

    #[test]
    fn filters_agree_with_post_hoc_filtering() {
        let all = enumerate_all(3, 3, &Filters::none(), DEFAULT_BUDGET).unwrap();
        let f = Filters::default_for(3, 3);
        let filtered = enumerate_all(3, 3, &f, DEFAULT_BUDGET).unwrap();
        let expected: Vec<_> = all.into_iter().filter(|p| f.accepts(p)).collect();
        assert_eq!(filtered, expected);
        let capped = Filters { max_total_rank: Some(4), ..f.clone() };
        let low = enumerate_all(3, 3, &capped, DEFAULT_BUDGET).unwrap();
        assert!(!low.is_empty() && low.iter().all(|p| p.total_rank() <= 4));
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_all(3, 3, &Filters::none(), 10).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded(10));
    }

    #[test]
    fn samples_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let p = sample_polymatroid(4, 4, &mut rng);
            assert!(p.is_valid_local());
        }
    }
}
