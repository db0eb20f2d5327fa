//! l-compression of a polymatroid by an element, and enumeration of
//! single-element decompressions.
//!
//! Compressing `e` by `l` adds `l` free points on `e`, contracts them and
//! deletes `e`. In the natural matroid this is contracting `l` clones of
//! `X_e` and deleting the rest, which is how [`compress`] computes it.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::natural::{CloneSet, NaturalMatroidOracle};
use crate::polymatroid::{check_label, invert, level_order, map_subset, Permutations, Polymatroid, Subset};

/// A validated compression: `e` is an element of `p` and `1 <= l <= k−1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionRequest<'a> {
    pub p: &'a Polymatroid,
    pub e: usize,
    pub l: u32,
}

impl<'a> CompressionRequest<'a> {
    pub fn new(p: &'a Polymatroid, element: &str, l: u32) -> Result<CompressionRequest<'a>> {
        let e = p.element(element)?;
        check_l(p, l)?;
        Ok(CompressionRequest { p, e, l })
    }

    pub fn run(&self) -> Result<Polymatroid> {
        compress(self.p, self.e, self.l)
    }
}

fn check_l(p: &Polymatroid, l: u32) -> Result<()> {
    if l == 0 || l >= p.k() {
        return Err(Error::LOutOfRange { l, max: p.k().saturating_sub(1) });
    }
    Ok(())
}

fn check_element(p: &Polymatroid, e: usize) -> Result<()> {
    if e >= p.len() {
        return Err(Error::NotASubset);
    }
    Ok(())
}

/// `ρ↓e^l`, read off the natural matroid with `l` clones of `e` contracted
/// and the others deleted. A loop is simply deleted.
pub fn compress(p: &Polymatroid, e: usize, l: u32) -> Result<Polymatroid> {
    check_element(p, e)?;
    check_l(p, l)?;
    let single = Subset::singleton(e);
    if p.element_rank(e) == 0 {
        return p.delete(single);
    }
    let o = NaturalMatroidOracle::new(p)?;
    let class = o.class(e);
    let first = o.clone_bit(e, 0);
    let contracted = CloneSet(((1u64 << l) - 1) << first);
    let minor = o.minor(contracted, class.minus(contracted))?;
    let shape = p.delete(single)?;
    let kept: Vec<usize> = (p.ground() - single).iter().collect();
    Polymatroid::from_fn(shape.labels().to_vec(), p.k(), |a| {
        let original = Subset::from_indices(a.iter().map(|i| kept[i]));
        minor.rank_unchecked(o.clones_of(original))
    })
}

/// `ρ↓e^l(A) = min(ρ(A) + l, ρ(A+e)) − min(l, ρ(e))`, valid for every
/// element rank; equal to `min(ρ(A), ρ(A+e) − l)` when `ρ(e) >= l`.
pub fn compress_closed_form(p: &Polymatroid, e: usize, l: u32) -> Result<Polymatroid> {
    check_element(p, e)?;
    check_l(p, l)?;
    let single = Subset::singleton(e);
    let shape = p.delete(single)?;
    let kept: Vec<usize> = (p.ground() - single).iter().collect();
    let offset = l.min(p.element_rank(e));
    Polymatroid::from_fn(shape.labels().to_vec(), p.k(), |a| {
        let original = Subset::from_indices(a.iter().map(|i| kept[i]));
        (p.rank(original) + l).min(p.rank(original | single)) - offset
    })
}

/// Whether `(ρ↓e^l)* = (ρ*)↓e^(k−l)`.
pub fn dual_commutes(p: &Polymatroid, e: usize, l: u32) -> Result<bool> {
    let left = compress(p, e, l)?.dual();
    let right = compress(&p.dual(), e, p.k() - l)?;
    Ok(left == right)
}

/// A decompression by the last element, with every `l` that compresses it
/// back to the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decompression {
    pub polymatroid: Polymatroid,
    pub ls: Vec<u32>,
}

/// Default search cap for [`enumerate_decompressions`].
pub const DEFAULT_DECOMPRESSION_BUDGET: u64 = 1_000_000_000;

/// Every k-polymatroid on `E + d` (with `d` last) that compresses to `p`
/// by `d` for some `l` in `ls`, with `ρ'(d)` in `ranks_d`, up to
/// isomorphisms fixing `d`.
pub fn enumerate_decompressions(
    p: &Polymatroid,
    d: &str,
    ranks_d: &[u32],
    ls: RangeInclusive<u32>,
    budget: u64,
) -> Result<Vec<Decompression>> {
    check_label(d)?;
    if p.index_of(d).is_some() {
        return Err(Error::LabelCollision(d.to_string()));
    }
    let ls: Vec<u32> = ls.collect();
    for &l in &ls {
        check_l(p, l)?;
    }
    let n = p.len();
    let mut labels = p.labels().to_vec();
    labels.push(d.to_string());
    if labels.len() > crate::polymatroid::MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge { max: crate::polymatroid::MAX_ELEMENTS, got: labels.len() });
    }
    let order: Vec<Subset> = level_order(n + 1);
    let group: Vec<Vec<usize>> = p
        .automorphisms()
        .into_iter()
        .filter(|g| g.iter().enumerate().any(|(i, &x)| i != x))
        .map(|mut g| {
            g.push(n);
            g
        })
        .collect();
    let mut found = Vec::new();
    let mut nodes = 0u64;
    let mut ranks_d: Vec<u32> = ranks_d.to_vec();
    ranks_d.sort_unstable();
    ranks_d.dedup();
    for rd in ranks_d {
        if rd > p.k() {
            continue;
        }
        let mut search = DecompressionSearch {
            p,
            n,
            k: p.k(),
            rd,
            ls: &ls,
            order: &order,
            group: &group,
            ranks: vec![0; 1 << (n + 1)],
            nodes: &mut nodes,
            budget,
            found: Vec::new(),
        };
        search.ranks[1 << n] = rd;
        let mask = (1u64 << ls.len()) - 1;
        // skip ∅ and {d}, which are fixed
        let start = 1;
        search.dfs(start, mask)?;
        for (ranks, mask) in std::mem::take(&mut search.found) {
            let polymatroid = Polymatroid::new(labels.clone(), p.k(), ranks)?;
            let working: Vec<u32> = (0..ls.len()).filter(|i| mask >> i & 1 == 1).map(|i| ls[i]).collect();
            found.push(Decompression { polymatroid, ls: working });
        }
    }
    let found = dedup_fixing_last(found);
    for dec in &found {
        let by_oracle: Vec<u32> = ls
            .iter()
            .copied()
            .filter(|&l| compress(&dec.polymatroid, n, l).map(|c| c == *p).unwrap_or(false))
            .collect();
        assert_eq!(by_oracle, dec.ls, "closed-form and oracle compressions differ");
    }
    Ok(found)
}

struct DecompressionSearch<'a> {
    p: &'a Polymatroid,
    n: usize,
    k: u32,
    rd: u32,
    ls: &'a [u32],
    order: &'a [Subset],
    group: &'a [Vec<usize>],
    ranks: Vec<u32>,
    nodes: &'a mut u64,
    budget: u64,
    found: Vec<(Vec<u32>, u64)>,
}

impl DecompressionSearch<'_> {
    fn d(&self) -> usize {
        self.n
    }

    fn dfs(&mut self, pos: usize, mask: u64) -> Result<()> {
        if pos == self.order.len() {
            self.found.push((self.ranks.clone(), mask));
            return Ok(());
        }
        let s = self.order[pos];
        if s == Subset::singleton(self.d()) {
            return self.advance(pos, mask);
        }
        let (lo, hi) = bounds(&self.ranks, s, self.k);
        for v in lo..=hi {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let m = self.filter(s, v, mask);
            if m == 0 {
                continue;
            }
            self.ranks[s.0 as usize] = v;
            self.advance(pos, m)?;
        }
        self.ranks[s.0 as usize] = 0;
        Ok(())
    }

    fn advance(&mut self, pos: usize, mask: u64) -> Result<()> {
        let next = pos + 1;
        let level_done = next == self.order.len() || self.order[next].len() != self.order[pos].len();
        if level_done && !self.is_canonical_prefix(next) {
            return Ok(());
        }
        self.dfs(next, mask)
    }

    /// Working `l` values that remain possible once `s` gets rank `v`.
    fn filter(&self, s: Subset, v: u32, mask: u64) -> u64 {
        let d = self.d();
        let mut out = 0;
        for (i, &l) in self.ls.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let shift = l.min(self.rd) as i64;
            let ok = if s.contains(d) {
                let a = s.without(d);
                let target = self.p.rank(a) as i64;
                (self.ranks[a.0 as usize] as i64 + l as i64).min(v as i64) - shift == target
            } else {
                let target = self.p.rank(s) as i64;
                let v = v as i64;
                v + l as i64 - shift >= target && v - shift <= target
            };
            if ok {
                out |= 1 << i;
            }
        }
        out
    }

    fn is_canonical_prefix(&self, end: usize) -> bool {
        let prefix = &self.order[..end];
        self.group.iter().all(|g| {
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

/// Rank window for `s` given all of its proper subsets: monotone from
/// below, and the unit and diamond submodular ceilings from above.
pub(crate) fn bounds(ranks: &[u32], s: Subset, k: u32) -> (u32, u32) {
    let r = |x: Subset| ranks[x.0 as usize];
    if s.len() == 1 {
        return (0, k);
    }
    let mut lo = 0;
    let mut hi = u32::MAX;
    let elems: Vec<usize> = s.iter().collect();
    for (i, &a) in elems.iter().enumerate() {
        let sa = s.without(a);
        lo = lo.max(r(sa));
        hi = hi.min(r(sa) + r(Subset::singleton(a)));
        for &b in &elems[i + 1..] {
            hi = hi.min(r(sa) + r(s.without(b)) - r(sa.without(b)));
        }
    }
    (lo, hi)
}

fn dedup_fixing_last(found: Vec<Decompression>) -> Vec<Decompression> {
    let mut seen = std::collections::HashSet::new();
    found
        .into_iter()
        .filter(|dec| seen.insert(key_fixing_last(&dec.polymatroid)))
        .collect()
}

fn key_fixing_last(p: &Polymatroid) -> Vec<u32> {
    let n = p.len();
    let order = level_order(n);
    Permutations::new(n - 1)
        .map(|mut perm| {
            perm.push(n - 1);
            let inv = invert(&perm);
            order.iter().map(|&b| p.rank(map_subset(b, &inv))).collect::<Vec<u32>>()
        })
        .min()
        .expect("identity")
}
