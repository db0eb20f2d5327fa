//! The k-natural matroid of a polymatroid, as a rank oracle over the clone
//! universe `X_E`: `k` clones per element, with
//! `r(X) = min_A ρ(A) + |X − X_A|`.
//!
//! Clone `j` (0-based) of element `e` is bit `e·k + j` of a [`CloneSet`].
//! Since the rank of a clone set only depends on how many clones of each
//! class it contains, ranks are evaluated on count vectors and, when the
//! count lattice is small, memoized in a table built on first use.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::polymatroid::{Polymatroid, Subset};

/// Largest count lattice that is tabulated.
const MEMO_LIMIT: usize = 1 << 22;

/// A set of clones, as a bitmask over clone positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CloneSet(pub u64);

impl CloneSet {
    pub const EMPTY: CloneSet = CloneSet(0);

    pub fn single(bit: usize) -> CloneSet {
        CloneSet(1 << bit)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, bit: usize) -> bool {
        self.0 >> bit & 1 == 1
    }

    pub fn union(self, other: CloneSet) -> CloneSet {
        CloneSet(self.0 | other.0)
    }

    pub fn minus(self, other: CloneSet) -> CloneSet {
        CloneSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: CloneSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for CloneSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct Universe {
    base: Polymatroid,
    k: usize,
    n: usize,
    class_masks: Vec<u64>,
    memo: OnceLock<Option<Vec<u8>>>,
}

impl Universe {
    fn counts(&self, x: CloneSet) -> Vec<u32> {
        self.class_masks.iter().map(|m| (x.0 & m).count_ones()).collect()
    }

    fn rank_by_formula(&self, counts: &[u32]) -> u32 {
        let total: u32 = counts.iter().sum();
        self.base
            .ground()
            .subsets()
            .map(|a| {
                let inside: u32 = a.iter().map(|e| counts[e]).sum();
                self.base.rank(a) + total - inside
            })
            .min()
            .unwrap_or(0)
    }

    fn index(&self, counts: &[u32]) -> usize {
        counts.iter().rev().fold(0, |acc, &c| acc * (self.k + 1) + c as usize)
    }

    fn table(&self) -> Option<&Vec<u8>> {
        self.memo
            .get_or_init(|| {
                let size = (self.k + 1).checked_pow(self.n as u32)?;
                if size > MEMO_LIMIT || size.saturating_mul(1 << self.n) > MEMO_LIMIT * 16 {
                    return None;
                }
                let mut table = Vec::with_capacity(size);
                let mut counts = vec![0u32; self.n];
                for _ in 0..size {
                    table.push(self.rank_by_formula(&counts) as u8);
                    for c in counts.iter_mut() {
                        *c += 1;
                        if *c as usize <= self.k {
                            break;
                        }
                        *c = 0;
                    }
                }
                Some(table)
            })
            .as_ref()
    }

    fn rank_counts(&self, counts: &[u32]) -> u32 {
        match self.table() {
            Some(t) => t[self.index(counts)] as u32,
            None => self.rank_by_formula(counts),
        }
    }

    fn rank(&self, x: CloneSet) -> u32 {
        self.rank_counts(&self.counts(x))
    }
}

/// Rank oracle for the minor `M_ρ^k / C \ D` of a k-natural matroid.
/// Cloning is cheap; clones share the underlying memo table.
#[derive(Clone)]
pub struct NaturalMatroidOracle {
    universe: Arc<Universe>,
    contracted: CloneSet,
    deleted: CloneSet,
    contracted_rank: u32,
}

impl fmt::Debug for NaturalMatroidOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NaturalMatroidOracle")
            .field("base", &self.universe.base)
            .field("contracted", &self.contracted)
            .field("deleted", &self.deleted)
            .finish()
    }
}

impl NaturalMatroidOracle {
    pub fn new(base: &Polymatroid) -> Result<NaturalMatroidOracle> {
        let k = base.k() as usize;
        let n = base.len();
        if k * n > 64 {
            return Err(Error::UniverseTooLarge(k * n));
        }
        let class_masks = (0..n)
            .map(|e| if k == 64 { u64::MAX } else { ((1u64 << k) - 1) << (e * k) })
            .collect();
        let universe = Universe { base: base.clone(), k, n, class_masks, memo: OnceLock::new() };
        Ok(NaturalMatroidOracle {
            universe: Arc::new(universe),
            contracted: CloneSet::EMPTY,
            deleted: CloneSet::EMPTY,
            contracted_rank: 0,
        })
    }

    pub fn base(&self) -> &Polymatroid {
        &self.universe.base
    }

    pub fn k(&self) -> usize {
        self.universe.k
    }

    pub fn classes(&self) -> usize {
        self.universe.n
    }

    pub fn contracted(&self) -> CloneSet {
        self.contracted
    }

    pub fn deleted(&self) -> CloneSet {
        self.deleted
    }

    /// Every clone of the base universe.
    pub fn universe_set(&self) -> CloneSet {
        CloneSet(self.universe.class_masks.iter().fold(0, |a, m| a | m))
    }

    /// Clones remaining in this minor.
    pub fn ground(&self) -> CloneSet {
        self.universe_set().minus(self.contracted).minus(self.deleted)
    }

    pub fn class(&self, e: usize) -> CloneSet {
        CloneSet(self.universe.class_masks[e])
    }

    /// `X_A`: all clones of the elements of `a`.
    pub fn clones_of(&self, a: Subset) -> CloneSet {
        CloneSet(a.iter().fold(0, |acc, e| acc | self.universe.class_masks[e]))
    }

    pub fn clone_bit(&self, element: usize, index: usize) -> usize {
        element * self.universe.k + index
    }

    /// Wire label `<element>#<index>`, 1-based.
    pub fn clone_label(&self, bit: usize) -> String {
        let k = self.universe.k;
        format!("{}#{}", self.universe.base.label(bit / k), bit % k + 1)
    }

    pub fn parse_clone(&self, label: &str) -> Result<usize> {
        let bad = || Error::InvalidClone(label.to_string());
        let (element, index) = label.rsplit_once('#').ok_or_else(bad)?;
        let e = self.universe.base.index_of(element).ok_or_else(bad)?;
        let j: usize = index.parse().map_err(|_| bad())?;
        if j == 0 || j > self.universe.k {
            return Err(bad());
        }
        Ok(self.clone_bit(e, j - 1))
    }

    /// Per-class clone counts of `x`.
    pub fn counts(&self, x: CloneSet) -> Vec<u32> {
        self.universe.counts(x)
    }

    /// Rank in the full natural matroid of any clone set with these
    /// per-class counts.
    pub fn base_rank_counts(&self, counts: &[u32]) -> u32 {
        self.universe.rank_counts(counts)
    }

    pub fn base_rank(&self, x: CloneSet) -> u32 {
        self.universe.rank(x)
    }

    /// Rank in this minor. `x` must avoid the contracted and deleted clones.
    pub fn rank(&self, x: CloneSet) -> Result<u32> {
        if x.intersects(self.contracted.union(self.deleted)) || x.minus(self.universe_set()) != CloneSet::EMPTY {
            return Err(Error::CloneOverlap);
        }
        Ok(self.rank_unchecked(x))
    }

    pub(crate) fn rank_unchecked(&self, x: CloneSet) -> u32 {
        self.universe.rank(x.union(self.contracted)) - self.contracted_rank
    }

    /// Rank of the whole minor.
    pub fn total_rank(&self) -> u32 {
        self.rank_unchecked(self.ground())
    }

    /// Contracts `c` and deletes `d` on top of the current minor.
    pub fn minor(&self, c: CloneSet, d: CloneSet) -> Result<NaturalMatroidOracle> {
        if c.intersects(d) || c.union(d).minus(self.ground()) != CloneSet::EMPTY {
            return Err(Error::CloneOverlap);
        }
        let contracted = self.contracted.union(c);
        Ok(NaturalMatroidOracle {
            universe: Arc::clone(&self.universe),
            contracted,
            deleted: self.deleted.union(d),
            contracted_rank: self.universe.rank(contracted),
        })
    }

    /// Clones of class `e` still present, in index order.
    pub fn available(&self, e: usize) -> Vec<usize> {
        CloneSet(self.ground().0 & self.universe.class_masks[e]).iter().collect()
    }

    pub fn available_counts(&self) -> Vec<u32> {
        self.counts(self.ground())
    }

    /// The minor described by per-class counts, expanding each class to
    /// its lowest-indexed available clones: contracted ones first, then
    /// kept, then deleted.
    pub fn minor_of_natural(&self, spec: &CloneMinorSpec) -> Result<NaturalMatroidOracle> {
        let (c, d, _) = spec.expand(self)?;
        self.minor(c, d)
    }

    /// One clone per parallel class of nonloop clones, lowest index first.
    pub fn simplified(&self) -> PointOracle {
        let mut points: Vec<usize> = Vec::new();
        for x in self.ground().iter() {
            let single = CloneSet::single(x);
            if self.rank_unchecked(single) == 0 {
                continue;
            }
            let parallel = points
                .iter()
                .any(|&p| self.rank_unchecked(single.union(CloneSet::single(p))) == 1);
            if !parallel {
                points.push(x);
            }
        }
        PointOracle { oracle: self.clone(), points }
    }

    /// The restriction of this minor to the given clones, by label.
    pub fn restriction<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointOracle> {
        let mut points = Vec::with_capacity(labels.len());
        for l in labels {
            let bit = self.parse_clone(l.as_ref())?;
            if !self.ground().contains(bit) || points.contains(&bit) {
                return Err(Error::InvalidClone(l.as_ref().to_string()));
            }
            points.push(bit);
        }
        Ok(PointOracle { oracle: self.clone(), points })
    }
}

/// Per-class counts `(contracted, deleted, kept)` describing a minor of a
/// natural-matroid oracle up to clone symmetry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CloneMinorSpec {
    pub classes: Vec<ClassCounts>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassCounts {
    pub contracted: u32,
    pub deleted: u32,
    pub kept: u32,
}

impl CloneMinorSpec {
    /// Keeps every available clone.
    pub fn identity(o: &NaturalMatroidOracle) -> CloneMinorSpec {
        CloneMinorSpec {
            classes: o
                .available_counts()
                .into_iter()
                .map(|kept| ClassCounts { contracted: 0, deleted: 0, kept })
                .collect(),
        }
    }

    /// Contract `contracted[e]` and keep `kept[e]` clones of each class;
    /// the remaining available clones are deleted.
    pub fn from_counts(o: &NaturalMatroidOracle, contracted: &[u32], kept: &[u32]) -> Result<CloneMinorSpec> {
        let avail = o.available_counts();
        let mut classes = Vec::with_capacity(avail.len());
        for e in 0..avail.len() {
            let used = contracted[e] + kept[e];
            if used > avail[e] {
                return Err(Error::CountOverflow { element: o.base().label(e).to_string(), available: avail[e] });
            }
            classes.push(ClassCounts { contracted: contracted[e], deleted: avail[e] - used, kept: kept[e] });
        }
        Ok(CloneMinorSpec { classes })
    }

    /// Concrete (contracted, deleted, kept) clone sets.
    pub fn expand(&self, o: &NaturalMatroidOracle) -> Result<(CloneSet, CloneSet, CloneSet)> {
        if self.classes.len() != o.classes() {
            return Err(Error::CountOverflow { element: String::new(), available: 0 });
        }
        let (mut c, mut d, mut s) = (0u64, 0u64, 0u64);
        for (e, counts) in self.classes.iter().enumerate() {
            let avail = o.available(e);
            let total = counts.contracted + counts.deleted + counts.kept;
            if total as usize != avail.len() {
                return Err(Error::CountOverflow {
                    element: o.base().label(e).to_string(),
                    available: avail.len() as u32,
                });
            }
            for (i, &bit) in avail.iter().enumerate() {
                let i = i as u32;
                if i < counts.contracted {
                    c |= 1 << bit;
                } else if i < counts.contracted + counts.kept {
                    s |= 1 << bit;
                } else {
                    d |= 1 << bit;
                }
            }
        }
        Ok((CloneSet(c), CloneSet(d), CloneSet(s)))
    }
}

/// A matroid on a chosen list of clones of an oracle's ground set, indexed
/// by position in that list.
#[derive(Clone, Debug)]
pub struct PointOracle {
    oracle: NaturalMatroidOracle,
    points: Vec<usize>,
}

impl PointOracle {
    pub fn oracle(&self) -> &NaturalMatroidOracle {
        &self.oracle
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn labels(&self) -> Vec<String> {
        self.points.iter().map(|&b| self.oracle.clone_label(b)).collect()
    }

    pub fn clones(&self, mask: u64) -> CloneSet {
        let mut set = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            set |= 1 << self.points[i];
        }
        CloneSet(set)
    }

    /// Rank of the points selected by `mask` (bit `i` is `points()[i]`).
    pub fn rank(&self, mask: u64) -> u32 {
        self.oracle.rank_unchecked(self.clones(mask))
    }

    pub fn total_rank(&self) -> u32 {
        self.rank(full_mask(self.len()))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
