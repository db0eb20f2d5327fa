//! The k-polymatroid type: a dense rank table over every subset of a small
//! labeled ground set, its axioms, minors, duality, and isomorphism.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Largest supported ground set. Tables are dense (`2^n` entries).
pub const MAX_ELEMENTS: usize = 20;

/// A subset of a ground set, as a bitmask over element positions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(index: usize) -> Subset {
        Subset(1 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        indices.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn with(self, index: usize) -> Subset {
        Subset(self.0 | 1 << index)
    }

    pub fn without(self, index: usize) -> Subset {
        Subset(self.0 & !(1 << index))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Element positions in increasing order.
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

    /// Every subset of `self`, including `∅` and `self`.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Subset(cur))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

/// All subsets of an `n`-element ground set ordered by size, then by mask.
/// Canonical forms compare tables in this order.
pub fn level_order(n: usize) -> Vec<Subset> {
    let mut order: Vec<Subset> = Subset::full(n).subsets().collect();
    order.sort_by_key(|s| (s.len(), s.0));
    order
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Normalization,
    Monotonicity,
    Submodularity,
    Bounded,
    UnitStep,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Normalization => "normalization",
            Axiom::Monotonicity => "monotonicity",
            Axiom::Submodularity => "submodularity",
            Axiom::Bounded => "bounded",
            Axiom::UnitStep => "unit-step",
        };
        f.write_str(name)
    }
}

/// One violated axiom together with the subsets that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<Subset>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn witnesses(&self, axiom: Axiom) -> impl Iterator<Item = &[Subset]> {
        self.violations
            .iter()
            .filter(move |v| v.axiom == axiom)
            .map(|v| v.witnesses.as_slice())
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let first = &self.violations[0];
        write!(f, "{} violation(s), first: {} at {:?}", self.violations.len(), first.axiom, first.witnesses)
    }
}

/// Counts of elements of rank 1, k−1 and k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeTriple {
    pub a1: usize,
    pub a_km1: usize,
    pub a_k: usize,
}

impl TypeTriple {
    pub fn new(a1: usize, a_km1: usize, a_k: usize) -> TypeTriple {
        TypeTriple { a1, a_km1, a_k }
    }
}

impl fmt::Display for TypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a1, self.a_km1, self.a_k)
    }
}

/// An integer set function on the subsets of a labeled ground set together
/// with its bound `k`.
///
/// Construction only checks the table's shape; [`Polymatroid::validate`]
/// reports which polymatroid axioms hold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polymatroid {
    labels: Vec<String>,
    k: u32,
    ranks: Vec<u32>,
}

pub(crate) fn check_label(label: &str) -> Result<()> {
    let bad = label.is_empty()
        || label == "-"
        || label.chars().any(|c| c.is_whitespace() || c == ',' || c == '#');
    if bad {
        Err(Error::InvalidLabel(label.to_string()))
    } else {
        Ok(())
    }
}

pub(crate) fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge { max: MAX_ELEMENTS, got: labels.len() });
    }
    for (i, label) in labels.iter().enumerate() {
        check_label(label)?;
        if labels[..i].contains(label) {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    Ok(())
}

impl Polymatroid {
    pub fn new(labels: Vec<String>, k: u32, ranks: Vec<u32>) -> Result<Polymatroid> {
        check_labels(&labels)?;
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let expected = 1usize << labels.len();
        if ranks.len() != expected {
            return Err(Error::TableLength { n: labels.len(), expected, got: ranks.len() });
        }
        Ok(Polymatroid { labels, k, ranks })
    }

    /// Builds a table from sparse `(subset, rank)` entries. A missing `∅`
    /// entry defaults to 0; any other missing subset is a structural error.
    pub fn from_entries<I>(labels: Vec<String>, k: u32, entries: I) -> Result<Polymatroid>
    where
        I: IntoIterator<Item = (Subset, u32)>,
    {
        check_labels(&labels)?;
        let n = labels.len();
        let mut table: Vec<Option<u32>> = vec![None; 1 << n];
        table[0] = Some(0);
        for (s, r) in entries {
            if !s.is_subset_of(Subset::full(n)) {
                return Err(Error::NotASubset);
            }
            table[s.0 as usize] = Some(r);
        }
        let mut ranks = Vec::with_capacity(table.len());
        for s in level_order(n) {
            match table[s.0 as usize] {
                Some(_) => {}
                None => {
                    let name = subset_label(&labels, s);
                    return Err(Error::MissingSubset(name));
                }
            }
        }
        ranks.extend(table.into_iter().map(|r| r.unwrap_or(0)));
        Polymatroid::new(labels, k, ranks)
    }

    pub fn from_fn<F: Fn(Subset) -> u32>(labels: Vec<String>, k: u32, f: F) -> Result<Polymatroid> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge { max: MAX_ELEMENTS, got: n });
        }
        let ranks = (0..1u32 << n).map(|m| f(Subset(m))).collect();
        Polymatroid::new(labels, k, ranks)
    }

    pub fn empty(k: u32) -> Polymatroid {
        Polymatroid { labels: Vec::new(), k: k.max(1), ranks: vec![0] }
    }

    pub fn singleton(label: &str, k: u32, rank: u32) -> Result<Polymatroid> {
        Polymatroid::new(vec![label.to_string()], k, vec![0, rank])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn rank(&self, s: Subset) -> u32 {
        self.ranks[s.0 as usize]
    }

    pub fn element_rank(&self, index: usize) -> u32 {
        self.ranks[1 << index]
    }

    pub fn total_rank(&self) -> u32 {
        self.ranks[self.ranks.len() - 1]
    }

    /// The table indexed by subset mask.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        labels
            .iter()
            .try_fold(Subset::EMPTY, |s, l| Ok(s.with(self.element(l.as_ref())?)))
    }

    /// Comma-joined labels, `-` for the empty set.
    pub fn subset_label(&self, s: Subset) -> String {
        subset_label(&self.labels, s)
    }

    fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.ground()) {
            Ok(())
        } else {
            Err(Error::NotASubset)
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let ground = self.ground();
        let r = |s: Subset| self.rank(s);
        if r(Subset::EMPTY) != 0 {
            violations.push(Violation { axiom: Axiom::Normalization, witnesses: vec![Subset::EMPTY] });
        }
        for i in 0..self.len() {
            let e = Subset::singleton(i);
            if r(e) > self.k {
                violations.push(Violation { axiom: Axiom::Bounded, witnesses: vec![e] });
            }
        }
        for b in ground.subsets() {
            for a in b.subsets() {
                if a != b && r(a) > r(b) {
                    violations.push(Violation { axiom: Axiom::Monotonicity, witnesses: vec![a, b] });
                }
            }
        }
        for a in ground.subsets() {
            for b in ground.subsets() {
                // comparable pairs satisfy the inequality with equality
                if a.0 >= b.0 || a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                if r(a | b) + r(a & b) > r(a) + r(b) {
                    violations.push(Violation { axiom: Axiom::Submodularity, witnesses: vec![a, b] });
                }
            }
        }
        for a in ground.subsets() {
            for i in (ground - a).iter() {
                let grown = a.with(i);
                if r(grown) > r(a) + self.k {
                    violations.push(Violation { axiom: Axiom::UnitStep, witnesses: vec![a, grown] });
                }
            }
        }
        ValidationReport { violations }
    }

    /// Validity via the local characterisation: singleton bound, unit
    /// monotonicity, and the diamond inequalities
    /// `r(S+a) + r(S+b) >= r(S) + r(S+a+b)`. Equivalent to [`validate`]
    /// being empty, but much cheaper.
    ///
    /// [`validate`]: Polymatroid::validate
    pub fn is_valid_local(&self) -> bool {
        let ground = self.ground();
        if self.rank(Subset::EMPTY) != 0 {
            return false;
        }
        if (0..self.len()).any(|i| self.element_rank(i) > self.k) {
            return false;
        }
        for s in ground.subsets() {
            let rest = ground - s;
            for a in rest.iter() {
                let sa = s.with(a);
                if self.rank(sa) < self.rank(s) {
                    return false;
                }
                for b in rest.iter().filter(|&b| b > a) {
                    if self.rank(sa) + self.rank(s.with(b)) < self.rank(s) + self.rank(sa.with(b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::NotPolymatroid(report))
        }
    }

    /// Builds the polymatroid on `keep` (in ground order) whose rank of `Y` is `f(Y)`,
    /// with `Y` expressed in the original element positions.
    fn minor_table<F: Fn(Subset) -> u32>(&self, keep: Subset, f: F) -> Polymatroid {
        let kept: Vec<usize> = keep.iter().collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let ranks = (0..1u32 << kept.len())
            .map(|m| {
                let original = Subset::from_indices(Subset(m).iter().map(|j| kept[j]));
                f(original)
            })
            .collect();
        Polymatroid { labels, k: self.k, ranks }
    }

    pub fn delete(&self, x: Subset) -> Result<Polymatroid> {
        self.check_subset(x)?;
        Ok(self.minor_table(self.ground() - x, |y| self.rank(y)))
    }

    /// Same as deleting the complement of `x`.
    pub fn restrict(&self, x: Subset) -> Result<Polymatroid> {
        self.check_subset(x)?;
        self.delete(self.ground() - x)
    }

    pub fn contract(&self, x: Subset) -> Result<Polymatroid> {
        self.check_subset(x)?;
        let base = self.rank(x);
        Ok(self.minor_table(self.ground() - x, |y| self.rank(x | y) - base))
    }

    /// Labels of `self` come first, then those of `other`.
    pub fn direct_sum(&self, other: &Polymatroid) -> Result<Polymatroid> {
        if self.k != other.k {
            return Err(Error::KMismatch { left: self.k, right: other.k });
        }
        if let Some(l) = self.labels.iter().find(|l| other.labels.contains(l)) {
            return Err(Error::LabelCollision(l.clone()));
        }
        let n1 = self.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let low = Subset::full(n1);
        Polymatroid::from_fn(labels, self.k, |s| {
            self.rank(s & low) + other.rank(Subset((s - low).0 >> n1))
        })
    }

    /// `S` separates `self` when `ρ` is the direct sum of its restrictions
    /// to `S` and `E − S`.
    fn separates(&self, s: Subset) -> bool {
        let rest = self.ground() - s;
        if self.rank(s) + self.rank(rest) != self.rank(self.ground()) {
            return false;
        }
        self.ground()
            .subsets()
            .all(|a| self.rank(a) == self.rank(a & s) + self.rank(a & rest))
    }

    /// Some proper nonempty separator, if `self` is disconnected.
    pub fn separator(&self) -> Option<Subset> {
        if self.len() < 2 {
            return None;
        }
        let ground = self.ground();
        // fixing element 0 inside S visits each bipartition once
        (ground.without(0))
            .subsets()
            .map(|s| s.with(0))
            .filter(|&s| s != ground)
            .find(|&s| self.separates(s))
    }

    pub fn is_connected(&self) -> bool {
        self.separator().is_none()
    }

    /// The k-dual `ρ*(X) = k|X| + ρ(E−X) − ρ(E)`.
    ///
    /// # Panics
    ///
    /// Panics if `self` violates the unit-step bound, which every
    /// k-polymatroid satisfies; validate untrusted tables first.
    pub fn dual(&self) -> Polymatroid {
        let ground = self.ground();
        let total = self.total_rank();
        let ranks = (0..1u32 << self.len())
            .map(|m| {
                let x = Subset(m);
                (self.k * x.len() as u32 + self.rank(ground - x))
                    .checked_sub(total)
                    .expect("dual of a table that is not a k-polymatroid")
            })
            .collect();
        Polymatroid { labels: self.labels.clone(), k: self.k, ranks }
    }

    pub fn loops(&self) -> Subset {
        Subset::from_indices((0..self.len()).filter(|&i| self.element_rank(i) == 0))
    }

    /// Deletes loops and all but the first point of each parallel class of points.
    pub fn simplify(&self) -> Polymatroid {
        let mut keep = Subset::EMPTY;
        for i in 0..self.len() {
            match self.element_rank(i) {
                0 => {}
                1 => {
                    let parallel = keep
                        .iter()
                        .any(|j| self.element_rank(j) == 1 && self.rank(keep_pair(i, j)) == 1);
                    if !parallel {
                        keep = keep.with(i);
                    }
                }
                _ => keep = keep.with(i),
            }
        }
        self.minor_table(keep, |y| self.rank(y))
    }

    pub fn is_simple(&self) -> bool {
        self.simplify().len() == self.len()
    }

    /// Requires k >= 3 and every singleton rank in {1, k−1, k}.
    pub fn type_of(&self) -> Result<TypeTriple> {
        if self.k < 3 {
            return Err(Error::KTooSmall { min: 3, k: self.k });
        }
        let mut t = TypeTriple::new(0, 0, 0);
        for i in 0..self.len() {
            match self.element_rank(i) {
                1 => t.a1 += 1,
                r if r == self.k - 1 => t.a_km1 += 1,
                r if r == self.k => t.a_k += 1,
                rank => {
                    return Err(Error::TypeUndefined { element: self.labels[i].clone(), rank, k: self.k })
                }
            }
        }
        Ok(t)
    }

    pub fn closure(&self, x: Subset) -> Result<Subset> {
        self.check_subset(x)?;
        let r = self.rank(x);
        Ok(Subset::from_indices((0..self.len()).filter(|&i| self.rank(x.with(i)) == r)))
    }

    pub fn is_parallel(&self, e: usize, f: usize) -> bool {
        let (re, rf) = (self.element_rank(e), self.element_rank(f));
        0 < re && re == rf && rf == self.rank(keep_pair(e, f))
    }

    pub fn is_skew(&self, e: usize, f: usize) -> bool {
        let (re, rf) = (self.element_rank(e), self.element_rank(f));
        re > 0 && rf > 0 && re + rf == self.rank(keep_pair(e, f))
    }

    /// `e` lies on `f`: `0 < ρ(e) < ρ(f) = ρ(ef)`.
    pub fn lies_on(&self, e: usize, f: usize) -> bool {
        let (re, rf) = (self.element_rank(e), self.element_rank(f));
        0 < re && re < rf && rf == self.rank(keep_pair(e, f))
    }

    pub fn is_collinear(&self, x: Subset) -> bool {
        self.rank(x) == 2
    }

    pub fn is_coplanar(&self, x: Subset) -> bool {
        self.rank(x) == 3
    }

    /// Moves element `i` to position `perm[i]`, labels included.
    pub fn permute(&self, perm: &[usize]) -> Polymatroid {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for (i, &to) in perm.iter().enumerate() {
            labels[to] = self.labels[i].clone();
        }
        let mut ranks = vec![0; 1 << n];
        for m in 0..1u32 << n {
            ranks[map_subset(Subset(m), perm).0 as usize] = self.ranks[m as usize];
        }
        Polymatroid { labels, k: self.k, ranks }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Polymatroid> {
        Polymatroid::new(labels, self.k, self.ranks.clone())
    }

    /// Lexicographically least level-order rank vector over all relabelings.
    pub fn canonical_key(&self) -> CanonicalKey {
        let (key, _) = self.canonical_with_perm();
        key
    }

    fn canonical_with_perm(&self) -> (CanonicalKey, Vec<usize>) {
        let n = self.len();
        let order = level_order(n);
        let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
        for perm in Permutations::new(n) {
            // image table q(π(A)) = ρ(A), read in level order
            let inv = invert(&perm);
            let vector: Vec<u32> = order.iter().map(|&b| self.rank(map_subset(b, &inv))).collect();
            if best.as_ref().is_none_or(|(v, _)| vector < *v) {
                best = Some((vector, perm));
            }
        }
        let (ranks, perm) = best.expect("at least the identity permutation");
        (CanonicalKey { k: self.k, n, ranks }, perm)
    }

    /// A relabeling-invariant representative: the minimizing permutation
    /// applied to the table, with generic labels `e, f, g, …`.
    pub fn canonical_form(&self) -> Polymatroid {
        let (_, perm) = self.canonical_with_perm();
        let permuted = self.permute(&perm);
        Polymatroid { labels: canonical_labels(self.len()), k: self.k, ranks: permuted.ranks }
    }

    pub fn is_isomorphic(&self, other: &Polymatroid) -> bool {
        self.k == other.k && self.len() == other.len() && self.canonical_key() == other.canonical_key()
    }

    /// Permutations `π` with `π(ρ) = ρ` on the table (labels ignored).
    pub fn automorphisms(&self) -> Vec<Vec<usize>> {
        Permutations::new(self.len())
            .filter(|perm| {
                (0..1u32 << self.len())
                    .all(|m| self.rank(map_subset(Subset(m), perm)) == self.ranks[m as usize])
            })
            .collect()
    }
}

fn keep_pair(i: usize, j: usize) -> Subset {
    Subset::singleton(i).with(j)
}

pub(crate) fn subset_label(labels: &[String], s: Subset) -> String {
    if s.is_empty() {
        return "-".to_string();
    }
    s.iter().map(|i| labels[i].as_str()).collect::<Vec<_>>().join(",")
}

/// `e, f, g, h, i, …` as in the Hasse diagrams.
pub fn canonical_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'e' + i as u8) as char).to_string()).collect()
}

pub(crate) fn map_subset(s: Subset, perm: &[usize]) -> Subset {
    Subset::from_indices(s.iter().map(|i| perm[i]))
}

pub(crate) fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Isomorphism-invariant key. Ordering is lexicographic in the level-order
/// rank vector, which makes sorted reports deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub k: u32,
    pub n: usize,
    pub ranks: Vec<u32>,
}

impl CanonicalKey {
    /// Short stable hex digest used in machine-readable reports.
    pub fn hash_hex(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(format!("k={};n={};", self.k, self.n).as_bytes());
        for r in &self.ranks {
            hasher.update(r.to_le_bytes());
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Permutations of `0..n` in lexicographic order.
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Permutations {
        Permutations { current: Some((0..n).collect()) }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let n = next.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| next[i] < next[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| next[j] > next[i]).unwrap();
                next.swap(i, j);
                next[i + 1..].reverse();
                self.current = Some(next);
            }
        }
        Some(out)
    }
}
