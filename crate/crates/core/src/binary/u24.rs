//! Search for a `U_{2,4}` minor in a natural-matroid oracle.
//!
//! A minor `M/C\D` that is isomorphic to `U_{2,4}` can always be chosen with
//! `C` independent, so `|C| = r(M) − 2`. Clones within a class are
//! interchangeable, so only per-class counts of `C` and of the four kept
//! clones matter.

use std::fmt;

use crate::natural::{CloneMinorSpec, CloneSet, NaturalMatroidOracle};

/// A contraction set and four clones forming `U_{2,4}` in the contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U24Witness {
    /// Counts relative to the oracle that was searched.
    pub spec: CloneMinorSpec,
    pub contracted: CloneSet,
    pub kept: [usize; 4],
}

impl U24Witness {
    /// Rechecks the rank pattern against `o` from scratch.
    pub fn replay(&self, o: &NaturalMatroidOracle) -> bool {
        let Ok((c, _, s)) = self.spec.expand(o) else {
            return false;
        };
        let kept = CloneSet(self.kept.iter().fold(0, |a, &b| a | 1 << b));
        if c != self.contracted || s != kept || kept.len() != 4 {
            return false;
        }
        let Ok(base) = o.rank(c) else {
            return false;
        };
        let rel = |x: CloneSet| o.rank(c.union(x)).map(|r| r - base).ok();
        let single = |b: usize| CloneSet::single(b);
        self.kept.iter().all(|&p| rel(single(p)) == Some(1))
            && (0..4).all(|i| (i + 1..4).all(|j| rel(single(self.kept[i]).union(single(self.kept[j]))) == Some(2)))
            && rel(kept) == Some(2)
    }

    pub fn display<'a>(&'a self, o: &'a NaturalMatroidOracle) -> WitnessDisplay<'a> {
        WitnessDisplay { witness: self, oracle: o }
    }
}

pub struct WitnessDisplay<'a> {
    witness: &'a U24Witness,
    oracle: &'a NaturalMatroidOracle,
}

impl fmt::Display for WitnessDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let contracted: Vec<String> = self.witness.contracted.iter().map(|b| self.oracle.clone_label(b)).collect();
        let kept: Vec<String> = self.witness.kept.iter().map(|&b| self.oracle.clone_label(b)).collect();
        let contracted = if contracted.is_empty() { "-".to_string() } else { contracted.join(",") };
        write!(f, "contract {} keep {}", contracted, kept.join(","))
    }
}

struct Search<'a> {
    oracle: &'a NaturalMatroidOracle,
    base: Vec<u32>,
    avail: Vec<u32>,
    base_rank: u32,
    target: u32,
}

impl Search<'_> {
    fn rank(&self, extra: &[u32]) -> u32 {
        let v: Vec<u32> = self.base.iter().zip(extra).map(|(a, b)| a + b).collect();
        self.oracle.base_rank_counts(&v)
    }

    fn contractions(&self, e: usize, c: &mut Vec<u32>, used: u32) -> Option<(Vec<u32>, Vec<u32>)> {
        if e == c.len() {
            return if used == self.target { self.kept(c) } else { None };
        }
        let room = self.avail[e].min(self.target - used);
        for ce in 0..=room {
            c[e] = ce;
            if ce > 0 && self.rank(c) - self.base_rank != used + ce {
                // larger counts stay dependent
                break;
            }
            if let Some(found) = self.contractions(e + 1, c, used + ce) {
                return Some(found);
            }
        }
        c[e] = 0;
        None
    }

    fn kept(&self, c: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
        let n = c.len();
        let rc = self.rank(c);
        let rel = |t: &[u32]| {
            let v: Vec<u32> = c.iter().zip(t).map(|(a, b)| a + b).collect();
            self.rank(&v) - rc
        };
        let unit = |e: usize, m: u32| {
            let mut t = vec![0; n];
            t[e] = m;
            t
        };
        let room: Vec<u32> = (0..n).map(|e| self.avail[e] - c[e]).collect();
        // most clones of a class usable together in a 4-point line
        let cap: Vec<u32> = (0..n)
            .map(|e| {
                let mut m = 0;
                while m < room[e].min(4) && rel(&unit(e, m + 1)) == (m + 1).min(2) {
                    m += 1;
                }
                m
            })
            .collect();
        let mut s = vec![0u32; n];
        self.distribute(0, 4, &cap, &mut s, &rel).then(|| (c.to_vec(), s))
    }

    fn distribute(&self, e: usize, left: u32, cap: &[u32], s: &mut Vec<u32>, rel: &dyn Fn(&[u32]) -> u32) -> bool {
        if left == 0 {
            return rel(s) == 2;
        }
        if e == s.len() {
            return false;
        }
        for se in (0..=cap[e].min(left)).rev() {
            s[e] = se;
            let pairs_ok = se == 0
                || (0..e).filter(|&f| s[f] > 0).all(|f| {
                    let mut t = vec![0; s.len()];
                    t[e] = 1;
                    t[f] = 1;
                    rel(&t) == 2
                });
            if pairs_ok && self.distribute(e + 1, left - se, cap, s, rel) {
                return true;
            }
        }
        s[e] = 0;
        false
    }
}

/// Some `U_{2,4}` minor of `o`, if one exists.
pub fn find_u24_minor(o: &NaturalMatroidOracle) -> Option<U24Witness> {
    let r = o.total_rank();
    if r < 2 {
        return None;
    }
    if o.simplified().len() < r as usize + 2 {
        return None;
    }
    let base = o.counts(o.contracted());
    let search = Search {
        oracle: o,
        base_rank: o.base_rank_counts(&base),
        base,
        avail: o.available_counts(),
        target: r - 2,
    };
    let mut c = vec![0; o.classes()];
    let (c, s) = search.contractions(0, &mut c, 0)?;
    let spec = CloneMinorSpec::from_counts(o, &c, &s).expect("counts within available clones");
    let (contracted, _, kept) = spec.expand(o).expect("spec built from available counts");
    let bits: Vec<usize> = kept.iter().collect();
    let witness = U24Witness { spec, contracted, kept: [bits[0], bits[1], bits[2], bits[3]] };
    debug_assert!(witness.replay(o));
    Some(witness)
}
