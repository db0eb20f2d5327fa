use std::fmt;

use crate::binary::{is_binary, U24Witness};
use crate::error::Result;
use crate::natural::NaturalMatroidOracle;
use crate::polymatroid::{Polymatroid, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    InClass,
    ExcludedMinor,
    NotExcluded,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::InClass => "in-class",
            Verdict::ExcludedMinor => "excluded-minor",
            Verdict::NotExcluded => "not-excluded",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Binarity of the two single-element minors at one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChildResult {
    pub element: usize,
    pub deletion_in_class: bool,
    pub contraction_in_class: bool,
}

/// Evidence for a verdict: the `U_{2,4}` witness when the subject is not in
/// the class, and the class membership of every single-element minor.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub subject: Polymatroid,
    pub verdict: Verdict,
    pub witness: Option<U24Witness>,
    pub children: Vec<ChildResult>,
}

/// Whether the k-natural matroid of `p` is binary. Both detection methods
/// run and must agree.
pub fn in_class(p: &Polymatroid) -> Result<bool> {
    Ok(is_binary(&NaturalMatroidOracle::new(p)?)?.binary)
}

fn children(p: &Polymatroid) -> Result<Vec<ChildResult>> {
    (0..p.len())
        .map(|e| {
            let x = Subset::singleton(e);
            Ok(ChildResult {
                element: e,
                deletion_in_class: in_class(&p.delete(x)?)?,
                contraction_in_class: in_class(&p.contract(x)?)?,
            })
        })
        .collect()
}

fn verdict_from(binary: bool, children: &[ChildResult]) -> Verdict {
    if binary {
        Verdict::InClass
    } else if children.iter().all(|c| c.deletion_in_class && c.contraction_in_class) {
        Verdict::ExcludedMinor
    } else {
        Verdict::NotExcluded
    }
}

/// Full certificate. Single-element minors suffice: every proper minor
/// is a minor of one of them.
pub fn is_excluded_minor(p: &Polymatroid) -> Result<Certificate> {
    p.ensure_valid()?;
    let verdict = is_binary(&NaturalMatroidOracle::new(p)?)?;
    let children = children(p)?;
    Ok(Certificate {
        subject: p.clone(),
        verdict: verdict_from(verdict.binary, &children),
        witness: verdict.witness,
        children,
    })
}

/// The verdict alone, stopping at the first single-element minor outside
/// the class.
pub fn quick_verdict(p: &Polymatroid) -> Result<Verdict> {
    if in_class(p)? {
        return Ok(Verdict::InClass);
    }
    for e in 0..p.len() {
        let x = Subset::singleton(e);
        if !in_class(&p.delete(x)?)? || !in_class(&p.contract(x)?)? {
            return Ok(Verdict::NotExcluded);
        }
    }
    Ok(Verdict::ExcludedMinor)
}

impl Certificate {
    /// Recomputes everything from fresh oracles and compares.
    pub fn replay(&self) -> Result<bool> {
        let o = NaturalMatroidOracle::new(&self.subject)?;
        let witness_ok = match &self.witness {
            Some(w) => w.replay(&o),
            None => in_class(&self.subject)?,
        };
        let children = children(&self.subject)?;
        Ok(witness_ok
            && children == self.children
            && verdict_from(self.witness.is_none(), &children) == self.verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn singleton(k: u32, m: u32) -> Polymatroid {
        Polymatroid::singleton("e", k, m).unwrap()
    }

    #[test]
    fn singleton_membership() {
        for k in 3..=6 {
            for m in 0..=k {
                let expected = m <= 1 || m + 1 >= k;
                assert_eq!(in_class(&singleton(k, m)).unwrap(), expected, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn catalog_301_certifies() {
        let p = catalog::build(catalog::EX_301, 3).unwrap().polymatroid;
        let c = is_excluded_minor(&p).unwrap();
        assert_eq!(c.verdict, Verdict::ExcludedMinor);
        assert_eq!(c.children.len(), 4);
        assert!(c.replay().unwrap());
        assert_eq!(quick_verdict(&p).unwrap(), Verdict::ExcludedMinor);
    }

    #[test]
    fn beta_pair_below_full_rank_is_in_class() {
        let k = 4;
        let p = Polymatroid::new(vec!["e".into(), "f".into()], k, vec![0, k, k, 2 * k - 1]).unwrap();
        assert!(in_class(&p).unwrap());
        assert_eq!(is_excluded_minor(&p).unwrap().verdict, Verdict::InClass);
    }

    #[test]
    fn alpha_pair_in_middle_range_is_not_excluded() {
        let k = 5;
        let p = Polymatroid::new(vec!["e".into(), "f".into()], k, vec![0, k - 1, k - 1, 6]).unwrap();
        let c = is_excluded_minor(&p).unwrap();
        assert_eq!(c.verdict, Verdict::NotExcluded);
        assert!(c.witness.is_some());
        assert_eq!(quick_verdict(&p).unwrap(), Verdict::NotExcluded);
    }

    #[test]
    fn tampered_certificate_fails_replay() {
        let p = catalog::build(catalog::U24, 3).unwrap().polymatroid;
        let mut c = is_excluded_minor(&p).unwrap();
        c.verdict = Verdict::NotExcluded;
        assert!(!c.replay().unwrap());
    }
}
