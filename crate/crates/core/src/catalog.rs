//! Named excluded minors for the class of k-polymatroids with binary
//! k-natural matroids, for any k >= 3.
//!
//! The four-element tables are written out cell by cell; nothing here is
//! derived from anything else.

use crate::error::{Error, Result};
use crate::polymatroid::{Polymatroid, Subset, TypeTriple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub k: u32,
    pub polymatroid: Polymatroid,
    pub dual_name: String,
    pub total_rank: u32,
    /// The type in the name, for the four-element entries.
    pub declared_type: Option<TypeTriple>,
}

pub const ALPHA_KM1: &str = "Ex_alpha^{k-1}";
pub const ALPHA_K: &str = "Ex_alpha^k";
pub const BETA_K: &str = "Ex_beta^k";
pub const BETA_KP1: &str = "Ex_beta^{k+1}";
pub const EPSILON_K: &str = "Ex_epsilon^k";
pub const GAMMA_2: &str = "Ex_gamma^2";
pub const EPSILON_4: &str = "Ex_epsilon^4";
pub const U24: &str = "U_{2,4}";
pub const EX_301: &str = "Ex_{(3,0,1)}^{k+1}";
pub const EX_202: &str = "Ex_{(2,0,2)}^{2k}";
pub const EX_103: &str = "Ex_{(1,0,3)}^{3k-1}";
pub const EX_004: &str = "Ex_{(0,0,4)}^{4k-2}";

/// Name of the singleton excluded minor of rank `m`.
pub fn singleton_name(m: u32) -> String {
    format!("Ex^{m}")
}

fn check_k(k: u32) -> Result<()> {
    if k < 3 {
        Err(Error::KTooSmall { min: 3, k })
    } else {
        Ok(())
    }
}

/// Rank table from `(subset, rank)` cells, where a subset is written as its
/// single-letter labels.
fn table(labels: &str, k: u32, cells: &[(&str, u32)]) -> Polymatroid {
    let labels: Vec<String> = labels.chars().map(String::from).collect();
    let entries = cells.iter().map(|&(s, r)| {
        let set = Subset::from_indices(s.chars().map(|c| labels.iter().position(|l| l.starts_with(c)).unwrap()));
        (set, r)
    });
    Polymatroid::from_entries(labels.clone(), k, entries).expect("catalog tables are complete")
}

fn pair(k: u32, e: u32, f: u32, ef: u32) -> Polymatroid {
    table("ef", k, &[("e", e), ("f", f), ("ef", ef)])
}

fn canonical_name(name: &str) -> String {
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    match compact.as_str() {
        "Ex_{(4,0,0)}^2" | "Ex_{(4,0,0)}^{2}" | "U24" | "U_{2,4}" => U24.to_string(),
        _ => compact,
    }
}

/// The entry called `name` at this k.
pub fn build(name: &str, k: u32) -> Result<CatalogEntry> {
    check_k(k)?;
    let name = canonical_name(name);
    let incompatible = || Error::CatalogIncompatible { name: name.clone(), k };
    let entry = |poly: Polymatroid, dual: &str, declared_type: Option<TypeTriple>| CatalogEntry {
        name: name.clone(),
        k,
        total_rank: poly.total_rank(),
        polymatroid: poly,
        dual_name: dual.to_string(),
        declared_type,
    };
    let t = |a, b, c| Some(TypeTriple::new(a, b, c));
    let e = match name.as_str() {
        ALPHA_KM1 => entry(pair(k, k - 1, k - 1, k - 1), BETA_KP1, None),
        ALPHA_K => entry(pair(k, k - 1, k - 1, k), ALPHA_K, None),
        BETA_K => entry(pair(k, k, k, k), BETA_K, None),
        BETA_KP1 => entry(pair(k, k, k, k + 1), ALPHA_KM1, None),
        EPSILON_K => entry(pair(k, k - 1, k, k), EPSILON_K, None),
        GAMMA_2 if k == 3 => entry(pair(k, 1, 2, 2), EPSILON_4, None),
        EPSILON_4 if k == 3 => entry(pair(k, 2, 3, 4), GAMMA_2, None),
        GAMMA_2 | EPSILON_4 => return Err(incompatible()),
        U24 => entry(
            table(
                "efgh",
                k,
                &[
                    ("e", 1),
                    ("f", 1),
                    ("g", 1),
                    ("h", 1),
                    ("ef", 2),
                    ("eg", 2),
                    ("eh", 2),
                    ("fg", 2),
                    ("fh", 2),
                    ("gh", 2),
                    ("efg", 2),
                    ("efh", 2),
                    ("egh", 2),
                    ("fgh", 2),
                    ("efgh", 2),
                ],
            ),
            EX_004,
            t(4, 0, 0),
        ),
        EX_301 => entry(
            table(
                "efgh",
                k,
                &[
                    ("e", 1),
                    ("f", 1),
                    ("g", 1),
                    ("h", k),
                    ("ef", 2),
                    ("eg", 2),
                    ("eh", k + 1),
                    ("fg", 2),
                    ("fh", k + 1),
                    ("gh", k + 1),
                    ("efg", 2),
                    ("efh", k + 1),
                    ("egh", k + 1),
                    ("fgh", k + 1),
                    ("efgh", k + 1),
                ],
            ),
            EX_103,
            t(3, 0, 1),
        ),
        EX_202 => entry(
            table(
                "efgh",
                k,
                &[
                    ("e", 1),
                    ("f", 1),
                    ("g", k),
                    ("h", k),
                    ("ef", 2),
                    ("eg", k + 1),
                    ("eh", k + 1),
                    ("fg", k + 1),
                    ("fh", k + 1),
                    ("gh", 2 * k),
                    ("efg", k + 1),
                    ("efh", k + 1),
                    ("egh", 2 * k),
                    ("fgh", 2 * k),
                    ("efgh", 2 * k),
                ],
            ),
            EX_202,
            t(2, 0, 2),
        ),
        EX_103 => entry(
            table(
                "efgh",
                k,
                &[
                    ("e", 1),
                    ("f", k),
                    ("g", k),
                    ("h", k),
                    ("ef", k + 1),
                    ("eg", k + 1),
                    ("eh", k + 1),
                    ("fg", 2 * k),
                    ("fh", 2 * k),
                    ("gh", 2 * k),
                    ("efg", 2 * k),
                    ("efh", 2 * k),
                    ("egh", 2 * k),
                    ("fgh", 3 * k - 1),
                    ("efgh", 3 * k - 1),
                ],
            ),
            EX_301,
            t(1, 0, 3),
        ),
        EX_004 => entry(
            table(
                "efgh",
                k,
                &[
                    ("e", k),
                    ("f", k),
                    ("g", k),
                    ("h", k),
                    ("ef", 2 * k),
                    ("eg", 2 * k),
                    ("eh", 2 * k),
                    ("fg", 2 * k),
                    ("fh", 2 * k),
                    ("gh", 2 * k),
                    ("efg", 3 * k - 1),
                    ("efh", 3 * k - 1),
                    ("egh", 3 * k - 1),
                    ("fgh", 3 * k - 1),
                    ("efgh", 4 * k - 2),
                ],
            ),
            U24,
            t(0, 0, 4),
        ),
        other => {
            let m = other
                .strip_prefix("Ex^")
                .map(|s| s.trim_start_matches('{').trim_end_matches('}'))
                .and_then(|s| s.parse::<u32>().ok())
                .ok_or_else(|| Error::UnknownCatalogName(other.to_string()))?;
            if m < 2 || m + 2 > k {
                return Err(incompatible());
            }
            let mut e = entry(table("e", k, &[("e", m)]), &singleton_name(k - m), None);
            e.name = singleton_name(m);
            e
        }
    };
    Ok(e)
}

/// Every name defined at this k, in catalog order.
pub fn names_for_k(k: u32) -> Result<Vec<String>> {
    check_k(k)?;
    let mut names: Vec<String> = (2..=k - 2).map(singleton_name).collect();
    names.extend([ALPHA_KM1, ALPHA_K, BETA_K, BETA_KP1, EPSILON_K].map(String::from));
    if k == 3 {
        names.extend([GAMMA_2, EPSILON_4].map(String::from));
    }
    names.extend([U24, EX_301, EX_202, EX_103, EX_004].map(String::from));
    Ok(names)
}

pub fn list_for_k(k: u32) -> Result<Vec<CatalogEntry>> {
    names_for_k(k)?.iter().map(|n| build(n, k)).collect()
}

/// 12 at k = 3, k + 7 above.
pub fn expected_count(k: u32) -> Result<usize> {
    check_k(k)?;
    Ok(if k == 3 { 12 } else { k as usize + 7 })
}
