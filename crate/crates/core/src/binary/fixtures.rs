//! The explicit binary representations for the type-(2,0,2) family at
//! rank 2k, generated for any k, together with the polymatroids whose
//! natural matroids they represent.
//!
//! Column `g_i` of a printed matrix is the clone `g#i`.

use crate::binary::Gf2Matrix;
use crate::catalog;
use crate::error::Result;
use crate::natural::{NaturalMatroidOracle, PointOracle};
use crate::polymatroid::{Polymatroid, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// `ρ(gh) = 2k−1`, every point-plane pair spanning `k+1`.
    SkewLines,
    /// `ρ(gh) = 2k` with `ρ(fh) = k`.
    CoplanarPair,
    /// `Ex_{(2,0,2)}^{2k}` with `e` deleted.
    DeleteE,
    /// `Ex_{(2,0,2)}^{2k}` with `e` contracted.
    ContractE,
    /// `Ex_{(2,0,2)}^{2k}` with `g` contracted.
    ContractG,
}

impl Fixture {
    pub const ALL: [Fixture; 5] =
        [Fixture::SkewLines, Fixture::CoplanarPair, Fixture::DeleteE, Fixture::ContractE, Fixture::ContractG];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::SkewLines => "ex202-gh-2k-1",
            Fixture::CoplanarPair => "ex202-fh-k",
            Fixture::DeleteE => "ex202-delete-e",
            Fixture::ContractE => "ex202-contract-e",
            Fixture::ContractG => "ex202-contract-g",
        }
    }

    pub fn file_name(self, k: u32) -> String {
        format!("{}-k{}.gf2", self.name(), k)
    }

    pub fn matrix(self, k: u32) -> Gf2Matrix {
        let k = k as usize;
        let g = |i: usize| format!("g#{i}");
        let h = |i: usize| format!("h#{i}");
        let gs = || (1..=k).map(g);
        let hs = || (1..=k).map(h);
        let mut rows: Vec<Vec<String>> = Vec::new();
        let columns: Vec<String> = match self {
            Fixture::SkewLines => {
                rows.push(vec!["e#1".into(), "f#1".into()]);
                rows.push(vec!["f#1".into(), g(1), h(1)]);
                rows.extend((1..k).map(|i| vec![g(i), g(i + 1)]));
                rows.extend((1..k).map(|i| vec![h(i), h(i + 1)]));
                ["e#1".to_string(), "f#1".into()].into_iter().chain(gs()).chain(hs()).collect()
            }
            Fixture::CoplanarPair => {
                rows.extend((1..=k).map(|i| vec!["e#1".into(), g(i)]));
                rows.extend((1..=k).map(|i| vec!["e#1".into(), "f#1".into(), h(i)]));
                ["e#1".to_string(), "f#1".into()].into_iter().chain(gs()).chain(hs()).collect()
            }
            Fixture::DeleteE => {
                rows.extend((1..=k).map(|i| vec!["f#1".into(), g(i)]));
                rows.extend((1..=k).map(|i| vec!["f#1".into(), h(i)]));
                std::iter::once("f#1".to_string()).chain(gs()).chain(hs()).collect()
            }
            Fixture::ContractE => {
                rows.push(vec!["f#1".into(), g(1), h(1)]);
                rows.extend((1..k).map(|i| vec![g(i), g(i + 1)]));
                rows.extend((1..k).map(|i| vec![h(i), h(i + 1)]));
                std::iter::once("f#1".to_string()).chain(gs()).chain(hs()).collect()
            }
            Fixture::ContractG => {
                rows.extend((1..=k).map(|i| vec!["e#1".into(), "f#1".into(), h(i)]));
                ["e#1".to_string(), "f#1".into()].into_iter().chain(hs()).collect()
            }
        };
        let text: Vec<String> = rows
            .iter()
            .map(|row| columns.iter().map(|c| if row.contains(c) { '1' } else { '0' }).collect())
            .collect();
        Gf2Matrix::from_rows(columns, &text).expect("generated rows match the columns")
    }

    /// The polymatroid whose natural matroid the matrix represents.
    pub fn polymatroid(self, k: u32) -> Polymatroid {
        let ex = catalog::build("Ex_{(2,0,2)}^{2k}", k).expect("defined for every k").polymatroid;
        let e = Subset::singleton(0);
        let g = Subset::singleton(2);
        match self {
            Fixture::SkewLines => family_202(k, [k + 1; 4], 2 * k - 1),
            Fixture::CoplanarPair => family_202(k, [k + 1, k + 1, k + 1, k], 2 * k),
            Fixture::DeleteE => ex.delete(e).expect("e is an element"),
            Fixture::ContractE => ex.contract(e).expect("e is an element"),
            Fixture::ContractG => ex.contract(g).expect("g is an element"),
        }
    }

    /// The points of the natural matroid that the columns stand for: the
    /// simplification, except after contracting `g`, where `e` and `f`
    /// become parallel and both columns are kept.
    pub fn points(self, k: u32) -> Result<PointOracle> {
        let o = NaturalMatroidOracle::new(&self.polymatroid(k))?;
        match self {
            Fixture::ContractG => o.restriction(self.matrix(k).labels()),
            _ => Ok(o.simplified()),
        }
    }
}

/// Points `e, f`, rank-k elements `g, h`, `ρ(E) = 2k`, with the given
/// `(ρ(eg), ρ(eh), ρ(fg), ρ(fh))` and `ρ(gh)`.
fn family_202(k: u32, pairs: [u32; 4], gh: u32) -> Polymatroid {
    let labels = ["e", "f", "g", "h"].map(String::from).to_vec();
    let [eg, eh, fg, fh] = pairs;
    let table = [
        0,
        1,
        1,
        2,
        k,
        eg,
        fg,
        k + 1,
        k,
        eh,
        fh,
        k + 1,
        gh,
        2 * k,
        2 * k,
        2 * k,
    ];
    Polymatroid::new(labels, k, table.to_vec()).expect("sixteen entries")
}
