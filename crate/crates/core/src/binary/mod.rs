//! Binary-matroid detection for natural-matroid oracles, by two independent
//! methods: a `U_{2,4}`-minor search and an explicit GF(2) representation
//! built from fundamental circuits.

pub mod fixtures;
mod gf2;
mod u24;

pub use gf2::Gf2Matrix;
pub use u24::{find_u24_minor, U24Witness, WitnessDisplay};

use gf2::XorBasis;

use crate::error::{Error, Result};
use crate::natural::{NaturalMatroidOracle, PointOracle};

/// Most points a representation is built or verified for (the check
/// sweeps every subset).
pub const MAX_POINTS: usize = 28;

/// Checks `gf2_rank(m, S) = r(S)` for every subset `S` of points. Columns are
/// matched to points by label, so column order is irrelevant.
pub fn verify_representation(m: &Gf2Matrix, points: &PointOracle) -> Result<bool> {
    let labels = points.labels();
    if labels.len() != m.cols() {
        return Err(Error::LabelMismatch);
    }
    if labels.len() > MAX_POINTS {
        return Err(Error::TooManyPoints { max: MAX_POINTS, got: labels.len() });
    }
    let mut order = Vec::with_capacity(labels.len());
    for l in &labels {
        let c = m.labels().iter().position(|x| x == l).ok_or(Error::LabelMismatch)?;
        order.push(c);
    }
    let columns: Vec<&[u64]> = order.iter().map(|&c| m.column(c)).collect();
    if m.cols() == 0 {
        return Ok(points.rank(0) == 0);
    }
    let mut basis = XorBasis::new(m.column(0).len());
    Ok(sweep(points, &columns, &mut basis, 0, 0))
}

fn sweep(points: &PointOracle, columns: &[&[u64]], basis: &mut XorBasis, start: usize, mask: u64) -> bool {
    if basis.len() as u32 != points.rank(mask) {
        return false;
    }
    for j in start..columns.len() {
        let added = basis.insert(columns[j]);
        let ok = sweep(points, columns, basis, j + 1, mask | 1 << j);
        if added {
            basis.pop();
        }
        if !ok {
            return false;
        }
    }
    true
}

/// A GF(2) representation of the point matroid, or `None` if it has none.
///
/// A basis is chosen greedily in point order; the column of every other
/// point is the indicator of its fundamental circuit in that basis. The
/// candidate is then checked against every subset.
pub fn build_representation(points: &PointOracle) -> Result<Option<Gf2Matrix>> {
    let n = points.len();
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints { max: MAX_POINTS, got: n });
    }
    let mut basis: Vec<usize> = Vec::new();
    let mut basis_mask = 0u64;
    for x in 0..n {
        if points.rank(basis_mask | 1 << x) as usize > basis.len() {
            basis.push(x);
            basis_mask |= 1 << x;
        }
    }
    let r = basis.len();
    let mut m = Gf2Matrix::zeros(r, points.labels())?;
    for x in 0..n {
        if let Some(i) = basis.iter().position(|&b| b == x) {
            m.set(i, x, true);
            continue;
        }
        for (i, &b) in basis.iter().enumerate() {
            let swapped = (basis_mask & !(1 << b)) | 1 << x;
            if points.rank(swapped) as usize == r {
                m.set(i, x, true);
            }
        }
    }
    Ok(verify_representation(&m, points)?.then_some(m))
}

/// Outcome of [`is_binary`], with the evidence from both methods.
#[derive(Clone, Debug)]
pub struct BinaryVerdict {
    pub binary: bool,
    pub witness: Option<U24Witness>,
    pub representation: Option<Gf2Matrix>,
}

/// Decides binarity both ways and insists they agree.
pub fn is_binary(o: &NaturalMatroidOracle) -> Result<BinaryVerdict> {
    let witness = find_u24_minor(o);
    let representation = build_representation(&o.simplified())?;
    if witness.is_some() == representation.is_some() {
        return Err(Error::OracleDisagreement);
    }
    if let Some(w) = &witness {
        if !w.replay(o) {
            return Err(Error::OracleDisagreement);
        }
    }
    Ok(BinaryVerdict { binary: witness.is_none(), witness, representation })
}

/// Binarity by the minor search alone.
pub fn is_binary_fast(o: &NaturalMatroidOracle) -> bool {
    find_u24_minor(o).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatroid::Polymatroid;

    fn oracle(names: &[&str], k: u32, ranks: Vec<u32>) -> NaturalMatroidOracle {
        let p = Polymatroid::new(names.iter().map(|s| s.to_string()).collect(), k, ranks).unwrap();
        NaturalMatroidOracle::new(&p).unwrap()
    }

    #[test]
    fn four_point_line_has_no_representation() {
        let p = Polymatroid::from_fn(["e", "f", "g", "h"].map(String::from).to_vec(), 3, |s| s.len().min(2) as u32)
            .unwrap();
        let o = NaturalMatroidOracle::new(&p).unwrap();
        assert!(build_representation(&o.simplified()).unwrap().is_none());
        let v = is_binary(&o).unwrap();
        assert!(!v.binary);
        assert!(v.witness.is_some());
    }

    #[test]
    fn free_element_is_identity_representable() {
        let o = oracle(&["e"], 4, vec![0, 4]);
        let points = o.simplified();
        let m = build_representation(&points).unwrap().unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 4));
        let id = Gf2Matrix::identity(points.labels()).unwrap();
        assert!(verify_representation(&id, &points).unwrap());
        assert!(is_binary(&o).unwrap().binary);
    }

    #[test]
    fn column_order_does_not_matter() {
        let o = oracle(&["e", "f"], 3, vec![0, 3, 1, 3]);
        let points = o.simplified();
        let m = build_representation(&points).unwrap().unwrap();
        let reversed: Vec<usize> = (0..m.cols()).rev().collect();
        assert!(verify_representation(&m.select_columns(&reversed), &points).unwrap());
    }

    #[test]
    fn label_mismatch() {
        let o = oracle(&["e"], 3, vec![0, 3]);
        let m = Gf2Matrix::identity(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        assert_eq!(verify_representation(&m, &o.simplified()), Err(Error::LabelMismatch));
    }

    #[test]
    fn wrong_matrix_is_rejected() {
        let o = oracle(&["e"], 3, vec![0, 3]);
        let points = o.simplified();
        let m = Gf2Matrix::from_rows(points.labels(), &["110", "011", "101"]).unwrap();
        assert!(!verify_representation(&m, &points).unwrap());
    }

    #[test]
    fn loops_and_empty() {
        let o = oracle(&["e"], 3, vec![0, 0]);
        let v = is_binary(&o).unwrap();
        assert!(v.binary);
        assert_eq!(v.representation.unwrap().cols(), 0);
    }
}
