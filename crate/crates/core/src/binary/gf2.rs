use std::fmt;

use crate::error::{Error, Result};

/// A matrix over GF(2) with labeled columns, stored column-major with
/// each column packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Vec<String>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, labels: Vec<String>) -> Result<Gf2Matrix> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::MatrixFormat(format!("duplicate column label `{l}`")));
            }
        }
        let words = rows.div_ceil(64).max(1);
        let cols = labels.len();
        Ok(Gf2Matrix { rows, cols, words, bits: vec![0; words * cols], labels })
    }

    pub fn identity(labels: Vec<String>) -> Result<Gf2Matrix> {
        let n = labels.len();
        let mut m = Gf2Matrix::zeros(n, labels)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// Builds a matrix from rows of `0`/`1` characters.
    pub fn from_rows<S: AsRef<str>>(labels: Vec<String>, rows: &[S]) -> Result<Gf2Matrix> {
        let mut m = Gf2Matrix::zeros(rows.len(), labels)?;
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != m.cols {
                return Err(Error::MatrixFormat(format!(
                    "row {} has {} entries, expected {}",
                    r + 1,
                    row.len(),
                    m.cols
                )));
            }
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    other => return Err(Error::MatrixFormat(format!("unexpected character `{other}`"))),
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[col * self.words + row / 64] >> (row % 64) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        let word = &mut self.bits[col * self.words + row / 64];
        let bit = 1u64 << (row % 64);
        if value {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    pub fn column(&self, col: usize) -> &[u64] {
        &self.bits[col * self.words..(col + 1) * self.words]
    }

    /// Rank over GF(2) of the given columns.
    pub fn gf2_rank(&self, cols: &[usize]) -> usize {
        let mut basis = XorBasis::new(self.words);
        for &c in cols {
            basis.insert(self.column(c));
        }
        basis.len()
    }

    /// Rank of the columns selected by a bitmask over column positions.
    pub fn gf2_rank_mask(&self, mask: u64) -> usize {
        let cols: Vec<usize> = (0..self.cols).filter(|&c| mask >> c & 1 == 1).collect();
        self.gf2_rank(&cols)
    }

    /// Same matrix with columns in the given order.
    pub fn select_columns(&self, order: &[usize]) -> Gf2Matrix {
        let mut bits = Vec::with_capacity(order.len() * self.words);
        for &c in order {
            bits.extend_from_slice(self.column(c));
        }
        Gf2Matrix {
            rows: self.rows,
            cols: order.len(),
            words: self.words,
            bits,
            labels: order.iter().map(|&c| self.labels[c].clone()).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Gf2Matrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::MatrixFormat("empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (rows, cols) = match fields.as_slice() {
            ["gf2", r, c] => {
                let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::MatrixFormat(format!("bad dimension `{s}`")));
                (parse(r)?, parse(c)?)
            }
            _ => return Err(Error::MatrixFormat(format!("bad header `{header}`"))),
        };
        let labels: Vec<String> = match lines.next() {
            Some(l) => l.split_whitespace().map(String::from).collect(),
            None if cols == 0 => Vec::new(),
            None => return Err(Error::MatrixFormat("missing label line".into())),
        };
        if labels.len() != cols {
            return Err(Error::MatrixFormat(format!("{} labels for {cols} columns", labels.len())));
        }
        let body: Vec<&str> = lines.collect();
        if body.len() != rows {
            return Err(Error::MatrixFormat(format!("{} rows, expected {rows}", body.len())));
        }
        Gf2Matrix::from_rows(labels, &body)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("gf2 {} {}\n{}\n", self.rows, self.cols, self.labels.join(" "));
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(if self.get(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Incrementally maintained row-echelon basis of GF(2) vectors.
#[derive(Clone, Debug)]
pub(crate) struct XorBasis {
    words: usize,
    vectors: Vec<(usize, Vec<u64>)>,
}

impl XorBasis {
    pub(crate) fn new(words: usize) -> XorBasis {
        XorBasis { words, vectors: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.vectors.len()
    }

    /// Adds `v` if it is independent of the basis; reports whether it was.
    pub(crate) fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        for (pivot, b) in &self.vectors {
            if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        match (0..self.words).find(|&w| v[w] != 0) {
            Some(w) => {
                let pivot = w * 64 + v[w].trailing_zeros() as usize;
                self.vectors.push((pivot, v));
                true
            }
            None => false,
        }
    }

    pub(crate) fn pop(&mut self) {
        self.vectors.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("c{i}")).collect()
    }

    #[test]
    fn identity_rank() {
        let m = Gf2Matrix::identity(labels(3)).unwrap();
        assert_eq!(m.gf2_rank(&[0, 1, 2]), 3);
        assert_eq!(m.gf2_rank(&[]), 0);
    }

    #[test]
    fn repeated_column() {
        let m = Gf2Matrix::from_rows(labels(2), &["11", "11", "00"]).unwrap();
        assert_eq!(m.gf2_rank(&[0, 1]), 1);
    }

    #[test]
    fn dependent_triple() {
        let m = Gf2Matrix::from_rows(labels(3), &["101", "011"]).unwrap();
        assert_eq!(m.gf2_rank_mask(0b111), 2);
        assert_eq!(m.gf2_rank_mask(0b011), 2);
    }

    #[test]
    fn tall_matrix_spans_words() {
        let rows: Vec<String> = (0..130).map(|r| if r == 129 { "1".into() } else { "0".into() }).collect();
        let m = Gf2Matrix::from_rows(labels(1), &rows).unwrap();
        assert!(m.get(129, 0));
        assert_eq!(m.gf2_rank(&[0]), 1);
    }

    #[test]
    fn text_round_trip() {
        let m = Gf2Matrix::from_rows(labels(3), &["101", "011"]).unwrap();
        let text = m.to_text();
        assert_eq!(text, "gf2 2 3\nc0 c1 c2\n101\n011\n");
        assert_eq!(Gf2Matrix::parse(&text).unwrap(), m);
    }

    #[test]
    fn malformed_text() {
        assert!(Gf2Matrix::parse("gf2 2 3\na b c\n101\n").is_err());
        assert!(Gf2Matrix::parse("gf2 1 3\na b c\n10\n").is_err());
        assert!(Gf2Matrix::parse("gf2 1 2\na b\n12\n").is_err());
        assert!(Gf2Matrix::parse("matrix 1 1\na\n1\n").is_err());
        assert!(Gf2Matrix::parse("gf2 1 2\na a\n11\n").is_err());
    }
}
