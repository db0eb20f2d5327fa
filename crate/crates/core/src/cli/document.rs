//! The `polymatroid v1` text format.
//!
//! ```text
//! polymatroid v1
//! k 3
//! ground e f
//! rank e 1
//! rank f 1
//! rank e,f 2
//! ```
//!
//! `#` starts a comment. The `∅` line (`rank - 0`) is optional.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::polymatroid::{check_labels, Polymatroid, Subset};

const HEADER: &str = "polymatroid v1";

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Nonempty subsets by size, then lexicographically by element index.
pub fn serialization_order(n: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = (1..1u32 << n).map(Subset).collect();
    all.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
    all
}

pub fn serialize(p: &Polymatroid) -> String {
    let mut out = format!("{HEADER}\nk {}\nground", p.k());
    for l in p.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for s in serialization_order(p.len()) {
        out.push_str(&format!("rank {} {}\n", p.subset_label(s), p.rank(s)));
    }
    out
}

/// Parses a document. Only the table's shape is checked here; the axioms
/// are left to [`Polymatroid::validate`].
pub fn parse(text: &str) -> Result<Polymatroid> {
    let mut header = false;
    let mut k: Option<u32> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut entries: HashMap<u32, (u32, usize)> = HashMap::new();
    let mut last = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !header {
            if line != HEADER {
                return Err(err(line_no, format!("expected `{HEADER}`")));
            }
            header = true;
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("k") => {
                if k.is_some() {
                    return Err(err(line_no, "duplicate `k` line"));
                }
                let value = words.next().ok_or_else(|| err(line_no, "missing value for k"))?;
                let value: u32 = value.parse().map_err(|_| err(line_no, format!("bad integer `{value}`")))?;
                if value == 0 {
                    return Err(err(line_no, "k must be positive"));
                }
                if words.next().is_some() {
                    return Err(err(line_no, "trailing input after k"));
                }
                k = Some(value);
            }
            Some("ground") => {
                if labels.is_some() {
                    return Err(err(line_no, "duplicate `ground` line"));
                }
                let ls: Vec<String> = words.map(str::to_string).collect();
                check_labels(&ls).map_err(|e| err(line_no, e.to_string()))?;
                index = ls.iter().cloned().zip(0..).collect();
                labels = Some(ls);
            }
            Some("rank") => {
                if labels.is_none() {
                    return Err(err(line_no, "`rank` before `ground`"));
                }
                let subset = words.next().ok_or_else(|| err(line_no, "missing subset"))?;
                let value = words.next().ok_or_else(|| err(line_no, "missing rank value"))?;
                if words.next().is_some() {
                    return Err(err(line_no, "trailing input after rank value"));
                }
                let value: u32 = value.parse().map_err(|_| err(line_no, format!("bad integer `{value}`")))?;
                let mut s = Subset::EMPTY;
                if subset != "-" {
                    for l in subset.split(',') {
                        let j = *index.get(l).ok_or_else(|| err(line_no, format!("unknown label `{l}`")))?;
                        if s.contains(j) {
                            return Err(err(line_no, format!("label `{l}` repeated in subset")));
                        }
                        s = s.with(j);
                    }
                }
                if s.is_empty() && value != 0 {
                    return Err(err(line_no, "the empty set must have rank 0"));
                }
                if let Some((_, first)) = entries.insert(s.0, (value, line_no)) {
                    return Err(err(line_no, format!("duplicate subset `{subset}` (first on line {first})")));
                }
            }
            Some(other) => return Err(err(line_no, format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }

    let eof = last + 1;
    if !header {
        return Err(err(eof, format!("end of input before `{HEADER}`")));
    }
    let k = k.ok_or_else(|| err(eof, "end of input: no `k` line"))?;
    let labels = labels.ok_or_else(|| err(eof, "end of input: no `ground` line"))?;
    let entries = entries.into_iter().map(|(m, (v, _))| (Subset(m), v));
    Polymatroid::from_entries(labels, k, entries).map_err(|e| match e {
        Error::MissingSubset(s) => err(eof, format!("end of input: missing rank for subset {s}")),
        other => err(eof, other.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn u24_has_fifteen_rank_lines() {
        let p = catalog::build(catalog::U24, 3).unwrap().polymatroid;
        let text = serialize(&p);
        assert_eq!(text.lines().filter(|l| l.starts_with("rank ")).count(), 15);
        assert_eq!(parse(&text).unwrap(), p);
    }

    #[test]
    fn order_is_size_then_lex() {
        let p = Polymatroid::from_fn(vec!["e".into(), "f".into(), "g".into()], 3, |s| s.len() as u32).unwrap();
        let subsets: Vec<String> = serialize(&p).lines().skip(3).map(|l| l.split(' ').nth(1).unwrap().to_string()).collect();
        assert_eq!(subsets, ["e", "f", "g", "e,f", "e,g", "f,g", "e,f,g"]);
    }

    #[test]
    fn catalog_round_trips() {
        for k in 3..=5 {
            for entry in catalog::list_for_k(k).unwrap() {
                assert_eq!(parse(&serialize(&entry.polymatroid)).unwrap(), entry.polymatroid, "{}", entry.name);
            }
        }
    }

    #[test]
    fn missing_subset_reported_at_eof() {
        let text = "polymatroid v1\nk 3\nground e f\nrank e 1\nrank f 1\n";
        match parse(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 6);
                assert!(message.contains("e,f"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("polymatroid v1\nk 3\nground e\nrank e 1\nrank e 2\n", 5),
            ("polymatroid v1\nk 3\nground e\nrank x 1\n", 4),
            ("polymatroid v1\n# note\nk three\n", 3),
            ("polymatroid v2\n", 1),
            ("polymatroid v1\nk 3\nground e\nrank - 1\n", 4),
            ("polymatroid v1\nk 3\nground e e\n", 3),
        ];
        for (text, expected) in cases {
            match parse(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn comments_and_empty_set_line() {
        let text = "# a point\npolymatroid v1\nk 2  # bound\nground e\nrank - 0\nrank e 1\n";
        assert_eq!(parse(text).unwrap(), Polymatroid::singleton("e", 2, 1).unwrap());
    }
}
