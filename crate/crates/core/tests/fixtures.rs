use pml::binary::fixtures::Fixture;
use pml::binary::{verify_representation, Gf2Matrix};

fn fixture_text(f: Fixture, k: u32) -> String {
    let path = format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), f.file_name(k));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn files_match_generator() {
    for k in 3..=6 {
        for f in Fixture::ALL {
            assert_eq!(fixture_text(f, k), f.matrix(k).to_text(), "{}", f.file_name(k));
        }
    }
}

#[test]
fn files_represent_their_natural_matroids() {
    for k in 3..=6 {
        for f in Fixture::ALL {
            let m = Gf2Matrix::parse(&fixture_text(f, k)).unwrap();
            assert!(verify_representation(&m, &f.points(k).unwrap()).unwrap(), "{}", f.file_name(k));
        }
    }
}

#[test]
fn flipped_entry_is_rejected() {
    let f = Fixture::SkewLines;
    let mut m = Gf2Matrix::parse(&fixture_text(f, 4)).unwrap();
    let v = m.get(0, 0);
    m.set(0, 0, !v);
    assert!(!verify_representation(&m, &f.points(4).unwrap()).unwrap());
}
