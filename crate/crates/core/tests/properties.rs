use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pml::certify::sample_polymatroid;
use pml::compress::{compress, compress_closed_form, dual_commutes};
use pml::natural::{CloneSet, NaturalMatroidOracle};
use pml::{Polymatroid, Subset};

fn polymatroid(max_k: u32, max_n: usize) -> impl Strategy<Value = Polymatroid> {
    (1..=max_k, 1..=max_n, any::<u64>())
        .prop_map(|(k, n, seed)| sample_polymatroid(k, n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn samples_satisfy_every_axiom(p in polymatroid(4, 4)) {
        prop_assert!(p.validate().is_valid());
    }

    #[test]
    fn dual_is_an_involution(p in polymatroid(4, 4)) {
        let d = p.dual();
        prop_assert!(d.is_valid());
        prop_assert_eq!(d.dual(), p.clone());
        prop_assert_eq!(d.total_rank() + p.total_rank(), p.k() * p.len() as u32);
    }

    #[test]
    fn dual_swaps_deletion_and_contraction(p in polymatroid(4, 4), mask in any::<u32>()) {
        let x = Subset(mask & p.ground().0);
        prop_assert_eq!(p.delete(x).unwrap().dual(), p.dual().contract(x).unwrap());
        prop_assert_eq!(p.contract(x).unwrap().dual(), p.dual().delete(x).unwrap());
    }

    #[test]
    fn compression_closed_form_matches_oracle(p in polymatroid(4, 4), e in 0usize..4, l in 1u32..4) {
        let e = e % p.len();
        prop_assume!(l < p.k());
        let oracle = compress(&p, e, l).unwrap();
        prop_assert!(oracle.is_valid());
        prop_assert_eq!(&compress_closed_form(&p, e, l).unwrap(), &oracle);
        if p.element_rank(e) >= l {
            let single = Subset::singleton(e);
            let kept: Vec<usize> = (p.ground() - single).iter().collect();
            for a in oracle.ground().subsets() {
                let original = Subset::from_indices(a.iter().map(|i| kept[i]));
                let expected = p.rank(original).min(p.rank(original | single) - l);
                prop_assert_eq!(oracle.rank(a), expected);
            }
        }
        prop_assert!(dual_commutes(&p, e, l).unwrap());
    }

    #[test]
    fn natural_rank_is_a_matroid_rank(p in polymatroid(4, 4), a in any::<u64>(), b in any::<u64>()) {
        let o = NaturalMatroidOracle::new(&p).unwrap();
        let u = o.universe_set().0;
        let (x, y) = (CloneSet(a & u), CloneSet(b & u));
        let r = |s: CloneSet| o.rank(s).unwrap();
        prop_assert!(r(x) as usize <= x.len());
        prop_assert!(r(x) <= r(x.union(y)));
        prop_assert!(r(x.union(y)) + r(CloneSet(x.0 & y.0)) <= r(x) + r(y));
        for bit in 0..o.universe_set().len() {
            let step = r(x.union(CloneSet::single(bit))) - r(x);
            prop_assert!(step <= 1);
        }
    }

    #[test]
    fn natural_rank_is_symmetric_in_clones(p in polymatroid(4, 4), a in any::<u64>()) {
        let o = NaturalMatroidOracle::new(&p).unwrap();
        let x = CloneSet(a & o.universe_set().0);
        let mut packed = CloneSet(0);
        for e in 0..p.len() {
            let count = x.0 & o.class(e).0;
            for j in 0..count.count_ones() as usize {
                packed = packed.union(CloneSet::single(o.clone_bit(e, j)));
            }
        }
        prop_assert_eq!(o.rank(x).unwrap(), o.rank(packed).unwrap());
        let full = o.clones_of(p.ground());
        prop_assert_eq!(o.rank(full).unwrap(), p.total_rank());
    }

    #[test]
    fn natural_matroid_of_dual_is_dual_matroid(p in polymatroid(4, 4), a in any::<u64>()) {
        let o = NaturalMatroidOracle::new(&p).unwrap();
        let od = NaturalMatroidOracle::new(&p.dual()).unwrap();
        let u = o.universe_set();
        let x = CloneSet(a & u.0);
        let dual_rank = x.len() as u32 + o.rank(u.minus(x)).unwrap() - o.rank(u).unwrap();
        prop_assert_eq!(od.rank(x).unwrap(), dual_rank);
    }

    #[test]
    fn canonical_form_is_an_isomorphism_invariant(p in polymatroid(3, 4), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let q = p.permute(&perm);
        prop_assert!(p.is_isomorphic(&q));
        prop_assert_eq!(p.canonical_form(), q.canonical_form());
        prop_assert_eq!(p.dual().canonical_form(), q.dual().canonical_form());
    }
}
