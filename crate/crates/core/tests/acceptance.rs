//! One line per acceptance criterion. Tolerances are exact; runtime bounds
//! are the per-criterion limits below.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pml::binary::fixtures::Fixture;
use pml::binary::{build_representation, find_u24_minor, verify_representation, Gf2Matrix};
use pml::catalog;
use pml::certify::{
    classify, enumerate_all, in_class, is_excluded_minor, quick_verdict, sample_polymatroid,
    verify_no_decompression_excluded, Filters, SweepMode, Verdict, DEFAULT_BUDGET,
};
use pml::compress::{compress, compress_closed_form, dual_commutes};
use pml::natural::NaturalMatroidOracle;
use pml::{Polymatroid, Subset};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn catalog_counts() -> Outcome {
    let mut counts = Vec::new();
    for k in 3..=8u32 {
        let entries = catalog::list_for_k(k).map_err(err)?;
        let expected = if k == 3 { 12 } else { k as usize + 7 };
        ensure(entries.len() == expected, || format!("k={k}: {} entries, expected {expected}", entries.len()))?;
        for e in &entries {
            let p = &e.polymatroid;
            ensure(p.is_valid() && p.is_simple() && p.is_connected(), || format!("k={k}: {} fails validate/simple/connected", e.name))?;
        }
        counts.push(entries.len().to_string());
    }
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_pml"))
        .args(["catalog", "--k", "3", "--machine"])
        .output()
        .map_err(err)?;
    let lines = String::from_utf8_lossy(&out.stdout).lines().count();
    ensure(out.status.success() && lines == 12, || format!("`catalog --k 3` printed {lines} entries"))?;
    Ok(format!("counts k=3..8: {}", counts.join(",")))
}

fn certify_catalog() -> Outcome {
    let mut n = 0;
    for k in 3..=4 {
        for e in catalog::list_for_k(k).map_err(err)? {
            let c = is_excluded_minor(&e.polymatroid).map_err(err)?;
            let p = &e.polymatroid;
            ensure(c.verdict == Verdict::ExcludedMinor, || format!("k={k} {}: {}", e.name, c.verdict))?;
            ensure(c.witness.is_some(), || format!("k={k} {}: no witness", e.name))?;
            ensure(c.children.len() == p.len(), || format!("k={k} {}: {} children", e.name, c.children.len()))?;
            let all_in = c.children.iter().all(|ch| ch.deletion_in_class && ch.contraction_in_class);
            ensure(all_in, || format!("k={k} {}: a single-element minor is outside the class", e.name))?;
            ensure(c.replay().map_err(err)?, || format!("k={k} {}: replay failed", e.name))?;
            n += 1;
        }
    }
    Ok(format!("{n} entries certified excluded-minor, all 2|E| children in class"))
}

fn catalog_keys(k: u32, n: usize) -> Result<BTreeSet<pml::polymatroid::CanonicalKey>, String> {
    Ok(catalog::list_for_k(k)
        .map_err(err)?
        .into_iter()
        .filter(|e| e.polymatroid.len() == n)
        .map(|e| e.polymatroid.canonical_key())
        .collect())
}

fn sweep(k: u32, n: usize, mode: SweepMode, limit: Duration) -> Result<(BTreeSet<pml::polymatroid::CanonicalKey>, u64), String> {
    let start = Instant::now();
    let r = classify(k, n, &Filters::default_for(k, n), mode, DEFAULT_BUDGET).map_err(err)?;
    ensure(start.elapsed() <= limit, || format!("k={k} n={n}: {:.1?} exceeds {limit:?}", start.elapsed()))?;
    ensure(r.dual_consistent, || format!("k={k} n={n}: dual-consistency check failed"))?;
    Ok((r.excluded.into_iter().map(|f| f.key).collect(), r.enumerated))
}

fn two_elements() -> Outcome {
    let mut sizes = Vec::new();
    for (k, expected) in [(3, 7), (4, 5), (5, 5)] {
        let (found, _) = sweep(k, 2, SweepMode::Full, Duration::from_secs(30))?;
        let cat = catalog_keys(k, 2)?;
        ensure(cat.len() == expected, || format!("k={k}: catalog has {} pairs", cat.len()))?;
        ensure(found == cat, || format!("k={k}: found {} excluded pairs, not the catalog's {expected}", found.len()))?;
        sizes.push(found.len().to_string());
    }
    Ok(format!("k=3,4,5 -> {} excluded minors, equal to the catalog up to isomorphism", sizes.join("/")))
}

fn three_elements() -> Outcome {
    let mut done = Vec::new();
    for k in 3..=4 {
        let (found, count) = sweep(k, 3, SweepMode::Full, Duration::from_secs(600))?;
        ensure(found.is_empty(), || format!("k={k}: {} excluded minors on 3 elements", found.len()))?;
        done.push(format!("k={k}: 0 of {count}"));
    }
    Ok(done.join(", "))
}

fn four_elements() -> Outcome {
    let (found, count) = sweep(3, 4, SweepMode::Restricted, Duration::from_secs(1800))?;
    let cat = catalog_keys(3, 4)?;
    ensure(cat.len() == 5, || format!("catalog has {} four-element entries", cat.len()))?;
    ensure(found == cat, || format!("found {} excluded minors, catalog has 5", found.len()))?;
    let (full, _) = sweep(3, 4, SweepMode::Full, Duration::from_secs(1800))?;
    ensure(full == found, || format!("full mode found {} excluded minors", full.len()))?;
    Ok(format!("k=3 restricted (rankE<=6, {count} swept) plus duals: the 5 catalog entries; full mode agrees"))
}

fn fixtures() -> Outcome {
    let mut n = 0;
    for k in 3..=6 {
        for f in Fixture::ALL {
            let path = format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), f.file_name(k));
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
            let m = Gf2Matrix::parse(&text).map_err(err)?;
            let ok = verify_representation(&m, &f.points(k).map_err(err)?).map_err(err)?;
            ensure(ok, || format!("{} does not represent its natural matroid", f.file_name(k)))?;
            n += 1;
        }
    }
    Ok(format!("{n} matrices (5 per k, k=3..6) verified"))
}

fn agrees(p: &Polymatroid) -> Result<bool, String> {
    let o = NaturalMatroidOracle::new(p).map_err(err)?;
    let witness = find_u24_minor(&o);
    let matrix = build_representation(&o.simplified()).map_err(err)?;
    let replay_ok = witness.as_ref().is_none_or(|w| w.replay(&o));
    Ok(replay_ok && witness.is_some() == matrix.is_none())
}

fn oracle_agreement() -> Outcome {
    let mut checked = 0;
    let mut disagreements = 0;
    for n in 1..=3 {
        for p in enumerate_all(3, n, &Filters::none(), DEFAULT_BUDGET).map_err(err)? {
            checked += 1;
            disagreements += usize::from(!agrees(&p)?);
        }
    }
    let enumerated = checked;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let p = sample_polymatroid(3, 4, &mut rng);
        checked += 1;
        disagreements += usize::from(!agrees(&p)?);
    }
    ensure(disagreements == 0, || format!("{disagreements} disagreements in {checked} instances"))?;
    Ok(format!("0 disagreements over {enumerated} enumerated (k=3, n<=3) + 1000 sampled (n=4)"))
}

fn decompressions() -> Outcome {
    let mut parts = Vec::new();
    for k in 3..=4 {
        let start = Instant::now();
        let r = verify_no_decompression_excluded(k, DEFAULT_BUDGET).map_err(err)?;
        ensure(start.elapsed() <= Duration::from_secs(3600), || format!("k={k}: {:.1?} exceeds 60 min", start.elapsed()))?;
        ensure(r.holds(), || format!("k={k}: an excluded decompression exists"))?;
        for b in &r.bases {
            ensure(b.decompressions > 0, || format!("k={k} {}: no decompressions enumerated", b.base))?;
            ensure(b.not_excluded == b.decompressions, || {
                format!("k={k} {}: {} of {} not certified not-excluded", b.base, b.decompressions - b.not_excluded, b.decompressions)
            })?;
        }
        parts.push(format!("k={k}: {} decompressions", r.total()));
    }
    Ok(format!("{}, every one certified not-excluded", parts.join(", ")))
}

fn property_violations(p: &Polymatroid, rng: &mut ChaCha8Rng) -> Result<Vec<String>, String> {
    let mut bad = Vec::new();
    let k = p.k();
    let d = p.dual();
    if d.dual() != *p {
        bad.push("dual involution".to_string());
    }
    if d.total_rank() + p.total_rank() != k * p.len() as u32 {
        bad.push("rank*(E) + rank(E) = k|E|".to_string());
    }
    let x = Subset(rng.gen::<u32>() & p.ground().0);
    for x in (0..p.len()).map(Subset::singleton).chain([x]) {
        let swap = p.delete(x).map_err(err)?.dual() == d.contract(x).map_err(err)?
            && p.contract(x).map_err(err)?.dual() == d.delete(x).map_err(err)?;
        if !swap {
            bad.push(format!("dual/minor swap at {}", p.subset_label(x)));
        }
    }
    for e in 0..p.len() {
        for l in 1..k {
            if compress(p, e, l).map_err(err)? != compress_closed_form(p, e, l).map_err(err)? {
                bad.push(format!("closed form at e={e} l={l}"));
            }
            if !dual_commutes(p, e, l).map_err(err)? {
                bad.push(format!("dual_commutes at e={e} l={l}"));
            }
        }
    }
    Ok(bad)
}

fn skew_bound(p: &Polymatroid) -> bool {
    let k = p.k();
    let l = (0..p.len()).filter(|&i| p.element_rank(i) == k - 1).count() as u32;
    p.total_rank() >= l * (k - 1)
}

fn properties() -> Outcome {
    let mut pool = Vec::new();
    for k in 1..=4 {
        for n in 1..=3 {
            pool.extend(enumerate_all(k, n, &Filters::none(), DEFAULT_BUDGET).map_err(err)?);
        }
    }
    let enumerated = pool.len();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    while pool.len() < 10_000 {
        let k = rng.gen_range(1..=4);
        pool.push(sample_polymatroid(k, 4, &mut rng));
    }
    for k in 3..=4 {
        pool.extend(catalog::list_for_k(k).map_err(err)?.into_iter().map(|e| e.polymatroid));
    }
    let mut violations = Vec::new();
    let mut excluded_checked = 0;
    for p in &pool {
        for v in property_violations(p, &mut rng)? {
            violations.push(format!("{v} on {:?}", p.ranks()));
        }
        if p.k() >= 3 && p.len() >= 3 && quick_verdict(p).map_err(err)? == Verdict::ExcludedMinor {
            excluded_checked += 1;
            if !skew_bound(p) {
                violations.push(format!("rank(E) >= l(k-1) on {:?}", p.ranks()));
            }
        }
    }
    ensure(violations.is_empty(), || format!("{} violations, first: {}", violations.len(), violations[0]))?;
    ensure(excluded_checked > 0, || "no excluded minor with |E| >= 3 reached the skew bound check".to_string())?;
    Ok(format!(
        "0 violations over {} polymatroids ({enumerated} enumerated, k<=4, |E|<=4); skew bound on {excluded_checked} excluded minors",
        pool.len()
    ))
}

fn singletons() -> Outcome {
    for k in 5..=8 {
        for m in 0..=k {
            let p = Polymatroid::singleton("e", k, m).map_err(err)?;
            let expected = m <= 1 || m + 1 >= k;
            ensure(in_class(&p).map_err(err)? == expected, || format!("k={k} m={m}: in_class != {expected}"))?;
            if !expected {
                let v = is_excluded_minor(&p).map_err(err)?.verdict;
                ensure(v == Verdict::ExcludedMinor, || format!("k={k} m={m}: {v}"))?;
            }
        }
    }
    Ok("k=5..8: in class iff m in {0,1,k-1,k}; 2<=m<=k-2 certify excluded-minor".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "catalog counts", 1, catalog_counts),
        (2, "catalog certification k=3,4", 60, certify_catalog),
        (3, "two-element classification", 90, two_elements),
        (4, "three-element emptiness", 1200, three_elements),
        (5, "four-element classification k=3", 1800, four_elements),
        (6, "representation fixtures", 10, fixtures),
        (7, "oracle agreement", 600, oracle_agreement),
        (8, "no excluded decompressions", 7200, decompressions),
        (9, "algebraic properties", 600, properties),
        (10, "singleton table", 30, singletons),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let mut result = run();
        let elapsed = start.elapsed();
        if result.is_ok() && elapsed > Duration::from_secs(limit) {
            result = Err(format!("took {elapsed:.2?}, limit {limit}s"));
        }
        match result {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} [{elapsed:.2?} <= {limit}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {detail} [{elapsed:.2?}]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
