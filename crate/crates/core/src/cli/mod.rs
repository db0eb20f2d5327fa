//! The `pml` command line.
//!
//! Exit codes: 0 success or true predicate, 1 false predicate, 2 parse or
//! validation error, 3 usage error, 4 search budget exceeded.

pub mod document;

use std::io::{Read, Write};

use clap::{Parser, Subcommand};

use crate::binary::is_binary;
use crate::catalog;
use crate::certify::{self, Filters, SweepMode, Verdict};
use crate::compress::CompressionRequest;
use crate::error::Error;
use crate::natural::{CloneSet, NaturalMatroidOracle};
use crate::polymatroid::{Polymatroid, Subset};

pub use document::{parse, serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "pml", version, about = "k-polymatroids, k-natural matroids and excluded-minor certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Polymatroid document, or `-` for standard input.
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<String>,
    #[arg(long, global = true)]
    pub k: Option<u32>,
    /// Ground set size for `classify`.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Element label; comma-separated labels for `delete` and `contract`.
    #[arg(long, global = true, value_name = "LABEL")]
    pub element: Option<String>,
    #[arg(long, global = true)]
    pub l: Option<u32>,
    /// Catalog entry name.
    #[arg(long, global = true)]
    pub name: Option<String>,
    /// Comma-separated clone labels such as `e#1,f#2`, or `-`.
    #[arg(long, global = true)]
    pub clones: Option<String>,
    /// Line-format output.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Search node cap.
    #[arg(long, global = true, env = "PML_BUDGET")]
    pub budget: Option<u64>,
    /// Sweep only `ρ(E) <= ⌊nk/2⌋` and complete by duality.
    #[arg(long, global = true)]
    pub restricted: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Check the polymatroid axioms.
    Validate,
    /// Print the rank table by level.
    Show,
    /// k-dual.
    Dual,
    Delete,
    Contract,
    /// Delete loops and all but one point of each parallel class.
    Simplify,
    /// l-compression by an element.
    Compress,
    /// Rank of a clone set in the k-natural matroid.
    NaturalRank,
    /// Whether the k-natural matroid is binary.
    IsBinary,
    /// Excluded-minor certificate.
    Certify,
    /// List the excluded minors for a given k, or print one.
    Catalog,
    /// Search all polymatroids on n elements for excluded minors.
    Classify,
    /// Check that no decompression of the base excluded minors is one.
    DecompressCheck,
}

enum Failure {
    Lib(Error),
    Usage(String),
    /// Axiom violations, already formatted with labels.
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::Parse { .. }
        | Error::NotPolymatroid(_)
        | Error::TableLength { .. }
        | Error::MissingSubset(_)
        | Error::DuplicateLabel(_)
        | Error::InvalidLabel(_)
        | Error::NotASubset
        | Error::OracleDisagreement => EXIT_INVALID,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, stdin, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invalid(msg)) => {
            let _ = write!(err, "{msg}");
            EXIT_INVALID
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn require<T: Clone>(value: &Option<T>, flag: &str) -> std::result::Result<T, Failure> {
    value.clone().ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn load(cli: &Cli, stdin: &mut dyn Read) -> std::result::Result<Polymatroid, Failure> {
    let path = require(&cli.input, "input")?;
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
    };
    Ok(document::parse(&text)?)
}

fn load_valid(cli: &Cli, stdin: &mut dyn Read) -> std::result::Result<Polymatroid, Failure> {
    let p = load(cli, stdin)?;
    let report = p.validate();
    if report.is_valid() {
        return Ok(p);
    }
    let mut msg = format!("error: not a {}-polymatroid: {} violation(s)\n", p.k(), report.violations.len());
    for v in &report.violations {
        let w: Vec<String> = v.witnesses.iter().map(|&s| p.subset_label(s)).collect();
        msg.push_str(&format!("  {} at {}\n", v.axiom, w.join(" ")));
    }
    Err(Failure::Invalid(msg))
}

fn labels_subset(p: &Polymatroid, list: &str) -> std::result::Result<Subset, Failure> {
    if list == "-" {
        return Ok(Subset::EMPTY);
    }
    let labels: Vec<&str> = list.split(',').collect();
    Ok(p.subset_of(&labels)?)
}

fn budget(cli: &Cli) -> u64 {
    cli.budget.unwrap_or(certify::DEFAULT_BUDGET)
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Validate => {
            let p = load_valid(cli, stdin)?;
            if cli.machine {
                writeln!(out, "valid k={} n={} rankE={}", p.k(), p.len(), p.total_rank())?;
            } else {
                writeln!(out, "valid {}-polymatroid on {} elements", p.k(), p.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Show => {
            let p = load_valid(cli, stdin)?;
            show(&p, out)?;
            Ok(EXIT_OK)
        }
        Command::Dual => emit(out, &load_valid(cli, stdin)?.dual()),
        Command::Delete | Command::Contract => {
            let p = load_valid(cli, stdin)?;
            let x = labels_subset(&p, &require(&cli.element, "element")?)?;
            let q = if cli.command == Command::Delete { p.delete(x)? } else { p.contract(x)? };
            emit(out, &q)
        }
        Command::Simplify => emit(out, &load_valid(cli, stdin)?.simplify()),
        Command::Compress => {
            let p = load_valid(cli, stdin)?;
            let e = require(&cli.element, "element")?;
            let l = require(&cli.l, "l")?;
            emit(out, &CompressionRequest::new(&p, &e, l)?.run()?)
        }
        Command::NaturalRank => {
            let p = load_valid(cli, stdin)?;
            let clones = require(&cli.clones, "clones")?;
            let o = NaturalMatroidOracle::new(&p)?;
            let mut x = CloneSet(0);
            if clones != "-" {
                for label in clones.split(',') {
                    x = x.union(CloneSet::single(o.parse_clone(label)?));
                }
            }
            writeln!(out, "{}", o.rank(x)?)?;
            Ok(EXIT_OK)
        }
        Command::IsBinary => {
            let p = load_valid(cli, stdin)?;
            let o = NaturalMatroidOracle::new(&p)?;
            let verdict = is_binary(&o)?;
            match (&verdict.witness, &verdict.representation) {
                (None, Some(m)) => {
                    if cli.machine {
                        writeln!(out, "binary true")?;
                    } else {
                        writeln!(out, "binary: GF(2) representation of the simplified {}-natural matroid", p.k())?;
                        write!(out, "{}", m.to_text())?;
                    }
                    Ok(EXIT_OK)
                }
                (Some(w), _) => {
                    if cli.machine {
                        writeln!(out, "binary false {}", w.display(&o))?;
                    } else {
                        writeln!(out, "not binary: U(2,4) minor at {}", w.display(&o))?;
                    }
                    Ok(EXIT_FALSE)
                }
                (None, None) => Err(Error::OracleDisagreement.into()),
            }
        }
        Command::Certify => {
            let p = load_valid(cli, stdin)?;
            certify_one(&p, cli.machine, out)
        }
        Command::Catalog => {
            let k = require(&cli.k, "k")?;
            if let Some(name) = &cli.name {
                return emit(out, &catalog::build(name, k)?.polymatroid);
            }
            for entry in catalog::list_for_k(k)? {
                let t = entry.polymatroid.type_of().map(|t| t.to_string()).unwrap_or_else(|_| "-".into());
                if cli.machine {
                    writeln!(
                        out,
                        "entry name={} hash={} n={} rankE={} type={} dual={}",
                        entry.name,
                        entry.polymatroid.canonical_key().hash_hex(),
                        entry.polymatroid.len(),
                        entry.total_rank,
                        t,
                        entry.dual_name
                    )?;
                } else {
                    writeln!(
                        out,
                        "{:<22} |E|={} rankE={:<3} type={:<6} dual {}",
                        entry.name,
                        entry.polymatroid.len(),
                        entry.total_rank,
                        t,
                        entry.dual_name
                    )?;
                }
            }
            if !cli.machine {
                writeln!(out, "{} entries for k = {k}", catalog::expected_count(k)?)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify => {
            let k = require(&cli.k, "k")?;
            let n = require(&cli.n, "n")?;
            if k == 0 {
                return Err(Error::ZeroK.into());
            }
            let mode = if cli.restricted { SweepMode::Restricted } else { SweepMode::Full };
            let report = certify::classify(k, n, &Filters::default_for(k, n), mode, budget(cli))?;
            if cli.machine {
                for line in report.machine_lines() {
                    writeln!(out, "{line}")?;
                }
            } else {
                writeln!(out, "{report}")?;
                if k >= 3 {
                    let missing = report.missing_catalog_entries()?;
                    if !missing.is_empty() {
                        writeln!(out, "catalog entries not found: {}", missing.join(", "))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::DecompressCheck => {
            let k = require(&cli.k, "k")?;
            let report = certify::verify_no_decompression_excluded(k, budget(cli))?;
            if cli.machine {
                writeln!(out, "decompress-check k={} decompressions={} holds={}", k, report.total(), report.holds())?;
            } else {
                writeln!(out, "{report}")?;
            }
            Ok(if report.holds() { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

fn emit(out: &mut dyn Write, p: &Polymatroid) -> Outcome {
    write!(out, "{}", document::serialize(p))?;
    Ok(EXIT_OK)
}

fn show(p: &Polymatroid, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "k = {}, ground = {{{}}}", p.k(), p.labels().join(", "))?;
    let t = p.type_of().map(|t| format!("({t})")).unwrap_or_else(|_| "undefined".into());
    writeln!(
        out,
        "rank(E) = {}, {}, {}, type {}",
        p.total_rank(),
        if p.is_simple() { "simple" } else { "not simple" },
        if p.is_connected() { "connected" } else { "not connected" },
        t
    )?;
    let order = document::serialization_order(p.len());
    for size in 1..=p.len() {
        let cells: Vec<String> = order
            .iter()
            .filter(|s| s.len() == size)
            .map(|&s| format!("{}:{}", p.subset_label(s), p.rank(s)))
            .collect();
        writeln!(out, "  |A| = {size}: {}", cells.join("  "))?;
    }
    Ok(())
}

fn certify_one(p: &Polymatroid, machine: bool, out: &mut dyn Write) -> Outcome {
    let cert = certify::is_excluded_minor(p)?;
    if machine {
        writeln!(out, "{}", certify::result_line(p, cert.verdict))?;
    } else {
        writeln!(out, "verdict: {}", cert.verdict)?;
        match &cert.witness {
            Some(w) => {
                let o = NaturalMatroidOracle::new(p)?;
                writeln!(out, "U(2,4) minor: {}", w.display(&o))?;
            }
            None => writeln!(out, "k-natural matroid is binary")?,
        }
        for c in &cert.children {
            let word = |b: bool| if b { "in class" } else { "not in class" };
            writeln!(
                out,
                "  {}: deletion {}, contraction {}",
                p.label(c.element),
                word(c.deletion_in_class),
                word(c.contraction_in_class)
            )?;
        }
    }
    Ok(if cert.verdict == Verdict::ExcludedMinor { EXIT_OK } else { EXIT_FALSE })
}
