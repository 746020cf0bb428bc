//! Command-line front end: analysis, generation, lemma verification, and
//! the brute-force oracle, with a stable exit-code contract.
//!
//! Exit codes: 0 success (a failed hypothesis is still a successful
//! analysis), 2 usage or parse error, 3 table invariant failure, 4 bound
//! exceeded, 5 failed verification or a nonempty oracle diff.

use crate::bruteforce;
use crate::criteria::{self, CriterionVerdict};
use crate::exactmath::Factorization;
use crate::lemmaverify::{self, GroupStatus};
use crate::symchar;
use crate::tables::{self, CharacterTable};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_TABLE: i32 = 3;
pub const EXIT_BOUND: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

#[derive(Parser)]
#[command(
    name = "vanish",
    about = "Vanishing conjugacy classes from exact character tables",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a character table, report vanishing classes and criteria
    Analyze {
        /// Path to a table in the fixture format
        table: PathBuf,
        /// Criterion to check: 1, 2, 3 or corollary
        #[arg(long)]
        theorem: Option<String>,
        /// Prime for theorems 1 and 3
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Generate the exact character table of Sym(n)
    Sym {
        #[arg(long)]
        n: u32,
        /// List the Alt(n) conjugacy classes instead of printing the table
        #[arg(long = "alt-classes")]
        alt_classes: bool,
        /// Write the table to a file
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Sweep the alternating witness lemma over a range of n
    VerifyAlt {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify the sporadic witness table against fixture tables
    VerifySporadic {
        /// Directory holding <group>.json fixtures
        #[arg(long)]
        fixtures: PathBuf,
        /// Check a single group
        #[arg(long)]
        group: Option<String>,
        /// Treat unverified groups as failures
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare class-size formulas with brute-force enumeration
    Oracle {
        #[arg(long)]
        n: u32,
        /// Use Alt(n) instead of Sym(n)
        #[arg(long)]
        alt: bool,
    },
}

/// Entry point used by the `vanish` binary; returns the process exit code.
pub fn run() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

/// Same as [`run`] but over explicit arguments, for tests.
pub fn run_from<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

fn execute(command: Command) -> i32 {
    match command {
        Command::Analyze { table, theorem, p, format } => analyze(&table, theorem.as_deref(), p, format),
        Command::Sym { n, alt_classes, emit } => sym(n, alt_classes, emit.as_deref()),
        Command::VerifyAlt { from, to, format } => verify_alt(from, to, format),
        Command::VerifySporadic { fixtures, group, strict, format } => {
            verify_sporadic(&fixtures, group.as_deref(), strict, format)
        }
        Command::Oracle { n, alt } => oracle(n, alt),
    }
}

fn factored(size: &crate::exactmath::Natural) -> String {
    match Factorization::factorize(size) {
        Ok(f) => format!("{size} = {f}"),
        Err(_) => size.to_string(),
    }
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn requested_verdicts(
    table: &CharacterTable,
    theorem: Option<&str>,
    p: Option<u64>,
) -> Result<Vec<CriterionVerdict>, String> {
    let Some(theorem) = theorem else {
        return Ok(Vec::new());
    };
    match theorem {
        "1" => {
            let p = p.ok_or("--theorem 1 needs --p")?;
            criteria::check_theorem1(table, p).map(|v| vec![v]).map_err(|e| e.to_string())
        }
        "2" => Ok(vec![criteria::check_theorem2(table)]),
        "3" => {
            let p = p.ok_or("--theorem 3 needs --p")?;
            criteria::check_theorem3(table, p).map(|v| vec![v]).map_err(|e| e.to_string())
        }
        "corollary" => Ok(vec![criteria::check_corollary(table)]),
        other => Err(format!("unknown theorem {other:?} (use 1, 2, 3 or corollary)")),
    }
}

fn analyze(path: &Path, theorem: Option<&str>, p: Option<u64>, format: Format) -> i32 {
    let contents = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let table = match tables::parse_table(&contents) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let validation = tables::validate_table(&table);
    if !validation.all_passed() {
        let failed = validation.first_failure().expect("some check failed");
        eprintln!("error: table invariant failure: {}: {}", failed.name, failed.detail);
        return EXIT_INVALID_TABLE;
    }
    let verdicts = match requested_verdicts(&table, theorem, p) {
        Ok(v) => v,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };
    let report = tables::vanishing_report(&table);

    match format {
        Format::Json => {
            let vanishing: Vec<Value> = report
                .classes
                .iter()
                .map(|c| {
                    json!({
                        "class": c.class_name,
                        "elementOrder": c.element_order,
                        "size": c.size.to_string(),
                        "factorization": c.size_factors.to_string(),
                        "vanishing": c.vanishing,
                        "witnesses": c.witnesses,
                        "primePower": c.prime_power,
                    })
                })
                .collect();
            let checks: Vec<Value> = validation
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            let out = json!({
                "table": table.name,
                "order": table.order.to_string(),
                "orderFactorization": Factorization::factorize(&table.order)
                    .map(|f| f.to_string())
                    .unwrap_or_default(),
                "fragment": validation.fragment,
                "validation": checks,
                "vanishing": vanishing,
                "verdicts": verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Text => {
            println!("table {} of order {}", table.name, factored(&table.order));
            if validation.fragment {
                println!("note: fragment table; whole-table identities skipped");
            }
            println!("validation:");
            print!("{validation}");
            println!("classes:");
            for c in &report.classes {
                let mark = if c.vanishing { "vanishing" } else { "non-vanishing" };
                let pp = match c.prime_power {
                    Some(p) => format!(", prime power of {p}"),
                    None => String::new(),
                };
                println!(
                    "  {}: order {}{}, size {}, {}{}",
                    c.class_name,
                    c.element_order,
                    pp,
                    factored(&c.size),
                    mark,
                    if c.witnesses.is_empty() {
                        String::new()
                    } else {
                        format!(" via {}", c.witnesses.join(","))
                    }
                );
            }
            for v in &verdicts {
                println!("{v}");
            }
        }
    }
    EXIT_OK
}

// ---------------------------------------------------------------------------
// sym
// ---------------------------------------------------------------------------

fn sym(n: u32, alt_classes: bool, emit: Option<&Path>) -> i32 {
    let table = match symchar::sym_character_table(n) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BOUND;
        }
    };
    let doc = tables::serialize_table(&table);
    if let Some(path) = emit {
        if let Err(e) = std::fs::write(path, &doc) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
        println!("wrote Sym({n}) table to {}", path.display());
    }
    if alt_classes {
        println!("Alt({n}) conjugacy classes:");
        for c in symchar::alt_classes(n) {
            let tag = match c.tag {
                symchar::AltTag::OneClass => "",
                symchar::AltTag::SplitPlus => " [split +]",
                symchar::AltTag::SplitMinus => " [split -]",
            };
            println!(
                "  type {}: size {}, order {}{}",
                c.cycle_type,
                factored(&c.size),
                c.element_order,
                tag
            );
        }
    } else if emit.is_none() {
        print!("{doc}");
    }
    EXIT_OK
}

// ---------------------------------------------------------------------------
// verify-alt
// ---------------------------------------------------------------------------

fn verify_alt(from: u64, to: u64, format: Format) -> i32 {
    let sweep = match lemmaverify::alt_sweep(from, to) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match format {
        Format::Json => {
            let part1: Vec<Value> = sweep
                .part1
                .iter()
                .map(|w| {
                    json!({
                        "n": w.n,
                        "l": w.l,
                        "cycleType": w.cycle_type.to_string(),
                        "symSize": w.sym_size.to_string(),
                        "splits": w.splits,
                        "altSize": w.alt_size.to_string(),
                        "altFactorization": w.alt_factors.to_string(),
                        "fourDivides": w.four_divides,
                        "missingPrimes": w.missing_primes,
                        "passed": w.passed(),
                    })
                })
                .collect();
            let part2: Vec<Value> = sweep
                .part2
                .iter()
                .map(|w| {
                    json!({
                        "n": w.n,
                        "p": w.p,
                        "reusedPart1": w.reused_part1,
                        "elementPrime": w.element_prime,
                        "cycleType": w.cycle_type.to_string(),
                        "altSize": w.alt_size.to_string(),
                        "altFactorization": w.alt_factors.to_string(),
                        "passed": w.passed(),
                    })
                })
                .collect();
            let out = json!({
                "from": sweep.from,
                "to": sweep.to,
                "allPass": sweep.all_pass(),
                "part1": part1,
                "part2": part2,
                "failures": sweep.failures,
                "secondaryReadingFailures": sweep.secondary_failures,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Text => {
            for w in &sweep.part1 {
                let split = if w.splits { ", splits" } else { "" };
                println!(
                    "n={}: part 1 {} l={} type {} |x^Alt| = {}{}",
                    w.n,
                    if w.passed() { "ok" } else { "FAIL" },
                    w.l,
                    w.cycle_type,
                    factored(&w.alt_size),
                    split
                );
            }
            for w in &sweep.part2 {
                if w.reused_part1 {
                    continue; // covered by the part-1 line
                }
                println!(
                    "n={}, p={}: part 2 {} via {} q-cycles {} |x^Alt| = {}",
                    w.n,
                    w.p,
                    if w.passed() { "ok" } else { "FAIL" },
                    w.q_and_k.map(|(_, k)| k).unwrap_or(0),
                    w.cycle_type,
                    factored(&w.alt_size)
                );
            }
            println!(
                "part 1: {} witnesses, part 2: {} witnesses ({} constructed)",
                sweep.part1.len(),
                sweep.part2.len(),
                sweep.part2.iter().filter(|w| !w.reused_part1).count()
            );
            if sweep.secondary_failures.is_empty() {
                println!("secondary reading (largest prime < n): all pass");
            } else {
                for f in &sweep.secondary_failures {
                    println!("secondary reading failure: {f}");
                }
            }
            if sweep.all_pass() {
                println!("verify-alt {from}..{to}: all witnesses verified");
            } else {
                for f in &sweep.failures {
                    println!("counterexample: {f}");
                }
            }
        }
    }
    if sweep.all_pass() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

// ---------------------------------------------------------------------------
// verify-sporadic
// ---------------------------------------------------------------------------

fn verify_sporadic(fixtures: &Path, group: Option<&str>, strict: bool, format: Format) -> i32 {
    let results = lemmaverify::sporadic_verify(fixtures, group);
    if results.is_empty() {
        eprintln!("error: no such group in the witness table");
        return EXIT_USAGE;
    }
    let any_fail = results.iter().any(|r| r.status == GroupStatus::Fail);
    let any_unverified = results.iter().any(|r| r.status == GroupStatus::Unverified);

    match format {
        Format::Json => {
            let groups: Vec<Value> = results
                .iter()
                .map(|r| {
                    let witnesses: Vec<Value> = r
                        .witnesses
                        .iter()
                        .map(|w| {
                            json!({
                                "part": w.part,
                                "character": w.character,
                                "class": w.class,
                                "size": w.class_size.to_string(),
                                "factorization": w.size_factors.to_string(),
                                "elementOrder": w.element_order,
                                "checks": w.checks.iter().map(|c| {
                                    json!({ "description": c.description, "passed": c.passed })
                                }).collect::<Vec<_>>(),
                                "notes": w.notes,
                            })
                        })
                        .collect();
                    json!({
                        "group": r.group,
                        "status": r.status.to_string(),
                        "reason": r.reason,
                        "witnesses": witnesses,
                    })
                })
                .collect();
            let out = json!({
                "groups": groups,
                "pass": results.iter().filter(|r| r.status == GroupStatus::Pass).count(),
                "fail": results.iter().filter(|r| r.status == GroupStatus::Fail).count(),
                "unverified": results.iter().filter(|r| r.status == GroupStatus::Unverified).count(),
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Text => {
            for r in &results {
                match r.status {
                    GroupStatus::Unverified => {
                        println!(
                            "{}: unverified ({})",
                            r.group,
                            r.reason.as_deref().unwrap_or("no fixture")
                        );
                    }
                    _ => {
                        println!("{}: {}", r.group, r.status);
                        for w in &r.witnesses {
                            println!(
                                "  part {}: {} on {} (order {}, size {})",
                                w.part,
                                w.character,
                                w.class,
                                w.element_order,
                                factored(&w.class_size)
                            );
                            for c in &w.checks {
                                println!(
                                    "    [{}] {}",
                                    if c.passed { "pass" } else { "FAIL" },
                                    c.description
                                );
                            }
                            for note in &w.notes {
                                println!("    note: {note}");
                            }
                        }
                    }
                }
            }
            let verified: usize = results
                .iter()
                .filter(|r| r.status == GroupStatus::Pass)
                .map(|r| r.witnesses.len())
                .sum();
            println!(
                "{} groups: {} pass, {} fail, {} unverified ({} witness pairs verified)",
                results.len(),
                results.iter().filter(|r| r.status == GroupStatus::Pass).count(),
                results.iter().filter(|r| r.status == GroupStatus::Fail).count(),
                results.iter().filter(|r| r.status == GroupStatus::Unverified).count(),
                verified
            );
            if any_unverified && !strict {
                eprintln!("warning: some groups unverified; run with --strict to fail on them");
            }
        }
    }

    if any_fail || (strict && any_unverified) {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    }
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

fn oracle(n: u32, alt: bool) -> i32 {
    let diff = match bruteforce::compare_with_formula(n, alt) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_BOUND;
        }
    };
    let name = if alt { format!("Alt({n})") } else { format!("Sym({n})") };
    if diff.is_empty() {
        println!("{name}: formulas match brute-force enumeration (0 diffs)");
        EXIT_OK
    } else {
        for d in &diff.differences {
            println!("{name}: {d}");
        }
        EXIT_VERIFY_FAILED
    }
}
