//! Load a character table, validate it, and report its vanishing classes
//! together with all four criterion verdicts.
//!
//!     cargo run --example analyze_table [path/to/table.json]
//!
//! Without an argument the shipped Alt(5) fixture is analyzed.

use vanishing::criteria;
use vanishing::tables;

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        format!("{}/fixtures/alt5.json", env!("CARGO_MANIFEST_DIR"))
    });
    let doc = std::fs::read_to_string(&path).expect("readable table");
    let table = tables::parse_table(&doc).expect("valid fixture document");

    println!("== {} (order {}) ==", table.name, table.order);
    let validation = tables::validate_table(&table);
    print!("{validation}");

    let report = tables::vanishing_report(&table);
    println!("vanishing classes:");
    for c in report.vanishing_classes() {
        println!(
            "  {}: order {}, size {} = {}, witnesses {}",
            c.class_name,
            c.element_order,
            c.size,
            c.size_factors,
            c.witnesses.join(",")
        );
    }

    println!("criterion verdicts:");
    for p in table.order_primes() {
        match criteria::check_theorem1(&table, p) {
            Ok(v) => println!("  {v}"),
            Err(e) => println!("  T1 (p = {p}): not applicable ({e})"),
        }
        println!("  {}", criteria::check_theorem3(&table, p).expect("p prime"));
    }
    println!("  {}", criteria::check_theorem2(&table));
    println!("  {}", criteria::check_corollary(&table));
}
