//! Verify the sporadic witness table against the shipped fixture fragments:
//! each pair's character value is exactly zero, the element order is a
//! prime power, and the class size carries the required divisibility.
//!
//!     cargo run --example sporadic_witnesses [fixtures-dir]

use std::path::PathBuf;
use vanishing::lemmaverify::{self, GroupStatus};

fn main() {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    let results = lemmaverify::sporadic_verify(&dir, None);
    for r in &results {
        match r.status {
            GroupStatus::Unverified => {
                println!("{:<4} unverified: {}", r.group, r.reason.as_deref().unwrap_or(""));
            }
            _ => {
                println!("{:<4} {}", r.group, r.status);
                for w in &r.witnesses {
                    println!(
                        "     part {}: {} vanishes on {} (order {}, size {} = {})",
                        w.part, w.character, w.class, w.element_order, w.class_size, w.size_factors
                    );
                    for c in w.checks.iter().filter(|c| !c.passed) {
                        println!("     FAILED: {}", c.description);
                    }
                    for note in &w.notes {
                        println!("     note: {note}");
                    }
                }
            }
        }
    }
    let pass = results.iter().filter(|r| r.status == GroupStatus::Pass).count();
    println!("{pass}/{} groups verified", results.len());
}
