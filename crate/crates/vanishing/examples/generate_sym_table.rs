//! Generate the exact character table of Sym(n) with the
//! Murnaghan–Nakayama recursion and print it in the fixture format.
//!
//!     cargo run --example generate_sym_table [n]

use vanishing::symchar;
use vanishing::tables;

fn main() {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a small integer"))
        .unwrap_or(5);
    let table = symchar::sym_character_table(n).expect("n within the configured bound");
    let validation = tables::validate_table(&table);
    assert!(validation.all_passed(), "generated table must validate:\n{validation}");
    print!("{}", tables::serialize_table(&table));
}
