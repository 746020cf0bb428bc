//! Check the class-size formulas against brute-force group enumeration:
//! conjugacy orbits, commutation-counted centralizers, explicit element
//! orders — no shared code with the formula path.
//!
//!     cargo run --example oracle_comparison [max_n]

use vanishing::bruteforce;

fn main() {
    let max: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().unwrap())
        .unwrap_or(7);
    for n in 1..=max {
        for alternating in [false, true] {
            let name = if alternating { format!("Alt({n})") } else { format!("Sym({n})") };
            let snap = bruteforce::enumerate_classes(n, alternating).expect("n in bounds");
            let diff = bruteforce::compare_with_formula(n, alternating).expect("n in bounds");
            println!(
                "{name}: order {}, {} classes, {}",
                snap.group_order,
                snap.classes.len(),
                if diff.is_empty() { "formulas agree".to_string() } else { format!("{:?}", diff.differences) }
            );
            assert!(diff.is_empty());
        }
    }
}
