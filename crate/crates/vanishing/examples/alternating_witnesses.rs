//! Sweep the alternating witness lemma: for each n in the range, build the
//! l-cycle whose Alt(n) class size is divisible by 4 and by every prime up
//! to n except l, and for each prime p <= n a prime-power p'-element whose
//! class size p divides.
//!
//!     cargo run --example alternating_witnesses [from] [to]

use vanishing::lemmaverify;

fn main() {
    let mut args = std::env::args().skip(1);
    let from: u64 = args.next().map(|s| s.parse().unwrap()).unwrap_or(7);
    let to: u64 = args.next().map(|s| s.parse().unwrap()).unwrap_or(30);
    let sweep = lemmaverify::alt_sweep(from, to).expect("7 <= from <= to");

    for w in &sweep.part1 {
        println!(
            "n={:>2}: l={:>2} {}-cycle type {:<14} |x^Alt| = {} = {}{}",
            w.n,
            w.l,
            w.l,
            w.cycle_type.to_string(),
            w.alt_size,
            w.alt_factors,
            if w.splits { "  (splits)" } else { "" }
        );
    }
    for w in sweep.part2.iter().filter(|w| !w.reused_part1) {
        let (q, k) = w.q_and_k.expect("constructed witness");
        println!(
            "n={:>2}, p={:>2}: {k} cycles of length {q}, type {:<14} |x^Alt| = {} = {}",
            w.n,
            w.p,
            w.cycle_type.to_string(),
            w.alt_size,
            w.alt_factors
        );
    }
    println!(
        "{}..{}: part 1 x{}, part 2 x{}, all pass: {}",
        from,
        to,
        sweep.part1.len(),
        sweep.part2.len(),
        sweep.all_pass()
    );
    assert!(sweep.all_pass());
    assert!(sweep.secondary_failures.is_empty());
}
