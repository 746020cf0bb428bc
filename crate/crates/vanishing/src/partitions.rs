//! Integer partitions, cycle types, hooks, and rim-hook surgery.
//!
//! A [`Partition`] plays two roles: it labels an irreducible character of
//! `Sym(n)` and, read as a cycle type, a conjugacy class. Rim-hook removal
//! is implemented on beta-numbers (first-column hook lengths), which makes
//! the Murnaghan–Nakayama recursion a couple of array edits per step.

use crate::exactmath::{self, Factorization};
use num_integer::Integer;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
}

/// Parity of a permutation with the given cycle type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A weakly decreasing list of positive integers; the empty partition is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::NotDecreasing(parts))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition (n), or the empty partition when n = 0.
    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Multiplicity of each part value, as (part, multiplicity) with parts decreasing.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook length of every cell, row-major. One entry per cell of the diagram.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as u64 - 1 - j as u64;
                let leg = conj.parts[j] as u64 - 1 - i as u64;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Product of all hook lengths, exact.
    pub fn hook_product(&self) -> exactmath::Natural {
        let mut acc = exactmath::Natural::from(1u32);
        for h in self.hook_lengths() {
            acc *= h;
        }
        acc
    }

    /// Degree of the Sym(n) irreducible labelled by this partition:
    /// n! divided by the product of the hook lengths.
    pub fn hook_degree(&self) -> exactmath::Natural {
        let fac = exactmath::factorial(self.weight() as u64);
        let hooks = self.hook_product();
        let (q, r) = fac.div_rem(&hooks);
        debug_assert!(num_traits::Zero::is_zero(&r), "hook product divides n!");
        q
    }

    fn beta_numbers(&self) -> Vec<u64> {
        let r = self.parts.len();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as u64 + (r - 1 - i) as u64)
            .collect()
    }

    fn from_beta(mut beta: Vec<u64>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let r = beta.len();
        let parts = beta
            .into_iter()
            .enumerate()
            .filter_map(|(i, b)| {
                let p = b - (r - 1 - i) as u64;
                (p > 0).then_some(p as u32)
            })
            .collect();
        Partition { parts }
    }

    /// Remove the rim hook of the given length whose topmost cell lies in
    /// `row`. Returns the smaller partition and the height (rows spanned
    /// minus one), or `None` when no such rim hook exists.
    pub fn remove_rim_hook(&self, row: usize, length: u32) -> Option<(Partition, u32)> {
        if row >= self.parts.len() || length == 0 {
            return None;
        }
        let beta = self.beta_numbers();
        let b = beta[row];
        let target = b.checked_sub(length as u64)?;
        if beta.contains(&target) {
            return None;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count() as u32;
        let mut next = beta;
        next[row] = target;
        Some((Partition::from_beta(next), height))
    }

    /// All ways to remove a rim hook of the given length, one per starting row.
    pub fn removable_rim_hooks(&self, length: u32) -> Vec<(Partition, u32)> {
        (0..self.parts.len())
            .filter_map(|row| self.remove_rim_hook(row, length))
            .collect()
    }

    /// Order of a permutation with this cycle type: lcm of the parts.
    pub fn element_order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    /// Parity of a permutation with this cycle type.
    pub fn parity(&self) -> Parity {
        let transpositions: u32 = self.parts.iter().map(|&p| p - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `Some(p)` when the element order is a power of the single prime p.
    pub fn prime_power_order(&self) -> Option<u64> {
        let order = self.element_order();
        if order == 1 {
            return None;
        }
        let f = Factorization::factorize(&order.into()).expect("order >= 1");
        match f.entries() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }
}

/// Displays as a parenthesized part list, e.g. `(7,1,1)`; `()` when empty.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in descending lexicographic order.
/// The first entry is `(n)` and the last is `(1,...,1)`; `n = 0` yields `[()]`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    let top = remaining.min(max_part);
    for p in (1..=top).rev() {
        current.push(p);
        descend(remaining - p, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: count partitions with parts bounded by k via the
    /// classical two-variable recurrence.
    fn oracle_count(n: usize) -> u64 {
        let mut table = vec![vec![0u64; n + 1]; n + 1];
        for k in 0..=n {
            table[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                table[m][k] = table[m][k - 1] + if m >= k { table[m - k][k] } else { 0 };
            }
        }
        table[n][n]
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts_match_recurrence_oracle() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(10).len(), 42);
        for n in 0..=15u32 {
            assert_eq!(partitions_of(n).len() as u64, oracle_count(n as usize));
        }
    }

    #[test]
    fn enumeration_is_descending_lex_and_duplicate_free() {
        for n in 0..=12u32 {
            let all = partitions_of(n);
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts(), "order violated at n={n}");
            }
            assert!(all.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn conjugate_examples_and_involution() {
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        // transpose of (3,1) by drawing the diagram: columns have 2,1,1 cells
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=12u32 {
            for q in partitions_of(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    /// Independent hook oracle: count cells to the right and below directly.
    fn oracle_hooks(q: &Partition) -> Vec<u64> {
        let rows = q.parts();
        let mut out = Vec::new();
        for i in 0..rows.len() {
            for j in 0..rows[i] as usize {
                let arm = rows[i] as usize - j - 1;
                let leg = (i + 1..rows.len()).filter(|&k| rows[k] as usize > j).count();
                out.push((arm + leg + 1) as u64);
            }
        }
        out
    }

    #[test]
    fn hook_lengths_match_per_cell_oracle() {
        let mut h22 = p(&[2, 2]).hook_lengths();
        h22.sort_unstable();
        assert_eq!(h22, vec![1, 2, 2, 3]);
        let mut h221 = p(&[2, 2, 1]).hook_lengths();
        h221.sort_unstable();
        assert_eq!(h221, vec![1, 1, 2, 3, 4]);
        assert_eq!(p(&[1]).hook_lengths(), vec![1]);
        for n in 0..=12u32 {
            for q in partitions_of(n) {
                assert_eq!(q.hook_lengths(), oracle_hooks(&q));
                assert_eq!(q.hook_lengths().len(), q.weight() as usize);
            }
        }
    }

    #[test]
    fn regular_representation_identity() {
        // sum over partitions of n of degree^2 = n!
        for n in 1..=10u32 {
            let mut total = exactmath::Natural::from(0u32);
            for q in partitions_of(n) {
                let d = q.hook_degree();
                total += &d * &d;
            }
            assert_eq!(total, exactmath::factorial(n as u64));
        }
    }

    #[test]
    fn rim_hook_removal() {
        assert_eq!(
            p(&[1]).remove_rim_hook(0, 1),
            Some((Partition::empty(), 0))
        );
        // No rim hook of length 4 exists in the 2x2 square: the full square
        // is not a border strip. Both starting rows fail.
        assert_eq!(p(&[2, 2]).remove_rim_hook(0, 4), None);
        assert_eq!(p(&[2, 2]).remove_rim_hook(1, 4), None);
        assert_eq!(p(&[3]).remove_rim_hook(0, 5), None);
        // The two 2-hooks of (2,2): dropping the bottom row, or the right column.
        assert_eq!(p(&[2, 2]).remove_rim_hook(0, 2), Some((p(&[1, 1]), 1)));
        assert_eq!(p(&[2, 2]).remove_rim_hook(1, 2), Some((p(&[2]), 0)));
    }

    #[test]
    fn rim_hook_weight_bookkeeping() {
        for n in 1..=10u32 {
            for q in partitions_of(n) {
                for len in 1..=n {
                    for (smaller, height) in q.removable_rim_hooks(len) {
                        assert_eq!(smaller.weight() + len, n);
                        assert!((height as usize) < q.len());
                        // a rim hook of length L spans at most L rows
                        assert!(height < len);
                    }
                }
            }
        }
    }

    /// Rim-hook walk oracle: enumerate border strips of the diagram directly
    /// by walking the rim, with no beta-number bookkeeping.
    fn oracle_strip_count(q: &Partition, len: u32) -> usize {
        // Cells of the rim: (i, j) in the diagram with no cell at (i+1, j+1).
        let rows = q.parts();
        let in_diagram =
            |i: isize, j: isize| i >= 0 && (i as usize) < rows.len() && j >= 0 && (j as usize) < rows[i as usize] as usize;
        let mut count = 0;
        // A border strip is determined by its start and end rim cells; walk
        // the rim from each corner cell (end of a row) downward-leftward.
        for start_row in 0..rows.len() {
            let mut cells = 0u32;
            let mut i = start_row as isize;
            let mut j = rows[start_row] as isize - 1;
            if !in_diagram(i, j) {
                continue;
            }
            loop {
                cells += 1;
                if cells == len {
                    // valid strip iff removing it leaves a partition shape:
                    // the walk must have started at a row end (it did)
                    // and must stop where the cell below is absent.
                    if !in_diagram(i + 1, j) {
                        count += 1;
                    }
                }
                // step: prefer down if the cell below-left path continues the rim
                if in_diagram(i + 1, j) {
                    i += 1;
                } else if in_diagram(i, j - 1) {
                    j -= 1;
                } else {
                    break;
                }
            }
        }
        count
    }

    #[test]
    fn rim_hook_count_matches_walk_oracle() {
        for n in 1..=10u32 {
            for q in partitions_of(n) {
                for len in 1..=n {
                    assert_eq!(
                        q.removable_rim_hooks(len).len(),
                        oracle_strip_count(&q, len),
                        "mismatch for {q} len {len}"
                    );
                }
            }
        }
    }

    #[test]
    fn cycle_type_order_and_parity() {
        assert_eq!(p(&[7, 1, 1, 1]).element_order(), 7);
        assert_eq!(p(&[2, 2]).element_order(), 2);
        assert_eq!(p(&[6, 4]).element_order(), 12);
        assert_eq!(p(&[2, 2]).parity(), Parity::Even);
        assert_eq!(p(&[2, 1]).parity(), Parity::Odd);
        assert_eq!(p(&[5, 1, 1]).prime_power_order(), Some(5));
        assert_eq!(p(&[6, 1]).prime_power_order(), None);
        assert_eq!(p(&[4, 2, 1]).prime_power_order(), Some(2));
        assert_eq!(Partition::empty().prime_power_order(), None);
    }

    #[test]
    fn invalid_part_lists_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
    }
}
