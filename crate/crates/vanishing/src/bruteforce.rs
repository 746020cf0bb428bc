//! Independent oracle: explicit enumeration of Sym(n) and Alt(n).
//!
//! Permutations are arrays of images. Conjugacy classes are found by orbit
//! expansion under conjugation, centralizers by direct commutation counts.
//! Nothing here touches the centralizer-order formula, the splitting
//! criterion, or cycle-type arithmetic from [`crate::symchar`] — that code
//! is what this module exists to check.

use crate::partitions::{partitions_of, Partition};
use crate::symchar::{alt_classes, sym_class};
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

/// Enumeration is capped where the full element list stays comfortable.
pub const MAX_BRUTE_N: u32 = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BruteForceError {
    #[error("n = {0} outside the supported range 1..={MAX_BRUTE_N}")]
    OutOfBounds(u32),
}

/// A permutation of 0..n as its image array.
pub type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // apply b first, then a
    b.iter().map(|&i| a[i as usize]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn is_even(p: &Perm) -> bool {
    // parity by explicit cycle traversal
    let n = p.len();
    let mut seen = vec![false; n];
    let mut transpositions = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions.is_multiple_of(2)
}

/// Order by repeated composition, no lcm shortcut.
fn perm_order(p: &Perm) -> u64 {
    let id = identity(p.len());
    let mut acc = p.clone();
    let mut order = 1u64;
    while acc != id {
        acc = compose(&acc, p);
        order += 1;
    }
    order
}

fn cycle_type(p: &Perm) -> Partition {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted positive parts")
}

fn all_permutations(n: usize) -> Vec<Perm> {
    fn extend(n: usize, current: &mut Perm, used: &mut [bool], out: &mut Vec<Perm>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v as u8);
                extend(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// One enumerated conjugacy class.
#[derive(Debug, Clone)]
pub struct SnapshotClass {
    pub representative: Perm,
    pub size: u64,
    pub element_order: u64,
    pub centralizer_order: u64,
    pub cycle_type: Partition,
}

/// Exact class data of Sym(n) or Alt(n) obtained by enumeration.
#[derive(Debug, Clone)]
pub struct PermGroupSnapshot {
    pub n: u32,
    pub alternating: bool,
    pub group_order: u64,
    pub classes: Vec<SnapshotClass>,
}

fn cycle_perm(n: usize, points: &[u8]) -> Perm {
    let mut p = identity(n);
    for w in 0..points.len() {
        p[points[w] as usize] = points[(w + 1) % points.len()];
    }
    p
}

/// A generating set (conjugating by generators spans each class orbit).
fn generators(n: usize, alternating: bool) -> Vec<Perm> {
    if alternating {
        if n < 3 {
            return Vec::new();
        }
        let three = cycle_perm(n, &[0, 1, 2]);
        let long: Vec<u8> = if n % 2 == 1 {
            (0..n as u8).collect()
        } else {
            (1..n as u8).collect()
        };
        vec![three, cycle_perm(n, &long)]
    } else {
        if n < 2 {
            return Vec::new();
        }
        let full: Vec<u8> = (0..n as u8).collect();
        vec![cycle_perm(n, &[0, 1]), cycle_perm(n, &full)]
    }
}

/// Enumerate the group and split it into conjugacy classes by expanding
/// conjugation orbits from unclassified elements.
pub fn enumerate_classes(n: u32, alternating: bool) -> Result<PermGroupSnapshot, BruteForceError> {
    if n == 0 || n > MAX_BRUTE_N {
        return Err(BruteForceError::OutOfBounds(n));
    }
    let elements: Vec<Perm> = all_permutations(n as usize)
        .into_iter()
        .filter(|p| !alternating || is_even(p))
        .collect();
    let group_order = elements.len() as u64;
    let gens = generators(n as usize, alternating);
    let gen_pairs: Vec<(Perm, Perm)> = gens.iter().map(|g| (g.clone(), inverse(g))).collect();

    let mut classified: HashSet<Perm> = HashSet::with_capacity(elements.len());
    let mut classes = Vec::new();
    for x in &elements {
        if classified.contains(x) {
            continue;
        }
        // orbit of x under conjugation by the group generators
        let mut orbit: HashSet<Perm> = HashSet::new();
        let mut frontier = vec![x.clone()];
        orbit.insert(x.clone());
        while let Some(y) = frontier.pop() {
            for (g, ginv) in &gen_pairs {
                let z = compose(g, &compose(&y, ginv));
                if orbit.insert(z.clone()) {
                    frontier.push(z);
                }
            }
        }
        let centralizer_order = elements
            .iter()
            .filter(|g| compose(g, x) == compose(x, g))
            .count() as u64;
        let size = orbit.len() as u64;
        classified.extend(orbit);
        classes.push(SnapshotClass {
            representative: x.clone(),
            size,
            element_order: perm_order(x),
            centralizer_order,
            cycle_type: cycle_type(x),
        });
    }
    Ok(PermGroupSnapshot { n, alternating, group_order, classes })
}

/// Differences between the enumerated snapshot and the formula-based class
/// data; empty means the two agree exactly.
#[derive(Debug, Clone, Default)]
pub struct DiffReport {
    pub differences: Vec<String>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.differences.is_empty()
    }
}

/// Compare enumerated class data against the centralizer-formula path:
/// sizes, splitting, element orders.
pub fn compare_with_formula(n: u32, alternating: bool) -> Result<DiffReport, BruteForceError> {
    let snapshot = enumerate_classes(n, alternating)?;
    let mut diffs = Vec::new();

    // orbit-counting self-check
    let total: u64 = snapshot.classes.iter().map(|c| c.size).sum();
    if total != snapshot.group_order {
        diffs.push(format!(
            "class sizes sum to {total}, group order is {}",
            snapshot.group_order
        ));
    }
    for c in &snapshot.classes {
        if c.size * c.centralizer_order != snapshot.group_order {
            diffs.push(format!(
                "class of {}: size {} x centralizer {} != |G| {}",
                c.cycle_type, c.size, c.centralizer_order, snapshot.group_order
            ));
        }
    }

    // group enumerated classes by cycle type
    let mut by_type: BTreeMap<Partition, Vec<&SnapshotClass>> = BTreeMap::new();
    for c in &snapshot.classes {
        by_type.entry(c.cycle_type.clone()).or_default().push(c);
    }

    if alternating {
        let mut expected: BTreeMap<Partition, Vec<(u64, u64)>> = BTreeMap::new();
        for c in alt_classes(n) {
            let size = u64::try_from(&c.size).expect("desk scale");
            expected
                .entry(c.cycle_type.clone())
                .or_default()
                .push((size, c.element_order));
        }
        for (ct, exp) in &expected {
            match by_type.get(ct) {
                None => diffs.push(format!("cycle type {ct}: predicted but not enumerated")),
                Some(found) => {
                    let mut exp_sizes: Vec<u64> = exp.iter().map(|&(s, _)| s).collect();
                    exp_sizes.sort_unstable();
                    let mut got_sizes: Vec<u64> = found.iter().map(|c| c.size).collect();
                    got_sizes.sort_unstable();
                    if exp_sizes != got_sizes {
                        diffs.push(format!(
                            "cycle type {ct}: formula sizes {exp_sizes:?}, enumerated {got_sizes:?}"
                        ));
                    }
                    let exp_order = exp[0].1;
                    for f in found {
                        if f.element_order != exp_order {
                            diffs.push(format!(
                                "cycle type {ct}: lcm order {exp_order}, enumerated {}",
                                f.element_order
                            ));
                        }
                    }
                    // splitting: two classes iff the criterion says so
                    let splits = exp.len() == 2;
                    if (found.len() == 2) != splits {
                        diffs.push(format!(
                            "cycle type {ct}: split criterion says {}, enumeration found {} classes",
                            splits,
                            found.len()
                        ));
                    }
                }
            }
        }
        for ct in by_type.keys() {
            if !expected.contains_key(ct) {
                diffs.push(format!("cycle type {ct}: enumerated but not predicted"));
            }
        }
    } else {
        for ct in partitions_of(n) {
            let formula = sym_class(&ct);
            let size = u64::try_from(&formula.size).expect("desk scale");
            match by_type.get(&ct) {
                None => diffs.push(format!("cycle type {ct}: predicted but not enumerated")),
                Some(found) if found.len() == 1 => {
                    let f = found[0];
                    if f.size != size {
                        diffs.push(format!(
                            "cycle type {ct}: formula size {size}, enumerated {}",
                            f.size
                        ));
                    }
                    if f.element_order != formula.element_order {
                        diffs.push(format!(
                            "cycle type {ct}: lcm order {}, enumerated {}",
                            formula.element_order, f.element_order
                        ));
                    }
                }
                Some(found) => diffs.push(format!(
                    "cycle type {ct}: {} enumerated classes in Sym(n)",
                    found.len()
                )),
            }
        }
    }

    Ok(DiffReport { differences: diffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sym4_class_sizes() {
        let snap = enumerate_classes(4, false).unwrap();
        let mut sizes: Vec<u64> = snap.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(snap.group_order, 24);
    }

    #[test]
    fn alt5_class_sizes() {
        let snap = enumerate_classes(5, true).unwrap();
        let mut sizes: Vec<u64> = snap.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        assert_eq!(snap.group_order, 60);
    }

    #[test]
    fn trivial_groups() {
        let snap = enumerate_classes(1, false).unwrap();
        assert_eq!(snap.classes.len(), 1);
        let snap = enumerate_classes(2, true).unwrap();
        assert_eq!(snap.group_order, 1);
        assert_eq!(snap.classes.len(), 1);
    }

    #[test]
    fn bounds_enforced() {
        assert!(matches!(
            enumerate_classes(0, false),
            Err(BruteForceError::OutOfBounds(0))
        ));
        assert!(matches!(
            enumerate_classes(10, false),
            Err(BruteForceError::OutOfBounds(10))
        ));
    }

    #[test]
    fn formula_matches_enumeration_small() {
        for n in 1..=6u32 {
            for alternating in [false, true] {
                let diff = compare_with_formula(n, alternating).unwrap();
                assert!(
                    diff.is_empty(),
                    "n={n} alt={alternating}: {:?}",
                    diff.differences
                );
            }
        }
    }

    #[test]
    fn alt7_split_seven_cycles() {
        let snap = enumerate_classes(7, true).unwrap();
        let sevens: Vec<&SnapshotClass> = snap
            .classes
            .iter()
            .filter(|c| c.cycle_type.parts() == [7])
            .collect();
        assert_eq!(sevens.len(), 2);
        assert!(sevens.iter().all(|c| c.size == 360));
        let diff = compare_with_formula(7, true).unwrap();
        assert!(diff.is_empty(), "{:?}", diff.differences);
    }
}
