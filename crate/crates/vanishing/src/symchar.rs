//! Characters and class data of `Sym(n)`, class data of `Alt(n)`.
//!
//! Character values are computed by the Murnaghan–Nakayama recursion with
//! rim hooks removed largest-part-first, memoized on the (label, remaining
//! cycle parts) pair. Class sizes come from the centralizer formula
//! `n! / prod(i^{m_i} m_i!)` with factorizations assembled prime-by-prime
//! via Legendre's formula, so n! is never factored directly.

use crate::exactmath::{self, Factorization, Natural};
use crate::partitions::{partitions_of, Parity, Partition};
use crate::tables::{CharacterRecord, CharacterTable, ClassRecord, KnownFlags};
use crate::Cyclotomic;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

/// Default cap for generated Sym(n) tables; override with `VANISH_MAX_N`.
pub const DEFAULT_MAX_N: u32 = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymCharError {
    #[error("cycle types have different weights: {0} vs {1}")]
    WeightMismatch(u32, u32),
    #[error("cycle type {0} is odd, not an element of Alt(n)")]
    OddParity(Partition),
    #[error("n = {0} exceeds the table bound {1} (set VANISH_MAX_N to raise it)")]
    BoundExceeded(u32, u32),
}

/// A conjugacy class of Sym(n), keyed by cycle type.
#[derive(Debug, Clone)]
pub struct SymClass {
    pub cycle_type: Partition,
    pub size: Natural,
    pub size_factors: Factorization,
    pub element_order: u64,
    pub parity: Parity,
}

/// How a Sym(n)-class meets Alt(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltTag {
    /// The Sym-class is a single Alt-class.
    OneClass,
    /// One half of a split pair.
    SplitPlus,
    SplitMinus,
}

/// One conjugacy class of Alt(n).
#[derive(Debug, Clone)]
pub struct AltClass {
    pub cycle_type: Partition,
    pub splits: bool,
    pub size: Natural,
    pub size_factors: Factorization,
    pub element_order: u64,
    pub tag: AltTag,
}

/// Factorization of the centralizer order prod(i^{m_i} m_i!) in Sym(n).
fn centralizer_factors(cycle_type: &Partition) -> Factorization {
    let mut acc = Factorization::one();
    for (part, mult) in cycle_type.multiplicities() {
        let part_f = Factorization::factorize(&Natural::from(part)).expect("part >= 1");
        for _ in 0..mult {
            acc = acc.mul(&part_f);
        }
        acc = acc.mul(&Factorization::of_factorial(mult as u64));
    }
    acc
}

/// Class size of the cycle type in Sym(n), with its factorization.
pub fn sym_class_size(cycle_type: &Partition) -> (Natural, Factorization) {
    let n = cycle_type.weight() as u64;
    let factors = Factorization::of_factorial(n)
        .checked_div(&centralizer_factors(cycle_type))
        .expect("centralizer order divides n!");
    (factors.value(), factors)
}

/// Full class record for a cycle type in Sym(n).
pub fn sym_class(cycle_type: &Partition) -> SymClass {
    let (size, size_factors) = sym_class_size(cycle_type);
    SymClass {
        element_order: cycle_type.element_order(),
        parity: cycle_type.parity(),
        cycle_type: cycle_type.clone(),
        size,
        size_factors,
    }
}

/// Splitting criterion: a Sym(n)-class splits into two Alt(n)-classes
/// exactly when all parts of the cycle type are distinct and odd.
/// Below n = 2 the groups coincide and nothing splits.
pub fn splits_in_alt(cycle_type: &Partition) -> bool {
    let parts = cycle_type.parts();
    cycle_type.weight() >= 2
        && parts.iter().all(|&p| p % 2 == 1)
        && parts.windows(2).all(|w| w[0] > w[1])
}

/// Alt(n)-class data for an even cycle type. For split classes this
/// describes one half; the other half has the same size and the other tag.
pub fn alt_class(cycle_type: &Partition) -> Result<AltClass, SymCharError> {
    if cycle_type.parity() == Parity::Odd {
        return Err(SymCharError::OddParity(cycle_type.clone()));
    }
    let (sym_size, sym_factors) = sym_class_size(cycle_type);
    let splits = splits_in_alt(cycle_type);
    let (size, size_factors, tag) = if splits {
        let halved = sym_factors
            .checked_div(&Factorization::prime_power(2, 1))
            .expect("split class size is even");
        (halved.value(), halved, AltTag::SplitPlus)
    } else {
        (sym_size, sym_factors, AltTag::OneClass)
    };
    Ok(AltClass {
        element_order: cycle_type.element_order(),
        cycle_type: cycle_type.clone(),
        splits,
        size,
        size_factors,
        tag,
    })
}

/// All classes of Alt(n): even cycle types, split pairs listed twice.
pub fn alt_classes(n: u32) -> Vec<AltClass> {
    let mut out = Vec::new();
    for ct in partitions_of(n) {
        if ct.parity() == Parity::Even {
            let c = alt_class(&ct).expect("even type");
            if c.splits {
                let mut minus = c.clone();
                minus.tag = AltTag::SplitMinus;
                out.push(c);
                out.push(minus);
            } else {
                out.push(c);
            }
        }
    }
    out
}

/// Memoized Murnaghan–Nakayama evaluator for one value of n.
#[derive(Default)]
pub struct MnEvaluator {
    memo: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exact value of the Sym(n) irreducible labelled `label` at the class
    /// with cycle type `class`. Both must be partitions of the same n.
    pub fn value(&mut self, label: &Partition, class: &Partition) -> Result<BigInt, SymCharError> {
        if label.weight() != class.weight() {
            return Err(SymCharError::WeightMismatch(label.weight(), class.weight()));
        }
        Ok(self.eval(label.parts().to_vec(), class.parts().to_vec()))
    }

    fn eval(&mut self, label: Vec<u32>, class: Vec<u32>) -> BigInt {
        if class.is_empty() {
            return BigInt::from(1);
        }
        let key = (label, class);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (label, class) = key.clone();
        // consume the largest remaining part
        let part = class[0];
        let rest: Vec<u32> = class[1..].to_vec();
        let shape = Partition::new(label.clone()).expect("memo keys are valid partitions");
        let mut total = BigInt::zero();
        for (smaller, height) in shape.removable_rim_hooks(part) {
            let sub = self.eval(smaller.parts().to_vec(), rest.clone());
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// One-off Murnaghan–Nakayama value; use [`MnEvaluator`] for whole tables.
pub fn mn_value(label: &Partition, class: &Partition) -> Result<BigInt, SymCharError> {
    MnEvaluator::new().value(label, class)
}

fn configured_max_n() -> u32 {
    std::env::var("VANISH_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// Group-theoretic structure flags for Sym(n), supplied as known metadata.
fn sym_known_flags(n: u32) -> KnownFlags {
    let soluble = n <= 4;
    let supersoluble = n <= 3;
    let mut complements = BTreeMap::new();
    for p in exactmath::primes_upto(n as u64) {
        // Sym(n) has a normal p-complement only for p = 2 and n <= 3
        // (the complement is Alt(n)); there is no odd-index candidate.
        complements.insert(p, p == 2 && n <= 3);
    }
    KnownFlags {
        soluble: Some(soluble),
        supersoluble: Some(supersoluble),
        normal_p_complement: if complements.is_empty() { None } else { Some(complements) },
    }
}

/// The exact character table of Sym(n).
///
/// Classes: identity first, then the remaining cycle types in descending
/// lexicographic order. Characters: partition labels in descending
/// lexicographic order, so the trivial character `(n)` comes first.
pub fn sym_character_table(n: u32) -> Result<CharacterTable, SymCharError> {
    let bound = configured_max_n();
    if n > bound {
        return Err(SymCharError::BoundExceeded(n, bound));
    }
    let all = partitions_of(n);
    let mut class_types: Vec<&Partition> = Vec::with_capacity(all.len());
    if let Some(identity) = all.last() {
        class_types.push(identity);
    }
    class_types.extend(all.iter().filter(|ct| ct.weight() > 0 && ct.parts().iter().any(|&p| p > 1)));

    let classes: Vec<ClassRecord> = class_types
        .iter()
        .map(|ct| {
            let (size, _) = sym_class_size(ct);
            ClassRecord {
                name: ct.to_string(),
                size,
                element_order: ct.element_order(),
            }
        })
        .collect();

    let mut mn = MnEvaluator::new();
    let irreducibles: Vec<CharacterRecord> = all
        .iter()
        .map(|label| {
            let values = class_types
                .iter()
                .map(|class| {
                    let v = mn.value(label, class).expect("equal weights");
                    Cyclotomic::from_bigint(v)
                })
                .collect();
            CharacterRecord { name: format!("chi{label}"), values }
        })
        .collect();

    Ok(CharacterTable {
        name: format!("Sym({n})"),
        order: exactmath::factorial(n as u64),
        classes,
        irreducibles,
        known: Some(sym_known_flags(n)),
    })
}

/// True when no hook length of the label is divisible by q: the
/// corresponding irreducible has q-defect zero.
pub fn has_defect_zero(label: &Partition, q: u64) -> bool {
    label.hook_lengths().iter().all(|&h| h % q != 0)
}

/// Search for a q-defect-zero character of Sym(n); returns a witness label.
pub fn sym_defect_zero_exists(n: u32, q: u64) -> Option<Partition> {
    partitions_of(n).into_iter().find(|p| has_defect_zero(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn class_size_examples() {
        // (7,1,1,1) in Sym(10): 10!/(7*3!) = 86400
        let (size, factors) = sym_class_size(&p(&[7, 1, 1, 1]));
        assert_eq!(size, Natural::from(86400u32));
        assert_eq!(factors.to_string(), "2^7*3^3*5^2");
        // identity class
        let (size, _) = sym_class_size(&p(&[1, 1, 1]));
        assert!(size.is_one());
        // (5,1,1) in Sym(7): 7!/(5*2!) = 504
        let (size, _) = sym_class_size(&p(&[5, 1, 1]));
        assert_eq!(size, Natural::from(504u32));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=30u32 {
            let mut total = Natural::from(0u32);
            for ct in partitions_of(n) {
                total += sym_class_size(&ct).0;
            }
            assert_eq!(total, exactmath::factorial(n as u64), "n={n}");
        }
    }

    #[test]
    fn alt_class_examples() {
        // 7-cycles split in Alt(7): halves of 720
        let c = alt_class(&p(&[7])).unwrap();
        assert!(c.splits);
        assert_eq!(c.size, Natural::from(360u32));
        // (5,1,1) does not split (repeated part 1)
        let c = alt_class(&p(&[5, 1, 1])).unwrap();
        assert!(!c.splits);
        assert_eq!(c.size, Natural::from(504u32));
        // (2,2) in Alt(4)
        let c = alt_class(&p(&[2, 2])).unwrap();
        assert!(!c.splits);
        assert_eq!(c.size, Natural::from(3u32));
        // odd types are rejected
        assert!(alt_class(&p(&[2, 1])).is_err());
    }

    #[test]
    fn alt_class_sizes_sum_to_half_factorial() {
        for n in 2..=30u32 {
            let mut total = Natural::from(0u32);
            for c in alt_classes(n) {
                total += c.size;
            }
            let half = exactmath::factorial(n as u64) / Natural::from(2u32);
            assert_eq!(total, half, "n={n}");
        }
    }

    #[test]
    fn mn_trivial_and_sign() {
        let mut mn = MnEvaluator::new();
        for ct in partitions_of(6) {
            assert_eq!(mn.value(&p(&[6]), &ct).unwrap(), BigInt::from(1));
            let sign = match ct.parity() {
                Parity::Even => 1,
                Parity::Odd => -1,
            };
            assert_eq!(
                mn.value(&p(&[1, 1, 1, 1, 1, 1]), &ct).unwrap(),
                BigInt::from(sign)
            );
        }
        assert_eq!(
            mn_value(&p(&[1, 1, 1, 1]), &p(&[2, 2])).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn mn_identity_column_is_hook_degree() {
        for n in 1..=10u32 {
            let identity = partitions_of(n).pop().unwrap();
            let mut mn = MnEvaluator::new();
            for label in partitions_of(n) {
                let v = mn.value(&label, &identity).unwrap();
                assert_eq!(v, BigInt::from(label.hook_degree()), "label {label}");
            }
        }
    }

    #[test]
    fn mn_small_known_value() {
        assert_eq!(
            mn_value(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        // chi^(2,2) vanishes on 4-cycles: no rim hook of length 4 in the square
        assert_eq!(mn_value(&p(&[2, 2]), &p(&[4])).unwrap(), BigInt::zero());
    }

    #[test]
    fn mn_weight_mismatch_rejected() {
        assert_eq!(
            mn_value(&p(&[2, 1]), &p(&[2, 2])),
            Err(SymCharError::WeightMismatch(3, 4))
        );
    }

    #[test]
    fn sym3_table_layout() {
        let t = sym_character_table(3).unwrap();
        assert_eq!(t.order, Natural::from(6u32));
        let names: Vec<&str> = t.classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["(1,1,1)", "(3)", "(2,1)"]);
        let sizes: Vec<u32> = t.classes.iter().map(|c| u32::try_from(&c.size).unwrap()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        let degrees: Vec<String> = t
            .irreducibles
            .iter()
            .map(|c| c.values[0].to_string())
            .collect();
        assert_eq!(degrees, vec!["1", "2", "1"]);
    }

    #[test]
    fn sym5_degree_squares() {
        let t = sym_character_table(5).unwrap();
        let mut total = Natural::from(0u32);
        for chi in &t.irreducibles {
            let d = chi.values[0].integer_value().unwrap();
            let d: Natural = d.to_biguint().unwrap();
            total += &d * &d;
        }
        assert_eq!(total, Natural::from(120u32));
    }

    #[test]
    fn sym1_table_is_trivial() {
        let t = sym_character_table(1).unwrap();
        assert_eq!(t.classes.len(), 1);
        assert_eq!(t.irreducibles.len(), 1);
        assert_eq!(t.classes[0].element_order, 1);
    }

    #[test]
    fn bound_respected() {
        assert!(matches!(
            sym_character_table(99),
            Err(SymCharError::BoundExceeded(99, _))
        ));
    }

    #[test]
    fn defect_zero_examples() {
        assert!(has_defect_zero(&p(&[2, 2, 1]), 5));
        assert!(!has_defect_zero(&p(&[3, 1, 1]), 5));
        assert!(has_defect_zero(&p(&[1]), 7));
        // exhaustive scan examples; the witness returned is the first in
        // enumeration order, and (2,2,1) qualifies as well
        let witness = sym_defect_zero_exists(5, 5).unwrap();
        assert!(has_defect_zero(&witness, 5));
        assert!(has_defect_zero(&p(&[2, 2, 1]), 5));
        assert_eq!(sym_defect_zero_exists(7, 2), None);
        assert!(sym_defect_zero_exists(1, 5).is_some());
    }

    #[test]
    fn defect_zero_agrees_with_valuation_test() {
        // no hook divisible by q  <=>  nu_q(n!/degree) = 0
        for n in 1..=12u32 {
            for label in partitions_of(n) {
                let degree = label.hook_degree();
                let quotient = exactmath::factorial(n as u64) / &degree;
                for q in [2u64, 3, 5, 7, 11] {
                    let direct = exactmath::nu(q, &quotient).unwrap() == 0;
                    assert_eq!(
                        has_defect_zero(&label, q),
                        direct,
                        "n={n} label={label} q={q}"
                    );
                }
            }
        }
    }
}
