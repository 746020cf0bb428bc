//! Hypothesis checkers for the three vanishing-class criteria.
//!
//! Each checker tests its hypothesis against a character table and reports
//! a verdict with explicit witnesses. The criteria are one-directional: a
//! holding hypothesis predicts structure (soluble, supersoluble, normal
//! p-complement), a failing one predicts nothing. When the table carries
//! known structure flags, predictions are compared against them.

use crate::exactmath::{self, Factorization, Natural};
use crate::tables::{vanishing_report, CharacterTable, ClassVanishing};
use serde_json::{json, Value};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} does not divide the group order")]
    PrimeNotDividing(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremTag {
    Soluble,
    Supersoluble,
    NormalPComplement,
    Corollary,
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremTag::Soluble => "T1",
            TheoremTag::Supersoluble => "T2",
            TheoremTag::NormalPComplement => "T3",
            TheoremTag::Corollary => "Corollary",
        };
        write!(f, "{s}")
    }
}

/// Consistency of a prediction with the table's known structure flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for Consistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Consistency::Pass => "pass",
            Consistency::Fail => "fail",
            Consistency::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

/// A class violating a hypothesis, with the data that convicts it.
#[derive(Debug, Clone)]
pub struct WitnessClass {
    pub class_name: String,
    pub size: Natural,
    pub size_factors: Factorization,
    pub element_order: u64,
    pub characters: Vec<String>,
}

impl WitnessClass {
    fn from_class(c: &ClassVanishing) -> Self {
        WitnessClass {
            class_name: c.class_name.clone(),
            size: c.size.clone(),
            size_factors: c.size_factors.clone(),
            element_order: c.element_order,
            characters: c.witnesses.clone(),
        }
    }
}

/// Verdict of one criterion check.
#[derive(Debug, Clone)]
pub struct CriterionVerdict {
    pub theorem: TheoremTag,
    pub p: Option<u64>,
    pub hypothesis_holds: bool,
    pub witnesses: Vec<WitnessClass>,
    pub prediction: Option<String>,
    pub known_consistency: Consistency,
    /// T3 only: the prime does not divide the group order, so the
    /// hypothesis holds for lack of any p at all.
    pub vacuous: bool,
}

impl CriterionVerdict {
    /// Serialize with the stable report field set.
    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "class": w.class_name,
                    "size": w.size.to_string(),
                    "factorization": w.size_factors.to_string(),
                    "characters": w.characters,
                })
            })
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("theorem".into(), json!(self.theorem.to_string()));
        if let Some(p) = self.p {
            obj.insert("p".into(), json!(p));
        }
        obj.insert("holds".into(), json!(self.hypothesis_holds));
        obj.insert("witnesses".into(), Value::Array(witnesses));
        if let Some(pred) = &self.prediction {
            obj.insert("prediction".into(), json!(pred));
        }
        obj.insert(
            "knownConsistency".into(),
            json!(self.known_consistency.to_string()),
        );
        Value::Object(obj)
    }
}

impl fmt::Display for CriterionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.theorem)?;
        if let Some(p) = self.p {
            write!(f, " (p = {p})")?;
        }
        if self.hypothesis_holds {
            write!(f, ": hypothesis holds")?;
            if self.vacuous {
                write!(f, " vacuously (p does not divide |G|)")?;
            }
            if let Some(pred) = &self.prediction {
                write!(f, ", predicts {pred}")?;
            }
        } else {
            write!(f, ": hypothesis fails ({} witness", self.witnesses.len())?;
            if self.witnesses.len() != 1 {
                write!(f, "es")?;
            }
            write!(f, ")")?;
            for w in &self.witnesses {
                write!(
                    f,
                    "\n    class {} order {} size {} = {} vanishing via {}",
                    w.class_name,
                    w.element_order,
                    w.size,
                    w.size_factors,
                    w.characters.join(",")
                )?;
            }
        }
        write!(f, " [known: {}]", self.known_consistency)
    }
}

fn require_prime(p: u64) -> Result<(), CriteriaError> {
    if exactmath::is_prime(p) {
        Ok(())
    } else {
        Err(CriteriaError::NotPrime(p))
    }
}

fn divides_order(table: &CharacterTable, p: u64) -> bool {
    exactmath::nu(p, &table.order).map(|e| e > 0).unwrap_or(false)
}

/// True when no prime divisor q of |G| divides p - 1.
///
/// Errors when p does not divide the group order.
pub fn prime_side_condition(table: &CharacterTable, p: u64) -> Result<bool, CriteriaError> {
    require_prime(p)?;
    if !divides_order(table, p) {
        return Err(CriteriaError::PrimeNotDividing(p));
    }
    let order_factors = Factorization::factorize(&table.order).expect("order >= 1");
    let ok = order_factors.primes().all(|q| !(p - 1).is_multiple_of(q));
    Ok(ok)
}

fn consistency(prediction: &Option<String>, flag: Option<bool>) -> Consistency {
    match (prediction, flag) {
        (Some(_), Some(true)) => Consistency::Pass,
        (Some(_), Some(false)) => Consistency::Fail,
        _ => Consistency::Unknown,
    }
}

fn soluble_witnesses(table: &CharacterTable, p: u64) -> Vec<WitnessClass> {
    vanishing_report(table)
        .classes
        .iter()
        .filter(|c| c.vanishing && c.prime_power.is_some() && c.size_factors.nu(p) >= 2)
        .map(WitnessClass::from_class)
        .collect()
}

fn check_soluble_inner(
    table: &CharacterTable,
    p: u64,
    tag: TheoremTag,
    side_condition: bool,
) -> CriterionVerdict {
    let witnesses = soluble_witnesses(table, p);
    let holds = witnesses.is_empty();
    let prediction = (holds && side_condition).then(|| "soluble".to_string());
    let flag = table.known.as_ref().and_then(|k| k.soluble);
    CriterionVerdict {
        theorem: tag,
        p: Some(p),
        hypothesis_holds: holds,
        witnesses,
        known_consistency: consistency(&prediction, flag),
        prediction,
        vacuous: false,
    }
}

/// Solubility criterion: no vanishing class of prime power element order
/// has size divisible by p^2, for a prime p | |G| whose p - 1 avoids all
/// prime divisors of |G|.
pub fn check_theorem1(table: &CharacterTable, p: u64) -> Result<CriterionVerdict, CriteriaError> {
    let side = prime_side_condition(table, p)?;
    Ok(check_soluble_inner(table, p, TheoremTag::Soluble, side))
}

/// The p = 2 specialization of the solubility criterion: no vanishing class
/// of prime power order has size divisible by 4. The side condition is
/// vacuous, and 2 need not divide the group order.
pub fn check_corollary(table: &CharacterTable) -> CriterionVerdict {
    check_soluble_inner(table, 2, TheoremTag::Corollary, true)
}

/// Supersolubility criterion: every vanishing class of prime power element
/// order has square-free size.
pub fn check_theorem2(table: &CharacterTable) -> CriterionVerdict {
    let witnesses: Vec<WitnessClass> = vanishing_report(table)
        .classes
        .iter()
        .filter(|c| c.vanishing && c.prime_power.is_some() && !c.size_factors.is_squarefree())
        .map(WitnessClass::from_class)
        .collect();
    let holds = witnesses.is_empty();
    let prediction = holds.then(|| "supersoluble".to_string());
    let flag = table.known.as_ref().and_then(|k| k.supersoluble);
    CriterionVerdict {
        theorem: TheoremTag::Supersoluble,
        p: None,
        hypothesis_holds: holds,
        witnesses,
        known_consistency: consistency(&prediction, flag),
        prediction,
        vacuous: false,
    }
}

/// Normal p-complement criterion: p divides no vanishing class size of a
/// p'-element of prime power order. Any prime is accepted; when p does not
/// divide |G| the hypothesis is vacuous and the verdict says so.
pub fn check_theorem3(table: &CharacterTable, p: u64) -> Result<CriterionVerdict, CriteriaError> {
    require_prime(p)?;
    let witnesses: Vec<WitnessClass> = vanishing_report(table)
        .classes
        .iter()
        .filter(|c| {
            c.vanishing
                && matches!(c.prime_power, Some(r) if r != p)
                && c.size_factors.nu(p) >= 1
        })
        .map(WitnessClass::from_class)
        .collect();
    let holds = witnesses.is_empty();
    let prediction = holds.then(|| "normal p-complement".to_string());
    let flag = table
        .known
        .as_ref()
        .and_then(|k| k.normal_p_complement.as_ref())
        .and_then(|m| m.get(&p))
        .copied();
    Ok(CriterionVerdict {
        theorem: TheoremTag::NormalPComplement,
        p: Some(p),
        hypothesis_holds: holds,
        witnesses,
        known_consistency: consistency(&prediction, flag),
        prediction,
        vacuous: !divides_order(table, p),
    })
}

/// The non-abelian simple groups lacking a q-defect-zero character, which
/// exist only for q = 2 or 3: ten sporadic groups and the alternating
/// groups on at least seven points.
pub fn exceptional_simple_groups(q: u64) -> Vec<String> {
    if q == 2 || q == 3 {
        let mut names: Vec<String> = SPORADIC_EXCEPTIONS.iter().map(|s| s.to_string()).collect();
        names.push("Alt(n), n >= 7".to_string());
        names
    } else {
        Vec::new()
    }
}

/// The sporadic groups from the defect-zero exception list.
pub const SPORADIC_EXCEPTIONS: [&str; 10] =
    ["M12", "M22", "M24", "J2", "HS", "Suz", "Ru", "Co1", "Co3", "BM"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symchar::sym_character_table;
    use crate::tables::parse_table;

    fn alt5() -> CharacterTable {
        parse_table(include_str!("../fixtures/alt5.json")).unwrap()
    }

    #[test]
    fn side_condition_examples() {
        let s3 = sym_character_table(3).unwrap();
        assert_eq!(prime_side_condition(&s3, 2), Ok(true));
        // 2 divides 3 - 1
        assert_eq!(prime_side_condition(&s3, 3), Ok(false));
        assert_eq!(
            prime_side_condition(&s3, 5),
            Err(CriteriaError::PrimeNotDividing(5))
        );
        assert_eq!(prime_side_condition(&s3, 4), Err(CriteriaError::NotPrime(4)));
    }

    #[test]
    fn theorem1_sym3_holds_and_is_consistent() {
        let s3 = sym_character_table(3).unwrap();
        let v = check_theorem1(&s3, 2).unwrap();
        assert!(v.hypothesis_holds);
        assert_eq!(v.prediction.as_deref(), Some("soluble"));
        assert_eq!(v.known_consistency, Consistency::Pass);
    }

    #[test]
    fn theorem1_alt5_fails_with_size_12_witness() {
        let v = check_theorem1(&alt5(), 2).unwrap();
        assert!(!v.hypothesis_holds);
        assert!(v.prediction.is_none());
        let names: Vec<&str> = v.witnesses.iter().map(|w| w.class_name.as_str()).collect();
        assert!(names.contains(&"5A") && names.contains(&"5B"), "{names:?}");
        let w = v.witnesses.iter().find(|w| w.class_name == "5A").unwrap();
        assert_eq!(w.size, Natural::from(12u32));
        assert_eq!(w.element_order, 5);
    }

    #[test]
    fn corollary_equals_theorem1_at_two() {
        for table in [sym_character_table(3).unwrap(), sym_character_table(4).unwrap(), alt5()] {
            let c = check_corollary(&table);
            let t1 = check_theorem1(&table, 2).unwrap();
            assert_eq!(c.hypothesis_holds, t1.hypothesis_holds);
            assert_eq!(c.prediction, t1.prediction);
            assert_eq!(c.known_consistency, t1.known_consistency);
            assert_eq!(
                c.witnesses.iter().map(|w| &w.class_name).collect::<Vec<_>>(),
                t1.witnesses.iter().map(|w| &w.class_name).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn theorem2_sym3_holds_sym4_fails() {
        let s3 = sym_character_table(3).unwrap();
        let v = check_theorem2(&s3);
        assert!(v.hypothesis_holds);
        assert_eq!(v.prediction.as_deref(), Some("supersoluble"));
        assert_eq!(v.known_consistency, Consistency::Pass);

        // Sym(4): the 3-cycles form a vanishing class of size 8 = 2^3.
        let s4 = sym_character_table(4).unwrap();
        let v = check_theorem2(&s4);
        assert!(!v.hypothesis_holds);
        let w = v.witnesses.iter().find(|w| w.class_name == "(3,1)").unwrap();
        assert_eq!(w.size, Natural::from(8u32));
        assert_eq!(w.element_order, 3);
        assert!(!w.characters.is_empty());
    }

    #[test]
    fn theorem3_regressions() {
        let s3 = sym_character_table(3).unwrap();
        // p = 2: the only vanishing class is the transpositions, a 2-class,
        // so no p'-witness exists; Alt(3) is the normal 2-complement.
        let v = check_theorem3(&s3, 2).unwrap();
        assert!(v.hypothesis_holds);
        assert!(!v.vacuous);
        assert_eq!(v.prediction.as_deref(), Some("normal p-complement"));
        assert_eq!(v.known_consistency, Consistency::Pass);

        // p = 3: the transposition class is a 3'-class of size 3.
        let v = check_theorem3(&s3, 3).unwrap();
        assert!(!v.hypothesis_holds);
        assert_eq!(v.witnesses.len(), 1);
        assert_eq!(v.witnesses[0].class_name, "(2,1)");
        assert_eq!(v.known_consistency, Consistency::Unknown);

        // Alt(5), p = 5: the involution class has size 15, divisible by 5.
        let v = check_theorem3(&alt5(), 5).unwrap();
        assert!(!v.hypothesis_holds);
        assert!(v.witnesses.iter().any(|w| w.class_name == "2A"));
    }

    #[test]
    fn theorem3_vacuous_prime() {
        let s3 = sym_character_table(3).unwrap();
        let v = check_theorem3(&s3, 7).unwrap();
        assert!(v.hypothesis_holds);
        assert!(v.vacuous);
        assert_eq!(v.known_consistency, Consistency::Unknown);
    }

    #[test]
    fn theorem2_witnesses_are_theorem1_witnesses() {
        // every T2 witness with nu_p(size) >= 2 shows up for T1 at that p
        for n in [4u32, 5, 6, 7] {
            let t = sym_character_table(n).unwrap();
            let t2 = check_theorem2(&t);
            for w in &t2.witnesses {
                for (p, e) in w.size_factors.entries() {
                    if *e >= 2 {
                        let t1 = check_soluble_inner(&t, *p, TheoremTag::Soluble, true);
                        assert!(
                            t1.witnesses.iter().any(|x| x.class_name == w.class_name),
                            "Sym({n}) class {} missing from T1 at p={p}",
                            w.class_name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn verdict_json_shape() {
        let s3 = sym_character_table(3).unwrap();
        let v = check_theorem3(&s3, 3).unwrap().to_json();
        assert_eq!(v["theorem"], "T3");
        assert_eq!(v["p"], 3);
        assert_eq!(v["holds"], false);
        assert_eq!(v["witnesses"][0]["class"], "(2,1)");
        assert_eq!(v["witnesses"][0]["size"], "3");
        assert_eq!(v["witnesses"][0]["factorization"], "3");
        assert_eq!(v["knownConsistency"], "unknown");
        assert!(v.get("prediction").is_none());
    }

    #[test]
    fn exceptional_list() {
        assert!(exceptional_simple_groups(5).is_empty());
        let two = exceptional_simple_groups(2);
        assert_eq!(two.len(), 11);
        assert!(two.contains(&"M12".to_string()));
        assert!(two.contains(&"Alt(n), n >= 7".to_string()));
        assert_eq!(exceptional_simple_groups(2), exceptional_simple_groups(3));
    }

    #[test]
    fn determinism_under_character_reordering() {
        let mut t = alt5();
        t.irreducibles.reverse();
        // parse() order guarantees identity stays first for classes; only
        // characters were permuted. Witness sets must be unchanged.
        let v1 = check_theorem1(&alt5(), 2).unwrap();
        let v2 = check_theorem1(&t, 2).unwrap();
        let names = |v: &CriterionVerdict| {
            v.witnesses.iter().map(|w| w.class_name.clone()).collect::<Vec<_>>()
        };
        assert_eq!(names(&v1), names(&v2));
        assert_eq!(v1.hypothesis_holds, v2.hypothesis_holds);
    }
}
