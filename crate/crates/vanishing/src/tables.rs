//! Character-table data model, fixture format, validation, and vanishing
//! class computation.
//!
//! Tables arrive either from the `Sym(n)` generator or from JSON fixtures.
//! A fixture whose class sizes sum to less than the group order is a
//! *fragment*: a deliberately partial export carrying just the classes and
//! characters some verification needs. Fragments skip the whole-table
//! identities (size sum, degree-square sum, orthogonality) and say so in
//! the validation report; exact per-value checks still run.

use crate::exactmath::{self, Cyclotomic, ExactMathError, Factorization, Natural};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("malformed table document: {0}")]
    Malformed(String),
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("invalid character value: {0}")]
    BadValue(#[from] ExactMathError),
    #[error("table invariant failed: {0}")]
    Invariant(String),
    #[error("degree of {0} does not divide the group order")]
    DegreeDivision(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// One conjugacy class: ATLAS-style name, exact size, element order.
#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub name: String,
    pub size: Natural,
    pub element_order: u64,
}

/// One irreducible character: name and one exact value per class.
#[derive(Debug, Clone)]
pub struct CharacterRecord {
    pub name: String,
    pub values: Vec<Cyclotomic>,
}

impl CharacterRecord {
    /// Value at the identity class.
    pub fn degree(&self) -> Natural {
        self.values[0]
            .integer_value()
            .and_then(|d| d.to_biguint())
            .expect("validated on parse")
    }
}

/// Optional known structure facts, never inferred from the table itself.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnownFlags {
    pub soluble: Option<bool>,
    pub supersoluble: Option<bool>,
    pub normal_p_complement: Option<BTreeMap<u64, bool>>,
}

impl KnownFlags {
    fn is_empty(&self) -> bool {
        self.soluble.is_none() && self.supersoluble.is_none() && self.normal_p_complement.is_none()
    }
}

/// A character table with exact class and character data.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub name: String,
    pub order: Natural,
    pub classes: Vec<ClassRecord>,
    pub irreducibles: Vec<CharacterRecord>,
    pub known: Option<KnownFlags>,
}

impl CharacterTable {
    /// True when the listed classes do not exhaust the group: a partial
    /// export. Full tables have class sizes summing exactly to the order.
    pub fn is_fragment(&self) -> bool {
        self.class_size_sum() < self.order
    }

    fn class_size_sum(&self) -> Natural {
        let mut total = Natural::zero();
        for c in &self.classes {
            total += &c.size;
        }
        total
    }

    pub fn class_by_name(&self, name: &str) -> Option<(usize, &ClassRecord)> {
        self.classes
            .iter()
            .enumerate()
            .find(|(_, c)| c.name == name)
    }

    pub fn character_by_name(&self, name: &str) -> Option<&CharacterRecord> {
        self.irreducibles.iter().find(|c| c.name == name)
    }

    /// Centralizer order of the given class: |G| / class size.
    pub fn centralizer_order(&self, idx: usize) -> Natural {
        let (q, r) = self.order.div_rem(&self.classes[idx].size);
        debug_assert!(r.is_zero());
        q
    }

    /// Primes dividing the group order.
    pub fn order_primes(&self) -> Vec<u64> {
        Factorization::factorize(&self.order)
            .expect("order >= 1")
            .primes()
            .collect()
    }
}

// ---------------------------------------------------------------------------
// fixture format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct ClassDto {
    name: String,
    size: String,
    #[serde(rename = "elementOrder")]
    element_order: u64,
}

#[derive(Serialize, Deserialize)]
struct CharacterDto {
    name: String,
    values: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct KnownDto {
    #[serde(skip_serializing_if = "Option::is_none")]
    soluble: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    supersoluble: Option<bool>,
    #[serde(rename = "normalPComplement", skip_serializing_if = "Option::is_none")]
    normal_p_complement: Option<BTreeMap<String, bool>>,
}

#[derive(Serialize, Deserialize)]
struct TableDto {
    name: String,
    order: String,
    classes: Vec<ClassDto>,
    irreducibles: Vec<CharacterDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    known: Option<KnownDto>,
}

fn parse_natural(s: &str) -> Result<Natural, TableError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(TableError::BadNumber(s.to_string()));
    }
    s.parse::<Natural>().map_err(|_| TableError::BadNumber(s.to_string()))
}

/// Parse and structurally validate a fixture document.
///
/// Violations of the per-record invariants (identity first, positive sizes,
/// sizes and element orders dividing the group order, integral degrees,
/// class size sum not exceeding the order) are reported as errors naming
/// the failed identity. Orthogonality is deferred to [`validate_table`].
pub fn parse_table(input: &str) -> Result<CharacterTable, TableError> {
    let dto: TableDto =
        serde_json::from_str(input).map_err(|e| TableError::Malformed(e.to_string()))?;
    let order = parse_natural(&dto.order)?;
    if order.is_zero() {
        return Err(TableError::Invariant("group order must be positive".into()));
    }
    if dto.classes.is_empty() {
        return Err(TableError::Invariant("table must contain at least one class".into()));
    }
    let mut classes = Vec::with_capacity(dto.classes.len());
    for c in &dto.classes {
        let size = parse_natural(&c.size)?;
        if size.is_zero() {
            return Err(TableError::Invariant(format!("class {}: size must be positive", c.name)));
        }
        if c.element_order == 0 {
            return Err(TableError::Invariant(format!(
                "class {}: element order must be positive",
                c.name
            )));
        }
        if !order.is_multiple_of(&size) {
            return Err(TableError::Invariant(format!(
                "class {}: class size must divide the group order",
                c.name
            )));
        }
        if !order.is_multiple_of(&Natural::from(c.element_order)) {
            return Err(TableError::Invariant(format!(
                "class {}: element order must divide the group order",
                c.name
            )));
        }
        classes.push(ClassRecord {
            name: c.name.clone(),
            size,
            element_order: c.element_order,
        });
    }
    if classes[0].element_order != 1 || !classes[0].size.is_one() {
        return Err(TableError::Invariant(
            "identity class must come first with order 1 and size 1".into(),
        ));
    }
    let mut sum = Natural::zero();
    for c in &classes {
        sum += &c.size;
    }
    if sum > order {
        return Err(TableError::Invariant("class size sum exceeds the group order".into()));
    }
    for pair in dto.classes.iter().enumerate() {
        let (i, c) = pair;
        if dto.classes[..i].iter().any(|d| d.name == c.name) {
            return Err(TableError::Invariant(format!("duplicate class name {}", c.name)));
        }
    }

    let mut irreducibles = Vec::with_capacity(dto.irreducibles.len());
    for ch in &dto.irreducibles {
        if ch.values.len() != classes.len() {
            return Err(TableError::Invariant(format!(
                "character {}: expected {} values, found {}",
                ch.name,
                classes.len(),
                ch.values.len()
            )));
        }
        let values = ch
            .values
            .iter()
            .map(|v| Cyclotomic::parse(v))
            .collect::<Result<Vec<_>, _>>()?;
        let degree_ok = values[0]
            .integer_value()
            .is_some_and(|d| d.sign() == num_bigint::Sign::Plus);
        if !degree_ok {
            return Err(TableError::Invariant(format!(
                "character {}: degree must be a positive integer",
                ch.name
            )));
        }
        if dto.irreducibles.iter().filter(|d| d.name == ch.name).count() > 1 {
            return Err(TableError::Invariant(format!("duplicate character name {}", ch.name)));
        }
        irreducibles.push(CharacterRecord { name: ch.name.clone(), values });
    }

    let known = dto
        .known
        .map(|k| -> Result<KnownFlags, TableError> {
            let normal_p_complement = k
                .normal_p_complement
                .map(|m| -> Result<BTreeMap<u64, bool>, TableError> {
                    m.into_iter()
                        .map(|(p, v)| {
                            let p: u64 =
                                p.parse().map_err(|_| TableError::BadNumber(p.clone()))?;
                            if !exactmath::is_prime(p) {
                                return Err(TableError::NotPrime(p));
                            }
                            Ok((p, v))
                        })
                        .collect()
                })
                .transpose()?;
            Ok(KnownFlags {
                soluble: k.soluble,
                supersoluble: k.supersoluble,
                normal_p_complement,
            })
        })
        .transpose()?;

    Ok(CharacterTable {
        name: dto.name,
        order,
        classes,
        irreducibles,
        known,
    })
}

/// Serialize to the fixture format. Output is deterministic and canonical;
/// `serialize` after `parse` is a fixed point on canonical documents.
pub fn serialize_table(table: &CharacterTable) -> String {
    let dto = TableDto {
        name: table.name.clone(),
        order: table.order.to_string(),
        classes: table
            .classes
            .iter()
            .map(|c| ClassDto {
                name: c.name.clone(),
                size: c.size.to_string(),
                element_order: c.element_order,
            })
            .collect(),
        irreducibles: table
            .irreducibles
            .iter()
            .map(|ch| CharacterDto {
                name: ch.name.clone(),
                values: ch.values.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
        known: table.known.as_ref().filter(|k| !k.is_empty()).map(|k| KnownDto {
            soluble: k.soluble,
            supersoluble: k.supersoluble,
            normal_p_complement: k
                .normal_p_complement
                .as_ref()
                .map(|m| m.iter().map(|(p, v)| (p.to_string(), *v)).collect()),
        }),
    };
    let mut out = serde_json::to_string_pretty(&dto).expect("serializable");
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

/// Outcome of one validation identity.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Results of [`validate_table`]; failures are reported, never thrown.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub table: String,
    pub fragment: bool,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "pass" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// Check the exact whole-table identities: class size sum, degree-square
/// sum, row and column orthogonality, and Brauer consistency (every
/// q-defect-zero character vanishes on every class of order divisible by
/// q). Fragments skip the whole-table identities and record that fact.
pub fn validate_table(table: &CharacterTable) -> ValidationReport {
    let mut checks = Vec::new();
    let fragment = table.is_fragment();

    if fragment {
        checks.push(CheckResult {
            name: "fragment coverage".into(),
            passed: true,
            detail: format!(
                "partial table: listed classes cover {} of |G| = {}; \
                 size-sum, degree-sum and orthogonality checks skipped",
                table.class_size_sum(),
                table.order
            ),
        });
    } else {
        let sum = table.class_size_sum();
        checks.push(CheckResult {
            name: "class size sum".into(),
            passed: sum == table.order,
            detail: format!("sum of class sizes = {sum}, |G| = {}", table.order),
        });

        let mut degree_sq = Natural::zero();
        for ch in &table.irreducibles {
            let d = ch.degree();
            degree_sq += &d * &d;
        }
        checks.push(CheckResult {
            name: "degree square sum".into(),
            passed: degree_sq == table.order,
            detail: format!("sum of squared degrees = {degree_sq}, |G| = {}", table.order),
        });

        checks.push(CheckResult {
            name: "character count".into(),
            passed: table.irreducibles.len() == table.classes.len(),
            detail: format!(
                "{} characters, {} classes",
                table.irreducibles.len(),
                table.classes.len()
            ),
        });

        checks.push(row_orthogonality(table));
        checks.push(column_orthogonality(table));
    }

    checks.push(brauer_consistency(table));

    ValidationReport {
        table: table.name.clone(),
        fragment,
        checks,
    }
}

fn big_order(table: &CharacterTable) -> Cyclotomic {
    Cyclotomic::from_bigint(BigInt::from(table.order.clone()))
}

fn row_orthogonality(table: &CharacterTable) -> CheckResult {
    let order = big_order(table);
    for (i, chi) in table.irreducibles.iter().enumerate() {
        for (j, psi) in table.irreducibles.iter().enumerate().skip(i) {
            let mut total = Cyclotomic::zero();
            for (c, class) in table.classes.iter().enumerate() {
                let size = Cyclotomic::from_bigint(BigInt::from(class.size.clone()));
                total = total + size * chi.values[c].clone() * psi.values[c].conjugate();
            }
            let expected = if i == j { order.clone() } else { Cyclotomic::zero() };
            if total != expected {
                return CheckResult {
                    name: "row orthogonality".into(),
                    passed: false,
                    detail: format!(
                        "inner product of {} and {} is {total}, expected {expected}",
                        chi.name, psi.name
                    ),
                };
            }
        }
    }
    CheckResult {
        name: "row orthogonality".into(),
        passed: true,
        detail: "all character inner products exact".into(),
    }
}

fn column_orthogonality(table: &CharacterTable) -> CheckResult {
    for c in 0..table.classes.len() {
        for d in c..table.classes.len() {
            let mut total = Cyclotomic::zero();
            for chi in &table.irreducibles {
                total = total + chi.values[c].clone() * chi.values[d].conjugate();
            }
            let expected = if c == d {
                Cyclotomic::from_bigint(BigInt::from(table.centralizer_order(c)))
            } else {
                Cyclotomic::zero()
            };
            if total != expected {
                return CheckResult {
                    name: "column orthogonality".into(),
                    passed: false,
                    detail: format!(
                        "columns {} and {} give {total}, expected {expected}",
                        table.classes[c].name, table.classes[d].name
                    ),
                };
            }
        }
    }
    CheckResult {
        name: "column orthogonality".into(),
        passed: true,
        detail: "all class column products exact".into(),
    }
}

fn brauer_consistency(table: &CharacterTable) -> CheckResult {
    for q in table.order_primes() {
        let zero_defect = match defect_zero_characters(table, q) {
            Ok(names) => names,
            Err(e) => {
                return CheckResult {
                    name: "Brauer defect-zero consistency".into(),
                    passed: false,
                    detail: e.to_string(),
                }
            }
        };
        for name in zero_defect {
            let chi = table.character_by_name(&name).expect("name from this table");
            for (c, class) in table.classes.iter().enumerate() {
                if class.element_order % q == 0 && !chi.values[c].is_zero() {
                    return CheckResult {
                        name: "Brauer defect-zero consistency".into(),
                        passed: false,
                        detail: format!(
                            "{name} has {q}-defect zero but {} at class {} (order {})",
                            chi.values[c], class.name, class.element_order
                        ),
                    };
                }
            }
        }
    }
    CheckResult {
        name: "Brauer defect-zero consistency".into(),
        passed: true,
        detail: "every q-defect-zero character vanishes on all q-singular classes".into(),
    }
}

// ---------------------------------------------------------------------------
// vanishing classes and defect zero
// ---------------------------------------------------------------------------

/// Vanishing status of one class.
#[derive(Debug, Clone)]
pub struct ClassVanishing {
    pub class_name: String,
    pub element_order: u64,
    pub size: Natural,
    pub size_factors: Factorization,
    pub vanishing: bool,
    /// Characters that are zero on this class.
    pub witnesses: Vec<String>,
    /// `Some(p)` when the element order is a positive power of the prime p.
    pub prime_power: Option<u64>,
}

/// Per-class vanishing summary of a table.
#[derive(Debug, Clone)]
pub struct VanishingReport {
    pub group: String,
    pub order: Natural,
    pub fragment: bool,
    pub classes: Vec<ClassVanishing>,
}

impl VanishingReport {
    pub fn vanishing_classes(&self) -> impl Iterator<Item = &ClassVanishing> {
        self.classes.iter().filter(|c| c.vanishing)
    }
}

/// `Some(p)` when n = p^k for a prime p and k >= 1.
pub fn prime_power_of(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let f = Factorization::factorize(&Natural::from(n)).expect("n >= 2");
    match f.entries() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Flag each class that some irreducible character vanishes on.
pub fn vanishing_report(table: &CharacterTable) -> VanishingReport {
    let classes = table
        .classes
        .iter()
        .enumerate()
        .map(|(c, class)| {
            let witnesses: Vec<String> = table
                .irreducibles
                .iter()
                .filter(|chi| chi.values[c].is_zero())
                .map(|chi| chi.name.clone())
                .collect();
            let size_factors =
                Factorization::factorize(&class.size).expect("class size is positive");
            ClassVanishing {
                class_name: class.name.clone(),
                element_order: class.element_order,
                size: class.size.clone(),
                size_factors,
                vanishing: !witnesses.is_empty(),
                witnesses,
                prime_power: prime_power_of(class.element_order),
            }
        })
        .collect();
    VanishingReport {
        group: table.name.clone(),
        order: table.order.clone(),
        fragment: table.is_fragment(),
        classes,
    }
}

/// Names of the characters with q-defect zero: q does not divide |G|/degree.
pub fn defect_zero_characters(
    table: &CharacterTable,
    q: u64,
) -> Result<Vec<String>, TableError> {
    if !exactmath::is_prime(q) {
        return Err(TableError::NotPrime(q));
    }
    let mut out = Vec::new();
    for chi in &table.irreducibles {
        let degree = chi.degree();
        let (quotient, rem) = table.order.div_rem(&degree);
        if !rem.is_zero() {
            return Err(TableError::DegreeDivision(chi.name.clone()));
        }
        if exactmath::nu(q, &quotient).expect("quotient >= 1") == 0 {
            out.push(chi.name.clone());
        }
    }
    Ok(out)
}
