//! Exact elements of cyclotomic fields with a decidable zero test.
//!
//! A value is stored as its conductor `n` together with the coefficient
//! vector of a polynomial in a fixed primitive n-th root of unity, reduced
//! modulo the n-th cyclotomic polynomial. That reduction makes the
//! representation canonical at a fixed conductor: a value is zero exactly
//! when every coefficient is zero. Conductors are never minimized; mixed
//! operations lift both operands to the least common conductor, which
//! leaves equality and the zero test unaffected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use super::ExactMathError;

type Q = BigRational;

/// Conductors are capped well above anything a character table needs; the
/// cap keeps a typo from allocating a gigantic coefficient vector.
const MAX_CONDUCTOR: u64 = 1_000_000;

fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

/// Exact division of integer polynomials, ascending-degree dense vectors.
/// The divisor must be monic and must divide evenly.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (dd..=dn).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, b) in den.iter().enumerate() {
            let delta = &c * b;
            rem[i - dd + j] -= delta;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact polynomial division");
    quot
}

/// Monic n-th cyclotomic polynomial, ascending-degree coefficients.
/// Computed as (x^n - 1) / prod of Phi_d over proper divisors d of n.
fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    let mut memo: HashMap<u64, Vec<BigInt>> = HashMap::new();
    for d in divisors(n) {
        let mut num = vec![BigInt::zero(); d as usize + 1];
        num[0] = -BigInt::one();
        num[d as usize] = BigInt::one();
        let mut phi_d = num;
        for e in divisors(d) {
            if e < d {
                phi_d = poly_div_exact(&phi_d, &memo[&e]);
            }
        }
        memo.insert(d, phi_d);
    }
    memo.remove(&n).expect("n is a divisor of itself")
}

/// Per-conductor field data: degree and the reduction rule
/// x^phi = -(tail[0] + tail[1] x + ... + tail[phi-1] x^(phi-1)).
struct FieldData {
    phi: usize,
    tail: Vec<BigInt>,
}

fn field(n: u64) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cyclotomic field cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| {
            let mut poly = cyclotomic_polynomial(n);
            let lead = poly.pop().expect("nonempty polynomial");
            debug_assert!(lead.is_one());
            Arc::new(FieldData { phi: euler_phi(n) as usize, tail: poly })
        })
        .clone()
}

/// An exact element of the cyclotomic field of conductor `n`, in canonical
/// reduced form over the power basis 1, z, ..., z^(phi(n)-1).
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Q>,
}

impl Cyclotomic {
    fn reduced(conductor: u64, mut dense: Vec<Q>) -> Self {
        let fd = field(conductor);
        let phi = fd.phi;
        let mut i = dense.len();
        while i > phi {
            i -= 1;
            if dense[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut dense[i], Q::zero());
            for (j, t) in fd.tail.iter().enumerate() {
                let delta = &c * Q::from(t.clone());
                dense[i - phi + j] -= delta;
            }
        }
        dense.resize(phi, Q::zero());
        Cyclotomic { conductor, coeffs: dense }
    }

    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Q::zero()] }
    }

    pub fn one() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Q::one()] }
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Q::from(BigInt::from(v))] }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Q::from(v)] }
    }

    pub fn from_rational(v: Q) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![v] }
    }

    /// E(n)^k, the k-th power of the fixed primitive n-th root of unity.
    /// Exponents are reduced modulo n; the conductor must be positive.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self, ExactMathError> {
        if n == 0 {
            return Err(ExactMathError::ZeroConductor);
        }
        if n > MAX_CONDUCTOR {
            return Err(ExactMathError::BadLiteral(format!("conductor {n} too large")));
        }
        let e = k.rem_euclid(n as i64) as usize;
        let mut dense = vec![Q::zero(); e + 1];
        dense[e] = Q::one();
        Ok(Cyclotomic::reduced(n, dense))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Coefficients over the power basis at this value's conductor.
    pub fn coefficients(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational number this value equals, if it lies in the prime field.
    pub fn rational_value(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The rational integer this value equals, if any.
    pub fn integer_value(&self) -> Option<BigInt> {
        let q = self.rational_value()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    /// Re-express at conductor `m`, which must be a multiple of the current one.
    fn lift(&self, m: u64) -> Cyclotomic {
        if m == self.conductor {
            return self.clone();
        }
        debug_assert_eq!(m % self.conductor, 0);
        let scale = (m / self.conductor) as usize;
        let mut dense = vec![Q::zero(); (self.coeffs.len() - 1) * scale + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[j * scale] = c.clone();
            }
        }
        Cyclotomic::reduced(m, dense)
    }

    fn common_conductor(&self, other: &Cyclotomic) -> u64 {
        let l = num_integer::lcm(self.conductor, other.conductor);
        assert!(
            l <= MAX_CONDUCTOR,
            "common conductor {l} exceeds the supported bound"
        );
        l
    }

    /// Complex conjugation: maps the root of unity to its (n-1)-th power.
    pub fn conjugate(&self) -> Cyclotomic {
        let n = self.conductor as usize;
        let mut dense = vec![Q::zero(); n.max(1)];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let k = (n - j) % n;
                dense[k] += c;
            }
        }
        Cyclotomic::reduced(self.conductor, dense)
    }

    /// True when fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// Parse a literal such as `-1/2+3*E(7)^2` (whitespace-free grammar).
    pub fn parse(input: &str) -> Result<Self, ExactMathError> {
        Parser { bytes: input.as_bytes(), pos: 0, input }.parse_value()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        let m = self.common_conductor(&rhs);
        let a = self.lift(m);
        let b = rhs.lift(m);
        let coeffs = a
            .coeffs
            .into_iter()
            .zip(b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic { conductor: m, coeffs }
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        let m = self.common_conductor(&rhs);
        let a = self.lift(m);
        let b = rhs.lift(m);
        let mut dense = vec![Q::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        Cyclotomic::reduced(m, dense)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let root = match j {
                0 => String::new(),
                1 => format!("E({})", self.conductor),
                _ => format!("E({})^{}", self.conductor, j),
            };
            if j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{mag}*{root}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> ExactMathError {
        ExactMathError::BadLiteral(format!("{msg} at byte {} of {:?}", self.pos, self.input))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ExactMathError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", b as char)))
        }
    }

    fn parse_int(&mut self) -> Result<BigInt, ExactMathError> {
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected integer"));
        }
        self.input[start..self.pos]
            .parse::<BigInt>()
            .map_err(|_| self.error("bad integer"))
    }

    fn parse_rational(&mut self) -> Result<Q, ExactMathError> {
        let numer = self.parse_int()?;
        if self.eat(b'/') {
            let denom = self.parse_int()?;
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Q::new(numer, denom))
        } else {
            Ok(Q::from(numer))
        }
    }

    fn parse_root(&mut self) -> Result<Cyclotomic, ExactMathError> {
        self.expect(b'E')?;
        self.expect(b'(')?;
        let n = self.parse_int()?;
        self.expect(b')')?;
        if n.is_negative() || n.is_zero() {
            return Err(ExactMathError::ZeroConductor);
        }
        let n: u64 = n
            .try_into()
            .map_err(|_| self.error("conductor out of range"))?;
        let e = if self.eat(b'^') {
            let e = self.parse_int()?;
            let n_big = BigInt::from(n);
            let r = ((e % &n_big) + &n_big) % &n_big;
            i64::try_from(r).map_err(|_| self.error("exponent out of range"))?
        } else {
            1
        };
        Cyclotomic::root_of_unity(n, e)
    }

    fn parse_term(&mut self) -> Result<Cyclotomic, ExactMathError> {
        if self.peek() == Some(b'E') {
            return self.parse_root();
        }
        let q = self.parse_rational()?;
        if self.eat(b'*') {
            let root = self.parse_root()?;
            Ok(Cyclotomic::from_rational(q) * root)
        } else {
            Ok(Cyclotomic::from_rational(q))
        }
    }

    fn parse_value(&mut self) -> Result<Cyclotomic, ExactMathError> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut term = self.parse_term()?;
        if negative {
            term = -term;
        }
        let mut acc = term;
        loop {
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = acc + t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.parse_term()?;
                    acc = acc - t;
                }
                Some(_) => return Err(self.error("unexpected character")),
            }
        }
        Ok(acc)
    }
}
