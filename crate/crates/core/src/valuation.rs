//! Discrete valuations of polynomial coefficients.
//!
//! Two concrete valuations are provided: the `p`-adic valuation on the
//! integers, and the order of vanishing at `u = 0` on polynomials in `u`
//! with rational coefficients. The latter realises the degree valuation on
//! `K[1/x]` after substituting `u = 1/x`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::ValuationError;
use crate::poly::IntPoly;

/// A value in `N ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }
}

impl Add for ExtendedNat {
    type Output = ExtendedNat;

    fn add(self, rhs: ExtendedNat) -> ExtendedNat {
        match (self, rhs) {
            (ExtendedNat::Finite(a), ExtendedNat::Finite(b)) => ExtendedNat::Finite(a + b),
            _ => ExtendedNat::Infinity,
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => write!(f, "inf"),
        }
    }
}

/// Finite values serialize as JSON integers, infinity as the string `"inf"`.
impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => s.serialize_u64(*v),
            ExtendedNat::Infinity => s.serialize_str("inf"),
        }
    }
}

/// Valuations of the coefficients `a_0, ..., a_n` of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationSequence {
    pub values: Vec<ExtendedNat>,
    pub label: String,
}

impl ValuationSequence {
    /// Panics if the last entry is infinite, since that would not describe a
    /// leading coefficient.
    pub fn new(values: Vec<ExtendedNat>, label: impl Into<String>) -> Self {
        assert!(
            values.last().is_some_and(|v| v.is_finite()),
            "leading coefficient must have finite valuation"
        );
        ValuationSequence {
            values,
            label: label.into(),
        }
    }

    /// Convenience constructor for tests and examples: `None` is infinity.
    pub fn from_options(values: &[Option<u64>], label: &str) -> Self {
        Self::new(
            values
                .iter()
                .map(|v| v.map_or(ExtendedNat::Infinity, ExtendedNat::Finite))
                .collect(),
            label,
        )
    }

    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, i: usize) -> ExtendedNat {
        self.values[i]
    }
}

/// Deterministic primality. Below 2^64 this is Miller-Rabin with the first
/// twelve primes as witnesses, which is exact in that range. Larger inputs
/// are trial divided up to 10^6; surviving values are reported as undecided.
pub fn is_prime(n: &BigInt) -> Result<bool, ValuationError> {
    if n < &BigInt::from(2) {
        return Ok(false);
    }
    if let Some(small) = n.to_u64() {
        return Ok(is_prime_u64(small));
    }
    let mut d = 2u64;
    while d <= 1_000_000 {
        if (n % d).is_zero() {
            return Ok(false);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    Err(ValuationError::PrimalityUndecided(n.clone()))
}

pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Fails unless `p` is a prime.
pub fn require_prime(p: &BigInt) -> Result<(), ValuationError> {
    if p < &BigInt::from(2) {
        return Err(ValuationError::BelowTwo(p.clone()));
    }
    if is_prime(p)? {
        Ok(())
    } else {
        Err(ValuationError::NotPrime(p.clone()))
    }
}

/// Exponent of `p` in `a`; infinite for `a = 0`. Assumes `p` is already
/// known to be prime.
pub(crate) fn padic_valuation_unchecked(p: &BigInt, a: &BigInt) -> ExtendedNat {
    if a.is_zero() {
        return ExtendedNat::Infinity;
    }
    let mut v = 0u64;
    let mut rest = a.abs();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return ExtendedNat::Finite(v);
        }
        rest = q;
        v += 1;
    }
}

pub fn padic_valuation(p: &BigInt, a: &BigInt) -> Result<ExtendedNat, ValuationError> {
    require_prime(p)?;
    Ok(padic_valuation_unchecked(p, a))
}

pub fn padic_label(p: &BigInt) -> String {
    format!("{p}-adic")
}

pub fn padic_sequence(f: &IntPoly, p: &BigInt) -> Result<ValuationSequence, ValuationError> {
    if f.is_zero() {
        return Err(ValuationError::ZeroPolynomial);
    }
    require_prime(p)?;
    Ok(ValuationSequence::new(
        f.coeffs()
            .iter()
            .map(|a| padic_valuation_unchecked(p, a))
            .collect(),
        padic_label(p),
    ))
}

/// A polynomial in the local parameter `u` with rational coefficients,
/// ascending. The zero element is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SeriesCoefficient {
    terms: Vec<BigRational>,
}

impl SeriesCoefficient {
    pub fn new(mut terms: Vec<BigRational>) -> Self {
        while terms.last().is_some_and(Zero::is_zero) {
            terms.pop();
        }
        SeriesCoefficient { terms }
    }

    pub fn from_i64s(terms: &[i64]) -> Self {
        Self::new(
            terms
                .iter()
                .map(|&t| BigRational::from_integer(t.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        SeriesCoefficient::default()
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `u^k`.
    pub fn u_pow(k: usize) -> Self {
        let mut terms = vec![BigRational::zero(); k + 1];
        terms[k] = BigRational::one();
        SeriesCoefficient { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[BigRational] {
        &self.terms
    }

    /// Order of vanishing at `u = 0`.
    pub fn order(&self) -> ExtendedNat {
        match self.terms.iter().position(|t| !t.is_zero()) {
            Some(i) => ExtendedNat::Finite(i as u64),
            None => ExtendedNat::Infinity,
        }
    }

    /// Parses a comma-separated ascending list of rationals such as
    /// `1,-1` or `0,1/2`. The empty string is zero.
    pub fn parse(text: &str) -> Result<Self, ValuationError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::zero());
        }
        let terms = text
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<BigRational>()
                    .ok()
                    .filter(|_| !t.is_empty())
                    .ok_or_else(|| ValuationError::SeriesSyntax(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(terms))
    }
}

impl Add for &SeriesCoefficient {
    type Output = SeriesCoefficient;

    fn add(self, rhs: &SeriesCoefficient) -> SeriesCoefficient {
        let n = self.terms.len().max(rhs.terms.len());
        SeriesCoefficient::new(
            (0..n)
                .map(|i| {
                    let a = self.terms.get(i).cloned().unwrap_or_else(BigRational::zero);
                    let b = rhs.terms.get(i).cloned().unwrap_or_else(BigRational::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl Mul for &SeriesCoefficient {
    type Output = SeriesCoefficient;

    fn mul(self, rhs: &SeriesCoefficient) -> SeriesCoefficient {
        if self.is_zero() || rhs.is_zero() {
            return SeriesCoefficient::zero();
        }
        let mut out = vec![BigRational::zero(); self.terms.len() + rhs.terms.len() - 1];
        for (i, a) in self.terms.iter().enumerate() {
            for (j, b) in rhs.terms.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        SeriesCoefficient::new(out)
    }
}

/// Parses the `;`-separated coefficient syntax used by the CLI, e.g.
/// `0,1;;0,1` for `[u, 0, u]`.
pub fn parse_series_polynomial(text: &str) -> Result<Vec<SeriesCoefficient>, ValuationError> {
    text.split(';').map(SeriesCoefficient::parse).collect()
}

pub const UADIC_LABEL: &str = "u-adic";

pub fn uadic_sequence(coeffs: &[SeriesCoefficient]) -> Result<ValuationSequence, ValuationError> {
    match coeffs.last() {
        Some(c) if !c.is_zero() => {}
        _ => return Err(ValuationError::ZeroLeading),
    }
    Ok(ValuationSequence::new(
        coeffs.iter().map(SeriesCoefficient::order).collect(),
        UADIC_LABEL,
    ))
}

/// Largest absolute constant term whose prime factors are collected
/// automatically.
pub const FACTOR_LIMIT: u64 = 1_000_000_000_000;

/// Prime factorisation of `n <= 10^12` by trial division up to 10^6.
/// Returns `None` if `n` is zero or exceeds the limit.
pub fn factor_small(n: &BigInt) -> Option<Vec<(u64, u32)>> {
    let n = n.abs().to_u64().filter(|&v| v != 0 && v <= FACTOR_LIMIT)?;
    Some(trial_factor(n))
}

fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Primes up to `bound` by sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut k = i * i;
            while k <= n {
                composite[k] = true;
                k += i;
            }
        }
    }
    out
}

/// Where a candidate prime came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeSource {
    TrialDivision,
    ConstantTerm,
    User,
}

/// Candidate primes for the valuation criteria. The set is never claimed
/// complete: primes above the trial bound that divide only large
/// coefficients are missed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidatePrimes {
    #[serde(serialize_with = "crate::ser::bigints")]
    pub primes: Vec<BigInt>,
    #[serde(skip)]
    pub sources: Vec<Vec<PrimeSource>>,
    pub constant_term_factored: bool,
    pub complete: bool,
}

/// Union of the primes up to `trial_bound` dividing some nonzero
/// `a_0, ..., a_{n-1}`, the prime factors of `a_0` when `|a_0| <= 10^12`,
/// and `user_primes`. Zero coefficients do not contribute (every prime
/// divides them).
pub fn candidate_primes(
    f: &IntPoly,
    trial_bound: u64,
    user_primes: &[BigInt],
) -> Result<CandidatePrimes, ValuationError> {
    let n = f.degree().ok_or(ValuationError::ZeroPolynomial)?;
    for p in user_primes {
        require_prime(p)?;
    }
    let mut found: std::collections::BTreeMap<BigInt, Vec<PrimeSource>> = Default::default();
    let lower: Vec<&BigInt> = f.coeffs()[..n].iter().filter(|c| !c.is_zero()).collect();
    for p in primes_up_to(trial_bound) {
        let pb = BigInt::from(p);
        if lower.iter().any(|c| (*c % &pb).is_zero()) {
            found.entry(pb).or_default().push(PrimeSource::TrialDivision);
        }
    }
    let a0 = f.constant_term();
    let factored = match factor_small(&a0) {
        Some(factors) => {
            for (p, _) in factors {
                found
                    .entry(BigInt::from(p))
                    .or_default()
                    .push(PrimeSource::ConstantTerm);
            }
            true
        }
        None => false,
    };
    for p in user_primes {
        found.entry(p.clone()).or_default().push(PrimeSource::User);
    }
    let (primes, sources) = found
        .into_iter()
        .map(|(p, mut s)| {
            s.sort();
            s.dedup();
            (p, s)
        })
        .unzip();
    Ok(CandidatePrimes {
        primes,
        sources,
        constant_term_factored: factored,
        complete: false,
    })
}
