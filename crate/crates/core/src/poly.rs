//! Dense integer polynomials.
//!
//! Coefficients are stored in ascending order, so `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector and every
//! other polynomial has a nonzero last coefficient.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::PolyError;

/// Largest exponent (and largest product degree) accepted by the parser.
pub const DEFAULT_DEGREE_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut p = Self::monomial(m);
        p.coeffs[0] -= 1;
        Self::new(p.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Number of leading zero coefficients, i.e. the largest `s` with `x^s | f`.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Splits `f = x^s * g` with `g(0) != 0` and returns `(s, g)`.
    pub fn shift_out_x(&self) -> (usize, IntPoly) {
        let s = self.trailing_zeros();
        (s, IntPoly::new(self.coeffs[s.min(self.coeffs.len())..].to_vec()))
    }

    pub fn content(&self) -> Result<BigInt, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c)))
    }

    /// Divides out the (positive) content; the sign of the leading
    /// coefficient is preserved.
    pub fn primitive_part(&self) -> Result<IntPoly, PolyError> {
        let c = self.content()?;
        Ok(IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        })
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_ok_and(|c| c.is_one())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Returns `q` with `self = divisor * q` and integer coefficients, or
    /// `None` when no such `q` exists.
    pub fn exact_divide(&self, divisor: &IntPoly) -> Result<Option<IntPoly>, PolyError> {
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok(Some(IntPoly::zero()));
        };
        if nd < dd {
            return Ok(None);
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Ok(None);
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * b;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(IntPoly::new(quot)))
    }

    pub fn pow(&self, mut e: usize) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }

    /// Approximate coefficients for numeric work.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Parses either an expression in `x` or an ascending comma-separated
    /// coefficient list.
    pub fn parse(text: &str) -> Result<IntPoly, PolyError> {
        crate::parse::parse_polynomial(text, DEFAULT_DEGREE_CAP)
    }

    pub fn parse_with_cap(text: &str, degree_cap: usize) -> Result<IntPoly, PolyError> {
        crate::parse::parse_polynomial(text, degree_cap)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Exact product of two polynomials.
pub fn multiply(f: &IntPoly, g: &IntPoly) -> IntPoly {
    f * g
}

/// Formats as an expression in `x`, highest degree first, e.g. `x^3 - 2`.
/// The output parses back to the same polynomial.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{abs}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{abs}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Greatest common divisor over the rationals, returned as a primitive
/// integer polynomial with positive leading coefficient. Uses a primitive
/// remainder sequence so intermediate coefficients stay small.
pub fn rational_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let normalize = |p: IntPoly| -> IntPoly {
        if p.is_zero() {
            return p;
        }
        let p = p.primitive_part().expect("nonzero");
        if p.leading().is_some_and(Signed::is_negative) {
            -&p
        } else {
            p
        }
    };
    let mut x = normalize(a.clone());
    let mut y = normalize(b.clone());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_remainder(&x, &y);
        x = y;
        y = normalize(r);
    }
    x
}

/// `lc(g)^(deg f - deg g + 1) * f mod g`, computed over the integers.
fn pseudo_remainder(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let dg = g.degree().expect("nonzero divisor");
    let lead = g.leading().expect("nonzero divisor").clone();
    let mut rem = f.coeffs.clone();
    while rem.len() > dg && !rem.is_empty() {
        let k = rem.len() - 1;
        let top = rem[k].clone();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        for (i, b) in g.coeffs.iter().enumerate() {
            rem[k - dg + i] -= &top * b;
        }
        rem.pop();
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    IntPoly::new(rem)
}

/// Euler's totient by trial factorisation.
pub fn totient(mut m: u64) -> u64 {
    let mut result = m;
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

/// The `m`-th cyclotomic polynomial, computed by dividing `x^m - 1` by every
/// `Phi_d` with `d | m`, `d < m`.
pub fn cyclotomic(m: usize) -> IntPoly {
    assert!(m >= 1, "cyclotomic index starts at 1");
    let mut table: Vec<Option<IntPoly>> = vec![None; m + 1];
    cyclotomic_memo(m, &mut table)
}

fn cyclotomic_memo(m: usize, table: &mut [Option<IntPoly>]) -> IntPoly {
    if let Some(p) = &table[m] {
        return p.clone();
    }
    let mut acc = IntPoly::x_pow_minus_one(m);
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_memo(d, table);
            acc = acc
                .exact_divide(&phi_d)
                .expect("nonzero divisor")
                .expect("cyclotomic factors divide x^m - 1");
        }
    }
    table[m] = Some(acc.clone());
    acc
}

/// Search bound for cyclotomic divisors of a degree-`n` polynomial.
pub fn cyclotomic_search_limit(n: usize) -> usize {
    6.max(2 * n * n)
}

/// Least `m` such that `Phi_m` divides `f`, if any.
///
/// Each `m` up to [`cyclotomic_search_limit`] is screened with
/// `gcd(f, x^m - 1)` over the rationals. Indices whose totient exceeds
/// `deg f` are skipped since `Phi_m` has degree `phi(m)`. Because the
/// search is ascending, the first nontrivial gcd comes from `Phi_m` itself;
/// the hit is then confirmed by exact division.
pub fn has_cyclotomic_factor(f: &IntPoly) -> Result<Option<usize>, PolyError> {
    let n = match f.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(n) => n,
    };
    for m in 1..=cyclotomic_search_limit(n) {
        if totient(m as u64) > n as u64 {
            continue;
        }
        let g = rational_gcd(f, &IntPoly::x_pow_minus_one(m));
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let phi = cyclotomic(m);
        if f.exact_divide(&phi)?.is_some() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[-2, 0, 0, 1]).degree(), Some(3));
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[2, 4, 6]).content().unwrap(), BigInt::from(2));
        assert_eq!(p(&[-2, 0, 0, 1]).content().unwrap(), BigInt::from(1));
        assert_eq!(p(&[4, 4, 2, 2]).content().unwrap(), BigInt::from(2));
        assert_eq!(p(&[-6, -9]).content().unwrap(), BigInt::from(3));
        assert_eq!(IntPoly::zero().content(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn primitive_part_examples() {
        assert_eq!(p(&[4, 4, 2, 2]).primitive_part().unwrap(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[1, 1]).primitive_part().unwrap(), p(&[1, 1]));
        assert_eq!(p(&[-6, 9]).primitive_part().unwrap(), p(&[-2, 3]));
        assert_eq!(p(&[6, -9]).primitive_part().unwrap(), p(&[2, -3]));
        assert!(IntPoly::zero().primitive_part().is_err());
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply(&p(&[1, 1]), &p(&[2, 0, 1])), p(&[2, 2, 1, 1]));
        let f = p(&[3, -1, 4]);
        assert_eq!(multiply(&f, &p(&[1])), f);
        assert!(multiply(&p(&[0]), &f).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[2, 2, 1, 1]).evaluate(&BigInt::from(-1)), BigInt::zero());
        assert_eq!(p(&[-2, 0, 0, 1]).evaluate(&BigInt::zero()), BigInt::from(-2));
        assert_eq!(p(&[2, 2, 2, 1, 1]).evaluate(&BigInt::one()), BigInt::from(8));
    }

    #[test]
    fn exact_divide_examples() {
        let f = p(&[2, 2, 1, 1]);
        assert_eq!(f.exact_divide(&p(&[1, 1])).unwrap(), Some(p(&[2, 0, 1])));
        assert_eq!(p(&[1, 0, 1]).exact_divide(&p(&[1, 1])).unwrap(), None);
        assert_eq!(f.exact_divide(&p(&[1])).unwrap(), Some(f.clone()));
        assert_eq!(f.exact_divide(&IntPoly::zero()), Err(PolyError::DivisionByZero));
        // rational but not integral quotient
        assert_eq!(p(&[1, 1]).exact_divide(&p(&[2])).unwrap(), None);
        assert_eq!(p(&[1, 2]).exact_divide(&p(&[1, 2, 1])).unwrap(), None);
    }

    #[test]
    fn shift_and_trailing_zeros() {
        let f = p(&[0, 0, 3, 1]);
        assert_eq!(f.trailing_zeros(), 2);
        assert_eq!(f.shift_out_x(), (2, p(&[3, 1])));
        assert_eq!(p(&[5]).shift_out_x(), (0, p(&[5])));
    }

    #[test]
    fn cyclotomic_table() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        for m in 1..40 {
            assert_eq!(cyclotomic(m).degree(), Some(totient(m as u64) as usize));
        }
    }

    #[test]
    fn cyclotomic_detection_examples() {
        assert_eq!(has_cyclotomic_factor(&p(&[2, 2, 1, 1])).unwrap(), Some(2));
        assert_eq!(has_cyclotomic_factor(&p(&[1, 1, 1])).unwrap(), Some(3));
        assert_eq!(has_cyclotomic_factor(&p(&[2, 2, 2, 1, 1])).unwrap(), None);
        assert_eq!(has_cyclotomic_factor(&p(&[-1, 0, 0, 0, 0, 0, 1])).unwrap(), Some(1));
        // Phi_12 times something coprime to all cyclotomics
        let f = multiply(&cyclotomic(12), &p(&[3, 1]));
        assert_eq!(has_cyclotomic_factor(&f).unwrap(), Some(12));
        assert_eq!(has_cyclotomic_factor(&p(&[7])), Err(PolyError::ConstantPolynomial));
    }

    #[test]
    fn rational_gcd_basics() {
        let a = multiply(&p(&[1, 1]), &p(&[2, 0, 1]));
        let b = multiply(&p(&[1, 1]), &p(&[-3, 1]));
        assert_eq!(rational_gcd(&a, &b), p(&[1, 1]));
        assert_eq!(rational_gcd(&p(&[4, 2]), &p(&[6, 3])), p(&[2, 1]));
        assert_eq!(rational_gcd(&p(&[1, 0, 1]), &p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn display_round_trips() {
        for c in [&[-2i64, 0, 0, 1][..], &[2, 2, 1, 1], &[0, -1], &[5], &[0, 0, -3, 0, 1]] {
            let f = p(c);
            assert_eq!(IntPoly::parse(&f.to_string()).unwrap(), f, "{f}");
        }
        assert_eq!(p(&[-2, 0, 0, 1]).to_string(), "x^3 - 2");
    }
}
