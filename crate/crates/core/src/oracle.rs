//! Brute-force factorisation by Kronecker's method.
//!
//! This is deliberately independent of every valuation and Newton polygon
//! routine so it can serve as ground truth for them. It is exponential and
//! capped at degree 8.
//!
//! A factor of degree `<= e` is determined by its values at `e + 1` integer
//! points, and each such value divides the value of `f` there. The search
//! walks the divisor tuples in a fixed order, building the candidate's
//! Newton divided differences incrementally. For an integer polynomial at
//! integer nodes every divided difference is an integer, which prunes most
//! branches early. The top difference is the leading coefficient, so it is
//! drawn from the divisors of `a_n` instead of the last point's divisors.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::OracleError;
use crate::exec::{self, Execution};
use crate::poly::IntPoly;

pub const ORACLE_DEGREE_CAP: usize = 8;

/// Sample values beyond this magnitude are not factored.
const VALUE_LIMIT: u64 = 1 << 62;

/// `0, 1, -1, 2, -2, ...`
fn sample_point(i: usize) -> i64 {
    let k = i.div_ceil(2) as i64;
    if i % 2 == 1 {
        k
    } else {
        -k
    }
}

/// Divisors of `|v|` ordered by absolute value then sign (`1, -1, 2, -2, ...`);
/// only the positive ones when `positive_only`.
fn signed_divisors(v: u64, positive_only: bool) -> Vec<i128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v.is_multiple_of(d) {
            small.push(d);
            if d != v / d {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    let mut out = Vec::with_capacity(small.len() * 2);
    for d in small {
        out.push(d as i128);
        if !positive_only {
            out.push(-(d as i128));
        }
    }
    out
}

fn normalize(g: IntPoly) -> IntPoly {
    if g.leading().is_some_and(Signed::is_negative) {
        -&g
    } else {
        g
    }
}

struct Search<'a> {
    f: &'a IntPoly,
    nodes: Vec<i128>,
    values: Vec<i128>,
    divisors: Vec<Vec<i128>>,
    lead_divisors: Vec<i128>,
}

impl Search<'_> {
    /// Depth-first over nodes `k..e-1`, with `row[r] = g[x_{k-1-r}..x_{k-1}]`
    /// and `newton[r] = g[x_0..x_r]` for the nodes fixed so far.
    fn descend(&self, k: usize, row: &[i128], newton: &mut Vec<i128>) -> Option<IntPoly> {
        let e = self.nodes.len() - 1;
        if k == e {
            return self.close(row, newton);
        }
        for &y in &self.divisors[k] {
            let Some(next) = self.extend_row(k, row, y) else {
                continue;
            };
            newton.push(*next.last().expect("nonempty"));
            if let Some(g) = self.descend(k + 1, &next, newton) {
                return Some(g);
            }
            newton.pop();
        }
        None
    }

    fn extend_row(&self, k: usize, row: &[i128], y: i128) -> Option<Vec<i128>> {
        let mut next = Vec::with_capacity(k + 1);
        next.push(y);
        for r in 1..=k {
            let num = next[r - 1] - row[r - 1];
            let den = self.nodes[k] - self.nodes[k - r];
            if num % den != 0 {
                return None;
            }
            next.push(num / den);
        }
        Some(next)
    }

    /// Last node: the leading coefficient ranges over divisors of `a_n`,
    /// which fixes the value there.
    fn close(&self, row: &[i128], newton: &[i128]) -> Option<IntPoly> {
        let e = self.nodes.len() - 1;
        let xe = self.nodes[e];
        let target = self.values[e];
        // value at x_e of the partial Newton form through c_{e-1}
        let mut partial = 0i128;
        for (r, c) in newton.iter().enumerate().rev() {
            partial = partial * (xe - self.nodes[r]) + c;
        }
        let span: i128 = self.nodes[..e].iter().map(|x| xe - x).product();
        let _ = row;
        for &lead in &self.lead_divisors {
            let y = partial + lead * span;
            if y == 0 || target % y != 0 {
                continue;
            }
            let mut coeffs = newton.to_vec();
            coeffs.push(lead);
            let g = newton_to_poly(&coeffs, &self.nodes);
            if let Ok(Some(_)) = self.f.exact_divide(&g) {
                return Some(normalize(g));
            }
        }
        None
    }
}

fn newton_to_poly(c: &[i128], nodes: &[i128]) -> IntPoly {
    let mut acc: Vec<BigInt> = vec![BigInt::from(*c.last().expect("nonempty"))];
    for r in (0..c.len() - 1).rev() {
        // acc = acc * (x - x_r) + c_r
        let xr = BigInt::from(nodes[r]);
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * &xr;
        }
        next[0] += BigInt::from(c[r]);
        acc = next;
    }
    IntPoly::new(acc)
}

fn check_input(f: &IntPoly) -> Result<usize, OracleError> {
    let n = f.degree().ok_or(OracleError::Precondition)?;
    if n > ORACLE_DEGREE_CAP {
        return Err(OracleError::DegreeCap {
            degree: n,
            cap: ORACLE_DEGREE_CAP,
        });
    }
    if n < 2 || f.constant_term().is_zero() || !f.is_primitive() {
        return Err(OracleError::Precondition);
    }
    Ok(n)
}

fn small_abs(v: &BigInt) -> Result<u64, OracleError> {
    v.abs()
        .to_u64()
        .filter(|&a| a <= VALUE_LIMIT)
        .ok_or_else(|| OracleError::ValueTooLarge(v.clone()))
}

/// A nontrivial factor of degree at most `max_half_degree`, or `None`.
pub fn kronecker_find_factor(
    f: &IntPoly,
    max_half_degree: usize,
) -> Result<Option<IntPoly>, OracleError> {
    kronecker_find_factor_with(f, max_half_degree, Execution::default())
}

/// As [`kronecker_find_factor`]; with [`Execution::Parallel`] the branches
/// for the first sample value are explored concurrently, and the earliest
/// branch in enumeration order wins.
pub fn kronecker_find_factor_with(
    f: &IntPoly,
    max_half_degree: usize,
    exec: Execution,
) -> Result<Option<IntPoly>, OracleError> {
    let n = check_input(f)?;
    let top = max_half_degree.min(n - 1);
    let lead = small_abs(f.leading().expect("nonzero"))?;
    let lead_divisors = signed_divisors(lead, false);
    let mut nodes = Vec::new();
    let mut values = Vec::new();
    let mut divisors = Vec::new();
    for e in 1..=top {
        while nodes.len() < e + 1 {
            let x = sample_point(nodes.len());
            let y = f.evaluate(&BigInt::from(x));
            if y.is_zero() {
                return Ok(Some(IntPoly::from_i64s(&[-x, 1])));
            }
            let abs = small_abs(&y)?;
            // g and -g are both divisors; fixing g(0) > 0 keeps one of each pair
            divisors.push(signed_divisors(abs, nodes.is_empty()));
            values.push(y.to_i128().expect("bounded"));
            nodes.push(x as i128);
        }
        let search = Search {
            f,
            nodes: nodes[..=e].to_vec(),
            values: values[..=e].to_vec(),
            divisors: divisors[..=e].to_vec(),
            lead_divisors: lead_divisors.clone(),
        };
        let found = exec::find_map_first(exec, &search.divisors[0], |&y0| {
            let mut newton = vec![y0];
            search.descend(1, &[y0], &mut newton)
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Complete factorisation `unit * content * prod factor^multiplicity`.
/// Factors are primitive with positive leading coefficient, sorted by degree
/// then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: i8,
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone() * BigInt::from(self.unit));
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m as usize);
        }
        acc
    }

    /// Irreducible up to content: a single nonconstant factor of
    /// multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m as usize).sum()
    }

    /// Factors repeated according to multiplicity.
    pub fn flattened(&self) -> Vec<&IntPoly> {
        self.factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g, *m as usize))
            .collect()
    }

    /// Every split of the irreducible factors into two nonempty groups,
    /// as the pair of products. Each unordered split appears once.
    pub fn bipartitions(&self) -> Vec<(IntPoly, IntPoly)> {
        let items = self.flattened();
        let k = items.len();
        if k < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        // the first item always goes left so each split is produced once
        for mask in 0..(1u32 << (k - 1)) {
            let full = (mask << 1) | 1;
            if full == (1u32 << k) - 1 {
                continue;
            }
            let mut left = IntPoly::one();
            let mut right = IntPoly::one();
            for (i, g) in items.iter().enumerate() {
                if full >> i & 1 == 1 {
                    left = &left * g;
                } else {
                    right = &right * g;
                }
            }
            out.push((left, right));
        }
        out
    }
}

impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            #[serde(serialize_with = "crate::ser::bigints")]
            coefficients: &'a [BigInt],
            multiplicity: u32,
        }
        let entries: Vec<Entry<'_>> = self
            .factors
            .iter()
            .map(|(g, m)| Entry {
                coefficients: g.coeffs(),
                multiplicity: *m,
            })
            .collect();
        let mut st = s.serialize_struct("Factorization", 5)?;
        st.serialize_field("unit", &self.unit)?;
        st.serialize_field("content", &self.content.to_string())?;
        st.serialize_field("factors", &entries)?;
        st.serialize_field("factor_count", &self.factor_count())?;
        st.serialize_field("irreducible", &self.is_irreducible())?;
        st.end()
    }
}

fn split_recursive(g: IntPoly, exec: Execution, out: &mut Vec<IntPoly>) -> Result<(), OracleError> {
    let n = g.degree().expect("nonzero");
    if n <= 1 {
        out.push(g);
        return Ok(());
    }
    match kronecker_find_factor_with(&g, n / 2, exec)? {
        None => out.push(g),
        Some(h) => {
            let q = g.exact_divide(&h)?.expect("factor divides");
            split_recursive(normalize(h), exec, out)?;
            split_recursive(normalize(q), exec, out)?;
        }
    }
    Ok(())
}

pub fn factor_completely(f: &IntPoly) -> Result<Factorization, OracleError> {
    factor_completely_with(f, Execution::default())
}

pub fn factor_completely_with(f: &IntPoly, exec: Execution) -> Result<Factorization, OracleError> {
    let n = f.degree().ok_or(crate::error::PolyError::ZeroPolynomial)?;
    if n > ORACLE_DEGREE_CAP {
        return Err(OracleError::DegreeCap {
            degree: n,
            cap: ORACLE_DEGREE_CAP,
        });
    }
    let unit: i8 = if f.leading().expect("nonzero").is_negative() { -1 } else { 1 };
    let content = f.content()?;
    let prim = normalize(f.primitive_part()?);
    let (shift, core) = prim.shift_out_x();
    let mut pieces = vec![IntPoly::monomial(1); shift];
    if core.degree().unwrap_or(0) > 0 {
        split_recursive(core, exec, &mut pieces)?;
    }
    pieces.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    for g in pieces {
        match factors.last_mut() {
            Some((h, m)) if *h == g => *m += 1,
            _ => factors.push((g, 1)),
        }
    }
    Ok(Factorization {
        unit,
        content,
        factors,
    })
}

/// Whether every factorisation `f = f1 * f2` has a factor of degree at
/// least `bound`, checked over all splits of the complete factorisation.
pub fn verify_degree_bound_claim(f: &IntPoly, bound: usize) -> Result<bool, OracleError> {
    let fac = factor_completely(f)?;
    let n = f.degree().expect("nonzero");
    let degrees: Vec<usize> = fac
        .flattened()
        .iter()
        .map(|g| g.degree().expect("nonzero"))
        .collect();
    if degrees.len() < 2 {
        return Ok(bound <= n);
    }
    let k = degrees.len();
    let ok = (1u32..(1u32 << k) - 1).all(|mask| {
        let left: usize = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| degrees[i]).sum();
        left.max(n - left) >= bound
    });
    Ok(ok)
}
