//! Irreducibility and factorisation criteria driven by Newton polygons.
//!
//! The central test looks for index pairs `(j, l)` with `l < j` such that
//!
//! 1. `v(a_j) = 0`,
//! 2. `v(a_l) / (j - l) < v(a_i) / (j - i)` for every `i < j`, `i != l`,
//! 3. `gcd(v(a_l), j - l) = 1`.
//!
//! Then `(l, v(a_l)) -> (j, 0)` is an edge of the Newton polygon with no
//! interior lattice points, so every factorisation `f = f1 * f2` has a
//! factor of degree at least `j - l`. The pair `(n, 0)` gives
//! irreducibility outright. Infinite valuations satisfy any strict upper
//! comparison, and all comparisons are cross-multiplied integers.
//!
//! A witness additionally requires `v(a_l) >= 1`: with `v(a_l) = 0` the
//! coprimality condition forces `j - l = 1`, whose bound is vacuous.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bounds::{CertificateMethod, RootCertificate};
use crate::error::CriteriaError;
use crate::exec::{self, Execution};
use crate::poly::IntPoly;
use crate::valuation::{
    factor_small, padic_sequence, padic_valuation_unchecked, require_prime, ExtendedNat,
    ValuationSequence,
};

use ExtendedNat::{Finite, Infinity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    CertifiedIrreducible,
    FactorDegreeBound,
    FactorCountBound,
    Inconclusive,
}

impl Status {
    /// Ordering used to pick the overall verdict; larger is stronger.
    pub fn strength(self) -> u8 {
        match self {
            Status::CertifiedIrreducible => 3,
            Status::FactorDegreeBound => 2,
            Status::FactorCountBound => 1,
            Status::Inconclusive => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessConditions {
    pub leading_unit: bool,
    pub strict_minimum: bool,
    pub coprime: bool,
    /// `v(a_l) / (j - l)`, the negated slope of the certified edge.
    #[serde(serialize_with = "crate::ser::ratio64")]
    pub slope_ratio: Rational64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeBoundWitness {
    pub valuation_label: String,
    pub j: usize,
    pub ell: usize,
    pub bound: usize,
    pub v_ell: u64,
    pub conditions: WitnessConditions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstantTermPrediction {
    pub j: usize,
    pub ell: usize,
    pub predicted_valuation: u64,
    pub applies_to: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeWitness {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub prime: BigInt,
    pub multiplicity: u64,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiPrimeWitness {
    pub primes: Vec<PrimeWitness>,
    pub r: usize,
    pub factor_count_bound: usize,
    pub root_certificate: RootCertificate,
}

/// Matched coefficient pattern `v_p(a_{(k-t)m+s}) = t`, `v_p(a_{km+1}) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPattern {
    pub k: u64,
    pub m: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootRequirement {
    #[serde(serialize_with = "crate::ser::big_ratio")]
    pub radius: BigRational,
    pub satisfied: bool,
    pub method: Option<CertificateMethod>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub criterion: &'static str,
    pub bound: Option<usize>,
    pub witnesses: Vec<DegreeBoundWitness>,
    pub required_root_certificate: Option<RootRequirement>,
    pub pattern: Option<BlockPattern>,
    pub note: Option<String>,
}

impl Verdict {
    fn inconclusive(criterion: &'static str, note: impl Into<String>) -> Verdict {
        Verdict {
            status: Status::Inconclusive,
            criterion,
            bound: None,
            witnesses: Vec::new(),
            required_root_certificate: None,
            pattern: None,
            note: Some(note.into()),
        }
    }
}

fn hypothesis(condition: &'static str, reason: impl Into<String>) -> CriteriaError {
    CriteriaError::Hypothesis {
        condition,
        reason: reason.into(),
    }
}

/// `a / b < c / d` for a finite left side, positive denominators, and a
/// possibly infinite right numerator.
fn ratio_lt(a: u64, b: usize, c: ExtendedNat, d: usize) -> bool {
    match c {
        Infinity => true,
        Finite(c) => (a as u128) * (d as u128) < (c as u128) * (b as u128),
    }
}

fn check_range(seq: &ValuationSequence, j: usize, ell: usize) -> Result<(), CriteriaError> {
    let n = seq.degree();
    if ell < j && j <= n {
        Ok(())
    } else {
        Err(CriteriaError::IndexOutOfRange { j, ell, n })
    }
}

/// Evaluates the three witness conditions for `(j, l)`; the first failing
/// one is reported as an error.
fn theorem1_conditions(
    seq: &ValuationSequence,
    j: usize,
    ell: usize,
) -> Result<u64, CriteriaError> {
    check_range(seq, j, ell)?;
    if seq.get(j) != Finite(0) {
        return Err(hypothesis("i", format!("v(a_{j}) = {} is not 0", seq.get(j))));
    }
    let v_ell = match seq.get(ell) {
        Finite(v) if v > 0 => v,
        other => {
            return Err(hypothesis(
                "ii",
                format!("v(a_{ell}) = {other} gives no edge of negative slope"),
            ))
        }
    };
    for i in (0..j).filter(|&i| i != ell) {
        if !ratio_lt(v_ell, j - ell, seq.get(i), j - i) {
            return Err(hypothesis(
                "ii",
                format!("v(a_{ell})/{} is not below v(a_{i})/{}", j - ell, j - i),
            ));
        }
    }
    if v_ell.gcd(&((j - ell) as u64)) != 1 {
        return Err(hypothesis(
            "iii",
            format!("gcd({v_ell}, {}) is not 1", j - ell),
        ));
    }
    Ok(v_ell)
}

fn witness(seq: &ValuationSequence, j: usize, ell: usize, v_ell: u64) -> DegreeBoundWitness {
    DegreeBoundWitness {
        valuation_label: seq.label.clone(),
        j,
        ell,
        bound: j - ell,
        v_ell,
        conditions: WitnessConditions {
            leading_unit: true,
            strict_minimum: true,
            coprime: true,
            slope_ratio: Rational64::new(v_ell as i64, (j - ell) as i64),
        },
    }
}

/// Verifies a single `(j, l)` pair.
pub fn theorem1_witness(
    seq: &ValuationSequence,
    j: usize,
    ell: usize,
) -> Result<DegreeBoundWitness, CriteriaError> {
    theorem1_conditions(seq, j, ell).map(|v| witness(seq, j, ell, v))
}

/// All witnesses, largest bound first. Ties keep the search order
/// (`j` descending, then `l` ascending).
pub fn find_theorem1_witnesses(seq: &ValuationSequence) -> Vec<DegreeBoundWitness> {
    let n = seq.degree();
    let mut out = Vec::new();
    for j in (1..=n).rev() {
        if seq.get(j) != Finite(0) {
            continue;
        }
        for ell in 0..j {
            if let Ok(w) = theorem1_witness(seq, j, ell) {
                out.push(w);
            }
        }
    }
    out.sort_by_key(|w| std::cmp::Reverse(w.bound));
    out
}

/// The non-strict variant: `j v(a_l) <= (j - l) v(a_i)` for `i < j`,
/// `i != l`, together with `v(a_j) = 0` and `gcd(v(a_l), j - l) = 1`.
pub fn check_corollary1(
    seq: &ValuationSequence,
    j: usize,
    ell: usize,
) -> Result<bool, CriteriaError> {
    check_range(seq, j, ell)?;
    if seq.get(j) != Finite(0) {
        return Ok(false);
    }
    let Finite(v_ell) = seq.get(ell) else {
        return Ok(false);
    };
    let scaled_ok = (0..j).filter(|&i| i != ell).all(|i| match seq.get(i) {
        Infinity => true,
        Finite(v_i) => (j as u128) * (v_ell as u128) <= ((j - ell) as u128) * (v_i as u128),
    });
    Ok(scaled_ok && v_ell.gcd(&((j - ell) as u64)) == 1)
}

/// The `(n, 0)` witness if it verifies.
pub fn check_classical_dumas(seq: &ValuationSequence) -> Option<DegreeBoundWitness> {
    let n = seq.degree();
    if n == 0 {
        return None;
    }
    theorem1_witness(seq, n, 0).ok()
}

/// For a verified `(j, l)` pair, predicts that in a factorisation into two
/// nonconstant factors one factor's constant term has valuation `v(a_l)`.
///
/// When `l > 1` the segment from `(0, v(a_0))` to `(l, v(a_l))` must also be
/// an edge without interior lattice points:
/// `(v(a_0) - v(a_i)) / i < (v(a_0) - v(a_l)) / l` for `0 < i < l`, and
/// `gcd(v(a_0) - v(a_l), l) = 1`.
pub fn predict_constant_split(
    seq: &ValuationSequence,
    j: usize,
    ell: usize,
) -> Result<ConstantTermPrediction, CriteriaError> {
    let v_ell = theorem1_conditions(seq, j, ell)?;
    if ell > 1 {
        let Finite(v0) = seq.get(0) else {
            return Err(hypothesis("iv", "v(a_0) is infinite"));
        };
        // (ii) at i = 0 already forces v(a_0) > v(a_l)
        let drop_ell = v0 as i128 - v_ell as i128;
        for i in 1..ell {
            if let Finite(v_i) = seq.get(i) {
                let drop_i = v0 as i128 - v_i as i128;
                if drop_i * (ell as i128) >= drop_ell * (i as i128) {
                    return Err(hypothesis(
                        "iv",
                        format!("(l={ell}, v={v_ell}) is not a vertex below (i={i}, v={v_i})"),
                    ));
                }
            }
        }
        if (drop_ell as u64).gcd(&(ell as u64)) != 1 {
            return Err(hypothesis(
                "v",
                format!("gcd({drop_ell}, {ell}) is not 1"),
            ));
        }
    }
    Ok(ConstantTermPrediction {
        j,
        ell,
        predicted_valuation: v_ell,
        applies_to: "one of the two nonconstant factors' constant terms",
    })
}

/// Predictions for every witness whose extra hypotheses also hold.
pub fn constant_split_predictions(seq: &ValuationSequence) -> Vec<ConstantTermPrediction> {
    find_theorem1_witnesses(seq)
        .iter()
        .filter_map(|w| predict_constant_split(seq, w.j, w.ell).ok())
        .collect()
}

struct PadicSetup {
    seq: ValuationSequence,
    n: usize,
    k: u64,
    /// `|a_0| / p^k`
    cofactor: BigRational,
}

fn padic_setup(f: &IntPoly, p: &BigInt) -> Result<PadicSetup, CriteriaError> {
    let a0 = f.constant_term();
    if a0.is_zero() {
        return Err(CriteriaError::ZeroConstantTerm);
    }
    require_prime(p)?;
    if !f.is_primitive() {
        return Err(hypothesis("primitive", "content is not 1"));
    }
    let seq = padic_sequence(f, p)?;
    let k = seq.get(0).finite().expect("a_0 is nonzero");
    let pk = num_traits::pow(p.clone(), k as usize);
    Ok(PadicSetup {
        n: seq.degree(),
        seq,
        k,
        cofactor: BigRational::from_integer(a0.abs() / pk),
    })
}

/// Turns a verified index `j` (with `l = 0`) into a verdict: immediate when
/// `j = n`, otherwise conditional on a root certificate covering the radius
/// `|a_0| / p^k`.
fn conclude(
    criterion: &'static str,
    setup: &PadicSetup,
    w: DegreeBoundWitness,
    pattern: Option<BlockPattern>,
    root_cert: Option<&RootCertificate>,
) -> Verdict {
    let n = setup.n;
    let mut verdict = Verdict {
        status: Status::CertifiedIrreducible,
        criterion,
        bound: Some(n),
        witnesses: Vec::new(),
        required_root_certificate: None,
        pattern,
        note: None,
    };
    if w.j < n {
        let covering = root_cert.filter(|c| c.covers(&setup.cofactor));
        verdict.required_root_certificate = Some(RootRequirement {
            radius: setup.cofactor.clone(),
            satisfied: covering.is_some(),
            method: covering.map(|c| c.method),
        });
        if covering.is_none() {
            verdict.status = Status::Inconclusive;
            verdict.bound = None;
            verdict.note = Some(format!(
                "j = {} < n = {n}; requires every root modulus > {}",
                w.j, setup.cofactor
            ));
        }
    }
    verdict.witnesses.push(w);
    verdict
}

/// Irreducibility from an index `j` with `v_p(a_j) = 0`,
/// `v_p(a_0)/j < v_p(a_i)/(j - i)` for `0 < i < j`, `gcd(v_p(a_0), j) = 1`.
/// The largest such `j` is used.
pub fn check_theorem2(
    f: &IntPoly,
    p: &BigInt,
    root_cert: Option<&RootCertificate>,
) -> Result<Verdict, CriteriaError> {
    const NAME: &str = "theorem2";
    let setup = padic_setup(f, p)?;
    let found = (1..=setup.n)
        .rev()
        .find_map(|j| theorem1_witness(&setup.seq, j, 0).ok());
    Ok(match found {
        Some(w) => conclude(NAME, &setup, w, None, root_cert),
        None => Verdict::inconclusive(NAME, "no index j satisfies the hypotheses"),
    })
}

fn corollary3_holds(seq: &ValuationSequence, j: usize) -> bool {
    let Finite(v0) = seq.get(0) else {
        return false;
    };
    seq.get(j) == Finite(0)
        && v0 >= 1
        && (1..j).all(|i| Finite(v0) <= seq.get(i))
        && v0.gcd(&(j as u64)) == 1
}

/// As [`check_theorem2`] with the weaker middle hypothesis
/// `v_p(a_0) <= v_p(a_i)` for `0 < i < j`.
pub fn check_corollary3(
    f: &IntPoly,
    p: &BigInt,
    root_cert: Option<&RootCertificate>,
) -> Result<Verdict, CriteriaError> {
    const NAME: &str = "corollary3";
    let setup = padic_setup(f, p)?;
    let Some(j) = (1..=setup.n).rev().find(|&j| corollary3_holds(&setup.seq, j)) else {
        return Ok(Verdict::inconclusive(
            NAME,
            "no index j satisfies the hypotheses",
        ));
    };
    let v0 = setup.seq.get(0).finite().expect("checked");
    let w = witness(&setup.seq, j, 0, v0);
    Ok(conclude(NAME, &setup, w, None, root_cert))
}

/// Whether every index `j` satisfying the [`check_corollary3`] hypotheses
/// also satisfies the [`check_theorem2`] ones.
pub fn corollary3_implies_theorem2(seq: &ValuationSequence) -> bool {
    (1..=seq.degree())
        .filter(|&j| corollary3_holds(seq, j))
        .all(|j| theorem1_witness(seq, j, 0).is_ok())
}

/// Searches `m` with `km + 1 <= n` such that `v_p(a_{(k-t)m+s}) = t` exactly
/// for `t = 1..k`, `s = 1..m`, and `v_p(a_{km+1}) = 0`, where
/// `k = v_p(a_0)`.
pub fn check_corollary4(
    f: &IntPoly,
    p: &BigInt,
    root_cert: Option<&RootCertificate>,
) -> Result<Verdict, CriteriaError> {
    const NAME: &str = "corollary4";
    let setup = padic_setup(f, p)?;
    let k = setup.k;
    if k == 0 {
        return Ok(Verdict::inconclusive(NAME, "p does not divide a_0"));
    }
    let ku = k as usize;
    let seq = &setup.seq;
    let matches = |m: usize| {
        let block_ok = (1..=ku).all(|t| {
            (1..=m).all(|s| seq.get((ku - t) * m + s) == Finite(t as u64))
        });
        block_ok && seq.get(ku * m + 1) == Finite(0)
    };
    let max_m = setup.n.saturating_sub(1) / ku;
    let Some(m) = (1..=max_m).find(|&m| matches(m)) else {
        return Ok(Verdict::inconclusive(NAME, "no block length m matches"));
    };
    let j = ku * m + 1;
    let w = witness(seq, j, 0, k);
    let pattern = BlockPattern { k, m, j };
    Ok(conclude(NAME, &setup, w, Some(pattern), root_cert))
}

/// Bounds the number of irreducible factors by the number `r >= 2` of
/// distinct primes in `a_0`, given an index `j_i` for every prime `p_i`
/// (with `k_i = v_{p_i}(a_0)`) satisfying `v(a_{j_i}) = 0`,
/// `k_i / j_i < v(a_t) / (j_i - t)` for `0 < t < j_i`, `gcd(k_i, j_i) = 1`,
/// and a certificate that all roots have modulus `> 1`.
pub fn check_theorem5(
    f: &IntPoly,
    root_cert: Option<&RootCertificate>,
) -> Result<Option<MultiPrimeWitness>, CriteriaError> {
    let a0 = f.constant_term();
    if a0.is_zero() {
        return Err(CriteriaError::ZeroConstantTerm);
    }
    if a0.abs().is_one() {
        return Err(CriteriaError::UnitConstantTerm);
    }
    let factors = factor_small(&a0).ok_or_else(|| CriteriaError::ConstantTooLarge(a0.clone()))?;
    if factors.len() < 2 {
        return Ok(None);
    }
    let n = f.degree().expect("nonzero");
    let mut primes = Vec::with_capacity(factors.len());
    for (p, k) in factors {
        let p = BigInt::from(p);
        let seq = ValuationSequence::new(
            f.coeffs()
                .iter()
                .map(|a| padic_valuation_unchecked(&p, a))
                .collect(),
            crate::valuation::padic_label(&p),
        );
        let Some(j) = (1..=n).find(|&j| theorem1_witness(&seq, j, 0).is_ok()) else {
            return Ok(None);
        };
        primes.push(PrimeWitness {
            prime: p,
            multiplicity: k as u64,
            j,
        });
    }
    let Some(cert) = root_cert.filter(|c| c.covers(&BigRational::one())) else {
        return Ok(None);
    };
    let r = primes.len();
    Ok(Some(MultiPrimeWitness {
        primes,
        r,
        factor_count_bound: r,
        root_certificate: cert.clone(),
    }))
}

/// Verdict from a set of witnesses on a degree-`n` polynomial.
pub fn verdict_from_witnesses(n: usize, witnesses: Vec<DegreeBoundWitness>) -> Verdict {
    let best = witnesses.iter().map(|w| w.bound).max();
    let (status, bound) = match best {
        Some(b) if b == n => (Status::CertifiedIrreducible, Some(b)),
        Some(b) if b >= 2 => (Status::FactorDegreeBound, Some(b)),
        _ => (Status::Inconclusive, None),
    };
    Verdict {
        status,
        criterion: "theorem1",
        bound,
        note: (status == Status::Inconclusive).then(|| "no nontrivial degree bound".into()),
        witnesses,
        required_root_certificate: None,
        pattern: None,
    }
}

/// Runs the witness search for every prime (concurrently when enabled) and
/// keeps the best bound. Witnesses are listed in prime order.
pub fn best_degree_bound(
    f: &IntPoly,
    primes: &[BigInt],
    exec: Execution,
) -> Result<Verdict, CriteriaError> {
    if f.constant_term().is_zero() {
        return Err(CriteriaError::ZeroConstantTerm);
    }
    let n = f.degree().expect("nonzero");
    let per_prime = exec::map(exec, primes, |p| {
        padic_sequence(f, p).map(|seq| find_theorem1_witnesses(&seq))
    });
    let mut all = Vec::new();
    for ws in per_prime {
        all.extend(ws?);
    }
    Ok(verdict_from_witnesses(n, all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::certify_roots_exceed;

    fn seq(v: &[Option<u64>]) -> ValuationSequence {
        ValuationSequence::from_options(v, "test")
    }

    fn padic(c: &[i64], p: i64) -> ValuationSequence {
        padic_sequence(&IntPoly::from_i64s(c), &BigInt::from(p)).unwrap()
    }

    fn pairs(ws: &[DegreeBoundWitness]) -> Vec<(usize, usize, usize)> {
        ws.iter().map(|w| (w.j, w.ell, w.bound)).collect()
    }

    fn cert(f: &IntPoly, d: i64) -> Option<RootCertificate> {
        certify_roots_exceed(f, &BigRational::from_integer(d.into())).unwrap()
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn witness_examples() {
        let ws = find_theorem1_witnesses(&padic(&[2, 2, 1, 1], 2));
        assert_eq!(pairs(&ws), vec![(2, 0, 2)]);
        assert_eq!(ws[0].conditions.slope_ratio, Rational64::new(1, 2));
        assert!(matches!(
            theorem1_witness(&padic(&[2, 2, 1, 1], 2), 3, 0),
            Err(CriteriaError::Hypothesis { condition: "ii", .. })
        ));

        let ws = find_theorem1_witnesses(&padic(&[-2, 0, 0, 1], 2));
        assert_eq!(pairs(&ws), vec![(3, 0, 3)]);

        assert!(find_theorem1_witnesses(&seq(&[Some(0), Some(0)])).is_empty());
    }

    #[test]
    fn witnesses_sorted_by_bound() {
        // 8 + 4x + x^2 + x^3 at 2: [3, 2, 0, 0]
        let ws = find_theorem1_witnesses(&padic(&[8, 4, 1, 1], 2));
        let bounds: Vec<usize> = ws.iter().map(|w| w.bound).collect();
        let mut sorted = bounds.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(bounds, sorted);
    }

    #[test]
    fn corollary1_examples() {
        assert!(check_corollary1(&seq(&[Some(1), Some(2), Some(0)]), 2, 0).unwrap());
        let s = seq(&[Some(1), Some(1), Some(0)]);
        assert!(check_corollary1(&s, 2, 0).unwrap());
        assert!(theorem1_witness(&s, 2, 0).is_ok());
        assert!(!check_corollary1(&seq(&[Some(2), Some(1), Some(0)]), 2, 0).unwrap());
        assert!(matches!(
            check_corollary1(&s, 3, 0),
            Err(CriteriaError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            check_corollary1(&s, 1, 1),
            Err(CriteriaError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn corollary1_collinear_constant_term_is_not_strict() {
        // (0,2), (2,1), (4,0) are collinear: the non-strict inequality holds
        // at i = 0 but the strict one does not.
        let s = seq(&[Some(2), Some(2), Some(1), Some(2), Some(0)]);
        assert!(check_corollary1(&s, 4, 2).unwrap());
        assert!(theorem1_witness(&s, 4, 2).is_err());
    }

    #[test]
    fn classical_dumas_examples() {
        assert!(check_classical_dumas(&padic(&[-2, 0, 0, 1], 2)).is_some());
        assert!(check_classical_dumas(&padic(&[-4, 0, 1], 2)).is_none());
        let w = check_classical_dumas(&padic(&[4, 4, 2, 1], 2)).unwrap();
        assert_eq!((w.j, w.ell, w.bound), (3, 0, 3));
    }

    #[test]
    fn constant_split_examples() {
        let s = padic(&[4, 2, 2, 1], 2);
        let pred = predict_constant_split(&s, 3, 1).unwrap();
        assert_eq!(pred.predicted_valuation, 1);
        let s = padic(&[2, 2, 1, 1], 2);
        assert_eq!(predict_constant_split(&s, 2, 0).unwrap().predicted_valuation, 1);
        let s = seq(&[Some(0), Some(0)]);
        assert!(matches!(
            predict_constant_split(&s, 1, 0),
            Err(CriteriaError::Hypothesis { condition: "ii", .. })
        ));
    }

    #[test]
    fn constant_split_extra_conditions() {
        // last edge (2,2)->(3,0); (0,7) and (1,5) lie above its extension
        let s = seq(&[Some(7), Some(5), Some(2), Some(0)]);
        assert_eq!(predict_constant_split(&s, 3, 2).unwrap().predicted_valuation, 2);
        // (1,5) lies on or below the segment (0,9)->(2,2)
        let s = seq(&[Some(9), Some(5), Some(2), Some(0)]);
        assert!(theorem1_witness(&s, 3, 2).is_ok());
        assert!(matches!(
            predict_constant_split(&s, 3, 2),
            Err(CriteriaError::Hypothesis { condition: "iv", .. })
        ));
        // edge (0,8)->(2,2) has drop 6, gcd(6,2) = 2
        let s = seq(&[Some(8), None, Some(2), Some(0)]);
        assert!(theorem1_witness(&s, 3, 2).is_ok());
        assert!(matches!(
            predict_constant_split(&s, 3, 2),
            Err(CriteriaError::Hypothesis { condition: "v", .. })
        ));
    }

    #[test]
    fn theorem2_examples() {
        let f = IntPoly::from_i64s(&[2, 2, 2, 1, 1]);
        let c = cert(&f, 1);
        assert!(c.is_some());
        let v = check_theorem2(&f, &b(2), c.as_ref()).unwrap();
        assert_eq!(v.status, Status::CertifiedIrreducible);
        assert_eq!(v.witnesses[0].j, 3);
        let req = v.required_root_certificate.unwrap();
        assert!(req.satisfied);
        assert_eq!(req.radius, BigRational::one());

        let f = IntPoly::from_i64s(&[-2, 0, 0, 1]);
        let v = check_theorem2(&f, &b(2), None).unwrap();
        assert_eq!(v.status, Status::CertifiedIrreducible);
        assert!(v.required_root_certificate.is_none());

        let f = IntPoly::from_i64s(&[2, 2, 1, 1]);
        assert!(cert(&f, 1).is_none());
        let v = check_theorem2(&f, &b(2), None).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        let req = v.required_root_certificate.unwrap();
        assert!(!req.satisfied);
        assert_eq!(req.radius, BigRational::one());

        assert_eq!(
            check_theorem2(&IntPoly::from_i64s(&[0, 1, 1]), &b(2), None),
            Err(CriteriaError::ZeroConstantTerm)
        );
    }

    #[test]
    fn theorem2_radius_uses_absolute_cofactor() {
        // a_0 = -12 at p = 2: d = 3
        let f = IntPoly::from_i64s(&[-12, 2, 1, 1]);
        let v = check_theorem2(&f, &b(2), None).unwrap();
        if let Some(req) = v.required_root_certificate {
            assert_eq!(req.radius, BigRational::from_integer(b(3)));
        }
    }

    #[test]
    fn corollary3_examples() {
        let f = IntPoly::from_i64s(&[-2, 0, 0, 1]);
        assert_eq!(
            check_corollary3(&f, &b(2), None).unwrap().status,
            check_theorem2(&f, &b(2), None).unwrap().status
        );
        let f = IntPoly::from_i64s(&[4, 2, 1]);
        assert_eq!(check_corollary3(&f, &b(2), None).unwrap().status, Status::Inconclusive);
        let f = IntPoly::from_i64s(&[3, 3, 1]);
        assert_eq!(
            check_corollary3(&f, &b(3), None).unwrap().status,
            Status::CertifiedIrreducible
        );
    }

    #[test]
    fn corollary4_examples() {
        let f = IntPoly::from_i64s(&[2, 2, 2, 1, 1]);
        let v = check_corollary4(&f, &b(2), cert(&f, 1).as_ref()).unwrap();
        assert_eq!(v.status, Status::CertifiedIrreducible);
        assert_eq!(v.pattern, Some(BlockPattern { k: 1, m: 2, j: 3 }));

        let f = IntPoly::from_i64s(&[4, 4, 4, 2, 2, 1, 1]);
        let v = check_corollary4(&f, &b(2), cert(&f, 1).as_ref()).unwrap();
        assert_eq!(v.status, Status::CertifiedIrreducible);
        assert_eq!(v.pattern, Some(BlockPattern { k: 2, m: 2, j: 5 }));

        let f = IntPoly::from_i64s(&[-2, 0, 0, 1]);
        let v = check_corollary4(&f, &b(2), None).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.pattern.is_none());
        // without a certificate the pattern still matches but nothing is certified
        let f = IntPoly::from_i64s(&[2, 2, 2, 1, 1]);
        let v = check_corollary4(&f, &b(2), None).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.pattern.is_some());
    }

    #[test]
    fn theorem5_examples() {
        let f = IntPoly::from_i64s(&[6, 5, 1]);
        let w = check_theorem5(&f, cert(&f, 1).as_ref()).unwrap().unwrap();
        assert_eq!(w.factor_count_bound, 2);
        assert!(w.primes.iter().all(|p| p.j == 1));

        // roots -2, -3, -5, but neither certificate method applies at radius 1
        let f = IntPoly::from_i64s(&[30, 31, 10, 1]);
        assert!(cert(&f, 1).is_none());
        assert_eq!(check_theorem5(&f, None).unwrap(), None);
        let supplied = RootCertificate {
            method: crate::bounds::CertificateMethod::DominantConstant,
            radius: BigRational::one(),
            strict: true,
        };
        let w = check_theorem5(&f, Some(&supplied)).unwrap().unwrap();
        assert_eq!(w.r, 3);

        let f = IntPoly::from_i64s(&[6, 7, 1]);
        assert!(cert(&f, 1).is_none());
        assert_eq!(check_theorem5(&f, None).unwrap(), None);

        assert_eq!(
            check_theorem5(&IntPoly::from_i64s(&[1, 1]), None),
            Err(CriteriaError::UnitConstantTerm)
        );
        assert_eq!(
            check_theorem5(&IntPoly::from_i64s(&[0, 1]), None),
            Err(CriteriaError::ZeroConstantTerm)
        );
        let big = IntPoly::new(vec![BigInt::from(10u64).pow(13), BigInt::one()]);
        assert!(matches!(
            check_theorem5(&big, None),
            Err(CriteriaError::ConstantTooLarge(_))
        ));
        // a single prime power is out of scope, not an error
        let f = IntPoly::from_i64s(&[8, 1]);
        assert_eq!(check_theorem5(&f, cert(&f, 1).as_ref()).unwrap(), None);
    }

    #[test]
    fn best_bound_examples() {
        let v = best_degree_bound(&IntPoly::from_i64s(&[2, 2, 1, 1]), &[b(2)], Execution::Sequential)
            .unwrap();
        assert_eq!((v.status, v.bound), (Status::FactorDegreeBound, Some(2)));
        let v = best_degree_bound(&IntPoly::from_i64s(&[-2, 0, 0, 1]), &[b(2)], Execution::Parallel)
            .unwrap();
        assert_eq!(v.status, Status::CertifiedIrreducible);
        let v = best_degree_bound(&IntPoly::from_i64s(&[1, 1]), &[], Execution::Parallel).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.bound.is_none());
    }
}
