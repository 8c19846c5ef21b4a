//! The JSON analysis report.
//!
//! Criteria run on the primitive part of the input with any power of `x`
//! divided out. Per-prime work is independent and may run concurrently;
//! results are merged in ascending prime order so the report is a
//! deterministic function of the input and options.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{certify_roots_exceed, RootCertificate};
use crate::criteria::{
    check_classical_dumas, check_corollary3, check_corollary4, check_theorem2, check_theorem5,
    constant_split_predictions, find_theorem1_witnesses, verdict_from_witnesses,
    ConstantTermPrediction, DegreeBoundWitness, MultiPrimeWitness, Status, Verdict,
};
use crate::error::{BoundsError, CriteriaError, NewtonError, OracleError, PolyError, ValuationError};
use crate::exec::{self, Execution};
use crate::newton::{finite_points, lower_hull, LatticePoint, NewtonPolygon};
use crate::oracle::{factor_completely_with, verify_degree_bound_claim, Factorization};
use crate::poly::IntPoly;
use crate::valuation::{
    candidate_primes, padic_sequence, parse_series_polynomial, uadic_sequence, CandidatePrimes,
    SeriesCoefficient, ValuationSequence,
};

pub const SCHEMA_VERSION: u32 = 1;

/// JSON Schema for [`AnalysisReport`].
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

pub const DEFAULT_TRIAL_BOUND: u64 = 10_000;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub primes: Vec<BigInt>,
    pub trial_bound: u64,
    pub oracle: bool,
    pub exec: Execution,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            primes: Vec::new(),
            trial_bound: DEFAULT_TRIAL_BOUND,
            oracle: false,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputSection {
    pub text: String,
    pub mode: &'static str,
    #[serde(serialize_with = "crate::ser::opt_bigints")]
    pub coefficients: Option<Vec<BigInt>>,
    #[serde(serialize_with = "crate::ser::opt_series")]
    pub series: Option<Vec<SeriesCoefficient>>,
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeSection {
    #[serde(serialize_with = "crate::ser::bigint")]
    pub prime: BigInt,
    pub valuations: ValuationSequence,
    pub newton_polygon: NewtonPolygon,
    pub witnesses: Vec<DegreeBoundWitness>,
    pub classical_dumas: Option<DegreeBoundWitness>,
    pub predictions: Vec<ConstantTermPrediction>,
    pub theorem2: Verdict,
    pub corollary3: Verdict,
    pub corollary4: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Theorem5Section {
    pub status: Status,
    pub witness: Option<MultiPrimeWitness>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    #[serde(serialize_with = "crate::ser::big_ratio")]
    pub radius: BigRational,
    pub certificate: Option<RootCertificate>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UadicSection {
    pub valuations: ValuationSequence,
    pub newton_polygon: NewtonPolygon,
    pub witnesses: Vec<DegreeBoundWitness>,
    pub predictions: Vec<ConstantTermPrediction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverallVerdict {
    pub status: Status,
    pub criterion: Option<String>,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub prime: Option<BigInt>,
    pub bound: Option<usize>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSection {
    pub factorization: Factorization,
    /// Whether the overall verdict is consistent with the factorisation.
    pub consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: InputSection,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub content: Option<BigInt>,
    #[serde(serialize_with = "crate::ser::opt_bigints")]
    pub primitive_part: Option<Vec<BigInt>>,
    pub shift: usize,
    #[serde(serialize_with = "crate::ser::opt_bigints")]
    pub analyzed: Option<Vec<BigInt>>,
    pub candidate_primes: Option<CandidatePrimes>,
    pub primes: Vec<PrimeSection>,
    pub degree_bound: Verdict,
    pub theorem5: Option<Theorem5Section>,
    pub root_certificates: Vec<CertificateRecord>,
    pub uadic: Option<UadicSection>,
    pub verdict: OverallVerdict,
    pub oracle: Option<OracleSection>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `0` certified irreducible, `2` some bound, `3` inconclusive.
    pub fn exit_code(&self) -> i32 {
        exit_code(self.verdict.status)
    }

    /// One titled panel per analysed valuation, for [`crate::svg::render_panels`].
    pub fn svg_panels(&self) -> Vec<(String, NewtonPolygon, Vec<LatticePoint>)> {
        let mut out: Vec<_> = self
            .primes
            .iter()
            .map(|s| {
                (
                    s.valuations.label.clone(),
                    s.newton_polygon.clone(),
                    finite_points(&s.valuations),
                )
            })
            .collect();
        if let Some(u) = &self.uadic {
            out.push((
                u.valuations.label.clone(),
                u.newton_polygon.clone(),
                finite_points(&u.valuations),
            ));
        }
        out
    }
}

pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::CertifiedIrreducible => 0,
        Status::FactorDegreeBound | Status::FactorCountBound => 2,
        Status::Inconclusive => 3,
    }
}

struct Candidate {
    status: Status,
    criterion: String,
    prime: Option<BigInt>,
    bound: Option<usize>,
}

/// Strongest status; among equals the larger bound (a count bound is
/// better when smaller), then the earliest candidate.
fn strongest(candidates: Vec<Candidate>) -> Option<Candidate> {
    let mut best: Option<Candidate> = None;
    for c in candidates {
        let better = match &best {
            None => true,
            Some(b) if c.status.strength() != b.status.strength() => {
                c.status.strength() > b.status.strength()
            }
            Some(b) => match c.status {
                Status::FactorDegreeBound => c.bound > b.bound,
                Status::FactorCountBound => c.bound < b.bound,
                _ => false,
            },
        };
        if better {
            best = Some(c);
        }
    }
    best
}

fn analyze_prime(
    f: &IntPoly,
    p: &BigInt,
    cert: Option<&RootCertificate>,
) -> Result<PrimeSection, ReportError> {
    let seq = padic_sequence(f, p)?;
    let np = lower_hull(&seq)?;
    Ok(PrimeSection {
        prime: p.clone(),
        witnesses: find_theorem1_witnesses(&seq),
        classical_dumas: check_classical_dumas(&seq),
        predictions: constant_split_predictions(&seq),
        theorem2: check_theorem2(f, p, cert)?,
        corollary3: check_corollary3(f, p, cert)?,
        corollary4: check_corollary4(f, p, cert)?,
        newton_polygon: np,
        valuations: seq,
    })
}

/// `|a_0| / p^{v_p(a_0)}` for each prime.
fn cofactor(f: &IntPoly, p: &BigInt) -> BigRational {
    let mut a = f.constant_term().magnitude().clone();
    let pm = p.magnitude();
    while (&a % pm).is_zero() {
        a /= pm;
    }
    BigRational::from_integer(BigInt::from(a))
}

fn theorem5_section(
    f: &IntPoly,
    cert_one: Option<&RootCertificate>,
) -> Theorem5Section {
    match check_theorem5(f, cert_one) {
        Ok(Some(w)) => Theorem5Section {
            status: Status::FactorCountBound,
            witness: Some(w),
            note: None,
        },
        Ok(None) => Theorem5Section {
            status: Status::Inconclusive,
            witness: None,
            note: Some(
                "fewer than two primes in a_0, a prime without an index, or no certificate of radius 1"
                    .into(),
            ),
        },
        Err(e) => Theorem5Section {
            status: Status::Inconclusive,
            witness: None,
            note: Some(format!("not applicable: {e}")),
        },
    }
}

fn certificate(f: &IntPoly, d: &BigRational) -> Result<Option<RootCertificate>, ReportError> {
    Ok(certify_roots_exceed(f, d)?)
}

/// Full analysis of an integer polynomial given as text.
pub fn analyze_polynomial(text: &str, opts: &AnalysisOptions) -> Result<AnalysisReport, ReportError> {
    let f = IntPoly::parse(text)?;
    let degree = f.degree().ok_or(PolyError::ZeroPolynomial)?;
    if degree == 0 {
        return Err(PolyError::ConstantPolynomial.into());
    }
    let content = f.content()?;
    let prim = f.primitive_part()?;
    let (shift, core) = prim.shift_out_x();
    let core_degree = core.degree().expect("nonzero");
    let mut notes = Vec::new();
    if content != BigInt::from(1) {
        notes.push(format!("content {content} removed; verdict concerns the primitive part"));
    }

    let oracle = if opts.oracle {
        Some(factor_completely_with(&prim, opts.exec)?)
    } else {
        None
    };

    let mut report = AnalysisReport {
        schema: SCHEMA_VERSION,
        input: InputSection {
            text: text.to_string(),
            mode: "polynomial",
            coefficients: Some(f.coeffs().to_vec()),
            series: None,
            degree,
        },
        content: Some(content),
        primitive_part: Some(prim.coeffs().to_vec()),
        shift,
        analyzed: Some(core.coeffs().to_vec()),
        candidate_primes: None,
        primes: Vec::new(),
        degree_bound: verdict_from_witnesses(core_degree, Vec::new()),
        theorem5: None,
        root_certificates: Vec::new(),
        uadic: None,
        verdict: OverallVerdict {
            status: Status::Inconclusive,
            criterion: None,
            prime: None,
            bound: None,
            notes: Vec::new(),
        },
        oracle: None,
    };

    if core_degree == 0 {
        notes.push(format!("the primitive part is x^{shift}"));
        report.candidate_primes = Some(candidate_primes(&prim, opts.trial_bound, &opts.primes)?);
        report.verdict.notes = notes;
        report.oracle = oracle.map(|fac| oracle_section(&prim, fac, &report.verdict));
        return Ok(report);
    }

    let cands = candidate_primes(&core, opts.trial_bound, &opts.primes)?;
    let mut certs: BTreeMap<BigRational, Option<RootCertificate>> = BTreeMap::new();
    let one = BigRational::from_integer(1.into());
    for d in cands.primes.iter().map(|p| cofactor(&core, p)).chain([one.clone()]) {
        if let std::collections::btree_map::Entry::Vacant(slot) = certs.entry(d) {
            let c = certificate(&core, slot.key())?;
            slot.insert(c);
        }
    }
    let sections = exec::map(opts.exec, &cands.primes, |p| {
        let d = cofactor(&core, p);
        analyze_prime(&core, p, certs[&d].as_ref())
    });
    let sections = sections.into_iter().collect::<Result<Vec<_>, _>>()?;

    let all_witnesses: Vec<DegreeBoundWitness> =
        sections.iter().flat_map(|s| s.witnesses.iter().cloned()).collect();
    let mut degree_bound = verdict_from_witnesses(core_degree, all_witnesses);
    degree_bound.witnesses.sort_by_key(|w| std::cmp::Reverse(w.bound));
    let theorem5 = theorem5_section(&core, certs[&one].as_ref());

    let mut candidates = Vec::new();
    for s in &sections {
        if let Some(w) = &s.classical_dumas {
            candidates.push(Candidate {
                status: Status::CertifiedIrreducible,
                criterion: "classical_dumas".into(),
                prime: Some(s.prime.clone()),
                bound: Some(w.bound),
            });
        }
    }
    if let Some(best) = degree_bound.witnesses.first() {
        let prime = sections
            .iter()
            .find(|s| s.valuations.label == best.valuation_label)
            .map(|s| s.prime.clone());
        candidates.push(Candidate {
            status: degree_bound.status,
            criterion: degree_bound.criterion.into(),
            prime,
            bound: degree_bound.bound,
        });
    }
    for s in &sections {
        for v in [&s.theorem2, &s.corollary3, &s.corollary4] {
            candidates.push(Candidate {
                status: v.status,
                criterion: v.criterion.into(),
                prime: Some(s.prime.clone()),
                bound: v.bound,
            });
        }
    }
    if let Some(w) = &theorem5.witness {
        candidates.push(Candidate {
            status: Status::FactorCountBound,
            criterion: "theorem5".into(),
            prime: None,
            bound: Some(w.factor_count_bound),
        });
    }

    let mut verdict = match strongest(candidates) {
        Some(c) if c.status != Status::Inconclusive => OverallVerdict {
            status: c.status,
            criterion: Some(c.criterion),
            prime: c.prime,
            bound: c.bound,
            notes: Vec::new(),
        },
        _ => OverallVerdict {
            status: Status::Inconclusive,
            criterion: None,
            prime: None,
            bound: None,
            notes: Vec::new(),
        },
    };
    if cands.primes.is_empty() {
        notes.push("no candidate primes".into());
    }
    if shift > 0 {
        downgrade_for_shift(&mut verdict, shift, core_degree, &mut notes);
    }
    verdict.notes = notes;

    report.candidate_primes = Some(cands);
    report.primes = sections;
    report.degree_bound = degree_bound;
    report.theorem5 = Some(theorem5);
    report.root_certificates = certs
        .into_iter()
        .map(|(radius, certificate)| CertificateRecord {
            radius,
            certificate,
        })
        .collect();
    report.oracle = oracle.map(|fac| oracle_section(&prim, fac, &verdict));
    report.verdict = verdict;
    Ok(report)
}

/// Results about `g` transfer to `x^s g`: a degree bound survives, a count
/// bound grows by `s`, and irreducibility of `g` becomes the bound `deg g`.
fn downgrade_for_shift(verdict: &mut OverallVerdict, shift: usize, core_degree: usize, notes: &mut Vec<String>) {
    notes.push(format!("x^{shift} divides the input; criteria were applied to the cofactor"));
    match verdict.status {
        Status::CertifiedIrreducible if core_degree >= 2 => {
            verdict.status = Status::FactorDegreeBound;
            verdict.bound = Some(core_degree);
        }
        Status::CertifiedIrreducible => {
            *verdict = OverallVerdict {
                status: Status::Inconclusive,
                criterion: None,
                prime: None,
                bound: None,
                notes: Vec::new(),
            };
        }
        Status::FactorCountBound => {
            verdict.bound = verdict.bound.map(|r| r + shift);
        }
        Status::FactorDegreeBound | Status::Inconclusive => {}
    }
}

fn oracle_section(prim: &IntPoly, fac: Factorization, verdict: &OverallVerdict) -> OracleSection {
    let consistent = match (verdict.status, verdict.bound) {
        (Status::CertifiedIrreducible, _) => fac.is_irreducible(),
        (Status::FactorDegreeBound, Some(b)) => {
            verify_degree_bound_claim(prim, b).expect("degree already checked")
        }
        (Status::FactorCountBound, Some(r)) => fac.factor_count() <= r,
        _ => true,
    };
    OracleSection {
        factorization: fac,
        consistent,
    }
}

/// Analysis of a polynomial whose coefficients are polynomials in the
/// local parameter `u`, under the `u`-adic valuation.
pub fn analyze_uadic(text: &str) -> Result<AnalysisReport, ReportError> {
    let coeffs = parse_series_polynomial(text)?;
    let seq = uadic_sequence(&coeffs)?;
    let degree = seq.degree();
    let np = lower_hull(&seq)?;
    let witnesses = find_theorem1_witnesses(&seq);
    let predictions = constant_split_predictions(&seq);
    let degree_bound = verdict_from_witnesses(degree, witnesses.clone());
    let verdict = OverallVerdict {
        status: degree_bound.status,
        criterion: (degree_bound.status != Status::Inconclusive).then(|| degree_bound.criterion.to_string()),
        prime: None,
        bound: degree_bound.bound,
        notes: Vec::new(),
    };
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        input: InputSection {
            text: text.to_string(),
            mode: "uadic",
            coefficients: None,
            series: Some(coeffs),
            degree,
        },
        content: None,
        primitive_part: None,
        shift: 0,
        analyzed: None,
        candidate_primes: None,
        primes: Vec::new(),
        degree_bound,
        theorem5: None,
        root_certificates: Vec::new(),
        uadic: Some(UadicSection {
            valuations: seq,
            newton_polygon: np,
            witnesses,
            predictions,
        }),
        verdict,
        oracle: None,
    })
}
