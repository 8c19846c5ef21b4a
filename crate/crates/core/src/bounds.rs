//! Root-location certificates.
//!
//! Two exact sufficient conditions guarantee that every complex root of `f`
//! has modulus strictly greater than a radius `d`:
//!
//! * dominant constant term: `|a_0| > |a_1| d + ... + |a_n| d^n`;
//! * weakly decreasing positive coefficients `a_0 >= ... >= a_n >= 1`
//!   (all roots satisfy `|z| >= 1`) together with the absence of cyclotomic
//!   factors, giving `|z| > 1`.
//!
//! [`numeric_root_moduli`] is a floating-point Durand-Kerner solver used only
//! to corroborate certificates; it never produces one.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::BoundsError;
use crate::poly::{has_cyclotomic_factor, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMethod {
    DominantConstant,
    MonotoneNoncyclotomic,
}

/// Every root of the certified polynomial has modulus `> radius`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCertificate {
    pub method: CertificateMethod,
    #[serde(serialize_with = "crate::ser::big_ratio")]
    pub radius: BigRational,
    pub strict: bool,
}

impl RootCertificate {
    /// Whether this certificate shows all root moduli exceed `d`.
    pub fn covers(&self, d: &BigRational) -> bool {
        &self.radius >= d
    }
}

fn require_positive(d: &BigRational) -> Result<(), BoundsError> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(BoundsError::NonPositiveRadius)
    }
}

fn require_nonconstant(f: &IntPoly) -> Result<usize, BoundsError> {
    match f.degree() {
        None => Err(crate::error::PolyError::ZeroPolynomial.into()),
        Some(0) => Err(crate::error::PolyError::ConstantPolynomial.into()),
        Some(n) => Ok(n),
    }
}

/// `|a_0| > sum_{i>=1} |a_i| d^i`, evaluated exactly.
pub fn check_dominant_constant(f: &IntPoly, d: &BigRational) -> Result<bool, BoundsError> {
    require_positive(d)?;
    require_nonconstant(f)?;
    let mut power = BigRational::one();
    let mut tail = BigRational::zero();
    for a in &f.coeffs()[1..] {
        power *= d;
        tail += BigRational::from_integer(a.abs()) * &power;
    }
    Ok(BigRational::from_integer(f.constant_term().abs()) > tail)
}

/// `a_0 >= a_1 >= ... >= a_n >= 1`.
pub fn check_monotone_decreasing(f: &IntPoly) -> bool {
    let c = f.coeffs();
    !c.is_empty()
        && c.iter().all(|a| a >= &BigInt::one())
        && c.windows(2).all(|w| w[0] >= w[1])
}

/// Tries the dominant-constant test at radius `d`, then (for `d <= 1`) the
/// monotone test with cyclotomic exclusion.
pub fn certify_roots_exceed(
    f: &IntPoly,
    d: &BigRational,
) -> Result<Option<RootCertificate>, BoundsError> {
    require_positive(d)?;
    require_nonconstant(f)?;
    if !f.constant_term().is_zero() && check_dominant_constant(f, d)? {
        return Ok(Some(RootCertificate {
            method: CertificateMethod::DominantConstant,
            radius: d.clone(),
            strict: true,
        }));
    }
    if d <= &BigRational::one() && check_monotone_decreasing(f) && has_cyclotomic_factor(f)?.is_none()
    {
        return Ok(Some(RootCertificate {
            method: CertificateMethod::MonotoneNoncyclotomic,
            radius: BigRational::one(),
            strict: true,
        }));
    }
    Ok(None)
}

pub const DEFAULT_ROOT_TOL: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 1_000;

/// Approximate moduli of all complex roots, ascending. Heuristic only.
///
/// Durand-Kerner iteration on the monic normalisation, started from points
/// on the circle of radius `1 + max |a_i / a_n|` at angles offset by 0.4
/// radians. A root estimate is accepted once `|f(z)| <= tol * max(1, sum
/// |a_i| |z|^i)`, which also terminates on multiple roots where the
/// correction step stalls.
pub fn numeric_root_moduli(f: &IntPoly, tol: f64) -> Result<Vec<f64>, BoundsError> {
    let n = require_nonconstant(f)?;
    let raw = f.to_f64();
    let lead = raw[n];
    let c: Vec<f64> = raw.iter().map(|a| a / lead).collect();
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let eval = |x: Complex64| -> (Complex64, f64) {
        let mut acc = Complex64::zero();
        let mut scale = 0.0;
        let r = x.norm();
        for a in c.iter().rev() {
            acc = acc * x + a;
            scale = scale * r + a.abs();
        }
        (acc, scale)
    };

    for _ in 0..MAX_ITERATIONS {
        for k in 0..n {
            let (value, _) = eval(z[k]);
            let mut denom = Complex64::one();
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    denom *= z[k] - zj;
                }
            }
            if denom.norm() == 0.0 {
                // coincident estimates; nudge apart deterministically
                z[k] += Complex64::new(tol.sqrt(), tol.sqrt());
                continue;
            }
            z[k] -= value / denom;
        }
        let converged = z.iter().all(|&x| {
            let (value, scale) = eval(x);
            value.norm() <= tol * scale.max(1.0)
        });
        if converged {
            let mut moduli: Vec<f64> = z.iter().map(|x| x.norm()).collect();
            moduli.sort_by(f64::total_cmp);
            return Ok(moduli);
        }
    }
    Err(BoundsError::NoConvergence {
        iterations: MAX_ITERATIONS,
    })
}
