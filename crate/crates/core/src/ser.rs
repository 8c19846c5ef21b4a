//! Serde helpers. Integers of unbounded size are written as decimal strings
//! and rationals as `{"num": "...", "den": "..."}` so nothing is lost in
//! JSON's number type.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use serde::ser::SerializeStruct;
use serde::Serializer;

use crate::valuation::SeriesCoefficient;

pub fn bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

pub fn opt_bigint<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => bigint(b, s),
        None => s.serialize_none(),
    }
}

pub fn opt_bigints<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => bigints(b, s),
        None => s.serialize_none(),
    }
}

/// Each coefficient as the list of its `u`-power terms.
pub fn opt_series<S: Serializer>(v: &Option<Vec<SeriesCoefficient>>, s: S) -> Result<S::Ok, S::Error> {
    struct Terms<'a>(&'a SeriesCoefficient);
    impl serde::Serialize for Terms<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(self.0.terms().iter().map(Fraction))
        }
    }
    struct Fraction<'a>(&'a BigRational);
    impl serde::Serialize for Fraction<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            big_ratio(self.0, s)
        }
    }
    match v {
        Some(c) => s.collect_seq(c.iter().map(Terms)),
        None => s.serialize_none(),
    }
}

pub fn ratio64<S: Serializer>(v: &Rational64, s: S) -> Result<S::Ok, S::Error> {
    fraction(&v.numer().to_string(), &v.denom().to_string(), s)
}

pub fn big_ratio<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    fraction(&v.numer().to_string(), &v.denom().to_string(), s)
}

fn fraction<S: Serializer>(num: &str, den: &str, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 2)?;
    st.serialize_field("num", num)?;
    st.serialize_field("den", den)?;
    st.end()
}
