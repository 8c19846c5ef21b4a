//! Newton polygon irreducibility certificates for integer polynomials.
//!
//! The pipeline is: parse a polynomial ([`poly`]), compute coefficient
//! valuations for a prime or for the local parameter `u` ([`valuation`]),
//! build the Newton polygon ([`newton`]), and run the edge-based criteria
//! ([`criteria`]), some of which need a root-location certificate
//! ([`bounds`]). Every claim can be cross-checked against the brute-force
//! factoriser in [`oracle`]. [`report`] assembles everything into the JSON
//! document emitted by the command-line tool, and [`svg`] draws polygons.

pub mod bounds;
pub mod criteria;
pub mod error;
pub mod exec;
pub mod newton;
pub mod oracle;
mod parse;
pub mod poly;
pub mod report;
mod ser;
pub mod svg;
pub mod valuation;

pub use error::{BoundsError, CriteriaError, NewtonError, OracleError, PolyError, ValuationError};
pub use exec::Execution;
pub use num_bigint::BigInt;
pub use poly::IntPoly;
