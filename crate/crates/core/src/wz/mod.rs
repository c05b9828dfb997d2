//! Creative-telescoping certificate checks.
//!
//! A certificate for `F(n) = sum_i f(i, n)` is a term `g = (R(i,n)/D(n)) * h(i,n)`
//! together with polynomials `c_0(n), ..., c_r(n)` such that
//! `sum_j c_j(n) f(i, n + j) = g(i + 1, n) - g(i, n)`, `g(0, n) = 0` and `g`
//! vanishes for large `i`. Summing over `i` then gives the recurrence
//! `sum_j c_j(n) F(n + j) = 0`.

mod bivariate;
pub mod certificate;
mod linear;
pub mod sums;
pub mod term;

use thiserror::Error;

pub use bivariate::BivariatePolynomial;
pub use certificate::{
    builtin_certificate, builtin_certificates, verify_certificate, CertificateFile, CertificateSpec, Check,
    Condition, VerificationReport,
};
pub use linear::LinearForm;
pub use term::{BinomialFactor, FactoredRational, HypergeometricTerm};

use crate::expr::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WzError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed certificate: {0}")]
    Structure(String),
    #[error("cannot parse {field}: {source}")]
    Parse { field: String, source: ParseError },
    #[error("certificate JSON: {0}")]
    Json(String),
    #[error("unknown certificate '{0}'")]
    UnknownCertificate(String),
}
