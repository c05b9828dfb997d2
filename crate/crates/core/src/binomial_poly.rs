//! Polynomials in the binomial basis.
//!
//! A polynomial `P` is stored by the coefficients `C(k, P)` of the expansion
//! `P(x) = sum_k C(k, P) * binom(x, k)`. In this basis forward shifts are a
//! one-term recurrence on the coefficients and the circle pairing
//! `P o Q = sum_k C(k, P) C(k, Q)` is a plain dot product.

use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{binom, binom_i64, binom_row};
use crate::exponents::ExponentMultiset;

/// Degree beyond which constructors refuse to build a polynomial.
pub const DEFAULT_MAX_DEGREE: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degree {degree} exceeds the configured limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shift {
    /// `P(x) -> P(x + 1)`
    Forward,
    /// `P(x) -> P(x - 1)`
    Backward,
}

/// Exact polynomial in the binomial basis, kept trimmed: the last stored
/// coefficient is nonzero, and the zero polynomial stores nothing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinomialPolynomial {
    coeffs: Vec<BigRational>,
}

fn check_degree(degree: usize, limit: usize) -> Result<(), PolyError> {
    if degree > limit {
        Err(PolyError::DegreeLimit { degree, limit })
    } else {
        Ok(())
    }
}

impl BinomialPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Builds from binomial-basis coefficients `C(0, P), C(1, P), ...`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_int_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// The unique polynomial of degree at most `d` taking the values
    /// `values[0..=d]` at `x = 0..=d`.
    pub fn from_values(values: &[BigRational]) -> Result<Self, PolyError> {
        Self::from_values_with_limit(values, DEFAULT_MAX_DEGREE)
    }

    pub fn from_values_with_limit(values: &[BigRational], max_degree: usize) -> Result<Self, PolyError> {
        if values.is_empty() {
            return Err(PolyError::InvalidArgument(
                "from_values needs at least one value".into(),
            ));
        }
        check_degree(values.len() - 1, max_degree)?;
        // C(k, P) is the k-th forward difference of the value table at 0.
        let mut diffs = values.to_vec();
        let mut coeffs = Vec::with_capacity(values.len());
        for _ in 0..values.len() {
            coeffs.push(diffs[0].clone());
            for j in 0..diffs.len() - 1 {
                diffs[j] = &diffs[j + 1] - &diffs[j];
            }
            diffs.pop();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn from_int_values<T: Into<BigInt> + Clone>(values: &[T]) -> Result<Self, PolyError> {
        let values: Vec<BigRational> = values
            .iter()
            .cloned()
            .map(|v| BigRational::from_integer(v.into()))
            .collect();
        Self::from_values(&values)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `C(k, P)`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: i64) -> BigRational {
        self.eval_big(&BigInt::from(x))
    }

    pub fn eval_big(&self, x: &BigInt) -> BigRational {
        binom_row(x, self.coeffs.len())
            .into_iter()
            .zip(&self.coeffs)
            .map(|(b, c)| c * BigRational::from_integer(b))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    pub fn shift(&self, direction: Shift) -> Self {
        let c = &self.coeffs;
        let coeffs = match direction {
            // C(k, P(x+1)) = C(k, P) + C(k+1, P)
            Shift::Forward => (0..c.len())
                .map(|k| match c.get(k + 1) {
                    Some(next) => &c[k] + next,
                    None => c[k].clone(),
                })
                .collect(),
            // Inverse of the above by back-substitution from the top.
            Shift::Backward => {
                let mut out = vec![BigRational::zero(); c.len()];
                for k in (0..c.len()).rev() {
                    out[k] = match out.get(k + 1) {
                        Some(next) => &c[k] - next,
                        None => c[k].clone(),
                    };
                }
                out
            }
        };
        Self::from_coeffs(coeffs)
    }

    /// Product, computed through value space: evaluate both factors on
    /// `0..=deg P + deg Q`, multiply pointwise, interpolate back.
    pub fn multiply(&self, other: &Self) -> Result<Self, PolyError> {
        let (Some(dp), Some(dq)) = (self.degree(), other.degree()) else {
            return Ok(Self::zero());
        };
        let degree = dp + dq;
        check_degree(degree, DEFAULT_MAX_DEGREE)?;
        let values: Vec<BigRational> = (0..=degree as i64)
            .map(|x| self.eval(x) * other.eval(x))
            .collect();
        Self::from_values(&values)
    }

    /// The circle pairing `sum_k C(k, P) C(k, Q)`.
    pub fn circle(&self, other: &Self) -> BigRational {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// True when every coefficient is an integer, which is exactly when the
    /// polynomial maps integers to integers.
    pub fn is_integer_valued(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// `binom(x + m, d)` as a polynomial in `x`.
    pub fn basis_binom_shifted(m: i64, d: i64) -> Result<Self, PolyError> {
        if d < 0 {
            return Err(PolyError::InvalidArgument(format!(
                "binomial degree must be nonnegative, got {d}"
            )));
        }
        check_degree(d as usize, DEFAULT_MAX_DEGREE)?;
        if m >= 0 {
            // Vandermonde: binom(x + m, d) = sum_i binom(m, d - i) binom(x, i)
            return Ok(Self::from_int_coeffs((0..=d).map(|i| binom_i64(m, d - i))));
        }
        let values: Vec<BigRational> = (0..=d)
            .map(|x| BigRational::from_integer(binom_i64(x + m, d)))
            .collect();
        Self::from_values(&values)
    }

    /// `F_a(x) = prod_i binom(x + a_i, a_i)`; the empty multiset gives 1.
    pub fn of_exponents(a: &ExponentMultiset) -> Result<Self, PolyError> {
        let degree = usize::try_from(a.total()).unwrap_or(usize::MAX);
        check_degree(degree, DEFAULT_MAX_DEGREE)?;
        // Evaluate the product directly on 0..=degree instead of chaining
        // pairwise multiplications.
        let values: Vec<BigRational> = (0..=degree as i64)
            .map(|x| {
                let v = a
                    .exponents()
                    .iter()
                    .map(|&e| binom_i64(x + i64::from(e), i64::from(e)))
                    .fold(BigInt::one(), |acc, b| acc * b);
                BigRational::from_integer(v)
            })
            .collect();
        Self::from_values(&values)
    }
}

impl Add for &BinomialPolynomial {
    type Output = BinomialPolynomial;

    fn add(self, rhs: Self) -> BinomialPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BinomialPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &BinomialPolynomial {
    type Output = BinomialPolynomial;

    fn sub(self, rhs: Self) -> BinomialPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BinomialPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &BinomialPolynomial {
    type Output = BinomialPolynomial;

    fn neg(self) -> BinomialPolynomial {
        BinomialPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `binom(x + m, n) o P` through values of `P` only:
/// `sum_i (-1)^i binom(n - m, i) P(n - i)`, valid for `0 <= m <= n`.
pub fn circle_binom_shifted_closed(m: u64, n: u64, p: &BinomialPolynomial) -> Result<BigRational, PolyError> {
    if m > n {
        return Err(PolyError::InvalidArgument(format!(
            "closed form needs m <= n, got m = {m}, n = {n}"
        )));
    }
    let width = n - m;
    let mut acc = BigRational::zero();
    for i in 0..=width {
        let term = BigRational::from_integer(binom_i64(width as i64, i as i64))
            * p.eval(n as i64 - i as i64);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `binom(x + n, n)^2 o P` through values of `P` only:
/// `sum_i (-1)^i binom(n, i - n) binom(i, n) P(i)`, nonzero for `n <= i <= 2n`.
pub fn circle_binom_square_closed(n: u64, p: &BinomialPolynomial) -> BigRational {
    let n_big = BigInt::from(n);
    let mut acc = BigRational::zero();
    for i in n..=2 * n {
        let weight = binom(&n_big, (i - n) as i64) * binom_i64(i as i64, n as i64);
        let term = BigRational::from_integer(weight) * p.eval(i as i64);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// True when `value` is a nonnegative integer.
pub(crate) fn is_count(value: &BigRational) -> bool {
    value.is_integer() && !value.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn poly(c: &[i64]) -> BinomialPolynomial {
        BinomialPolynomial::from_int_coeffs(c.iter().copied())
    }

    /// Oracle: the finite-difference sum `C(k) = sum_i (-1)^(k+i) binom(k,i) P(i)`
    /// written out term by term.
    fn coeff_by_difference_formula(values: &[i64], k: usize) -> BigRational {
        let mut acc = BigInt::zero();
        for (i, v) in values.iter().enumerate().take(k + 1) {
            let term = binom_i64(k as i64, i as i64) * v;
            if (k + i).is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        BigRational::from_integer(acc)
    }

    #[test]
    fn from_values_examples() {
        assert_eq!(BinomialPolynomial::from_int_values(&[1, 1, 1]).unwrap(), poly(&[1]));
        let square = BinomialPolynomial::from_int_values(&[0, 1, 4, 9]).unwrap();
        assert_eq!(square, poly(&[0, 1, 2]));
        assert_eq!(square.degree(), Some(2));
        assert_eq!(BinomialPolynomial::from_int_values(&[1, 4, 9]).unwrap(), poly(&[1, 3, 2]));
        for (values, k) in [(&[0i64, 1, 4, 9][..], 0), (&[0, 1, 4, 9], 1), (&[0, 1, 4, 9], 2), (&[1, 4, 9], 2)] {
            let p = BinomialPolynomial::from_int_values(values).unwrap();
            assert_eq!(p.coeff(k), coeff_by_difference_formula(values, k));
        }
    }

    #[test]
    fn from_values_rejects_empty_and_oversized() {
        assert!(matches!(
            BinomialPolynomial::from_values(&[]),
            Err(PolyError::InvalidArgument(_))
        ));
        let values = vec![q(1); 12];
        assert_eq!(
            BinomialPolynomial::from_values_with_limit(&values, 10),
            Err(PolyError::DegreeLimit { degree: 11, limit: 10 })
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly(&[0, 1, 2]).eval(5), q(25));
        assert_eq!(poly(&[1, 3, 2]).eval(-2), q(1));
        let f11 = BinomialPolynomial::of_exponents(&ExponentMultiset::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(f11.eval(-1), q(0));
    }

    #[test]
    fn coeff_beyond_degree_is_zero() {
        let p = poly(&[0, 1, 2]);
        assert_eq!(p.coeff(2), q(2));
        assert_eq!(p.coeff(2 + 7), q(0));
        assert_eq!(BinomialPolynomial::zero().coeff(0), q(0));
    }

    #[test]
    fn vandermonde_coefficients() {
        for n in 0..7i64 {
            for m in 0..=n {
                let p = BinomialPolynomial::basis_binom_shifted(m, n).unwrap();
                for k in 0..=n + 2 {
                    assert_eq!(p.coeff(k as usize), BigRational::from_integer(binom_i64(m, n - k)));
                }
            }
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(BinomialPolynomial::one().shift(Shift::Forward), BinomialPolynomial::one());
        assert_eq!(BinomialPolynomial::one().shift(Shift::Backward), BinomialPolynomial::one());
        assert_eq!(poly(&[0, 1, 2]).shift(Shift::Forward), poly(&[1, 3, 2]));
        assert_eq!(poly(&[1, 3, 2]).shift(Shift::Backward), poly(&[0, 1, 2]));
        assert!(BinomialPolynomial::zero().shift(Shift::Backward).is_zero());
    }

    #[test]
    fn multiply_examples() {
        let p = poly(&[3, -1, 4]);
        assert_eq!(p.multiply(&BinomialPolynomial::one()).unwrap(), p);
        let x1 = BinomialPolynomial::basis_binom_shifted(1, 1).unwrap();
        assert_eq!(x1.multiply(&x1).unwrap(), poly(&[1, 3, 2]));
        assert!(BinomialPolynomial::zero().multiply(&p).unwrap().is_zero());
    }

    #[test]
    fn circle_examples() {
        assert_eq!(poly(&[0, 1, 2]).circle(&poly(&[1, 3, 2])), q(7));
        let p = poly(&[5, -2, 7, 1]);
        for k in 0..3 {
            let basis = BinomialPolynomial::basis_binom_shifted(0, k).unwrap();
            assert_eq!(basis.circle(&p), p.coeff(k as usize));
        }
    }

    #[test]
    fn basis_binom_shifted_examples() {
        for d in 0..5 {
            let p = BinomialPolynomial::basis_binom_shifted(0, d).unwrap();
            let mut unit = vec![0i64; d as usize + 1];
            unit[d as usize] = 1;
            assert_eq!(p, poly(&unit));
        }
        assert_eq!(BinomialPolynomial::basis_binom_shifted(1, 1).unwrap(), poly(&[1, 1]));
        for n in 1..=3 {
            assert_eq!(BinomialPolynomial::basis_binom_shifted(n, n).unwrap().eval(0), q(1));
        }
        assert!(BinomialPolynomial::basis_binom_shifted(2, -1).is_err());
    }

    #[test]
    fn basis_binom_shifted_negative_offset() {
        // binom(x - 2, 3) checked pointwise, including negative arguments.
        let p = BinomialPolynomial::basis_binom_shifted(-2, 3).unwrap();
        for x in -6..10 {
            assert_eq!(p.eval(x), BigRational::from_integer(binom_i64(x - 2, 3)));
        }
    }

    #[test]
    fn exponent_polynomial_examples() {
        assert_eq!(
            BinomialPolynomial::of_exponents(&ExponentMultiset::unit()).unwrap(),
            BinomialPolynomial::one()
        );
        let f11 = BinomialPolynomial::of_exponents(&ExponentMultiset::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(f11, poly(&[1, 3, 2]));
        let f = BinomialPolynomial::of_exponents(&ExponentMultiset::new(vec![3, 2, 2]).unwrap()).unwrap();
        assert_eq!(f.degree(), Some(7));
        assert_eq!(f.eval(0), q(1));
    }

    #[test]
    fn shifted_closed_form_examples() {
        let p = poly(&[2, -3, 1, 4]);
        for n in 0..=4 {
            assert_eq!(circle_binom_shifted_closed(n, n, &p).unwrap(), p.eval(n as i64));
        }
        assert_eq!(circle_binom_shifted_closed(0, 1, &poly(&[0, 1, 2])).unwrap(), q(1));
        assert_eq!(circle_binom_shifted_closed(1, 2, &BinomialPolynomial::one()).unwrap(), q(0));
        assert_eq!(
            BinomialPolynomial::basis_binom_shifted(1, 2).unwrap().circle(&BinomialPolynomial::one()),
            q(0)
        );
        assert!(circle_binom_shifted_closed(3, 2, &p).is_err());
    }

    #[test]
    fn square_closed_form_examples() {
        let b2 = BinomialPolynomial::basis_binom_shifted(0, 2).unwrap();
        assert_eq!(circle_binom_square_closed(1, &b2), q(2));
        assert_eq!(poly(&[1, 3, 2]).circle(&b2), q(2));
        let p = poly(&[4, 0, -2, 9]);
        assert_eq!(circle_binom_square_closed(0, &p), p.eval(0));
        assert_eq!(BinomialPolynomial::one().circle(&p), p.eval(0));

        // n = 2 against C(k, binom(x+2,2)^2) from the difference formula.
        let values: Vec<i64> = (0..5).map(|x: i64| ((x + 2) * (x + 1) / 2).pow(2)).collect();
        for k in 0..=4 {
            let basis = BinomialPolynomial::basis_binom_shifted(0, k).unwrap();
            assert_eq!(
                circle_binom_square_closed(2, &basis),
                coeff_by_difference_formula(&values, k as usize)
            );
        }
    }

    #[test]
    fn integer_valued_detection() {
        assert!(poly(&[1, 3, 2]).is_integer_valued());
        let half = BinomialPolynomial::constant(BigRational::new(1.into(), 2.into()));
        assert!(!half.is_integer_valued());
    }
}
