use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{BivariatePolynomial, LinearForm, WzError};
use crate::arith::binom;

/// `binom(top, bottom)^power` with integer-linear arguments.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialFactor {
    pub top: LinearForm,
    pub bottom: LinearForm,
    pub power: u32,
}

/// `coefficient * (-1)^sign(i,n) * prod binom(top, bottom)^power`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HypergeometricTerm {
    pub coefficient: BigInt,
    pub sign: LinearForm,
    pub factors: Vec<BinomialFactor>,
}

impl HypergeometricTerm {
    /// Exact value under the generalized binomial (zero for negative bottoms,
    /// falling factorial otherwise).
    pub fn eval(&self, i: i64, n: i64) -> BigInt {
        let mut acc = self.coefficient.clone();
        for factor in &self.factors {
            if acc.is_zero() {
                return acc;
            }
            let top = BigInt::from(factor.top.eval(i, n));
            let b = binom(&top, factor.bottom.eval(i, n));
            acc *= num_traits::pow(b, factor.power as usize);
        }
        if self.sign.eval(i, n).rem_euclid(2) == 1 {
            -acc
        } else {
            acc
        }
    }

    pub fn shifted(&self, di: i64, dn: i64) -> Self {
        Self {
            coefficient: self.coefficient.clone(),
            sign: self.sign.shifted(di, dn),
            factors: self
                .factors
                .iter()
                .map(|f| BinomialFactor {
                    top: f.top.shifted(di, dn),
                    bottom: f.bottom.shifted(di, dn),
                    power: f.power,
                })
                .collect(),
        }
    }

    /// `(N, D)` with `t(i+di, n+dn) * D = t(i, n) * N` at every integer point.
    ///
    /// Built factor by factor from falling-factorial products and deliberately
    /// left uncancelled: a common linear factor of `N` and `D` can vanish at a
    /// point where the reduced fraction no longer describes the binomials
    /// (negative tops), so cancelling would break the pointwise relation.
    pub fn shift_quotient(&self, di: i64, dn: i64) -> Result<(BivariatePolynomial, BivariatePolynomial), WzError> {
        if di == 0 && dn == 0 {
            return Err(WzError::InvalidArgument("shift (0, 0) has no quotient".into()));
        }
        let shifted = self.shifted(di, dn);
        let mut num = BivariatePolynomial::constant(self.coefficient.clone());
        let mut den = BivariatePolynomial::constant(self.coefficient.clone());
        if shifted.sign.minus(&self.sign).c0.rem_euclid(2) == 1 {
            num = -&num;
        }
        // x^(m) / x^(0) style products: rising (x+1)...(x+m) for m > 0,
        // x(x-1)...(x+m+1) for m < 0 on the other side.
        let mut push = |x: LinearForm, m: i64, power: u32, upper: bool| {
            for j in 0..m.abs() {
                let form = if m > 0 { x.offset(j + 1) } else { x.offset(-j) };
                let f = BivariatePolynomial::from(form).pow(power);
                if (m > 0) == upper {
                    num = &num * &f;
                } else {
                    den = &den * &f;
                }
            }
        };
        for (after, before) in shifted.factors.iter().zip(&self.factors) {
            let p = constant_difference(&after.top, &before.top, "top")?;
            let q = constant_difference(&after.bottom, &before.bottom, "bottom")?;
            push(before.top, p, before.power, true);
            push(before.bottom, q, before.power, false);
            push(before.top.minus(&before.bottom), p - q, before.power, false);
        }
        Ok((num, den))
    }
}

/// `constant * prod num / prod den` with every factor a primitive linear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRational {
    pub constant: BigRational,
    pub num: BTreeMap<LinearForm, u32>,
    pub den: BTreeMap<LinearForm, u32>,
}

impl FactoredRational {
    pub fn one() -> Self {
        Self {
            constant: BigRational::one(),
            num: BTreeMap::new(),
            den: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero()
    }

    fn push(&mut self, form: LinearForm, power: u32, in_numerator: bool) -> Result<(), WzError> {
        if power == 0 {
            return Ok(());
        }
        if form.is_constant() {
            if form.c0 == 0 {
                if in_numerator {
                    *self = Self {
                        constant: BigRational::zero(),
                        ..Self::one()
                    };
                    return Ok(());
                }
                return Err(WzError::Structure("term ratio divides by an identically zero factor".into()));
            }
            let c = num_traits::pow(BigRational::from_integer(form.c0.into()), power as usize);
            if in_numerator {
                self.constant *= c;
            } else {
                self.constant /= c;
            }
            return Ok(());
        }
        let (scale, prim) = form.primitive();
        let c = num_traits::pow(BigRational::from_integer(scale.into()), power as usize);
        let (same, other) = if in_numerator {
            self.constant *= c;
            (&mut self.num, &mut self.den)
        } else {
            self.constant /= c;
            (&mut self.den, &mut self.num)
        };
        // Cancel against the opposite side first.
        let mut remaining = power;
        if let Some(m) = other.get_mut(&prim) {
            let cancel = (*m).min(remaining);
            *m -= cancel;
            remaining -= cancel;
            if *m == 0 {
                other.remove(&prim);
            }
        }
        if remaining > 0 {
            *same.entry(prim).or_insert(0) += remaining;
        }
        Ok(())
    }

    fn mul_num(&mut self, form: LinearForm, power: u32) -> Result<(), WzError> {
        if self.is_zero() {
            return Ok(());
        }
        self.push(form, power, true)
    }

    fn mul_den(&mut self, form: LinearForm, power: u32) -> Result<(), WzError> {
        if self.is_zero() {
            return Ok(());
        }
        self.push(form, power, false)
    }

    /// Multiplies in `((x + m)! / x!)^power`, a rising product when `m > 0`
    /// and the reciprocal of a falling product when `m < 0`.
    fn mul_factorial_ratio(&mut self, x: LinearForm, m: i64, power: u32, invert: bool) -> Result<(), WzError> {
        if m >= 0 {
            for j in 1..=m {
                if invert {
                    self.mul_den(x.offset(j), power)?;
                } else {
                    self.mul_num(x.offset(j), power)?;
                }
            }
        } else {
            for j in 0..-m {
                if invert {
                    self.mul_num(x.offset(-j), power)?;
                } else {
                    self.mul_den(x.offset(-j), power)?;
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, i: i64, n: i64) -> Option<BigRational> {
        let mut den = BigInt::one();
        for (form, &p) in &self.den {
            den *= num_traits::pow(BigInt::from(form.eval(i, n)), p as usize);
        }
        if den.is_zero() {
            return None;
        }
        let mut num = BigInt::one();
        for (form, &p) in &self.num {
            num *= num_traits::pow(BigInt::from(form.eval(i, n)), p as usize);
        }
        Some(&self.constant * BigRational::new(num, den))
    }

    /// Expanded numerator and denominator, with the constant folded into them.
    pub fn to_polynomials(&self) -> (BivariatePolynomial, BivariatePolynomial) {
        let expand = |factors: &BTreeMap<LinearForm, u32>, scale: &BigInt| {
            factors.iter().fold(BivariatePolynomial::constant(scale.clone()), |acc, (f, &p)| {
                &acc * &BivariatePolynomial::from(*f).pow(p)
            })
        };
        (
            expand(&self.num, self.constant.numer()),
            expand(&self.den, self.constant.denom()),
        )
    }
}

fn constant_difference(a: &LinearForm, b: &LinearForm, what: &str) -> Result<i64, WzError> {
    let d = a.minus(b);
    if !d.is_constant() {
        return Err(WzError::Structure(format!(
            "{what} arguments {a} and {b} differ by a non-constant amount"
        )));
    }
    Ok(d.c0)
}

/// `num / den` for two terms whose factors correspond positionally with
/// constant offsets in their arguments, as a factored rational function.
///
/// Uses `binom(T+p, B+q) / binom(T, B) =
/// [(T+p)!/T!] / ([(B+q)!/B!] * [(T-B+p-q)!/(T-B)!])`.
pub fn term_ratio(num: &HypergeometricTerm, den: &HypergeometricTerm) -> Result<FactoredRational, WzError> {
    if num.factors.len() != den.factors.len() {
        return Err(WzError::Structure(format!(
            "terms have {} and {} binomial factors",
            num.factors.len(),
            den.factors.len()
        )));
    }
    if den.coefficient.is_zero() {
        return Err(WzError::Structure("ratio by a term with zero coefficient".into()));
    }
    let mut out = FactoredRational::one();
    out.constant = BigRational::new(num.coefficient.clone(), den.coefficient.clone());
    let sign = num.sign.minus(&den.sign);
    if sign.ci % 2 != 0 || sign.cn % 2 != 0 {
        return Err(WzError::Structure("sign exponents differ by a non-constant parity".into()));
    }
    if sign.c0.rem_euclid(2) == 1 {
        out.constant = -out.constant;
    }
    for (fnum, fden) in num.factors.iter().zip(&den.factors) {
        if fnum.power != fden.power {
            return Err(WzError::Structure(format!(
                "matching factors have powers {} and {}",
                fnum.power, fden.power
            )));
        }
        let power = fnum.power;
        let p = constant_difference(&fnum.top, &fden.top, "top")?;
        let q = constant_difference(&fnum.bottom, &fden.bottom, "bottom")?;
        let top = fden.top;
        let bottom = fden.bottom;
        out.mul_factorial_ratio(top, p, power, false)?;
        out.mul_factorial_ratio(bottom, q, power, true)?;
        out.mul_factorial_ratio(top.minus(&bottom), p - q, power, true)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(ci: i64, cn: i64, c0: i64) -> LinearForm {
        LinearForm::new(ci, cn, c0)
    }

    fn factor(top: LinearForm, bottom: LinearForm, power: u32) -> BinomialFactor {
        BinomialFactor { top, bottom, power }
    }

    fn sigma() -> HypergeometricTerm {
        HypergeometricTerm {
            coefficient: 1.into(),
            sign: lf(1, 1, 0),
            factors: vec![factor(lf(0, 2, 0), lf(1, 0, 0), 4)],
        }
    }

    fn tau() -> HypergeometricTerm {
        HypergeometricTerm {
            coefficient: 2.into(),
            sign: lf(1, 0, 0),
            factors: vec![
                factor(lf(0, 1, 0), lf(1, -1, 0), 1),
                factor(lf(1, 0, 0), lf(0, 1, 0), 1),
                factor(lf(1, 1, -1), lf(0, 1, 0), 2),
            ],
        }
    }

    fn assert_quotient(t: &HypergeometricTerm, di: i64, dn: i64) {
        let (num, den) = t.shift_quotient(di, dn).unwrap();
        for i in 0..10 {
            for n in 0..10 {
                let here = t.eval(i, n);
                let d = den.eval_i64(i, n);
                if here.is_zero() || d.is_zero() {
                    continue;
                }
                assert_eq!(t.eval(i + di, n + dn) * d, here * num.eval_i64(i, n), "({i},{n})");
            }
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(sigma().eval(0, 1), BigInt::from(-1));
        assert_eq!(tau().eval(1, 1), BigInt::from(-2));
        let phi_k0 = HypergeometricTerm {
            coefficient: 1.into(),
            sign: lf(1, 0, 0),
            factors: vec![factor(lf(0, 0, 0), lf(1, 0, 0), 1), factor(lf(1, 1, 0), lf(0, 1, 0), 2)],
        };
        for i in 1..5 {
            for n in 0..5 {
                assert_eq!(phi_k0.eval(i, n), BigInt::zero());
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let k = 6;
        let binom_k = HypergeometricTerm {
            coefficient: 1.into(),
            sign: lf(0, 0, 0),
            factors: vec![factor(lf(0, 0, k), lf(1, 0, 0), 1)],
        };
        let (num, den) = binom_k.shift_quotient(1, 0).unwrap();
        // N / D = (k - i) / (i + 1) up to a common constant
        let expect_num = BivariatePolynomial::from(lf(-1, 0, k));
        let expect_den = BivariatePolynomial::from(lf(1, 0, 1));
        assert_eq!(&num * &expect_den, &den * &expect_num);

        let square = HypergeometricTerm {
            coefficient: 1.into(),
            sign: lf(0, 0, 0),
            factors: vec![factor(lf(1, 1, 0), lf(0, 1, 0), 2)],
        };
        let (num, den) = square.shift_quotient(1, 0).unwrap();
        let expect_num = BivariatePolynomial::from(lf(1, 1, 1)).pow(2);
        let expect_den = BivariatePolynomial::from(lf(1, 0, 1)).pow(2);
        assert_eq!(&num * &expect_den, &den * &expect_num);

        let (num, den) = sigma().shift_quotient(1, 0).unwrap();
        let expect_num = -&BivariatePolynomial::from(lf(-1, 2, 0)).pow(4);
        let expect_den = BivariatePolynomial::from(lf(1, 0, 1)).pow(4);
        assert_eq!(&num * &expect_den, &den * &expect_num);
    }

    #[test]
    fn quotients_hold_pointwise() {
        for t in [sigma(), tau()] {
            for (di, dn) in [(1, 0), (0, 1), (0, 2), (1, 1)] {
                assert_quotient(&t, di, dn);
            }
        }
        assert!(sigma().shift_quotient(0, 0).is_err());
    }

    #[test]
    fn mismatched_terms_are_rejected() {
        let mut other = sigma();
        other.factors[0].power = 3;
        assert!(matches!(term_ratio(&other, &sigma()), Err(WzError::Structure(_))));
        let mut other = sigma();
        other.factors[0].top = lf(1, 0, 0);
        assert!(matches!(term_ratio(&other, &sigma()), Err(WzError::Structure(_))));
        let mut other = sigma();
        other.sign = lf(0, 1, 0);
        assert!(matches!(term_ratio(&other, &sigma()), Err(WzError::Structure(_))));
    }
}
