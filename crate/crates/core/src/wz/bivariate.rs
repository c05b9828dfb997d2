use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::linear::LinearForm;

/// Polynomial in `i` and `n` with big-integer coefficients, keyed by
/// `(degree in i, degree in n)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn i() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn n() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, deg_i: u32, deg_n: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((deg_i, deg_n), c.into());
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(deg_i, deg_n)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, deg_i: u32, deg_n: u32) -> BigInt {
        self.terms.get(&(deg_i, deg_n)).cloned().unwrap_or_default()
    }

    pub fn degree_i(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_n(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn depends_on_i(&self) -> bool {
        self.terms.keys().any(|k| k.0 > 0)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, i: &BigInt, n: &BigInt) -> BigInt {
        let powers = |x: &BigInt, d: u32| {
            let mut out = vec![BigInt::one()];
            for k in 0..d as usize {
                let next = &out[k] * x;
                out.push(next);
            }
            out
        };
        let (pi, pn) = (powers(i, self.degree_i()), powers(n, self.degree_n()));
        let mut acc = BigInt::zero();
        for (&(di, dn), c) in &self.terms {
            acc += c * &pi[di as usize] * &pn[dn as usize];
        }
        acc
    }

    pub fn eval_i64(&self, i: i64, n: i64) -> BigInt {
        self.eval(&BigInt::from(i), &BigInt::from(n))
    }

    /// Substitutes `i -> i + di` and `n -> n + dn`.
    pub fn shifted(&self, di: i64, dn: i64) -> Self {
        if di == 0 && dn == 0 {
            return self.clone();
        }
        let si = &Self::i() + &Self::constant(di);
        let sn = &Self::n() + &Self::constant(dn);
        let mut acc = Self::zero();
        for (&(a, b), c) in &self.terms {
            let term = &(&si.pow(a) * &sn.pow(b)) * &Self::constant(c.clone());
            acc = &acc + &term;
        }
        acc
    }

    /// The polynomial with `i` set to `value`; a polynomial in `n` alone.
    pub fn at_i(&self, value: i64) -> Self {
        let mut acc = Self::zero();
        let v = BigInt::from(value);
        for (&(a, b), c) in &self.terms {
            acc.add_term((0, b), c * num_traits::pow(v.clone(), a as usize));
        }
        acc
    }

    /// Interprets a polynomial of total degree at most one as a linear form.
    pub fn to_linear_form(&self) -> Option<LinearForm> {
        let mut form = LinearForm::new(0, 0, 0);
        for (&key, c) in &self.terms {
            let c = c.to_i64()?;
            match key {
                (0, 0) => form.c0 = c,
                (1, 0) => form.ci = c,
                (0, 1) => form.cn = c,
                _ => return None,
            }
        }
        Some(form)
    }

    /// An integer `R` with every real root of this univariate polynomial in
    /// `n` lying in `[-R, R]` (Cauchy's bound). `None` for constants or when
    /// the polynomial depends on `i`.
    pub fn root_bound_n(&self) -> Option<BigInt> {
        if self.depends_on_i() || self.degree_n() == 0 {
            return None;
        }
        let lead = self.coefficient(0, self.degree_n()).abs();
        let max_ratio = self
            .terms
            .iter()
            .filter(|(k, _)| k.1 < self.degree_n())
            .map(|(_, c)| (c.abs() + &lead - 1u32) / &lead)
            .max()
            .unwrap_or_default();
        Some(max_ratio + 1u32)
    }
}

impl From<LinearForm> for BivariatePolynomial {
    fn from(f: LinearForm) -> Self {
        let mut p = Self::zero();
        p.add_term((1, 0), f.ci.into());
        p.add_term((0, 1), f.cn.into());
        p.add_term((0, 0), f.c0.into());
        p
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Highest `i` degree first, then highest `n` degree; explicit `*` and `^`
    /// so the output parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(di, dn), c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !magnitude.is_one() || (di == 0 && dn == 0) {
                parts.push(magnitude.to_string());
            }
            for (var, d) in [("i", di), ("n", dn)] {
                match d {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{d}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let p = &(&BivariatePolynomial::i() + &BivariatePolynomial::n()).pow(2) - &BivariatePolynomial::constant(1);
        assert_eq!(p.eval_i64(2, 3), BigInt::from(24));
        assert_eq!(p.degree_i(), 2);
        assert_eq!(p.degree_n(), 2);
        assert_eq!(p.to_string(), "i^2 + 2*i*n + n^2 - 1");
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn shifting() {
        let p = BivariatePolynomial::i().pow(3);
        let q = p.shifted(1, 0);
        for i in -3..4 {
            assert_eq!(q.eval_i64(i, 0), BigInt::from((i + 1).pow(3)));
        }
        let r = (&BivariatePolynomial::i() * &BivariatePolynomial::n()).at_i(5);
        assert_eq!(r, BivariatePolynomial::monomial(5, 0, 1));
    }

    #[test]
    fn linear_form_conversion() {
        let p = &(&BivariatePolynomial::monomial(2, 1, 0) - &BivariatePolynomial::n()) + &BivariatePolynomial::constant(7);
        assert_eq!(p.to_linear_form(), Some(LinearForm::new(2, -1, 7)));
        assert_eq!(BivariatePolynomial::i().pow(2).to_linear_form(), None);
    }

    #[test]
    fn cauchy_bound_contains_roots() {
        // (n - 7)(n + 3) = n^2 - 4n - 21
        let p = &(&BivariatePolynomial::n() - &BivariatePolynomial::constant(7))
            * &(&BivariatePolynomial::n() + &BivariatePolynomial::constant(3));
        let bound = p.root_bound_n().unwrap();
        assert!(bound >= BigInt::from(7));
        assert_eq!(BivariatePolynomial::constant(3).root_bound_n(), None);
    }
}
