use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

/// Integer linear form `ci*i + cn*n + c0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub ci: i64,
    pub cn: i64,
    pub c0: i64,
}

impl LinearForm {
    pub const fn new(ci: i64, cn: i64, c0: i64) -> Self {
        Self { ci, cn, c0 }
    }

    pub const fn constant(c0: i64) -> Self {
        Self::new(0, 0, c0)
    }

    pub fn eval(&self, i: i64, n: i64) -> i64 {
        self.ci * i + self.cn * n + self.c0
    }

    pub fn eval_big(&self, i: &BigInt, n: &BigInt) -> BigInt {
        i * self.ci + n * self.cn + self.c0
    }

    pub fn is_constant(&self) -> bool {
        self.ci == 0 && self.cn == 0
    }

    /// Substitutes `i -> i + di`, `n -> n + dn`.
    pub fn shifted(&self, di: i64, dn: i64) -> Self {
        Self::new(self.ci, self.cn, self.c0 + self.ci * di + self.cn * dn)
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self::new(self.ci + other.ci, self.cn + other.cn, self.c0 + other.c0)
    }

    pub fn minus(&self, other: &Self) -> Self {
        Self::new(self.ci - other.ci, self.cn - other.cn, self.c0 - other.c0)
    }

    pub fn offset(&self, c: i64) -> Self {
        Self::new(self.ci, self.cn, self.c0 + c)
    }

    /// Splits a non-constant form as `scale * primitive`, where the primitive
    /// form has coprime coefficients and its first nonzero variable
    /// coefficient positive. Equal primitives mean proportional forms.
    pub fn primitive(&self) -> (i64, Self) {
        let g = self.ci.gcd(&self.cn).gcd(&self.c0);
        let lead = if self.ci != 0 { self.ci } else { self.cn };
        let g = if lead < 0 { -g } else { g };
        (g, Self::new(self.ci / g, self.cn / g, self.c0 / g))
    }

    /// Whether `self(i, n) >= 0` for every integer `n >= n_min` and every
    /// integer `i > i_max(n)`, where `i_max` depends on `n` only.
    pub fn nonnegative_beyond(&self, i_max: &LinearForm, n_min: i64) -> bool {
        // Put i = i_max(n) + 1 + t with t >= 0.
        let slope_t = self.ci;
        let slope_n = self.ci * i_max.cn + self.cn;
        let base = self.ci * (i_max.c0 + 1) + self.c0;
        slope_t >= 0 && slope_n >= 0 && slope_n * n_min + base >= 0
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::BivariatePolynomial::from(*self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_normalizes_sign_and_content() {
        assert_eq!(LinearForm::new(-2, 4, 6).primitive(), (-2, LinearForm::new(1, -2, -3)));
        assert_eq!(LinearForm::new(0, -3, 3).primitive(), (-3, LinearForm::new(0, 1, -1)));
        assert_eq!(LinearForm::new(1, 1, 0).primitive(), (1, LinearForm::new(1, 1, 0)));
    }

    #[test]
    fn region_positivity() {
        // 2n + 4 - i < 0 once i > 2n + 4
        let i_max = LinearForm::new(0, 2, 4);
        let t_minus_b = LinearForm::new(-1, 2, 4);
        assert!(LinearForm::new(1, -2, -5).nonnegative_beyond(&i_max, 0));
        assert!(!t_minus_b.nonnegative_beyond(&i_max, 0));
        assert!(LinearForm::new(0, 1, 4).nonnegative_beyond(&i_max, 0));
        assert!(!LinearForm::new(0, 1, -4).nonnegative_beyond(&i_max, 0));
        assert!(LinearForm::new(0, 1, -4).nonnegative_beyond(&i_max, 4));
    }
}
