//! Exponent multisets: a positive integer reduced to the multiset of its
//! prime exponents. Counting only ever looks at this shape.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExponentError {
    #[error("exponent multiset entries must be positive, got 0")]
    ZeroExponent,
    #[error("cannot canonicalize 0: only positive integers have a prime factorization")]
    ZeroInteger,
    #[error("invalid exponent list {0:?}: expected comma-separated positive integers")]
    Syntax(String),
}

/// Prime exponents `a_1 >= a_2 >= ... >= a_r >= 1`. The empty multiset stands
/// for the integer 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentMultiset(Vec<u32>);

impl ExponentMultiset {
    pub fn new(mut exponents: Vec<u32>) -> Result<Self, ExponentError> {
        if exponents.contains(&0) {
            return Err(ExponentError::ZeroExponent);
        }
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(exponents))
    }

    /// The multiset of the integer 1.
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    /// Factor `value` by trial division and keep only the exponents.
    pub fn from_integer(value: u64) -> Result<Self, ExponentError> {
        if value == 0 {
            return Err(ExponentError::ZeroInteger);
        }
        let exponents = factorize(value).into_iter().map(|(_, e)| e).collect();
        Self::new(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of exponents, i.e. the number of prime factors with multiplicity.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// Number of divisors, `prod (a_i + 1)`, saturating at `u64::MAX`.
    pub fn divisor_count(&self) -> u64 {
        self.0
            .iter()
            .fold(1u64, |acc, &e| acc.saturating_mul(u64::from(e) + 1))
    }

    /// Every multiset whose exponents sum to `total` (the partitions of
    /// `total`), in decreasing lexicographic order.
    pub fn with_total(total: u32) -> Vec<Self> {
        fn go(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<ExponentMultiset>) {
            if rest == 0 {
                out.push(ExponentMultiset(current.clone()));
                return;
            }
            for e in (1..=rest.min(max)).rev() {
                current.push(e);
                go(rest - e, e, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        go(total, total, &mut Vec::new(), &mut out);
        out
    }

    /// The shape of every divisor, one entry per divisor (so shapes repeat).
    pub fn divisor_shapes(&self) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..=e).map(move |d| {
                        let mut w = v.clone();
                        if d > 0 {
                            w.push(d);
                        }
                        w
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|v| Self::new(v).expect("positive exponents"))
            .collect()
    }
}

impl FromStr for ExponentMultiset {
    type Err = ExponentError;

    /// Comma-separated positive integers in any order; the empty string and
    /// `{}` both give the unit multiset.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if trimmed.is_empty() {
            return Ok(Self::unit());
        }
        let exponents = trimmed
            .split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ExponentError::Syntax(s.to_string()))?;
        Self::new(exponents)
    }
}

impl fmt::Display for ExponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Prime factorization `(p, e)` in increasing order of `p`.
///
/// Trial division, stopping early once the remaining cofactor is prime, so
/// inputs whose second-largest prime factor is small finish immediately even
/// near `u64::MAX`.
pub fn factorize(mut value: u64) -> Vec<(u64, u32)> {
    fn take(value: &mut u64, p: u64, factors: &mut Vec<(u64, u32)>) -> bool {
        let mut e = 0;
        while (*value).is_multiple_of(p) {
            *value /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        e > 0
    }
    let mut factors = Vec::new();
    take(&mut value, 2, &mut factors);
    take(&mut value, 3, &mut factors);
    let mut cofactor_prime = is_prime(value);
    let mut p = 5u64;
    while value > 1 {
        let past_sqrt = p.checked_mul(p).is_none_or(|sq| sq > value);
        if cofactor_prime || past_sqrt {
            factors.push((value, 1));
            break;
        }
        if take(&mut value, p, &mut factors) | take(&mut value, p + 2, &mut factors) {
            cofactor_prime = is_prime(value);
        }
        p += 6;
    }
    factors
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64;
    let pow = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All divisors of `value` in increasing order.
pub fn divisors(value: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(value) {
        let current = divs.clone();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            divs.extend(current.iter().map(|d| d * power));
        }
    }
    divs.sort_unstable();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_and_divisors() {
        let counts: Vec<usize> = (0..=6).map(|m| ExponentMultiset::with_total(m).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11]);
        let a: ExponentMultiset = "2,1".parse().unwrap();
        let shapes = a.divisor_shapes();
        assert_eq!(shapes.len() as u64, a.divisor_count());
        assert!(shapes.contains(&ExponentMultiset::unit()));
        assert!(shapes.contains(&a));
    }

    #[test]
    fn canonical_order_and_equality() {
        let a = ExponentMultiset::new(vec![1, 2]).unwrap();
        let b = ExponentMultiset::new(vec![2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.exponents(), &[2, 1]);
    }

    #[test]
    fn zero_exponent_rejected() {
        assert_eq!(
            ExponentMultiset::new(vec![2, 0]),
            Err(ExponentError::ZeroExponent)
        );
    }

    #[test]
    fn integers_canonicalize_by_exponents_only() {
        let twelve = ExponentMultiset::from_integer(12).unwrap();
        let eighteen = ExponentMultiset::from_integer(18).unwrap();
        assert_eq!(twelve, eighteen);
        assert_eq!(twelve.to_string(), "{2,1}");
        assert_eq!(ExponentMultiset::from_integer(1).unwrap(), ExponentMultiset::unit());
        assert_eq!(
            ExponentMultiset::from_integer(36).unwrap(),
            "2,2".parse().unwrap()
        );
        assert!(ExponentMultiset::from_integer(0).is_err());
    }

    #[test]
    fn parse_variants() {
        assert_eq!("".parse::<ExponentMultiset>().unwrap(), ExponentMultiset::unit());
        assert_eq!("{}".parse::<ExponentMultiset>().unwrap(), ExponentMultiset::unit());
        assert_eq!(
            " 1, 3 ,2".parse::<ExponentMultiset>().unwrap().exponents(),
            &[3, 2, 1]
        );
        assert!("1,,2".parse::<ExponentMultiset>().is_err());
        assert!("x".parse::<ExponentMultiset>().is_err());
        assert!("0".parse::<ExponentMultiset>().is_err());
    }

    #[test]
    fn factorize_large_values() {
        assert_eq!(factorize(u64::MAX), vec![(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1)]);
        // 2^64 - 59 is the largest 64-bit prime.
        let p = u64::MAX - 58;
        assert!(is_prime(p));
        assert_eq!(factorize(p), vec![(p, 1)]);
        assert_eq!(factorize(1 << 63), vec![(2, 63)]);
        assert_eq!(factorize(1), vec![]);
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let limit = 5000usize;
        let mut composite = vec![false; limit];
        for p in 2..limit {
            if !composite[p] {
                for m in (p * p..limit).step_by(p) {
                    composite[m] = true;
                }
            }
            assert_eq!(is_prime(p as u64), !composite[p], "{p}");
        }
    }

    #[test]
    fn divisors_of_small_numbers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(97), vec![1, 97]);
    }
}
