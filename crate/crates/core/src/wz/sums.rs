//! Direct summation of the four families and checks of the recurrences and
//! identities they satisfy.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::WzError;
use crate::arith::binom_i64;
use crate::binomial_poly::BinomialPolynomial;
use crate::count::debruijn_s;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Phi,
    Psi,
    T,
    S4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Phi => "Phi",
            Family::Psi => "Psi",
            Family::T => "T",
            Family::S4 => "S4",
        })
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `Phi_k(n) = sum_i (-1)^(k+i) binom(k,i) binom(n+i,n)^2`.
pub fn phi(k: u32, n: u64) -> BigInt {
    let (k, n) = (i64::from(k), n as i64);
    (0..=k)
        .map(|i| sign(k + i) * binom_i64(k, i) * num_traits::pow(binom_i64(n + i, n), 2))
        .sum()
}

/// `Psi_k(n) = sum_i (-1)^i binom(n,i-n) binom(i,n) binom(i,k)`.
pub fn psi(k: u32, n: u64) -> BigInt {
    let (k, n) = (i64::from(k), n as i64);
    (n..=2 * n).map(|i| psi_summand(k, n, i)).sum()
}

fn psi_summand(k: i64, n: i64, i: i64) -> BigInt {
    sign(i) * binom_i64(n, i - n) * binom_i64(i, n) * binom_i64(i, k)
}

/// `T(n) = sum_i 2 (-1)^i binom(n,i-n) binom(i,n) binom(n+i-1,n)^2`.
pub fn tau_sum(n: u64) -> BigInt {
    let n = n as i64;
    (n..=2 * n)
        .map(|i| 2 * sign(i) * binom_i64(n, i - n) * binom_i64(i, n) * num_traits::pow(binom_i64(n + i - 1, n), 2))
        .sum()
}

pub fn family_value(family: Family, k: Option<u32>, n: u64) -> BigInt {
    match family {
        Family::Phi => phi(k.unwrap_or(0), n),
        Family::Psi => psi(k.unwrap_or(0), n),
        Family::T => tau_sum(n),
        Family::S4 => debruijn_s(4, n),
    }
}

/// `[c_0(n), c_1(n), c_2(n)]` with `c_0 F(n) + c_1 F(n+1) + c_2 F(n+2) = 0`.
pub fn recurrence_coefficients(family: Family, k: Option<u32>, n: u64) -> [BigInt; 3] {
    let n = BigInt::from(n);
    match family {
        Family::Phi | Family::Psi => {
            let k = BigInt::from(k.unwrap_or(0));
            let middle: BigInt = 5 * &n * &n + (2 * &k + 16) * &n + 3 * &k + 13;
            [
                (&n + 1) * (&n + 1),
                -middle,
                (2 * &n - &k + 3) * (2 * &n - &k + 4),
            ]
        }
        Family::T | Family::S4 => {
            let poly = |cs: &[i64]| cs.iter().fold(BigInt::zero(), |acc: BigInt, &c| acc * &n + c);
            [
                4 * (&n + 1) * num_traits::pow(2 * &n + 1, 3) * poly(&[48, 162, 137]),
                -poly(&[13056, 96288, 289600, 453428, 388698, 172598, 31030]),
                num_traits::pow(&n + 2, 3) * (2 * &n + 3) * poly(&[48, 66, 23]),
            ]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceReport {
    pub family: Family,
    pub k: Option<u32>,
    pub from: u64,
    pub to: u64,
    pub first_failure: Option<u64>,
    pub passed: bool,
}

impl fmt::Display for RecurrenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let Some(k) = self.k {
            write!(f, "[k={k}]")?;
        }
        write!(f, " recurrence for n in [{}, {}]: ", self.from, self.to)?;
        match self.first_failure {
            None => write!(f, "pass"),
            Some(n) => write!(f, "FAIL at n = {n}"),
        }
    }
}

/// Checks the order-2 recurrence at every `n` in the range, using exact
/// direct sums for `F(n)`, `F(n+1)` and `F(n+2)`.
pub fn numeric_recurrence_check(
    family: Family,
    k: Option<u32>,
    range: RangeInclusive<u64>,
) -> Result<RecurrenceReport, WzError> {
    match (family, k) {
        (Family::Phi | Family::Psi, None) => {
            return Err(WzError::InvalidArgument(format!("{family} needs a value of k")))
        }
        (Family::T | Family::S4, Some(_)) => {
            return Err(WzError::InvalidArgument(format!("{family} takes no k")))
        }
        _ => {}
    }
    let (from, to) = (*range.start(), *range.end());
    if from > to {
        return Err(WzError::InvalidArgument(format!("empty range [{from}, {to}]")));
    }
    if family == Family::T && from < 1 {
        return Err(WzError::InvalidArgument(
            "the T recurrence holds only from n = 1 (T(0) = 2 breaks it)".into(),
        ));
    }
    let values: Vec<BigInt> = (from..=to + 2).map(|n| family_value(family, k, n)).collect();
    let first_failure = (from..=to).find(|&n| {
        let c = recurrence_coefficients(family, k, n);
        let at = (n - from) as usize;
        let total = &c[0] * &values[at] + &c[1] * &values[at + 1] + &c[2] * &values[at + 2];
        !total.is_zero()
    });
    Ok(RecurrenceReport {
        family,
        k,
        from,
        to,
        first_failure,
        passed: first_failure.is_none(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// `Phi_k(n) = Psi_k(n)`.
    A,
    /// `T(n) = S(4, n)`.
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCase {
    pub k: Option<u32>,
    pub n: u64,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    /// False only for the known exception `T(0) = 2 != 1 = S(4, 0)`.
    pub expected_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub cases: Vec<IdentityCase>,
    pub passed: bool,
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.identity {
            Identity::A => "Phi(n) = Psi(n)",
            Identity::B => "T(n) = S(4, n)",
        };
        let agreeing = self.cases.iter().filter(|c| c.equal == c.expected_equal).count();
        writeln!(
            f,
            "identity {name}: {} ({agreeing}/{} cases as expected)",
            if self.passed { "pass" } else { "FAIL" },
            self.cases.len()
        )?;
        for c in &self.cases {
            if !c.expected_equal {
                writeln!(
                    f,
                    "  n = {}: {} != {} (known exception, expected)",
                    c.n, c.lhs, c.rhs
                )?;
            } else if !c.equal {
                let k = c.k.map(|k| format!("k = {k}, ")).unwrap_or_default();
                writeln!(f, "  {k}n = {}: {} != {}", c.n, c.lhs, c.rhs)?;
            }
        }
        Ok(())
    }
}

fn case(k: Option<u32>, n: u64, lhs: BigInt, rhs: BigInt, expected_equal: bool) -> IdentityCase {
    IdentityCase {
        k,
        n,
        equal: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        expected_equal,
    }
}

/// Identity A over `0 <= k <= k_max`, `0 <= n <= n_max`.
pub fn identity_a_check(k_max: u32, n_max: u64) -> IdentityReport {
    let cases: Vec<IdentityCase> = (0..=k_max)
        .flat_map(|k| (0..=n_max).map(move |n| case(Some(k), n, phi(k, n), psi(k, n), true)))
        .collect();
    IdentityReport {
        identity: Identity::A,
        passed: cases.iter().all(|c| c.equal),
        cases,
    }
}

/// Identity B over `1 <= n <= n_max`, plus the probe at `n = 0` which must
/// come out unequal.
pub fn identity_b_check(n_max: u64) -> IdentityReport {
    let cases: Vec<IdentityCase> = (0..=n_max)
        .map(|n| case(None, n, tau_sum(n), debruijn_s(4, n), n != 0))
        .collect();
    IdentityReport {
        identity: Identity::B,
        passed: cases.iter().all(|c| c.equal == c.expected_equal),
        cases,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularReport {
    pub k: u32,
    pub l: u64,
    pub phi: String,
    pub psi: String,
    pub expected: String,
    pub passed: bool,
}

impl fmt::Display for SingularReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k = {}, l = {}: Phi(l) = {}, Psi(l) = {}, expected {}: {}",
            self.k,
            self.l,
            self.phi,
            self.psi,
            self.expected,
            if self.passed { "pass" } else { "FAIL" }
        )
    }
}

/// At `n = l = ceil(k/2)` the recurrence's leading coefficient vanishes, so
/// `Phi(l)` and `Psi(l)` are checked against their closed forms: `binom(2l,l)`
/// for even `k`, `(3/2) l binom(2l,l)` for odd `k`.
pub fn singular_case_check(k: u32) -> Result<SingularReport, WzError> {
    let l = u64::from(k).div_ceil(2);
    let li = l as i64;
    let central = binom_i64(2 * li, li);
    let expected = if k.is_multiple_of(2) {
        BigRational::from_integer(central.clone())
    } else {
        BigRational::new(3 * BigInt::from(l) * &central, 2.into())
    };

    // Phi(l) as the k-th binomial-basis coefficient of binom(x+l,l)^2.
    let base = BinomialPolynomial::basis_binom_shifted(li, li).map_err(|e| WzError::InvalidArgument(e.to_string()))?;
    let square = base.multiply(&base).map_err(|e| WzError::InvalidArgument(e.to_string()))?;
    let phi_by_coeff = square.coeff(k as usize);
    let phi_direct = phi(k, l);
    let psi_direct = psi(k, l);

    let mut passed = phi_by_coeff == BigRational::from_integer(phi_direct.clone())
        && BigRational::from_integer(phi_direct.clone()) == expected
        && BigRational::from_integer(psi_direct.clone()) == expected;
    if k % 2 == 1 {
        // Only i = 2l-1 and i = 2l contribute to Psi(l).
        let (k, l) = (i64::from(k), li);
        let low = BigRational::from_integer(psi_summand(k, l, 2 * l - 1));
        let high = BigRational::from_integer(psi_summand(k, l, 2 * l));
        let lc = BigRational::from_integer(BigInt::from(l) * &central);
        passed &= low == -&lc / BigInt::from(2)
            && high == &lc * BigInt::from(2)
            && (l..2 * l - 1).all(|i| psi_summand(k, l, i).is_zero());
    }
    Ok(SingularReport {
        k,
        l,
        phi: phi_direct.to_string(),
        psi: psi_direct.to_string(),
        expected: expected.to_string(),
        passed,
    })
}
