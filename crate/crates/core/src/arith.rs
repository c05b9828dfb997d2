//! Exact binomial coefficients over arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Generalized binomial `binom(u, v)` for any integer `u`.
///
/// Zero when `v < 0`; otherwise the falling factorial `u(u-1)...(u-v+1) / v!`,
/// so negative tops give signed values (`binom(-1, v) = (-1)^v`).
pub fn binom(u: &BigInt, v: i64) -> BigInt {
    if v < 0 {
        return BigInt::zero();
    }
    // For 0 <= u < v the falling factorial passes through zero.
    if u.sign() != num_bigint::Sign::Minus && *u < BigInt::from(v) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..v {
        acc *= u - j;
        acc /= j + 1;
    }
    acc
}

pub fn binom_i64(u: i64, v: i64) -> BigInt {
    binom(&BigInt::from(u), v)
}

/// Ordinary binomial coefficient `n choose k`; zero when `k > n`.
pub fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Successive values `binom(x, 0), binom(x, 1), ..., binom(x, len - 1)`.
pub fn binom_row(x: &BigInt, len: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(len);
    let mut cur = BigInt::one();
    for k in 0..len {
        row.push(cur.clone());
        cur = cur * (x - k) / (k + 1);
    }
    row
}
