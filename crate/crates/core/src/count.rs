//! Counting essentially distinct alpha-graceful labelings of `K_{a,b}`.
//!
//! Everything here depends on `a` and `b` only through their exponent
//! multisets. Two independent routes are provided: one counts divisor chains
//! directly on the exponent lattice and interleaves them, the other goes
//! through the binomial-basis circle pairing of `F_a` and `F_b`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{binom_i64, choose};
use crate::binomial_poly::{BinomialPolynomial, PolyError, Shift};
use crate::exponents::ExponentMultiset;

/// Upper bound on `prod (a_i + 1)` for the chain-counting lattice.
pub const DEFAULT_LATTICE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("divisor lattice of {multiset} has {nodes} nodes, above the limit {limit}")]
    LatticeLimit {
        multiset: ExponentMultiset,
        nodes: u64,
        limit: u64,
    },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("counting routes disagree for A({a}, {b}): interleaving gives {interleave}, circle pairing gives {circle}")]
    RouteMismatch {
        a: ExponentMultiset,
        b: ExponentMultiset,
        interleave: BigUint,
        circle: BigUint,
    },
    #[error("formula route produced {value}, which is not a nonnegative integer")]
    NotACount { value: String },
}

/// A strictly increasing divisibility chain `1 = d_0 | d_1 | ... | d_k = a`,
/// each divisor written as its exponent vector against `a`'s primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorChain {
    steps: Vec<Vec<u32>>,
}

impl DivisorChain {
    /// Validates that `steps` runs from the zero vector to `target` with
    /// strict componentwise growth between neighbours.
    pub fn new(steps: Vec<Vec<u32>>, target: &ExponentMultiset) -> Option<Self> {
        let top = target.exponents();
        let first = steps.first()?;
        if first.iter().any(|&e| e != 0) || steps.last()? != top {
            return None;
        }
        if steps.iter().any(|s| s.len() != top.len()) {
            return None;
        }
        let strictly_dominated = |lo: &Vec<u32>, hi: &Vec<u32>| {
            lo != hi && lo.iter().zip(hi).all(|(l, h)| l <= h)
        };
        if steps.windows(2).all(|w| strictly_dominated(&w[0], &w[1])) {
            Some(Self { steps })
        } else {
            None
        }
    }

    /// Number of steps `k` (one less than the number of divisors listed).
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn steps(&self) -> &[Vec<u32>] {
        &self.steps
    }

    /// Every chain for `a`, by depth-first search over the lattice.
    pub fn enumerate(a: &ExponentMultiset) -> Vec<DivisorChain> {
        fn extend(path: &mut Vec<Vec<u32>>, top: &[u32], out: &mut Vec<DivisorChain>) {
            let last = path.last().expect("path starts non-empty").clone();
            if last.as_slice() == top {
                out.push(DivisorChain { steps: path.clone() });
                return;
            }
            // Iterate over all vectors v with last <= v <= top, v != last.
            let mut next = last.clone();
            loop {
                let mut idx = 0;
                loop {
                    if idx == top.len() {
                        return;
                    }
                    if next[idx] < top[idx] {
                        next[idx] += 1;
                        break;
                    }
                    next[idx] = last[idx];
                    idx += 1;
                }
                path.push(next.clone());
                extend(path, top, out);
                path.pop();
            }
        }
        let top = a.exponents().to_vec();
        let mut out = Vec::new();
        extend(&mut vec![vec![0; top.len()]], &top, &mut out);
        out
    }
}

fn lattice_size(a: &ExponentMultiset, limit: u64) -> Result<usize, CountError> {
    let nodes = a.divisor_count();
    if nodes > limit {
        return Err(CountError::LatticeLimit {
            multiset: a.clone(),
            nodes,
            limit,
        });
    }
    Ok(nodes as usize)
}

/// `theta(k, a)` for every `k = 0..=total(a)`, counted on the divisor lattice.
///
/// `theta_{k+1}(d) = sum over d' strictly below d of theta_k(d')`, which is the
/// lattice prefix sum at `d` minus `theta_k(d)` itself.
pub fn theta_by_chains_all(a: &ExponentMultiset) -> Result<Vec<BigUint>, CountError> {
    theta_by_chains_all_with_limit(a, DEFAULT_LATTICE_LIMIT)
}

pub fn theta_by_chains_all_with_limit(a: &ExponentMultiset, limit: u64) -> Result<Vec<BigUint>, CountError> {
    let nodes = lattice_size(a, limit)?;
    let radix: Vec<usize> = a.exponents().iter().map(|&e| e as usize + 1).collect();
    let mut strides = Vec::with_capacity(radix.len());
    let mut stride = 1usize;
    for r in &radix {
        strides.push(stride);
        stride *= r;
    }

    let mut layer = vec![BigUint::zero(); nodes];
    layer[0] = BigUint::one();
    let top = nodes - 1;
    let max_steps = a.total() as usize;
    let mut result = Vec::with_capacity(max_steps + 1);
    result.push(layer[top].clone());
    for _ in 0..max_steps {
        let mut prefix = layer.clone();
        for (axis, &r) in radix.iter().enumerate() {
            let s = strides[axis];
            for idx in 0..nodes {
                if (idx / s) % r != 0 {
                    let below = prefix[idx - s].clone();
                    prefix[idx] += below;
                }
            }
        }
        for (p, cur) in prefix.iter_mut().zip(&layer) {
            *p -= cur;
        }
        layer = prefix;
        result.push(layer[top].clone());
    }
    Ok(result)
}

/// Number of divisor chains for `a` with exactly `k` steps.
pub fn theta_by_chains(k: usize, a: &ExponentMultiset) -> Result<BigUint, CountError> {
    Ok(theta_by_chains_all(a)?.get(k).cloned().unwrap_or_default())
}

fn to_count(value: &num_rational::BigRational) -> Result<BigUint, CountError> {
    if !crate::binomial_poly::is_count(value) {
        return Err(CountError::NotACount {
            value: value.to_string(),
        });
    }
    Ok(value
        .to_integer()
        .to_biguint()
        .expect("nonnegative integer converts"))
}

/// `theta(k, a) = C(k, F_a(x - 1))`.
pub fn theta_by_formula(k: usize, a: &ExponentMultiset) -> Result<BigUint, CountError> {
    let f = BinomialPolynomial::of_exponents(a)?.shift(Shift::Backward);
    to_count(&f.coeff(k))
}

/// `A(a, b)` from chain counts:
/// `sum_k th(k,a) th(k+1,b) + sum_l th(l+1,a) th(l,b) + th(0,a) th(0,b)
///  + 2 sum_{i>=1} th(i,a) th(i,b)`.
/// Valid for every pair, including `a = b = 1`.
pub fn count_by_interleaving(a: &ExponentMultiset, b: &ExponentMultiset) -> Result<BigUint, CountError> {
    let ta = theta_by_chains_all(a)?;
    let tb = theta_by_chains_all(b)?;
    let at = |v: &[BigUint], k: usize| v.get(k).cloned().unwrap_or_default();
    let len = ta.len().max(tb.len());
    let mut total = &ta[0] * &tb[0];
    for k in 0..len {
        total += at(&ta, k) * at(&tb, k + 1);
        total += at(&ta, k + 1) * at(&tb, k);
        if k >= 1 {
            total += (at(&ta, k) * at(&tb, k)) << 1;
        }
    }
    Ok(total)
}

/// `A(a, b) = [F_a(x-1) o F_b(x)] + [F_a(x) o F_b(x-1)]`, except
/// `A({}, {}) = 1` where the pairing formula would give 2.
pub fn count_by_circle(a: &ExponentMultiset, b: &ExponentMultiset) -> Result<BigUint, CountError> {
    if a.is_empty() && b.is_empty() {
        return Ok(BigUint::one());
    }
    let fa = BinomialPolynomial::of_exponents(a)?;
    let fb = BinomialPolynomial::of_exponents(b)?;
    let value = fa.shift(Shift::Backward).circle(&fb) + fa.circle(&fb.shift(Shift::Backward));
    to_count(&value)
}

/// Closed form for `a = p^n`: `A({n}, b) = prod_i binom(n + b_i, b_i)`.
pub fn count_prime_power(n: u32, b: &ExponentMultiset) -> BigUint {
    b.exponents()
        .iter()
        .map(|&e| choose(u64::from(n) + u64::from(e), u64::from(e)))
        .fold(BigUint::one(), |acc, c| acc * c)
}

/// Runs both general routes and fails loudly if they disagree.
pub fn count_checked(a: &ExponentMultiset, b: &ExponentMultiset) -> Result<BigUint, CountError> {
    let interleave = count_by_interleaving(a, b)?;
    let circle = count_by_circle(a, b)?;
    if interleave != circle {
        return Err(CountError::RouteMismatch {
            a: a.clone(),
            b: b.clone(),
            interleave,
            circle,
        });
    }
    Ok(circle)
}

/// de Bruijn's alternating power sum `S(k, n) = sum_{i=0}^{2n} (-1)^(n+i) binom(2n, i)^k`.
pub fn debruijn_s(k: u32, n: u64) -> BigInt {
    let top = 2 * n as i64;
    let mut acc = BigInt::zero();
    // binom(2n, i) row built incrementally.
    let mut b = BigInt::one();
    for i in 0..=top {
        let term = num_traits::pow(b.clone(), k as usize);
        if (n as i64 + i) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        b = b * (top - i) / (i + 1);
    }
    debug_assert_eq!(b, binom_i64(top, top + 1));
    acc
}
