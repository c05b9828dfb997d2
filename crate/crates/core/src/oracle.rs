//! Brute-force ground truth for `A(a, b)`.
//!
//! A labeling is modelled as the ordered pair of label sets `(S', S'')`. The
//! multiplication transforms build large labelings from small ones; peeling
//! runs them backwards down to the unique labeling `({0}, {1})` of `K_{1,1}`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponents::{divisors, factorize};

/// Default bound on `a * b` for exhaustive enumeration.
pub const DEFAULT_EDGE_LIMIT: u64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("K_{{{a},{b}}} has {edges} edges; exhaustive enumeration is capped at {limit}")]
    ResourceLimit { a: u64, b: u64, edges: u64, limit: u64 },
    #[error("labeling {0} admits no inverse multiplication")]
    Irreducible(LabelSetPair),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Label sets `(S', S'')` of the left and right parts, both ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(Vec<u64>, Vec<u64>)", into = "(Vec<u64>, Vec<u64>)")]
pub struct LabelSetPair {
    left: Vec<u64>,
    right: Vec<u64>,
}

impl LabelSetPair {
    /// Both sides must be non-empty and strictly ascending.
    pub fn new(left: Vec<u64>, right: Vec<u64>) -> Result<Self, OracleError> {
        for (name, side) in [("left", &left), ("right", &right)] {
            if side.is_empty() {
                return Err(OracleError::InvalidArgument(format!("{name} label set is empty")));
            }
            if side.windows(2).any(|w| w[0] >= w[1]) {
                return Err(OracleError::InvalidArgument(format!(
                    "{name} label set {side:?} is not strictly ascending"
                )));
            }
        }
        Ok(Self { left, right })
    }

    /// The labeling of `K_{1,1}`.
    pub fn unit() -> Self {
        Self {
            left: vec![0],
            right: vec![1],
        }
    }

    pub fn left(&self) -> &[u64] {
        &self.left
    }

    pub fn right(&self) -> &[u64] {
        &self.right
    }

    /// Part sizes `(a, b)`.
    pub fn sizes(&self) -> (u64, u64) {
        (self.left.len() as u64, self.right.len() as u64)
    }

    fn part(&self, side: Side) -> &[u64] {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }
}

impl TryFrom<(Vec<u64>, Vec<u64>)> for LabelSetPair {
    type Error = OracleError;

    fn try_from((left, right): (Vec<u64>, Vec<u64>)) -> Result<Self, Self::Error> {
        Self::new(left, right)
    }
}

impl From<LabelSetPair> for (Vec<u64>, Vec<u64>) {
    fn from(pair: LabelSetPair) -> Self {
        (pair.left, pair.right)
    }
}

impl fmt::Display for LabelSetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({{{}}}, {{{}}})", join(&self.left), join(&self.right))
    }
}

/// True when the edge differences `y - x` realize `1..=ab` exactly once and
/// every left label sits below every right label.
pub fn is_alpha_graceful(pair: &LabelSetPair) -> bool {
    let (a, b) = pair.sizes();
    let Some(edges) = a.checked_mul(b) else {
        return false;
    };
    let (max_left, min_right) = (pair.left[pair.left.len() - 1], pair.right[0]);
    if max_left >= min_right || pair.right[pair.right.len() - 1] > edges {
        return false;
    }
    let mut seen = vec![false; edges as usize + 1];
    for &y in &pair.right {
        for &x in &pair.left {
            let d = (y - x) as usize;
            if seen[d] {
                return false;
            }
            seen[d] = true;
        }
    }
    seen[1..].iter().all(|&s| s)
}

pub fn enumerate_alpha_graceful(a: u64, b: u64) -> Result<Vec<LabelSetPair>, OracleError> {
    enumerate_alpha_graceful_with_limit(a, b, DEFAULT_EDGE_LIMIT)
}

/// Every alpha-graceful pair for `K_{a,b}` in lexicographic order of
/// `(S', S'')`.
pub fn enumerate_alpha_graceful_with_limit(a: u64, b: u64, limit: u64) -> Result<Vec<LabelSetPair>, OracleError> {
    if a == 0 || b == 0 {
        return Err(OracleError::InvalidArgument("part sizes must be positive".into()));
    }
    let edges = a.saturating_mul(b);
    if edges > limit {
        return Err(OracleError::ResourceLimit { a, b, edges, limit });
    }
    let mut search = Search {
        a: a as usize,
        b: b as usize,
        edges,
        left: vec![0],
        right: Vec::new(),
        used: vec![false; edges as usize + 1],
        out: Vec::new(),
    };
    search.extend_left();
    Ok(search.out)
}

struct Search {
    a: usize,
    b: usize,
    edges: u64,
    left: Vec<u64>,
    right: Vec<u64>,
    used: Vec<bool>,
    out: Vec<LabelSetPair>,
}

impl Search {
    // 0 is forced into S' and ab into S'' since the difference ab must occur.
    fn extend_left(&mut self) {
        if self.left.len() == self.a {
            self.extend_right();
            return;
        }
        let start = self.left[self.left.len() - 1] + 1;
        // Leave room for b right labels above the left ones.
        let last = self.edges - self.b as u64 - (self.a - self.left.len() - 1) as u64;
        for x in start..=last {
            self.left.push(x);
            self.extend_left();
            self.left.pop();
        }
    }

    fn extend_right(&mut self) {
        let remaining = self.b - self.right.len();
        if remaining == 0 {
            self.out.push(LabelSetPair {
                left: self.left.clone(),
                right: self.right.clone(),
            });
            return;
        }
        let start = match self.right.last() {
            Some(&y) => y + 1,
            None => self.left[self.left.len() - 1] + 1,
        };
        let (first, last) = if remaining == 1 {
            (self.edges.max(start), self.edges)
        } else {
            (start, self.edges - (remaining - 1) as u64)
        };
        for y in first..=last {
            if self.left.iter().any(|&x| self.used[(y - x) as usize]) {
                continue;
            }
            for &x in &self.left {
                self.used[(y - x) as usize] = true;
            }
            self.right.push(y);
            self.extend_right();
            self.right.pop();
            for &x in &self.left {
                self.used[(y - x) as usize] = false;
            }
        }
    }
}

fn require_graceful(pair: &LabelSetPair) -> Result<(), OracleError> {
    if is_alpha_graceful(pair) {
        Ok(())
    } else {
        Err(OracleError::Precondition(format!("{pair} is not alpha-graceful")))
    }
}

/// Multiplication by `c` on the given side.
///
/// Left: `(cS' + {0..c-1}, cS'')`, a labeling of `K_{ac,b}`.
/// Right: `(cS', cS'' - {0..c-1})`, a labeling of `K_{a,bc}`.
pub fn mult(pair: &LabelSetPair, side: Side, c: u64) -> Result<LabelSetPair, OracleError> {
    if c < 2 {
        return Err(OracleError::InvalidArgument(format!("multiplier must be at least 2, got {c}")));
    }
    require_graceful(pair)?;
    let scaled = |v: &[u64]| v.iter().map(|x| x * c).collect::<Vec<_>>();
    let spread = |v: &[u64], up: bool| {
        let mut out: Vec<u64> = v
            .iter()
            .flat_map(|x| (0..c).map(move |z| if up { x * c + z } else { x * c - z }))
            .collect();
        out.sort_unstable();
        out
    };
    let (left, right) = match side {
        Side::Left => (spread(&pair.left, true), scaled(&pair.right)),
        Side::Right => (scaled(&pair.left), spread(&pair.right, false)),
    };
    Ok(LabelSetPair { left, right })
}

/// The preimage of `pair` under multiplication by `c` on `side`, if any.
pub fn try_inverse_mult(pair: &LabelSetPair, side: Side, c: u64) -> Result<Option<LabelSetPair>, OracleError> {
    if c < 2 {
        return Err(OracleError::InvalidArgument(format!("multiplier must be at least 2, got {c}")));
    }
    let size = pair.part(side).len() as u64;
    if !size.is_multiple_of(c) {
        return Err(OracleError::InvalidArgument(format!(
            "{c} does not divide the {side} part size {size}"
        )));
    }
    require_graceful(pair)?;
    let (spread, scaled) = match side {
        Side::Left => (&pair.left, &pair.right),
        Side::Right => (&pair.right, &pair.left),
    };
    if scaled.iter().any(|v| v % c != 0) {
        return Ok(None);
    }
    let unscaled: Vec<u64> = scaled.iter().map(|v| v / c).collect();
    let collapsed: Vec<u64> = spread.iter().filter(|v| *v % c == 0).map(|v| v / c).collect();
    let candidate = match side {
        Side::Left => LabelSetPair::new(collapsed, unscaled),
        Side::Right => LabelSetPair::new(unscaled, collapsed),
    };
    let Ok(candidate) = candidate else {
        return Ok(None);
    };
    if !is_alpha_graceful(&candidate) {
        return Ok(None);
    }
    Ok(mult(&candidate, side, c)?.eq(pair).then_some(candidate))
}

/// Alternating series of multiplications applied to `K_{1,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalSeries {
    steps: Vec<(Side, u64)>,
}

impl CanonicalSeries {
    pub fn new(steps: Vec<(Side, u64)>) -> Result<Self, OracleError> {
        if let Some((_, c)) = steps.iter().find(|(_, c)| *c < 2) {
            return Err(OracleError::InvalidArgument(format!("series factor {c} is below 2")));
        }
        if steps.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(OracleError::InvalidArgument(
                "series must alternate between left and right".into(),
            ));
        }
        Ok(Self { steps })
    }

    pub fn empty() -> Self {
        Self { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[(Side, u64)] {
        &self.steps
    }

    /// Target part sizes: products of the left and of the right factors.
    pub fn sizes(&self) -> (u64, u64) {
        self.steps.iter().fold((1, 1), |(a, b), &(side, c)| match side {
            Side::Left => (a * c, b),
            Side::Right => (a, b * c),
        })
    }

    /// Merge adjacent same-side steps into one, which yields the same labeling.
    pub fn collapse(steps: &[(Side, u64)]) -> Self {
        let mut out: Vec<(Side, u64)> = Vec::new();
        for &(side, c) in steps {
            match out.last_mut() {
                Some((last, acc)) if *last == side => *acc *= c,
                _ => out.push((side, c)),
            }
        }
        Self { steps: out }
    }
}

impl fmt::Display for CanonicalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("(empty)");
        }
        let parts: Vec<String> = self.steps.iter().map(|(s, c)| format!("{s}*{c}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Folds the series over the labeling of `K_{1,1}`.
pub fn apply_series(series: &CanonicalSeries) -> Result<LabelSetPair, OracleError> {
    series
        .steps
        .iter()
        .try_fold(LabelSetPair::unit(), |pair, &(side, c)| mult(&pair, side, c))
}

/// Every canonical series from `K_{1,1}` to `K_{a,b}`.
pub fn enumerate_canonical_series(a: u64, b: u64) -> Vec<CanonicalSeries> {
    fn walk(a: u64, b: u64, last: Option<Side>, path: &mut Vec<(Side, u64)>, out: &mut Vec<CanonicalSeries>) {
        if a == 1 && b == 1 {
            out.push(CanonicalSeries { steps: path.clone() });
            return;
        }
        for side in [Side::Left, Side::Right] {
            if last == Some(side) {
                continue;
            }
            let rem = if side == Side::Left { a } else { b };
            for c in divisors(rem).into_iter().skip(1) {
                path.push((side, c));
                match side {
                    Side::Left => walk(a / c, b, Some(side), path, out),
                    Side::Right => walk(a, b / c, Some(side), path, out),
                }
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if a > 0 && b > 0 {
        walk(a, b, None, &mut Vec::new(), &mut out);
    }
    out
}

/// Number of canonical series from `K_{1,1}` to `K_{a,b}`; zero if either
/// size is zero.
pub fn count_canonical_series(a: u64, b: u64) -> BigUint {
    fn go(a: u64, b: u64, last: Option<Side>, memo: &mut HashMap<(u64, u64, Option<Side>), BigUint>) -> BigUint {
        if a == 1 && b == 1 {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&(a, b, last)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        if last != Some(Side::Left) {
            for c in divisors(a).into_iter().skip(1) {
                total += go(a / c, b, Some(Side::Left), memo);
            }
        }
        if last != Some(Side::Right) {
            for c in divisors(b).into_iter().skip(1) {
                total += go(a, b / c, Some(Side::Right), memo);
            }
        }
        memo.insert((a, b, last), total.clone());
        total
    }
    if a == 0 || b == 0 {
        return BigUint::zero();
    }
    go(a, b, None, &mut HashMap::new())
}

/// Undo prime multiplications one at a time until `K_{1,1}` is reached, then
/// collapse the steps into the canonical series that rebuilds `pair`.
pub fn peel(pair: &LabelSetPair) -> Result<CanonicalSeries, OracleError> {
    require_graceful(pair)?;
    let mut current = pair.clone();
    let mut steps = Vec::new();
    'outer: while current != LabelSetPair::unit() {
        for side in [Side::Left, Side::Right] {
            let size = current.part(side).len() as u64;
            for (p, _) in factorize(size) {
                if let Some(prev) = try_inverse_mult(&current, side, p)? {
                    steps.push((side, p));
                    current = prev;
                    continue 'outer;
                }
            }
        }
        return Err(OracleError::Irreducible(current));
    }
    steps.reverse();
    Ok(CanonicalSeries::collapse(&steps))
}
