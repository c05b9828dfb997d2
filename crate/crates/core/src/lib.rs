//! Exact enumeration of alpha-graceful labelings of complete bipartite graphs.
//!
//! The crate counts essentially distinct alpha-graceful labelings `A(a, b)` of
//! `K_{a,b}` by three independent means (brute-force label sets and
//! multiplication series, divisor-chain interleaving, and the binomial-basis
//! circle pairing), evaluates de Bruijn's alternating sums `S(k, n)`, and
//! checks the creative-telescoping certificates behind the identity
//! `A({n,n},{n,n}) = S(4, n)`.

pub mod arith;
pub mod binomial_poly;
pub mod cli;
pub mod count;
pub mod exponents;
pub mod expr;
pub mod oracle;
pub mod selftest;
pub mod wz;

pub use binomial_poly::{BinomialPolynomial, Shift};
pub use exponents::ExponentMultiset;
