use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use graceful::binomial_poly::{circle_binom_shifted_closed, circle_binom_square_closed};
use graceful::count::{
    count_by_circle, count_by_interleaving, count_prime_power, debruijn_s, theta_by_chains_all, theta_by_formula,
};
use graceful::oracle::{
    apply_series, count_canonical_series, enumerate_alpha_graceful, enumerate_canonical_series, is_alpha_graceful,
    mult, peel, try_inverse_mult, LabelSetPair, Side,
};
use graceful::wz::certificate::check_pointwise;
use graceful::wz::{builtin_certificates, BinomialFactor, HypergeometricTerm, LinearForm};
use graceful::{BinomialPolynomial, ExponentMultiset, Shift};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn poly(max_degree: usize) -> impl Strategy<Value = BinomialPolynomial> {
    prop::collection::vec(-20i64..=20, 1..=max_degree + 1).prop_map(BinomialPolynomial::from_int_coeffs)
}

fn multiset(max_total: u64) -> impl Strategy<Value = ExponentMultiset> {
    prop::collection::vec(1u32..=4, 0..=4)
        .prop_filter("total too large", move |v| v.iter().map(|&e| u64::from(e)).sum::<u64>() <= max_total)
        .prop_map(|v| ExponentMultiset::new(v).unwrap())
}

/// `sum_i (-1)^(k+i) binom(k,i) P(i)`, the finite-difference definition of
/// the k-th basis coefficient.
fn coeff_by_differences(p: &BinomialPolynomial, k: usize) -> BigRational {
    (0..=k)
        .map(|i| {
            let b = BigRational::from_integer(graceful::arith::binom_i64(k as i64, i as i64));
            let v = b * p.eval(i as i64);
            if (k + i).is_multiple_of(2) {
                v
            } else {
                -v
            }
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

proptest! {
    #[test]
    fn values_round_trip(v in prop::collection::vec((-50i64..=50, 1i64..=6), 1..=8)) {
        let values: Vec<BigRational> = v.iter().map(|&(n, d)| rat(n, d)).collect();
        let p = BinomialPolynomial::from_values(&values).unwrap();
        for (i, value) in values.iter().enumerate() {
            prop_assert_eq!(&p.eval(i as i64), value);
        }
        for k in 0..values.len() {
            prop_assert_eq!(p.coeff(k), coeff_by_differences(&p, k));
        }
    }

    #[test]
    fn shift_rule(p in poly(8)) {
        let shifted = p.shift(Shift::Forward);
        for k in 0..=p.degree().unwrap_or(0) {
            prop_assert_eq!(shifted.coeff(k), p.coeff(k) + p.coeff(k + 1));
        }
        for x in -4..=4 {
            prop_assert_eq!(shifted.eval(x), p.eval(x + 1));
        }
    }

    #[test]
    fn shift_inverse(p in poly(8)) {
        prop_assert_eq!(&p.shift(Shift::Backward).shift(Shift::Forward), &p);
        prop_assert_eq!(&p.shift(Shift::Forward).shift(Shift::Backward), &p);
        prop_assert_eq!(p.shift(Shift::Backward).eval(3), p.eval(2));
    }

    #[test]
    fn circle_bilinear_and_symmetric(p in poly(6), p2 in poly(6), q in poly(6), alpha in -5i64..=5, beta in -5i64..=5) {
        let combo = &p.scale(&int(alpha)) + &p2.scale(&int(beta));
        prop_assert_eq!(combo.circle(&q), int(alpha) * p.circle(&q) + int(beta) * p2.circle(&q));
        prop_assert_eq!(q.circle(&combo), combo.circle(&q));
        prop_assert_eq!(p.circle(&q), q.circle(&p));
    }

    #[test]
    fn reproducing_property(p in poly(8), k in 0i64..=10) {
        let basis = BinomialPolynomial::basis_binom_shifted(0, k).unwrap();
        prop_assert_eq!(basis.circle(&p), p.coeff(k as usize));
    }

    #[test]
    fn multiply_is_pointwise(p in poly(5), q in poly(5)) {
        let pq = p.multiply(&q).unwrap();
        for x in -3..=8 {
            prop_assert_eq!(pq.eval(x), p.eval(x) * q.eval(x));
        }
    }

    #[test]
    fn count_symmetry_and_routes(a in multiset(8), b in multiset(8)) {
        let ab = count_by_circle(&a, &b).unwrap();
        prop_assert_eq!(&ab, &count_by_circle(&b, &a).unwrap());
        prop_assert_eq!(&ab, &count_by_interleaving(&a, &b).unwrap());
    }

    #[test]
    fn theta_routes_and_support(a in multiset(8)) {
        let chains = theta_by_chains_all(&a).unwrap();
        let total = a.total() as usize;
        for k in 0..=total + 2 {
            let formula = theta_by_formula(k, &a).unwrap();
            prop_assert_eq!(&formula, &chains.get(k).cloned().unwrap_or_default());
            if k > total || (k == 0 && !a.is_empty()) {
                prop_assert!(formula.is_zero());
            }
        }
    }

    #[test]
    fn quotient_soundness(
        factors in prop::collection::vec(((-1i64..=2, 0i64..=2, -2i64..=3), (0i64..=1, -1i64..=1, -1i64..=2), 1u32..=2), 1..=3),
        sign in (0i64..=1, 0i64..=1, 0i64..=1),
        coefficient in 1i64..=3,
        shift in prop::sample::select(vec![(1i64, 0i64), (0, 1), (0, 2), (1, 1), (1, 2)]),
    ) {
        let term = HypergeometricTerm {
            coefficient: coefficient.into(),
            sign: LinearForm::new(sign.0, sign.1, sign.2),
            factors: factors
                .iter()
                .map(|&((ti, tn, t0), (bi, bn, b0), power)| BinomialFactor {
                    top: LinearForm::new(ti, tn, t0),
                    bottom: LinearForm::new(bi, bn, b0),
                    power,
                })
                .collect(),
        };
        let (di, dn) = shift;
        let (num, den) = term.shift_quotient(di, dn).unwrap();
        for i in 0..8 {
            for n in 0..8 {
                let here = term.eval(i, n);
                let d = den.eval_i64(i, n);
                if here.is_zero() || d.is_zero() {
                    continue;
                }
                prop_assert_eq!(term.eval(i + di, n + dn) * d, here * num.eval_i64(i, n), "at ({}, {})", i, n);
            }
        }
    }
}

#[test]
fn multiset_invariance() {
    let twelve = ExponentMultiset::from_integer(12).unwrap();
    assert_eq!(twelve, ExponentMultiset::from_integer(18).unwrap());
    assert_eq!(twelve, ExponentMultiset::from_integer(50).unwrap());
    let b = ExponentMultiset::from_integer(36).unwrap();
    assert_eq!(count_canonical_series(12, 36), count_canonical_series(18, 36));
    assert_eq!(count_by_circle(&twelve, &b).unwrap(), count_canonical_series(50, 36));
}

#[test]
fn divisor_sum_identity() {
    for total in 0..=6 {
        for a in ExponentMultiset::with_total(total) {
            let mut sum = BinomialPolynomial::zero();
            for d in a.divisor_shapes() {
                sum = &sum + &BinomialPolynomial::of_exponents(&d).unwrap().shift(Shift::Backward);
            }
            assert_eq!(sum, BinomialPolynomial::of_exponents(&a).unwrap(), "a = {a}");
        }
    }
}

#[test]
fn shifted_closed_form_matches_circle() {
    for n in 0..=5u64 {
        for m in 0..=n {
            for k in 0..=10 {
                let p = BinomialPolynomial::basis_binom_shifted(0, k).unwrap();
                let generic = BinomialPolynomial::basis_binom_shifted(m as i64, n as i64).unwrap().circle(&p);
                assert_eq!(circle_binom_shifted_closed(m, n, &p).unwrap(), generic, "m = {m}, n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn square_closed_form_matches_circle() {
    for n in 0..=8u64 {
        let base = BinomialPolynomial::basis_binom_shifted(n as i64, n as i64).unwrap();
        let square = base.multiply(&base).unwrap();
        for k in 0..=12 {
            let p = BinomialPolynomial::basis_binom_shifted(0, k).unwrap();
            let closed = circle_binom_square_closed(n, &p);
            assert_eq!(closed, square.circle(&p), "n = {n}, k = {k}");
            assert_eq!(closed, coeff_by_differences(&square, k as usize));
        }
    }
}

#[test]
fn prime_power_closed_form() {
    for n in 1..=6u32 {
        let a = ExponentMultiset::new(vec![n]).unwrap();
        for total in 0..=6 {
            for b in ExponentMultiset::with_total(total) {
                assert_eq!(count_prime_power(n, &b), count_by_circle(&a, &b).unwrap(), "n = {n}, b = {b}");
            }
        }
    }
}

/// Independent central binomial by the multiplicative formula.
fn central(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, j| acc * BigUint::from(n + j) / BigUint::from(j))
}

#[test]
fn single_prime_power_gives_central_binomial() {
    for n in 1..=40u32 {
        let a = ExponentMultiset::new(vec![n]).unwrap();
        let value = count_by_circle(&a, &a).unwrap();
        assert_eq!(value, central(u64::from(n)));
        assert_eq!(BigInt::from(value), debruijn_s(2, u64::from(n)));
    }
}

#[test]
fn paired_exponents_match_s4() {
    for n in 1..=40u32 {
        let a = ExponentMultiset::new(vec![n, n]).unwrap();
        assert_eq!(BigInt::from(count_by_circle(&a, &a).unwrap()), debruijn_s(4, u64::from(n)), "n = {n}");
    }
}

fn graphs(max_edges: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=max_edges).flat_map(move |a| (1..=max_edges / a).map(move |b| (a, b)))
}

#[test]
fn transform_closure_and_inverse() {
    for (a, b) in graphs(12) {
        for pair in enumerate_alpha_graceful(a, b).unwrap() {
            for side in [Side::Left, Side::Right] {
                for c in 2..=3 {
                    let big = mult(&pair, side, c).unwrap();
                    assert!(is_alpha_graceful(&big), "{pair} times {c} on the {side}");
                    assert_eq!(try_inverse_mult(&big, side, c).unwrap(), Some(pair.clone()));
                }
            }
        }
    }
}

#[test]
fn every_labeling_peels_back_to_the_unit() {
    for (a, b) in graphs(20) {
        for pair in enumerate_alpha_graceful(a, b).unwrap() {
            if a * b > 1 {
                let reducible = [Side::Left, Side::Right].iter().any(|&side| {
                    let size = if side == Side::Left { a } else { b };
                    graceful::exponents::factorize(size)
                        .iter()
                        .any(|&(p, _)| try_inverse_mult(&pair, side, p).unwrap().is_some())
                });
                assert!(reducible, "{pair} has no inverse multiplication");
            }
            let series = peel(&pair).unwrap();
            assert_eq!(apply_series(&series).unwrap(), pair);
        }
    }
}

#[test]
fn series_biject_onto_labelings() {
    for (a, b) in graphs(20) {
        let pairs = enumerate_alpha_graceful(a, b).unwrap();
        assert_eq!(BigUint::from(pairs.len()), count_canonical_series(a, b), "K_{{{a},{b}}}");
        let mut built: Vec<LabelSetPair> = enumerate_canonical_series(a, b)
            .iter()
            .map(|s| apply_series(s).unwrap())
            .collect();
        let count = built.len();
        built.sort();
        built.dedup();
        assert_eq!(built.len(), count, "apply_series is not injective on K_{{{a},{b}}}");
    }
}

#[test]
fn same_side_steps_collapse() {
    for (a, b) in graphs(8) {
        for pair in enumerate_alpha_graceful(a, b).unwrap() {
            for side in [Side::Left, Side::Right] {
                for c1 in 2..=3 {
                    for c2 in 2..=3 {
                        let twice = mult(&mult(&pair, side, c1).unwrap(), side, c2).unwrap();
                        assert_eq!(twice, mult(&pair, side, c1 * c2).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn certificates_agree_with_direct_partial_sums() {
    for file in builtin_certificates() {
        for k in file.parameter_values() {
            let spec = file.instantiate(k).unwrap();
            assert_eq!(check_pointwise(&spec, spec.n_min, 20), Ok(()), "{}", spec.label());
        }
    }
}
