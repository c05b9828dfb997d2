use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::term::{term_ratio, FactoredRational};
use super::{BinomialFactor, BivariatePolynomial, HypergeometricTerm, LinearForm, WzError};
use crate::expr::parse_polynomial_with;

const PHI_JSON: &str = include_str!("../../certificates/phi.json");
const PSI_JSON: &str = include_str!("../../certificates/psi.json");
const TAU_JSON: &str = include_str!("../../certificates/tau.json");
const SIGMA_JSON: &str = include_str!("../../certificates/sigma.json");

/// Parameter such as `k`, substituted by an integer before verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSpec {
    pub name: String,
    pub min: i64,
    pub max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSpec {
    pub top: String,
    pub bottom: String,
    #[serde(default = "one_u32")]
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSpec {
    #[serde(default = "one_i64")]
    pub coefficient: i64,
    #[serde(default = "zero_string")]
    pub sign: String,
    pub factors: Vec<FactorSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    /// Index into the factor lists of both the summand and the base term.
    pub factor: usize,
    /// Expression in `n` beyond which that factor is zero.
    pub i_max: String,
}

fn one_u32() -> u32 {
    1
}

fn one_i64() -> i64 {
    1
}

fn zero_string() -> String {
    "0".into()
}

/// On-disk certificate: polynomial fields are strings in `i`, `n` and the
/// optional parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<ParameterSpec>,
    pub summand: TermSpec,
    pub order: usize,
    pub rec_coeffs: Vec<String>,
    pub cert_numerator: String,
    pub cert_denominator: String,
    pub base_term: TermSpec,
    pub n_min: i64,
    pub vanishing_witness: WitnessSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingWitness {
    pub factor: usize,
    pub i_max: LinearForm,
}

/// A certificate with its parameter (if any) fixed and every expression parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateSpec {
    pub name: String,
    pub parameter: Option<(String, i64)>,
    pub summand: HypergeometricTerm,
    pub order: usize,
    pub rec_coeffs: Vec<BivariatePolynomial>,
    pub cert_numerator: BivariatePolynomial,
    pub cert_denominator: BivariatePolynomial,
    pub base_term: HypergeometricTerm,
    pub n_min: i64,
    pub vanishing_witness: VanishingWitness,
}

impl CertificateFile {
    pub fn from_json(text: &str) -> Result<Self, WzError> {
        serde_json::from_str(text).map_err(|e| WzError::Json(e.to_string()))
    }

    /// Values of the parameter to verify by default; a single `None` when the
    /// certificate has no parameter.
    pub fn parameter_values(&self) -> Vec<Option<i64>> {
        match &self.parameter {
            Some(p) => (p.min..=p.max).map(Some).collect(),
            None => vec![None],
        }
    }

    pub fn instantiate(&self, value: Option<i64>) -> Result<CertificateSpec, WzError> {
        let binding: Vec<(&str, i64)> = match (&self.parameter, value) {
            (Some(p), Some(v)) => vec![(p.name.as_str(), v)],
            (None, None) => Vec::new(),
            (Some(p), None) => {
                return Err(WzError::InvalidArgument(format!(
                    "certificate '{}' needs a value for parameter {}",
                    self.name, p.name
                )))
            }
            (None, Some(_)) => {
                return Err(WzError::InvalidArgument(format!(
                    "certificate '{}' takes no parameter",
                    self.name
                )))
            }
        };
        let poly = |field: &str, text: &str| {
            parse_polynomial_with(text, &binding).map_err(|source| WzError::Parse {
                field: field.to_string(),
                source,
            })
        };
        let linear = |field: &str, text: &str| -> Result<LinearForm, WzError> {
            poly(field, text)?
                .to_linear_form()
                .ok_or_else(|| WzError::Structure(format!("{field} = {text:?} is not an integer linear form")))
        };
        let term = |field: &str, spec: &TermSpec| -> Result<HypergeometricTerm, WzError> {
            let factors = spec
                .factors
                .iter()
                .enumerate()
                .map(|(idx, f)| {
                    if f.power == 0 {
                        return Err(WzError::Structure(format!("{field} factor {idx} has power 0")));
                    }
                    Ok(BinomialFactor {
                        top: linear(&format!("{field}.factors[{idx}].top"), &f.top)?,
                        bottom: linear(&format!("{field}.factors[{idx}].bottom"), &f.bottom)?,
                        power: f.power,
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(HypergeometricTerm {
                coefficient: spec.coefficient.into(),
                sign: linear(&format!("{field}.sign"), &spec.sign)?,
                factors,
            })
        };

        if self.order == 0 || self.rec_coeffs.len() != self.order + 1 {
            return Err(WzError::Structure(format!(
                "order {} needs {} recurrence coefficients, found {}",
                self.order,
                self.order + 1,
                self.rec_coeffs.len()
            )));
        }
        let rec_coeffs = self
            .rec_coeffs
            .iter()
            .enumerate()
            .map(|(j, text)| {
                let p = poly(&format!("rec_coeffs[{j}]"), text)?;
                if p.depends_on_i() {
                    return Err(WzError::Structure(format!("rec_coeffs[{j}] depends on i")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let cert_denominator = poly("cert_denominator", &self.cert_denominator)?;
        if cert_denominator.depends_on_i() {
            return Err(WzError::Structure("cert_denominator depends on i".into()));
        }
        if cert_denominator.is_zero() {
            return Err(WzError::Structure("cert_denominator is identically zero".into()));
        }
        let summand = term("summand", &self.summand)?;
        let base_term = term("base_term", &self.base_term)?;
        let i_max = linear("vanishing_witness.i_max", &self.vanishing_witness.i_max)?;
        if i_max.ci != 0 {
            return Err(WzError::Structure("vanishing_witness.i_max must not depend on i".into()));
        }
        let w = self.vanishing_witness.factor;
        if w >= summand.factors.len() || w >= base_term.factors.len() {
            return Err(WzError::Structure(format!("vanishing witness factor {w} out of range")));
        }
        Ok(CertificateSpec {
            name: self.name.clone(),
            parameter: self
                .parameter
                .as_ref()
                .zip(value)
                .map(|(p, v)| (p.name.clone(), v)),
            summand,
            order: self.order,
            rec_coeffs,
            cert_numerator: poly("cert_numerator", &self.cert_numerator)?,
            cert_denominator,
            base_term,
            n_min: self.n_min,
            vanishing_witness: VanishingWitness {
                factor: w,
                i_max,
            },
        })
    }
}

/// The certificates shipped with the crate, in a fixed order.
pub fn builtin_certificates() -> Vec<CertificateFile> {
    [PHI_JSON, PSI_JSON, TAU_JSON, SIGMA_JSON]
        .iter()
        .map(|text| CertificateFile::from_json(text).expect("bundled certificate parses"))
        .collect()
}

pub fn builtin_certificate(name: &str) -> Result<CertificateFile, WzError> {
    builtin_certificates()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| WzError::UnknownCertificate(name.to_string()))
}

impl CertificateSpec {
    /// Display label, e.g. `phi[k=3]`.
    pub fn label(&self) -> String {
        match &self.parameter {
            Some((name, v)) => format!("{}[{name}={v}]", self.name),
            None => self.name.clone(),
        }
    }

    pub fn rec_coeff(&self, j: usize, n: i64) -> BigInt {
        self.rec_coeffs[j].eval_i64(0, n)
    }

    /// `g(i, n)`, or `None` where the denominator vanishes.
    pub fn certificate_value(&self, i: i64, n: i64) -> Option<BigRational> {
        let den = self.cert_denominator.eval_i64(i, n);
        if den.is_zero() {
            return None;
        }
        let num = self.cert_numerator.eval_i64(i, n) * self.base_term.eval(i, n);
        Some(BigRational::new(num, den))
    }

    pub fn i_max(&self, n: i64) -> i64 {
        self.vanishing_witness.i_max.eval(0, n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// `D(n) != 0` for all `n >= n_min`.
    #[serde(rename = "denominator")]
    Denominator,
    /// `g(0, n) = 0`.
    #[serde(rename = "a")]
    StartsAtZero,
    /// `f` and `g` vanish for large `i`.
    #[serde(rename = "b")]
    Vanishing,
    /// The telescoping identity.
    #[serde(rename = "c")]
    Telescoping,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Denominator => "(den)",
            Condition::StartsAtZero => "(a)",
            Condition::Vanishing => "(b)",
            Condition::Telescoping => "(c)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub condition: Condition,
    pub passed: bool,
    pub detail: String,
    /// `(i, n)` where the check failed, when there is one.
    pub witness: Option<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub certificate: String,
    pub n_min: i64,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} (n >= {}): {}",
            self.certificate,
            self.n_min,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            write!(f, "  {} {}: {}", c.condition, if c.passed { "pass" } else { "FAIL" }, c.detail)?;
            if let Some((i, n)) = c.witness {
                write!(f, " at (i, n) = ({i}, {n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check(condition: Condition, passed: bool, detail: impl Into<String>, witness: Option<(i64, i64)>) -> Check {
    Check {
        condition,
        passed,
        detail: detail.into(),
        witness,
    }
}

/// Smallest `n0 >= n_min` with `slope * n + intercept >= 0` for all `n >= n0`.
fn eventually_nonnegative(slope: i64, intercept: i64, n_min: i64) -> Option<i64> {
    if slope < 0 {
        return None;
    }
    if slope == 0 {
        return (intercept >= 0).then_some(n_min);
    }
    // n >= ceil(-intercept / slope)
    let bound = (-intercept).div_euclid(slope) + i64::from((-intercept).rem_euclid(slope) != 0);
    Some(bound.max(n_min))
}

/// From which `n` the factor is forced to zero at `i = 0`, either by a negative
/// bottom or by `0 <= top < bottom`.
fn forced_zero_at_origin(factor: &BinomialFactor, n_min: i64) -> Option<i64> {
    let (top, bottom) = (factor.top, factor.bottom);
    let negative_bottom = eventually_nonnegative(-bottom.cn, -bottom.c0 - 1, n_min);
    let below_top = eventually_nonnegative(top.cn, top.c0, n_min)
        .zip(eventually_nonnegative(bottom.cn - top.cn, bottom.c0 - top.c0 - 1, n_min))
        .map(|(a, b)| a.max(b));
    match (negative_bottom, below_top) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

fn check_denominator(spec: &CertificateSpec) -> Check {
    let den = &spec.cert_denominator;
    let Some(bound) = den.root_bound_n() else {
        // Nonzero constant, since zero is rejected on instantiation.
        return check(Condition::Denominator, true, "denominator is a nonzero constant", None);
    };
    let bound: i64 = bound.try_into().unwrap_or(i64::MAX);
    let mut n = spec.n_min;
    while n <= bound {
        if den.eval_i64(0, n).is_zero() {
            return check(
                Condition::Denominator,
                false,
                format!("denominator vanishes at n = {n}"),
                Some((0, n)),
            );
        }
        n += 1;
    }
    check(
        Condition::Denominator,
        true,
        format!("no integer root in [{}, {bound}] and none beyond the root bound", spec.n_min),
        None,
    )
}

fn check_starts_at_zero(spec: &CertificateSpec) -> Check {
    let at_zero = spec.cert_numerator.at_i(0);
    if at_zero.is_zero() {
        return check(
            Condition::StartsAtZero,
            true,
            "certificate numerator vanishes identically at i = 0",
            None,
        );
    }
    let forced = spec
        .base_term
        .factors
        .iter()
        .enumerate()
        .filter_map(|(idx, f)| forced_zero_at_origin(f, spec.n_min).map(|n0| (n0, idx)))
        .min();
    let Some((n0, idx)) = forced else {
        return check(
            Condition::StartsAtZero,
            false,
            "no factor forces g(0, n) = 0 and the numerator does not vanish at i = 0",
            Some((0, spec.n_min)),
        );
    };
    for n in spec.n_min..n0 {
        match spec.certificate_value(0, n) {
            Some(v) if v.is_zero() => {}
            _ => {
                return check(
                    Condition::StartsAtZero,
                    false,
                    format!("g(0, {n}) is nonzero or undefined"),
                    Some((0, n)),
                )
            }
        }
    }
    check(
        Condition::StartsAtZero,
        true,
        format!(
            "base-term factor {idx} is zero at i = 0 for n >= {n0}; n in [{}, {n0}) checked exactly",
            spec.n_min
        ),
        None,
    )
}

fn check_vanishing(spec: &CertificateSpec) -> Check {
    let w = &spec.vanishing_witness;
    for (name, t) in [("summand", &spec.summand), ("base term", &spec.base_term)] {
        let f = &t.factors[w.factor];
        let top_minus_bottom = f.top.minus(&f.bottom);
        let rules = [
            (f.bottom.ci > 0, "bottom must grow with i"),
            (top_minus_bottom.ci < 0, "top - bottom must decrease with i"),
            (f.top.nonnegative_beyond(&w.i_max, spec.n_min), "top must stay nonnegative"),
            (
                f.bottom.minus(&f.top).offset(-1).nonnegative_beyond(&w.i_max, spec.n_min),
                "bottom must exceed top",
            ),
        ];
        if let Some((_, why)) = rules.iter().find(|(ok, _)| !ok) {
            return check(
                Condition::Vanishing,
                false,
                format!("{name} factor {} beyond i = {}: {why}", w.factor, w.i_max),
                None,
            );
        }
    }
    for n in spec.n_min..=spec.n_min + 10 {
        let start = spec.i_max(n) + 1;
        for i in start..start + 3 {
            let g_zero = spec.certificate_value(i, n).is_some_and(|v| v.is_zero());
            if !spec.summand.eval(i, n).is_zero() || !g_zero {
                return check(Condition::Vanishing, false, "f or g nonzero past the bound", Some((i, n)));
            }
        }
    }
    check(
        Condition::Vanishing,
        true,
        format!("factor {} forces f = g = 0 for i > {}", w.factor, w.i_max),
        None,
    )
}

/// One addend of the cleared telescoping identity: `poly * ratio`.
struct Addend {
    poly: BivariatePolynomial,
    ratio: FactoredRational,
}

fn form_degrees(forms: &BTreeMap<LinearForm, u32>) -> (u32, u32) {
    forms.iter().fold((0, 0), |(di, dn), (f, &p)| {
        (di + if f.ci != 0 { p } else { 0 }, dn + if f.cn != 0 { p } else { 0 })
    })
}

fn eval_forms(forms: &BTreeMap<LinearForm, u32>, i: i64, n: i64) -> BigInt {
    forms.iter().fold(BigInt::one(), |acc, (f, &p)| {
        acc * num_traits::pow(BigInt::from(f.eval(i, n)), p as usize)
    })
}

fn check_telescoping(spec: &CertificateSpec) -> Result<Check, WzError> {
    let f = &spec.summand;
    let h = &spec.base_term;
    // D(n) sum_j c_j(n) f(i,n+j)/f(i,n) - R(i+1,n) h(i+1,n)/f(i,n) + R(i,n) h(i,n)/f(i,n) = 0
    let mut addends = Vec::new();
    for (j, c) in spec.rec_coeffs.iter().enumerate() {
        let ratio = if j == 0 {
            FactoredRational::one()
        } else {
            term_ratio(&f.shifted(0, j as i64), f)?
        };
        addends.push(Addend {
            poly: &spec.cert_denominator * c,
            ratio,
        });
    }
    addends.push(Addend {
        poly: -&spec.cert_numerator.shifted(1, 0),
        ratio: term_ratio(&h.shifted(1, 0), f)?,
    });
    addends.push(Addend {
        poly: spec.cert_numerator.clone(),
        ratio: term_ratio(h, f)?,
    });
    addends.retain(|a| !a.poly.is_zero() && !a.ratio.is_zero());

    // Common denominator: the largest power of each linear factor.
    let mut common: BTreeMap<LinearForm, u32> = BTreeMap::new();
    for a in &addends {
        for (form, &p) in &a.ratio.den {
            let e = common.entry(*form).or_insert(0);
            *e = (*e).max(p);
        }
    }
    let cofactors: Vec<BTreeMap<LinearForm, u32>> = addends
        .iter()
        .map(|a| {
            common
                .iter()
                .filter_map(|(form, &p)| {
                    let rest = p - a.ratio.den.get(form).copied().unwrap_or(0);
                    (rest > 0).then_some((*form, rest))
                })
                .collect()
        })
        .collect();
    let (mut deg_i, mut deg_n) = (0u32, 0u32);
    for (a, co) in addends.iter().zip(&cofactors) {
        let (ni, nn) = form_degrees(&a.ratio.num);
        let (ci, cn) = form_degrees(co);
        deg_i = deg_i.max(a.poly.degree_i() + ni + ci);
        deg_n = deg_n.max(a.poly.degree_n() + nn + cn);
    }
    for n in 0..=i64::from(deg_n) {
        for i in 0..=i64::from(deg_i) {
            let mut total = BigRational::zero();
            for (a, co) in addends.iter().zip(&cofactors) {
                let v = a.poly.eval_i64(i, n) * eval_forms(&a.ratio.num, i, n) * eval_forms(co, i, n);
                total += &a.ratio.constant * BigRational::from_integer(v);
            }
            if !total.is_zero() {
                return Ok(check(
                    Condition::Telescoping,
                    false,
                    "cleared telescoping polynomial is nonzero",
                    Some((i, n)),
                ));
            }
        }
    }
    Ok(check(
        Condition::Telescoping,
        true,
        format!(
            "cleared identity (degree <= {deg_i} in i, <= {deg_n} in n) vanishes on the {}x{} grid",
            deg_i + 1,
            deg_n + 1
        ),
        None,
    ))
}

/// Runs every condition and collects the results in a fixed order.
pub fn verify_certificate(spec: &CertificateSpec) -> Result<VerificationReport, WzError> {
    let checks = vec![
        check_denominator(spec),
        check_starts_at_zero(spec),
        check_vanishing(spec),
        check_telescoping(spec)?,
    ];
    Ok(VerificationReport {
        certificate: spec.label(),
        n_min: spec.n_min,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// Pointwise check of the telescoped partial sums with exact term values:
/// for each `n` in `n_from..n_from + count` and every `I` up to just past the
/// vanishing bound, `sum_{i<=I} sum_j c_j(n) f(i, n+j) = g(I + 1, n)`.
/// Returns the first failing `(I, n)`.
pub fn check_pointwise(spec: &CertificateSpec, n_from: i64, count: i64) -> Result<(), (i64, i64)> {
    for n in n_from..n_from + count {
        let coeffs: Vec<BigInt> = (0..=spec.order).map(|j| spec.rec_coeff(j, n)).collect();
        let mut partial = BigRational::zero();
        for big_i in 0..=spec.i_max(n) + 3 {
            let step: BigInt = coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * spec.summand.eval(big_i, n + j as i64))
                .sum();
            partial += BigRational::from_integer(step);
            match spec.certificate_value(big_i + 1, n) {
                Some(g) if g == partial => {}
                _ => return Err((big_i, n)),
            }
        }
        if !partial.is_zero() {
            return Err((spec.i_max(n) + 3, n));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eventually_nonnegative_cases() {
        assert_eq!(eventually_nonnegative(1, -5, 0), Some(5));
        assert_eq!(eventually_nonnegative(2, -5, 0), Some(3));
        assert_eq!(eventually_nonnegative(2, 5, 1), Some(1));
        assert_eq!(eventually_nonnegative(0, -1, 0), None);
        assert_eq!(eventually_nonnegative(-1, 100, 0), None);
    }

    #[test]
    fn negative_bottom_forces_zero() {
        // binom(n + 4, i - n) at i = 0 is binom(n + 4, -n), zero for n >= 1
        let f = BinomialFactor {
            top: LinearForm::new(0, 1, 4),
            bottom: LinearForm::new(1, -1, 0),
            power: 1,
        };
        assert_eq!(forced_zero_at_origin(&f, 0), Some(1));
        // binom(k, i) with k = 3 at i = 0 is 1
        let g = BinomialFactor {
            top: LinearForm::constant(3),
            bottom: LinearForm::new(1, 0, 0),
            power: 1,
        };
        assert_eq!(forced_zero_at_origin(&g, 0), None);
    }

    #[test]
    fn bundled_files_parse_and_instantiate() {
        for file in builtin_certificates() {
            for v in file.parameter_values() {
                let spec = file.instantiate(v).unwrap();
                assert_eq!(spec.rec_coeffs.len(), spec.order + 1);
            }
        }
        assert!(builtin_certificate("nope").is_err());
        let phi = builtin_certificate("phi").unwrap();
        assert!(phi.instantiate(None).is_err());
        assert!(builtin_certificate("sigma").unwrap().instantiate(Some(1)).is_err());
    }

    #[test]
    fn corrupted_certificate_fails_telescoping() {
        let file = builtin_certificate("sigma").unwrap();
        let mut spec = file.instantiate(None).unwrap();
        spec.cert_numerator = &spec.cert_numerator + &BivariatePolynomial::monomial(1, 4, 0);
        let report = verify_certificate(&spec).unwrap();
        assert!(!report.passed);
        let c = report.checks.iter().find(|c| c.condition == Condition::Telescoping).unwrap();
        assert!(!c.passed);
        assert!(c.witness.is_some());
    }

    #[test]
    fn wrong_recurrence_sign_fails() {
        let file = builtin_certificate("tau").unwrap();
        let mut spec = file.instantiate(None).unwrap();
        spec.rec_coeffs = spec.rec_coeffs.iter().map(|c| -c).collect();
        assert!(!verify_certificate(&spec).unwrap().passed);
        assert!(check_pointwise(&spec, 1, 3).is_err());
    }

    #[test]
    fn tau_denominator_vanishes_at_zero() {
        let file = builtin_certificate("tau").unwrap();
        let mut spec = file.instantiate(None).unwrap();
        spec.n_min = 0;
        let report = verify_certificate(&spec).unwrap();
        let den = &report.checks[0];
        assert_eq!(den.condition, Condition::Denominator);
        assert!(!den.passed);
        assert_eq!(den.witness, Some((0, 0)));
    }

    #[test]
    fn bad_witness_is_rejected() {
        let file = builtin_certificate("sigma").unwrap();
        let mut spec = file.instantiate(None).unwrap();
        spec.vanishing_witness.i_max = LinearForm::new(0, 2, 1);
        let report = verify_certificate(&spec).unwrap();
        assert!(!report.checks[2].passed);
    }

    #[test]
    fn bundled_certificates_verify() {
        for (name, k) in [("phi", Some(3)), ("psi", Some(3)), ("tau", None), ("sigma", None)] {
            let spec = builtin_certificate(name).unwrap().instantiate(k).unwrap();
            let report = verify_certificate(&spec).unwrap();
            assert!(report.passed, "{report}");
            assert_eq!(check_pointwise(&spec, spec.n_min, 4), Ok(()));
        }
    }
}
