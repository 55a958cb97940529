//! Invariant counts: `γ_d(n, 0)` for binary forms and `ν_d(n)` for ternary
//! forms, each by more than one independent route, plus Poincaré series.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::budget::{WorkBudget, WorkLimitExceeded};
use crate::exact_poly::{ExponentBox, LaurentPoly, TruncatedSeries};
use crate::qbinom::{gaussian_binomial, pq_binomial_series_within};
use crate::sl3_reps::{decompose_within, DecomposeError, HighestWeight, WeightDiagram, TRIVIAL_FUNCTIONAL};
use crate::weight_count::{ternary_variables, weight_table_within, MonomialCounts, OmegaTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    Binary,
    Ternary,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Binary => "binary",
            Form::Ternary => "ternary",
        }
    }

    pub fn default_method(self) -> Method {
        match self {
            Form::Binary => Method::Omega,
            Form::Ternary => Method::Counting,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Form {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, UnknownName> {
        match s {
            "binary" => Ok(Form::Binary),
            "ternary" => Ok(Form::Ternary),
            _ => Err(UnknownName),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Lattice-point DP (ternary); alias of `Omega` for binary forms.
    Counting,
    /// Raw factor product `∏ (1 − t pᵏ qˡ)⁻¹`; alias of `Qbinom` for binary forms.
    Genfunc,
    /// Product of pq-binomial generating series.
    Pqbinom,
    /// Decomposition of the full weight table into irreducibles.
    Peel,
    /// Difference of bounded partition counts.
    Omega,
    /// Coefficient of `(1 − q)·[d+n, n]_q`.
    Qbinom,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Counting,
        Method::Genfunc,
        Method::Pqbinom,
        Method::Peel,
        Method::Omega,
        Method::Qbinom,
    ];

    pub const TERNARY: [Method; 4] = [Method::Counting, Method::Genfunc, Method::Pqbinom, Method::Peel];

    pub fn name(self) -> &'static str {
        match self {
            Method::Counting => "counting",
            Method::Genfunc => "genfunc",
            Method::Pqbinom => "pqbinom",
            Method::Peel => "peel",
            Method::Omega => "omega",
            Method::Qbinom => "qbinom",
        }
    }

    pub fn supports(self, form: Form) -> bool {
        match form {
            Form::Binary => matches!(self, Method::Counting | Method::Genfunc | Method::Omega | Method::Qbinom),
            Form::Ternary => Self::TERNARY.contains(&self),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, UnknownName> {
        Self::ALL.into_iter().find(|m| m.name() == s).ok_or(UnknownName)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("unknown name")]
pub struct UnknownName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("method `{method}` does not apply to {form} forms")]
    UnsupportedMethod { form: Form, method: Method },
    #[error(transparent)]
    WorkLimit(#[from] WorkLimitExceeded),
    #[error("weight table failed to decompose: {0}")]
    Decompose(DecomposeError),
}

impl From<DecomposeError> for CountError {
    fn from(e: DecomposeError) -> Self {
        match e {
            DecomposeError::WorkLimit(w) => CountError::WorkLimit(w),
            other => CountError::Decompose(other),
        }
    }
}

fn into_count(v: BigInt) -> BigUint {
    v.try_into().expect("an invariant count is never negative")
}

fn target_exponent(d: u32, n: u32) -> Option<i64> {
    let dn = i64::from(d) * i64::from(n);
    (dn % 3 == 0).then_some(dn / 3)
}

// ---- binary forms ----

fn omega_difference(table: &OmegaTable, w: i64) -> BigUint {
    into_count(BigInt::from(table.get(w)) - BigInt::from(table.get(w - 1)))
}

/// `γ_d(n, 0) = ω_d(n, dn/2) − ω_d(n, dn/2 − 1)`, zero when `dn` is odd.
pub fn gamma_binary(d: u32, n: u32) -> BigUint {
    gamma_binary_full(d, n, 0)
}

/// Multiplicity of `V_k` in `Sⁿ(V_d)`.
pub fn gamma_binary_full(d: u32, n: u32, k: u32) -> BigUint {
    let dn = u64::from(d) * u64::from(n);
    let k = u64::from(k);
    if k > dn || (dn - k) % 2 != 0 {
        return BigUint::zero();
    }
    let w = (dn - k) / 2;
    omega_difference(&OmegaTable::up_to(d, n, w), w as i64)
}

/// Coefficient of `q^{dn/2}` in `(1 − q)·[d+n, n]_q`.
pub fn gamma_binary_qbinom(d: u32, n: u32) -> BigUint {
    let dn = i64::from(d) * i64::from(n);
    if dn % 2 != 0 {
        return BigUint::zero();
    }
    let one_minus_q = LaurentPoly::from_terms([((0, 0), 1), ((0, 1), -1)]);
    into_count((&one_minus_q * &gaussian_binomial(d, n)).coeff(0, dn / 2))
}

// ---- ternary forms ----

/// `1 + pq + q²/p − 2q − q²`: shifts the (0,0) coefficient extraction onto
/// the five weights of the trivial-detecting functional.
pub fn operator_polynomial() -> LaurentPoly {
    LaurentPoly::from_terms([((0, 0), 1), ((1, 1), 1), ((-1, 2), 1), ((0, 1), -2), ((0, 2), -1)])
}

fn factor_exponents(d: u32) -> Vec<(i64, i64)> {
    ternary_variables(d).map(|(r, s)| (i64::from(r), i64::from(s))).collect()
}

/// Exponent window that still contains every monomial the extraction at
/// degree `n_max` can read.
fn extraction_box(d: u32, n_max: u32) -> ExponentBox {
    let a = i64::from(d) * i64::from(n_max) / 3;
    ExponentBox::new(a + 1, a)
}

fn expansion_work(d: u32, n_max: u32, factors: u64) -> u64 {
    let a = u64::from(d) * u64::from(n_max) / 3;
    factors
        .saturating_mul(u64::from(n_max) + 1)
        .saturating_mul(a + 2)
        .saturating_mul(a + 1)
}

fn functional_on_counts(counts: &MonomialCounts, n: u32) -> BigUint {
    let total: BigInt = TRIVIAL_FUNCTIONAL
        .iter()
        .map(|&(w, k)| BigInt::from(counts.c_at(n, w.i, w.j)) * k)
        .sum();
    into_count(total)
}

fn extract_from_coefficient(r_n: &LaurentPoly, a: i64) -> BigUint {
    into_count((&operator_polynomial() * r_n).coeff(a, a))
}

/// `ν_d(n) = c(n,0,0) + c(n,3,0) + c(n,0,3) − 2c(n,1,1) − c(n,2,2)`.
pub fn nu_ternary_counting(d: u32, n: u32) -> BigUint {
    nu_ternary_counting_within(d, n, &mut WorkBudget::unlimited()).expect("unlimited budget")
}

pub fn nu_ternary_counting_within(d: u32, n: u32, budget: &mut WorkBudget) -> Result<BigUint, CountError> {
    let Some(a) = target_exponent(d, n) else {
        return Ok(BigUint::zero());
    };
    let counts = MonomialCounts::within(d, n, a as u64 + 1, a as u64, budget)?;
    Ok(functional_on_counts(&counts, n))
}

/// Coefficient of `tⁿ (pq)^{dn/3}` in `(1 + pq + q²/p − 2q − q²)·R_d`.
pub fn nu_ternary_genfunc(d: u32, n: u32) -> BigUint {
    nu_ternary_genfunc_within(d, n, &mut WorkBudget::unlimited()).expect("unlimited budget")
}

pub fn nu_ternary_genfunc_within(d: u32, n: u32, budget: &mut WorkBudget) -> Result<BigUint, CountError> {
    let Some(a) = target_exponent(d, n) else {
        return Ok(BigUint::zero());
    };
    let factors = factor_exponents(d);
    budget.charge(expansion_work(d, n, factors.len() as u64))?;
    let r = TruncatedSeries::expand_inverse_product_within(&factors, n as usize, extraction_box(d, n));
    Ok(extract_from_coefficient(r.coeff(n as usize), a))
}

fn pq_binomial_product(d: u32, order: usize, bounds: ExponentBox) -> TruncatedSeries {
    (1..=d).fold(pq_binomial_series_within(0, order, bounds), |acc, m| {
        acc.mul_within(&pq_binomial_series_within(m, order, bounds), order, bounds)
            .expect("factors share the product order")
    })
}

/// Same extraction as [`nu_ternary_genfunc`], with `R_d` rebuilt as the
/// product of the pq-binomial series `G₀ G₁ ⋯ G_d`.
pub fn nu_ternary_pqbinom(d: u32, n: u32) -> BigUint {
    nu_ternary_pqbinom_within(d, n, &mut WorkBudget::unlimited()).expect("unlimited budget")
}

pub fn nu_ternary_pqbinom_within(d: u32, n: u32, budget: &mut WorkBudget) -> Result<BigUint, CountError> {
    let Some(a) = target_exponent(d, n) else {
        return Ok(BigUint::zero());
    };
    budget.charge(expansion_work(d, n, u64::from(d) + 1))?;
    let r = pq_binomial_product(d, n as usize, extraction_box(d, n));
    Ok(extract_from_coefficient(r.coeff(n as usize), a))
}

/// Work the peel route charges before decomposing.
pub fn peel_table_work(d: u32, n: u32) -> u64 {
    crate::weight_count::weight_table_work(d, n)
}

/// Multiplicity of the trivial representation in the decomposition of the
/// full weight table of `Sⁿ` of the coefficient space.
pub fn nu_ternary_peel(d: u32, n: u32, budget: &mut WorkBudget) -> Result<BigUint, CountError> {
    let table = weight_table_within(d, n, budget)?;
    let parts = decompose_within(&WeightDiagram::from(table), budget)?;
    Ok(parts.get(&HighestWeight::TRIVIAL).cloned().unwrap_or_default())
}

/// A single coefficient of the Poincaré series.
pub fn count(form: Form, method: Method, d: u32, n: u32, budget: &mut WorkBudget) -> Result<BigUint, CountError> {
    if !method.supports(form) {
        return Err(CountError::UnsupportedMethod { form, method });
    }
    match (form, method) {
        (Form::Binary, Method::Omega | Method::Counting) => {
            budget.charge(binary_work(d, n))?;
            Ok(gamma_binary(d, n))
        }
        (Form::Binary, _) => {
            budget.charge(binary_work(d, n))?;
            Ok(gamma_binary_qbinom(d, n))
        }
        (Form::Ternary, Method::Counting) => nu_ternary_counting_within(d, n, budget),
        (Form::Ternary, Method::Genfunc) => nu_ternary_genfunc_within(d, n, budget),
        (Form::Ternary, Method::Pqbinom) => nu_ternary_pqbinom_within(d, n, budget),
        (Form::Ternary, _) => nu_ternary_peel(d, n, budget),
    }
}

fn binary_work(d: u32, n: u32) -> u64 {
    (u64::from(n) + 1).saturating_mul(u64::from(d) * u64::from(n) + 1).saturating_mul(u64::from(d) + 1)
}

/// `(n, count)` for `n = 0..=max_degree`, zeros included.
///
/// The DP and expansion methods build one table or series sized for
/// `max_degree` and read every degree from it, charging `budget` once.
/// The remaining methods run degree by degree, each under `budget`'s limit.
pub fn poincare_series(
    form: Form,
    d: u32,
    max_degree: u32,
    method: Method,
    budget: &mut WorkBudget,
) -> Result<Vec<(u32, BigUint)>, CountError> {
    if !method.supports(form) {
        return Err(CountError::UnsupportedMethod { form, method });
    }
    let degrees = 0..=max_degree;
    match (form, method) {
        (Form::Ternary, Method::Counting) => {
            let a = extraction_box(d, max_degree);
            let counts = MonomialCounts::within(d, max_degree, a.p_max as u64, a.q_max as u64, budget)?;
            Ok(degrees.map(|n| (n, functional_on_counts(&counts, n))).collect())
        }
        (Form::Ternary, Method::Genfunc) => {
            let factors = factor_exponents(d);
            budget.charge(expansion_work(d, max_degree, factors.len() as u64))?;
            let r = TruncatedSeries::expand_inverse_product_within(
                &factors,
                max_degree as usize,
                extraction_box(d, max_degree),
            );
            Ok(series_from_expansion(d, &r, degrees))
        }
        (Form::Ternary, Method::Pqbinom) => {
            budget.charge(expansion_work(d, max_degree, u64::from(d) + 1))?;
            let r = pq_binomial_product(d, max_degree as usize, extraction_box(d, max_degree));
            Ok(series_from_expansion(d, &r, degrees))
        }
        // per-degree methods get the full limit for each degree
        _ => degrees
            .map(|n| count(form, method, d, n, &mut WorkBudget::new(budget.limit())).map(|c| (n, c)))
            .collect(),
    }
}

fn series_from_expansion(d: u32, r: &TruncatedSeries, degrees: core::ops::RangeInclusive<u32>) -> Vec<(u32, BigUint)> {
    degrees
        .map(|n| {
            let c = match target_exponent(d, n) {
                Some(a) => extract_from_coefficient(r.coeff(n as usize), a),
                None => BigUint::zero(),
            };
            (n, c)
        })
        .collect()
}

/// `Σ γ(λ)·E_λ` over a decomposition; equals `γ(0,0)` when the functional
/// behaves as claimed.
pub fn functional_over_decomposition(parts: &alloc::collections::BTreeMap<HighestWeight, BigUint>) -> BigInt {
    parts
        .iter()
        .map(|(&l, g)| BigInt::from(g.clone()) * crate::sl3_reps::e_lambda(l))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binary_examples() {
        for d in 1..6 {
            assert_eq!(gamma_binary(d, 0), big(1));
        }
        assert_eq!(gamma_binary(2, 2), big(1));
        assert_eq!(gamma_binary(3, 2), big(0));
        assert_eq!(gamma_binary_qbinom(2, 2), big(1));
        assert_eq!(gamma_binary_qbinom(4, 3), big(1));
        for n in 1..8 {
            assert_eq!(gamma_binary_qbinom(1, n), big(0));
        }
    }

    #[test]
    fn binary_full_examples() {
        for d in 0..6 {
            for k in 0..8 {
                assert_eq!(gamma_binary_full(d, 1, k), big(u64::from(k == d)));
            }
        }
        let dim: BigUint = (0..=4).map(|k| gamma_binary_full(2, 2, k) * (k + 1)).sum();
        assert_eq!(dim, big(6));
        assert_eq!(gamma_binary_full(2, 2, 0), gamma_binary(2, 2));
    }

    #[test]
    fn ternary_examples() {
        assert_eq!(nu_ternary_counting(3, 4), big(1));
        assert_eq!(nu_ternary_counting(4, 4), big(0));
        assert_eq!(nu_ternary_genfunc(3, 6), big(1));
        for d in 1..5 {
            assert_eq!(nu_ternary_genfunc(d, 0), big(1));
        }
        assert_eq!(nu_ternary_pqbinom(4, 3), big(1));
        assert_eq!(nu_ternary_pqbinom(6, 3), big(1));
        assert_eq!(nu_ternary_pqbinom(7, 6), big(3));
    }

    #[test]
    fn peel_examples() {
        let mut b = WorkBudget::default();
        assert_eq!(nu_ternary_peel(3, 4, &mut b).unwrap(), big(1));
        assert_eq!(nu_ternary_peel(4, 6, &mut WorkBudget::default()).unwrap(), big(2));
    }

    #[test]
    fn peel_respects_limit() {
        let mut b = WorkBudget::new(1000);
        assert!(matches!(nu_ternary_peel(4, 12, &mut b), Err(CountError::WorkLimit(_))));
    }

    #[test]
    fn unsupported_methods() {
        let mut b = WorkBudget::default();
        assert!(matches!(
            count(Form::Binary, Method::Peel, 2, 2, &mut b),
            Err(CountError::UnsupportedMethod { .. })
        ));
        assert!(matches!(
            count(Form::Ternary, Method::Omega, 2, 2, &mut b),
            Err(CountError::UnsupportedMethod { .. })
        ));
    }

    #[test]
    fn binary_linear_series() {
        let s = poincare_series(Form::Binary, 1, 10, Method::Omega, &mut WorkBudget::default()).unwrap();
        for (n, c) in s {
            assert_eq!(c, big(u64::from(n == 0)));
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>(), Ok(m));
        }
        assert_eq!("ternary".parse::<Form>(), Ok(Form::Ternary));
        assert!("quaternary".parse::<Form>().is_err());
    }
}
