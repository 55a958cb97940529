//! Sparse bivariate Laurent polynomials in `p`, `q` with big-integer
//! coefficients, and power series in `t` over them truncated at a fixed order.
//!
//! Invariants:
//! - a [`LaurentPoly`] never stores a zero coefficient, so structural
//!   equality is polynomial equality;
//! - exponents may be negative;
//! - a [`TruncatedSeries`] of order `N` holds exactly `N + 1` coefficients.

use alloc::collections::btree_map::{self, BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exponent pair `(a, b)` of the monomial `pᵃ qᵇ`.
pub type Exponent = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("series factor has order {actual}, product needs order {required}")]
    OrderTooSmall { required: usize, actual: usize },
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
}

/// Upper bounds on the `p` and `q` exponents kept during an expansion.
///
/// Dropping monomials outside the box is only sound when every later factor
/// has nonnegative exponents, so that a discarded monomial can never come
/// back inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentBox {
    pub p_max: i64,
    pub q_max: i64,
}

impl ExponentBox {
    pub fn new(p_max: i64, q_max: i64) -> Self {
        Self { p_max, q_max }
    }

    #[inline]
    pub fn contains(&self, (a, b): Exponent) -> bool {
        a <= self.p_max && b <= self.q_max
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · pᵃ qᵇ`.
    pub fn monomial(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        let mut out = Self::zero();
        out.add_term((a, b), c.into());
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of `(a, b)`.
    pub fn terms(&self) -> btree_map::Iter<'_, Exponent, BigInt> {
        self.terms.iter()
    }

    /// Coefficient of `pᵃ qᵇ`, zero when absent.
    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, e: Exponent, c: &BigInt) {
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Product with the monomial `pᵃ qᵇ`.
    pub fn shifted(&self, a: i64, b: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Applies `f` to every exponent, merging terms that collide.
    pub fn map_exponents(&self, mut f: impl FnMut(Exponent) -> Exponent) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term_ref(f(e), c);
        }
        out
    }

    /// Substitutes `p = 1`.
    pub fn at_p_one(&self) -> Self {
        self.map_exponents(|(_, b)| (0, b))
    }

    /// Exchanges the roles of `p` and `q`.
    pub fn swap_pq(&self) -> Self {
        self.map_exponents(|(a, b)| (b, a))
    }

    /// Value at `p = q = 1`.
    pub fn sum_of_coeffs(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn retain_within(&mut self, bounds: ExponentBox) {
        self.terms.retain(|&e, _| bounds.contains(e));
    }

    fn mul_into(&self, other: &Self, bounds: Option<ExponentBox>, out: &mut BTreeMap<Exponent, BigInt>) {
        for (&(a1, b1), c1) in &self.terms {
            if let Some(bx) = bounds {
                if a1 > bx.p_max || b1 > bx.q_max {
                    continue;
                }
            }
            for (&(a2, b2), c2) in &other.terms {
                let e = (a1 + a2, b1 + b2);
                if let Some(bx) = bounds {
                    if !bx.contains(e) {
                        continue;
                    }
                }
                let prod = c1 * c2;
                match out.entry(e) {
                    Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    Entry::Occupied(mut o) => *o.get_mut() += prod,
                }
            }
        }
    }

    /// Product keeping only the monomials inside `bounds`.
    pub fn mul_within(&self, other: &Self, bounds: ExponentBox) -> Self {
        let mut terms = BTreeMap::new();
        self.mul_into(other, Some(bounds), &mut terms);
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    /// Exact quotient by the binomial `p^plus − p^minus` (exponent pairs).
    ///
    /// Uses long division in lexicographic order; a remainder is reported as
    /// [`PolyError::InexactDivision`].
    pub fn div_exact_binomial(&self, plus: Exponent, minus: Exponent) -> Result<Self, PolyError> {
        assert_ne!(plus, minus, "divisor binomial is zero");
        let (lead, low, lead_sign) = if plus > minus {
            (plus, minus, BigInt::one())
        } else {
            (minus, plus, -BigInt::one())
        };
        let Some((&floor, _)) = self.terms.first_key_value() else {
            return Ok(Self::zero());
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((x, c)) = rem.terms.pop_last() {
            let q_exp = (x.0 - lead.0, x.1 - lead.1);
            let cancel = (q_exp.0 + low.0, q_exp.1 + low.1);
            if cancel < floor {
                return Err(PolyError::InexactDivision);
            }
            // divisor = s·lead − s·low with s = ±1, so the quotient term is c·s
            // and subtracting it leaves +c at `cancel`.
            quot.add_term(q_exp, &c * &lead_sign);
            rem.add_term(cancel, c);
        }
        Ok(quot)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = a == 0 && b == 0;
            if unit || !mag.is_one() {
                write!(f, "{mag}")?;
                if !unit {
                    f.write_str("*")?;
                }
            }
            let mut sep = "";
            for (name, e) in [("p", a), ("q", b)] {
                match e {
                    0 => {}
                    1 => {
                        write!(f, "{sep}{name}")?;
                        sep = "*";
                    }
                    _ => {
                        write!(f, "{sep}{name}^{e}")?;
                        sep = "*";
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term_ref(e, c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        self.mul_into(rhs, None, &mut terms);
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Power series `Σ_{j ≤ N} c_j tʲ` with [`LaurentPoly`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: alloc::vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least the t^0 coefficient");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `tʲ`, or the zero polynomial past the order.
    pub fn coeff(&self, j: usize) -> &LaurentPoly {
        static_zero(self.coeffs.get(j))
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Result<Self, PolyError> {
        if order > self.order() {
            return Err(PolyError::OrderTooSmall {
                required: order,
                actual: self.order(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Cauchy product truncated at `tᴺ`.
    pub fn mul(&self, other: &Self, order: usize) -> Result<Self, PolyError> {
        self.mul_impl(other, order, None)
    }

    /// Cauchy product truncated at `tᴺ`, dropping monomials outside `bounds`.
    pub fn mul_within(&self, other: &Self, order: usize, bounds: ExponentBox) -> Result<Self, PolyError> {
        self.mul_impl(other, order, Some(bounds))
    }

    fn mul_impl(&self, other: &Self, order: usize, bounds: Option<ExponentBox>) -> Result<Self, PolyError> {
        let actual = self.order().min(other.order());
        if actual < order {
            return Err(PolyError::OrderTooSmall { required: order, actual });
        }
        let coeffs = (0..=order)
            .map(|n| {
                let mut terms = BTreeMap::new();
                for j in 0..=n {
                    self.coeffs[j].mul_into(&other.coeffs[n - j], bounds, &mut terms);
                }
                terms.retain(|_, c| !c.is_zero());
                LaurentPoly { terms }
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// `∏_{(k,l) ∈ factors} (1 − t pᵏ qˡ)⁻¹` up to `tᴺ`.
    pub fn expand_inverse_product(factors: &[Exponent], order: usize) -> Self {
        Self::expand_inverse_product_impl(factors, order, None)
    }

    /// As [`Self::expand_inverse_product`], keeping only monomials inside
    /// `bounds`. Only meaningful for factors with nonnegative exponents.
    pub fn expand_inverse_product_within(factors: &[Exponent], order: usize, bounds: ExponentBox) -> Self {
        Self::expand_inverse_product_impl(factors, order, Some(bounds))
    }

    fn expand_inverse_product_impl(factors: &[Exponent], order: usize, bounds: Option<ExponentBox>) -> Self {
        let mut series = Self::one(order);
        for &(k, l) in factors {
            // Dividing by (1 − t·m): c_j ← c_j + m·c_{j−1}, in increasing j.
            for j in 1..=order {
                let (lo, hi) = series.coeffs.split_at_mut(j);
                let prev = &lo[j - 1];
                let cur = &mut hi[0];
                for (&(a, b), c) in prev.terms() {
                    let e = (a + k, b + l);
                    if bounds.is_some_and(|bx| !bx.contains(e)) {
                        continue;
                    }
                    cur.add_term_ref(e, c);
                }
            }
        }
        series
    }
}

fn static_zero(p: Option<&LaurentPoly>) -> &LaurentPoly {
    static ZERO: LaurentPoly = LaurentPoly {
        terms: BTreeMap::new(),
    };
    p.unwrap_or(&ZERO)
}
