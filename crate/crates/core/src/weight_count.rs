//! Lattice-point counts behind both Sylvester–Cayley style formulas.
//!
//! Binary: `omega_binary(d, n, w)` counts `(α₀,…,α_d) ≥ 0` with `Σα = n` and
//! `Σ k·α_k = w`.
//!
//! Ternary: the coefficients `a_{r,s}` (`r + s ≤ d`) of a ternary form carry
//! weight `(d − (2r+s), r − s)`. A degree-`n` monomial `a^α` has weight
//! `(nd − 2ω₁ − ω₂, ω₁ − ω₂)` where `ω₁ = Σ r·α_{r,s}` and `ω₂ = Σ s·α_{r,s}`
//! run over all pairs. `c_ternary(d, n, i, j)` counts the monomials of weight
//! `(i, j)`, i.e. those with `ω₁ = (dn − (i−j))/3` and `ω₂ = (dn − (i+2j))/3`.
//!
//! Both are computed by knapsack-style DP with exact integers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::budget::{WorkBudget, WorkLimitExceeded};
use crate::sl3_reps::Weight;

/// Variables `a_{r,s}` of a ternary form of degree `d`, as `(r, s)`.
pub fn ternary_variables(d: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=d).flat_map(move |r| (0..=d - r).map(move |s| (r, s)))
}

/// Weight `(d − (2r+s), r − s)` of the variable `a_{r,s}`.
pub fn variable_weight(d: u32, r: u32, s: u32) -> Weight {
    Weight::new(i64::from(d) - i64::from(2 * r + s), i64::from(r) - i64::from(s))
}

/// `ω_d(n, ·)` for fixed `d`, `n` and every weight sum up to a bound.
///
/// Row `c` of the DP holds the counts for `Σα = c`; parts `k = 0..=d` are
/// added one at a time with unbounded multiplicity.
#[derive(Debug, Clone)]
pub struct OmegaTable {
    d: u32,
    n: u32,
    counts: Vec<BigUint>,
}

impl OmegaTable {
    /// Counts for every `w ≤ d·n`.
    pub fn new(d: u32, n: u32) -> Self {
        Self::up_to(d, n, u64::from(d) * u64::from(n))
    }

    pub fn up_to(d: u32, n: u32, w_max: u64) -> Self {
        let w_max = w_max.min(u64::from(d) * u64::from(n)) as usize;
        let width = w_max + 1;
        let rows = n as usize + 1;
        let mut dp = alloc::vec![BigUint::zero(); rows * width];
        dp[0] = BigUint::from(1u32);
        for k in 0..=d as usize {
            for c in 1..rows {
                let (prev, cur) = dp.split_at_mut(c * width);
                let prev = &prev[(c - 1) * width..];
                for w in k..width {
                    if !prev[w - k].is_zero() {
                        cur[w] += &prev[w - k];
                    }
                }
            }
        }
        let counts = dp.split_off(n as usize * width);
        Self { d, n, counts }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `ω_d(n, w)`; zero for negative `w` or `w` beyond the table.
    pub fn get(&self, w: i64) -> BigUint {
        usize::try_from(w)
            .ok()
            .and_then(|w| self.counts.get(w))
            .cloned()
            .unwrap_or_default()
    }
}

/// Number of `α ≥ 0` with `Σα = n` and `Σ k·α_k = w` (parts of size ≤ `d`).
pub fn omega_binary(d: u32, n: u32, w: i64) -> BigUint {
    if w < 0 || w > i64::from(d) * i64::from(n) {
        return BigUint::zero();
    }
    OmegaTable::up_to(d, n, w as u64).get(w)
}

/// Counts of degree-`c` monomials in the `a_{r,s}` by weight sums
/// `(ω₁, ω₂)`, for all `c ≤ n_max`, `ω₁ ≤ w1_max`, `ω₂ ≤ w2_max`.
#[derive(Debug, Clone)]
pub struct MonomialCounts {
    d: u32,
    n_max: u32,
    w1_max: usize,
    w2_max: usize,
    cells: Vec<BigUint>,
}

impl MonomialCounts {
    /// DP cells times variables processed; what [`Self::within`] charges.
    pub fn work(d: u32, n_max: u32, w1_max: u64, w2_max: u64) -> u64 {
        let vars = u64::from(d + 1) * u64::from(d + 2) / 2;
        (u64::from(n_max) + 1)
            .saturating_mul(w1_max + 1)
            .saturating_mul(w2_max + 1)
            .saturating_mul(vars)
    }

    pub fn new(d: u32, n_max: u32, w1_max: u64, w2_max: u64) -> Self {
        Self::within(d, n_max, w1_max, w2_max, &mut WorkBudget::unlimited())
            .expect("unlimited budget")
    }

    pub fn within(
        d: u32,
        n_max: u32,
        w1_max: u64,
        w2_max: u64,
        budget: &mut WorkBudget,
    ) -> Result<Self, WorkLimitExceeded> {
        budget.charge(Self::work(d, n_max, w1_max, w2_max))?;
        let cap = u64::from(d) * u64::from(n_max);
        let (w1_max, w2_max) = (w1_max.min(cap) as usize, w2_max.min(cap) as usize);
        let plane = (w1_max + 1) * (w2_max + 1);
        let rows = n_max as usize + 1;
        let mut cells = alloc::vec![BigUint::zero(); rows * plane];
        cells[0] = BigUint::from(1u32);
        for (r, s) in ternary_variables(d) {
            let (r, s) = (r as usize, s as usize);
            if r > w1_max || s > w2_max {
                continue;
            }
            for c in 1..rows {
                let (lo, hi) = cells.split_at_mut(c * plane);
                let prev = &lo[(c - 1) * plane..];
                let cur = &mut hi[..plane];
                for a in r..=w1_max {
                    let src = (a - r) * (w2_max + 1);
                    let dst = a * (w2_max + 1);
                    for b in s..=w2_max {
                        let v = &prev[src + b - s];
                        if !v.is_zero() {
                            cur[dst + b] += v;
                        }
                    }
                }
            }
        }
        Ok(Self {
            d,
            n_max,
            w1_max,
            w2_max,
            cells,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Number of degree-`c` monomials with weight sums `(w1, w2)`; zero outside the table.
    pub fn count(&self, c: u32, w1: i64, w2: i64) -> BigUint {
        if c > self.n_max || w1 < 0 || w2 < 0 || w1 as usize > self.w1_max || w2 as usize > self.w2_max {
            return BigUint::zero();
        }
        let plane = (self.w1_max + 1) * (self.w2_max + 1);
        self.cells[c as usize * plane + w1 as usize * (self.w2_max + 1) + w2 as usize].clone()
    }

    /// `c_d(n, i, j)` read from the table.
    ///
    /// # Panics
    /// If the weight sums for `(i, j)` are integral and in range but lie
    /// outside the table's bounds.
    pub fn c_at(&self, n: u32, i: i64, j: i64) -> BigUint {
        match weight_sums(self.d, n, i, j) {
            None => BigUint::zero(),
            Some((w1, w2)) => {
                assert!(
                    n <= self.n_max && w1 as usize <= self.w1_max && w2 as usize <= self.w2_max,
                    "c_d({n},{i},{j}) needs sums ({w1},{w2}) outside the table"
                );
                self.count(n, w1, w2)
            }
        }
    }
}

/// `(ω₁, ω₂)` for weight `(i, j)` in degree `n`, or `None` when
/// non-integral, negative, or above `d·n`.
pub fn weight_sums(d: u32, n: u32, i: i64, j: i64) -> Option<(i64, i64)> {
    let dn = i64::from(d) * i64::from(n);
    let (t1, t2) = (dn - (i - j), dn - (i + 2 * j));
    if t1 % 3 != 0 || t2 % 3 != 0 {
        return None;
    }
    let (w1, w2) = (t1 / 3, t2 / 3);
    if w1 < 0 || w2 < 0 || w1 > dn || w2 > dn {
        return None;
    }
    Some((w1, w2))
}

/// Number of degree-`n` monomials in the `a_{r,s}` with weight `(i, j)`.
pub fn c_ternary(d: u32, n: u32, i: i64, j: i64) -> BigUint {
    match weight_sums(d, n, i, j) {
        None => BigUint::zero(),
        Some((w1, w2)) => MonomialCounts::new(d, n, w1 as u64, w2 as u64).count(n, w1, w2),
    }
}

/// The character of `Sⁿ` of the coefficient space: weight → number of monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    d: u32,
    n: u32,
    entries: BTreeMap<Weight, BigUint>,
}

impl CountTable {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &BTreeMap<Weight, BigUint> {
        &self.entries
    }

    pub fn into_entries(self) -> BTreeMap<Weight, BigUint> {
        self.entries
    }

    pub fn get(&self, w: Weight) -> BigUint {
        self.entries.get(&w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }
}

/// Work [`weight_table_within`] charges for `(d, n)`.
pub fn weight_table_work(d: u32, n: u32) -> u64 {
    let dn = u64::from(d) * u64::from(n);
    MonomialCounts::work(d, n, dn, dn)
}

pub fn weight_table(d: u32, n: u32) -> CountTable {
    weight_table_within(d, n, &mut WorkBudget::unlimited()).expect("unlimited budget")
}

pub fn weight_table_within(d: u32, n: u32, budget: &mut WorkBudget) -> Result<CountTable, WorkLimitExceeded> {
    let dn = u64::from(d) * u64::from(n);
    let counts = MonomialCounts::within(d, n, dn, dn, budget)?;
    let dn = dn as i64;
    let mut entries = BTreeMap::new();
    for w1 in 0..=dn {
        for w2 in 0..=dn - w1 {
            let c = counts.count(n, w1, w2);
            if !c.is_zero() {
                entries.insert(Weight::new(dn - 2 * w1 - w2, w1 - w2), c);
            }
        }
    }
    Ok(CountTable { d, n, entries })
}
