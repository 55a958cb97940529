//! Irreducible sl₃ representations: weight multiplicities, characters, the
//! five-point functional that detects the trivial representation, and
//! decomposition of a character into irreducibles.
//!
//! Weights are in fundamental-weight coordinates `(i, j)`. The simple roots
//! are `α₁ = (2, −1)` and `α₂ = (−1, 2)`, so `(x, y)` has simple-root
//! coordinates `((2x+y)/3, (x+2y)/3)`.

use alloc::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::budget::{WorkBudget, WorkLimitExceeded};
use crate::weight_count::CountTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub i: i64,
    pub j: i64,
}

impl Weight {
    pub const fn new(i: i64, j: i64) -> Self {
        Self { i, j }
    }

    pub fn is_dominant(self) -> bool {
        self.i >= 0 && self.j >= 0
    }

    /// `s₁(i, j) = (−i, i + j)`.
    pub fn reflect_1(self) -> Self {
        Self::new(-self.i, self.i + self.j)
    }

    /// `s₂(i, j) = (i + j, −j)`.
    pub fn reflect_2(self) -> Self {
        Self::new(self.i + self.j, -self.j)
    }

    /// The unique dominant weight in the Weyl orbit.
    pub fn dominant_conjugate(self) -> Self {
        let mut w = self;
        loop {
            if w.i < 0 {
                w = w.reflect_1();
            } else if w.j < 0 {
                w = w.reflect_2();
            } else {
                return w;
            }
        }
    }
}

impl From<HighestWeight> for Weight {
    fn from(l: HighestWeight) -> Self {
        Self::new(i64::from(l.m1), i64::from(l.m2))
    }
}

/// Highest weight `(m₁, m₂)` of the irreducible representation `Γ_{m₁,m₂}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HighestWeight {
    pub m1: u32,
    pub m2: u32,
}

impl HighestWeight {
    pub const TRIVIAL: Self = Self::new(0, 0);

    pub const fn new(m1: u32, m2: u32) -> Self {
        Self { m1, m2 }
    }
}

impl TryFrom<Weight> for HighestWeight {
    type Error = Weight;

    fn try_from(w: Weight) -> Result<Self, Weight> {
        match (u32::try_from(w.i), u32::try_from(w.j)) {
            (Ok(m1), Ok(m2)) => Ok(Self::new(m1, m2)),
            _ => Err(w),
        }
    }
}

/// Distinct Weyl conjugates of `w`, sorted.
pub fn weyl_orbit(w: Weight) -> alloc::vec::Vec<Weight> {
    let mut orbit = alloc::vec![w];
    let mut k = 0;
    while k < orbit.len() {
        for v in [orbit[k].reflect_1(), orbit[k].reflect_2()] {
            if !orbit.contains(&v) {
                orbit.push(v);
            }
        }
        k += 1;
    }
    orbit.sort();
    orbit
}

/// Simple-root coordinates of `(x, y)`, when it lies in the root lattice.
pub fn root_coordinates(x: i64, y: i64) -> Option<(i64, i64)> {
    let (a, b) = (2 * x + y, x + 2 * y);
    (a % 3 == 0 && b % 3 == 0).then_some((a / 3, b / 3))
}

/// Ways to write `k₁α₁ + k₂α₂` as a nonnegative sum of `α₁`, `α₂`, `α₁+α₂`.
pub fn kostant_partition(k1: i64, k2: i64) -> u64 {
    if k1 < 0 || k2 < 0 {
        0
    } else {
        k1.min(k2) as u64 + 1
    }
}

type WeylAction = fn(i64, i64) -> (i64, i64);

/// The six Weyl group elements with their signs.
const WEYL_GROUP: [(WeylAction, i64); 6] = [
    (|a, b| (a, b), 1),
    (|a, b| (-a, a + b), -1),
    (|a, b| (a + b, -b), -1),
    (|a, b| (b, -a - b), 1),
    (|a, b| (-a - b, a), 1),
    (|a, b| (-b, -a), -1),
];

/// Multiplicity of `mu` in `Γ_λ`, by Weyl alternation over the Kostant
/// partition function with `ρ = (1, 1)`.
pub fn weight_multiplicity(lambda: HighestWeight, mu: Weight) -> u64 {
    let (a, b) = (i64::from(lambda.m1) + 1, i64::from(lambda.m2) + 1);
    let (x0, y0) = (mu.i + 1, mu.j + 1);
    if root_coordinates(a - x0, b - y0).is_none() {
        return 0;
    }
    let total: i64 = WEYL_GROUP
        .iter()
        .map(|&(w, sign)| {
            let (x, y) = w(a, b);
            let (k1, k2) = root_coordinates(x - x0, y - y0).expect("Weyl group preserves the root lattice");
            sign * kostant_partition(k1, k2) as i64
        })
        .sum();
    u64::try_from(total).expect("weight multiplicity is nonnegative")
}

/// Weyl dimension formula `(m₁+1)(m₂+1)(m₁+m₂+2)/2`.
pub fn dimension(lambda: HighestWeight) -> u64 {
    let (m1, m2) = (u64::from(lambda.m1), u64::from(lambda.m2));
    (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) / 2
}

/// Finite map from weights to positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightDiagram {
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, w: Weight) -> BigUint {
        self.entries.get(&w).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, w: Weight, count: &BigUint) {
        if !count.is_zero() {
            *self.entries.entry(w).or_default() += count;
        }
    }

    /// Adds `mult` copies of every weight in `other`.
    pub fn add_scaled(&mut self, other: &WeightDiagram, mult: &BigUint) {
        for (&w, c) in &other.entries {
            self.add(w, &(c * mult));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, &BigUint)> {
        self.entries.iter().map(|(&w, c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn map_weights(&self, mut f: impl FnMut(Weight) -> Weight) -> Self {
        let mut out = Self::new();
        for (&w, c) in &self.entries {
            out.add(f(w), c);
        }
        out
    }

    /// First weight (in sorted order within its orbit) whose multiplicity
    /// differs from that of a stored Weyl conjugate.
    pub fn weyl_violation(&self) -> Option<Weight> {
        self.entries.iter().find_map(|(&w, c)| {
            weyl_orbit(w)
                .into_iter()
                .find(|&v| self.entries.get(&v) != Some(c))
        })
    }

    /// Applies the signed five-point functional
    /// `n(0,0) + n(3,0) + n(0,3) − 2n(1,1) − n(2,2)`.
    pub fn trivial_functional(&self) -> num_bigint::BigInt {
        TRIVIAL_FUNCTIONAL
            .iter()
            .map(|&(w, k)| num_bigint::BigInt::from(self.get(w)) * k)
            .sum()
    }
}

impl FromIterator<(Weight, BigUint)> for WeightDiagram {
    fn from_iter<I: IntoIterator<Item = (Weight, BigUint)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (w, c) in iter {
            out.add(w, &c);
        }
        out
    }
}

impl From<CountTable> for WeightDiagram {
    fn from(t: CountTable) -> Self {
        Self {
            entries: t.into_entries(),
        }
    }
}

/// Weights and coefficients of the functional that is 1 on the trivial
/// representation and 0 on every other irreducible.
pub const TRIVIAL_FUNCTIONAL: [(Weight, i64); 5] = [
    (Weight::new(0, 0), 1),
    (Weight::new(3, 0), 1),
    (Weight::new(0, 3), 1),
    (Weight::new(1, 1), -2),
    (Weight::new(2, 2), -1),
];

/// The five-point functional on `Γ_λ`.
pub fn e_lambda(lambda: HighestWeight) -> i64 {
    TRIVIAL_FUNCTIONAL
        .iter()
        .map(|&(w, k)| k * weight_multiplicity(lambda, w) as i64)
        .sum()
}

/// Full character of `Γ_λ`.
pub fn character(lambda: HighestWeight) -> WeightDiagram {
    let r = i64::from(lambda.m1) + i64::from(lambda.m2);
    let mut out = WeightDiagram::new();
    for i in -r..=r {
        for j in -r..=r {
            let mu = Weight::new(i, j);
            let m = weight_multiplicity(lambda, mu);
            if m > 0 {
                out.add(mu, &BigUint::from(m));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("diagram is not Weyl-invariant at weight ({}, {})", .0.i, .0.j)]
    NotWeylInvariant(Weight),
    #[error("peeling left a negative multiplicity at weight ({}, {})", .0.i, .0.j)]
    NegativeMultiplicity(Weight),
    #[error(transparent)]
    WorkLimit(#[from] WorkLimitExceeded),
}

/// Multiplicities of the irreducibles in a character.
pub fn decompose(diagram: &WeightDiagram) -> Result<BTreeMap<HighestWeight, BigUint>, DecomposeError> {
    decompose_within(diagram, &mut WorkBudget::unlimited())
}

/// [`decompose`] charging one state per weight inspected.
///
/// A Weyl-invariant diagram is determined by its dominant weights, so after
/// the invariance check the peeling runs on the dominant chamber only. The
/// next highest weight is the dominant weight of greatest height `i + j`
/// (ties: greatest `i`); anything above it in the root order would be higher.
pub fn decompose_within(
    diagram: &WeightDiagram,
    budget: &mut WorkBudget,
) -> Result<BTreeMap<HighestWeight, BigUint>, DecomposeError> {
    budget.charge(diagram.len() as u64)?;
    if let Some(w) = diagram.weyl_violation() {
        return Err(DecomposeError::NotWeylInvariant(w));
    }
    // keyed by (height, i, j) so the last entry is the next highest weight
    let mut residual: BTreeMap<(i64, i64, i64), BigUint> = diagram
        .iter()
        .filter(|(w, _)| w.is_dominant())
        .map(|(w, c)| ((w.i + w.j, w.i, w.j), c.clone()))
        .collect();
    let mut out = BTreeMap::new();
    while let Some(((_, i, j), mult)) = residual.pop_last() {
        let lambda = HighestWeight::try_from(Weight::new(i, j)).expect("residual holds dominant weights");
        let r = i + j;
        budget.charge(((r + 1) * (r + 2) / 2) as u64)?;
        for mi in 0..=r {
            for mj in 0..=r - mi {
                if (mi, mj) == (i, j) {
                    continue;
                }
                let m = weight_multiplicity(lambda, Weight::new(mi, mj));
                if m == 0 {
                    continue;
                }
                let key = (mi + mj, mi, mj);
                let need = &mult * m;
                match residual.get_mut(&key) {
                    Some(have) if *have >= need => {
                        *have -= need;
                        if have.is_zero() {
                            residual.remove(&key);
                        }
                    }
                    _ => return Err(DecomposeError::NegativeMultiplicity(Weight::new(mi, mj))),
                }
            }
        }
        out.insert(lambda, mult);
    }
    Ok(out)
}

/// `Σ γ(λ)·Char(Γ_λ)`.
pub fn recompose(parts: &BTreeMap<HighestWeight, BigUint>) -> WeightDiagram {
    let mut out = WeightDiagram::new();
    for (&lambda, mult) in parts {
        out.add_scaled(&character(lambda), mult);
    }
    out
}
