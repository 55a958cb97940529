//! Exact counts of linearly independent invariants of binary and ternary forms.
//!
//! The number of degree-`n` invariants of a ternary form of degree `d` is
//! computed four ways that check one another:
//!
//! - [`invariant_counts::nu_ternary_counting`]: a signed combination of five
//!   lattice-point counts taken from the weight table of `Sⁿ` of the
//!   coefficient space;
//! - [`invariant_counts::nu_ternary_genfunc`]: coefficient extraction from the
//!   expansion of `∏_{k+l≤d} (1 − t pᵏ qˡ)⁻¹`;
//! - [`invariant_counts::nu_ternary_pqbinom`]: the same expansion rebuilt from
//!   pq-binomial coefficients;
//! - [`invariant_counts::nu_ternary_peel`]: full decomposition of the weight
//!   table into irreducible sl₃ characters.
//!
//! The binary (sl₂) counts are provided as a baseline.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod budget;
pub mod exact_poly;
pub mod invariant_counts;
pub mod qbinom;
pub mod sl3_reps;
pub mod weight_count;

pub use budget::{WorkBudget, WorkLimitExceeded, DEFAULT_WORK_LIMIT};
pub use exact_poly::{ExponentBox, LaurentPoly, PolyError, TruncatedSeries};
pub use invariant_counts::{CountError, Form, Method};
pub use sl3_reps::{HighestWeight, Weight, WeightDiagram};
pub use weight_count::CountTable;

pub use num_bigint::{BigInt, BigUint};
