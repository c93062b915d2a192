//! Exact combinatorics for the quotient of the Grassmannian `G(r,n)` by the
//! one-parameter subgroup `λ = nλ_s` of `SL(n)`, linearized by the Plücker
//! bundle.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: weights
//! are machine integers, dimensions are [`BigUint`]s.
//!
//! Layout:
//!
//! * [`weyl`]: permutations, reduced words, Bruhat order on `r`-subsets and the
//!   distinguished words `w_{s,r}`, `w₀^{S∖{α_r}}`, `w̃`.
//! * [`params`], [`semistability`]: the `(n,r,s)` triple, λ-weights,
//!   Hilbert–Mumford values and the Richardson-cell index set `A`.
//! * [`quotient`]: induction-case detection, fibration data, orbit strata and
//!   the aggregated [`QuotientReport`](quotient::QuotientReport).
//! * [`bwb`]: Borel–Weil–Bott on `SL(m)` and line-bundle cohomology tables.
//! * [`rep`]: Weyl dimensions, SSYT counts, the invariant Hilbert function,
//!   Cauchy and `H`-module decompositions, Plücker straightening and the
//!   finite projective-normality check.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod budget;
pub mod bwb;
pub mod combin;
pub mod error;
pub mod linalg;
pub mod params;
pub mod quotient;
pub mod rep;
pub mod semistability;
pub mod weyl;

pub use budget::EnumBudget;
pub use error::{Error, Result};
pub use num_bigint::{BigInt, BigUint};
pub use params::{GrassParams, KIndex};
pub use weyl::{Permutation, RSubset, ReducedWord};
