use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use super::hilbert::{invariant_hilbert, least_invariant_degree};
use super::partition::{sl_dual, sl_normalize, weyl_dim, Partition};
use crate::budget::EnumBudget;
use crate::combin::partitions;
use crate::error::{CalibrationCandidate, Error, Result};
use crate::params::GrassParams;
use crate::quotient::detect_induction_case;

/// Irreducible module `V_{SL(left_rank)}(left) ⊗ V_{SL(right_rank)}(right)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeightPair {
    pub left_rank: u32,
    pub left: Partition,
    pub right_rank: u32,
    pub right: Partition,
    pub dim: BigUint,
}

impl HighestWeightPair {
    pub fn new(left_rank: u32, left: Partition, right_rank: u32, right: Partition) -> Result<Self> {
        let dim = weyl_dim(left_rank, &left)? * weyl_dim(right_rank, &right)?;
        Ok(HighestWeightPair { left_rank, left, right_rank, right, dim })
    }
}

/// `(a − ν_rows, …, a − ν_1)`: the complement of `ν` in the `rows × a` box,
/// rotated by 180°.
pub fn box_complement(a: u32, rows: u32, nu: &Partition) -> Vec<i64> {
    (0..rows as usize).rev().map(|i| i64::from(a) - i64::from(nu.part(i))).collect()
}

/// Summands of `H⁰(ℙ(M_{u,v}), O(a)) = Sym^a` of a `u·v`-dimensional space:
/// one per partition `ν ⊢ a` with at most `min(u,v)` parts, paired as
/// `(ν, box complement of ν in v rows)` on `SL(u) × SL(v)`.
pub fn cauchy_sections(u: u32, v: u32, a: u32) -> Result<Vec<HighestWeightPair>> {
    if u == 0 || v == 0 {
        return Err(Error::domain(format!("fiber shape {u}x{v} must be positive")));
    }
    partitions(a, u.min(v) as usize, a)
        .into_iter()
        .map(|parts| {
            let nu = Partition::new(parts)?;
            let left = sl_normalize(u, &to_i64(&nu))?;
            let right = sl_normalize(v, &box_complement(a, v, &nu))?;
            HighestWeightPair::new(u, left, v, right)
        })
        .collect()
}

/// Summands of `H⁰(X, L(bϖ_k) ⊗ O_Y(a))` as `SL(s) × SL(n−s)`-modules.
///
/// For `r + s ≤ n` each `ν` of the fiber decomposition gives
/// `(ν, ν̄ + bϖ_r)` where `ν̄` is the box complement of `ν` in `r` rows. For
/// `r + s > n` the dual triple is decomposed and both factors are swapped and
/// dualized.
pub fn decompose_sections(params: &GrassParams, a: u32, b: u32) -> Result<Vec<HighestWeightPair>> {
    if !detect_induction_case(params) {
        return Err(Error::unsupported(format!("{params} is not a parabolic-induction case")));
    }
    if params.excess() <= 0 {
        return decompose_low(params, a, b);
    }
    let (n, s) = (params.n(), params.s());
    decompose_low(&params.dual(), a, b)?
        .into_iter()
        .map(|pair| HighestWeightPair::new(s, sl_dual(s, &pair.right), n - s, sl_dual(n - s, &pair.left)))
        .collect()
}

fn decompose_low(params: &GrassParams, a: u32, b: u32) -> Result<Vec<HighestWeightPair>> {
    let (n, r, s) = (params.n(), params.r(), params.s());
    debug_assert!(r + s <= n);
    partitions(a, r.min(s) as usize, a)
        .into_iter()
        .map(|parts| {
            let nu = Partition::new(parts)?;
            let left = sl_normalize(s, &to_i64(&nu))?;
            let mut right = box_complement(a, r, &nu);
            right.iter_mut().for_each(|x| *x += i64::from(b));
            right.resize((n - s) as usize, 0);
            let right = sl_normalize(n - s, &right)?;
            HighestWeightPair::new(s, left, n - s, right)
        })
        .collect()
}

fn to_i64(p: &Partition) -> Vec<i64> {
    p.parts().iter().map(|&x| i64::from(x)).collect()
}

/// Sum of the summand dimensions.
pub fn total_dim(pairs: &[HighestWeightPair]) -> BigUint {
    pairs.iter().map(|p| &p.dim).sum()
}

/// No highest-weight pair occurs twice.
pub fn is_multiplicity_free(pairs: &[HighestWeightPair]) -> bool {
    let mut keys: Vec<(&Partition, &Partition)> = pairs.iter().map(|p| (&p.left, &p.right)).collect();
    keys.sort();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// Result of matching the descended bundle against the Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Calibration {
    /// Least Plücker degree with a nonzero invariant.
    pub d_min: u32,
    pub a: u32,
    pub b: u32,
    /// `h(d_min)` and `h(2·d_min)`.
    pub targets: [BigUint; 2],
}

/// Finds `(a, b)` with `Σ dim decompose_sections(a, b) = h(d_min)` and
/// `Σ dim decompose_sections(2a, 2b) = h(2·d_min)`, scanning
/// `a, b ∈ 0..=d_min` with `a` outermost.
///
/// Matching the first degree alone admits accidental coincidences of
/// dimension counts; the second degree removes them.
pub fn calibrate_descent(params: &GrassParams, budget: &EnumBudget) -> Result<Calibration> {
    if !detect_induction_case(params) {
        return Err(Error::unsupported(format!("{params} is not a parabolic-induction case")));
    }
    let (d_min, h_min) = least_invariant_degree(params, budget)?;
    let targets = [h_min, invariant_hilbert(params, 2 * d_min, budget)?];
    let mut candidates = Vec::new();
    for a in 0..=d_min {
        for b in 0..=d_min {
            let first = total_dim(&decompose_sections(params, a, b)?);
            if first != targets[0] {
                continue;
            }
            let second = total_dim(&decompose_sections(params, 2 * a, 2 * b)?);
            if second == targets[1] {
                return Ok(Calibration { d_min, a, b, targets });
            }
            candidates.push(CalibrationCandidate { a: a.into(), b: b.into(), dims: vec![first, second] });
        }
    }
    Err(Error::Calibration { targets: targets.to_vec(), candidates })
}
