//! Finite checks of generation in degree one for the invariant ring, done
//! with explicit Plücker monomials and straightening.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use super::hilbert::{invariant_hilbert, least_invariant_degree};
use super::straighten::{monomial, straighten, Monomial};
use crate::budget::EnumBudget;
use crate::combin::{binomial_u128, multisets};
use crate::error::{Error, Result};
use crate::linalg::{kernel, rank};
use crate::params::GrassParams;
use crate::quotient::{detect_induction_case, golden_identification};
use crate::weyl::{bruhat_leq, RSubset};

/// Standard monomials of Plücker degree `d` and λ-weight zero, i.e. column
/// chains `I₁ ≤ ⋯ ≤ I_d` with `rsd/n` entries at most `s` in total. They form
/// a basis of the degree-`d` invariants.
pub fn zero_weight_standard_monomials(params: &GrassParams, d: u32, budget: &EnumBudget) -> Result<Vec<Monomial>> {
    let h = invariant_hilbert(params, d, budget)?;
    budget.check("standard monomials", u128::try_from(&h).unwrap_or(u128::MAX))?;
    if d == 0 {
        return Ok(alloc::vec![Vec::new()]);
    }
    let rsd = params.r() * params.s() * d;
    if !rsd.is_multiple_of(params.n()) {
        return Ok(Vec::new());
    }
    let columns: Vec<RSubset> = RSubset::all(params.n(), params.r()).collect();
    let mut out = Vec::new();
    let mut chain = Vec::new();
    chains(&columns, params.s(), d as usize, rsd / params.n(), &mut chain, &mut out);
    Ok(out)
}

fn chains(columns: &[RSubset], s: u32, len: usize, remaining: u32, chain: &mut Vec<usize>, out: &mut Vec<Monomial>) {
    if chain.len() == len {
        if remaining == 0 {
            out.push(chain.iter().map(|&i| columns[i].clone()).collect());
        }
        return;
    }
    let start = chain.last().copied().unwrap_or(0);
    for i in start..columns.len() {
        if let Some(&prev) = chain.last() {
            if !bruhat_leq(&columns[prev], &columns[i]).expect("same size") {
                continue;
            }
        }
        let w = columns[i].count_at_most(s);
        if w > remaining {
            continue;
        }
        chain.push(i);
        chains(columns, s, len, remaining - w, chain, out);
        chain.pop();
    }
}

/// Outcome of the generation check in one `M`-degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationCheck {
    /// `M`-degree; the Plücker degree is `m·d_min`.
    pub m: u32,
    /// Number of products of `m` degree-one invariants.
    pub products: usize,
    /// Rank of their span after straightening.
    pub rank: usize,
    /// `h(m·d_min)`.
    pub expected: BigUint,
}

impl GenerationCheck {
    pub fn passes(&self) -> bool {
        BigUint::from(self.rank) == self.expected
    }
}

/// For `m = 2..=max_degree`, the rank of the span of all products of `m`
/// degree-one invariants, next to `h(m·d_min)`. One `M`-degree is `d_min`
/// Plücker degrees.
pub fn generation_checks(params: &GrassParams, max_degree: u32, budget: &EnumBudget) -> Result<Vec<GenerationCheck>> {
    if !detect_induction_case(params) && golden_identification(params).is_none() {
        return Err(Error::unsupported(format!(
            "generation check is only available in parabolic-induction cases and the two small cases, not {params}"
        )));
    }
    if max_degree < 2 {
        return Ok(Vec::new());
    }
    let (d_min, _) = least_invariant_degree(params, budget)?;
    let basis = zero_weight_standard_monomials(params, d_min, budget)?;
    let mut out = Vec::new();
    for m in 2..=max_degree {
        let products = binomial_u128((basis.len() + m as usize - 1) as u64, u64::from(m));
        let expected = invariant_hilbert(params, m * d_min, budget)?;
        // the matrix has one row per product and at most h(m·d_min) columns
        budget
            .check("product matrix entries", products.saturating_mul(u128::try_from(&expected).unwrap_or(u128::MAX)))?;
        let mut rows = Vec::new();
        for choice in multisets(basis.len(), m as usize) {
            let cols: Vec<RSubset> = choice.iter().flat_map(|&i| basis[i].iter().cloned()).collect();
            rows.push(straighten(&cols)?);
        }
        let products = rows.len();
        let (matrix, width) = to_matrix(&rows);
        out.push(GenerationCheck { m, products, rank: rank(&matrix, width), expected });
    }
    Ok(out)
}

/// `true` iff every check of [`generation_checks`] up to `max_degree` passes.
pub fn generation_in_degree_one(params: &GrassParams, max_degree: u32, budget: &EnumBudget) -> Result<bool> {
    Ok(generation_checks(params, max_degree, budget)?.iter().all(GenerationCheck::passes))
}

/// Linear relations among all λ-invariant Plücker monomials of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerDependencies {
    /// Every weight-zero monomial of the degree, sorted.
    pub monomials: Vec<Monomial>,
    /// Dimension of their span.
    pub rank: usize,
    /// Integer basis of the relations, indexed like `monomials`.
    pub relations: Vec<Vec<BigInt>>,
}

/// All weight-zero monomials of Plücker degree `degree`, straightened, with
/// the rank of their span and the space of relations among them.
pub fn plucker_dependencies(params: &GrassParams, degree: u32, budget: &EnumBudget) -> Result<PluckerDependencies> {
    let columns: Vec<RSubset> = RSubset::all(params.n(), params.r()).collect();
    let count = binomial_u128((columns.len() + degree as usize - 1) as u64, u64::from(degree));
    budget.check("Plücker monomials", count)?;
    let rsd = params.r() * params.s() * degree;
    let mut monomials = Vec::new();
    if rsd.is_multiple_of(params.n()) {
        let target = rsd / params.n();
        for choice in multisets(columns.len(), degree as usize) {
            let small: u32 = choice.iter().map(|&i| columns[i].count_at_most(params.s())).sum();
            if small == target {
                monomials.push(monomial(choice.iter().map(|&i| columns[i].clone()).collect()));
            }
        }
    }
    let rows = monomials.iter().map(|m| straighten(m)).collect::<Result<Vec<_>>>()?;
    let (matrix, width) = to_matrix(&rows);
    // relations are kernel vectors of the transpose
    let transpose: Vec<Vec<BigInt>> = (0..width).map(|c| matrix.iter().map(|row| row[c].clone()).collect()).collect();
    Ok(PluckerDependencies { rank: rank(&matrix, width), relations: kernel(&transpose, monomials.len()), monomials })
}

/// Dense coordinates over the standard monomials that occur.
fn to_matrix(rows: &[BTreeMap<Monomial, BigInt>]) -> (Vec<Vec<BigInt>>, usize) {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for row in rows {
        for key in row.keys() {
            let next = index.len();
            index.entry(key).or_insert(next);
        }
    }
    let width = index.len();
    let matrix = rows
        .iter()
        .map(|row| {
            let mut v = alloc::vec![BigInt::default(); width];
            for (k, c) in row {
                v[index[k]] = c.clone();
            }
            v
        })
        .collect();
    (matrix, width)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_bases() {
        let b = EnumBudget::default();
        let p = GrassParams::new(3, 2, 2).unwrap();
        assert_eq!(zero_weight_standard_monomials(&p, 3, &b).unwrap().len(), 3);
        assert!(zero_weight_standard_monomials(&p, 2, &b).unwrap().is_empty());
        let p = GrassParams::new(4, 2, 2).unwrap();
        assert_eq!(zero_weight_standard_monomials(&p, 1, &b).unwrap().len(), 4);
    }

    #[test]
    fn trivial_degrees_pass() {
        let b = EnumBudget::default();
        let p = GrassParams::new(5, 2, 2).unwrap();
        assert!(generation_in_degree_one(&p, 0, &b).unwrap());
        assert!(generation_in_degree_one(&p, 1, &b).unwrap());
    }

    #[test]
    fn unsupported_outside_known_cases() {
        let p = GrassParams::new(6, 2, 3).unwrap();
        let err = generation_in_degree_one(&p, 2, &EnumBudget::default()).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
    }
}
