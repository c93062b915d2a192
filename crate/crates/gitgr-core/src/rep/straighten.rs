//! Straightening of Plücker monomials into standard monomials.
//!
//! A monomial `p_{I₁} ⋯ p_{I_d}` is kept as its lexicographically sorted list
//! of columns; it is standard when consecutive columns are componentwise
//! comparable. Non-standard pairs are rewritten with the Garnir relation,
//! which strictly lowers the sorted column list, so processing the largest
//! monomial first terminates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weyl::{bruhat_leq, RSubset};

/// Sorted list of Plücker columns.
pub type Monomial = Vec<RSubset>;

/// Linear combination of monomials.
pub type Polynomial = BTreeMap<Monomial, BigInt>;

/// Sorts the columns of a monomial.
pub fn monomial(mut columns: Vec<RSubset>) -> Monomial {
    columns.sort();
    columns
}

pub fn is_standard(m: &[RSubset]) -> bool {
    m.windows(2).all(|w| bruhat_leq(&w[0], &w[1]).unwrap_or(false))
}

/// Expresses a monomial in the standard monomial basis.
pub fn straighten(columns: &[RSubset]) -> Result<Polynomial> {
    let mut start = Polynomial::new();
    start.insert(monomial(columns.to_vec()), BigInt::one());
    straighten_poly(start)
}

/// Straightens every term of a polynomial.
pub fn straighten_poly(mut work: Polynomial) -> Result<Polynomial> {
    let mut out = Polynomial::new();
    while let Some((m, coeff)) = work.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let Some(i) = (0..m.len().saturating_sub(1)).find(|&i| !bruhat_leq(&m[i], &m[i + 1]).unwrap_or(false)) else {
            *out.entry(m).or_default() += coeff;
            continue;
        };
        for (pair, c) in garnir(&m[i], &m[i + 1])? {
            let mut cols: Vec<RSubset> = m[..i].iter().chain(&m[i + 2..]).cloned().collect();
            cols.extend(pair);
            let next = monomial(cols);
            if next >= m {
                return Err(Error::invariant(format!("straightening did not descend at {m:?}")));
            }
            *work.entry(next).or_default() += &coeff * c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Rewrites `p_I p_J` (with `I <_lex J` incomparable) as a combination of
/// products of two columns, each lexicographically below `(I, J)`.
fn garnir(i_col: &RSubset, j_col: &RSubset) -> Result<Vec<([RSubset; 2], i64)>> {
    let (ie, je) = (i_col.elems(), j_col.elems());
    let t = (0..ie.len())
        .find(|&t| ie[t] > je[t])
        .ok_or_else(|| Error::invariant(format!("{i_col} and {j_col} are comparable")))?;
    // A = I[t..], B = J[..=t]; every element of B is below every element of A
    let pool: Vec<u32> = ie[t..].iter().chain(&je[..=t]).copied().collect();
    let base_parity = inversions(&pool);
    let a_len = ie.len() - t;
    let mut sorted_pool = pool.clone();
    sorted_pool.sort_unstable();

    let mut terms = Vec::new();
    for mask in subsets_of_size(pool.len(), a_len) {
        let s1: Vec<u32> = (0..pool.len()).filter(|&k| mask & (1 << k) != 0).map(|k| sorted_pool[k]).collect();
        if s1.as_slice() == &ie[t..] {
            continue;
        }
        let s2: Vec<u32> = (0..pool.len()).filter(|&k| mask & (1 << k) == 0).map(|k| sorted_pool[k]).collect();
        let mut split = s1.clone();
        split.extend(&s2);
        let mut sign: i64 = if (base_parity + inversions(&split)).is_multiple_of(2) { 1 } else { -1 };

        let left: Vec<u32> = ie[..t].iter().chain(&s1).copied().collect();
        let right: Vec<u32> = s2.iter().chain(&je[t + 1..]).copied().collect();
        let (Some(lc), Some(rc)) = (signed_sort(left), signed_sort(right)) else {
            continue;
        };
        sign *= lc.1 * rc.1;
        // moved to the other side of the relation
        terms.push(([lc.0, rc.0], -sign));
    }
    Ok(terms)
}

fn inversions(seq: &[u32]) -> usize {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// Sorted column and the sign of the sorting permutation; `None` on repeats.
fn signed_sort(seq: Vec<u32>) -> Option<(RSubset, i64)> {
    let sign = if inversions(&seq).is_multiple_of(2) { 1 } else { -1 };
    RSubset::from_unsorted(seq).map(|s| (s, sign))
}

/// Bitmasks over `0..len` with exactly `k` bits set, in increasing order.
fn subsets_of_size(len: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << len).filter(move |m| m.count_ones() as usize == k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn col(v: &[u32]) -> RSubset {
        RSubset::new(v.to_vec(), 9).unwrap()
    }

    #[test]
    fn three_term_relation() {
        let out = straighten(&[col(&[1, 4]), col(&[2, 3])]).unwrap();
        let mut expected = Polynomial::new();
        expected.insert(vec![col(&[1, 2]), col(&[3, 4])], BigInt::from(-1));
        expected.insert(vec![col(&[1, 3]), col(&[2, 4])], BigInt::from(1));
        assert_eq!(out, expected);
    }

    #[test]
    fn standard_input_is_fixed() {
        let m = vec![col(&[1, 2]), col(&[1, 3]), col(&[2, 4])];
        assert!(is_standard(&m));
        let out = straighten(&m).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[&m], BigInt::one());
    }
}
