use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{CheckedAdd, One, Zero};

use crate::budget::EnumBudget;
use crate::combin::binomial_u128;
use crate::error::{Error, Result};
use crate::params::GrassParams;
use crate::weyl::{bruhat_leq, RSubset};

/// `h(m) = dim H⁰(G(r,n), L(mϖ_r))^λ`: semistandard tableaux of the `r × m`
/// rectangle over `{1..n}` with exactly `rsm/n` entries at most `s`.
///
/// Columns of such a tableau are `r`-subsets forming a componentwise chain, so
/// the count runs a dynamic program over chains of columns tracking the
/// running number of small entries.
pub fn invariant_hilbert(params: &GrassParams, m: u32, budget: &EnumBudget) -> Result<BigUint> {
    let (n, r, s) = (u64::from(params.n()), u64::from(params.r()), u64::from(params.s()));
    if m == 0 {
        return Ok(BigUint::one());
    }
    let rsm = r * s * u64::from(m);
    if rsm % n != 0 {
        return Ok(BigUint::zero());
    }
    let target = (rsm / n) as usize;
    let cols = binomial_u128(n, r);
    budget.check("column-chain steps", cols.saturating_mul(cols).saturating_mul(u128::from(m)))?;

    let columns: Vec<RSubset> = RSubset::all(params.n(), params.r()).collect();
    let small: Vec<usize> = columns.iter().map(|c| c.count_at_most(params.s()) as usize).collect();
    let preds: Vec<Vec<usize>> = (0..columns.len())
        .map(|j| (0..=j).filter(|&i| bruhat_leq(&columns[i], &columns[j]).expect("same size")).collect())
        .collect();
    let table = ChainTable { small: &small, preds: &preds, target, length: m as usize };
    Ok(match table.count::<u128>() {
        Some(v) => BigUint::from(v),
        None => table.count::<BigUint>().expect("big integers do not overflow"),
    })
}

/// `[h(0), …, h(max_degree)]`.
pub fn hilbert_function(params: &GrassParams, max_degree: u32, budget: &EnumBudget) -> Result<Vec<BigUint>> {
    (0..=max_degree).map(|m| invariant_hilbert(params, m, budget)).collect()
}

/// Least `d ≥ 1` with `h(d) > 0`, together with `h(d)`.
pub fn least_invariant_degree(params: &GrassParams, budget: &EnumBudget) -> Result<(u32, BigUint)> {
    // rsd/n is integral at d = n at the latest
    for d in 1..=params.n() {
        let h = invariant_hilbert(params, d, budget)?;
        if !h.is_zero() {
            return Ok((d, h));
        }
    }
    Err(Error::invariant(alloc::format!("no invariant of degree at most n for {params}")))
}

struct ChainTable<'a> {
    small: &'a [usize],
    preds: &'a [Vec<usize>],
    target: usize,
    length: usize,
}

impl ChainTable<'_> {
    /// `None` on overflow of `T`.
    fn count<T: Clone + Zero + One + CheckedAdd>(&self) -> Option<T> {
        let width = self.target + 1;
        let k = self.small.len();
        let mut dp = vec![T::zero(); k * width];
        for (i, &w) in self.small.iter().enumerate() {
            if w <= self.target {
                dp[i * width + w] = T::one();
            }
        }
        for _ in 1..self.length {
            let mut next = vec![T::zero(); k * width];
            for j in 0..k {
                let w = self.small[j];
                if w > self.target {
                    continue;
                }
                for c in 0..=self.target - w {
                    let mut acc = T::zero();
                    for &i in &self.preds[j] {
                        acc = acc.checked_add(&dp[i * width + c])?;
                    }
                    next[j * width + c + w] = acc;
                }
            }
            dp = next;
        }
        let mut total = T::zero();
        for j in 0..k {
            total = total.checked_add(&dp[j * width + self.target])?;
        }
        Some(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: u32, r: u32, s: u32, m: u32) -> u64 {
        let p = GrassParams::new(n, r, s).unwrap();
        u64::try_from(invariant_hilbert(&p, m, &EnumBudget::default()).unwrap()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(h(3, 2, 2, 3), 3);
        assert_eq!(h(3, 2, 2, 6), 5);
        assert_eq!(h(3, 2, 2, 4), 0);
        assert_eq!(h(4, 2, 2, 1), 4);
        assert_eq!(h(4, 2, 2, 2), 10);
        assert_eq!(h(2, 1, 1, 2), 1);
        assert_eq!(h(2, 1, 1, 0), 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let table = ChainTable { small: &[0], preds: &[vec![0]], target: 0, length: 3 };
        assert_eq!(table.count::<u8>(), Some(1));
        let preds = vec![vec![0], vec![0, 1]];
        let table = ChainTable { small: &[0, 0], preds: &preds, target: 0, length: 300 };
        assert_eq!(table.count::<u8>(), None);
        assert_eq!(table.count::<BigUint>(), Some(BigUint::from(301u32)));
    }
}
