use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
///
/// Read as a polynomial weight of `GL(m)` or, after dropping full columns, as a
/// dominant weight of `SL(m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&x| x >= c).count() as u32).collect();
        Partition { parts }
    }

    /// Rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: u32, cols: u32) -> Partition {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: alloc::vec![cols; rows as usize] }
    }

    /// `λ ⊆ μ` as Young diagrams.
    pub fn contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order among partitions of equal size.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str("(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Dominant `SL(m)` weight from integer `ε`-coordinates: pads to length `m`,
/// subtracts the last entry and drops zeros.
pub fn sl_normalize(m: u32, weights: &[i64]) -> Result<Partition> {
    let m = m as usize;
    if weights.len() > m {
        return Err(Error::domain(format!("{} coordinates exceed rank {m}", weights.len())));
    }
    let mut w = weights.to_vec();
    w.resize(m, 0);
    if w.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::domain(format!("{weights:?} is not dominant")));
    }
    let last = w.last().copied().unwrap_or(0);
    let parts = w.iter().map(|&x| (x - last) as u32).collect();
    Partition::new(parts)
}

/// Highest weight of the dual representation: `(λ₁−λ_m, λ₁−λ_{m−1}, …)`.
pub fn sl_dual(m: u32, lam: &Partition) -> Partition {
    let m = m as usize;
    let top = lam.part(0);
    let parts = (0..m).map(|i| top - lam.part(m - 1 - i)).collect();
    Partition::new(parts).expect("dual of a partition is a partition")
}

/// Weyl dimension of the `GL(m)` module with highest weight `λ`:
/// `∏_{i<j} (λ_i − λ_j + j − i)/(j − i)`.
///
/// The same number is the `SL(m)` dimension, and the count of semistandard
/// tableaux of shape `λ` with entries at most `m`.
pub fn weyl_dim(m: u32, lam: &Partition) -> Result<BigUint> {
    if lam.len() > m as usize {
        return Err(Error::domain(format!("{lam} has more than {m} parts")));
    }
    let coords: Vec<i64> = (0..m as usize).map(|i| i64::from(lam.part(i))).collect();
    Ok(weyl_dim_dominant(&coords))
}

/// Weyl dimension for a weakly decreasing integer vector of length `m`.
pub(crate) fn weyl_dim_dominant(coords: &[i64]) -> BigUint {
    let m = coords.len();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m {
        for j in i + 1..m {
            let gap = (j - i) as i64;
            num *= (coords[i] - coords[j] + gap) as u64;
            den *= gap as u64;
        }
    }
    num / den
}
