use core::fmt;

use crate::error::{Error, Result};

/// The triple `(n, r, s)`: `G(r,n)` acted on by `λ = nλ_s`.
///
/// Construction validates `1 ≤ r, s ≤ n−1`; `p = ⌊rs/n⌋` and the node index
/// `k` are derived on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassParams {
    n: u32,
    r: u32,
    s: u32,
}

/// The `SL(n)` node index attached to the stabilizer of `X(w_{s,r})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KIndex {
    /// `k = r+s` when `r+s ≤ n−1`, `k = r+s−n` when `r+s ≥ n+1`.
    Node(u32),
    /// `r + s = n`.
    Boundary,
}

impl GrassParams {
    pub fn new(n: u32, r: u32, s: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(alloc::format!("n = {n} must be at least 2")));
        }
        if r == 0 || r >= n {
            return Err(Error::domain(alloc::format!("r = {r} must lie in 1..={}", n - 1)));
        }
        if s == 0 || s >= n {
            return Err(Error::domain(alloc::format!("s = {s} must lie in 1..={}", n - 1)));
        }
        Ok(GrassParams { n, r, s })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `⌊rs/n⌋`.
    pub fn p(&self) -> u32 {
        self.r * self.s / self.n
    }

    pub fn k(&self) -> KIndex {
        let sum = self.r + self.s;
        match sum.cmp(&self.n) {
            core::cmp::Ordering::Less => KIndex::Node(sum),
            core::cmp::Ordering::Equal => KIndex::Boundary,
            core::cmp::Ordering::Greater => KIndex::Node(sum - self.n),
        }
    }

    /// `r + s − n` as a signed value.
    pub fn excess(&self) -> i64 {
        i64::from(self.r) + i64::from(self.s) - i64::from(self.n)
    }

    /// The dual triple `(n, n−r, n−s)`.
    pub fn dual(&self) -> GrassParams {
        GrassParams { n: self.n, r: self.n - self.r, s: self.n - self.s }
    }

    /// `dim G(r,n) = r(n−r)`.
    pub fn grassmannian_dim(&self) -> u32 {
        self.r * (self.n - self.r)
    }

    /// Fiber matrix shape `(s−p, r−p)`.
    pub fn fiber_shape(&self) -> (u32, u32) {
        let p = self.p();
        (self.s - p, self.r - p)
    }

    /// All admissible triples with the given `n`, in `(r, s)` lexicographic order.
    pub fn all_for(n: u32) -> impl Iterator<Item = GrassParams> {
        (1..n).flat_map(move |r| (1..n).map(move |s| GrassParams { n, r, s }))
    }
}

impl fmt::Display for GrassParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, r={}, s={})", self.n, self.r, self.s)
    }
}
