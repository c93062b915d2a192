//! Borel–Weil–Bott on `SL(m)` and cohomology of line bundles on `X`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};

use crate::combin::binomial;
use crate::error::{Error, Result};
use crate::params::GrassParams;
use crate::quotient::{base_fibration, BaseSpace};
use crate::rep::partition::weyl_dim_dominant;

/// A single nonvanishing cohomology group: its degree and dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    pub degree: u32,
    pub dim: BigUint,
}

/// Cohomology of the line bundle on `SL(m)/B` attached to the weight
/// `Σ coeffs[i]·ϖ_{i+1}`; `None` when every group vanishes.
///
/// The weight is moved to `ε`-coordinates, shifted by `ρ`, and sorted; the
/// number of inversions is the degree and the Weyl dimension of the sorted
/// weight minus `ρ` is the dimension.
pub fn bott_line_bundle(m: u32, coeffs: &[i64]) -> Result<Option<CohomologyClass>> {
    if m == 0 || coeffs.len() != m as usize - 1 {
        return Err(Error::domain(format!(
            "SL({m}) weight needs {} fundamental-weight coefficients, got {}",
            m.saturating_sub(1),
            coeffs.len()
        )));
    }
    let m = m as usize;
    let mut shifted: Vec<i64> = (0..m).map(|i| coeffs[i..].iter().sum::<i64>() + (m - 1 - i) as i64).collect();
    let mut inversions = 0u32;
    for i in 0..m {
        for j in i + 1..m {
            match shifted[i].cmp(&shifted[j]) {
                core::cmp::Ordering::Equal => return Ok(None),
                core::cmp::Ordering::Less => inversions += 1,
                core::cmp::Ordering::Greater => {}
            }
        }
    }
    shifted.sort_unstable_by(|a, b| b.cmp(a));
    let dominant: Vec<i64> = shifted.iter().enumerate().map(|(i, x)| x - (m - 1 - i) as i64).collect();
    Ok(Some(CohomologyClass { degree: inversions, dim: weyl_dim_dominant(&dominant) }))
}

/// `bϖ_node` on `SL(m)`: the bundle `O(b)` on the Grassmannian `G(node, m)`.
pub fn bott_grassmannian(m: u32, node: u32, b: i64) -> Result<Option<CohomologyClass>> {
    if node == 0 || node >= m {
        return Err(Error::domain(format!("node {node} is not a simple root of SL({m})")));
    }
    let mut coeffs = alloc::vec![0; m as usize - 1];
    coeffs[node as usize - 1] = b;
    bott_line_bundle(m, &coeffs)
}

/// `H^*(ℙ^N, O(a))`: `H⁰` of dimension `C(N+a, a)` for `a ≥ 0`, `H^N` of
/// dimension `C(−a−1, N)` for `a ≤ −N−1`, nothing otherwise.
pub fn proj_space_cohomology(big_n: u32, a: i64) -> Option<CohomologyClass> {
    let n = u64::from(big_n);
    if a >= 0 {
        let a = a as u64;
        Some(CohomologyClass { degree: 0, dim: binomial(n + a, a) })
    } else if a < -(big_n as i64) {
        Some(CohomologyClass { degree: big_n, dim: binomial((-a - 1) as u64, n) })
    } else {
        None
    }
}

/// `L(bϖ_k) ⊗ O_Y(a)` on `X`. When the base is a point only `a` matters and
/// `b` must be zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineBundleOnX {
    pub a: i64,
    pub b: i64,
}

/// Nonvanishing cohomology groups, by increasing degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohomologyTable {
    pub entries: Vec<CohomologyClass>,
}

impl CohomologyTable {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `dim H^i`.
    pub fn dim(&self, i: u32) -> BigUint {
        self.entries.iter().find(|c| c.degree == i).map(|c| c.dim.clone()).unwrap_or_default()
    }
}

/// `Hⁱ(X, L) = ⊕_{p+q=i} H^p(H/P_{s,r}, L(bϖ_k)) ⊗ H^q(Y, O_Y(a))`, with
/// `Y = ℙ(M_{s−p,r−p})`. Each factor is concentrated in one degree.
pub fn cohomology_on_x(params: &GrassParams, bundle: LineBundleOnX) -> Result<CohomologyTable> {
    let base = base_fibration(params)?;
    let (u, v) = params.fiber_shape();
    let base_part = match base.space {
        BaseSpace::Point if bundle.b != 0 => {
            return Err(Error::domain(format!("base of {params} is a point; b must be 0, got {}", bundle.b)))
        }
        BaseSpace::Point => Some(CohomologyClass { degree: 0, dim: BigUint::from(1u32) }),
        BaseSpace::Grassmannian { rank, node, .. } => bott_grassmannian(rank, node, bundle.b)?,
    };
    let fiber_part = proj_space_cohomology(u * v - 1, bundle.a);
    let entries = match (base_part, fiber_part) {
        (Some(x), Some(y)) => alloc::vec![CohomologyClass { degree: x.degree + y.degree, dim: x.dim * y.dim }],
        _ => Vec::new(),
    };
    Ok(CohomologyTable { entries })
}

/// `Σ (−1)^i dim Hⁱ(X, L)`.
pub fn euler_characteristic(params: &GrassParams, bundle: LineBundleOnX) -> Result<BigInt> {
    let table = cohomology_on_x(params, bundle)?;
    Ok(table
        .entries
        .iter()
        .map(|c| {
            let d = BigInt::from(c.dim.clone());
            if c.degree % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .sum())
}
