//! Structure of the quotient `X = λ \\ G(r,n)^{ss}` as a report: induction
//! case, base and fiber of the fibration, `H`-orbits, Picard rank and the
//! descriptors attached to them.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::params::{GrassParams, KIndex};
use crate::semistability::{minimal_semistable_subset, ss_equals_stable};
use crate::weyl::RSubset;

/// `p = 0`, or `p = r+s−n` with `r+s ≥ n`. Exactly then `s_s ≰ w̃` and `X`
/// is induced from a projective space of matrices.
pub fn detect_induction_case(params: &GrassParams) -> bool {
    params.p() == 0 || params.excess() == i64::from(params.p())
}

/// Factor of `H = SL(s) × SL(n−s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HFactor {
    /// `SL(s)`.
    Left,
    /// `SL(n−s)`.
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseSpace {
    /// `P_{s,r} = H`.
    Point,
    /// `G(node, rank)` for the factor `SL(rank)`, the parabolic sitting at
    /// simple root `node` of that factor.
    Grassmannian { factor: HFactor, rank: u32, node: u32 },
}

/// The base `H/P_{s,r}` of `X → H/P_{s,r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BaseFibration {
    pub dim: u32,
    pub space: BaseSpace,
}

fn require_induction(params: &GrassParams) -> Result<()> {
    if detect_induction_case(params) {
        Ok(())
    } else {
        Err(Error::unsupported(format!("{params} is not a parabolic-induction case")))
    }
}

/// Identifies `H/P_{s,r}`.
///
/// Its dimension is `r(n−r) − (r−p)(s−p)`. The parabolic is maximal at the
/// `SL(n)` node `k`; both readings of that node inside `H` are tried, as node
/// `k−s` of `SL(n−s)` and as node `k` of `SL(s)`, and the one whose
/// Grassmannian has the right dimension is kept.
pub fn base_fibration(params: &GrassParams) -> Result<BaseFibration> {
    require_induction(params)?;
    let (n, s) = (params.n(), params.s());
    let (u, v) = params.fiber_shape();
    let dim = params.grassmannian_dim() - u * v;
    let k = match params.k() {
        KIndex::Boundary if dim == 0 => return Ok(BaseFibration { dim, space: BaseSpace::Point }),
        KIndex::Boundary => {
            return Err(Error::invariant(format!("{params}: r+s = n but the base has dimension {dim}")))
        }
        KIndex::Node(k) => i64::from(k),
    };
    let candidates = [(HFactor::Right, n - s, k - i64::from(s)), (HFactor::Left, s, k)];
    let fits: Vec<BaseSpace> = candidates
        .iter()
        .filter(|&&(_, rank, node)| node >= 1 && node < i64::from(rank))
        .filter(|&&(_, rank, node)| node * (i64::from(rank) - node) == i64::from(dim))
        .map(|&(factor, rank, node)| BaseSpace::Grassmannian { factor, rank, node: node as u32 })
        .collect();
    match fits.as_slice() {
        [space] => Ok(BaseFibration { dim, space: *space }),
        _ => Err(Error::invariant(format!("{params}: {} candidate bases of dimension {dim} for node {k}", fits.len()))),
    }
}

/// One `H`-orbit `O_t` of `X`: matrices of rank `t` in the fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitStratum {
    pub t: u32,
    pub orbit_dim: u32,
    pub closure_dim: u32,
}

/// Orbits `t = 1..=min(r−p, s−p)`, of dimension
/// `dim H/P_{s,r} + t(r+s−2p−t) − 1`; the closure of `O_t` is the union of
/// `O_1, …, O_t`.
pub fn orbit_stratification(params: &GrassParams) -> Result<Vec<OrbitStratum>> {
    let base = base_fibration(params)?;
    let (u, v) = params.fiber_shape();
    Ok((1..=u.min(v))
        .map(|t| {
            let dim = base.dim + t * (u + v - t) - 1;
            OrbitStratum { t, orbit_dim: dim, closure_dim: dim }
        })
        .collect())
}

/// `2` when `r ≠ n−s`, `1` when `r = n−s`.
///
/// This is the case split of the Picard computation. When the fiber
/// `ℙ(M_{s−p,r−p})` is a single point (`r−p = s−p = 1`) and the base is not,
/// `X` equals its base and the true rank is 1.
pub fn picard_rank(params: &GrassParams) -> Result<u32> {
    require_induction(params)?;
    Ok(if params.r() != params.n() - params.s() { 2 } else { 1 })
}

/// Explicit identification of `(X, M)` for the two small cases `(3,2,2)` and
/// `(4,2,2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GoldenIdentification {
    /// `X ≅ ℙ^dim`.
    pub projective_dim: u32,
    /// `M ≅ O(bundle_degree)`.
    pub bundle_degree: u32,
    /// `M` is the descent of `L(source_multiple · ϖ_r)`.
    pub source_multiple: u32,
}

impl GoldenIdentification {
    pub fn description(&self) -> String {
        format!("X ≅ P^{}", self.projective_dim)
    }
}

pub fn golden_identification(params: &GrassParams) -> Option<GoldenIdentification> {
    match (params.n(), params.r(), params.s()) {
        (3, 2, 2) => Some(GoldenIdentification { projective_dim: 1, bundle_degree: 2, source_multiple: 3 }),
        (4, 2, 2) => Some(GoldenIdentification { projective_dim: 3, bundle_degree: 1, source_multiple: 2 }),
        _ => None,
    }
}

/// `PSL(s) × PSL(n−s)`, leaving out trivial `PSL(1)` factors. Factors are
/// listed by increasing rank so that dual triples give the same string.
fn aut0_descriptor(params: &GrassParams) -> String {
    let mut ranks = [params.s(), params.n() - params.s()];
    ranks.sort_unstable();
    let factors: Vec<String> = ranks.iter().filter(|&&m| m > 1).map(|m| format!("PSL({m})")).collect();
    if factors.is_empty() {
        "trivial".to_string()
    } else {
        factors.join("×")
    }
}

/// `X` is a rank-one wonderful variety: induction case with a `2 × 2`
/// fiber, i.e. `r = s = 2` or `r = s = n−2`, with `n ≥ 5`.
pub fn is_wonderful(params: &GrassParams) -> bool {
    detect_induction_case(params) && params.fiber_shape() == (2, 2)
}

/// Structural invariants of `X` for one triple. Fields that only exist in
/// the induction case are `None` elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub params: GrassParams,
    pub p: u32,
    pub k: KIndex,
    pub induction_case: bool,
    /// `(s−p, r−p)`.
    pub fiber_shape: (u32, u32),
    /// The index `{1..p} ∪ {s+1..s+r−p}` of `w_{s,r}`.
    pub w_sr_subset: RSubset,
    pub base: Option<BaseFibration>,
    /// `r(n−r) − 1`.
    pub dim_x: u32,
    pub orbit_count: Option<u32>,
    pub strata: Option<Vec<OrbitStratum>>,
    pub picard_rank: Option<u32>,
    pub fano: Option<bool>,
    pub aut0: Option<String>,
    pub wonderful: bool,
    pub ss_eq_stable: bool,
    pub golden: Option<GoldenIdentification>,
}

pub fn report(params: &GrassParams) -> Result<QuotientReport> {
    let induction = detect_induction_case(params);
    let golden = golden_identification(params);
    let (base, strata, picard) = if induction {
        (Some(base_fibration(params)?), Some(orbit_stratification(params)?), Some(picard_rank(params)?))
    } else {
        (None, None, None)
    };
    Ok(QuotientReport {
        params: *params,
        p: params.p(),
        k: params.k(),
        induction_case: induction,
        fiber_shape: params.fiber_shape(),
        w_sr_subset: minimal_semistable_subset(params),
        base,
        dim_x: params.grassmannian_dim() - 1,
        orbit_count: strata.as_ref().map(|s| s.len() as u32),
        strata,
        picard_rank: picard,
        fano: (induction || golden.is_some()).then_some(true),
        aut0: induction.then(|| aut0_descriptor(params)),
        wonderful: is_wonderful(params),
        ss_eq_stable: ss_equals_stable(params),
        golden,
    })
}
