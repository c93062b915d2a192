//! λ-weights of Plücker coordinates, Hilbert–Mumford values, and the index set
//! `A` of Richardson cells making up the semistable locus.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::budget::EnumBudget;
use crate::combin::{binomial, binomial_u128};
use crate::error::{Error, Result};
use crate::params::GrassParams;
use crate::weyl::{bruhat_leq, RSubset};

/// Weights of `λ = nλ_s` on the standard basis: `n−s` on the first `s`
/// vectors and `−s` on the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaWeights {
    weights: Vec<i64>,
}

impl LambdaWeights {
    pub fn new(params: &GrassParams) -> Self {
        let (n, s) = (i64::from(params.n()), i64::from(params.s()));
        let weights = (1..=n).map(|i| if i <= s { n - s } else { -s }).collect();
        LambdaWeights { weights }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Sum of the weights over `I`.
    pub fn of_subset(&self, subset: &RSubset) -> i64 {
        subset.elems().iter().map(|&i| self.weights[i as usize - 1]).sum()
    }
}

/// `wt(p_I) = n·|I ∩ {1..s}| − rs`.
pub fn plucker_weight(subset: &RSubset, params: &GrassParams) -> i64 {
    let c = i64::from(subset.count_at_most(params.s()));
    i64::from(params.n()) * c - i64::from(params.r()) * i64::from(params.s())
}

/// Which Borel the cell is taken for: `Plus` is `B`, `Minus` is `B⁻`
/// (equivalently the one-parameter subgroup `−λ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Hilbert–Mumford value `μ(x, ±λ) = ∓wt(p_I)` at a point of the cell of `I`.
pub fn mu(subset: &RSubset, sign: Sign, params: &GrassParams) -> i64 {
    -sign.value() * plucker_weight(subset, params)
}

/// The componentwise-least `I` with `wt(p_I) ≤ 0`:
/// `{1..p} ∪ {s+1..s+r−p}`.
pub fn minimal_semistable_subset(params: &GrassParams) -> RSubset {
    let (r, s, p) = (params.r(), params.s(), params.p());
    let elems = (1..=p).chain(s + 1..=s + r - p).collect();
    RSubset::from_sorted_unchecked(elems)
}

/// Fixed points of the torus split by the sign of their λ-weight. Each list
/// is in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightClasses {
    pub positive: Vec<RSubset>,
    pub zero: Vec<RSubset>,
    pub negative: Vec<RSubset>,
}

impl WeightClasses {
    pub fn total(&self) -> usize {
        self.positive.len() + self.zero.len() + self.negative.len()
    }
}

fn check_subset_budget(params: &GrassParams, budget: &EnumBudget) -> Result<()> {
    let count = binomial_u128(u64::from(params.n()), u64::from(params.r()));
    budget.check("r-subsets", count)
}

pub fn classify_fixed_points(params: &GrassParams, budget: &EnumBudget) -> Result<WeightClasses> {
    check_subset_budget(params, budget)?;
    let mut classes = WeightClasses::default();
    for subset in RSubset::all(params.n(), params.r()) {
        match plucker_weight(&subset, params).signum() {
            1 => classes.positive.push(subset),
            0 => classes.zero.push(subset),
            _ => classes.negative.push(subset),
        }
    }
    Ok(classes)
}

/// A Richardson cell `R_{v,φ}`, nonempty because `v ≤ φ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RichardsonPair {
    pub v: RSubset,
    pub phi: RSubset,
}

/// All `(v, φ)` with `v ≱ I_{w_{s,r}}`, `φ ≥ I_{w_{s,r}}` and `v ≤ φ`; when
/// `w` is given, additionally `φ ≤ w`. Sorted lexicographically by `(v, φ)`.
pub fn enumerate_a(params: &GrassParams, w: Option<&RSubset>, budget: &EnumBudget) -> Result<Vec<RichardsonPair>> {
    check_w(params, w)?;
    check_subset_budget(params, budget)?;
    let min = minimal_semistable_subset(params);
    let geq_min = |x: &RSubset| bruhat_leq(&min, x).expect("same size");
    let all: Vec<RSubset> = RSubset::all(params.n(), params.r()).collect();
    let vs: Vec<&RSubset> = all.iter().filter(|x| !geq_min(x)).collect();
    let phis: Vec<&RSubset> =
        all.iter().filter(|x| geq_min(x) && w.is_none_or(|w| bruhat_leq(x, w).expect("same size"))).collect();
    collect_pairs(&vs, &phis, budget)
}

/// Same set as [`enumerate_a`], selected through weights:
/// `wt(p_v) > 0`, `wt(p_φ) ≤ 0`, `v ≤ φ`.
pub fn enumerate_a_by_weight(
    params: &GrassParams,
    w: Option<&RSubset>,
    budget: &EnumBudget,
) -> Result<Vec<RichardsonPair>> {
    check_w(params, w)?;
    let classes = classify_fixed_points(params, budget)?;
    let vs: Vec<&RSubset> = classes.positive.iter().collect();
    let mut phis: Vec<&RSubset> = classes
        .zero
        .iter()
        .chain(&classes.negative)
        .filter(|x| w.is_none_or(|w| bruhat_leq(x, w).expect("same size")))
        .collect();
    phis.sort();
    collect_pairs(&vs, &phis, budget)
}

fn check_w(params: &GrassParams, w: Option<&RSubset>) -> Result<()> {
    if let Some(w) = w {
        if w.len() != params.r() as usize || w.elems().last().copied().unwrap_or(0) > params.n() {
            return Err(Error::domain(format!("{w} is not an r-subset for {params}")));
        }
    }
    Ok(())
}

fn collect_pairs(vs: &[&RSubset], phis: &[&RSubset], budget: &EnumBudget) -> Result<Vec<RichardsonPair>> {
    budget.check("Richardson candidate pairs", vs.len() as u128 * phis.len() as u128)?;
    let mut out = Vec::new();
    for v in vs {
        for phi in phis {
            if bruhat_leq(v, phi).expect("same size") {
                out.push(RichardsonPair { v: (*v).clone(), phi: (*phi).clone() });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Semistable equals stable exactly when `n ∤ rs`.
pub fn ss_equals_stable(params: &GrassParams) -> bool {
    !(params.r() * params.s()).is_multiple_of(params.n())
}

/// `{n+1−i : i ∉ I}`; pairs fixed points of `(n,r,s)` with those of
/// `(n,n−r,n−s)` and preserves λ-weights.
pub fn dual_subset(subset: &RSubset, n: u32) -> RSubset {
    subset.dual(n)
}

/// `C(s, rs/n)·C(n−s, r−rs/n)` when `n | rs`, else `0`.
pub fn zero_weight_count(params: &GrassParams) -> BigUint {
    let (n, r, s) = (u64::from(params.n()), u64::from(params.r()), u64::from(params.s()));
    if (r * s) % n != 0 {
        return BigUint::default();
    }
    let c = r * s / n;
    binomial(s, c) * binomial(n - s, r - c)
}
