use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::partition::Partition;

/// Number of semistandard tableaux of skew shape `outer / inner` with entries
/// in `{1..max_entry}`.
///
/// Counts chains `inner = μ⁰ ⊆ μ¹ ⊆ ⋯ ⊆ μ^{max_entry} = outer` of horizontal
/// strips. Independent of the Weyl formula.
pub fn ssyt_count_skew(outer: &Partition, inner: &Partition, max_entry: u32) -> BigUint {
    if !inner.contained_in(outer) {
        return BigUint::zero();
    }
    let rows = outer.len();
    let pad = |p: &Partition| (0..rows).map(|i| p.part(i)).collect::<Vec<u32>>();
    let target = pad(outer);
    let mut layer: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    layer.insert(pad(inner), BigUint::one());
    for _ in 0..max_entry {
        let mut next: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
        for (shape, count) in &layer {
            for_each_strip(shape, &target, |grown| {
                *next.entry(grown.to_vec()).or_default() += count;
            });
        }
        layer = next;
    }
    layer.remove(&target).unwrap_or_default()
}

/// Number of semistandard tableaux of shape `λ` with entries in `{1..max_entry}`.
pub fn ssyt_count(shape: &Partition, max_entry: u32) -> BigUint {
    ssyt_count_skew(shape, &Partition::empty(), max_entry)
}

/// Calls `f` on every `μ ⊆ target` with `μ / ν` a horizontal strip:
/// `ν_i ≤ μ_i ≤ min(target_i, ν_{i−1})`.
fn for_each_strip(nu: &[u32], target: &[u32], mut f: impl FnMut(&[u32])) {
    let mut mu = nu.to_vec();
    fn go(i: usize, nu: &[u32], target: &[u32], mu: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if i == nu.len() {
            f(mu);
            return;
        }
        let cap = if i == 0 { target[0] } else { target[i].min(nu[i - 1]) };
        for x in nu[i]..=cap {
            mu[i] = x;
            go(i + 1, nu, target, mu, f);
        }
        mu[i] = nu[i];
    }
    go(0, nu, target, &mut mu, &mut f);
}
