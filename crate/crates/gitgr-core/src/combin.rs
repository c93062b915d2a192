//! Small exact counting helpers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` saturating into a `u128`, for budget checks.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step since acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul(u128::from(n - i)) {
            Some(v) => v / u128::from(i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All partitions of `total` with at most `max_len` parts, each part at most
/// `max_part`, in reverse lexicographic order (largest first part first).
pub fn partitions(total: u32, max_len: usize, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(total, max_len, max_part, &mut cur, &mut out);
    out
}

fn fill_partitions(remaining: u32, slots: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    let top = remaining.min(cap);
    for part in (1..=top).rev() {
        // the remaining slots must be able to absorb what is left
        if u64::from(part) * (slots as u64) < u64::from(remaining) {
            break;
        }
        cur.push(part);
        fill_partitions(remaining - part, slots - 1, part, cur, out);
        cur.pop();
    }
}

/// Multisets of size `size` drawn from `0..kinds`, as weakly increasing index
/// vectors in lexicographic order.
pub fn multisets(kinds: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    if kinds == 0 {
        return out;
    }
    let mut cur = vec![0usize; size];
    loop {
        out.push(cur.clone());
        // advance the rightmost index that can still grow
        let mut i = size;
        while i > 0 && cur[i - 1] == kinds - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let v = cur[i - 1] + 1;
        for slot in &mut cur[i - 1..] {
            *slot = v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::ZERO);
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial_u128(40, 20), 137_846_528_820);
        assert_eq!(BigUint::from(binomial_u128(60, 30)), binomial(60, 30));
    }

    #[test]
    fn partition_listing() {
        assert_eq!(partitions(4, 2, 4), vec![vec![4], vec![3, 1], vec![2, 2]]);
        assert_eq!(partitions(0, 0, 0), vec![Vec::<u32>::new()]);
        assert_eq!(partitions(5, 3, 2), vec![vec![2, 2, 1]]);
        assert_eq!(partitions(6, 6, 6).len(), 11);
    }

    #[test]
    fn multiset_listing() {
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(4, 3).len(), 20);
        assert_eq!(multisets(0, 0), vec![Vec::<usize>::new()]);
        assert!(multisets(0, 2).is_empty());
    }
}
