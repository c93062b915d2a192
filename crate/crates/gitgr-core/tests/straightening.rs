use gitgr_core::rep::generation::{generation_checks, plucker_dependencies, zero_weight_standard_monomials};
use gitgr_core::rep::straighten::{is_standard, straighten};
use gitgr_core::rep::{generation_in_degree_one, invariant_hilbert};
use gitgr_core::{BigInt, BigUint, EnumBudget, Error, GrassParams, RSubset};
use proptest::prelude::*;

/// Determinant by the Leibniz expansion.
fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut total = BigInt::from(0);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut term = BigInt::from(if inv % 2 == 0 { 1 } else { -1 });
        for (row, &col) in perm.iter().enumerate() {
            term *= m[row][col];
        }
        total += term;
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return total;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// Maximal minor of an `r × n` matrix on the columns in `cols`.
fn minor(matrix: &[Vec<i64>], cols: &RSubset) -> BigInt {
    let sub: Vec<Vec<i64>> =
        matrix.iter().map(|row| cols.elems().iter().map(|&c| row[c as usize - 1]).collect()).collect();
    det(&sub)
}

fn case_strategy() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<RSubset>)> {
    (1usize..4).prop_flat_map(|r| (Just(r), (r + 1)..7)).prop_flat_map(|(r, n)| {
        let matrix = prop::collection::vec(prop::collection::vec(-4i64..5, n), r);
        let column = prop::sample::subsequence((1..=n as u32).collect::<Vec<_>>(), r)
            .prop_map(move |v| RSubset::new(v, n as u32).unwrap());
        (matrix, prop::collection::vec(column, 2..5))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn straightening_preserves_values((matrix, columns) in case_strategy()) {
        let lhs: BigInt = columns.iter().map(|c| minor(&matrix, c)).product();
        let expansion = straighten(&columns).unwrap();
        let mut rhs = BigInt::from(0);
        for (mono, coeff) in &expansion {
            prop_assert!(is_standard(mono));
            let value: BigInt = mono.iter().map(|c| minor(&matrix, c)).product();
            rhs += coeff * value;
        }
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn standard_monomials_count_the_hilbert_function() {
    let budget = EnumBudget::default();
    for n in 2..=6 {
        for p in GrassParams::all_for(n) {
            for d in 0..=3 {
                let basis = zero_weight_standard_monomials(&p, d, &budget).unwrap();
                assert_eq!(BigUint::from(basis.len()), invariant_hilbert(&p, d, &budget).unwrap(), "{p} d={d}");
                assert!(basis.iter().all(|m| is_standard(m)));
            }
        }
    }
}

#[test]
fn three_two_two_generates_in_degree_one() {
    let p = GrassParams::new(3, 2, 2).unwrap();
    let checks = generation_checks(&p, 3, &EnumBudget::default()).unwrap();
    let summary: Vec<(u32, usize, usize)> = checks.iter().map(|c| (c.m, c.products, c.rank)).collect();
    // x², xy, y², … span O(2m) on the conic: dimensions 5 and 7
    assert_eq!(summary, vec![(2, 6, 5), (3, 10, 7)]);
    assert!(checks.iter().all(|c| c.passes()));
}

#[test]
fn four_two_two_is_a_polynomial_ring() {
    let p = GrassParams::new(4, 2, 2).unwrap();
    let checks = generation_checks(&p, 3, &EnumBudget::default()).unwrap();
    let summary: Vec<(usize, usize)> = checks.iter().map(|c| (c.products, c.rank)).collect();
    // products of four variables are independent
    assert_eq!(summary, vec![(10, 10), (20, 20)]);
}

#[test]
fn four_two_two_quadratic_relation() {
    let p = GrassParams::new(4, 2, 2).unwrap();
    let deps = plucker_dependencies(&p, 2, &EnumBudget::default()).unwrap();
    assert_eq!(deps.monomials.len(), 11);
    assert_eq!(deps.rank, 10);
    assert_eq!(deps.relations.len(), 1);
    let col = |v: &[u32]| RSubset::new(v.to_vec(), 4).unwrap();
    let coeff = |a: &[u32], b: &[u32]| {
        let idx = deps.monomials.iter().position(|m| m == &vec![col(a), col(b)]).unwrap();
        deps.relations[0][idx].clone()
    };
    let (c1, c2, c3) = (coeff(&[1, 2], &[3, 4]), coeff(&[1, 3], &[2, 4]), coeff(&[1, 4], &[2, 3]));
    assert_eq!(c1, -c2.clone());
    assert_eq!(c3, c1);
    let support = deps.relations[0].iter().filter(|c| **c != BigInt::from(0)).count();
    assert_eq!(support, 3);
}

#[test]
fn induction_cases_generate_in_degree_one() {
    let budget = EnumBudget::default();
    for (n, r, s) in [(2, 1, 1), (4, 1, 1), (4, 1, 2), (5, 1, 2), (5, 1, 1), (4, 3, 3)] {
        let p = GrassParams::new(n, r, s).unwrap();
        assert!(generation_in_degree_one(&p, 2, &budget).unwrap(), "{p}");
    }
}

#[test]
fn large_products_hit_the_cap_early() {
    let p = GrassParams::new(5, 2, 2).unwrap();
    let err = generation_checks(&p, 2, &EnumBudget::default()).unwrap_err();
    assert!(matches!(err, Error::Resource { what: "product matrix entries", .. }));
}

#[test]
fn generation_respects_the_cap() {
    let p = GrassParams::new(4, 2, 2).unwrap();
    assert!(matches!(generation_checks(&p, 3, &EnumBudget::new(5)), Err(Error::Resource { .. })));
}
