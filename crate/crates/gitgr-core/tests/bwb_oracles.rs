use gitgr_core::bwb::{
    bott_grassmannian, bott_line_bundle, cohomology_on_x, euler_characteristic, proj_space_cohomology, CohomologyClass,
    LineBundleOnX,
};
use gitgr_core::combin::binomial;
use gitgr_core::quotient::{base_fibration, detect_induction_case, BaseSpace};
use gitgr_core::rep::partition::Partition;
use gitgr_core::rep::ssyt_count;
use gitgr_core::{BigInt, BigUint, GrassParams};
use proptest::prelude::*;

#[test]
fn global_sections_are_rectangle_tableaux() {
    for m in 2..=8 {
        for node in 1..m {
            for b in 0..=6 {
                let got = bott_grassmannian(m, node, b).unwrap().unwrap();
                assert_eq!(got.degree, 0);
                assert_eq!(got.dim, ssyt_count(&Partition::rectangle(node, b as u32), m), "SL({m}) {b}ϖ_{node}");
            }
        }
    }
}

#[test]
fn grassmannian_serre_duality() {
    // K = O(−m) on G(k, m), of dimension k(m−k)
    for m in 2..=7 {
        for node in 1..m {
            let dim = node * (m - node);
            for b in -12i64..=6 {
                let here = bott_grassmannian(m, node, b).unwrap();
                let there = bott_grassmannian(m, node, -b - i64::from(m)).unwrap();
                match (here, there) {
                    (None, None) => {}
                    (Some(x), Some(y)) => {
                        assert_eq!(x.dim, y.dim);
                        assert_eq!(x.degree + y.degree, dim);
                    }
                    other => panic!("SL({m}) node {node} b={b}: {other:?}"),
                }
            }
        }
    }
}

#[test]
fn flag_variety_serre_duality() {
    // K = −2ρ on SL(m)/B; coefficients range over −5..=3
    for m in 2..=4u32 {
        let dim = m * (m - 1) / 2;
        let len = m as usize - 1;
        for code in 0..9usize.pow(len as u32) {
            let c: Vec<i64> = (0..len).map(|i| (code / 9usize.pow(i as u32) % 9) as i64 - 5).collect();
            let dual: Vec<i64> = c.iter().map(|x| -x - 2).collect();
            match (bott_line_bundle(m, &c).unwrap(), bott_line_bundle(m, &dual).unwrap()) {
                (None, None) => {}
                (Some(x), Some(y)) => {
                    assert_eq!(x.dim, y.dim);
                    assert_eq!(x.degree + y.degree, dim);
                }
                other => panic!("{c:?}: {other:?}"),
            }
        }
    }
}

#[test]
fn projective_space_serre_duality() {
    for big_n in 1..=8u32 {
        for a in -30i64..=-(i64::from(big_n)) - 1 {
            let top = proj_space_cohomology(big_n, a).unwrap();
            let h0 = proj_space_cohomology(big_n, -a - i64::from(big_n) - 1).unwrap();
            assert_eq!(top.degree, big_n);
            assert_eq!(h0.degree, 0);
            assert_eq!(top.dim, h0.dim);
        }
        for a in -(i64::from(big_n))..=-1 {
            assert!(proj_space_cohomology(big_n, a).is_none());
        }
    }
}

#[test]
fn nef_bundles_on_induction_cases() {
    for n in 2..=8 {
        for p in GrassParams::all_for(n).filter(detect_induction_case) {
            let base = base_fibration(&p).unwrap();
            let (u, v) = p.fiber_shape();
            let bs: Vec<i64> = if base.space == BaseSpace::Point { vec![0] } else { (0..=3).collect() };
            for a in 0..=3i64 {
                for &b in &bs {
                    let table = cohomology_on_x(&p, LineBundleOnX { a, b }).unwrap();
                    assert_eq!(table.entries.len(), 1);
                    assert_eq!(table.entries[0].degree, 0);
                    let fiber = binomial(u64::from(u * v) - 1 + a as u64, a as u64);
                    let base_dim = match base.space {
                        BaseSpace::Point => BigUint::from(1u32),
                        BaseSpace::Grassmannian { rank, node, .. } => {
                            ssyt_count(&Partition::rectangle(node, b as u32), rank)
                        }
                    };
                    assert_eq!(table.entries[0].dim, base_dim * fiber, "{p} a={a} b={b}");
                    assert_eq!(
                        euler_characteristic(&p, LineBundleOnX { a, b }).unwrap(),
                        BigInt::from(table.entries[0].dim.clone())
                    );
                }
            }
        }
    }
}

#[test]
fn fiber_window_kills_everything() {
    for n in 3..=8 {
        for p in GrassParams::all_for(n).filter(detect_induction_case) {
            let (u, v) = p.fiber_shape();
            let big_n = i64::from(u * v) - 1;
            let base = base_fibration(&p).unwrap();
            let b = if base.space == BaseSpace::Point { 0 } else { 2 };
            for a in -big_n..=-1 {
                let bundle = LineBundleOnX { a, b };
                assert!(cohomology_on_x(&p, bundle).unwrap().is_zero());
                assert_eq!(euler_characteristic(&p, bundle).unwrap(), BigInt::from(0));
            }
        }
    }
}

#[test]
fn point_base_rejects_base_twist() {
    let p = GrassParams::new(6, 1, 5).unwrap();
    assert!(cohomology_on_x(&p, LineBundleOnX { a: 1, b: 1 }).is_err());
    // X = P^4, the projectivized 5 x 1 matrices
    let t = cohomology_on_x(&p, LineBundleOnX { a: 2, b: 0 }).unwrap();
    assert_eq!(t.entries, vec![CohomologyClass { degree: 0, dim: BigUint::from(15u32) }]);
}

proptest! {
    #[test]
    fn at_most_one_degree(n in 3u32..9, r in 1u32..8, s in 1u32..8, a in -20i64..6, b in -12i64..6) {
        prop_assume!(r < n && s < n);
        let p = GrassParams::new(n, r, s).unwrap();
        prop_assume!(detect_induction_case(&p));
        let base = base_fibration(&p).unwrap();
        let b = if base.space == BaseSpace::Point { 0 } else { b };
        let table = cohomology_on_x(&p, LineBundleOnX { a, b }).unwrap();
        prop_assert!(table.entries.len() <= 1);
        for c in &table.entries {
            prop_assert!(c.degree < p.grassmannian_dim());
            prop_assert!(c.dim > BigUint::from(0u32));
        }
    }
}
