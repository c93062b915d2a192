use gitgr::analyze::{analyze, AnalyzeOptions};
use gitgr::cli::run;
use gitgr::document::{Count, ReportDocument, Status};
use gitgr_core::quotient::detect_induction_case;
use gitgr_core::rep::invariant_hilbert;
use gitgr_core::{EnumBudget, GrassParams};
use proptest::prelude::*;

fn options(max_degree: u32, bundles: Vec<(i64, i64)>) -> AnalyzeOptions {
    AnalyzeOptions { max_degree, bundles, budget: EnumBudget::default() }
}

fn params_strategy() -> impl Strategy<Value = GrassParams> {
    (2u32..8).prop_flat_map(|n| (Just(n), 1..n, 1..n)).prop_map(|(n, r, s)| GrassParams::new(n, r, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn json_round_trip(p in params_strategy(), a in -3i64..4, b in -2i64..3) {
        let doc = analyze(&p, &options(4, vec![(a, b), (0, 0)])).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn numbers_reproduce_from_the_library(p in params_strategy()) {
        let doc = analyze(&p, &options(4, Vec::new())).unwrap();
        prop_assert_eq!((doc.params.n, doc.params.r, doc.params.s), (p.n(), p.r(), p.s()));
        for row in &doc.hilbert {
            let h = invariant_hilbert(&p, row.m, &EnumBudget::default()).unwrap();
            prop_assert_eq!(row.h.to_biguint(), Some(h));
        }
        prop_assert_eq!(doc.decomposition.is_some(), detect_induction_case(&p));
        prop_assert!(doc.all_pass(), "{:?}", doc.diagnostics);
    }
}

#[test]
fn diagnostics_all_pass_through_n_seven() {
    for n in 2..=7 {
        for p in GrassParams::all_for(n) {
            let doc = analyze(&p, &options(4, vec![(1, 1)])).unwrap();
            for d in &doc.diagnostics {
                assert_eq!(d.status, Status::Pass, "{p}: {} {}", d.name, d.detail);
            }
        }
    }
}

#[test]
fn golden_documents() {
    let doc = analyze(&GrassParams::new(4, 2, 2).unwrap(), &options(3, Vec::new())).unwrap();
    let g = doc.quotient.golden.as_ref().unwrap();
    assert_eq!(g.identification, "X ≅ P^3");
    assert_eq!(g.bundle, "O(1)");
    let h: Vec<Count> = doc.hilbert.iter().map(|r| r.h.clone()).collect();
    assert_eq!(h, vec![Count::Int(1), Count::Int(4), Count::Int(10), Count::Int(20)]);
    assert!(doc.diagnostics.iter().any(|d| d.name == "golden_hilbert_function"));
    assert_eq!(doc.generation.len(), 2);
}

#[test]
fn large_values_are_strings() {
    // for (20,1,1) the fiber is a point and X is the base P^18, so H⁰(O(60)) = C(78,18)
    let p = GrassParams::new(20, 1, 1).unwrap();
    let doc = analyze(&p, &options(2, vec![(0, 60)])).unwrap();
    let dim = &doc.cohomology[0].entries[0].dim;
    assert_eq!(dim, &Count::Big("212566476905162380".into()));
    let text = serde_json::to_string(&doc).unwrap();
    assert!(text.contains("\"dim\":\"212566476905162380\""));
    let back: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(back, doc);
}

#[test]
fn in_process_run_matches_the_exit_contract() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    assert_eq!(run(["gitgr", "analyze", "3", "2", "2", "--json"], None, &mut out, &mut err), 0);
    let doc: ReportDocument = serde_json::from_slice(&out).unwrap();
    assert_eq!(doc.quotient.golden.unwrap().identification, "X ≅ P^1");
    out.clear();
    assert_eq!(run(["gitgr", "hilbert", "4", "2", "2", "--degrees", "2"], Some("2"), &mut out, &mut err), 3);
    assert_eq!(run(["gitgr", "cells", "3", "3", "1"], None, &mut out, &mut err), 2);
}
