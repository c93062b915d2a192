//! Assembles a [`ReportDocument`] from the library operations and runs the
//! consistency checks that end up in its diagnostics.

use gitgr_core::bwb::{cohomology_on_x, LineBundleOnX};
use gitgr_core::combin::binomial;
use gitgr_core::quotient::{report, BaseSpace, HFactor, QuotientReport};
use gitgr_core::rep::{calibrate_descent, decompose_sections, generation_checks, hilbert_function};
use gitgr_core::rep::{is_multiplicity_free, total_dim};
use gitgr_core::semistability::{
    classify_fixed_points, enumerate_a, enumerate_a_by_weight, minimal_semistable_subset, plucker_weight,
};
use gitgr_core::weyl::{bruhat_leq, build_w_sr, coset_subset, factor_w_tilde};
use gitgr_core::{BigUint, EnumBudget, Error, GrassParams, KIndex, RSubset};

use crate::document::*;

/// What to compute beyond the fixed part of the report.
#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Hilbert function degrees `0..=max_degree`; generation checks run in
    /// `M`-degrees `2..=min(max_degree, 3)`.
    pub max_degree: u32,
    pub bundles: Vec<(i64, i64)>,
    pub budget: EnumBudget,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { max_degree: 6, bundles: Vec::new(), budget: EnumBudget::default() }
    }
}

/// Highest `M`-degree of the generation check.
const GENERATION_DEGREE: u32 = 3;

/// Builds the full document. Resource errors abort; unsupported pieces are
/// left empty.
pub fn analyze(params: &GrassParams, opts: &AnalyzeOptions) -> Result<ReportDocument, Error> {
    let budget = &opts.budget;
    let rep = report(params)?;
    let mut diagnostics = Vec::new();
    let mut skipped = Vec::new();

    let semistability = semistability_section(params, budget, &mut diagnostics)?;

    let degrees = hilbert_function(params, opts.max_degree, budget)?;
    let hilbert: Vec<HilbertRow> =
        degrees.iter().enumerate().map(|(m, h)| HilbertRow { m: m as u32, h: h.into() }).collect();
    if let Some(expected) = golden_hilbert(params, opts.max_degree) {
        diagnostics.push(Diagnostic::check(
            "golden_hilbert_function",
            expected == degrees,
            format!("h(0..={}) against the explicit model", opts.max_degree),
        ));
    }

    structure_checks(params, &rep, &mut diagnostics)?;

    let decomposition =
        if rep.induction_case { decomposition_section(params, budget, &mut diagnostics)? } else { None };

    let mut generation = Vec::new();
    if (rep.induction_case || rep.golden.is_some()) && opts.max_degree >= 2 {
        match generation_checks(params, opts.max_degree.min(GENERATION_DEGREE), budget) {
            Ok(checks) => {
                for c in &checks {
                    diagnostics.push(Diagnostic::check(
                        "generation_in_degree_one",
                        c.passes(),
                        format!("M-degree {}: rank {} of {} products, h = {}", c.m, c.rank, c.products, c.expected),
                    ));
                }
                generation = checks
                    .into_iter()
                    .map(|c| GenerationRow {
                        m: c.m,
                        products: c.products.into(),
                        rank: c.rank.into(),
                        expected: c.expected.into(),
                    })
                    .collect();
            }
            Err(e @ Error::Resource { .. }) => skipped.push(format!("generation_in_degree_one: {e}")),
            Err(e) => return Err(e),
        }
    }

    let mut cohomology = Vec::new();
    for &(a, b) in &opts.bundles {
        cohomology.push(match cohomology_on_x(params, LineBundleOnX { a, b }) {
            Ok(table) => CohomologyEntry {
                a,
                b,
                entries: table
                    .entries
                    .iter()
                    .map(|c| CohomologyRow { degree: c.degree, dim: (&c.dim).into() })
                    .collect(),
                error: None,
            },
            Err(e @ (Error::Unsupported(_) | Error::Domain(_))) => {
                CohomologyEntry { a, b, entries: Vec::new(), error: Some(e.to_string()) }
            }
            Err(e) => return Err(e),
        });
    }

    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        params: ParamsEcho { n: params.n(), r: params.r(), s: params.s() },
        quotient: quotient_section(params, &rep),
        semistability,
        hilbert,
        decomposition,
        generation,
        cohomology,
        diagnostics,
        skipped,
    })
}

fn quotient_section(params: &GrassParams, rep: &QuotientReport) -> QuotientSection {
    QuotientSection {
        p: rep.p,
        k: match rep.k {
            KIndex::Node(k) => Some(k),
            KIndex::Boundary => None,
        },
        induction_case: rep.induction_case,
        fiber_shape: [rep.fiber_shape.0, rep.fiber_shape.1],
        base: rep.base.map(|b| match b.space {
            BaseSpace::Point => BaseSection { dim: b.dim, space: "point".into(), factor: None },
            BaseSpace::Grassmannian { factor, rank, node } => BaseSection {
                dim: b.dim,
                space: format!("G({node},{rank})"),
                factor: Some(match factor {
                    HFactor::Left => format!("SL({})", params.s()),
                    HFactor::Right => format!("SL({})", params.n() - params.s()),
                }),
            },
        }),
        dim_x: rep.dim_x,
        orbit_count: rep.orbit_count,
        strata: rep.strata.as_ref().map(|v| {
            v.iter().map(|s| StratumSection { t: s.t, orbit_dim: s.orbit_dim, closure_dim: s.closure_dim }).collect()
        }),
        picard_rank: rep.picard_rank,
        fano: rep.fano,
        aut0: rep.aut0.clone(),
        wonderful: rep.wonderful,
        ss_eq_stable: rep.ss_eq_stable,
        golden: rep.golden.map(|g| GoldenSection {
            identification: g.description(),
            bundle: format!("O({})", g.bundle_degree),
            source_multiple: g.source_multiple,
        }),
    }
}

fn semistability_section(
    params: &GrassParams,
    budget: &EnumBudget,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<SemistabilitySection, Error> {
    let classes = classify_fixed_points(params, budget)?;
    let min = minimal_semistable_subset(params);
    let all_agree = RSubset::all(params.n(), params.r())
        .all(|i| bruhat_leq(&min, &i).expect("same size") == (plucker_weight(&i, params) <= 0));
    diagnostics.push(Diagnostic::check(
        "semistable_bruhat_vs_weight",
        all_agree,
        format!("I ≥ {min} exactly when wt(I) ≤ 0"),
    ));

    let by_bruhat = enumerate_a(params, None, budget)?;
    let by_weight = enumerate_a_by_weight(params, None, budget)?;
    diagnostics.push(Diagnostic::check(
        "a_set_bruhat_vs_weight",
        by_bruhat == by_weight,
        format!("|A| = {} and {}", by_bruhat.len(), by_weight.len()),
    ));

    let word = build_w_sr(params)?;
    let perm = word.evaluate();
    let subset = coset_subset(&perm, params.r())?;
    diagnostics.push(Diagnostic::check(
        "w_sr_coset_is_minimal",
        subset == min && word.len() as u32 == perm.length(),
        format!("coset {subset}, word length {}", word.len()),
    ));

    Ok(SemistabilitySection {
        positive: classes.positive.len().into(),
        zero: classes.zero.len().into(),
        negative: classes.negative.len().into(),
        a_count: by_bruhat.len().into(),
        w_sr_word: word.letters().to_vec(),
        w_sr_subset: min.elems().to_vec(),
    })
}

fn structure_checks(
    params: &GrassParams,
    rep: &QuotientReport,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<(), Error> {
    let w = factor_w_tilde(params)?;
    diagnostics.push(Diagnostic::check(
        "extension_lemma",
        w.contains_reflection(params.s()) != rep.induction_case,
        format!("s_{} in w̃: {}", params.s(), w.contains_reflection(params.s())),
    ));
    if let (Some(base), Some(orbits)) = (rep.base, rep.orbit_count) {
        let (u, v) = rep.fiber_shape;
        diagnostics.push(Diagnostic::check(
            "dimension_identity",
            base.dim + u * v - 1 == rep.dim_x,
            format!("{} + {u}·{v} − 1 = {}", base.dim, rep.dim_x),
        ));
        diagnostics.push(Diagnostic::check("orbit_count", orbits == u.min(v), format!("{orbits} = min({u},{v})")));
    }
    Ok(())
}

fn decomposition_section(
    params: &GrassParams,
    budget: &EnumBudget,
    diagnostics: &mut Vec<Diagnostic>,
) -> Result<Option<DecompositionSection>, Error> {
    let cal = match calibrate_descent(params, budget) {
        Ok(cal) => cal,
        Err(e @ Error::Calibration { .. }) => {
            diagnostics.push(Diagnostic::check("descent_calibration", false, e.to_string()));
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    let pairs = decompose_sections(params, cal.a, cal.b)?;
    let total = total_dim(&pairs);
    let free = is_multiplicity_free(&pairs);
    diagnostics.push(Diagnostic::check(
        "decomposition_total",
        total == cal.targets[0],
        format!("Σ dim = {total}, h({}) = {}", cal.d_min, cal.targets[0]),
    ));
    diagnostics.push(Diagnostic::check("multiplicity_free", free, format!("{} pairs", pairs.len())));
    Ok(Some(DecompositionSection {
        d_min: cal.d_min,
        a: cal.a,
        b: cal.b,
        targets: cal.targets.iter().map(Count::from).collect(),
        pairs: pairs
            .iter()
            .map(|p| PairSection {
                left_rank: p.left_rank,
                left: p.left.parts().to_vec(),
                right_rank: p.right_rank,
                right: p.right.parts().to_vec(),
                dim: (&p.dim).into(),
            })
            .collect(),
        total: total.into(),
        multiplicity_free: free,
    }))
}

/// Hilbert function read off `(ℙ¹, O(2))`, reached in Plücker degree 3, resp.
/// the free ring on four degree-one invariants.
fn golden_hilbert(params: &GrassParams, max_degree: u32) -> Option<Vec<BigUint>> {
    let f: fn(u64) -> BigUint = match (params.n(), params.r(), params.s()) {
        (3, 2, 2) => |m| if m % 3 == 0 { BigUint::from(2 * m / 3 + 1) } else { BigUint::from(0u32) },
        (4, 2, 2) => |m| binomial(m + 3, 3),
        _ => return None,
    };
    Some((0..=u64::from(max_degree)).map(f).collect())
}
