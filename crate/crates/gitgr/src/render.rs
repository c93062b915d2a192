//! Text encodings: the human-readable report, Hilbert CSV and the cell listing.

use std::fmt::Write as _;

use gitgr_core::semistability::RichardsonPair;
use gitgr_core::BigUint;

use crate::document::{Count, ReportDocument};

fn opt<T: std::fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

fn list(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn partition(xs: &[u32]) -> String {
    if xs.is_empty() {
        "0".into()
    } else {
        format!("({})", list(xs))
    }
}

pub fn human(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let p = &doc.params;
    let q = &doc.quotient;
    let _ = writeln!(out, "G({},{}) under λ = {}λ_{}", p.r, p.n, p.n, p.s);
    let _ = writeln!(out, "  p = {}, k = {}", q.p, q.k.map_or_else(|| "boundary (r+s=n)".into(), |k| k.to_string()));
    let _ = writeln!(out, "  dim X = {}", q.dim_x);
    let _ = writeln!(out, "  induction case: {}", q.induction_case);
    let _ = writeln!(out, "  fiber: P(M_{{{},{}}})", q.fiber_shape[0], q.fiber_shape[1]);
    if let Some(b) = &q.base {
        match &b.factor {
            Some(f) => {
                let _ = writeln!(out, "  base: {} for {}, dim {}", b.space, f, b.dim);
            }
            None => {
                let _ = writeln!(out, "  base: point");
            }
        }
    }
    let _ = writeln!(out, "  orbits: {}", opt(&q.orbit_count));
    if let Some(strata) = &q.strata {
        for s in strata {
            let _ = writeln!(out, "    O_{}: dim {}", s.t, s.orbit_dim);
        }
    }
    let _ = writeln!(out, "  Picard rank: {}", opt(&q.picard_rank));
    let _ = writeln!(out, "  Fano: {}", opt(&q.fano));
    let _ = writeln!(out, "  Aut⁰: {}", opt(&q.aut0));
    let _ = writeln!(out, "  wonderful: {}", q.wonderful);
    let _ = writeln!(out, "  ss = stable: {}", q.ss_eq_stable);
    if let Some(g) = &q.golden {
        let _ = writeln!(out, "  {}, M ≅ {} (descent of L({}ϖ_r))", g.identification, g.bundle, g.source_multiple);
    }

    let s = &doc.semistability;
    let _ = writeln!(out, "semistability");
    let _ = writeln!(out, "  fixed points: {} positive, {} zero, {} negative", s.positive, s.zero, s.negative);
    let _ = writeln!(out, "  |A| = {}", s.a_count);
    let _ = writeln!(out, "  w_sr = [{}], subset {{{}}}", list(&s.w_sr_word), list(&s.w_sr_subset));

    let h: Vec<String> = doc.hilbert.iter().map(|r| r.h.to_string()).collect();
    let _ = writeln!(out, "hilbert h(0..={}): {}", doc.hilbert.len().saturating_sub(1), h.join(" "));

    if let Some(d) = &doc.decomposition {
        let _ = writeln!(out, "sections in degree {} (a = {}, b = {}), total {}", d.d_min, d.a, d.b, d.total);
        for pair in &d.pairs {
            let _ = writeln!(
                out,
                "  V_SL({}){} ⊗ V_SL({}){}: {}",
                pair.left_rank,
                partition(&pair.left),
                pair.right_rank,
                partition(&pair.right),
                pair.dim
            );
        }
    }
    for g in &doc.generation {
        let _ = writeln!(out, "generation M-degree {}: rank {} / h {}", g.m, g.rank, g.expected);
    }
    for c in &doc.cohomology {
        match &c.error {
            Some(e) => {
                let _ = writeln!(out, "H*(X, ({},{})): {e}", c.a, c.b);
            }
            None if c.entries.is_empty() => {
                let _ = writeln!(out, "H*(X, ({},{})) = 0", c.a, c.b);
            }
            None => {
                for e in &c.entries {
                    let _ = writeln!(out, "H^{}(X, ({},{})) = {}", e.degree, c.a, c.b, e.dim);
                }
            }
        }
    }
    let _ = writeln!(out, "diagnostics");
    for d in &doc.diagnostics {
        let _ = writeln!(out, "  {} {}: {}", d.status, d.name, d.detail);
    }
    for s in &doc.skipped {
        let _ = writeln!(out, "  skipped {s}");
    }
    out
}

pub fn hilbert_csv(values: &[BigUint]) -> String {
    let mut out = String::from("m,h\n");
    for (m, h) in values.iter().enumerate() {
        let _ = writeln!(out, "{m},{h}");
    }
    out
}

/// One pair per line in the given order, at most `limit` of them, then a
/// footer with the total. `limit = 0` prints the footer alone.
pub fn cells(pairs: &[RichardsonPair], limit: usize) -> String {
    let mut out = String::new();
    for pair in pairs.iter().take(limit) {
        let _ = writeln!(out, "({}, {})", pair.v, pair.phi);
    }
    if limit > 0 && pairs.len() > limit {
        let _ = writeln!(out, "... {} more", pairs.len() - limit);
    }
    let _ = writeln!(out, "total: {}", Count::from(pairs.len()));
    out
}
