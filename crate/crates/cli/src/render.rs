//! Human-readable output. Copy vertices are primed; permutations are in
//! image notation, with cycle notation alongside in certificates.

use std::fmt::Write;

use prism_fixer::graph::VertexSet;
use prism_fixer::report::{AnalyzeReport, GammaReport, ProbeReport};
use prism_fixer::verify::{AdversaryCertificate, FixerVerdict};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn primed(s: &VertexSet) -> String {
    let inner: Vec<String> = s.iter().map(|v| format!("{v}'")).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn gamma(r: &GammaReport) -> String {
    let mut out = format!("γ = {}\nwitness: {}\n", r.result.gamma, r.result.witness);
    if let Some(sets) = &r.gamma_sets {
        writeln!(out, "γ-sets ({}):", sets.len()).unwrap();
        for s in sets {
            writeln!(out, "  {s}").unwrap();
        }
    }
    out
}

pub fn analyze(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    writeln!(out, "graph      {} (n = {}, m = {})", r.graph, r.n, r.edges).unwrap();
    writeln!(out, "girth      {}", r.girth).unwrap();
    writeln!(out, "C3-free    {}", r.c3_free).unwrap();
    writeln!(out, "γ          {} ({} γ-sets)", r.gamma, r.gamma_sets.len()).unwrap();
    writeln!(out, "separable  {}", r.separable.len()).unwrap();
    for s in &r.separable {
        write!(out, "  A1={} A2={}  lemma 1 {}", s.sep.a1, s.sep.a2, if s.lemma1.all_hold() { "ok" } else { "FAILS" })
            .unwrap();
        if let Some(e) = s.effective {
            write!(out, "  effective: {}", yes_no(e)).unwrap();
        }
        out.push('\n');
    }
    if let Some(p) = &r.prism {
        writeln!(out, "π          {}  {}", p.pi, p.pi.cycle_notation()).unwrap();
        writeln!(out, "γ(πG)      {}", p.prism_gamma).unwrap();
    }
    out
}

pub fn certificate(c: &AdversaryCertificate) -> String {
    let mut out = String::new();
    let f = &c.flags;
    writeln!(out, "graph      {} (n = {})", c.graph, c.n).unwrap();
    writeln!(out, "x          {}", c.x).unwrap();
    writeln!(out, "π          {}  {}", c.pi, c.pi.cycle_notation()).unwrap();
    writeln!(out, "γ(G)       {}", c.gamma).unwrap();
    writeln!(out, "γ(πG)      {}", c.prism_gamma).unwrap();
    writeln!(out, "separable  {} records", c.records.len()).unwrap();
    for r in &c.records {
        write!(out, "  A1={} A2={}  ", r.sep.a1, r.sep.a2).unwrap();
        match (&r.case, &r.error) {
            (Some(k), _) => {
                write!(out, "{:<12} {}", k.tag.as_str(), k.contradiction.describe(c.n)).unwrap();
                if !k.follows_proof {
                    out.push_str(" (not the case argument)");
                }
            }
            (None, Some(e)) => write!(out, "ERROR {e}").unwrap(),
            (None, None) => out.push_str("unclassified"),
        }
        out.push('\n');
    }
    if let Some(w) = &c.effective {
        writeln!(out, "effective  A1={} A2={} maps to B1={} B2={}", w.sep.a1, w.sep.a2, primed(&w.b1), primed(&w.b2))
            .unwrap();
    }
    writeln!(out, "bounds γ <= γ(πG) <= 2γ   {}", yes_no(f.bounds_ok)).unwrap();
    writeln!(out, "no effective record       {}", yes_no(f.no_effective_ok)).unwrap();
    writeln!(out, "γ(πG) > γ(G)              {}", yes_no(f.gamma_strict_increase_ok)).unwrap();
    writeln!(out, "cases verified            {}", yes_no(f.cases_ok)).unwrap();
    writeln!(out, "result     {}", if c.passed { "PASS" } else { "FAIL" }).unwrap();
    out
}

pub fn fixer(v: &FixerVerdict) -> String {
    let mut out = format!(
        "universal fixer: {}\nγ = {}, {} permutations tested\n",
        yes_no(v.is_universal_fixer),
        v.gamma,
        v.permutations_tested
    );
    if let (Some(pi), Some(pg)) = (&v.witness_pi, v.witness_prism_gamma) {
        writeln!(out, "witness: {pi}\nγ(πG) = {pg}").unwrap();
    }
    out
}

pub fn probe(r: &ProbeReport) -> String {
    let mut out = format!(
        "{}: {} discrepancies over {} permutations\n",
        r.graph,
        r.discrepancies.len(),
        r.permutations_tested
    );
    for d in &r.discrepancies {
        writeln!(
            out,
            "  π = {}: γ = {}, γ(πG) = {}, effective record: {}",
            d.pi,
            d.gamma,
            d.prism_gamma,
            yes_no(d.effective.is_some())
        )
        .unwrap();
    }
    out
}
