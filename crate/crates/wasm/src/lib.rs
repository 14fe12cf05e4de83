//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes a graph6 string and returns a JSON document; errors
//! come back as thrown strings. The plain Rust functions underneath are
//! what the native tests exercise.

use prism_fixer::domination::domination_number;
use prism_fixer::graph::{parse_graph6, Graph};
use prism_fixer::prism::build_prism;
use prism_fixer::report::{self, AnalyzeReport};
use prism_fixer::verify::{check_graph_with, AdversaryCertificate, CheckOutcome, DEFAULT_CHECK_GUARD};
use prism_fixer::{Permutation, VertexSet};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest graph the page accepts. Keeps each click well under a second.
pub const DEMO_MAX_N: usize = 9;

/// Drawing data for `πG`: edges of `G` (drawn twice), the matching, and one
/// minimum dominating set of the prism in prism indices.
#[derive(Debug, Serialize)]
pub struct PrismView {
    pub graph: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub pi: Permutation,
    pub matching: Vec<(usize, usize)>,
    pub gamma: usize,
    pub prism_gamma: usize,
    pub dominating: VertexSet,
}

#[derive(Debug, Serialize)]
pub struct AdversaryView {
    pub certificate: AdversaryCertificate,
    pub prism: PrismView,
}

fn load(g6: &str) -> Result<Graph, String> {
    let g = parse_graph6(g6.trim()).map_err(|e| e.to_string())?;
    if g.order() > DEMO_MAX_N {
        return Err(format!("the demo handles up to {DEMO_MAX_N} vertices, got {}", g.order()));
    }
    Ok(g)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("demo types serialize")
}

pub fn analyze_graph(g6: &str) -> Result<AnalyzeReport, String> {
    report::analyze(&load(g6)?, None).map_err(|e| e.to_string())
}

fn view(g: &Graph, pi: Permutation) -> Result<PrismView, String> {
    let prism = build_prism(g, &pi).map_err(|e| e.to_string())?;
    let best = domination_number(prism.graph());
    Ok(PrismView {
        graph: prism_fixer::graph::to_graph6(g).map_err(|e| e.to_string())?,
        n: g.order(),
        edges: g.edges().as_slice().to_vec(),
        matching: prism.matching(),
        gamma: domination_number(g).gamma,
        prism_gamma: best.gamma,
        dominating: best.witness,
        pi,
    })
}

/// `pi` in image notation, e.g. `"1 3 2 0"`; empty means the identity.
pub fn prism_view(g6: &str, pi: &str) -> Result<PrismView, String> {
    let g = load(g6)?;
    let pi = if pi.trim().is_empty() {
        Permutation::identity(g.order())
    } else {
        pi.parse::<Permutation>().map_err(|e| e.to_string())?
    };
    if pi.len() != g.order() {
        return Err(format!("π has {} entries, the graph has {} vertices", pi.len(), g.order()));
    }
    view(&g, pi)
}

/// A negative `vertex` picks the smallest C3-free vertex.
pub fn adversary_view(g6: &str, vertex: i32) -> Result<AdversaryView, String> {
    let g = load(g6)?;
    let x = usize::try_from(vertex).ok();
    let outcome = check_graph_with(&g, x, DEFAULT_CHECK_GUARD).map_err(|e| e.to_string())?;
    let certificate = match outcome {
        CheckOutcome::Certified(c) => c,
        CheckOutcome::NotApplicable { .. } => {
            return Err("no C3-free vertex: every vertex is isolated or on a triangle".into())
        }
    };
    let prism = view(&g, certificate.pi.clone())?;
    Ok(AdversaryView { certificate, prism })
}

#[wasm_bindgen]
pub fn analyze(g6: &str) -> Result<String, JsValue> {
    analyze_graph(g6).map(|r| to_json(&r)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn prism(g6: &str, pi: &str) -> Result<String, JsValue> {
    prism_view(g6, pi).map(|v| to_json(&v)).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn adversary(g6: &str, vertex: i32) -> Result<String, JsValue> {
    adversary_view(g6, vertex).map(|v| to_json(&v)).map_err(|e| JsValue::from_str(&e))
}
