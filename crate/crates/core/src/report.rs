//! Versioned JSON-lines records shared by the command line and the demo.

use serde::{Deserialize, Serialize};

use crate::domination::{domination_number, enumerate_gamma_sets, GammaResult};
use crate::error::Result;
use crate::graph::{to_graph6, Girth, Graph, VertexSet};
use crate::permutation::Permutation;
use crate::prism::prism_gamma;
use crate::separable::{enumerate_separable, is_effective, lemma1_check, Lemma1Report, SeparableGammaSet};
use crate::verify::{CheckOutcome, Discrepancy, FixerVerdict, SweepSummary};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaReport {
    pub graph: String,
    pub n: usize,
    #[serde(flatten)]
    pub result: GammaResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_sets: Option<Vec<VertexSet>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparableEntry {
    #[serde(flatten)]
    pub sep: SeparableGammaSet,
    pub lemma1: Lemma1Report,
    /// Effective under the requested permutation, when one was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub effective: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismSummary {
    pub pi: Permutation,
    pub prism_gamma: usize,
}

/// Structural summary of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub graph: String,
    pub n: usize,
    pub edges: usize,
    pub girth: Girth,
    pub c3_free: VertexSet,
    pub gamma: usize,
    pub gamma_sets: Vec<VertexSet>,
    pub separable: Vec<SeparableEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prism: Option<PrismSummary>,
}

pub fn gamma_report(g: &Graph, all: bool) -> Result<GammaReport> {
    Ok(GammaReport {
        graph: to_graph6(g)?,
        n: g.order(),
        result: domination_number(g),
        gamma_sets: all.then(|| enumerate_gamma_sets(g)),
    })
}

pub fn analyze(g: &Graph, pi: Option<&Permutation>) -> Result<AnalyzeReport> {
    let separable = enumerate_separable(g)
        .into_iter()
        .map(|sep| {
            let effective = pi.map(|p| is_effective(g, &sep, p)).transpose()?.map(|w| w.is_some());
            Ok(SeparableEntry { lemma1: lemma1_check(g, &sep), sep, effective })
        })
        .collect::<Result<Vec<_>>>()?;
    let prism = pi
        .map(|p| prism_gamma(g, p).map(|prism_gamma| PrismSummary { pi: p.clone(), prism_gamma }))
        .transpose()?;
    let gamma_sets = enumerate_gamma_sets(g);
    Ok(AnalyzeReport {
        graph: to_graph6(g)?,
        n: g.order(),
        edges: g.edge_count(),
        girth: g.girth(),
        c3_free: g.c3_free_vertices(),
        gamma: gamma_sets.first().map_or(0, VertexSet::len),
        gamma_sets,
        separable,
        prism,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub graph: String,
    pub permutations_tested: u64,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "kebab-case")]
pub enum Payload {
    Gamma(GammaReport),
    Analyze(AnalyzeReport),
    Adversary(CheckOutcome),
    Fixer(FixerVerdict),
    Probe(ProbeReport),
    SweepSummary(SweepSummary),
}

/// One output line: `{"schema_version":1,"kind":...,"payload":{...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: u32,
    #[serde(flatten)]
    pub payload: Payload,
}

impl ReportRecord {
    pub fn new(payload: Payload) -> Self {
        Self { schema_version: SCHEMA_VERSION, payload }
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Gamma(_) => "gamma",
            Payload::Analyze(_) => "analyze",
            Payload::Adversary(_) => "adversary",
            Payload::Fixer(_) => "fixer",
            Payload::Probe(_) => "probe",
            Payload::SweepSummary(_) => "sweep-summary",
        }
    }

    /// Compact single-line JSON without a trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report types serialize")
    }

    pub fn from_json_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}
