//! Whole-graph verification: adversary certificates, exhaustive
//! universal-fixer decisions, the effectiveness/equality probe, and corpus
//! sweeps.

use std::collections::BTreeSet;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::domination::{domination_number, enumerate_sets_of_size, naive_domination_number, NAIVE_MAX_N};
use crate::error::{Error, Result};
use crate::graph::{parse_graph6, to_graph6, Graph};
use crate::permutation::{LexPermutations, Permutation};
use crate::prism::{
    adversary_permutation, adversary_violations, build_prism, classify_failure, prism_gamma,
    FailureCase,
};
use crate::separable::{exists_effective_among, separable_records, EffectiveWitness, SeparableGammaSet};

pub const DEFAULT_FIXER_GUARD: usize = 8;
pub const DEFAULT_CHECK_GUARD: usize = 9;

fn guard(g: &Graph, limit: usize) -> Result<()> {
    match g.order() {
        n if n > limit => Err(Error::Guard { n, guard: limit }),
        _ => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFlags {
    /// `γ(G) <= γ(πG) <= 2γ(G)`.
    pub bounds_ok: bool,
    /// No separable record is effective under `π`.
    pub no_effective_ok: bool,
    /// `γ(πG) > γ(G)`.
    pub gamma_strict_increase_ok: bool,
    /// Every record landed in one case with a verified obstruction, and `π`
    /// meets the adversary conditions.
    pub cases_ok: bool,
}

impl CertificateFlags {
    pub fn all(&self) -> bool {
        self.bounds_ok && self.no_effective_ok && self.gamma_strict_increase_ok && self.cases_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedRecord {
    pub sep: SeparableGammaSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<FailureCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Everything checked for one graph and one C3-free vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversaryCertificate {
    pub graph: String,
    pub n: usize,
    pub x: usize,
    pub pi: Permutation,
    pub gamma: usize,
    pub prism_gamma: usize,
    pub records: Vec<ClassifiedRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub effective: Option<EffectiveWitness>,
    /// Records whose case argument did not itself yield the obstruction.
    pub proof_gaps: usize,
    pub flags: CertificateFlags,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum CheckOutcome {
    Certified(AdversaryCertificate),
    NotApplicable { graph: String, n: usize },
}

impl CheckOutcome {
    pub fn certificate(&self) -> Option<&AdversaryCertificate> {
        match self {
            CheckOutcome::Certified(c) => Some(c),
            CheckOutcome::NotApplicable { .. } => None,
        }
    }
}

/// Certifies `g` at its smallest C3-free vertex, or reports that none
/// exists.
pub fn check_graph(g: &Graph) -> Result<CheckOutcome> {
    check_graph_with(g, None, DEFAULT_CHECK_GUARD)
}

/// [`check_graph`] with an explicit vertex and guard. An explicit vertex
/// that is not C3-free is an error.
pub fn check_graph_with(g: &Graph, x: Option<usize>, limit: usize) -> Result<CheckOutcome> {
    guard(g, limit)?;
    let x = match x {
        Some(x) => x,
        None => match g.c3_free_vertices().first() {
            Some(x) => x,
            None => {
                return Ok(CheckOutcome::NotApplicable { graph: to_graph6(g)?, n: g.order() })
            }
        },
    };
    let pi = adversary_permutation(g, x)?;
    certify(g, x, pi).map(CheckOutcome::Certified)
}

/// Runs every check for a given `x` and candidate adversary `π`. The
/// adversary conditions are validated here, not assumed.
pub fn certify(g: &Graph, x: usize, pi: Permutation) -> Result<AdversaryCertificate> {
    if !g.is_c3_free_vertex(x)? {
        return Err(Error::NotC3Free(x));
    }
    let gamma_result = domination_number(g);
    let gamma = gamma_result.gamma;
    let prism_gamma = prism_gamma(g, &pi)?;
    let gamma_sets = enumerate_sets_of_size(g, gamma);
    let separable = separable_records(g, &gamma_sets);
    let effective = exists_effective_among(g, &separable, &pi)?;

    let mut cases_ok = adversary_violations(g, x, &pi).is_empty();
    let mut proof_gaps = 0;
    let records: Vec<ClassifiedRecord> = separable
        .into_iter()
        .map(|sep| match classify_failure(g, &sep, &pi, x) {
            Ok(case) => {
                cases_ok &= case.contradiction.holds(g, &sep, &pi);
                proof_gaps += usize::from(!case.follows_proof);
                ClassifiedRecord { sep, case: Some(case), error: None }
            }
            Err(e) => {
                cases_ok = false;
                ClassifiedRecord { sep, case: None, error: Some(e.to_string()) }
            }
        })
        .collect();

    let flags = CertificateFlags {
        bounds_ok: gamma <= prism_gamma && prism_gamma <= 2 * gamma,
        no_effective_ok: effective.is_none(),
        gamma_strict_increase_ok: prism_gamma > gamma,
        cases_ok,
    };
    Ok(AdversaryCertificate {
        graph: to_graph6(g)?,
        n: g.order(),
        x,
        pi,
        gamma,
        prism_gamma,
        records,
        effective,
        proof_gaps,
        passed: flags.all(),
        flags,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixerVerdict {
    pub graph: String,
    pub n: usize,
    pub gamma: usize,
    pub is_universal_fixer: bool,
    /// A permutation with `γ(πG) > γ(G)`, re-verified independently.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_pi: Option<Permutation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_prism_gamma: Option<usize>,
    pub permutations_tested: u64,
}

/// Decides universal-fixer status by trying every permutation in
/// lexicographic order, stopping at the first strict increase.
pub fn is_universal_fixer(g: &Graph, limit: usize) -> Result<FixerVerdict> {
    guard(g, limit)?;
    let gamma = domination_number(g).gamma;
    let mut tested = 0u64;
    for pi in LexPermutations::new(g.order()) {
        tested += 1;
        let pg = prism_gamma(g, &pi)?;
        if pg > gamma {
            recheck_increase(g, &pi, gamma)?;
            return Ok(FixerVerdict {
                graph: to_graph6(g)?,
                n: g.order(),
                gamma,
                is_universal_fixer: false,
                witness_pi: Some(pi),
                witness_prism_gamma: Some(pg),
                permutations_tested: tested,
            });
        }
    }
    Ok(FixerVerdict {
        graph: to_graph6(g)?,
        n: g.order(),
        gamma,
        is_universal_fixer: true,
        witness_pi: None,
        witness_prism_gamma: None,
        permutations_tested: tested,
    })
}

/// Confirms `γ(πG) > γ` with the brute-force oracle where it applies.
fn recheck_increase(g: &Graph, pi: &Permutation, gamma: usize) -> Result<()> {
    let prism = build_prism(g, pi)?;
    if prism.graph().order() > NAIVE_MAX_N {
        return Ok(());
    }
    let base = naive_domination_number(g)?.gamma;
    let lifted = naive_domination_number(prism.graph())?.gamma;
    if base != gamma || lifted <= base {
        return Err(Error::Counterexample(format!(
            "solver and oracle disagree on π = [{pi}]: oracle γ(G)={base}, γ(πG)={lifted}"
        )));
    }
    Ok(())
}

/// A permutation where equality of domination numbers and existence of an
/// effective separable γ-set disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub pi: Permutation,
    pub gamma: usize,
    pub prism_gamma: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub effective: Option<EffectiveWitness>,
}

/// For every permutation, compares `γ(πG) = γ(G)` with the existence of an
/// effective separable γ-set. Edgeless graphs are refused.
pub fn theorem2_biconditional_probe(g: &Graph, limit: usize) -> Result<Vec<Discrepancy>> {
    if g.is_edgeless() {
        return Err(Error::Edgeless);
    }
    guard(g, limit)?;
    let gamma = domination_number(g).gamma;
    let records = separable_records(g, &enumerate_sets_of_size(g, gamma));
    let mut out = Vec::new();
    for pi in LexPermutations::new(g.order()) {
        let pg = prism_gamma(g, &pi)?;
        let effective = exists_effective_among(g, &records, &pi)?;
        if (pg == gamma) != effective.is_some() {
            out.push(Discrepancy { pi, gamma, prism_gamma: pg, effective });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub fixer_guard: usize,
    pub check_guard: usize,
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            fixer_guard: DEFAULT_FIXER_GUARD,
            check_guard: DEFAULT_CHECK_GUARD,
            jobs: 1,
        }
    }
}

/// One evaluated corpus graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub graph: String,
    pub verdict: FixerVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<AdversaryCertificate>,
}

/// A corpus line that could not be evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailure {
    pub line: usize,
    pub input: String,
    pub error: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub universal_fixers: Vec<String>,
    pub edgeless: Vec<String>,
    /// The fixers found are exactly the edgeless graphs.
    pub conjecture_holds: bool,
    pub applicable: usize,
    pub certificates_passed: usize,
    pub certificates_failed: Vec<String>,
    pub proof_gaps: usize,
    pub failures: Vec<SweepFailure>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub summary: SweepSummary,
}

fn sweep_line(line: &str, opts: &SweepOptions) -> Result<SweepEntry> {
    let g = parse_graph6(line)?;
    let verdict = is_universal_fixer(&g, opts.fixer_guard)?;
    let certificate = match check_graph_with(&g, None, opts.check_guard)? {
        CheckOutcome::Certified(c) => Some(c),
        CheckOutcome::NotApplicable { .. } => None,
    };
    Ok(SweepEntry { graph: line.to_string(), verdict, certificate })
}

/// Evaluates every graph6 line of a corpus. Blank lines and a leading
/// `>>graph6<<` header are skipped; a bad line is recorded and the sweep
/// carries on. Output is sorted by graph6 string whatever `jobs` is.
pub fn conjecture_sweep<'a, I>(lines: I, opts: &SweepOptions) -> SweepReport
where
    I: IntoIterator<Item = &'a str>,
{
    let work: Vec<(usize, &str)> = lines
        .into_iter()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches(['\n', '\r'])))
        .map(|(i, l)| (i, l.strip_prefix(">>graph6<<").unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();

    let jobs = opts.jobs.max(1).min(work.len().max(1));
    let results: Vec<(usize, &str, Result<SweepEntry>)> = if jobs == 1 {
        work.iter().map(|&(i, l)| (i, l, sweep_line(l, opts))).collect()
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|k| {
                    let work = &work;
                    s.spawn(move || {
                        work.iter()
                            .skip(k)
                            .step_by(jobs)
                            .map(|&(i, l)| (i, l, sweep_line(l, opts)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        })
    };

    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for (line, input, r) in results {
        match r {
            Ok(e) => entries.push((e, line)),
            Err(e) => failures.push(SweepFailure { line, input: input.to_string(), error: e.to_string() }),
        }
    }
    entries.sort_by(|(a, la), (b, lb)| a.graph.cmp(&b.graph).then(la.cmp(lb)));
    failures.sort_by_key(|f| f.line);
    let entries: Vec<SweepEntry> = entries.into_iter().map(|(e, _)| e).collect();

    let fixers: BTreeSet<&str> = entries
        .iter()
        .filter(|e| e.verdict.is_universal_fixer)
        .map(|e| e.graph.as_str())
        .collect();
    let edgeless: BTreeSet<&str> = entries
        .iter()
        .filter(|e| parse_graph6(&e.graph).is_ok_and(|g| g.is_edgeless()))
        .map(|e| e.graph.as_str())
        .collect();
    let certs: Vec<&AdversaryCertificate> = entries.iter().filter_map(|e| e.certificate.as_ref()).collect();

    let summary = SweepSummary {
        graphs: entries.len(),
        conjecture_holds: fixers == edgeless,
        universal_fixers: fixers.into_iter().map(String::from).collect(),
        edgeless: edgeless.into_iter().map(String::from).collect(),
        applicable: certs.len(),
        certificates_passed: certs.iter().filter(|c| c.passed).count(),
        certificates_failed: certs.iter().filter(|c| !c.passed).map(|c| c.graph.clone()).collect(),
        proof_gaps: certs.iter().map(|c| c.proof_gaps).sum(),
        failures,
    };
    SweepReport { entries, summary }
}
