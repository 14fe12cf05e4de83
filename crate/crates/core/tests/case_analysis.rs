//! Case classification of separable γ-sets under the canonical adversary,
//! over every corpus graph with a C3-free vertex.

use prism_fixer::graph::parse_graph6;
use prism_fixer::prism::{CaseTag, FailureCase};
use prism_fixer::verify::{check_graph, AdversaryCertificate};

fn certificates(max_n: usize) -> Vec<AdversaryCertificate> {
    (1..=max_n)
        .flat_map(|n| {
            let path = format!("{}/tests/data/graphs{n}.g6", env!("CARGO_MANIFEST_DIR"));
            std::fs::read_to_string(path).unwrap().lines().map(String::from).collect::<Vec<_>>()
        })
        .filter_map(|l| check_graph(&parse_graph6(&l).unwrap()).unwrap().certificate().cloned())
        .collect()
}

fn cases(c: &AdversaryCertificate) -> impl Iterator<Item = &FailureCase> {
    c.records.iter().map(|r| r.case.as_ref().expect("every record classified"))
}

#[test]
fn argument_fails_only_when_z_is_x() {
    for c in certificates(7) {
        for case in cases(&c) {
            if case.follows_proof {
                continue;
            }
            assert!(matches!(case.tag, CaseTag::Case2MixU | CaseTag::Case2MixV), "{} {case:?}", c.graph);
            assert_eq!(case.detail.z, Some(c.x), "{} {case:?}", c.graph);
            assert_eq!(case.detail.w, None, "{}", c.graph);
        }
    }
}

#[test]
fn single_case_counts_tally() {
    for c in certificates(7) {
        let gaps = cases(&c).filter(|k| !k.follows_proof).count();
        assert_eq!(gaps, c.proof_gaps, "{}", c.graph);
        assert!(c.passed, "{}", c.graph);
    }
}

#[test]
fn large_intersections_never_survive() {
    // |A ∩ N[x]| >= 3 forces two vertices of one part into N[x]
    for c in certificates(7) {
        for case in cases(&c).filter(|k| k.tag == CaseTag::Case3) {
            assert!(case.follows_proof, "{}", c.graph);
        }
    }
}

#[test]
fn proof_gap_examples_on_c4() {
    // x = 0, π rotates {0, 1, 3}; both mixed records need z = x
    let c = check_graph(&parse_graph6("Cl").unwrap()).unwrap().certificate().cloned().unwrap();
    assert_eq!(c.proof_gaps, 2);
    let gaps: Vec<_> = cases(&c)
        .filter(|k| !k.follows_proof)
        .map(|k| (k.tag, k.detail.u, k.detail.v, k.detail.z))
        .collect();
    assert_eq!(
        gaps,
        vec![
            (CaseTag::Case2MixV, Some(1), Some(3), Some(0)),
            (CaseTag::Case2MixU, Some(3), Some(1), Some(0)),
        ]
    );
}
