//! Prisms `πG`, the adversarial permutation for a C3-free vertex, and the
//! case analysis showing that no separable γ-set survives it.
//!
//! Index convention for `πG`: original vertex `v` is `v`, its copy `v'` is
//! `v + n`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::domination::{domination_number, is_2_packing};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::permutation::Permutation;
use crate::separable::{is_effective, SeparableGammaSet};

/// `G ∪ G' ∪ M_π` on `2n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrismGraph {
    graph: Graph,
    base_order: usize,
    pi: Permutation,
}

impl PrismGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn permutation(&self) -> &Permutation {
        &self.pi
    }

    /// Index of the copy vertex `v'`.
    pub fn copy_of(&self, v: usize) -> usize {
        v + self.base_order
    }

    /// The matching `M_π` as `(v, π(v)')` pairs.
    pub fn matching(&self) -> Vec<(usize, usize)> {
        (0..self.base_order).map(|v| (v, self.pi.apply(v) + self.base_order)).collect()
    }
}

pub fn build_prism(g: &Graph, pi: &Permutation) -> Result<PrismGraph> {
    let n = g.order();
    if pi.len() != n {
        return Err(Error::SizeMismatch { perm: pi.len(), n });
    }
    let edges = g.edges();
    let original = edges.as_slice().iter().copied();
    let copy = edges.as_slice().iter().map(|&(u, v)| (u + n, v + n));
    let matching = (0..n).map(|v| (v, pi.apply(v) + n));
    Ok(PrismGraph {
        graph: Graph::from_edges(2 * n, original.chain(copy).chain(matching))?,
        base_order: n,
        pi: pi.clone(),
    })
}

/// `γ(πG)`.
pub fn prism_gamma(g: &Graph, pi: &Permutation) -> Result<usize> {
    Ok(domination_number(build_prism(g, pi)?.graph()).gamma)
}

fn closed_nbhd_of_c3_free(g: &Graph, x: usize) -> Result<VertexSet> {
    if !g.is_c3_free_vertex(x)? {
        return Err(Error::NotC3Free(x));
    }
    g.closed_nbhd(x)
}

/// The canonical adversary for a C3-free vertex `x`: rotate `X = N[x]` one
/// step in increasing order and fix everything else. A single cycle of
/// length `|X| >= 2` has no fixed points, and no 2-cycles once `|X| >= 3`.
pub fn adversary_permutation(g: &Graph, x: usize) -> Result<Permutation> {
    let xs = closed_nbhd_of_c3_free(g, x)?.to_vec();
    let mut map: Vec<usize> = (0..g.order()).collect();
    for (i, &v) in xs.iter().enumerate() {
        map[v] = xs[(i + 1) % xs.len()];
    }
    Permutation::new(map)
}

/// A uniformly random permutation meeting the adversary conditions for `x`,
/// by rejection sampling over arrangements of `N[x]`.
pub fn random_adversary_permutation<R: Rng + ?Sized>(
    g: &Graph,
    x: usize,
    rng: &mut R,
) -> Result<Permutation> {
    let xs = closed_nbhd_of_c3_free(g, x)?.to_vec();
    let mut images = xs.clone();
    loop {
        images.shuffle(rng);
        let mut map: Vec<usize> = (0..g.order()).collect();
        for (&v, &p) in xs.iter().zip(&images) {
            map[v] = p;
        }
        let pi = Permutation::new(map)?;
        if adversary_violations(g, x, &pi).is_empty() {
            return Ok(pi);
        }
    }
}

/// A broken adversary condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AdversaryViolation {
    /// A vertex outside `N[x]` is moved.
    MovesOutside { vertex: usize },
    /// A vertex of `N[x]` is fixed.
    FixesInside { vertex: usize },
    /// `π` swaps two vertices of `N[x]` while `|N[x]| >= 3`.
    TwoCycle { u: usize, v: usize },
}

/// Checks the three adversary conditions for `π` against `X = N[x]`,
/// independently of how `π` was built. Empty means conforming.
pub fn adversary_violations(g: &Graph, x: usize, pi: &Permutation) -> Vec<AdversaryViolation> {
    let xs = g.closed(x);
    let mut out = Vec::new();
    for v in 0..g.order() {
        let p = pi.apply(v);
        match (xs.contains(v), p == v) {
            (false, false) => out.push(AdversaryViolation::MovesOutside { vertex: v }),
            (true, true) => out.push(AdversaryViolation::FixesInside { vertex: v }),
            _ => {}
        }
        if xs.len() >= 3 && xs.contains(v) && v < p && xs.contains(p) && pi.apply(p) == v {
            out.push(AdversaryViolation::TwoCycle { u: v, v: p });
        }
    }
    out
}

/// Which branch of the case analysis disposes of a separable record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    /// `A ∩ X = {v}` with `v ∈ A1`.
    #[serde(rename = "Case1_1")]
    Case1_1,
    /// `A ∩ X = {v}` with `v ∈ A2`.
    #[serde(rename = "Case1_2")]
    Case1_2,
    /// `A ∩ X = {u, v} ⊆ A1`.
    #[serde(rename = "Case2_1")]
    Case2_1,
    /// `A ∩ X = {u, v} ⊆ A2`.
    #[serde(rename = "Case2_2")]
    Case2_2,
    /// `u ∈ A1`, `v ∈ A2`, and `π(u) = z'` for some `z ∈ X - A`.
    #[serde(rename = "Case2_mix_u")]
    Case2MixU,
    /// `u ∈ A1`, `v ∈ A2`, and `π(v) = z'` for some `z ∈ X - A`.
    #[serde(rename = "Case2_mix_v")]
    Case2MixV,
    /// `|A ∩ X| >= 3`.
    #[serde(rename = "Case3")]
    Case3,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Case1_1 => "Case1_1",
            CaseTag::Case1_2 => "Case1_2",
            CaseTag::Case2_1 => "Case2_1",
            CaseTag::Case2_2 => "Case2_2",
            CaseTag::Case2MixU => "Case2_mix_u",
            CaseTag::Case2MixV => "Case2_mix_v",
            CaseTag::Case3 => "Case3",
        }
    }
}

/// Vertices of `G` instantiating a case.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseDetail {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<usize>,
}

/// A concrete obstruction to effectiveness, checkable against the prism.
/// Vertices are prism indices: originals `v`, copies `v + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Contradiction {
    /// A copy vertex outside `π(A)` with no neighbour in `π(A2)`.
    UndominatedCopy { vertex: usize },
    /// An edge of `G'` between `π(A1)` and `π(A2)`.
    ImageCrossEdge { b1: usize, b2: usize },
    /// An edge of `G'` inside `π(A1)`.
    ImageInternalEdge { a: usize, b: usize },
    /// Two vertices of `π(A1)` whose closed neighbourhoods in `G'` meet.
    ImagePackingClash { a: usize, b: usize },
    /// Two vertices of `A2` whose closed neighbourhoods in `G` meet.
    PackingClash { a: usize, b: usize },
}

impl Contradiction {
    /// Re-checks the obstruction from scratch.
    pub fn holds(&self, g: &Graph, sep: &SeparableGammaSet, pi: &Permutation) -> bool {
        let n = g.order();
        let b1 = pi.image(&sep.a1);
        let b2 = pi.image(&sep.a2);
        let copy = |c: usize| c.checked_sub(n).filter(|&v| v < n);
        let clash = |a: usize, b: usize| a != b && g.closed(a).intersects(&g.closed(b));
        match *self {
            Contradiction::UndominatedCopy { vertex } => copy(vertex).is_some_and(|y| {
                !b1.contains(y) && !b2.contains(y) && g.neighbors(y).is_disjoint(&b2)
            }),
            Contradiction::ImageCrossEdge { b1: p, b2: q } => match (copy(p), copy(q)) {
                (Some(p), Some(q)) => b1.contains(p) && b2.contains(q) && g.has_edge(p, q),
                _ => false,
            },
            Contradiction::ImageInternalEdge { a, b } => match (copy(a), copy(b)) {
                (Some(a), Some(b)) => b1.contains(a) && b1.contains(b) && g.has_edge(a, b),
                _ => false,
            },
            Contradiction::ImagePackingClash { a, b } => match (copy(a), copy(b)) {
                (Some(a), Some(b)) => b1.contains(a) && b1.contains(b) && clash(a, b),
                _ => false,
            },
            Contradiction::PackingClash { a, b } => {
                a < n && b < n && sep.a2.contains(a) && sep.a2.contains(b) && clash(a, b)
            }
        }
    }

    /// Human-readable form with copy vertices primed.
    pub fn describe(&self, n: usize) -> String {
        let p = |c: usize| format!("{}'", c - n);
        match *self {
            Contradiction::UndominatedCopy { vertex } => {
                format!("{} is outside π(A) and has no neighbour in π(A2)", p(vertex))
            }
            Contradiction::ImageCrossEdge { b1, b2 } => {
                format!("edge {}{} joins π(A1) and π(A2)", p(b1), p(b2))
            }
            Contradiction::ImageInternalEdge { a, b } => format!("edge {}{} lies inside π(A1)", p(a), p(b)),
            Contradiction::ImagePackingClash { a, b } => {
                format!("N[{}] and N[{}] meet, so π(A1) is not a 2-packing", p(a), p(b))
            }
            Contradiction::PackingClash { a, b } => {
                format!("N[{a}] and N[{b}] meet, so A2 is not a 2-packing")
            }
        }
    }
}

/// The case a separable record falls into under the adversary, with the
/// obstruction that rules it out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureCase {
    pub tag: CaseTag,
    pub detail: CaseDetail,
    pub contradiction: Contradiction,
    /// False when the case's own argument did not produce the obstruction
    /// and a different one had to be found.
    pub follows_proof: bool,
}

/// Places `sep` in the case analysis for the adversary `π` built around
/// `x`, and verifies an obstruction to its effectiveness.
///
/// Fails loudly with [`Error::Counterexample`] if `sep` is in fact
/// effective under `π`.
pub fn classify_failure(
    g: &Graph,
    sep: &SeparableGammaSet,
    pi: &Permutation,
    x: usize,
) -> Result<FailureCase> {
    let n = g.order();
    if is_effective(g, sep, pi)?.is_some() {
        return Err(Error::Counterexample(format!(
            "record A1={} A2={} is effective under π = [{pi}] (x = {x})",
            sep.a1, sep.a2
        )));
    }
    let xs = closed_nbhd_of_c3_free(g, x)?;
    let in1 = sep.a1.intersection(&xs).to_vec();
    let in2 = sep.a2.intersection(&xs).to_vec();
    let b1 = pi.image(&sep.a1);
    let b2 = pi.image(&sep.a2);
    let fixed = |v: usize| pi.apply(v) == v;

    let (tag, detail, argued) = match (in1.len(), in2.len()) {
        (0, 0) => {
            return Err(Error::Counterexample(format!(
                "record A={} misses N[{x}] and cannot be dominating",
                sep.a
            )))
        }
        (1, 0) => {
            let v = in1[0];
            let c = Contradiction::UndominatedCopy { vertex: v + n };
            let d = CaseDetail { v: Some(v), ..Default::default() };
            (CaseTag::Case1_1, d, Some(c))
        }
        (0, 1) => {
            let v = in2[0];
            let w = pi.apply(v);
            let u = sep.a1.iter().find(|&u| g.has_edge(u, w) && fixed(u));
            let d = CaseDetail { v: Some(v), w: Some(w), u, ..Default::default() };
            let c = u.map(|u| Contradiction::ImageCrossEdge { b1: u + n, b2: w + n });
            (CaseTag::Case1_2, d, c)
        }
        (2, 0) => {
            let (u, v) = (in1[0], in1[1]);
            let d = CaseDetail { u: Some(u), v: Some(v), ..Default::default() };
            let c = Contradiction::ImagePackingClash { a: pi.apply(u) + n, b: pi.apply(v) + n };
            (CaseTag::Case2_1, d, Some(c))
        }
        (0, 2) => {
            let (u, v) = (in2[0], in2[1]);
            let d = CaseDetail { u: Some(u), v: Some(v), ..Default::default() };
            (CaseTag::Case2_2, d, Some(Contradiction::PackingClash { a: u, b: v }))
        }
        (1, 1) => {
            let (u, v) = (in1[0], in2[0]);
            let outside_a = |z: usize| xs.contains(z) && !sep.a.contains(z);
            // the dominator of z that the argument uses is fixed by π
            let dominator = |z: usize| sep.a1.iter().find(|&w| g.has_edge(z, w) && fixed(w));
            let (pu, pv) = (pi.apply(u), pi.apply(v));
            let mut branches = Vec::with_capacity(2);
            if pu != v && outside_a(pu) {
                let z = pu;
                let w = dominator(z);
                let d = CaseDetail { u: Some(u), v: Some(v), w, z: Some(z) };
                let c = w.map(|w| Contradiction::ImageInternalEdge { a: z + n, b: w + n });
                branches.push((CaseTag::Case2MixU, d, c));
            }
            if pv != u && outside_a(pv) {
                let z = pv;
                let w = dominator(z);
                let d = CaseDetail { u: Some(u), v: Some(v), w, z: Some(z) };
                let c = w.map(|w| Contradiction::ImageCrossEdge { b1: w + n, b2: z + n });
                branches.push((CaseTag::Case2MixV, d, c));
            }
            // z = x has u as its only dominator in A1, and u is moved; prefer
            // a branch whose argument goes through
            let ok = branches
                .iter()
                .position(|(_, _, c)| c.is_some_and(|c| c.holds(g, sep, pi)))
                .unwrap_or(0);
            if branches.is_empty() {
                let d = CaseDetail { u: Some(u), v: Some(v), ..Default::default() };
                (CaseTag::Case2MixU, d, None)
            } else {
                branches.swap_remove(ok)
            }
        }
        _ => {
            let c = if in1.len() >= 2 {
                Contradiction::ImagePackingClash { a: pi.apply(in1[0]) + n, b: pi.apply(in1[1]) + n }
            } else {
                Contradiction::PackingClash { a: in2[0], b: in2[1] }
            };
            let d = CaseDetail {
                u: in1.first().copied(),
                v: in2.first().copied(),
                ..Default::default()
            };
            (CaseTag::Case3, d, Some(c))
        }
    };

    if let Some(c) = argued.filter(|c| c.holds(g, sep, pi)) {
        return Ok(FailureCase { tag, detail, contradiction: c, follows_proof: true });
    }
    let c = find_contradiction(g, sep, &b1, &b2).ok_or_else(|| {
        Error::Counterexample(format!(
            "no obstruction found for A1={} A2={} under π = [{pi}]",
            sep.a1, sep.a2
        ))
    })?;
    debug_assert!(c.holds(g, sep, pi));
    Ok(FailureCase { tag, detail, contradiction: c, follows_proof: false })
}

/// Any obstruction, searched in a fixed order: cut edges of the image,
/// edges inside `π(A1)`, packing clashes, then undominated copy vertices.
fn find_contradiction(
    g: &Graph,
    sep: &SeparableGammaSet,
    b1: &VertexSet,
    b2: &VertexSet,
) -> Option<Contradiction> {
    let n = g.order();
    for p in b1 {
        if let Some(q) = g.neighbors(p).intersection(b2).first() {
            return Some(Contradiction::ImageCrossEdge { b1: p + n, b2: q + n });
        }
    }
    for p in b1 {
        if let Some(q) = g.neighbors(p).intersection(b1).iter().find(|&q| q > p) {
            return Some(Contradiction::ImageInternalEdge { a: p + n, b: q + n });
        }
    }
    let clash = |s: &VertexSet| {
        let m = s.to_vec();
        m.iter().enumerate().find_map(|(i, &a)| {
            m[i + 1..]
                .iter()
                .find(|&&b| g.closed(a).intersects(&g.closed(b)))
                .map(|&b| (a, b))
        })
    };
    if !is_2_packing(g, b1) {
        let (a, b) = clash(b1)?;
        return Some(Contradiction::ImagePackingClash { a: a + n, b: b + n });
    }
    if !is_2_packing(g, &sep.a2) {
        let (a, b) = clash(&sep.a2)?;
        return Some(Contradiction::PackingClash { a, b });
    }
    let b = b1.union(b2);
    b.complement(n)
        .iter()
        .find(|&y| g.neighbors(y).is_disjoint(b2))
        .map(|y| Contradiction::UndominatedCopy { vertex: y + n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::naive_domination_number;
    use crate::permutation::LexPermutations;
    use crate::separable::enumerate_separable;

    fn rec<const P: usize, const Q: usize>(a1: [usize; P], a2: [usize; Q]) -> SeparableGammaSet {
        SeparableGammaSet::from_parts(VertexSet::from(a1), VertexSet::from(a2))
    }

    fn perm(map: &[usize]) -> Permutation {
        Permutation::new(map.to_vec()).unwrap()
    }

    #[test]
    fn prism_shapes() {
        let m = build_prism(&Graph::empty(3), &perm(&[2, 0, 1])).unwrap();
        assert_eq!(m.graph().edge_count(), 3);
        assert!((0..6).all(|v| m.graph().degree(v) == 1));

        let q3 = build_prism(&Graph::cycle(4), &Permutation::identity(4)).unwrap();
        let g = q3.graph();
        assert_eq!(g.edge_count(), 12);
        assert!((0..8).all(|v| g.degree(v) == 3));
        assert_eq!(g.girth(), crate::graph::Girth::Finite(4));
        assert!(crate::domination::is_independent(g, &VertexSet::from([0, 2, 5, 7])));

        let k2 = build_prism(&Graph::complete(2), &perm(&[1, 0])).unwrap();
        // 0-1, 1'-0', 0-1', 1-0' closes the 4-cycle 0 1 0' 1'
        assert_eq!(k2.graph(), &Graph::cycle(4));
        assert_eq!(k2.matching(), vec![(0, 3), (1, 2)]);

        assert_eq!(
            build_prism(&Graph::cycle(4), &Permutation::identity(3)),
            Err(Error::SizeMismatch { perm: 3, n: 4 })
        );
    }

    #[test]
    fn prism_domination_numbers() {
        for n in 1..5 {
            for pi in LexPermutations::new(n) {
                assert_eq!(prism_gamma(&Graph::empty(n), &pi).unwrap(), n);
            }
        }
        let c4 = Graph::cycle(4);
        let id = build_prism(&c4, &Permutation::identity(4)).unwrap();
        assert_eq!(naive_domination_number(id.graph()).unwrap().gamma, 2);
        assert_eq!(prism_gamma(&c4, &Permutation::identity(4)).unwrap(), 2);
        let adv = build_prism(&c4, &perm(&[1, 3, 2, 0])).unwrap();
        assert_eq!(naive_domination_number(adv.graph()).unwrap().gamma, 3);
        assert_eq!(prism_gamma(&c4, &perm(&[1, 3, 2, 0])).unwrap(), 3);
    }

    #[test]
    fn identity_prism_swaps_sides() {
        for g in [Graph::petersen(), Graph::path(5), Graph::cycle(6)] {
            let n = g.order();
            let p = build_prism(&g, &Permutation::identity(n)).unwrap();
            let swap = |v: usize| if v < n { v + n } else { v - n };
            for (u, v) in p.graph().edges().as_slice() {
                assert!(p.graph().has_edge(swap(*u), swap(*v)));
            }
        }
    }

    #[test]
    fn canonical_adversaries() {
        assert_eq!(adversary_permutation(&Graph::complete(2), 0).unwrap(), perm(&[1, 0]));
        assert_eq!(adversary_permutation(&Graph::cycle(4), 0).unwrap(), perm(&[1, 3, 2, 0]));
        assert_eq!(adversary_permutation(&Graph::path(3), 1).unwrap(), perm(&[1, 2, 0]));
        assert_eq!(adversary_permutation(&Graph::complete(3), 0), Err(Error::NotC3Free(0)));
        assert_eq!(adversary_permutation(&Graph::empty(2), 0), Err(Error::NotC3Free(0)));
    }

    #[test]
    fn violations_are_detected() {
        let c4 = Graph::cycle(4);
        assert!(adversary_violations(&c4, 0, &perm(&[1, 3, 2, 0])).is_empty());
        assert_eq!(
            adversary_violations(&c4, 0, &Permutation::identity(4)),
            vec![
                AdversaryViolation::FixesInside { vertex: 0 },
                AdversaryViolation::FixesInside { vertex: 1 },
                AdversaryViolation::FixesInside { vertex: 3 },
            ]
        );
        assert!(adversary_violations(&c4, 0, &perm(&[1, 0, 2, 3]))
            .contains(&AdversaryViolation::TwoCycle { u: 0, v: 1 }));
        assert!(adversary_violations(&c4, 0, &perm(&[1, 3, 0, 2]))
            .contains(&AdversaryViolation::MovesOutside { vertex: 2 }));
        // |X| = 2: the swap is required, not a violation
        assert!(adversary_violations(&Graph::complete(2), 0, &perm(&[1, 0])).is_empty());
    }

    #[test]
    fn random_adversaries_conform() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let g = Graph::star(5);
        for _ in 0..50 {
            let pi = random_adversary_permutation(&g, 0, &mut rng).unwrap();
            assert!(adversary_violations(&g, 0, &pi).is_empty());
        }
    }

    #[test]
    fn c4_case_examples() {
        let c4 = Graph::cycle(4);
        let pi = adversary_permutation(&c4, 0).unwrap();

        let c = classify_failure(&c4, &rec([0], [2]), &pi, 0).unwrap();
        assert_eq!(c.tag, CaseTag::Case1_1);
        assert_eq!(c.detail.v, Some(0));
        assert_eq!(c.contradiction, Contradiction::UndominatedCopy { vertex: 4 });
        assert!(c.follows_proof);

        let c = classify_failure(&c4, &rec([2], [0]), &pi, 0).unwrap();
        assert_eq!(c.tag, CaseTag::Case1_2);
        assert_eq!((c.detail.v, c.detail.w, c.detail.u), (Some(0), Some(1), Some(2)));
        assert_eq!(c.contradiction, Contradiction::ImageCrossEdge { b1: 6, b2: 5 });
        assert!(c.follows_proof);

        let c = classify_failure(&c4, &rec([1], [3]), &pi, 0).unwrap();
        assert_eq!(c.tag, CaseTag::Case2MixV);
        assert_eq!((c.detail.u, c.detail.v, c.detail.z), (Some(1), Some(3), Some(0)));
        assert!(!c.follows_proof);
    }

    #[test]
    fn mixed_case_where_the_dominator_of_z_is_moved() {
        // A1 = {3}, A2 = {1}: π(3) = 0' with z = x = 0, whose only
        // dominator in A1 is 3 itself, and π(3) != 3'. The image is still
        // blocked: π(A1) = {0'} and π(A2) = {3'} are joined by 0'3'.
        let c4 = Graph::cycle(4);
        let pi = adversary_permutation(&c4, 0).unwrap();
        let c = classify_failure(&c4, &rec([3], [1]), &pi, 0).unwrap();
        assert_eq!(c.tag, CaseTag::Case2MixU);
        assert_eq!((c.detail.u, c.detail.v, c.detail.z, c.detail.w), (Some(3), Some(1), Some(0), None));
        assert!(!c.follows_proof);
        assert_eq!(c.contradiction, Contradiction::ImageCrossEdge { b1: 4, b2: 7 });
        assert!(c.contradiction.holds(&c4, &rec([3], [1]), &pi));
    }

    #[test]
    fn effective_record_is_a_loud_error() {
        let c4 = Graph::cycle(4);
        let err = classify_failure(&c4, &rec([0], [2]), &Permutation::identity(4), 0);
        assert!(matches!(err, Err(Error::Counterexample(_))));
    }

    #[test]
    fn every_c4_record_gets_a_verified_case() {
        let c4 = Graph::cycle(4);
        for x in 0..4 {
            let pi = adversary_permutation(&c4, x).unwrap();
            for sep in enumerate_separable(&c4) {
                let c = classify_failure(&c4, &sep, &pi, x).unwrap();
                assert!(c.contradiction.holds(&c4, &sep, &pi));
            }
        }
    }

    #[test]
    fn contradiction_checks_reject_false_claims() {
        let c4 = Graph::cycle(4);
        let sep = rec([0], [2]);
        let pi = Permutation::identity(4);
        assert!(!Contradiction::UndominatedCopy { vertex: 5 }.holds(&c4, &sep, &pi));
        assert!(!Contradiction::ImageCrossEdge { b1: 4, b2: 6 }.holds(&c4, &sep, &pi));
        assert!(!Contradiction::PackingClash { a: 2, b: 2 }.holds(&c4, &sep, &pi));
        assert!(!Contradiction::UndominatedCopy { vertex: 1 }.holds(&c4, &sep, &pi));
    }
}
