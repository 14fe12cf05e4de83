//! Separable γ-sets and their effectiveness under a permutation.
//!
//! A γ-set `A` split into nonempty parts `(A1, A2)` is separable when `A1`
//! open-dominates `V - A`. The split is ordered: `A1` carries the
//! dominating role, so `(A1, A2)` and `(A2, A1)` are different records.
//!
//! Effectiveness looks at the image `π(A)` in the copy `G'`. The copy is
//! isomorphic to `G` under `v ↦ v'`, so everything here is evaluated in
//! `G`'s own index space and `G'` is never built.

use serde::{Deserialize, Serialize};

use crate::domination::{dominates, enumerate_gamma_sets, is_2_packing, is_dominating, is_independent};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::permutation::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeparableGammaSet {
    pub a: VertexSet,
    pub a1: VertexSet,
    pub a2: VertexSet,
}

impl SeparableGammaSet {
    /// Builds the record `(A1 ∪ A2, A1, A2)` without checking that it is
    /// separable; see [`SeparableGammaSet::is_valid`].
    pub fn from_parts(a1: VertexSet, a2: VertexSet) -> Self {
        Self { a: a1.union(&a2), a1, a2 }
    }

    /// The same γ-set with the roles of the parts exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.a.clone(),
            a1: self.a2.clone(),
            a2: self.a1.clone(),
        }
    }

    /// Checks every structural invariant against `g` with known `γ(g)`.
    pub fn is_valid(&self, g: &Graph, gamma: usize) -> bool {
        !self.a1.is_empty()
            && !self.a2.is_empty()
            && self.a1.is_disjoint(&self.a2)
            && self.a1.union(&self.a2) == self.a
            && self.a.len() == gamma
            && self.a.bound() <= g.order()
            && is_dominating(g, &self.a)
            && dominates(g, &self.a1, &self.a.complement(g.order()))
    }
}

/// The three conclusions about `A2` and the cut `E(A1, A2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub a2_independent: bool,
    pub no_cross_edges: bool,
    pub a2_is_2_packing: bool,
}

impl Lemma1Report {
    pub fn all_hold(&self) -> bool {
        self.a2_independent && self.no_cross_edges && self.a2_is_2_packing
    }
}

/// A record that is effective under some `π`, with the image parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectiveWitness {
    pub sep: SeparableGammaSet,
    /// `π(A1)`, as copy vertices in `G`'s index space.
    pub b1: VertexSet,
    /// `π(A2)`, likewise.
    pub b2: VertexSet,
}

/// Every separable record of `g`: γ-sets in increasing bit-pattern order,
/// then `A1` in increasing bit-pattern order.
pub fn enumerate_separable(g: &Graph) -> Vec<SeparableGammaSet> {
    separable_records(g, &enumerate_gamma_sets(g))
}

/// [`enumerate_separable`] over a precomputed list of γ-sets.
pub fn separable_records(g: &Graph, gamma_sets: &[VertexSet]) -> Vec<SeparableGammaSet> {
    let n = g.order();
    let mut out = Vec::new();
    for a in gamma_sets {
        let outside = a.complement(n);
        let members = a.to_vec();
        let k = members.len();
        if k < 2 {
            continue;
        }
        // Proper nonempty subsets of A, enumerated as masks over `members`.
        // Bit order on members matches bit order on vertex ids.
        let mut splits: Vec<(VertexSet, VertexSet)> = (1..(1u64 << k) - 1)
            .map(|mask| {
                let mut a1 = VertexSet::new();
                let mut a2 = VertexSet::new();
                for (i, &v) in members.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        a1.insert(v);
                    } else {
                        a2.insert(v);
                    }
                }
                (a1, a2)
            })
            .collect();
        splits.sort();
        for (a1, a2) in splits {
            if dominates(g, &a1, &outside) {
                out.push(SeparableGammaSet { a: a.clone(), a1, a2 });
            }
        }
    }
    out
}

/// Evaluates the three properties directly, without assuming separability.
pub fn lemma1_check(g: &Graph, sep: &SeparableGammaSet) -> Lemma1Report {
    Lemma1Report {
        a2_independent: is_independent(g, &sep.a2),
        no_cross_edges: sep.a1.iter().all(|u| g.neighbors(u).is_disjoint(&sep.a2)),
        a2_is_2_packing: is_2_packing(g, &sep.a2),
    }
}

fn check_perm(g: &Graph, pi: &Permutation) -> Result<()> {
    if pi.len() != g.order() {
        return Err(Error::SizeMismatch { perm: pi.len(), n: g.order() });
    }
    Ok(())
}

/// Whether `π(A)` is a `π(A2)`-γ-set of the copy. Returns the witness when
/// it is.
pub fn is_effective(
    g: &Graph,
    sep: &SeparableGammaSet,
    pi: &Permutation,
) -> Result<Option<EffectiveWitness>> {
    check_perm(g, pi)?;
    Ok(effective_unchecked(g, sep, pi))
}

fn effective_unchecked(g: &Graph, sep: &SeparableGammaSet, pi: &Permutation) -> Option<EffectiveWitness> {
    let b1 = pi.image(&sep.a1);
    let b2 = pi.image(&sep.a2);
    let b = b1.union(&b2);
    let effective = !b1.is_empty()
        && !b2.is_empty()
        && b.len() == sep.a.len()
        && is_dominating(g, &b)
        && dominates(g, &b2, &b.complement(g.order()));
    effective.then(|| EffectiveWitness { sep: sep.clone(), b1, b2 })
}

/// First record of [`enumerate_separable`] that is effective under `π`.
pub fn exists_effective(g: &Graph, pi: &Permutation) -> Result<Option<EffectiveWitness>> {
    exists_effective_among(g, &enumerate_separable(g), pi)
}

/// [`exists_effective`] over a precomputed record list.
pub fn exists_effective_among(
    g: &Graph,
    records: &[SeparableGammaSet],
    pi: &Permutation,
) -> Result<Option<EffectiveWitness>> {
    check_perm(g, pi)?;
    Ok(records.iter().find_map(|sep| effective_unchecked(g, sep, pi)))
}
