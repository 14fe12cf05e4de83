//! Exact domination: predicates, a branch-and-bound solver, a brute-force
//! reference, and enumeration of all minimum dominating sets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`naive_domination_number`].
pub const NAIVE_MAX_N: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaResult {
    pub gamma: usize,
    pub witness: VertexSet,
}

/// `N[D] = V`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    g.vertices().is_subset(&g.open_nbhd_set(d).union(d))
}

/// `D ≻ A`: every vertex of `A` has a neighbour in `D`. Open domination,
/// so a vertex of `D` does not cover itself.
pub fn dominates(g: &Graph, d: &VertexSet, a: &VertexSet) -> bool {
    a.is_subset(&g.open_nbhd_set(d))
}

/// No edge has both ends in `s`.
pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| v >= g.order() || g.neighbors(v).is_disjoint(s))
}

/// Closed neighbourhoods of distinct members are pairwise disjoint.
pub fn is_2_packing(g: &Graph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members.iter().enumerate().all(|(i, &u)| {
        let nu = g.closed(u);
        members[i + 1..].iter().all(|&v| nu.is_disjoint(&g.closed(v)))
    })
}

/// Set operations the solver needs, so it can run on a single machine word
/// when the graph fits and on [`VertexSet`] otherwise.
trait Bits: Clone {
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn with(&self, v: usize) -> Self;
    fn count(&self) -> usize;
    fn none(&self) -> bool;
    fn members(&self) -> Vec<usize>;
}

impl Bits for u64 {
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
    fn with(&self, v: usize) -> Self {
        self | 1 << v
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn none(&self) -> bool {
        *self == 0
    }
    fn members(&self) -> Vec<usize> {
        VertexSet::from_mask(*self).to_vec()
    }
}

impl Bits for VertexSet {
    fn and(&self, other: &Self) -> Self {
        self.intersection(other)
    }
    fn and_not(&self, other: &Self) -> Self {
        self.difference(other)
    }
    fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn none(&self) -> bool {
        self.is_empty()
    }
    fn members(&self) -> Vec<usize> {
        self.to_vec()
    }
}

struct Solver<'a, B> {
    closed: &'a [B],
    chosen: Vec<usize>,
}

impl<B: Bits> Solver<'_, B> {
    /// Tries to dominate `undominated` with at most `budget` more vertices,
    /// none of them from `excluded`.
    fn search(&mut self, undominated: &B, excluded: &B, budget: usize) -> bool {
        if undominated.none() {
            return true;
        }
        if budget == 0 {
            return false;
        }

        // Branch on the undominated vertex with the fewest usable dominators.
        let mut pick: Option<(usize, B)> = None;
        for v in undominated.members() {
            let options = self.closed[v].and_not(excluded);
            let c = options.count();
            if c == 0 {
                return false;
            }
            if pick.as_ref().is_none_or(|(best, _)| c < *best) {
                pick = Some((c, options));
            }
        }
        let (_, options) = pick.expect("undominated is nonempty");

        // Each further vertex covers at most `reach` undominated vertices.
        let reach = (0..self.closed.len())
            .map(|u| self.closed[u].and(undominated).count())
            .max()
            .unwrap_or(0);
        if reach == 0 || undominated.count().div_ceil(reach) > budget {
            return false;
        }

        let mut excluded = excluded.clone();
        for u in options.members() {
            self.chosen.push(u);
            if self.search(&undominated.and_not(&self.closed[u]), &excluded, budget - 1) {
                return true;
            }
            self.chosen.pop();
            // any solution using u was found in the branch above
            excluded = excluded.with(u);
        }
        false
    }
}

fn solve<B: Bits>(closed: Vec<B>, all: B, empty: B, lower: usize) -> Vec<usize> {
    let n = closed.len();
    let mut solver = Solver { closed: &closed, chosen: Vec::new() };
    for k in lower..=n {
        solver.chosen.clear();
        if solver.search(&all, &empty, k) {
            return solver.chosen;
        }
    }
    unreachable!("V itself dominates")
}

/// Exact domination number by iterative deepening branch and bound.
pub fn domination_number(g: &Graph) -> GammaResult {
    let n = g.order();
    if n == 0 {
        return GammaResult { gamma: 0, witness: VertexSet::new() };
    }
    let lower = n.div_ceil(g.max_degree() + 1);
    let closed: Vec<VertexSet> = (0..n).map(|v| g.closed(v)).collect();
    let chosen = if n <= 64 {
        let masks = closed.iter().map(|s| s.as_mask().expect("n <= 64")).collect();
        solve(masks, VertexSet::full(n).as_mask().expect("n <= 64"), 0u64, lower)
    } else {
        solve(closed, VertexSet::full(n), VertexSet::new(), lower)
    };
    GammaResult {
        gamma: chosen.len(),
        witness: chosen.into_iter().collect(),
    }
}

/// Reference oracle: scans all subsets by increasing size and returns the
/// first dominating one. Refuses graphs above [`NAIVE_MAX_N`].
pub fn naive_domination_number(g: &Graph) -> Result<GammaResult> {
    let n = g.order();
    if n > NAIVE_MAX_N {
        return Err(Error::Guard { n, guard: NAIVE_MAX_N });
    }
    let full = (1u32 << n) - 1;
    let closed: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| u == v || g.has_edge(u, v)).fold(0, |m, u| m | 1 << u))
        .collect();
    let dominated = |mask: u32| {
        (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .fold(0u32, |acc, v| acc | closed[v])
            == full
    };
    for k in 0..=n {
        let hit = (0..=full).find(|&m| m.count_ones() as usize == k && dominated(m));
        if let Some(m) = hit {
            return Ok(GammaResult {
                gamma: k,
                witness: VertexSet::from_mask(m as u64),
            });
        }
    }
    unreachable!("V itself dominates")
}

/// All k-subsets of `{0, .., n-1}` in increasing bit-pattern order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    if k > n {
        return Vec::new();
    }
    if n <= 64 {
        // Gosper's hack; u128 keeps the carry out of bit 63 representable.
        let limit = 1u128 << n;
        let mut out = Vec::new();
        let mut m: u128 = (1u128 << k) - 1;
        while m < limit {
            out.push(VertexSet::from_mask(m as u64));
            if m == 0 {
                break;
            }
            let low = m & m.wrapping_neg();
            let ripple = m + low;
            m = (((ripple ^ m) >> 2) / low) | ripple;
        }
        out
    } else {
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().copied().collect());
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
        out.sort();
        out
    }
}

/// Every dominating set of size `γ(g)`, in increasing bit-pattern order.
pub fn enumerate_gamma_sets(g: &Graph) -> Vec<VertexSet> {
    enumerate_sets_of_size(g, domination_number(g).gamma)
}

pub(crate) fn enumerate_sets_of_size(g: &Graph, gamma: usize) -> Vec<VertexSet> {
    subsets_of_size(g.order(), gamma)
        .into_iter()
        .filter(|s| is_dominating(g, s))
        .collect()
}
