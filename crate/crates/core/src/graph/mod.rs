//! Simple undirected graphs over dense vertex ids, with bit-vector
//! neighbourhoods.

mod edge_list;
mod graph6;
mod set;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use edge_list::parse_edge_list;
pub use graph6::{parse_graph6, to_graph6, GRAPH6_MAX_N};
pub use set::{EdgeSet, Iter, VertexSet};

/// An immutable simple graph. `adj[v]` is the open neighbourhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Length of a shortest cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges are collapsed;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, pairs).expect("valid pairs")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid pairs")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid pairs")
    }

    /// `K_{1,m}` with the centre at vertex 0.
    pub fn star(m: usize) -> Self {
        Self::from_edges(m + 1, (1..=m).map(|v| (0, v))).expect("valid pairs")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid pairs")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood, unchecked. Panics when `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    pub fn edges(&self) -> EdgeSet {
        EdgeSet::from_pairs(
            (0..self.n).flat_map(|u| self.adj[u].iter().filter(move |&v| u < v).map(move |v| (u, v))),
        )
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.bound() {
            b if b <= self.n => Ok(()),
            b => Err(Error::VertexOutOfRange { vertex: b - 1, n: self.n }),
        }
    }

    /// `N(v)`.
    pub fn open_nbhd(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.adj[v].clone())
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_nbhd(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(self.closed(v))
    }

    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N(X)`: union of open neighbourhoods.
    pub fn open_nbhd_set(&self, xs: &VertexSet) -> VertexSet {
        xs.iter()
            .filter(|&v| v < self.n)
            .fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
    }

    /// `N[X] = N(X) ∪ X`.
    pub fn closed_nbhd_set(&self, xs: &VertexSet) -> Result<VertexSet> {
        self.check_set(xs)?;
        Ok(self.open_nbhd_set(xs).union(xs))
    }

    /// `E(X, Y)`: edges with one end in `X` and the other in `Y`.
    pub fn edges_between(&self, xs: &VertexSet, ys: &VertexSet) -> Result<EdgeSet> {
        self.check_set(xs)?;
        self.check_set(ys)?;
        Ok(EdgeSet::from_pairs(xs.iter().flat_map(|u| {
            self.adj[u].intersection(ys).iter().map(move |v| (u, v)).collect::<Vec<_>>()
        })))
    }

    /// The subgraph induced by `xs`, relabelled in increasing order. The
    /// second component maps each new vertex to its id in `self`.
    pub fn induced_subgraph(&self, xs: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(xs)?;
        let map = xs.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            sub.adj[i] = self.adj[v].intersection(xs).iter().map(|w| index[w]).collect();
        }
        Ok((sub, map))
    }

    /// True iff `x` is non-isolated and lies on no triangle.
    pub fn is_c3_free_vertex(&self, x: usize) -> Result<bool> {
        self.check(x)?;
        let nx = &self.adj[x];
        Ok(!nx.is_empty() && nx.iter().all(|v| self.adj[v].is_disjoint(nx)))
    }

    pub fn c3_free_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&x| self.is_c3_free_vertex(x).expect("in range"))
            .collect()
    }

    /// True iff `N[x]` induces a star `K_{1,m}` (m >= 1) centred at `x`,
    /// decided from the degrees of the induced subgraph.
    pub fn closed_nbhd_is_star(&self, x: usize) -> Result<bool> {
        let (sub, map) = self.induced_subgraph(&self.closed_nbhd(x)?)?;
        let m = sub.order() - 1;
        let centre = map.iter().position(|&v| v == x).expect("x in N[x]");
        Ok(m >= 1
            && sub.degree(centre) == m
            && (0..sub.order()).all(|v| v == centre || sub.degree(v) == 1))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let next = self.open_nbhd_set(&frontier).difference(&seen);
            seen = seen.union(&next);
            frontier = next;
        }
        seen.len() == self.n
    }

    /// Shortest cycle length, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().as_slice())
    }
}
