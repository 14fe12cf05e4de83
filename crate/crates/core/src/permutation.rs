use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// A bijection on `0..n`, stored in image notation: `map[v] = π(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &p in &map {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotBijection(n));
            }
        }
        Ok(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self { map: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// `π(S)`.
    pub fn image(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.map[v]).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (v, &p) in self.map.iter().enumerate() {
            inv[p] = v;
        }
        Self { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(v, &p)| v == p)
    }

    /// Steps to the lexicographically next permutation; returns false (and
    /// leaves `self` unchanged) at the last one.
    pub fn advance(&mut self) -> bool {
        let m = &mut self.map;
        let Some(i) = (1..m.len()).rev().find(|&i| m[i - 1] < m[i]) else {
            return false;
        };
        let j = (i..m.len()).rev().find(|&j| m[j] > m[i - 1]).expect("m[i] qualifies");
        m.swap(i - 1, j);
        m[i..].reverse();
        true
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for start in 0..self.map.len() {
            if seen[start] || self.map[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v);
                v = self.map[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation, e.g. `(0 1 3)`; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(map: Vec<usize>) -> Result<Self> {
        Self::new(map)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.map
    }
}

/// Image notation: `p0 p1 ... p(n-1)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let map = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidPermutation(t.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(map)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub struct LexPermutations {
    next: Option<Permutation>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        Self { next: Some(Permutation::identity(n)) }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if following.advance() {
            self.next = Some(following);
        }
        Some(current)
    }
}
