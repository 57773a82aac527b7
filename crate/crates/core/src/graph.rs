//! Immutable simple-graph representation with bit-vector adjacency rows.
//!
//! Rows are sized in 64-bit words; the practical instance ceiling is n <= 512
//! (every instance handled by the solver and oracles is far below that).

use crate::vset::VertexSet;
use std::fmt;
use thiserror::Error;

/// Hop-distance sentinel for disconnected pairs.
pub const INFINITY: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph of order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop at vertex {0} not allowed in a simple graph")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex labels must be unique (duplicate: {0:?})")]
    DuplicateLabel(String),
    #[error("label count {got} does not match order {n}")]
    LabelCountMismatch { got: usize, n: usize },
}

/// A finite simple graph. Adjacency is symmetric and loop-free by
/// construction; instances are immutable once built and safe to share
/// across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Internal edge insertion for generators; panics on misuse.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCountMismatch {
                got: labels.len(),
                n: self.n,
            });
        }
        let mut sorted = labels.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateLabel(w[0].clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|ls| ls[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label if present, otherwise the plain index.
    pub fn display_label(&self, v: usize) -> String {
        match self.label(v) {
            Some(l) => l.to_string(),
            None => v.to_string(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::empty(self.n);
        let mut frontier = VertexSet::empty(self.n);
        seen.insert(0);
        frontier.insert(0);
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.subtract(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen.len() == self.n
    }

    pub fn has_universal_vertex(&self) -> bool {
        self.n >= 1 && (0..self.n).any(|v| self.degree(v) == self.n - 1)
    }

    /// All-pairs hop distances via BFS from every vertex.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![INFINITY; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = VertexSet::empty(n);
            let mut frontier = VertexSet::empty(n);
            seen.insert(s);
            frontier.insert(s);
            row[s] = 0;
            let mut dist = 0u32;
            while !frontier.is_empty() {
                dist += 1;
                let mut next = VertexSet::empty(n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.subtract(&seen);
                for v in next.iter() {
                    row[v] = dist;
                }
                seen.union_with(&next);
                frontier = next;
            }
        }
        DistanceMatrix { n, d }
    }

    /// Largest hop distance; `None` when disconnected (or n = 0).
    pub fn diameter(&self) -> Option<u32> {
        if self.n == 0 {
            return None;
        }
        let dm = self.distance_matrix();
        let mut best = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let duv = dm.get(u, v);
                if duv == INFINITY {
                    return None;
                }
                best = best.max(duv);
            }
        }
        Some(best)
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// BFS from every vertex; a non-tree edge seen from level d closes a
    /// cycle of length at most d(u) + d(w) + 1, and the shortest cycle is
    /// realized exactly when the BFS starts on it.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        for s in 0..self.n {
            let mut dist = vec![INFINITY; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // Cycles through s found later are at least 2*dist[u] long.
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for w in self.adj[u].iter() {
                    if dist[w] == INFINITY {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] {
                        let cand = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m(), self.edges())
    }
}

/// All-pairs shortest-path lengths, computed once per graph.
#[derive(Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline(always)]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted multiset of all pairwise distances (an isomorphism invariant).
    pub fn distance_distribution(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.n.saturating_sub(1) * self.n / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.push(self.get(u, v));
            }
        }
        out.sort_unstable();
        out
    }
}
