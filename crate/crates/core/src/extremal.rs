//! Independent brute-force oracles for the Turán-type quantities the
//! visibility numbers of L(K_n) and K_m □ K_n reduce to.
//!
//! Single patterns (C4, K4, K4-minus) are forbidden as subgraphs. The pair
//! pattern used by the dual variant forbids K4 as a subgraph together with
//! C4 as an *induced* subgraph — a 4-cycle whose both diagonals are absent —
//! which is exactly the structure the dual line-graph verifier rules out
//! (K4-minus stays allowed, so e.g. the 4-vertex maximum has 5 edges).

use crate::graph::Graph;
use crate::visibility::k_n_edges;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenPattern {
    /// 4-cycle as a subgraph.
    C4,
    /// K4 as a subgraph.
    K4,
    /// K4 minus one edge, as a subgraph.
    K4Minus,
    /// K4 as a subgraph or C4 as an induced subgraph (the dual pair case).
    K4C4,
}

impl ForbiddenPattern {
    pub fn name(self) -> &'static str {
        match self {
            ForbiddenPattern::C4 => "c4",
            ForbiddenPattern::K4 => "k4",
            ForbiddenPattern::K4Minus => "k4minus",
            ForbiddenPattern::K4C4 => "k4c4",
        }
    }

    fn ceiling(self) -> usize {
        match self {
            ForbiddenPattern::K4C4 => 10,
            _ => 8,
        }
    }
}

impl FromStr for ForbiddenPattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "c4" => Ok(ForbiddenPattern::C4),
            "k4" => Ok(ForbiddenPattern::K4),
            "k4minus" | "k4-" => Ok(ForbiddenPattern::K4Minus),
            "k4c4" => Ok(ForbiddenPattern::K4C4),
            other => Err(format!(
                "unknown pattern {other:?} (expected c4|k4|k4minus|k4c4)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub max_edges: usize,
    pub witness: Graph,
    pub certified: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("n = {n} above the {pattern} oracle ceiling {max}")]
    AboveCeiling {
        n: usize,
        pattern: &'static str,
        max: usize,
    },
    #[error("zarankiewicz supports 2 <= m, n <= 6 (got {m} x {n})")]
    ZarankiewiczRange { m: usize, n: usize },
}

/// Exact edge count of the Turán graph T(n, r) from balanced part sizes.
pub fn turan_edge_count(n: usize, r: usize) -> Option<usize> {
    if r == 0 {
        return None;
    }
    let c2 = |x: usize| x * x.saturating_sub(1) / 2;
    let q = n / r;
    let rem = n % r;
    let within = rem * c2(q + 1) + (r - rem) * c2(q);
    Some(c2(n) - within)
}

/// Exact subgraph containment (induced for the C4 half of the pair case).
pub fn contains_pattern(g: &Graph, pattern: ForbiddenPattern) -> bool {
    match pattern {
        ForbiddenPattern::C4 => contains_c4_subgraph(g),
        ForbiddenPattern::K4 => contains_k4(g),
        ForbiddenPattern::K4Minus => contains_k4_minus(g),
        ForbiddenPattern::K4C4 => contains_k4(g) || contains_induced_c4(g),
    }
}

/// C4 subgraph: two vertices with at least two common neighbors.
fn contains_c4_subgraph(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let mut common = g.neighbors(u).clone();
            common.intersect_with(g.neighbors(v));
            if common.len() >= 2 {
                return true;
            }
        }
    }
    false
}

/// K4-minus subgraph: an edge whose endpoints share two common neighbors.
fn contains_k4_minus(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        let mut common = g.neighbors(u).clone();
        common.intersect_with(g.neighbors(v));
        if common.len() >= 2 {
            return true;
        }
    }
    false
}

/// K4 subgraph: a triangle extended by a common neighbor of all three.
fn contains_k4(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        let mut common = g.neighbors(u).clone();
        common.intersect_with(g.neighbors(v));
        for w in common.iter() {
            if g.neighbors(w).intersects(&common) {
                return true;
            }
        }
    }
    false
}

/// Induced C4: a non-adjacent pair with two non-adjacent common neighbors.
fn contains_induced_c4(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut common = g.neighbors(u).clone();
            common.intersect_with(g.neighbors(v));
            if common.len() < 2 {
                continue;
            }
            for w in common.iter() {
                let mut rest = common.clone();
                rest.subtract(g.neighbors(w));
                rest.remove(w);
                if !rest.is_empty() {
                    return true;
                }
            }
        }
    }
    false
}

/// Search state over K_n edges in colexicographic order, adjacency as
/// n-bit masks (n <= 10).
struct EdgeSearch {
    edges: Vec<(usize, usize)>,
    pattern: ForbiddenPattern,
    adj: Vec<u64>,
    chosen: u64,
    best_edges: usize,
    best_mask: u64,
    nodes: u64,
}

/// Edges of K_n in colex order: (0,1), (0,2), (1,2), (0,3), ...
fn colex_edges(n: usize) -> Vec<(usize, usize)> {
    let mut edges = k_n_edges(n);
    edges.sort_by_key(|&(u, v)| (v, u));
    edges
}

impl EdgeSearch {
    /// Would adding edge (u, v) now create the pattern? Single patterns are
    /// monotone under edge addition, so a local check around (u, v) is exact.
    fn addition_creates(&self, u: usize, v: usize) -> bool {
        let au = self.adj[u];
        let av = self.adj[v];
        match self.pattern {
            ForbiddenPattern::C4 => {
                // Cycle u-v-a-b-u: a in N(v), b in N(a) ∩ N(u) \ {v}.
                let mut cands = av & !(1 << u);
                while cands != 0 {
                    let a = cands.trailing_zeros() as usize;
                    cands &= cands - 1;
                    if self.adj[a] & au & !(1 << v) != 0 {
                        return true;
                    }
                }
                false
            }
            ForbiddenPattern::K4 => {
                let common = au & av;
                let mut c = common;
                while c != 0 {
                    let w = c.trailing_zeros() as usize;
                    c &= c - 1;
                    if self.adj[w] & common != 0 {
                        return true;
                    }
                }
                false
            }
            ForbiddenPattern::K4Minus => {
                let common = au & av;
                if common.count_ones() >= 2 {
                    return true;
                }
                let mut c = common;
                while c != 0 {
                    let w = c.trailing_zeros() as usize;
                    c &= c - 1;
                    if self.adj[w] & au & !(1 << v) != 0 || self.adj[w] & av & !(1 << u) != 0 {
                        return true;
                    }
                }
                false
            }
            ForbiddenPattern::K4C4 => unreachable!("pair case uses completed-quadruple checks"),
        }
    }

    /// Pair-case check: when edge (u, v) with u < v is decided, every 4-set
    /// {w, z, u, v} with w < z < u has all six edges decided. K4 can only
    /// appear on inclusion; an induced C4 can be completed either way
    /// because excluding a diagonal is what finishes the cycle pattern.
    fn pair_violation_after_decision(&self, u: usize, v: usize, included: bool) -> bool {
        let below_u = (1u64 << u) - 1;
        let au = self.adj[u];
        let av = self.adj[v];
        if included {
            let common = au & av & below_u;
            // K4 {w,z,u,v}: w, z common neighbors, wz an edge.
            let mut c = common;
            while c != 0 {
                let w = c.trailing_zeros() as usize;
                c &= c - 1;
                if self.adj[w] & common != 0 {
                    return true;
                }
            }
            // Induced C4 with uv a cycle edge: a in N(v)\N(u), b in N(u)\N(v),
            // ab an edge; diagonals ua, vb absent.
            let only_v = av & !au & below_u;
            let only_u = au & !av & below_u;
            let mut c = only_v;
            while c != 0 {
                let a = c.trailing_zeros() as usize;
                c &= c - 1;
                if self.adj[a] & only_u != 0 {
                    return true;
                }
            }
            false
        } else {
            // Induced C4 with uv a missing diagonal: w, z common neighbors
            // of u and v with wz absent.
            let common = au & av & below_u;
            let mut c = common;
            while c != 0 {
                let w = c.trailing_zeros() as usize;
                c &= c - 1;
                if common & !self.adj[w] & !(1u64 << w) != 0 {
                    return true;
                }
            }
            false
        }
    }

    fn record(&mut self, count: usize) {
        if count > self.best_edges {
            self.best_edges = count;
            self.best_mask = self.chosen;
        }
    }

    fn dfs(&mut self, idx: usize, count: usize) {
        self.nodes += 1;
        if idx == self.edges.len() {
            self.record(count);
            return;
        }
        if count + (self.edges.len() - idx) <= self.best_edges {
            return;
        }
        let (u, v) = self.edges[idx];
        let pair = self.pattern == ForbiddenPattern::K4C4;
        // Include the edge.
        let can_include = if pair {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            let bad = self.pair_violation_after_decision(u, v, true);
            if bad {
                self.adj[u] &= !(1 << v);
                self.adj[v] &= !(1 << u);
            }
            !bad
        } else if self.addition_creates(u, v) {
            false
        } else {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            true
        };
        if can_include {
            self.chosen |= 1 << idx;
            self.dfs(idx + 1, count + 1);
            self.chosen &= !(1u64 << idx);
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
        // Exclude the edge.
        if pair && self.pair_violation_after_decision(u, v, false) {
            return;
        }
        self.dfs(idx + 1, count);
    }
}

/// Greedy colex incumbent: add each edge unless it completes the pattern.
fn greedy_incumbent(n: usize, pattern: ForbiddenPattern) -> (usize, u64, Vec<(usize, usize)>) {
    let edges = colex_edges(n);
    let mut s = EdgeSearch {
        edges: edges.clone(),
        pattern,
        adj: vec![0u64; n],
        chosen: 0,
        best_edges: 0,
        best_mask: 0,
        nodes: 0,
    };
    let mut count = 0;
    let mut mask = 0u64;
    for (idx, &(u, v)) in edges.iter().enumerate() {
        let ok = if pattern == ForbiddenPattern::K4C4 {
            s.adj[u] |= 1 << v;
            s.adj[v] |= 1 << u;
            let bad = s.pair_violation_after_decision(u, v, true);
            if bad {
                s.adj[u] &= !(1 << v);
                s.adj[v] &= !(1 << u);
            }
            !bad
        } else if s.addition_creates(u, v) {
            false
        } else {
            s.adj[u] |= 1 << v;
            s.adj[v] |= 1 << u;
            true
        };
        if ok {
            count += 1;
            mask |= 1 << idx;
        }
    }
    // The greedy graph itself may be invalid for the pair case if skipping an
    // edge completed an induced C4; fall back to an empty incumbent then.
    let g = graph_from_edge_mask(n, &edges, mask);
    if contains_pattern(&g, pattern) {
        (0, 0, edges)
    } else {
        (count, mask, edges)
    }
}

fn graph_from_edge_mask(n: usize, edges: &[(usize, usize)], mask: u64) -> Graph {
    let chosen: Vec<(usize, usize)> = edges
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 != 0)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &chosen).unwrap()
}

/// Maximum number of edges of an n-vertex graph avoiding the pattern, by
/// edge-addition branch-and-bound over the colex edge order.
pub fn ex_forbidden(n: usize, pattern: ForbiddenPattern) -> Result<ExtremalResult, ExtremalError> {
    let max = pattern.ceiling();
    if n == 0 || n > max {
        return Err(ExtremalError::AboveCeiling {
            n,
            pattern: pattern.name(),
            max,
        });
    }
    let (gcount, gmask, edges) = greedy_incumbent(n, pattern);
    let mut s = EdgeSearch {
        edges,
        pattern,
        adj: vec![0u64; n],
        chosen: 0,
        best_edges: gcount,
        best_mask: gmask,
        nodes: 0,
    };
    s.dfs(0, 0);
    let witness = graph_from_edge_mask(n, &s.edges, s.best_mask);
    debug_assert_eq!(witness.m(), s.best_edges);
    assert!(
        !contains_pattern(&witness, pattern),
        "extremal witness contains the forbidden pattern"
    );
    Ok(ExtremalResult {
        max_edges: s.best_edges,
        witness,
        certified: true,
    })
}

#[derive(Debug, Clone)]
pub struct ZarankiewiczResult {
    pub max_ones: usize,
    /// Row bitmasks over the n columns.
    pub rows: Vec<u64>,
    pub m: usize,
    pub n: usize,
}

impl ZarankiewiczResult {
    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                (0..self.n)
                    .map(|c| if r >> c & 1 != 0 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

/// Table of the max additional ones achievable by `rows` more rows given a
/// remaining column-pair budget (a row with c ones consumes C(c,2) pairs).
fn zar_bound_table(max_rows: usize, max_budget: usize, ncols: usize) -> Vec<Vec<usize>> {
    let mut t = vec![vec![0usize; max_budget + 1]; max_rows + 1];
    for rows in 1..=max_rows {
        for budget in 0..=max_budget {
            let mut best = 0;
            for c in 0..=ncols {
                let cost = c * c.saturating_sub(1) / 2;
                if cost <= budget {
                    best = best.max(c + t[rows - 1][budget - cost]);
                }
            }
            t[rows][budget] = best;
        }
    }
    t
}

/// z(m, n; 2, 2): maximum 1s in an m x n binary matrix with no 2x2 all-ones
/// submatrix. Row-by-row branch and bound; rows kept in non-increasing mask
/// order (any matrix can be row-permuted into that form).
pub fn zarankiewicz(m: usize, n: usize) -> Result<ZarankiewiczResult, ExtremalError> {
    if !(2..=6).contains(&m) || !(2..=6).contains(&n) {
        return Err(ExtremalError::ZarankiewiczRange { m, n });
    }
    // pairmask[r]: the column pairs a row mask covers; two rows conflict
    // (2x2 all-ones) iff their pairmasks overlap.
    let pair_index = |a: usize, b: usize| a * n - a * (a + 1) / 2 + (b - a - 1);
    let masks = 1u64 << n;
    let mut pairmask = vec![0u64; masks as usize];
    for (r, pm) in pairmask.iter_mut().enumerate() {
        for a in 0..n {
            if r >> a & 1 == 0 {
                continue;
            }
            for b in a + 1..n {
                if r >> b & 1 != 0 {
                    *pm |= 1 << pair_index(a, b);
                }
            }
        }
    }

    struct St {
        m: usize,
        n: usize,
        pairmask: Vec<u64>,
        bound: Vec<Vec<usize>>,
        rows: Vec<u64>,
        best: usize,
        best_rows: Vec<u64>,
    }
    fn dfs(st: &mut St, row: usize, prev: u64, used_pairs: u64, ones: usize) {
        if row == st.m {
            if ones > st.best {
                st.best = ones;
                st.best_rows = st.rows.clone();
            }
            return;
        }
        let budget = st.n * (st.n - 1) / 2 - used_pairs.count_ones() as usize;
        if ones + st.bound[st.m - row][budget] <= st.best {
            return;
        }
        // Enumerate candidate rows in descending mask order, bounded by prev.
        let mut r = prev;
        loop {
            if st.pairmask[r as usize] & used_pairs == 0 {
                st.rows.push(r);
                dfs(
                    st,
                    row + 1,
                    r,
                    used_pairs | st.pairmask[r as usize],
                    ones + r.count_ones() as usize,
                );
                st.rows.pop();
            }
            if r == 0 {
                break;
            }
            r -= 1;
        }
    }
    let mut st = St {
        m,
        n,
        pairmask,
        bound: zar_bound_table(m, n * (n - 1) / 2, n),
        rows: Vec::new(),
        best: 0,
        best_rows: vec![0; m],
    };
    dfs(&mut st, 0, masks - 1, 0, 0);
    // Certify the witness.
    for i in 0..m {
        for j in i + 1..m {
            assert!(
                (st.best_rows[i] & st.best_rows[j]).count_ones() <= 1,
                "zarankiewicz witness has a 2x2 all-ones submatrix"
            );
        }
    }
    Ok(ZarankiewiczResult {
        max_ones: st.best,
        rows: st.best_rows,
        m,
        n,
    })
}
