//! Graph generators: cliques, cycles, bipartite and Turán graphs, the
//! Petersen graph, join/union, twin duplication, and the minimum-size
//! diameter-two families built from C5 and G7.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("complete graph needs n >= 1")]
    EmptyClique,
    #[error("complete bipartite graph needs both parts non-empty")]
    EmptyPart,
    #[error("cycle needs n >= 3")]
    ShortCycle,
    #[error("Turán graph needs r >= 1")]
    ZeroParts,
    #[error("product factors must be non-empty")]
    EmptyFactor,
    #[error("line graph needs at least one edge")]
    EdgelessLineGraph,
    #[error("{0}")]
    Graph(#[from] GraphError),
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    try_complete(n).expect("n >= 1")
}

pub fn try_complete(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::EmptyClique);
    }
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Complete bipartite graph K_{m,n} with parts {0..m-1} and {m..m+n-1}.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    try_complete_bipartite(m, n).expect("m, n >= 1")
}

pub fn try_complete_bipartite(m: usize, n: usize) -> Result<Graph, GenError> {
    if m == 0 || n == 0 {
        return Err(GenError::EmptyPart);
    }
    let mut g = Graph::edgeless(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Cycle C_n on vertices 0..n-1 in ring order.
pub fn cycle(n: usize) -> Graph {
    try_cycle(n).expect("n >= 3")
}

pub fn try_cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::ShortCycle);
    }
    let mut g = Graph::edgeless(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(5+i).
pub fn petersen() -> Graph {
    let mut g = Graph::edgeless(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    debug_assert_eq!(g.m(), 15);
    g
}

/// Turán graph T(n,r): balanced complete r-partite graph, vertex v in part v mod r.
pub fn turan_graph(n: usize, r: usize) -> Graph {
    try_turan_graph(n, r).expect("r >= 1")
}

pub fn try_turan_graph(n: usize, r: usize) -> Result<Graph, GenError> {
    if r == 0 {
        return Err(GenError::ZeroParts);
    }
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if u % r != v % r {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Join G + H: disjoint union plus every cross edge; H's indices shifted by n(G).
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.add_edge(u, g.n() + v);
        }
    }
    out
}

/// Disjoint union G ∪ H; H's indices shifted by n(G).
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut out = Graph::edgeless(g.n() + h.n());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(g.n() + u, g.n() + v);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinMode {
    /// New vertex v' with N(v') = N(v); v and v' non-adjacent.
    FalseTwin,
    /// New vertex v' with N(v') = N(v) ∪ {v}.
    TrueTwin,
}

/// Duplicate vertex `v`; the copy gets index n(G).
pub fn duplicate_vertex(g: &Graph, v: usize, mode: TwinMode) -> Result<Graph, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { v, n: g.n() });
    }
    let n = g.n();
    let mut out = Graph::edgeless(n + 1);
    for (a, b) in g.edges() {
        out.add_edge(a, b);
    }
    for u in g.neighbors(v).iter() {
        out.add_edge(n, u);
    }
    if mode == TwinMode::TrueTwin {
        out.add_edge(n, v);
    }
    Ok(out)
}

/// C5 with one vertex duplicated i times and a non-adjacent one j times
/// (false twins, so degree-2 duplication keeps m = 2n - 5).
///
/// Layout: base cycle 0-1-2-3-4-0; copies of vertex 0 at 5..5+i, copies of
/// vertex 2 at 5+i..5+i+j.
pub fn c5_family(i: usize, j: usize) -> Graph {
    let mut g = cycle(5);
    for _ in 0..i {
        g = duplicate_vertex(&g, 0, TwinMode::FalseTwin).unwrap();
    }
    for _ in 0..j {
        g = duplicate_vertex(&g, 2, TwinMode::FalseTwin).unwrap();
    }
    let n = g.n();
    assert_eq!(n, 5 + i + j);
    assert_eq!(g.m(), 2 * n - 5);
    assert_eq!(g.diameter(), Some(2));
    assert!(!g.has_universal_vertex());
    g
}

/// G7: a triangle 0-1-2, pendants 3,4,5 on its vertices, and vertex 6 joined
/// to the three pendants; then the degree-2 vertices 3, 4, 5 duplicated
/// i, j, k times (false twins).
///
/// Layout: base 0..6; copies of 3 at 7..7+i, of 4 at 7+i..7+i+j, of 5 after that.
pub fn g7_family(i: usize, j: usize, k: usize) -> Graph {
    let mut g = Graph::from_edges(
        7,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (0, 3),
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap();
    for _ in 0..i {
        g = duplicate_vertex(&g, 3, TwinMode::FalseTwin).unwrap();
    }
    for _ in 0..j {
        g = duplicate_vertex(&g, 4, TwinMode::FalseTwin).unwrap();
    }
    for _ in 0..k {
        g = duplicate_vertex(&g, 5, TwinMode::FalseTwin).unwrap();
    }
    let n = g.n();
    assert_eq!(n, 7 + i + j + k);
    assert_eq!(g.m(), 2 * n - 5);
    assert_eq!(g.diameter(), Some(2));
    assert!(!g.has_universal_vertex());
    g
}
