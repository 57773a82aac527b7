//! The X-visibility predicate and the four variant verifiers, plus the
//! specialized line-graph-of-K_n verifier that works directly on edge sets.
//!
//! Two vertices are X-visible when some geodesic between them has no
//! interior vertex in X. A candidate set is checked against the pair family
//! its variant requires: pairs inside X (mutual), plus crossing pairs
//! (outer), plus pairs inside the complement (dual), or all pairs (total).

use crate::graph::{DistanceMatrix, Graph, INFINITY};
use crate::vset::VertexSet;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Mutual,
    Outer,
    Dual,
    Total,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Mutual, Variant::Outer, Variant::Dual, Variant::Total];

    /// Short name used in CLI flags and JSON ("mu", "outer", "dual", "total").
    pub fn name(self) -> &'static str {
        match self {
            Variant::Mutual => "mu",
            Variant::Outer => "outer",
            Variant::Dual => "dual",
            Variant::Total => "total",
        }
    }

    fn requires(self, class: PairClass) -> bool {
        match self {
            Variant::Mutual => class == PairClass::InIn,
            Variant::Outer => class != PairClass::OutOut,
            Variant::Dual => class != PairClass::Cross,
            Variant::Total => true,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mu" | "mutual" => Ok(Variant::Mutual),
            "outer" => Ok(Variant::Outer),
            "dual" => Ok(Variant::Dual),
            "total" => Ok(Variant::Total),
            other => Err(format!(
                "unknown variant {other:?} (expected mu|outer|dual|total)"
            )),
        }
    }
}

/// Which requirement class a pair belongs to, relative to X.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    InIn,
    Cross,
    OutOut,
}

impl PairClass {
    pub fn name(self) -> &'static str {
        match self {
            PairClass::InIn => "in-in",
            PairClass::Cross => "in-out",
            PairClass::OutOut => "out-out",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisibilityReport {
    pub valid: bool,
    pub failing_pair: Option<(usize, usize)>,
    pub pair_class: Option<PairClass>,
}

impl VisibilityReport {
    fn ok() -> Self {
        VisibilityReport {
            valid: true,
            failing_pair: None,
            pair_class: None,
        }
    }

    fn fail(u: usize, v: usize, class: PairClass) -> Self {
        VisibilityReport {
            valid: false,
            failing_pair: Some((u, v)),
            pair_class: Some(class),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "valid": self.valid,
            "failing_pair": self.failing_pair.map(|(u, v)| vec![u, v]),
            "pair_class": self.pair_class.map(PairClass::name),
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VisibilityError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("x_visible needs two distinct vertices")]
    SameVertex,
    #[error("vertices lie in different components")]
    SeparateComponents,
    #[error("set is over {set_n} vertices but the graph has {graph_n}")]
    WidthMismatch { set_n: usize, graph_n: usize },
    #[error("line-graph verifier needs n >= 3")]
    OrderTooSmall,
    #[error("edge ({0},{1}) is not an edge of K_n")]
    BadEdge(usize, usize),
    #[error("duplicate edge ({0},{1}) in F")]
    DuplicateEdge(usize, usize),
}

/// Are u and v X-visible? Checked entry point; rejects u = v and pairs in
/// different components.
pub fn x_visible(
    g: &Graph,
    d: &DistanceMatrix,
    x: &VertexSet,
    u: usize,
    v: usize,
) -> Result<bool, VisibilityError> {
    if u == v {
        return Err(VisibilityError::SameVertex);
    }
    if x.n() != g.n() {
        return Err(VisibilityError::WidthMismatch {
            set_n: x.n(),
            graph_n: g.n(),
        });
    }
    if d.get(u, v) == INFINITY {
        return Err(VisibilityError::SeparateComponents);
    }
    Ok(x_visible_fast(g, d, x, u, v))
}

/// Fast path: adjacent pairs are always visible (empty interior); a pair at
/// distance 2 is visible iff (N(u) ∩ N(v)) \ X is non-empty; longer pairs
/// fall back to the restricted BFS.
#[inline]
pub fn x_visible_fast(g: &Graph, d: &DistanceMatrix, x: &VertexSet, u: usize, v: usize) -> bool {
    match d.get(u, v) {
        1 => true,
        2 => g.neighbors(u).intersection_avoids(g.neighbors(v), x),
        _ => x_visible_bfs(g, d, x, u, v),
    }
}

/// Reference path: BFS restricted to (V \ X) ∪ {u, v}; visible iff the
/// restricted distance equals d(u, v).
pub fn x_visible_bfs(g: &Graph, d: &DistanceMatrix, x: &VertexSet, u: usize, v: usize) -> bool {
    let dist = d.get(u, v);
    if dist == INFINITY {
        return false;
    }
    if dist == 1 {
        return true;
    }
    let n = g.n();
    let mut allowed = x.complement();
    allowed.insert(u);
    allowed.insert(v);
    let mut seen = VertexSet::empty(n);
    seen.insert(u);
    let mut frontier = seen.clone();
    let mut level = 0u32;
    while !frontier.is_empty() && level < dist {
        level += 1;
        let mut next = VertexSet::empty(n);
        for w in frontier.iter() {
            next.union_with(g.neighbors(w));
        }
        next.intersect_with(&allowed);
        next.subtract(&seen);
        if next.contains(v) {
            return level == dist;
        }
        seen.union_with(&next);
        frontier = next;
    }
    false
}

/// The unordered pairs a variant requires, each exactly once, in
/// lexicographic order, tagged with their class.
pub fn required_pairs<'a>(
    variant: Variant,
    x: &'a VertexSet,
    n: usize,
) -> impl Iterator<Item = (usize, usize, PairClass)> + 'a {
    (0..n).flat_map(move |u| {
        (u + 1..n).filter_map(move |v| {
            let class = match (x.contains(u), x.contains(v)) {
                (true, true) => PairClass::InIn,
                (false, false) => PairClass::OutOut,
                _ => PairClass::Cross,
            };
            variant.requires(class).then_some((u, v, class))
        })
    })
}

/// Check whether X is a valid set for the variant. The first failing pair
/// (in lexicographic scan order) is reported, so failures are reproducible.
pub fn verify(
    g: &Graph,
    d: &DistanceMatrix,
    x: &VertexSet,
    variant: Variant,
) -> Result<VisibilityReport, VisibilityError> {
    if !g.is_connected() {
        return Err(VisibilityError::Disconnected);
    }
    if x.n() != g.n() {
        return Err(VisibilityError::WidthMismatch {
            set_n: x.n(),
            graph_n: g.n(),
        });
    }
    Ok(verify_unchecked(g, d, x, variant))
}

/// Hot-path verifier; assumes a connected graph and matching set width.
pub(crate) fn verify_unchecked(
    g: &Graph,
    d: &DistanceMatrix,
    x: &VertexSet,
    variant: Variant,
) -> VisibilityReport {
    for (u, v, class) in required_pairs(variant, x, g.n()) {
        if !x_visible_fast(g, d, x, u, v) {
            return VisibilityReport::fail(u, v, class);
        }
    }
    VisibilityReport::ok()
}

/// No two vertices of X are adjacent.
pub fn is_independent(g: &Graph, x: &VertexSet) -> bool {
    x.iter().all(|u| !g.neighbors(u).intersects(x))
}

/// Edges of K_n as (u, v) with u < v in lexicographic order; this is also
/// the vertex order of line_graph(complete(n)).
pub fn k_n_edges(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n.saturating_sub(1) * n / 2);
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

#[inline]
fn edge_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Variant verifier for S_F in L(K_n), evaluated directly on K_n without
/// building the line graph.
///
/// Vertices of L(K_n) sharing an endpoint are adjacent, and independent
/// edges are at distance 2 with common neighborhood exactly the four
/// crossing edges; so a required independent pair is visible iff one of its
/// four crossing edges lies outside F. Failing pairs are reported as
/// lexicographic edge indices (line-graph vertex indices).
pub fn verify_line_complete(
    n: usize,
    f: &[(usize, usize)],
    variant: Variant,
) -> Result<VisibilityReport, VisibilityError> {
    if n < 3 {
        return Err(VisibilityError::OrderTooSmall);
    }
    let m = n * (n - 1) / 2;
    let mut in_f = VertexSet::empty(m);
    for &(a, b) in f {
        if a == b || a >= n || b >= n {
            return Err(VisibilityError::BadEdge(a, b));
        }
        let idx = edge_index(n, a.min(b), a.max(b));
        if in_f.contains(idx) {
            return Err(VisibilityError::DuplicateEdge(a.min(b), a.max(b)));
        }
        in_f.insert(idx);
    }
    let edges = k_n_edges(n);
    for i in 0..m {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                continue; // incident edges are adjacent in L(K_n)
            }
            let class = match (in_f.contains(i), in_f.contains(j)) {
                (true, true) => PairClass::InIn,
                (false, false) => PairClass::OutOut,
                _ => PairClass::Cross,
            };
            if !variant.requires(class) {
                continue;
            }
            let crossing = [(a, c), (a, d), (b, c), (b, d)];
            let visible = crossing
                .iter()
                .any(|&(x, y)| !in_f.contains(edge_index(n, x.min(y), x.max(y))));
            if !visible {
                return Ok(VisibilityReport::fail(i, j, class));
            }
        }
    }
    Ok(VisibilityReport::ok())
}
