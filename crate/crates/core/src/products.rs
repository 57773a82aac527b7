//! Cartesian and direct products, and the line graph with its edge labeling.

use crate::generators::GenError;
use crate::graph::Graph;

/// Vertex (g, h) of a product maps to index g * n(H) + h (left operand major).
#[inline]
fn pair_index(g: usize, h: usize, nh: usize) -> usize {
    g * nh + h
}

fn product_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let mut labels = Vec::with_capacity(g.n() * h.n());
    for a in 0..g.n() {
        for b in 0..h.n() {
            labels.push(format!("({},{})", g.display_label(a), h.display_label(b)));
        }
    }
    labels
}

/// Cartesian product G □ H: (g,h) ~ (g',h') iff g = g' and hh' ∈ E(H), or
/// h = h' and gg' ∈ E(G).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GenError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GenError::EmptyFactor);
    }
    let nh = h.n();
    let mut out = Graph::edgeless(g.n() * h.n());
    for a in 0..g.n() {
        for (u, v) in h.edges() {
            out.add_edge(pair_index(a, u, nh), pair_index(a, v, nh));
        }
    }
    for b in 0..h.n() {
        for (u, v) in g.edges() {
            out.add_edge(pair_index(u, b, nh), pair_index(v, b, nh));
        }
    }
    Ok(out.with_labels(product_labels(g, h))?)
}

/// Direct product G × H: (g,h) ~ (g',h') iff gg' ∈ E(G) and hh' ∈ E(H).
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph, GenError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GenError::EmptyFactor);
    }
    let nh = h.n();
    let mut out = Graph::edgeless(g.n() * h.n());
    for (a, b) in g.edges() {
        for (u, v) in h.edges() {
            out.add_edge(pair_index(a, u, nh), pair_index(b, v, nh));
            out.add_edge(pair_index(a, v, nh), pair_index(b, u, nh));
        }
    }
    Ok(out.with_labels(product_labels(g, h))?)
}

/// Bijection between the vertices of L(G) and the edges of G.
///
/// Edges are listed as (u, v) with u < v in lexicographic order, which is
/// also the vertex order of the line graph.
#[derive(Clone, Debug)]
pub struct EdgeLabeling {
    edges: Vec<(usize, usize)>,
}

impl EdgeLabeling {
    pub fn edge(&self, line_vertex: usize) -> (usize, usize) {
        self.edges[line_vertex]
    }

    /// Line-graph vertex carrying base edge {u, v}, if it is one.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Line graph L(G): one vertex per edge of G, adjacent iff the edges are
/// incident in G. Vertices are labeled "u-v" after their base edge.
pub fn line_graph(g: &Graph) -> Result<(Graph, EdgeLabeling), GenError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(GenError::EdgelessLineGraph);
    }
    let m = edges.len();
    let mut out = Graph::edgeless(m);
    for i in 0..m {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.add_edge(i, j);
            }
        }
    }
    let labels = edges
        .iter()
        .map(|&(u, v)| format!("{}-{}", g.display_label(u), g.display_label(v)))
        .collect();
    let out = out.with_labels(labels)?;
    Ok((out, EdgeLabeling { edges }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite};

    #[test]
    fn cartesian_of_k2_k2_is_c4() {
        let k2 = complete(2);
        let g = cartesian_product(&k2, &k2).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.girth(), Some(4));
        assert_eq!(g.label(1), Some("(0,1)"));
    }

    #[test]
    fn cartesian_degrees_and_counts() {
        let g = cartesian_product(&complete(3), &complete(4)).unwrap();
        assert_eq!(g.n(), 12);
        assert!((0..12).all(|v| g.degree(v) == 2 + 3));
        // m(G □ H) = n(G) m(H) + n(H) m(G)
        assert_eq!(g.m(), 3 * 6 + 4 * 3);
        assert_eq!(
            cartesian_product(&complete(3), &complete(3)).unwrap().diameter(),
            Some(2)
        );
    }

    #[test]
    fn direct_product_shape() {
        let k2 = complete(2);
        let g = direct_product(&k2, &k2).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 2);
        assert!(!g.is_connected()); // two disjoint edges
        let g = direct_product(&complete(5), &complete(5)).unwrap();
        assert_eq!(g.n(), 25);
        assert!((0..25).all(|v| g.degree(v) == 16));
        // m(G × H) = 2 m(G) m(H)
        assert_eq!(g.m(), 2 * 10 * 10);
        assert_eq!(g.diameter(), Some(2)); // BFS oracle
    }

    #[test]
    fn line_graph_of_k3_is_k3() {
        let (l, lab) = line_graph(&complete(3)).unwrap();
        assert_eq!(l.edges(), complete(3).edges());
        assert_eq!(lab.edge(0), (0, 1));
        assert_eq!(lab.index_of(2, 1), Some(2));
        assert_eq!(lab.index_of(0, 2), Some(1));
    }

    #[test]
    fn line_graph_of_k4() {
        let (l, _) = line_graph(&complete(4)).unwrap();
        assert_eq!(l.n(), 6);
        assert!((0..6).all(|v| l.degree(v) == 4));
        assert_eq!(l.diameter(), Some(2));
    }

    #[test]
    fn line_graph_regularity_of_complete() {
        for n in 2..=7 {
            let (l, _) = line_graph(&complete(n)).unwrap();
            assert_eq!(l.n(), n * (n - 1) / 2);
            assert!((0..l.n()).all(|v| l.degree(v) == 2 * n - 4));
        }
    }

    #[test]
    fn line_graph_of_k33_matches_k3_square_k3() {
        let (l, _) = line_graph(&complete_bipartite(3, 3)).unwrap();
        let c = cartesian_product(&complete(3), &complete(3)).unwrap();
        assert_eq!(l.n(), c.n());
        assert_eq!(l.m(), c.m());
        let mut dl: Vec<usize> = (0..l.n()).map(|v| l.degree(v)).collect();
        let mut dc: Vec<usize> = (0..c.n()).map(|v| c.degree(v)).collect();
        dl.sort_unstable();
        dc.sort_unstable();
        assert_eq!(dl, dc);
        assert_eq!(
            l.distance_matrix().distance_distribution(),
            c.distance_matrix().distance_distribution()
        );
    }

    #[test]
    fn line_graph_rejects_edgeless() {
        assert!(line_graph(&Graph::edgeless(3)).is_err());
    }

    #[test]
    fn edge_labeling_is_bijective_onto_edges() {
        let g = petersen_like();
        let (l, lab) = line_graph(&g).unwrap();
        assert_eq!(lab.len(), g.m());
        assert_eq!(l.n(), g.m());
        for i in 0..lab.len() {
            let (u, v) = lab.edge(i);
            assert!(g.has_edge(u, v));
            assert_eq!(lab.index_of(u, v), Some(i));
        }
    }

    fn petersen_like() -> Graph {
        crate::generators::petersen()
    }
}
