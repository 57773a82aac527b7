//! Cograph recognition, the (K1 ∪ K_t) + H decomposition, enabling-vertex
//! detection, and the closed-form visibility numbers the decomposition gives.

use crate::graph::Graph;
use crate::solver::{max_visibility, SolveError, SolveOptions};
use crate::visibility::Variant;
use crate::vset::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CographError {
    #[error("graph is not a cograph")]
    NotCograph,
    #[error("graph must be connected")]
    Disconnected,
    #[error("solver: {0}")]
    Solve(#[from] SolveError),
}

/// True iff the graph has no induced path on four vertices. Quadruple scan;
/// a 3-edge 4-set is a P4 exactly when its degree multiset is {1,1,2,2}.
pub fn is_cograph(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let vs = [a, b, c, d];
                    let mut degs = [0usize; 4];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(vs[i], vs[j]) {
                                degs[i] += 1;
                                degs[j] += 1;
                                edges += 1;
                            }
                        }
                    }
                    if edges == 3 {
                        degs.sort_unstable();
                        if degs == [1, 1, 2, 2] {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Smallest vertex v adjacent to every u with deg_{G-v}(u) < n(G) - 2, if any.
pub fn find_enabling_vertex(g: &Graph) -> Option<usize> {
    let n = g.n();
    (0..n).find(|&v| {
        (0..n).all(|u| {
            if u == v {
                return true;
            }
            let deg_minus_v = g.degree(u) - g.has_edge(u, v) as usize;
            deg_minus_v >= n.saturating_sub(2) || g.has_edge(u, v)
        })
    })
}

/// The structural split G = (K1 ∪ K_t) + H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigMuDecomposition {
    /// The K1 vertex (the enabling vertex).
    pub v: usize,
    /// Size of the clique part K_t (may be 0).
    pub t: usize,
    /// Vertex set of H = N(v).
    pub h_vertices: VertexSet,
}

/// Decompose a connected graph as (K1 ∪ K_t) + H with v the enabling
/// vertex, H = N(v), and K_t the non-neighbors of v; `None` when no
/// enabling vertex exists. The clique and join structure of K_t follows
/// from the enabling condition and is asserted.
pub fn big_mu_decompose(g: &Graph) -> Option<BigMuDecomposition> {
    let v = find_enabling_vertex(g)?;
    let n = g.n();
    let h_vertices = g.neighbors(v).clone();
    let mut kt = VertexSet::full(n);
    kt.subtract(&h_vertices);
    kt.remove(v);
    for a in kt.iter() {
        for b in kt.iter() {
            debug_assert!(a == b || g.has_edge(a, b), "K_t part must be a clique");
        }
        for h in h_vertices.iter() {
            debug_assert!(g.has_edge(a, h), "K_t must be fully joined to H");
        }
    }
    Some(BigMuDecomposition {
        v,
        t: kt.len(),
        h_vertices,
    })
}

/// The four visibility numbers, in the (mu_t, mu_o, mu_d, mu) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VisibilityNumbers {
    pub mu_t: usize,
    pub mu_o: usize,
    pub mu_d: usize,
    pub mu: usize,
}

impl VisibilityNumbers {
    pub fn get(&self, variant: Variant) -> usize {
        match variant {
            Variant::Total => self.mu_t,
            Variant::Outer => self.mu_o,
            Variant::Dual => self.mu_d,
            Variant::Mutual => self.mu,
        }
    }
}

/// Closed-form visibility numbers of a connected cograph.
///
/// Big-mu without a universal vertex gives (n-2, n-2, n-1, n-1); otherwise
/// all four coincide and the common value comes from the exact solver.
pub fn cograph_visibility_numbers(g: &Graph) -> Result<VisibilityNumbers, CographError> {
    if !g.is_connected() {
        return Err(CographError::Disconnected);
    }
    if !is_cograph(g) {
        return Err(CographError::NotCograph);
    }
    let n = g.n();
    if big_mu_decompose(g).is_some() && !g.has_universal_vertex() {
        Ok(VisibilityNumbers {
            mu_t: n - 2,
            mu_o: n - 2,
            mu_d: n - 1,
            mu: n - 1,
        })
    } else {
        let common = max_visibility(g, &SolveOptions::new(Variant::Total))?.value;
        Ok(VisibilityNumbers {
            mu_t: common,
            mu_o: common,
            mu_d: common,
            mu: common,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, disjoint_union, join};

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn cograph_recognition() {
        assert!(is_cograph(&cycle(4)));
        assert!(!is_cograph(&p4()));
        assert!(!is_cograph(&cycle(5)));
        assert!(is_cograph(&complete(5)));
        assert!(is_cograph(&join(&complete(1), &cycle(4))));
    }

    #[test]
    fn enabling_vertices() {
        // In C4 every vertex is enabling.
        assert_eq!(find_enabling_vertex(&cycle(4)), Some(0));
        // In C5 no vertex is enabling.
        assert_eq!(find_enabling_vertex(&cycle(5)), None);
        // In K_n every vertex is enabling (vacuously).
        assert_eq!(find_enabling_vertex(&complete(4)), Some(0));
    }

    #[test]
    fn decompose_c4() {
        let dec = big_mu_decompose(&cycle(4)).unwrap();
        assert_eq!(dec.t, 1);
        assert_eq!(dec.h_vertices.len(), 2);
        assert!(big_mu_decompose(&cycle(5)).is_none());
        let dec = big_mu_decompose(&complete(5)).unwrap();
        // K_n decomposes with H a clique.
        assert_eq!(dec.h_vertices.len(), 4);
        assert_eq!(dec.t, 0);
    }

    #[test]
    fn numbers_on_c4() {
        let nums = cograph_visibility_numbers(&cycle(4)).unwrap();
        assert_eq!(
            nums,
            VisibilityNumbers {
                mu_t: 2,
                mu_o: 2,
                mu_d: 3,
                mu: 3
            }
        );
    }

    #[test]
    fn numbers_on_clique_and_universal_join() {
        let nums = cograph_visibility_numbers(&complete(5)).unwrap();
        assert_eq!(nums.mu, 5);
        assert_eq!(nums.mu_t, 5);
        // join(K1, C4) has a universal vertex: the mu = mu_t regime.
        let g = join(&complete(1), &cycle(4));
        let nums = cograph_visibility_numbers(&g).unwrap();
        assert_eq!(nums.mu, nums.mu_t);
        assert_eq!(nums.mu_o, nums.mu_d);
    }

    #[test]
    fn numbers_reject_bad_input() {
        assert_eq!(
            cograph_visibility_numbers(&cycle(5)).unwrap_err(),
            CographError::NotCograph
        );
        let g = disjoint_union(&complete(2), &complete(2));
        assert_eq!(
            cograph_visibility_numbers(&g).unwrap_err(),
            CographError::Disconnected
        );
    }
}
