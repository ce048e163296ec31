//! Finite graphs and the complexes built from their matchings.

use serde::{Deserialize, Serialize};

use super::simplicial::{maximal_cliques, SimplicialComplex};
use crate::error::{Error, Result};

/// A simple graph on vertices `1..=n`. Loops are allowed and kept; parallel
/// edges are merged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > vertices {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        max: vertices,
                    });
                }
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        es.dedup();
        Ok(Graph {
            vertices,
            edges: es,
        })
    }

    /// The linear graph with `edges` edges on `edges + 1` vertices.
    pub fn path(edges: usize) -> Self {
        Graph::new(edges + 1, (1..=edges).map(|i| (i, i + 1))).expect("valid path")
    }

    /// The linear graph on `m` vertices.
    pub fn linear(m: usize) -> Self {
        Graph::path(m.saturating_sub(1))
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b)));
        Graph::new(n, edges).expect("valid complete graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn non_loop_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().filter(|(a, b)| a != b).collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Vertices are the non-loop edges, adjacent when they share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let es = self.non_loop_edges();
        let mut adj = Vec::new();
        for i in 0..es.len() {
            for j in i + 1..es.len() {
                if !disjoint(es[i], es[j]) {
                    adj.push((i + 1, j + 1));
                }
            }
        }
        Graph::new(es.len(), adj).expect("valid line graph")
    }
}

pub fn edge_label((a, b): (usize, usize)) -> String {
    format!("{a}-{b}")
}

fn disjoint(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

/// The complex of matchings: vertices are non-loop edges, faces are sets of
/// pairwise disjoint edges.
pub fn matching_complex(g: &Graph) -> SimplicialComplex {
    let es = g.non_loop_edges();
    let adj: Vec<Vec<bool>> = es
        .iter()
        .map(|&e| es.iter().map(|&f| e != f && disjoint(e, f)).collect())
        .collect();
    let labels = es.iter().copied().map(edge_label).collect();
    SimplicialComplex::new(labels, maximal_cliques(&adj)).expect("cliques index valid vertices")
}

/// The complex of independent vertex sets, with the given vertex labels.
pub fn independence_complex(g: &Graph, labels: Vec<String>) -> Result<SimplicialComplex> {
    let n = g.vertex_count();
    if labels.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "{} labels for {n} vertices",
            labels.len()
        )));
    }
    let adj: Vec<Vec<bool>> = (1..=n)
        .map(|a| (1..=n).map(|b| a != b && !g.has_edge(a, b)).collect())
        .collect();
    // a looped vertex is never independent
    let keep: Vec<usize> = (0..n).filter(|&v| !g.has_edge(v + 1, v + 1)).collect();
    let sub: Vec<Vec<bool>> = keep
        .iter()
        .map(|&a| keep.iter().map(|&b| adj[a][b]).collect())
        .collect();
    let kept = keep.iter().map(|&v| labels[v].clone()).collect();
    SimplicialComplex::new(kept, maximal_cliques(&sub))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_matchings() {
        let k = matching_complex(&Graph::path(4));
        assert_eq!(k.vertex_count(), 4);
        let mut edges = k.faces(1);
        edges.sort();
        assert_eq!(edges, vec![vec![0, 2], vec![0, 3], vec![1, 3]]);
        assert!(k.faces(2).is_empty());
    }

    #[test]
    fn k4_matchings() {
        let k = matching_complex(&Graph::complete(4));
        assert_eq!(k.vertex_count(), 6);
        assert_eq!(k.faces(1).len(), 3);
        assert!(!k.is_connected());
    }

    #[test]
    fn edgeless() {
        let k = matching_complex(&Graph::new(3, []).unwrap());
        assert_eq!(k.vertex_count(), 0);
    }

    #[test]
    fn loops_are_discarded() {
        let g = Graph::new(3, [(1, 1), (1, 2), (2, 3), (3, 3)]).unwrap();
        assert_eq!(matching_complex(&g), matching_complex(&Graph::path(2)));
    }

    #[test]
    fn line_graph_cross_check() {
        for g in [
            Graph::path(6),
            Graph::complete(5),
            Graph::new(5, [(1, 2), (2, 3), (3, 1), (4, 5)]).unwrap(),
        ] {
            let labels = g.non_loop_edges().into_iter().map(edge_label).collect();
            let ind = independence_complex(&g.line_graph(), labels).unwrap();
            assert_eq!(ind, matching_complex(&g));
        }
    }
}
