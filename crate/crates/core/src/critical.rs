//! Critical-clique decomposition: vertices grouped by identical closed
//! neighbourhoods, the quotient graph on those groups, and the open/closed
//! classification used by the kernel.

use std::collections::HashMap;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalCliqueDecomposition {
    /// Cliques ordered by their minimum member; members sorted.
    pub cliques: Vec<Vec<usize>>,
    pub clique_of: Vec<usize>,
    /// Graph on clique indices; `{i, j}` is an edge iff the cliques are
    /// completely joined in the source graph.
    pub cc_graph: Graph,
    /// `closed[i]` iff the union of neighbouring cliques of `i` is a clique.
    pub closed: Vec<bool>,
}

impl CriticalCliqueDecomposition {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Vertices of all cliques adjacent to clique `i` in the clique graph.
    pub fn neighborhood(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .cc_graph
            .neighbors(i)
            .iter()
            .flat_map(|&j| self.cliques[j].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Vertices of all cliques at distance exactly two from clique `i`.
    pub fn second_neighborhood(&self, i: usize) -> Vec<usize> {
        let p = self.cc_graph.n();
        let mut dist = vec![usize::MAX; p];
        dist[i] = 0;
        for &j in self.cc_graph.neighbors(i) {
            dist[j] = 1;
        }
        let mut far = Vec::new();
        for &j in self.cc_graph.neighbors(i) {
            for &l in self.cc_graph.neighbors(j) {
                if dist[l] == usize::MAX {
                    dist[l] = 2;
                    far.push(l);
                }
            }
        }
        let mut out: Vec<usize> = far
            .into_iter()
            .flat_map(|j| self.cliques[j].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

pub fn critical_cliques(g: &Graph) -> CriticalCliqueDecomposition {
    let n = g.n();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::with_capacity(n);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut clique_of = vec![0; n];
    // Visiting vertices in increasing order both numbers the cliques by
    // minimum member and keeps members sorted.
    for v in 0..n {
        let sig = g.closed_neighborhood(v);
        let id = *index.entry(sig).or_insert_with(|| {
            cliques.push(Vec::new());
            cliques.len() - 1
        });
        cliques[id].push(v);
        clique_of[v] = id;
    }

    let mut cc_pairs = Vec::new();
    for (i, clique) in cliques.iter().enumerate() {
        let rep = clique[0];
        let mut seen: Vec<usize> = g
            .neighbors(rep)
            .iter()
            .map(|&w| clique_of[w])
            .filter(|&j| j > i)
            .collect();
        seen.sort_unstable();
        seen.dedup();
        cc_pairs.extend(seen.into_iter().map(|j| (i, j)));
    }
    let cc_graph = Graph::new(cliques.len(), &cc_pairs).expect("clique graph pairs are unique");

    let closed = (0..cliques.len())
        .map(|i| {
            let nb: Vec<usize> = cc_graph.neighbors(i).to_vec();
            // Each neighbouring critical clique is itself a clique, so the
            // union is a clique iff the neighbouring cliques are pairwise joined.
            nb.iter().enumerate().all(|(a, &x)| {
                nb[a + 1..].iter().all(|&y| cc_graph.has_edge(x, y))
            })
        })
        .collect();

    CriticalCliqueDecomposition {
        cliques,
        clique_of,
        cc_graph,
        closed,
    }
}
