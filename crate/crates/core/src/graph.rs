//! Undirected simple graphs with canonical edge ids.
//!
//! Edges are stored as `(min, max)` pairs sorted lexicographically; the
//! position of a pair in that order is its edge id. Every derived object in
//! the crate (Gallai graphs, labelings, list assignments) is indexed by these
//! ids, so two graphs built from the same pair set always agree on them.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// `adj_edge[v][i]` is the edge id of `{v, adj[v][i]}`.
    adj_edge: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Rejects self-loops, out-of-range
    /// endpoints and duplicate pairs (in either orientation).
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::validation(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::validation(format!("self-loop at vertex {u}")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::validation(format!(
                "duplicate edge ({},{})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted_unique(n, edges))
    }

    /// Same as [`Graph::new`] but silently drops repeated pairs.
    pub fn new_dedup(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        canon.sort_unstable();
        canon.dedup();
        Self::new(n, &canon)
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut adj_edge = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj_edge[u].push(id);
            adj[v].push(u);
            adj_edge[v].push(id);
        }
        // Edges are visited in sorted order, so for each u the larger
        // neighbours arrive sorted; smaller ones arrive sorted too but are
        // interleaved, hence the explicit sort.
        for v in 0..n {
            let mut pairs: Vec<(usize, usize)> = adj[v]
                .iter()
                .copied()
                .zip(adj_edge[v].iter().copied())
                .collect();
            pairs.sort_unstable();
            adj[v] = pairs.iter().map(|p| p.0).collect();
            adj_edge[v] = pairs.iter().map(|p| p.1).collect();
        }
        Graph {
            n,
            edges,
            adj,
            adj_edge,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_sorted_unique(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_unique(n, edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut pairs: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        pairs.push((0, n - 1));
        Self::new(n, &pairs).expect("cycle is simple")
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_sorted_unique(leaves + 1, edges)
    }

    /// Graph on `n` vertices whose edge set is selected by the bits of
    /// `mask` over the pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        Self::from_sorted_unique(n, edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Sorted open neighbourhood.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, parallel to [`Graph::neighbors`].
    #[inline]
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adj_edge[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a]
            .binary_search(&b)
            .ok()
            .map(|i| self.adj_edge[a][i])
    }

    /// Sorted closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| self.has_edge(u, v))
        })
    }

    /// Subgraph induced by the vertices with `keep[v] == true`, renumbered
    /// in increasing order. Returns the graph and the old-to-new id map.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if keep[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        // Renumbering is monotone, so the filtered list stays sorted.
        (Self::from_sorted_unique(next, edges), map)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }
}

/// All unordered pairs of edge ids `(e1, e2)`, `e1 < e2`, whose edges form an
/// induced P3: they share an endpoint and their other endpoints are not
/// adjacent. Sorted lexicographically.
pub fn induced_p3s(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        let ids = g.incident_edges(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if !g.has_edge(nb[i], nb[j]) {
                    let (a, b) = (ids[i], ids[j]);
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    out.sort_unstable();
    out
}
