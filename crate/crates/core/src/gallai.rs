//! Gallai graph, exact minimum vertex cover and the parameter `k1`.

use crate::graph::{induced_p3s, Graph};

/// Graph on the edges of a source graph; two vertices are adjacent iff the
/// corresponding edges form an induced P3. Vertex ids equal source edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiGraph {
    pub base: Graph,
    pub to_edge: Vec<usize>,
    pub from_edge: Vec<usize>,
}

impl GallaiGraph {
    pub fn n(&self) -> usize {
        self.base.n()
    }
}

pub fn gallai_graph(g: &Graph) -> GallaiGraph {
    let base = Graph::new(g.m(), &induced_p3s(g)).expect("P3 pairs are unique");
    let ids: Vec<usize> = (0..g.m()).collect();
    GallaiGraph {
        base,
        to_edge: ids.clone(),
        from_edge: ids,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K1Result {
    pub k1: usize,
    /// Sorted ids of the lexicographically smallest minimum cover.
    pub cover: Vec<usize>,
    pub independent: Vec<usize>,
}

pub fn k1(g: &Graph) -> K1Result {
    let gg = gallai_graph(g);
    let cover = min_vertex_cover(&gg.base, None).expect("no bound given");
    let mut in_cover = vec![false; gg.n()];
    for &v in &cover {
        in_cover[v] = true;
    }
    let independent = (0..gg.n()).filter(|&v| !in_cover[v]).collect();
    K1Result {
        k1: cover.len(),
        cover,
        independent,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    In,
    Out,
}

/// Minimum vertex cover, sorted. Among all minimum covers the
/// lexicographically smallest id set is returned. With `upper_bound`, returns
/// `None` when every cover is larger than the bound.
pub fn min_vertex_cover(g: &Graph, upper_bound: Option<usize>) -> Option<Vec<usize>> {
    let n = g.n();
    let limit = upper_bound.unwrap_or(n).min(n);
    let mut st = vec![Slot::Free; n];
    let opt = min_size(g, &st, limit)?;
    // Greedily fix vertices in id order, preferring inclusion, while a cover
    // of optimum size remains reachable.
    for v in 0..n {
        if st[v] != Slot::Free {
            continue;
        }
        st[v] = Slot::In;
        if min_size(g, &st, opt).is_none() {
            st[v] = Slot::Out;
            for &w in g.neighbors(v) {
                st[w] = Slot::In;
            }
        }
    }
    Some((0..n).filter(|&v| st[v] == Slot::In).collect())
}

/// Size of a minimum cover consistent with the fixed slots, if one of size
/// at most `limit` exists. `Out` slots must already have all neighbours `In`
/// or `Free`; free neighbours of an `Out` vertex are forced in here.
fn min_size(g: &Graph, st: &[Slot], limit: usize) -> Option<usize> {
    let mut st = st.to_vec();
    for v in 0..g.n() {
        if st[v] == Slot::Out {
            for &w in g.neighbors(v) {
                match st[w] {
                    Slot::Out => return None,
                    _ => st[w] = Slot::In,
                }
            }
        }
    }
    let mut best = limit + 1;
    search(g, st, &mut best);
    (best <= limit).then_some(best)
}

/// Branch and bound; lowers `best` to the size of any strictly smaller cover.
fn search(g: &Graph, mut st: Vec<Slot>, best: &mut usize) {
    // Degree-0 / degree-1 reductions over the residual graph of free vertices.
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            if st[v] != Slot::Free {
                continue;
            }
            let mut free_nb = g.neighbors(v).iter().filter(|&&w| st[w] == Slot::Free);
            match (free_nb.next(), free_nb.next()) {
                (None, _) => {
                    st[v] = Slot::Out;
                    changed = true;
                }
                (Some(&u), None) => {
                    st[v] = Slot::Out;
                    st[u] = Slot::In;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let taken = st.iter().filter(|&&s| s == Slot::In).count();
    if taken >= *best {
        return;
    }

    let mut branch = None;
    let mut max_deg = 0;
    let mut residual_edges = 0;
    for v in 0..g.n() {
        if st[v] != Slot::Free {
            continue;
        }
        let d = g.neighbors(v).iter().filter(|&&w| st[w] == Slot::Free).count();
        residual_edges += d;
        if d > max_deg {
            max_deg = d;
            branch = Some(v);
        }
    }
    let Some(v) = branch else {
        *best = taken;
        return;
    };
    residual_edges /= 2;

    // Lower bounds: a greedy maximal matching, and edges / max degree.
    let mut matched = vec![false; g.n()];
    let mut matching = 0;
    for u in 0..g.n() {
        if st[u] != Slot::Free || matched[u] {
            continue;
        }
        if let Some(&w) = g
            .neighbors(u)
            .iter()
            .find(|&&w| st[w] == Slot::Free && !matched[w])
        {
            matched[u] = true;
            matched[w] = true;
            matching += 1;
        }
    }
    let lb = matching.max(residual_edges.div_ceil(max_deg));
    if taken + lb >= *best {
        return;
    }

    let mut with_v = st.clone();
    with_v[v] = Slot::In;
    search(g, with_v, best);

    if taken + max_deg < *best {
        st[v] = Slot::Out;
        for &w in g.neighbors(v) {
            if st[w] == Slot::Free {
                st[w] = Slot::In;
            }
        }
        search(g, st, best);
    }
}
