use super::{Limits, SolveResult};
use crate::error::{Error, Result};
use crate::model::{ElInstance, Labeling};

/// Exhaustive search over all list-respecting labelings in lexicographic
/// order of `(color of edge 0, color of edge 1, ...)` with weak first.
/// Branches that already violate the budget or an induced P3 are cut, which
/// does not change the first labeling found.
pub fn solve_oracle(inst: &ElInstance, limits: &Limits) -> Result<SolveResult> {
    let g = &inst.g;
    let m = g.m();
    let mut space: u128 = 1;
    for list in &inst.psi {
        space = space.saturating_mul(list.len() as u128 + 1);
    }
    if space > limits.max_enum {
        return Err(Error::ResourceLimit {
            what: "oracle labelings",
            needed: space,
            limit: limits.max_enum,
        });
    }

    // For every edge, the smaller-id edges it forms an induced P3 with.
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        for (s, t) in [(u, v), (v, u)] {
            for (&w, &f) in g.neighbors(s).iter().zip(g.incident_edges(s)) {
                if f < e && w != t && !g.has_edge(w, t) {
                    earlier[e].push(f);
                }
            }
        }
    }

    let mut st = Search {
        inst,
        earlier,
        color: vec![0; m],
        nodes: 0,
    };
    Ok(if st.dfs(0, 0) {
        SolveResult::yes(Labeling::new(st.color), st.nodes)
    } else {
        SolveResult::no(st.nodes)
    })
}

struct Search<'a> {
    inst: &'a ElInstance,
    earlier: Vec<Vec<usize>>,
    color: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, e: usize, weak: usize) -> bool {
        self.nodes += 1;
        if e == self.color.len() {
            return true;
        }
        if weak < self.inst.k {
            self.color[e] = 0;
            if self.dfs(e + 1, weak + 1) {
                return true;
            }
        }
        for i in 0..self.inst.psi[e].len() {
            let x = self.inst.psi[e][i];
            if self.earlier[e].iter().any(|&f| self.color[f] == x) {
                continue;
            }
            self.color[e] = x;
            if self.dfs(e + 1, weak) {
                return true;
            }
        }
        self.color[e] = 0;
        false
    }
}
