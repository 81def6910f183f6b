use super::{Limits, SolveResult};
use crate::error::{Error, Result};
use crate::gallai::{gallai_graph, min_vertex_cover};
use crate::model::{ElInstance, Labeling};

/// Branching over a minimum vertex cover `S` of the Gallai graph.
///
/// Each step branches on the unassigned cover vertex with the fewest
/// available list colors (lowest id on ties), trying those colors in
/// increasing order and 0 last. Once `S` is fully assigned, every vertex
/// outside `S` takes the smallest list color unused by its cover neighbours,
/// or 0 if none is left. Subtrees whose forced zeros already exceed `k` are
/// skipped; this never removes a successful assignment, so the answer is the
/// same as for full enumeration of the assignments of `S`.
pub fn solve_fpt(inst: &ElInstance, limits: &Limits) -> Result<SolveResult> {
    let m = inst.g.m();
    let c = inst.c;
    let gg = gallai_graph(&inst.g);
    let cover = min_vertex_cover(&gg.base, None).expect("no bound given");
    let mut in_cover = vec![false; m];
    for &w in &cover {
        in_cover[w] = true;
    }
    let lists: Vec<&[usize]> = (0..m).map(|w| inst.psi[gg.to_edge[w]].as_slice()).collect();
    let mut listed = vec![false; m * (c + 1)];
    for (w, list) in lists.iter().enumerate() {
        for &x in list.iter() {
            listed[w * (c + 1) + x] = true;
        }
    }
    let avail: Vec<usize> = lists.iter().map(|l| l.len()).collect();
    let forced = avail.iter().filter(|&&a| a == 0).count();

    let mut st = Search {
        gg_adj: (0..m).map(|w| gg.base.neighbors(w).to_vec()).collect(),
        cover,
        lists,
        listed,
        stride: c + 1,
        blocked: vec![0; m * (c + 1)],
        avail,
        assigned: vec![false; m],
        chi: vec![0; m],
        forced,
        k: inst.k,
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    let found = st.dfs(0, 0)?;
    if !found {
        return Ok(SolveResult::no(st.nodes));
    }
    // Greedy extension over the independent set.
    for w in 0..m {
        if !in_cover[w] {
            st.chi[w] = st.lists[w]
                .iter()
                .copied()
                .find(|&x| st.blocked[w * st.stride + x] == 0)
                .unwrap_or(0);
        }
    }
    let mut color_of = vec![0; m];
    for w in 0..m {
        color_of[gg.to_edge[w]] = st.chi[w];
    }
    Ok(SolveResult::yes(Labeling::new(color_of), st.nodes))
}

struct Search<'a> {
    gg_adj: Vec<Vec<usize>>,
    cover: Vec<usize>,
    lists: Vec<&'a [usize]>,
    listed: Vec<bool>,
    stride: usize,
    /// `blocked[w * stride + x]`: assigned neighbours of `w` with color `x`.
    blocked: Vec<u32>,
    /// Listed colors of `w` not blocked.
    avail: Vec<usize>,
    assigned: Vec<bool>,
    chi: Vec<usize>,
    /// Unassigned vertices with no available color; each ends up 0.
    forced: usize,
    k: usize,
    nodes: u64,
    max_nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, depth: usize, zeros: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::ResourceLimit {
                what: "fpt search nodes",
                needed: self.nodes as u128,
                limit: self.max_nodes as u128,
            });
        }
        if zeros + self.forced > self.k {
            return Ok(false);
        }
        if depth == self.cover.len() {
            return Ok(true);
        }
        let w = self.pick();
        self.assigned[w] = true;
        let was_forced = self.avail[w] == 0;
        if was_forced {
            self.forced -= 1;
        }

        for i in 0..self.lists[w].len() {
            let x = self.lists[w][i];
            if self.blocked[w * self.stride + x] != 0 {
                continue;
            }
            self.chi[w] = x;
            self.block(w, x);
            if self.dfs(depth + 1, zeros)? {
                return Ok(true);
            }
            self.unblock(w, x);
        }
        self.chi[w] = 0;
        if self.dfs(depth + 1, zeros + 1)? {
            return Ok(true);
        }

        if was_forced {
            self.forced += 1;
        }
        self.assigned[w] = false;
        Ok(false)
    }

    /// Unassigned cover vertex with the fewest available colors.
    fn pick(&self) -> usize {
        self.cover
            .iter()
            .copied()
            .filter(|&w| !self.assigned[w])
            .min_by_key(|&w| (self.avail[w], w))
            .expect("depth below cover size")
    }

    fn block(&mut self, w: usize, x: usize) {
        for j in 0..self.gg_adj[w].len() {
            let u = self.gg_adj[w][j];
            let slot = u * self.stride + x;
            self.blocked[slot] += 1;
            if self.blocked[slot] == 1 && self.listed[slot] {
                self.avail[u] -= 1;
                if self.avail[u] == 0 && !self.assigned[u] {
                    self.forced += 1;
                }
            }
        }
    }

    fn unblock(&mut self, w: usize, x: usize) {
        for j in 0..self.gg_adj[w].len() {
            let u = self.gg_adj[w][j];
            let slot = u * self.stride + x;
            self.blocked[slot] -= 1;
            if self.blocked[slot] == 0 && self.listed[slot] {
                if self.avail[u] == 0 && !self.assigned[u] {
                    self.forced -= 1;
                }
                self.avail[u] += 1;
            }
        }
    }
}
